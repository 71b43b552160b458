use crate::field::Fp;
use crate::matrix::Matrix;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A bounded, finite-type, non-negatively graded chain complex over `F_p`.
///
/// `dims[n]` is the dimension in homological degree `n` (trailing zeros are
/// trimmed, so equality of the struct is equality of complexes), and
/// `diffs[n]` is the differential `d_n : X_n -> X_{n-1}` as a
/// `dims[n-1] x dims[n]` matrix; `d_0` maps into the zero space.
/// `d_n ∘ d_{n+1} = 0` is validated on construction.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainComplex {
    fp: Fp,
    dims: Vec<usize>,
    diffs: Vec<Matrix>,
}

impl std::fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ChainComplex(p={}, dims={:?})", self.fp.p(), self.dims)
    }
}

impl ChainComplex {
    pub fn new(fp: Fp, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<ChainComplex> {
        if diffs.len() != dims.len() {
            return Err(Error::dim("differential count", dims.len(), diffs.len()));
        }
        for (n, d) in diffs.iter().enumerate() {
            let target = if n == 0 { 0 } else { dims[n - 1] };
            if d.rows() != target || d.cols() != dims[n] {
                return Err(Error::dim(
                    "differential shape",
                    format!("{}x{}", target, dims[n]),
                    format!("{}x{}", d.rows(), d.cols()),
                ));
            }
            if d.fp() != fp {
                return Err(Error::FieldMismatch);
            }
        }
        for n in 1..diffs.len() {
            if !diffs[n - 1].mul(&diffs[n]).is_zero() {
                return Err(Error::DifferentialSquare { degree: n });
            }
        }
        let mut c = ChainComplex { fp, dims, diffs };
        c.trim();
        Ok(c)
    }

    fn trim(&mut self) {
        while let Some(&0) = self.dims.last() {
            self.dims.pop();
            self.diffs.pop();
        }
    }

    /// The zero complex (initial and terminal object).
    pub fn zero(fp: Fp) -> ChainComplex {
        ChainComplex { fp, dims: Vec::new(), diffs: Vec::new() }
    }

    /// The monoidal unit: one generator in degree 0.
    pub fn unit(fp: Fp) -> ChainComplex {
        ChainComplex::sphere(fp, 0)
    }

    /// One generator in degree `n`, zero differential.
    pub fn sphere(fp: Fp, n: usize) -> ChainComplex {
        let mut dims = vec![0; n + 1];
        dims[n] = 1;
        let diffs = (0..=n)
            .map(|k| Matrix::zeros(fp, if k == 0 { 0 } else { dims[k - 1] }, dims[k]))
            .collect();
        ChainComplex { fp, dims, diffs }
    }

    /// Acyclic two-term complex `F_p -> F_p` in degrees `n, n-1` (`n >= 1`).
    pub fn disk(fp: Fp, n: usize) -> ChainComplex {
        assert!(n >= 1, "disk needs degree >= 1");
        let mut dims = vec![0; n + 1];
        dims[n] = 1;
        dims[n - 1] = 1;
        let mut diffs: Vec<Matrix> = (0..=n)
            .map(|k| Matrix::zeros(fp, if k == 0 { 0 } else { dims[k - 1] }, dims[k]))
            .collect();
        diffs[n] = Matrix::identity(fp, 1);
        ChainComplex { fp, dims, diffs }
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }

    /// Dimension in degree `n` (zero beyond the stored range).
    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Largest degree with a stored (possibly zero) entry; 0 for the zero complex.
    pub fn top_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn is_zero_complex(&self) -> bool {
        self.dims.is_empty()
    }

    /// The differential `d_n`, materialized as a zero matrix beyond the
    /// stored range.
    pub fn diff(&self, n: usize) -> Matrix {
        if n < self.diffs.len() {
            self.diffs[n].clone()
        } else {
            let target = if n == 0 { 0 } else { self.dim(n - 1) };
            Matrix::zeros(self.fp, target, self.dim(n))
        }
    }

    /// Dimension of `H_n = ker d_n / im d_{n+1}`.
    pub fn homology(&self, n: usize) -> usize {
        if self.dim(n) == 0 {
            return 0;
        }
        let cycles = self.diff(n).kernel_basis().len();
        let boundaries = self.diff(n + 1).rank();
        cycles - boundaries
    }

    /// A basis of the cycle space `Z_n` as column vectors.
    pub fn cycles(&self, n: usize) -> Vec<Vec<u64>> {
        self.diff(n).kernel_basis()
    }

    /// Direct sum, summand order preserved.
    pub fn direct_sum(&self, other: &ChainComplex) -> ChainComplex {
        assert_eq!(self.fp, other.fp, "direct_sum field");
        let len = self.dims.len().max(other.dims.len());
        let dims: Vec<usize> = (0..len).map(|n| self.dim(n) + other.dim(n)).collect();
        let diffs: Vec<Matrix> = (0..len).map(|n| self.diff(n).direct_sum(&other.diff(n))).collect();
        ChainComplex::new(self.fp, dims, diffs).expect("direct sum is a complex")
    }

    /// Direct sum of `k` copies.
    pub fn power_sum(&self, k: usize) -> ChainComplex {
        let mut acc = ChainComplex::zero(self.fp);
        for _ in 0..k {
            acc = acc.direct_sum(self);
        }
        acc
    }

    /// True if this complex is one generator in a single degree with zero
    /// differential; returns that degree.
    pub fn spherical_degree(&self) -> Option<usize> {
        let nonzero: Vec<usize> = (0..self.dims.len()).filter(|&n| self.dim(n) > 0).collect();
        match nonzero.as_slice() {
            [n] if self.dim(*n) == 1 => Some(*n),
            _ => None,
        }
    }
}

/// JSON form: `{"p": prime, "dims": [..], "diff": [[..row-major..], ..]}`
/// with `diff[n]` the entries of `d_n` (empty for `n = 0`).
#[derive(Serialize, Deserialize)]
struct ComplexJson {
    p: u64,
    dims: Vec<usize>,
    diff: Vec<Vec<u64>>,
}

impl Serialize for ChainComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let j = ComplexJson {
            p: self.fp.p(),
            dims: self.dims.clone(),
            diff: self.diffs.iter().map(|m| m.entries().to_vec()).collect(),
        };
        j.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChainComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let j = ComplexJson::deserialize(d)?;
        let fp = Fp::new(j.p).map_err(DeError::custom)?;
        if j.diff.len() != j.dims.len() {
            return Err(DeError::custom("diff list length must match dims length"));
        }
        let mut diffs = Vec::with_capacity(j.dims.len());
        for (n, entries) in j.diff.iter().enumerate() {
            let rows = if n == 0 { 0 } else { j.dims[n - 1] };
            let m = Matrix::new(fp, rows, j.dims[n], entries.clone()).map_err(DeError::custom)?;
            diffs.push(m);
        }
        ChainComplex::new(fp, j.dims, diffs).map_err(DeError::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rectify::standard_interval;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn rejects_bad_differential() {
        let fp = Fp::new(3).unwrap();
        // d_1 = d_2 = identity does not square to zero
        let dims = vec![1, 1, 1];
        let diffs = vec![
            Matrix::zeros(fp, 0, 1),
            Matrix::identity(fp, 1),
            Matrix::identity(fp, 1),
        ];
        assert!(matches!(
            ChainComplex::new(fp, dims, diffs),
            Err(Error::DifferentialSquare { degree: 2 })
        ));
    }

    #[test]
    fn homology_of_interval_and_disk() {
        let i = standard_interval(f2()).unwrap();
        assert_eq!(i.complex.homology(0), 1);
        assert_eq!(i.complex.homology(1), 0);
        let d = ChainComplex::disk(f2(), 1);
        assert_eq!(d.homology(0), 0);
        assert_eq!(d.homology(1), 0);
        let k = ChainComplex::sphere(f2(), 1);
        assert_eq!(k.homology(1), 1);
        assert_eq!(k.homology(0), 0);
    }

    #[test]
    fn json_round_trip() {
        let c = ChainComplex::disk(Fp::new(3).unwrap(), 2);
        let s = serde_json::to_string(&c).unwrap();
        let back: ChainComplex = serde_json::from_str(&s).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn json_rejects_bad_shape() {
        let s = r#"{"p":2,"dims":[1,1],"diff":[[],[1,1]]}"#;
        assert!(serde_json::from_str::<ChainComplex>(s).is_err());
    }
}
