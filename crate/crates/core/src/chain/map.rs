use super::complex::ChainComplex;
use crate::matrix::Matrix;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A chain map: per-degree matrices commuting with the differentials.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    mats: Vec<Matrix>,
}

impl std::fmt::Debug for ChainMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ChainMap({:?} -> {:?})", self.source.dims(), self.target.dims())
    }
}

impl ChainMap {
    /// Build and validate: shapes per degree and `f d = d f`.
    pub fn new(source: ChainComplex, target: ChainComplex, mats: Vec<Matrix>) -> Result<ChainMap> {
        let len = source.dims().len().max(target.dims().len());
        if mats.len() < len {
            return Err(Error::dim("chain map components", len, mats.len()));
        }
        for (n, m) in mats.iter().enumerate() {
            if m.rows() != target.dim(n) || m.cols() != source.dim(n) {
                return Err(Error::dim(
                    "chain map component",
                    format!("{}x{} at degree {}", target.dim(n), source.dim(n), n),
                    format!("{}x{}", m.rows(), m.cols()),
                ));
            }
        }
        let f = ChainMap { source, target, mats };
        for n in 1..=len {
            let lhs = f.component(n - 1).mul(&f.source.diff(n));
            let rhs = f.target.diff(n).mul(&f.component(n));
            if lhs != rhs {
                return Err(Error::NotChainMap { degree: n });
            }
        }
        Ok(f)
    }

    /// Skip validation for maps produced by constructions that are chain maps
    /// by design; used internally where the proof is in the construction.
    pub(crate) fn new_unchecked(source: ChainComplex, target: ChainComplex, mats: Vec<Matrix>) -> ChainMap {
        debug_assert!(ChainMap::new(source.clone(), target.clone(), mats.clone()).is_ok());
        ChainMap { source, target, mats }
    }

    pub fn identity(c: &ChainComplex) -> ChainMap {
        let mats = (0..c.dims().len()).map(|n| Matrix::identity(c.fp(), c.dim(n))).collect();
        ChainMap { source: c.clone(), target: c.clone(), mats }
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> ChainMap {
        let len = source.dims().len().max(target.dims().len());
        let mats = (0..len).map(|n| Matrix::zeros(source.fp(), target.dim(n), source.dim(n))).collect();
        ChainMap { source: source.clone(), target: target.clone(), mats }
    }

    /// Assemble from a closure giving each component.
    pub fn from_fn(
        source: &ChainComplex,
        target: &ChainComplex,
        len: usize,
        f: impl Fn(usize) -> Matrix,
    ) -> Result<ChainMap> {
        let n = source.dims().len().max(target.dims().len()).max(len);
        ChainMap::new(source.clone(), target.clone(), (0..n).map(f).collect())
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    /// Component in degree `n`, zero-extended beyond the stored range.
    pub fn component(&self, n: usize) -> Matrix {
        self.mats
            .get(n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.source.fp(), self.target.dim(n), self.source.dim(n)))
    }

    pub fn compose(&self, first: &ChainMap) -> ChainMap {
        assert_eq!(first.target, self.source, "compose: inner objects must agree");
        let len = self.mats.len().max(first.mats.len());
        let mats = (0..len).map(|n| self.component(n).mul(&first.component(n))).collect();
        ChainMap { source: first.source.clone(), target: self.target.clone(), mats }
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        assert_eq!(self.source, other.source, "add: sources");
        assert_eq!(self.target, other.target, "add: targets");
        let len = self.mats.len().max(other.mats.len());
        let mats = (0..len).map(|n| self.component(n).add(&other.component(n))).collect();
        ChainMap { source: self.source.clone(), target: self.target.clone(), mats }
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        assert_eq!(self.source, other.source, "sub: sources");
        assert_eq!(self.target, other.target, "sub: targets");
        let len = self.mats.len().max(other.mats.len());
        let mats = (0..len).map(|n| self.component(n).sub(&other.component(n))).collect();
        ChainMap { source: self.source.clone(), target: self.target.clone(), mats }
    }

    pub fn neg(&self) -> ChainMap {
        let mats = self.mats.iter().map(|m| m.neg()).collect();
        ChainMap { source: self.source.clone(), target: self.target.clone(), mats }
    }

    pub fn scale(&self, c: u64) -> ChainMap {
        let mats = self.mats.iter().map(|m| m.scale(c)).collect();
        ChainMap { source: self.source.clone(), target: self.target.clone(), mats }
    }

    /// Map into the left (`offset_rows = 0`) or an inner summand of a direct
    /// sum target; `offset(n)` gives the row offset in degree `n`.
    pub fn into_summand(&self, target: &ChainComplex, offset: impl Fn(usize) -> usize) -> ChainMap {
        let len = self.source.dims().len().max(target.dims().len());
        let mats = (0..len)
            .map(|n| {
                let mut m = Matrix::zeros(self.source.fp(), target.dim(n), self.source.dim(n));
                m.paste(offset(n), 0, &self.component(n));
                m
            })
            .collect();
        ChainMap { source: self.source.clone(), target: target.clone(), mats }
    }

    /// Direct sum of maps, `(f ⊕ g)`.
    pub fn direct_sum(&self, other: &ChainMap) -> ChainMap {
        let source = self.source.direct_sum(&other.source);
        let target = self.target.direct_sum(&other.target);
        let len = source.dims().len().max(target.dims().len());
        let mats = (0..len).map(|n| self.component(n).direct_sum(&other.component(n))).collect();
        ChainMap { source, target, mats }
    }

    pub fn equal_maps(&self, other: &ChainMap) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        let len = self.mats.len().max(other.mats.len());
        (0..len).all(|n| self.component(n) == other.component(n))
    }

    pub fn is_identity_map(&self) -> bool {
        self.source == self.target && (0..self.mats.len()).all(|n| self.component(n).is_identity())
    }

    /// Degreewise injective.
    pub fn is_degreewise_injective(&self) -> bool {
        let len = self.source.dims().len();
        (0..len).all(|n| self.component(n).is_injective())
    }

    /// Degreewise surjective in strictly positive degrees.
    pub fn is_positive_surjective(&self) -> bool {
        let len = self.target.dims().len();
        (1..len).all(|n| self.component(n).is_surjective())
    }

    /// Degreewise isomorphism.
    pub fn is_degreewise_iso(&self) -> bool {
        let len = self.source.dims().len().max(self.target.dims().len());
        (0..len).all(|n| self.component(n).is_invertible())
    }

    /// True iff the induced maps on homology are isomorphisms in every degree.
    ///
    /// Computed by ranks: in each degree, map a cycle basis of the source
    /// into the target and measure its image in `H_n` of the target by
    /// `rank([f·Z | B]) - rank(B)`.
    pub fn is_quasi_iso(&self) -> bool {
        let len = self.source.dims().len().max(self.target.dims().len()) + 1;
        (0..len).all(|n| self.is_quasi_iso_at(n))
    }

    /// Homology isomorphism in a single degree.
    pub fn is_quasi_iso_at(&self, n: usize) -> bool {
        let hx = self.source.homology(n);
        let hy = self.target.homology(n);
        if hx != hy {
            return false;
        }
        if hx == 0 {
            return true;
        }
        let fp = self.source.fp();
        let z = self.source.cycles(n);
        let fz: Vec<Vec<u64>> = z.iter().map(|v| self.component(n).mul_vec(v)).collect();
        let fz_mat = Matrix::from_columns(fp, self.target.dim(n), &fz);
        let boundary = self.target.diff(n + 1);
        let image_rank = fz_mat.hstack(&boundary).rank() - boundary.rank();
        image_rank == hx
    }

    /// The inverse of a degreewise isomorphism.
    pub fn inverse(&self) -> Option<ChainMap> {
        let len = self.source.dims().len().max(self.target.dims().len());
        let mut mats = Vec::with_capacity(len);
        for n in 0..len {
            mats.push(self.component(n).inverse()?);
        }
        Some(ChainMap { source: self.target.clone(), target: self.source.clone(), mats })
    }
}

#[derive(Serialize, Deserialize)]
struct MapJson {
    source: ChainComplex,
    target: ChainComplex,
    mats: Vec<Vec<u64>>,
}

impl Serialize for ChainMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let len = self.source.dims().len().max(self.target.dims().len());
        let j = MapJson {
            source: self.source.clone(),
            target: self.target.clone(),
            mats: (0..len).map(|n| self.component(n).entries().to_vec()).collect(),
        };
        j.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChainMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let j = MapJson::deserialize(d)?;
        let fp = j.source.fp();
        if fp != j.target.fp() {
            return Err(DeError::custom("source and target fields differ"));
        }
        let mut mats = Vec::with_capacity(j.mats.len());
        for (n, entries) in j.mats.iter().enumerate() {
            let m = Matrix::new(fp, j.target.dim(n), j.source.dim(n), entries.clone())
                .map_err(DeError::custom)?;
            mats.push(m);
        }
        ChainMap::new(j.source, j.target, mats).map_err(DeError::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn identity_is_quasi_iso() {
        let d = ChainComplex::disk(f2(), 1);
        assert!(ChainMap::identity(&d).is_quasi_iso());
    }

    #[test]
    fn zero_to_acyclic_is_quasi_iso() {
        let d = ChainComplex::disk(f2(), 1);
        let z = ChainComplex::zero(f2());
        assert!(ChainMap::zero(&z, &d).is_quasi_iso());
    }

    #[test]
    fn zero_to_sphere_is_not() {
        let k = ChainComplex::sphere(f2(), 1);
        let z = ChainComplex::zero(f2());
        assert!(!ChainMap::zero(&z, &k).is_quasi_iso());
    }

    #[test]
    fn rejects_non_chain_map() {
        // the augmentation of the disk onto the unit hits a boundary, so it
        // cannot commute with the differentials
        let d = ChainComplex::disk(f2(), 1);
        let s = ChainComplex::unit(f2());
        let mats = vec![Matrix::identity(f2(), 1), Matrix::zeros(f2(), 0, 1)];
        assert!(matches!(
            ChainMap::new(d, s.clone(), mats),
            Err(Error::NotChainMap { degree: 1 })
        ));
    }

    #[test]
    fn json_round_trip() {
        let d = ChainComplex::disk(f2(), 1);
        let id = ChainMap::identity(&d);
        let s = serde_json::to_string(&id).unwrap();
        let back: ChainMap = serde_json::from_str(&s).unwrap();
        assert!(id.equal_maps(&back));
    }
}
