use crate::field::Fp;
use crate::matrix::Matrix;
use crate::{Error, Result};

/// A system of matrix equations, linear in a set of unknown block matrices.
///
/// Each equation is `sum_j  A_j * U_{k_j} * B_j = C` where the `U_k` are
/// unknown matrices of declared shape; an unknown may appear in several
/// equations (or several times in one), which is how shared unknowns and
/// equality constraints are expressed.  Solving flattens every unknown
/// row-major, row-reduces once, and reports one exact solution (free
/// coordinates pinned to zero) or a definitive "no solution".
///
/// This solver is the engine behind lifting checks, homotopy existence and
/// induced-map computations throughout the crate.
pub struct AffineSystem {
    fp: Fp,
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    total: usize,
    rows: Vec<Vec<u64>>,
    rhs: Vec<u64>,
}

/// One `A * U_k * B` term inside an equation.
pub struct Term<'a> {
    pub left: &'a Matrix,
    pub unknown: usize,
    pub right: &'a Matrix,
}

impl AffineSystem {
    pub fn new(fp: Fp) -> AffineSystem {
        AffineSystem { fp, shapes: Vec::new(), offsets: Vec::new(), total: 0, rows: Vec::new(), rhs: Vec::new() }
    }

    /// Declare an unknown matrix of the given shape; returns its handle.
    pub fn unknown(&mut self, rows: usize, cols: usize) -> usize {
        self.shapes.push((rows, cols));
        self.offsets.push(self.total);
        self.total += rows * cols;
        self.shapes.len() - 1
    }

    /// Add the equation `sum_j left_j * U_j * right_j = rhs`.
    pub fn equation(&mut self, terms: &[Term], rhs: &Matrix) -> Result<()> {
        let fp = self.fp;
        let (er, ec) = (rhs.rows(), rhs.cols());
        for t in terms {
            let (ur, uc) = self.shapes[t.unknown];
            if t.left.cols() != ur || t.right.rows() != uc {
                return Err(Error::dim(
                    "affine system term",
                    format!("{}x{} unknown", t.left.cols(), t.right.rows()),
                    format!("{}x{}", ur, uc),
                ));
            }
            if t.left.rows() != er || t.right.cols() != ec {
                return Err(Error::dim(
                    "affine system equation",
                    format!("{}x{}", er, ec),
                    format!("{}x{}", t.left.rows(), t.right.cols()),
                ));
            }
        }
        // entry (a, d) of A*U*B depends on U[b][c] with coefficient A[a][b] * B[c][d]
        for a in 0..er {
            for d in 0..ec {
                let mut row = vec![0u64; self.total];
                for t in terms {
                    let (ur, uc) = self.shapes[t.unknown];
                    let off = self.offsets[t.unknown];
                    for b in 0..ur {
                        let la = t.left.get(a, b);
                        if la == 0 {
                            continue;
                        }
                        for c in 0..uc {
                            let coeff = fp.mul(la, t.right.get(c, d));
                            if coeff != 0 {
                                let idx = off + b * uc + c;
                                row[idx] = fp.add(row[idx], coeff);
                            }
                        }
                    }
                }
                self.rows.push(row);
                self.rhs.push(rhs.get(a, d));
            }
        }
        Ok(())
    }

    /// Pin `U_k = value` exactly.
    pub fn pin(&mut self, unknown: usize, value: &Matrix) -> Result<()> {
        let (r, c) = self.shapes[unknown];
        let id_l = Matrix::identity(self.fp, r);
        let id_r = Matrix::identity(self.fp, c);
        self.equation(&[Term { left: &id_l, unknown, right: &id_r }], value)
    }

    /// Solve; returns the unknowns in declaration order, or `None`.
    pub fn solve(&self) -> Option<Vec<Matrix>> {
        let n = self.rows.len();
        let mut flat = Vec::with_capacity(n * self.total);
        for row in &self.rows {
            flat.extend_from_slice(row);
        }
        let m = Matrix::new(self.fp, n, self.total, flat).expect("system shape");
        let x = m.solve(&self.rhs)?;
        let mut out = Vec::with_capacity(self.shapes.len());
        for (k, &(r, c)) in self.shapes.iter().enumerate() {
            let off = self.offsets[k];
            let data = x[off..off + r * c].to_vec();
            out.push(Matrix::new(self.fp, r, c, data).expect("unknown shape"));
        }
        Some(out)
    }

    /// A basis for the homogeneous solution space (rhs forced to zero),
    /// used for sampling random solutions of the constraints.
    pub fn homogeneous_basis(&self) -> Vec<Vec<Matrix>> {
        let n = self.rows.len();
        let mut flat = Vec::with_capacity(n * self.total);
        for row in &self.rows {
            flat.extend_from_slice(row);
        }
        let m = Matrix::new(self.fp, n, self.total, flat).expect("system shape");
        m.kernel_basis()
            .into_iter()
            .map(|x| {
                self.shapes
                    .iter()
                    .enumerate()
                    .map(|(k, &(r, c))| {
                        let off = self.offsets[k];
                        Matrix::new(self.fp, r, c, x[off..off + r * c].to_vec()).expect("shape")
                    })
                    .collect()
            })
            .collect()
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
    fn identity_equation() {
        // H * I = I forces H = I
        let fp = f2();
        let mut sys = AffineSystem::new(fp);
        let h = sys.unknown(2, 2);
        let id = Matrix::identity(fp, 2);
        sys.equation(&[Term { left: &id, unknown: h, right: &id }], &id).unwrap();
        let sol = sys.solve().unwrap();
        assert!(sol[0].is_identity());
    }

    #[test]
    fn no_solution() {
        // 0 * H = I is inconsistent
        let fp = f2();
        let mut sys = AffineSystem::new(fp);
        let h = sys.unknown(2, 2);
        let zero = Matrix::zeros(fp, 2, 2);
        let id = Matrix::identity(fp, 2);
        sys.equation(&[Term { left: &zero, unknown: h, right: &id }], &id).unwrap();
        assert!(sys.solve().is_none());
    }

    #[test]
    fn constrained_column() {
        // H * [[1],[0]] = [[1],[1]] pins the first column of H to (1,1)
        let fp = f2();
        let mut sys = AffineSystem::new(fp);
        let h = sys.unknown(2, 2);
        let id = Matrix::identity(fp, 2);
        let e0 = Matrix::new(fp, 2, 1, vec![1, 0]).unwrap();
        let rhs = Matrix::new(fp, 2, 1, vec![1, 1]).unwrap();
        sys.equation(&[Term { left: &id, unknown: h, right: &e0 }], &rhs).unwrap();
        let sol = sys.solve().unwrap();
        let got = sol[0].mul(&e0);
        assert_eq!(got, rhs);
        // exhaustive oracle: some 2x2 H over F_2 with first column (1,1) exists
        // and every solution returned satisfies the equation exactly
        assert_eq!(sol[0].get(0, 0), 1);
        assert_eq!(sol[0].get(1, 0), 1);
    }

    #[test]
    fn shared_unknown_two_equations() {
        // U = A and U = A again (consistency), then U = A and U = B (conflict)
        let fp = f2();
        let a = Matrix::new(fp, 1, 1, vec![1]).unwrap();
        let b = Matrix::new(fp, 1, 1, vec![0]).unwrap();

        let mut sys = AffineSystem::new(fp);
        let u = sys.unknown(1, 1);
        sys.pin(u, &a).unwrap();
        sys.pin(u, &a).unwrap();
        assert!(sys.solve().is_some());

        let mut sys = AffineSystem::new(fp);
        let u = sys.unknown(1, 1);
        sys.pin(u, &a).unwrap();
        sys.pin(u, &b).unwrap();
        assert!(sys.solve().is_none());
    }
}
