use crate::field::Fp;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Dense row-major matrix over a prime field.
///
/// Row reduction uses the deterministic pivot rule "first nonzero entry,
/// leftmost column", so every derived basis (kernels, cokernel complements,
/// solutions) is reproducible bit for bit.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    fp: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} mod {} [", self.rows, self.cols, self.fp.p())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn new(fp: Fp, rows: usize, cols: usize, data: Vec<u64>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::dim("matrix entries", rows * cols, data.len()));
        }
        let data = data.into_iter().map(|x| x % fp.p()).collect();
        Ok(Matrix { fp, rows, cols, data })
    }

    pub fn from_i64(fp: Fp, rows: usize, cols: usize, data: &[i64]) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::dim("matrix entries", rows * cols, data.len()));
        }
        Ok(Matrix {
            fp,
            rows,
            cols,
            data: data.iter().map(|&x| fp.reduce(x)).collect(),
        })
    }

    pub fn zeros(fp: Fp, rows: usize, cols: usize) -> Matrix {
        Matrix { fp, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(fp: Fp, n: usize) -> Matrix {
        let mut m = Matrix::zeros(fp, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Scalar multiple of the identity.
    pub fn scalar(fp: Fp, n: usize, c: u64) -> Matrix {
        let mut m = Matrix::zeros(fp, n, n);
        for i in 0..n {
            m.set(i, i, c % fp.p());
        }
        m
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v % self.fp.p();
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u64::from(r == c)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.fp, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix add shape");
        assert_eq!(self.fp, other.fp, "matrix add field");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.fp.add(a, b))
            .collect();
        Matrix { fp: self.fp, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sub shape");
        assert_eq!(self.fp, other.fp, "matrix sub field");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.fp.sub(a, b))
            .collect();
        Matrix { fp: self.fp, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|&a| self.fp.neg(a)).collect();
        Matrix { fp: self.fp, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let data = self.data.iter().map(|&a| self.fp.mul(a, c)).collect();
        Matrix { fp: self.fp, rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix mul shape");
        assert_eq!(self.fp, other.fp, "matrix mul field");
        let p = self.fp.p();
        let mut out = Matrix::zeros(self.fp, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = (out.data[idx] + a * other.get(k, c)) % p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let p = self.fp.p();
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    acc = (acc + self.get(r, c) * v[c]) % p;
                }
                acc
            })
            .collect()
    }

    /// Stack vertically: `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack shape");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { fp: self.fp, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Stack horizontally: `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack shape");
        let mut out = Matrix::zeros(self.fp, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.fp, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn from_columns(fp: Fp, rows: usize, cols: &[Vec<u64>]) -> Matrix {
        let mut m = Matrix::zeros(fp, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Paste `block` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "paste bounds");
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let fp = self.fp;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            // deterministic pivot: first row with a nonzero entry in this column
            let pivot = (row..m.rows).find(|&r| m.get(r, col) != 0);
            let Some(pr) = pivot else { continue };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.get(row, c);
                    let b = m.get(pr, c);
                    m.set(row, c, b);
                    m.set(pr, c, a);
                }
            }
            let inv = fp.inv(m.get(row, col));
            for c in 0..m.cols {
                m.set(row, c, fp.mul(m.get(row, c), inv));
            }
            for r in 0..m.rows {
                if r != row && m.get(r, col) != 0 {
                    let factor = m.get(r, col);
                    for c in 0..m.cols {
                        let v = fp.sub(m.get(r, c), fp.mul(factor, m.get(row, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{ v : self * v = 0 }` as column vectors, `cols - rank` of
    /// them, with free variables set in ascending column order.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let (r, pivots) = self.rref();
        let fp = self.fp;
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = fp.neg(r.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution of `self * x = b`, or `None` if inconsistent.
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows, "rhs length");
        let fp = self.fp;
        let mut aug = Matrix::zeros(fp, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let (r, pivots) = aug.rref();
        // inconsistent iff a pivot lands in the augmented column
        if pivots.iter().any(|&c| c == self.cols) {
            return None;
        }
        let mut x = vec![0u64; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols);
        }
        Some(x)
    }

    /// Solve `self * X = B` column by column; `None` if any column fails.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "solve_matrix shape");
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            cols.push(self.solve(&b.column(j))?);
        }
        Some(Matrix::from_columns(self.fp, self.cols, &cols))
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        self.solve_matrix(&Matrix::identity(self.fp, self.rows))
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }
    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(Matrix::identity(f2(), 2).rank(), 2);
        assert_eq!(Matrix::zeros(f2(), 3, 4).rank(), 0);
    }

    #[test]
    fn rank_ones_mod_2() {
        // [[1,1],[1,1]] row-reduces to a single pivot row
        let m = Matrix::new(f2(), 2, 2, vec![1, 1, 1, 1]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_sizes() {
        assert!(Matrix::identity(f2(), 2).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(f2(), 2, 2).kernel_basis().len(), 2);
    }

    #[test]
    fn kernel_of_sum_row_mod_3() {
        // x + y = 0 mod 3 has kernel spanned by (2, 1) with the free
        // variable in the second slot set to 1
        let m = Matrix::new(f3(), 1, 2, vec![1, 1]).unwrap();
        let basis = m.kernel_basis();
        assert_eq!(basis, vec![vec![2, 1]]);
        assert_eq!(m.mul_vec(&basis[0]), vec![0]);
    }

    #[test]
    fn rank_nullity_samples() {
        for (rows, cols, data) in [
            (2usize, 3usize, vec![1, 0, 1, 0, 1, 1]),
            (3, 2, vec![1, 1, 1, 1, 0, 0]),
            (3, 3, vec![1, 2, 0, 2, 1, 0, 0, 0, 0]),
        ] {
            let m = Matrix::new(f3(), rows, cols, data).unwrap();
            assert_eq!(m.rank() + m.kernel_basis().len(), cols);
            for v in m.kernel_basis() {
                assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = Matrix::new(f3(), 2, 2, vec![1, 1, 0, 1]).unwrap();
        let x = m.solve(&[2, 1]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![2, 1]);
        let z = Matrix::zeros(f3(), 2, 2);
        assert!(z.solve(&[1, 0]).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::new(f3(), 2, 2, vec![1, 2, 1, 1]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }
}
