use super::complex::ChainComplex;
use super::map::ChainMap;
use super::tensor::{multi_basis, tensor, tensor_power};
use crate::matrix::Matrix;
use crate::{Error, Result};

/// The right adjoint `U` of `- ⊗ k`: the good truncation to non-negative
/// degrees of the internal hom out of `k`.
///
/// Degree `n >= 1` is the full graded hom `∏_m Hom(k_m, x_{m+n})`; degree 0
/// is the subspace of degree-0 elements killed by the hom differential
/// `(dφ)_m = d_x ∘ φ_m - (-1)^n φ_{m-1} ∘ d_k`.  The struct keeps the raw
/// presentation (matrix units per `m`-block) plus the embedding of each
/// degree into it, which is what every adjunction map is computed through.
pub struct LoopsData {
    pub k: ChainComplex,
    pub x: ChainComplex,
    pub complex: ChainComplex,
    /// embed[n]: complex-degree-n coordinates into the raw hom space
    pub embed: Vec<Matrix>,
    raw_dims: Vec<usize>,
}

/// Raw unit enumeration for `Hom(k, x)` in hom-degree `n`:
/// for `m` ascending, then source index `s` in `k_m`, then target index `r`
/// in `x_{m+n}`.  Hom-degree `-1` is passed as `n = usize::MAX` sentinel-free
/// via the signed helper below.
fn raw_units(k: &ChainComplex, x: &ChainComplex, n: i64) -> Vec<(usize, usize, usize)> {
    let mut units = Vec::new();
    for m in 0..=k.top_degree() {
        let t = m as i64 + n;
        if t < 0 {
            continue;
        }
        let xd = x.dim(t as usize);
        for s in 0..k.dim(m) {
            for r in 0..xd {
                units.push((m, r, s));
            }
        }
    }
    units
}

fn raw_index(k: &ChainComplex, x: &ChainComplex, n: i64, m: usize, r: usize, s: usize) -> usize {
    let mut idx = 0;
    for mm in 0..m {
        let t = mm as i64 + n;
        if t >= 0 {
            idx += k.dim(mm) * x.dim(t as usize);
        }
    }
    let t = (m as i64 + n) as usize;
    idx + s * x.dim(t) + r
}

/// Raw hom differential `R_n -> R_{n-1}`.
fn raw_diff(k: &ChainComplex, x: &ChainComplex, n: i64) -> Matrix {
    let fp = x.fp();
    let src = raw_units(k, x, n);
    let dst = raw_units(k, x, n - 1);
    let mut d = Matrix::zeros(fp, dst.len(), src.len());
    let sign = if n.rem_euclid(2) == 0 { 1 } else { fp.neg(1) };
    for (col, &(m, r, s)) in src.iter().enumerate() {
        let t = (m as i64 + n) as usize;
        // d_x ∘ φ
        if t >= 1 {
            let dx = x.diff(t);
            for rr in 0..x.dim(t - 1) {
                let c = dx.get(rr, r);
                if c != 0 {
                    let row = raw_index(k, x, n - 1, m, rr, s);
                    d.set(row, col, fp.add(d.get(row, col), c));
                }
            }
        }
        // -(-1)^n φ ∘ d_k, landing in the (m+1)-block
        let dk = k.diff(m + 1);
        for u in 0..k.dim(m + 1) {
            let c = dk.get(s, u);
            if c != 0 {
                let row = raw_index(k, x, n - 1, m + 1, r, u);
                let v = fp.mul(fp.neg(sign), c);
                d.set(row, col, fp.add(d.get(row, col), v));
            }
        }
    }
    d
}

impl LoopsData {
    pub fn new(x: &ChainComplex, k: &ChainComplex) -> LoopsData {
        let fp = x.fp();
        assert_eq!(fp, k.fp(), "loops field");
        let min_k = (0..k.dims().len()).find(|&m| k.dim(m) > 0);
        let top = match min_k {
            Some(m) if !x.is_zero_complex() && x.top_degree() >= m => x.top_degree() - m,
            _ => {
                return LoopsData {
                    k: k.clone(),
                    x: x.clone(),
                    complex: ChainComplex::zero(fp),
                    embed: Vec::new(),
                    raw_dims: Vec::new(),
                }
            }
        };
        let mut raw_dims = Vec::with_capacity(top + 1);
        let mut embed = Vec::with_capacity(top + 1);
        for n in 0..=top as i64 {
            let units = raw_units(k, x, n);
            raw_dims.push(units.len());
            if n == 0 {
                let d0 = raw_diff(k, x, 0);
                let basis = d0.kernel_basis();
                embed.push(Matrix::from_columns(fp, units.len(), &basis));
            } else {
                embed.push(Matrix::identity(fp, units.len()));
            }
        }
        let dims: Vec<usize> = embed.iter().map(|e| e.cols()).collect();
        let mut diffs = Vec::with_capacity(top + 1);
        for n in 0..=top {
            if n == 0 {
                diffs.push(Matrix::zeros(fp, 0, dims[0]));
            } else if n == 1 {
                let coords = embed[0]
                    .solve_matrix(&raw_diff(k, x, 1))
                    .expect("hom differential lands in degree-0 cycles");
                diffs.push(coords);
            } else {
                diffs.push(raw_diff(k, x, n as i64));
            }
        }
        let complex = ChainComplex::new(fp, dims, diffs).expect("loops complex");
        LoopsData { k: k.clone(), x: x.clone(), complex, embed, raw_dims }
    }

    pub fn raw_dim(&self, n: usize) -> usize {
        self.raw_dims.get(n).copied().unwrap_or(0)
    }

    /// Embedding of degree `n` into the raw hom space (empty beyond range).
    pub fn embedding(&self, n: usize) -> Matrix {
        self.embed
            .get(n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.x.fp(), self.raw_dim(n), 0))
    }

    /// Conjugation `φ ↦ post ∘ φ ∘ pre` expressed on the truncated complex;
    /// both maps must be degree-0 endomorphisms.
    pub fn conjugation(&self, pre: &ChainMap, post: &ChainMap) -> Result<Vec<Matrix>> {
        let fp = self.x.fp();
        let mut out = Vec::with_capacity(self.complex.dims().len());
        for n in 0..self.complex.dims().len() {
            let units = raw_units(&self.k, &self.x, n as i64);
            let mut raw = Matrix::zeros(fp, units.len(), units.len());
            for (col, &(m, r, s)) in units.iter().enumerate() {
                let t = m as i64 + n as i64;
                let post_m = post.component(t as usize);
                let pre_m = pre.component(m);
                // post ∘ E_{r,s} ∘ pre scatters over rows r' and columns s'
                for rr in 0..post_m.rows() {
                    let pc = post_m.get(rr, r);
                    if pc == 0 {
                        continue;
                    }
                    for ss in 0..pre_m.cols() {
                        let qc = pre_m.get(s, ss);
                        if qc != 0 {
                            let row = raw_index(&self.k, &self.x, n as i64, m, rr, ss);
                            raw.set(row, col, fp.add(raw.get(row, col), fp.mul(pc, qc)));
                        }
                    }
                }
            }
            let restricted = self
                .embedding(n)
                .solve_matrix(&raw.mul(&self.embedding(n)))
                .ok_or_else(|| Error::Validation("conjugation does not preserve the truncation".into()))?;
            out.push(restricted);
        }
        Ok(out)
    }
}

/// `U(x)` for the suspension object `k`.
pub fn loops_u(x: &ChainComplex, k: &ChainComplex) -> ChainComplex {
    LoopsData::new(x, k).complex
}

/// Functoriality: `U(g) : U(x) -> U(y)` for `g : x -> y`.
pub fn loops_map(g: &ChainMap, k: &ChainComplex) -> ChainMap {
    let src = LoopsData::new(g.source(), k);
    let dst = LoopsData::new(g.target(), k);
    loops_map_with(&src, &dst, g)
}

pub fn loops_map_with(src: &LoopsData, dst: &LoopsData, g: &ChainMap) -> ChainMap {
    assert_eq!(&src.k, &dst.k, "loops_map suspension object");
    let fp = src.x.fp();
    let k = &src.k;
    let len = src.complex.dims().len().max(dst.complex.dims().len());
    let mats = (0..len)
        .map(|n| {
            let units = raw_units(k, &src.x, n as i64);
            let dst_units = raw_units(k, &dst.x, n as i64);
            let mut raw = Matrix::zeros(fp, dst_units.len(), units.len());
            for (col, &(m, r, s)) in units.iter().enumerate() {
                let t = m + n;
                let gm = g.component(t);
                for rr in 0..gm.rows() {
                    let c = gm.get(rr, r);
                    if c != 0 {
                        let row = raw_index(k, &dst.x, n as i64, m, rr, s);
                        raw.set(row, col, fp.add(raw.get(row, col), c));
                    }
                }
            }
            dst.embedding(n)
                .solve_matrix(&raw.mul(&src.embedding(n)))
                .expect("postcomposition preserves cycles")
        })
        .collect();
    ChainMap::new_unchecked(src.complex.clone(), dst.complex.clone(), mats)
}

/// The unit `η : a -> U(a ⊗ k)`, `a ↦ (κ ↦ a ⊗ κ)`.
pub fn loops_unit(a: &ChainComplex, k: &ChainComplex) -> ChainMap {
    let ak = tensor(a, k);
    let data = LoopsData::new(&ak, k);
    loops_unit_with(a, k, &data)
}

pub fn loops_unit_with(a: &ChainComplex, k: &ChainComplex, data: &LoopsData) -> ChainMap {
    let fp = a.fp();
    let ak = tensor(a, k);
    assert_eq!(data.x, ak, "loops_unit target data");
    let tb = multi_basis(&[a, k]);
    let len = a.dims().len().max(data.complex.dims().len());
    let mats = (0..len)
        .map(|n| {
            let units = raw_units(k, &ak, n as i64);
            let mut raw = Matrix::zeros(fp, units.len(), a.dim(n));
            for i in 0..a.dim(n) {
                for m in 0..=k.top_degree() {
                    for s in 0..k.dim(m) {
                        let r = tb.index_of(n + m, &[n, m], &[i, s]);
                        let row = raw_index(k, &ak, n as i64, m, r, s);
                        raw.set(row, i, 1);
                    }
                }
            }
            data.embedding(n)
                .solve_matrix(&raw)
                .expect("unit lands in degree-0 cycles")
        })
        .collect();
    ChainMap::new_unchecked(a.clone(), data.complex.clone(), mats)
}

/// The counit `ε : U(x) ⊗ k -> x`, `φ ⊗ κ ↦ φ(κ)`.
pub fn loops_counit(x: &ChainComplex, k: &ChainComplex) -> ChainMap {
    let data = LoopsData::new(x, k);
    loops_counit_with(&data)
}

pub fn loops_counit_with(data: &LoopsData) -> ChainMap {
    let fp = data.x.fp();
    let (k, x) = (&data.k, &data.x);
    let u = &data.complex;
    let uk = tensor(u, k);
    let tb = multi_basis(&[u, k]);
    let len = uk.dims().len().max(x.dims().len());
    let mats = (0..len)
        .map(|deg| {
            let mut mat = Matrix::zeros(fp, x.dim(deg), uk.dim(deg));
            if deg < tb.tuples.len() {
                for (col, (degs, idxs)) in tb.tuples[deg].iter().enumerate() {
                    let (n, t, s) = (degs[0], idxs[0], idxs[1]);
                    let m = deg - n;
                    // raw vector of basis element t, block-m column s
                    let e = data.embedding(n);
                    for r in 0..x.dim(m + n) {
                        if k.dim(m) == 0 {
                            continue;
                        }
                        let row = raw_index(k, x, n as i64, m, r, s);
                        let c = e.get(row, t);
                        if c != 0 {
                            mat.set(r, col, fp.add(mat.get(r, col), c));
                        }
                    }
                }
            }
            mat
        })
        .collect();
    ChainMap::new_unchecked(uk, x.clone(), mats)
}

/// Adjoint transposition `f : a⊗k -> x` into `a -> U(x)` (via the unit).
pub fn adjoint_to_loops(f: &ChainMap, a: &ChainComplex, k: &ChainComplex) -> Result<ChainMap> {
    let ak = tensor(a, k);
    if f.source() != &ak {
        return Err(Error::dim("adjoint", "a ⊗ k source", "other source"));
    }
    let data = LoopsData::new(f.target(), k);
    Ok(adjoint_to_loops_with(f, a, k, &data))
}

pub fn adjoint_to_loops_with(
    f: &ChainMap,
    a: &ChainComplex,
    k: &ChainComplex,
    data: &LoopsData,
) -> ChainMap {
    let fp = a.fp();
    let x = f.target();
    let tb = multi_basis(&[a, k]);
    let len = a.dims().len().max(data.complex.dims().len());
    let mats = (0..len)
        .map(|n| {
            let units = raw_units(k, x, n as i64);
            let mut raw = Matrix::zeros(fp, units.len(), a.dim(n));
            for i in 0..a.dim(n) {
                for m in 0..=k.top_degree() {
                    for s in 0..k.dim(m) {
                        let colidx = tb.index_of(n + m, &[n, m], &[i, s]);
                        let fm = f.component(n + m);
                        for r in 0..x.dim(n + m) {
                            let c = fm.get(r, colidx);
                            if c != 0 {
                                let row = raw_index(k, x, n as i64, m, r, s);
                                raw.set(row, i, fp.add(raw.get(row, i), c));
                            }
                        }
                    }
                }
            }
            data.embedding(n)
                .solve_matrix(&raw)
                .expect("adjoint lands in degree-0 cycles")
        })
        .collect();
    ChainMap::new_unchecked(a.clone(), data.complex.clone(), mats)
}

/// Adjoint transposition `g : a -> U(x)` into `a⊗k -> x` (via the counit).
pub fn adjoint_to_tensor(g: &ChainMap, a: &ChainComplex, k: &ChainComplex, x: &ChainComplex) -> Result<ChainMap> {
    let data = LoopsData::new(x, k);
    if g.target() != &data.complex {
        return Err(Error::dim("adjoint", "U(x) target", "other target"));
    }
    Ok(adjoint_to_tensor_with(g, a, k, &data))
}

pub fn adjoint_to_tensor_with(
    g: &ChainMap,
    a: &ChainComplex,
    k: &ChainComplex,
    data: &LoopsData,
) -> ChainMap {
    let fp = a.fp();
    let x = &data.x;
    let ak = tensor(a, k);
    let tb = multi_basis(&[a, k]);
    let len = ak.dims().len().max(x.dims().len());
    let mats = (0..len)
        .map(|deg| {
            let mut mat = Matrix::zeros(fp, x.dim(deg), ak.dim(deg));
            if deg < tb.tuples.len() {
                for (col, (degs, idxs)) in tb.tuples[deg].iter().enumerate() {
                    let (n, i, s) = (degs[0], idxs[0], idxs[1]);
                    let m = deg - n;
                    if k.dim(m) == 0 {
                        continue;
                    }
                    let gu = g.component(n);
                    let e = data.embedding(n);
                    for t in 0..gu.rows() {
                        let gc = gu.get(t, i);
                        if gc == 0 {
                            continue;
                        }
                        for r in 0..x.dim(deg) {
                            let row = raw_index(k, x, n as i64, m, r, s);
                            let c = e.get(row, t);
                            if c != 0 {
                                mat.set(r, col, fp.add(mat.get(r, col), fp.mul(gc, c)));
                            }
                        }
                    }
                }
            }
            mat
        })
        .collect();
    ChainMap::new_unchecked(ak, x.clone(), mats)
}

/// Partial application for iterated suspension objects:
/// `Hom(k^{⊗q}, w) ⊗ k -> Hom(k^{⊗(q-1)}, w)`, `φ ⊗ κ ↦ φ(κ ⊗ -)`.
pub fn partial_apply(
    src: &LoopsData,
    dst: &LoopsData,
    k: &ChainComplex,
    q: usize,
) -> Result<ChainMap> {
    assert!(q >= 1);
    let fp = k.fp();
    let kq = tensor_power(k, q);
    let kq1 = tensor_power(k, q - 1);
    if src.k != kq || dst.k != kq1 || src.x != dst.x {
        return Err(Error::dim("partial application", "matching powers", "mismatch"));
    }
    let w = &src.x;
    let u = &src.complex;
    let uk = tensor(u, k);
    let tb = multi_basis(&[u, k]);
    let factors: Vec<&ChainComplex> = std::iter::repeat(k).take(q).collect();
    let qb = multi_basis(&factors);
    let q1_factors: Vec<&ChainComplex> = std::iter::repeat(k).take(q.max(2) - 1).collect();
    let q1b = if q >= 2 { Some(multi_basis(&q1_factors)) } else { None };
    let len = uk.dims().len().max(dst.complex.dims().len());
    let mats = (0..len)
        .map(|deg| {
            let dst_units = raw_units(&kq1, w, deg as i64);
            let mut raw = Matrix::zeros(fp, dst_units.len(), uk.dim(deg));
            if deg < tb.tuples.len() {
                for (col, (degs, idxs)) in tb.tuples[deg].iter().enumerate() {
                    let (n, t, u_idx) = (degs[0], idxs[0], idxs[1]);
                    let e = degs[1];
                    // source raw vector of φ-basis t at hom-degree n
                    let emb = src.embedding(n);
                    for (rowu, &(m, r, s)) in raw_units(&kq, w, n as i64).iter().enumerate() {
                        let c = emb.get(rowu, t);
                        if c == 0 || m < e {
                            continue;
                        }
                        // the k^q basis tuple s must start with the factor (e, u_idx)
                        let (ds, is) = &qb.tuples[m][s];
                        if ds[0] != e || is[0] != u_idx {
                            continue;
                        }
                        let m1 = m - e;
                        let s1 = match &q1b {
                            Some(b) => b.index_of(m1, &ds[1..], &is[1..]),
                            None => 0, // q = 1: the empty tuple in the unit
                        };
                        let row = raw_index(&kq1, w, deg as i64, m1, r, s1);
                        raw.set(row, col, fp.add(raw.get(row, col), c));
                    }
                }
            }
            dst.embedding(deg)
                .solve_matrix(&raw)
                .expect("partial application preserves the truncation")
        })
        .collect();
    let out = ChainMap::new(uk, dst.complex.clone(), mats)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn loops_with_unit_is_identity_functor() {
        let fp = f3();
        let s = ChainComplex::unit(fp);
        let d = ChainComplex::disk(fp, 2);
        assert_eq!(loops_u(&d, &s), d);
    }

    #[test]
    fn loops_of_k_squared_is_k() {
        let fp = f3();
        let k = ChainComplex::sphere(fp, 1);
        let kk = tensor(&k, &k);
        let u = loops_u(&kk, &k);
        assert_eq!(u.dims(), &[0, 1]);
    }

    #[test]
    fn loops_of_k_is_unit() {
        let fp = f3();
        let k = ChainComplex::sphere(fp, 1);
        let u = loops_u(&k, &k);
        assert_eq!(u.dims(), &[1]);
    }

    #[test]
    fn unit_of_adjunction_is_iso_for_spherical_k() {
        let fp = f3();
        let k = ChainComplex::sphere(fp, 1);
        let a = ChainComplex::disk(fp, 1);
        let eta = loops_unit(&a, &k);
        assert!(eta.is_degreewise_iso());
    }

    #[test]
    fn adjoint_round_trips() {
        let fp = f3();
        let k = ChainComplex::sphere(fp, 1);
        let a = ChainComplex::disk(fp, 1);
        let x = tensor(&a, &k);
        let f = ChainMap::identity(&x);
        let sharp = adjoint_to_loops(&f, &a, &k).unwrap();
        let back = adjoint_to_tensor(&sharp, &a, &k, &x).unwrap();
        assert!(back.equal_maps(&f));

        let data = LoopsData::new(&x, &k);
        let g = loops_unit(&a, &k);
        let flat = adjoint_to_tensor_with(&g, &a, &k, &data);
        let again = adjoint_to_loops_with(&flat, &a, &k, &data);
        assert!(again.equal_maps(&g));
    }

    #[test]
    fn adjoint_of_zero_is_zero() {
        let fp = f3();
        let k = ChainComplex::sphere(fp, 1);
        let a = ChainComplex::disk(fp, 1);
        let x = ChainComplex::disk(fp, 2);
        let z = ChainMap::zero(&tensor(&a, &k), &x);
        let sharp = adjoint_to_loops(&z, &a, &k).unwrap();
        assert!(sharp.equal_maps(&ChainMap::zero(&a, &loops_u(&x, &k))));
    }

    #[test]
    fn counit_after_unit_triangle() {
        // ε_{a⊗k} ∘ (η_a ⊗ 1) = id on a ⊗ k
        let fp = f3();
        let k = ChainComplex::sphere(fp, 1);
        let a = ChainComplex::disk(fp, 1);
        let ak = tensor(&a, &k);
        let data = LoopsData::new(&ak, &k);
        let eta = loops_unit_with(&a, &k, &data);
        let eps = loops_counit_with(&data);
        let id_k = ChainMap::identity(&k);
        let comp = eps.compose(&super::super::tensor::tensor_map(&eta, &id_k));
        assert!(comp.is_identity_map());
    }
}
