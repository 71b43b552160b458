use super::complex::ChainComplex;
use super::map::ChainMap;
use super::tensor::{multi_basis, tensor};
use crate::matrix::Matrix;
use crate::rectify::UnitInterval;
use crate::solve::{AffineSystem, Term};
use crate::{Error, Result};

/// A chain homotopy `h` between two parallel maps:
/// `d ∘ h_n + h_{n-1} ∘ d = (to - from)_n`.
#[derive(Clone)]
pub struct ChainHomotopy {
    pub from_map: ChainMap,
    pub to_map: ChainMap,
    comps: Vec<Matrix>,
}

impl ChainHomotopy {
    pub fn new(from_map: ChainMap, to_map: ChainMap, comps: Vec<Matrix>) -> Result<ChainHomotopy> {
        if from_map.source() != to_map.source() || from_map.target() != to_map.target() {
            return Err(Error::dim("homotopy", "parallel pair", "mismatched shapes"));
        }
        let h = ChainHomotopy { from_map, to_map, comps };
        let src = h.from_map.source().clone();
        let tgt = h.from_map.target().clone();
        let len = src.dims().len().max(tgt.dims().len());
        for n in 0..len {
            let lhs = tgt
                .diff(n + 1)
                .mul(&h.component(n))
                .add(&h.component_or_zero(n.wrapping_sub(1), &src, &tgt).mul(&src.diff(n)));
            let rhs = h.to_map.component(n).sub(&h.from_map.component(n));
            if lhs != rhs {
                return Err(Error::NotHomotopy { degree: n });
            }
        }
        Ok(h)
    }

    fn component_or_zero(&self, n: usize, src: &ChainComplex, tgt: &ChainComplex) -> Matrix {
        if n == usize::MAX {
            // degree -1 component is zero
            return Matrix::zeros(src.fp(), tgt.dim(0), 0);
        }
        self.component(n)
    }

    /// `h_n : source_n -> target_{n+1}`, zero beyond the stored range.
    pub fn component(&self, n: usize) -> Matrix {
        let src = self.from_map.source();
        let tgt = self.from_map.target();
        self.comps
            .get(n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(src.fp(), tgt.dim(n + 1), src.dim(n)))
    }
}

/// Decide left-homotopy of parallel maps exactly; the witness re-validates.
pub fn homotopic(f: &ChainMap, g: &ChainMap) -> Result<Option<ChainHomotopy>> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::dim("homotopic", "parallel pair", "mismatched shapes"));
    }
    let src = f.source();
    let tgt = f.target();
    let fp = src.fp();
    let len = src.dims().len().max(tgt.dims().len());
    let mut sys = AffineSystem::new(fp);
    let hs: Vec<usize> = (0..len).map(|n| sys.unknown(tgt.dim(n + 1), src.dim(n))).collect();
    for n in 0..len {
        let rhs = g.component(n).sub(&f.component(n));
        let d_out = tgt.diff(n + 1);
        let id_src = Matrix::identity(fp, src.dim(n));
        let mut terms = vec![Term { left: &d_out, unknown: hs[n], right: &id_src }];
        let d_in = src.diff(n);
        let id_tgt;
        if n >= 1 {
            id_tgt = Matrix::identity(fp, tgt.dim(n));
            terms.push(Term { left: &id_tgt, unknown: hs[n - 1], right: &d_in });
        }
        sys.equation(&terms, &rhs)?;
    }
    match sys.solve() {
        None => Ok(None),
        Some(mats) => Ok(Some(ChainHomotopy::new(f.clone(), g.clone(), mats)?)),
    }
}

/// Package a chain homotopy as a map off the cylinder `source ⊗ I` for the
/// standard interval: the `i0` end is `from`, the `i1` end is `to`, and the
/// `e`-component carries the sign `(-1)^{|x|}` forced by the chain-map
/// condition.
pub fn homotopy_to_interval(h: &ChainHomotopy, interval: &UnitInterval) -> ChainMap {
    let src = h.from_map.source();
    let tgt = h.from_map.target();
    let fp = src.fp();
    let i = &interval.complex;
    assert_eq!(i.dims(), &[2, 1], "interval-form conversion needs the standard shape");
    let si = tensor(src, i);
    let tb = multi_basis(&[src, i]);
    let len = si.dims().len().max(tgt.dims().len());
    let mats = (0..len)
        .map(|deg| {
            let mut m = Matrix::zeros(fp, tgt.dim(deg), si.dim(deg));
            if deg < tb.tuples.len() {
                for (col, (degs, idxs)) in tb.tuples[deg].iter().enumerate() {
                    let (p, x_idx, j) = (degs[0], idxs[0], idxs[1]);
                    if degs[1] == 0 {
                        // endpoints [0], [1]
                        let map = if j == 0 { &h.from_map } else { &h.to_map };
                        let comp = map.component(p);
                        for r in 0..comp.rows() {
                            m.set(r, col, comp.get(r, x_idx));
                        }
                    } else {
                        let sign = fp.sign(p);
                        let comp = h.component(p);
                        for r in 0..comp.rows() {
                            m.set(r, col, fp.mul(sign, comp.get(r, x_idx)));
                        }
                    }
                }
            }
            m
        })
        .collect();
    ChainMap::new_unchecked(si, tgt.clone(), mats)
}

/// Recover the chain homotopy from an interval-form map on the standard
/// interval; endpoints come back as `from = H∘(1⊗i0)` and `to = H∘(1⊗i1)`.
pub fn homotopy_from_interval(
    big: &ChainMap,
    source: &ChainComplex,
    interval: &UnitInterval,
) -> Result<ChainHomotopy> {
    let i = &interval.complex;
    if i.dims() != [2, 1] {
        return Err(Error::Validation("interval-form conversion needs the standard shape".into()));
    }
    let si = tensor(source, i);
    if big.source() != &si {
        return Err(Error::dim("interval homotopy", "source ⊗ I", "other source"));
    }
    let fp = source.fp();
    let tb = multi_basis(&[source, i]);
    let tgt = big.target().clone();
    let len = source.dims().len().max(tgt.dims().len());
    let mut from_mats = Vec::with_capacity(len);
    let mut to_mats = Vec::with_capacity(len);
    let mut comps = Vec::with_capacity(len);
    for n in 0..len {
        let mut from_m = Matrix::zeros(fp, tgt.dim(n), source.dim(n));
        let mut to_m = Matrix::zeros(fp, tgt.dim(n), source.dim(n));
        let mut h_m = Matrix::zeros(fp, tgt.dim(n + 1), source.dim(n));
        for x_idx in 0..source.dim(n) {
            let c0 = tb.index_of(n, &[n, 0], &[x_idx, 0]);
            let c1 = tb.index_of(n, &[n, 0], &[x_idx, 1]);
            let comp = big.component(n);
            for r in 0..tgt.dim(n) {
                from_m.set(r, x_idx, comp.get(r, c0));
                to_m.set(r, x_idx, comp.get(r, c1));
            }
            let ce = tb.index_of(n + 1, &[n, 1], &[x_idx, 0]);
            let compe = big.component(n + 1);
            let sign = fp.sign(n);
            for r in 0..tgt.dim(n + 1) {
                h_m.set(r, x_idx, fp.mul(sign, compe.get(r, ce)));
            }
        }
        from_mats.push(from_m);
        to_mats.push(to_m);
        comps.push(h_m);
    }
    let from_map = ChainMap::new(source.clone(), tgt.clone(), from_mats)?;
    let to_map = ChainMap::new(source.clone(), tgt, to_mats)?;
    ChainHomotopy::new(from_map, to_map, comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::rectify::standard_interval;

    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn identity_and_zero_on_disk_are_homotopic() {
        let fp = f3();
        let d = ChainComplex::disk(fp, 1);
        let h = homotopic(&ChainMap::identity(&d), &ChainMap::zero(&d, &d)).unwrap();
        assert!(h.is_some());
    }

    #[test]
    fn identity_and_zero_on_sphere_are_not() {
        let fp = f3();
        let k = ChainComplex::sphere(fp, 1);
        let h = homotopic(&ChainMap::identity(&k), &ChainMap::zero(&k, &k)).unwrap();
        assert!(h.is_none());
    }

    #[test]
    fn interval_form_round_trip() {
        let fp = f3();
        let interval = standard_interval(fp).unwrap();
        let d = ChainComplex::disk(fp, 1);
        let h = homotopic(&ChainMap::identity(&d), &ChainMap::zero(&d, &d)).unwrap().unwrap();
        let big = homotopy_to_interval(&h, &interval);
        let back = homotopy_from_interval(&big, &d, &interval).unwrap();
        assert!(back.from_map.equal_maps(&h.from_map));
        assert!(back.to_map.equal_maps(&h.to_map));
        for n in 0..3 {
            assert_eq!(back.component(n), h.component(n));
        }
    }
}
