use super::map::ChainMap;
use crate::matrix::Matrix;
use crate::solve::{AffineSystem, Term};
use crate::{Error, Result};

/// Model-structure classification of a chain map in the projective
/// structure on non-negatively graded complexes over a field:
/// cofibrations are degreewise injections, fibrations are surjections in
/// strictly positive degrees, weak equivalences are quasi-isomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapClasses {
    pub cofibration: bool,
    pub fibration: bool,
    pub weak_equivalence: bool,
}

pub fn classify_map(f: &ChainMap) -> MapClasses {
    MapClasses {
        cofibration: f.is_degreewise_injective(),
        fibration: f.is_positive_surjective(),
        weak_equivalence: f.is_quasi_iso(),
    }
}

/// Solve the lifting problem
///
/// ```text
///     a --f--> x
///     |        |
///     i        p
///     v        v
///     b --g--> y
/// ```
///
/// for `h : b -> x` with `h∘i = f`, `p∘h = g` and `h` a chain map; the
/// verdict is definitive because the combined constraints form one linear
/// system.  Errors if the square does not commute.
pub fn has_lift(i: &ChainMap, p: &ChainMap, f: &ChainMap, g: &ChainMap) -> Result<Option<ChainMap>> {
    lift_with_actions(i, p, f, g, &[])
}

/// Lifting with equivariance constraints: each entry `(rho_b, rho_x)` forces
/// `h ∘ rho_b = rho_x ∘ h` degreewise (used for group-object lifting).
pub fn has_equivariant_lift(
    i: &ChainMap,
    p: &ChainMap,
    f: &ChainMap,
    g: &ChainMap,
    actions: &[(ChainMap, ChainMap)],
) -> Result<Option<ChainMap>> {
    lift_with_actions(i, p, f, g, actions)
}

fn lift_with_actions(
    i: &ChainMap,
    p: &ChainMap,
    f: &ChainMap,
    g: &ChainMap,
    actions: &[(ChainMap, ChainMap)],
) -> Result<Option<ChainMap>> {
    let a = i.source();
    let b = i.target();
    let x = p.source();
    let y = p.target();
    if f.source() != a || f.target() != x || g.source() != b || g.target() != y {
        return Err(Error::dim("lifting square", "matching corners", "mismatched"));
    }
    if !p.compose(f).equal_maps(&g.compose(i)) {
        return Err(Error::SquareDoesNotCommute);
    }
    let fp = a.fp();
    let len = b.dims().len().max(x.dims().len()).max(a.dims().len()).max(y.dims().len());
    let mut sys = AffineSystem::new(fp);
    let hs: Vec<usize> = (0..len).map(|n| sys.unknown(x.dim(n), b.dim(n))).collect();
    for n in 0..len {
        let id_x = Matrix::identity(fp, x.dim(n));
        let id_b = Matrix::identity(fp, b.dim(n));
        // h ∘ i = f
        let i_n = i.component(n);
        sys.equation(&[Term { left: &id_x, unknown: hs[n], right: &i_n }], &f.component(n))?;
        // p ∘ h = g
        let p_n = p.component(n);
        sys.equation(&[Term { left: &p_n, unknown: hs[n], right: &id_b }], &g.component(n))?;
        // d ∘ h_n - h_{n-1} ∘ d = 0
        if n >= 1 {
            let d_x = x.diff(n);
            let d_b = b.diff(n);
            let id_prev = Matrix::identity(fp, x.dim(n - 1));
            let zero = Matrix::zeros(fp, x.dim(n - 1), b.dim(n));
            sys.equation(
                &[
                    Term { left: &d_x, unknown: hs[n], right: &id_b },
                    Term { left: &id_prev.neg(), unknown: hs[n - 1], right: &d_b },
                ],
                &zero,
            )?;
        }
        for (rho_b, rho_x) in actions {
            let rb = rho_b.component(n);
            let rx = rho_x.component(n).neg();
            let zero = Matrix::zeros(fp, x.dim(n), b.dim(n));
            sys.equation(
                &[
                    Term { left: &id_x, unknown: hs[n], right: &rb },
                    Term { left: &rx, unknown: hs[n], right: &id_b },
                ],
                &zero,
            )?;
        }
    }
    match sys.solve() {
        None => Ok(None),
        Some(mats) => {
            let h = ChainMap::new(b.clone(), x.clone(), mats)?;
            // re-validate the two triangles exactly
            debug_assert!(h.compose(i).equal_maps(f));
            debug_assert!(p.compose(&h).equal_maps(g));
            Ok(Some(h))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::complex::ChainComplex;
    use crate::field::Fp;
    use crate::rectify::standard_interval;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn classify_identity() {
        let d = ChainComplex::disk(f2(), 1);
        let c = classify_map(&ChainMap::identity(&d));
        assert!(c.cofibration && c.fibration && c.weak_equivalence);
    }

    #[test]
    fn classify_zero_into_sphere() {
        let k = ChainComplex::sphere(f2(), 1);
        let z = ChainComplex::zero(f2());
        let c = classify_map(&ChainMap::zero(&z, &k));
        assert!(c.cofibration);
        assert!(!c.weak_equivalence);
    }

    #[test]
    fn classify_interval_endpoint() {
        let i = standard_interval(f2()).unwrap();
        let c = classify_map(&i.i0);
        assert!(c.cofibration && c.weak_equivalence);
    }

    #[test]
    fn lift_through_surjective_trivial_fibration() {
        // 0 -> S against the trivial fibration (S ⊕ disk) -> S
        let fp = f2();
        let s = ChainComplex::unit(fp);
        let x = s.direct_sum(&ChainComplex::disk(fp, 1));
        let z = ChainComplex::zero(fp);
        let p = ChainMap::new(
            x.clone(),
            s.clone(),
            vec![Matrix::new(fp, 1, 2, vec![1, 0]).unwrap(), Matrix::zeros(fp, 0, 1)],
        )
        .unwrap();
        assert!(p.is_quasi_iso());
        let i = ChainMap::zero(&z, &s);
        let f = ChainMap::zero(&z, &x);
        let g = ChainMap::identity(&s);
        let h = has_lift(&i, &p, &f, &g).unwrap();
        assert!(h.is_some());
    }

    #[test]
    fn no_lift_through_zero() {
        let fp = f2();
        let s = ChainComplex::unit(fp);
        let z = ChainComplex::zero(fp);
        let p = ChainMap::zero(&z, &s);
        let i = ChainMap::zero(&z, &s);
        let f = ChainMap::zero(&z, &z);
        let g = ChainMap::identity(&s);
        assert!(has_lift(&i, &p, &f, &g).unwrap().is_none());
    }

    #[test]
    fn endpoint_inclusion_lifts_against_trivial_fibrations() {
        // i0 : S -> I is a trivial cofibration, so it lifts against any
        // surjective quasi-isomorphism
        let fp = f2();
        let interval = standard_interval(fp).unwrap();
        let s = ChainComplex::unit(fp);
        let x = ChainComplex::disk(fp, 1).direct_sum(&s);
        let p = ChainMap::new(
            x.clone(),
            s.clone(),
            vec![Matrix::new(fp, 1, 2, vec![0, 1]).unwrap(), Matrix::zeros(fp, 0, 1)],
        )
        .unwrap();
        assert!(p.is_quasi_iso() && p.is_positive_surjective());
        let f = ChainMap::new(
            s.clone(),
            x.clone(),
            vec![Matrix::new(fp, 2, 1, vec![0, 1]).unwrap(), Matrix::zeros(fp, 1, 0)],
        )
        .unwrap();
        let g = p.compose(&f).compose(&interval.pi.clone());
        let h = has_lift(&interval.i0, &p, &f, &g).unwrap();
        assert!(h.is_some());
    }

    #[test]
    fn lift_completeness_against_exhaustive_search() {
        // agreement with brute force over all matrix assignments, for
        // small complexes over F_2
        let fp = f2();
        let complexes = [
            ChainComplex::unit(fp),
            ChainComplex::sphere(fp, 1),
            ChainComplex::disk(fp, 1),
        ];
        for a in &complexes {
            for b in &complexes {
                for x in &complexes {
                    for y in &complexes {
                        let maps_ab = all_maps(a, b);
                        let maps_xy = all_maps(x, y);
                        for i in &maps_ab {
                            for p in &maps_xy {
                                for f in all_maps(a, x) {
                                    for g in all_maps(b, y) {
                                        if !p.compose(&f).equal_maps(&g.compose(i)) {
                                            continue;
                                        }
                                        let got = has_lift(i, p, &f, &g).unwrap().is_some();
                                        let brute = all_maps(b, x).into_iter().any(|h| {
                                            h.compose(i).equal_maps(&f) && p.compose(&h).equal_maps(&g)
                                        });
                                        assert_eq!(got, brute);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    /// every chain map between two small complexes over F_2
    fn all_maps(src: &ChainComplex, tgt: &ChainComplex) -> Vec<ChainMap> {
        let fp = src.fp();
        let len = src.dims().len().max(tgt.dims().len());
        let sizes: Vec<(usize, usize)> = (0..len).map(|n| (tgt.dim(n), src.dim(n))).collect();
        let total: usize = sizes.iter().map(|(r, c)| r * c).sum();
        let mut out = Vec::new();
        for bits in 0..(1u64 << total) {
            let mut offset = 0;
            let mats: Vec<Matrix> = sizes
                .iter()
                .map(|&(r, c)| {
                    let data: Vec<u64> = (0..r * c).map(|k| (bits >> (offset + k)) & 1).collect();
                    offset += r * c;
                    Matrix::new(fp, r, c, data).unwrap()
                })
                .collect();
            if let Ok(m) = ChainMap::new(src.clone(), tgt.clone(), mats) {
                out.push(m);
            }
        }
        out
    }
}
