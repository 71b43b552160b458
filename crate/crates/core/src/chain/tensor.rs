use super::complex::ChainComplex;
use super::map::ChainMap;
use crate::matrix::Matrix;
use std::collections::HashMap;

/// Basis bookkeeping for left-nested tensor products.
///
/// The basis of `(F_1 ⊗ ... ⊗ F_m)_n` (nested as `((F_1⊗F_2)⊗F_3)...`) in
/// a given total degree is the list of pairs `(degree tuple, index tuple)`;
/// the ordering is the one produced by iterating the binary tensor, i.e.
/// prefix degree ascending, then prefix basis order, then last index.
/// All canonical isomorphisms in the crate are permutation(-with-sign)
/// matrices expressed against these fixed enumerations.
#[derive(Clone)]
pub struct MultiBasis {
    factor_dims: Vec<Vec<usize>>,
    /// per total degree: ordered tuples
    pub tuples: Vec<Vec<(Vec<usize>, Vec<usize>)>>,
    lookup: Vec<HashMap<(Vec<usize>, Vec<usize>), usize>>,
}

impl MultiBasis {
    pub fn dim(&self, n: usize) -> usize {
        self.tuples.get(n).map(|t| t.len()).unwrap_or(0)
    }

    pub fn index_of(&self, n: usize, degs: &[usize], idxs: &[usize]) -> usize {
        self.lookup[n][&(degs.to_vec(), idxs.to_vec())]
    }

    pub fn max_degree(&self) -> usize {
        self.tuples.len().saturating_sub(1)
    }

    pub fn factor_count(&self) -> usize {
        self.factor_dims.len()
    }
}

/// Enumerate the left-nested basis for a list of factors.
pub fn multi_basis(factors: &[&ChainComplex]) -> MultiBasis {
    assert!(!factors.is_empty(), "multi_basis needs at least one factor");
    let factor_dims: Vec<Vec<usize>> = factors.iter().map(|f| f.dims().to_vec()).collect();
    let max: usize = factors.iter().map(|f| f.dims().len().saturating_sub(1)).sum();
    let mut tuples: Vec<Vec<(Vec<usize>, Vec<usize>)>> = vec![Vec::new(); max + 1];

    // degree-by-degree recursion on the number of factors
    let first = &factor_dims[0];
    for (d, &k) in first.iter().enumerate() {
        for i in 0..k {
            tuples[d].push((vec![d], vec![i]));
        }
    }
    for f in &factor_dims[1..] {
        let mut next: Vec<Vec<(Vec<usize>, Vec<usize>)>> = vec![Vec::new(); max + 1];
        for n in 0..=max {
            for m in 0..=n {
                let last_deg = n - m;
                let last_dim = f.get(last_deg).copied().unwrap_or(0);
                if last_dim == 0 {
                    continue;
                }
                for (degs, idxs) in &tuples[m] {
                    for j in 0..last_dim {
                        let mut nd = degs.clone();
                        let mut ni = idxs.clone();
                        nd.push(last_deg);
                        ni.push(j);
                        next[n].push((nd, ni));
                    }
                }
            }
        }
        tuples = next;
    }

    let lookup = tuples
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .map(|(i, t)| (t.clone(), i))
                .collect::<HashMap<_, _>>()
        })
        .collect();
    MultiBasis { factor_dims, tuples, lookup }
}

/// Graded tensor product with the Koszul differential
/// `d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy`.
pub fn tensor(a: &ChainComplex, b: &ChainComplex) -> ChainComplex {
    assert_eq!(a.fp(), b.fp(), "tensor field");
    let fp = a.fp();
    if a.is_zero_complex() || b.is_zero_complex() {
        return ChainComplex::zero(fp);
    }
    let basis = multi_basis(&[a, b]);
    let len = basis.max_degree() + 1;
    let dims: Vec<usize> = (0..len).map(|n| basis.dim(n)).collect();
    let mut diffs = Vec::with_capacity(len);
    for n in 0..len {
        let rows = if n == 0 { 0 } else { dims[n - 1] };
        let mut d = Matrix::zeros(fp, rows, dims[n]);
        if n > 0 {
            let da = |p: usize| a.diff(p);
            let db = |q: usize| b.diff(q);
            for (col, (degs, idxs)) in basis.tuples[n].iter().enumerate() {
                let (p, i, j) = (degs[0], idxs[0], idxs[1]);
                let q = n - p;
                // dx ⊗ y
                if p > 0 {
                    let m = da(p);
                    for r in 0..a.dim(p - 1) {
                        let c = m.get(r, i);
                        if c != 0 {
                            let row = basis.index_of(n - 1, &[p - 1, q], &[r, j]);
                            d.set(row, col, fp.add(d.get(row, col), c));
                        }
                    }
                }
                // (-1)^p x ⊗ dy
                if q > 0 {
                    let sign = fp.sign(p);
                    let m = db(q);
                    for r in 0..b.dim(q - 1) {
                        let c = m.get(r, j);
                        if c != 0 {
                            let row = basis.index_of(n - 1, &[p, q - 1], &[i, r]);
                            d.set(row, col, fp.add(d.get(row, col), fp.mul(sign, c)));
                        }
                    }
                }
            }
        }
        diffs.push(d);
    }
    ChainComplex::new(fp, dims, diffs).expect("tensor differential squares to zero")
}

/// Left-nested tensor power `x^{⊗m}`; the empty power is the unit.
pub fn tensor_power(x: &ChainComplex, m: usize) -> ChainComplex {
    if m == 0 {
        return ChainComplex::unit(x.fp());
    }
    let mut acc = x.clone();
    for _ in 1..m {
        acc = tensor(&acc, x);
    }
    acc
}

/// Tensor product of chain maps (degree-0 operators carry no Koszul sign).
pub fn tensor_map(f: &ChainMap, g: &ChainMap) -> ChainMap {
    let source = tensor(f.source(), g.source());
    let target = tensor(f.target(), g.target());
    let fp = source.fp();
    let sb = multi_basis(&[f.source(), g.source()]);
    let tb = multi_basis(&[f.target(), g.target()]);
    let len = source.dims().len().max(target.dims().len());
    let mats = (0..len)
        .map(|n| {
            let mut m = Matrix::zeros(fp, target.dim(n), source.dim(n));
            if n < sb.tuples.len() {
                for (col, (degs, idxs)) in sb.tuples[n].iter().enumerate() {
                    let (p, i, j) = (degs[0], idxs[0], idxs[1]);
                    let q = n - p;
                    let fm = f.component(p);
                    let gm = g.component(q);
                    for r in 0..fm.rows() {
                        let fc = fm.get(r, i);
                        if fc == 0 {
                            continue;
                        }
                        for s in 0..gm.rows() {
                            let gc = gm.get(s, j);
                            if gc != 0 {
                                let row = tb.index_of(n, &[p, q], &[r, s]);
                                m.set(row, col, fp.add(m.get(row, col), fp.mul(fc, gc)));
                            }
                        }
                    }
                }
            }
            m
        })
        .collect();
    ChainMap::new_unchecked(source, target, mats)
}

/// The commutativity isomorphism `a⊗b -> b⊗a`, `x⊗y ↦ (-1)^{|x||y|} y⊗x`.
pub fn twist(a: &ChainComplex, b: &ChainComplex) -> ChainMap {
    let source = tensor(a, b);
    let target = tensor(b, a);
    let fp = source.fp();
    let sb = multi_basis(&[a, b]);
    let tb = multi_basis(&[b, a]);
    let len = source.dims().len();
    let mats = (0..len)
        .map(|n| {
            let mut m = Matrix::zeros(fp, target.dim(n), source.dim(n));
            if n < sb.tuples.len() {
                for (col, (degs, idxs)) in sb.tuples[n].iter().enumerate() {
                    let (p, i, j) = (degs[0], idxs[0], idxs[1]);
                    let q = n - p;
                    let row = tb.index_of(n, &[q, p], &[j, i]);
                    m.set(row, col, fp.sign(p * q));
                }
            }
            m
        })
        .collect();
    ChainMap::new_unchecked(source, target, mats)
}

/// Permute the factors of a left-nested tensor with Koszul signs.
///
/// `perm[t]` is the position factor `t` moves to.  The sign on a basis
/// element is `(-1)` to the sum of `deg_t * deg_u` over inverted pairs.
pub fn factor_permutation(factors: &[&ChainComplex], perm: &[usize]) -> ChainMap {
    assert_eq!(factors.len(), perm.len(), "permutation length");
    let m = factors.len();
    let mut inv = vec![0usize; m];
    for (t, &s) in perm.iter().enumerate() {
        inv[s] = t;
    }
    let target_factors: Vec<&ChainComplex> = inv.iter().map(|&t| factors[t]).collect();
    let source = nest(factors);
    let target = nest(&target_factors);
    let fp = source.fp();
    let sb = multi_basis(factors);
    let tb = multi_basis(&target_factors);
    let len = source.dims().len();
    let mats = (0..len)
        .map(|n| {
            let mut mat = Matrix::zeros(fp, target.dim(n), source.dim(n));
            if n < sb.tuples.len() {
                for (col, (degs, idxs)) in sb.tuples[n].iter().enumerate() {
                    let mut nd = vec![0usize; m];
                    let mut ni = vec![0usize; m];
                    for t in 0..m {
                        nd[perm[t]] = degs[t];
                        ni[perm[t]] = idxs[t];
                    }
                    let mut sign_exp = 0usize;
                    for t in 0..m {
                        for u in t + 1..m {
                            if perm[t] > perm[u] {
                                sign_exp += degs[t] * degs[u];
                            }
                        }
                    }
                    let row = tb.index_of(n, &nd, &ni);
                    mat.set(row, col, fp.sign(sign_exp));
                }
            }
            mat
        })
        .collect();
    ChainMap::new_unchecked(source, target, mats)
}

/// Move a trailing block of factors past a leading block:
/// `(A_1..A_r, B_1..B_s) -> (B_1..B_s, A_1..A_r)` with the block Koszul sign.
pub fn block_twist(left: &[&ChainComplex], right: &[&ChainComplex]) -> ChainMap {
    let mut factors: Vec<&ChainComplex> = left.to_vec();
    factors.extend_from_slice(right);
    let r = left.len();
    let s = right.len();
    let perm: Vec<usize> = (0..r).map(|t| t + s).chain((0..s).map(|t| t)).collect();
    factor_permutation(&factors, &perm)
}

/// Apply a degree-0 map on a contiguous range of factors, identity outside:
/// `F_0..(F_a..F_b)..F_m -> F_0..T..F_m` where `map : nest(F_a..F_b) -> T`.
pub fn apply_on_factors(
    factors: &[&ChainComplex],
    range: std::ops::Range<usize>,
    map: &ChainMap,
) -> ChainMap {
    let inner: Vec<&ChainComplex> = factors[range.clone()].to_vec();
    assert_eq!(&nest(&inner), map.source(), "apply_on_factors: map source must be the nested range");
    let mut target_factors: Vec<&ChainComplex> = factors[..range.start].to_vec();
    target_factors.push(map.target());
    target_factors.extend_from_slice(&factors[range.end..]);

    let source = nest(factors);
    let target = nest(&target_factors);
    let fp = source.fp();
    let sb = multi_basis(factors);
    let ib = multi_basis(&inner);
    let tb = multi_basis(&target_factors);
    let len = source.dims().len().max(target.dims().len());
    let mats = (0..len)
        .map(|n| {
            let mut mat = Matrix::zeros(fp, target.dim(n), source.dim(n));
            if n < sb.tuples.len() {
                for (col, (degs, idxs)) in sb.tuples[n].iter().enumerate() {
                    let ideg: usize = degs[range.clone()].iter().sum();
                    let irow_idx = ib.index_of(
                        ideg,
                        &degs[range.clone()],
                        &idxs[range.clone()],
                    );
                    let comp = map.component(ideg);
                    for out in 0..comp.rows() {
                        let c = comp.get(out, irow_idx);
                        if c == 0 {
                            continue;
                        }
                        let mut nd: Vec<usize> = degs[..range.start].to_vec();
                        let mut ni: Vec<usize> = idxs[..range.start].to_vec();
                        nd.push(ideg);
                        ni.push(out);
                        nd.extend_from_slice(&degs[range.end..]);
                        ni.extend_from_slice(&idxs[range.end..]);
                        let row = tb.index_of(n, &nd, &ni);
                        mat.set(row, col, fp.add(mat.get(row, col), c));
                    }
                }
            }
            mat
        })
        .collect();
    ChainMap::new_unchecked(source, target, mats)
}

/// Apply an endomorphism of a contiguous factor range in place: the map
/// must send `nest(factors[range])` to itself, and the output is an
/// endomorphism of `nest(factors)` with the range's factor structure kept
/// flat (no regrouping).
pub fn apply_endo_on_factors(
    factors: &[&ChainComplex],
    range: std::ops::Range<usize>,
    map: &ChainMap,
) -> ChainMap {
    let inner: Vec<&ChainComplex> = factors[range.clone()].to_vec();
    let nested = nest(&inner);
    assert_eq!(&nested, map.source(), "apply_endo_on_factors: source");
    assert_eq!(&nested, map.target(), "apply_endo_on_factors: target");
    let whole = nest(factors);
    let fp = whole.fp();
    let fb = multi_basis(factors);
    let ib = multi_basis(&inner);
    let len = whole.dims().len();
    let mats = (0..len)
        .map(|n| {
            let mut m = Matrix::zeros(fp, whole.dim(n), whole.dim(n));
            if n < fb.tuples.len() {
                for (col, (degs, idxs)) in fb.tuples[n].iter().enumerate() {
                    let ideg: usize = degs[range.clone()].iter().sum();
                    let src_inner = ib.index_of(ideg, &degs[range.clone()], &idxs[range.clone()]);
                    let comp = map.component(ideg);
                    for out in 0..comp.rows() {
                        let c = comp.get(out, src_inner);
                        if c == 0 {
                            continue;
                        }
                        let (od, oi) = &ib.tuples[ideg][out];
                        let mut nd: Vec<usize> = degs[..range.start].to_vec();
                        let mut ni: Vec<usize> = idxs[..range.start].to_vec();
                        nd.extend_from_slice(od);
                        ni.extend_from_slice(oi);
                        nd.extend_from_slice(&degs[range.end..]);
                        ni.extend_from_slice(&idxs[range.end..]);
                        let row = fb.index_of(n, &nd, &ni);
                        m.set(row, col, fp.add(m.get(row, col), c));
                    }
                }
            }
            m
        })
        .collect();
    ChainMap::new_unchecked(whole.clone(), whole, mats)
}

/// The regrouping isomorphism that expands one factor (itself a left-nested
/// product of `inner`) into its parts: `nest(outer) -> nest(expanded)`.
/// A pure reindexing with no Koszul signs.
pub fn split_factor(outer: &[&ChainComplex], pos: usize, inner: &[&ChainComplex]) -> ChainMap {
    assert_eq!(&nest(inner), outer[pos], "split_factor: factor must be the nested inner list");
    let mut expanded: Vec<&ChainComplex> = outer[..pos].to_vec();
    expanded.extend_from_slice(inner);
    expanded.extend_from_slice(&outer[pos + 1..]);
    let source = nest(outer);
    let target = nest(&expanded);
    let fp = source.fp();
    let ob = multi_basis(outer);
    let ib = multi_basis(inner);
    let eb = multi_basis(&expanded);
    let len = source.dims().len();
    let mats = (0..len)
        .map(|n| {
            let mut m = Matrix::zeros(fp, target.dim(n), source.dim(n));
            if n < ob.tuples.len() {
                for (col, (degs, idxs)) in ob.tuples[n].iter().enumerate() {
                    let (id, ii) = &ib.tuples[degs[pos]][idxs[pos]];
                    let mut nd: Vec<usize> = degs[..pos].to_vec();
                    let mut ni: Vec<usize> = idxs[..pos].to_vec();
                    nd.extend_from_slice(id);
                    ni.extend_from_slice(ii);
                    nd.extend_from_slice(&degs[pos + 1..]);
                    ni.extend_from_slice(&idxs[pos + 1..]);
                    let row = eb.index_of(n, &nd, &ni);
                    m.set(row, col, 1);
                }
            }
            m
        })
        .collect();
    ChainMap::new_unchecked(source, target, mats)
}

/// Left-nested product of a factor list (unit for the empty list).
pub fn nest(factors: &[&ChainComplex]) -> ChainComplex {
    match factors.len() {
        0 => panic!("nest of no factors"),
        1 => factors[0].clone(),
        _ => {
            let mut acc = factors[0].clone();
            for f in &factors[1..] {
                acc = tensor(&acc, f);
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::rectify::standard_interval;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }
    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn unit_laws_are_equalities() {
        let fp = f2();
        let s = ChainComplex::unit(fp);
        let x = ChainComplex::disk(fp, 2);
        assert_eq!(tensor(&s, &x), x);
        assert_eq!(tensor(&x, &s), x);
    }

    #[test]
    fn k_tensor_k_one_generator_degree_2() {
        let k = ChainComplex::sphere(f3(), 1);
        let kk = tensor(&k, &k);
        assert_eq!(kk.dims(), &[0, 0, 1]);
        assert!(kk.diff(2).is_zero());
    }

    #[test]
    fn interval_square_dims() {
        let i = standard_interval(f2()).unwrap().complex;
        let ii = tensor(&i, &i);
        assert_eq!(ii.dims(), &[4, 4, 1]);
    }

    #[test]
    fn twist_sign_on_k_k() {
        let k = ChainComplex::sphere(f3(), 1);
        let t = twist(&k, &k);
        // Koszul sign (-1)^{1*1} = -1 on the single degree-2 generator
        assert_eq!(t.component(2).get(0, 0), f3().neg(1));
    }

    #[test]
    fn twist_with_unit_is_identity_shaped() {
        let fp = f3();
        let s = ChainComplex::unit(fp);
        let x = ChainComplex::disk(fp, 1);
        let t = twist(&s, &x);
        assert!(t.is_degreewise_iso());
        for n in 0..2 {
            assert!(t.component(n).is_identity());
        }
    }

    #[test]
    fn twist_is_involution() {
        let fp = f3();
        let a = ChainComplex::disk(fp, 1);
        let b = ChainComplex::sphere(fp, 1);
        let ab = twist(&a, &b);
        let ba = twist(&b, &a);
        assert!(ba.compose(&ab).is_identity_map());
    }

    #[test]
    fn dims_convolve() {
        let fp = f2();
        let a = ChainComplex::disk(fp, 1);
        let b = ChainComplex::disk(fp, 2);
        let t = tensor(&a, &b);
        for n in 0..t.dims().len() {
            let expect: usize = (0..=n).map(|p| a.dim(p) * b.dim(n - p)).sum();
            assert_eq!(t.dim(n), expect);
        }
    }

    #[test]
    fn associator_permutation_is_chain_iso() {
        let fp = f3();
        let i = standard_interval(fp).unwrap().complex;
        let k = ChainComplex::sphere(fp, 1);
        // cycle three factors and back
        let c = factor_permutation(&[&i, &k, &i], &[1, 2, 0]);
        let c_inv = factor_permutation(&[&i, &i, &k], &[2, 0, 1]);
        assert!(c_inv.compose(&c).is_identity_map());
    }

    #[test]
    fn apply_on_factors_matches_tensor_map() {
        let fp = f3();
        let k = ChainComplex::sphere(fp, 1);
        let i = standard_interval(fp).unwrap();
        // collapsing the middle interval factor with pi
        let via_apply = apply_on_factors(&[&k, &i.complex, &k], 1..2, &i.pi);
        let lhs = tensor_map(&tensor_map(&ChainMap::identity(&k), &i.pi), &ChainMap::identity(&k));
        assert!(via_apply.equal_maps(&lhs));
    }
}
