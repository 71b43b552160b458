//! Unit intervals, cylinder squares and homotopy rectification: the
//! machinery that turns levelwise-homotopy-commuting data into strict maps
//! of spectra, and the comparison of the twisted and untwisted suspensions.

use crate::chain::{
    apply_on_factors, factor_permutation, homotopic, induced_from_quotient, multi_basis, pushout,
    split_factor, tensor, tensor_map, tensor_power, ChainComplex, ChainMap,
};
use crate::field::Fp;
use crate::matrix::Matrix;
use crate::spectra::{Spectrum, SpectrumMap};
use crate::{Error, Result};

/// A unit interval: a cylinder object for the monoidal unit together with a
/// contraction `H : I ⊗ I -> I`.
///
/// Validated identities (exact matrix equalities): `pi∘i0 = pi∘i1 = id`,
/// `i0 ⊔ i1` degreewise injective, `pi` a quasi-isomorphism,
/// `H∘(1⊗i0) = H∘(i0⊗1) = i0∘pi`, `H∘(1⊗i1) = id`, and additionally
/// `H∘(i1⊗1) = id`, which the standard interval satisfies and which makes
/// glued contractions close up under amalgamation.
#[derive(Clone)]
pub struct UnitInterval {
    pub complex: ChainComplex,
    pub i0: ChainMap,
    pub i1: ChainMap,
    pub pi: ChainMap,
    pub h: ChainMap,
}

impl UnitInterval {
    pub fn new(
        complex: ChainComplex,
        i0: ChainMap,
        i1: ChainMap,
        pi: ChainMap,
        h: ChainMap,
    ) -> Result<UnitInterval> {
        let it = UnitInterval { complex, i0, i1, pi, h };
        it.validate()?;
        Ok(it)
    }

    fn validate(&self) -> Result<()> {
        let s = ChainComplex::unit(self.complex.fp());
        let id_s = ChainMap::identity(&s);
        if !self.pi.compose(&self.i0).equal_maps(&id_s) || !self.pi.compose(&self.i1).equal_maps(&id_s) {
            return Err(Error::Validation("interval endpoints do not split the projection".into()));
        }
        let ends = self.i0.component(0).hstack(&self.i1.component(0));
        if !ends.is_injective() {
            return Err(Error::Validation("interval endpoints are not jointly injective".into()));
        }
        if !self.pi.is_quasi_iso() {
            return Err(Error::Validation("interval projection is not a quasi-isomorphism".into()));
        }
        let i = &self.complex;
        let id_i = ChainMap::identity(i);
        let collapse = self.i0.compose(&self.pi);
        if !self.h.compose(&end_second(i, &self.i0)).equal_maps(&collapse)
            || !self.h.compose(&end_first(i, &self.i0)).equal_maps(&collapse)
        {
            return Err(Error::Validation("contraction does not collapse the 0 end".into()));
        }
        if !self.h.compose(&end_second(i, &self.i1)).equal_maps(&id_i) {
            return Err(Error::Validation("contraction is not the identity at the 1 end".into()));
        }
        if !self.h.compose(&end_first(i, &self.i1)).equal_maps(&id_i) {
            return Err(Error::Validation("contraction is not the identity on the 1 slice".into()));
        }
        Ok(())
    }
}

/// `1_I ⊗ e : I = I⊗S -> I⊗I` for an endpoint `e : S -> I`.
fn end_second(i: &ChainComplex, e: &ChainMap) -> ChainMap {
    tensor_map(&ChainMap::identity(i), e)
}

/// `e ⊗ 1_I : I = S⊗I -> I⊗I`.
fn end_first(i: &ChainComplex, e: &ChainMap) -> ChainMap {
    tensor_map(e, &ChainMap::identity(i))
}

/// The standard interval: generators `[0], [1]` in degree 0 and `e` in
/// degree 1 with `de = [1] - [0]`; the contraction follows the min rule
/// (`[a]⊗[b] ↦ [min(a,b)]`, `e⊗[1] ↦ e`, `[1]⊗e ↦ e`, everything else
/// touching the 0 end dies).
pub fn standard_interval(fp: Fp) -> Result<UnitInterval> {
    let dims = vec![2, 1];
    let d1 = Matrix::from_i64(fp, 2, 1, &[-1, 1])?;
    let diffs = vec![Matrix::zeros(fp, 0, 2), d1];
    let i = ChainComplex::new(fp, dims, diffs)?;
    let s = ChainComplex::unit(fp);
    let i0 = ChainMap::new(
        s.clone(),
        i.clone(),
        vec![Matrix::from_i64(fp, 2, 1, &[1, 0])?, Matrix::zeros(fp, 1, 0)],
    )?;
    let i1 = ChainMap::new(
        s.clone(),
        i.clone(),
        vec![Matrix::from_i64(fp, 2, 1, &[0, 1])?, Matrix::zeros(fp, 1, 0)],
    )?;
    let pi = ChainMap::new(
        i.clone(),
        s,
        vec![Matrix::from_i64(fp, 1, 2, &[1, 1])?, Matrix::zeros(fp, 0, 1)],
    )?;
    // (I⊗I)_0 basis: [0][0],[0][1],[1][0],[1][1];
    // (I⊗I)_1 basis: [0]e,[1]e,e[0],e[1];  (I⊗I)_2 basis: ee
    let h0 = Matrix::from_i64(fp, 2, 4, &[1, 1, 1, 0, 0, 0, 0, 1])?;
    let h1 = Matrix::from_i64(fp, 1, 4, &[0, 1, 0, 1])?;
    let h2 = Matrix::zeros(fp, 0, 1);
    let ii = tensor(&i, &i);
    let h = ChainMap::new(ii, i.clone(), vec![h0, h1, h2])?;
    UnitInterval::new(i, i0, i1, pi, h)
}

/// The reversal of the standard interval, `[0]↔[1]`, `e ↦ -e`.
pub fn reverse_standard_interval(interval: &UnitInterval) -> Result<ChainMap> {
    let i = &interval.complex;
    if i.dims() != [2, 1] {
        return Err(Error::Validation("reversal needs the standard interval shape".into()));
    }
    let fp = i.fp();
    let m0 = Matrix::from_i64(fp, 2, 2, &[0, 1, 1, 0])?;
    let m1 = Matrix::from_i64(fp, 1, 1, &[-1])?;
    ChainMap::new(i.clone(), i.clone(), vec![m0, m1])
}

/// A certificate that the suspension object is symmetric: an interval
/// homotopy on `k^{⊗3}` from the cyclic permutation (the `i0` end) to the
/// identity (the `i1` end).
#[derive(Clone)]
pub struct SymmetryCertificate {
    pub k: ChainComplex,
    pub interval: UnitInterval,
    /// `k^{⊗3} ⊗ I -> k^{⊗3}`
    pub homotopy: ChainMap,
}

/// The cyclic permutation on `k^{⊗3}` bringing the last factor to the
/// front, with Koszul signs; this is exactly how the twisted and untwisted
/// double suspensions of a spectrum differ.
pub fn cyclic_permutation(k: &ChainComplex) -> ChainMap {
    factor_permutation(&[k, k, k], &[1, 2, 0])
}

/// Certify the suspension object as symmetric, or return `None` when no
/// chain homotopy from the cyclic permutation to the identity exists.
pub fn certify_symmetric(k: &ChainComplex) -> Result<Option<SymmetryCertificate>> {
    let interval = standard_interval(k.fp())?;
    let c = cyclic_permutation(k);
    let id = ChainMap::identity(c.source());
    let Some(h) = homotopic(&c, &id)? else {
        return Ok(None);
    };
    let big = crate::chain::homotopy_to_interval(&h, &interval);
    let k3 = c.source();
    let at0 = big.compose(&tensor_map(&ChainMap::identity(k3), &interval.i0));
    let at1 = big.compose(&tensor_map(&ChainMap::identity(k3), &interval.i1));
    if !at0.equal_maps(&c) || !at1.equal_maps(&id) {
        return Err(Error::EndpointMismatch("symmetry certificate"));
    }
    Ok(Some(SymmetryCertificate { k: k.clone(), interval, homotopy: big }))
}

/// Output of the cylinder square construction.
pub struct CylinderSquare {
    /// the mapping cylinder `b' = b ⊔_a (a ⊗ I)`
    pub b_prime: ChainComplex,
    /// collapse `q : b' -> b`, a quasi-isomorphism
    pub q: ChainMap,
    /// the relocated left leg `r' : a -> b'` with `q ∘ r' = r`
    pub r_prime: ChainMap,
    /// the straightened bottom map `g' : b' -> y` with `g' ∘ r' = s ∘ f`
    pub g_prime: ChainMap,
    /// homotopy `b' ⊗ I -> y` from `g∘q` (i0 end) to `g'` (i1 end)
    pub h_prime: ChainMap,
    /// the cylinder inclusion `b -> b'`
    pub j: ChainMap,
    /// the body inclusion `a ⊗ I -> b'`
    pub body: ChainMap,
}

/// Replace a homotopy-commuting square by a strictly commuting one.
///
/// Input: `f : a -> x`, `r : a -> b`, `s : x -> y`, `g : b -> y` and a
/// homotopy `h_big : a⊗I -> y` from `g∘r` (i0) to `s∘f` (i1).  The output
/// square has `b` replaced by the mapping cylinder of `r`; every advertised
/// identity is re-validated before returning.
pub fn mapping_cylinder_square(
    f: &ChainMap,
    r: &ChainMap,
    s: &ChainMap,
    g: &ChainMap,
    h_big: &ChainMap,
    interval: &UnitInterval,
) -> Result<CylinderSquare> {
    let a = f.source().clone();
    let b = r.target().clone();
    let y = g.target().clone();
    let i = &interval.complex;
    let a_i = tensor(&a, i);
    if h_big.source() != &a_i || h_big.target() != &y {
        return Err(Error::dim("cylinder homotopy", "a ⊗ I -> y", "other"));
    }
    let id_a = ChainMap::identity(&a);
    let at0 = h_big.compose(&tensor_map(&id_a, &interval.i0));
    let at1 = h_big.compose(&tensor_map(&id_a, &interval.i1));
    if !at0.equal_maps(&g.compose(r)) {
        return Err(Error::EndpointMismatch("cylinder square: i0 end must be g∘r"));
    }
    if !at1.equal_maps(&s.compose(f)) {
        return Err(Error::EndpointMismatch("cylinder square: i1 end must be s∘f"));
    }

    let incl0 = tensor_map(&id_a, &interval.i0);
    let po = pushout(r, &incl0)?;
    let b_prime = po.quotient.complex.clone();
    let j = po.left.clone();
    let body = po.right.clone();

    let collapse = r.compose(&tensor_map(&id_a, &interval.pi));
    let q = induced_from_quotient(&po.quotient, &stack_cone(&b, &a_i, &ChainMap::identity(&b), &collapse, &b)?)?;
    let r_prime = body.compose(&tensor_map(&id_a, &interval.i1));
    let g_prime = induced_from_quotient(&po.quotient, &stack_cone(&b, &a_i, g, h_big, &y)?)?;

    // H' : constant g∘(1⊗pi) on the b half, the contracted homotopy
    // h ∘ (1 ⊗ H_I) on the cylinder body; assembled on the ambient sum and
    // pushed through the quotient presentation of b' ⊗ I
    let h_prime = {
        let fp = a.fp();
        let ambient = po.quotient.ambient.clone();
        let amb_i = tensor(&ambient, i);
        let const_b = g.compose(&tensor_map(&ChainMap::identity(&b), &interval.pi));
        let contracted = h_big.compose(&apply_on_factors(&[&a, i, i], 1..3, &interval.h));
        let amb_basis = multi_basis(&[&ambient, i]);
        let b_basis = multi_basis(&[&b, i]);
        let ai_basis = multi_basis(&[&a_i, i]);
        let len = amb_i.dims().len().max(y.dims().len());
        let mats: Vec<Matrix> = (0..len)
            .map(|deg| {
                let mut m = Matrix::zeros(fp, y.dim(deg), amb_i.dim(deg));
                if deg < amb_basis.tuples.len() {
                    for (col, (degs, idxs)) in amb_basis.tuples[deg].iter().enumerate() {
                        let (p, v, w) = (degs[0], idxs[0], idxs[1]);
                        let qdeg = deg - p;
                        let bdim = b.dim(p);
                        let (comp, src) = if v < bdim {
                            (const_b.component(deg), b_basis.index_of(deg, &[p, qdeg], &[v, w]))
                        } else {
                            (contracted.component(deg), ai_basis.index_of(deg, &[p, qdeg], &[v - bdim, w]))
                        };
                        for row in 0..comp.rows() {
                            let c = comp.get(row, src);
                            if c != 0 {
                                m.set(row, col, fp.add(m.get(row, col), c));
                            }
                        }
                    }
                }
                m
            })
            .collect();
        let pair = ChainMap::new(amb_i, y.clone(), mats)?;
        let proj_i = tensor_map(&po.quotient.proj, &ChainMap::identity(i));
        let bp_i = tensor(&b_prime, i);
        let hmats: Vec<Matrix> = (0..bp_i.dims().len())
            .map(|deg| pair.component(deg).mul(&section_for(&proj_i, deg)))
            .collect();
        let cand = ChainMap::new(bp_i, y.clone(), hmats)?;
        if !cand.compose(&proj_i).equal_maps(&pair) {
            return Err(Error::Validation("cylinder homotopy does not descend".into()));
        }
        cand
    };

    if !q.is_quasi_iso() {
        return Err(Error::Validation("cylinder collapse is not a quasi-isomorphism".into()));
    }
    if !q.compose(&r_prime).equal_maps(r) {
        return Err(Error::Validation("q ∘ r' differs from r".into()));
    }
    if !g_prime.compose(&r_prime).equal_maps(&s.compose(f)) {
        return Err(Error::Validation("g' ∘ r' differs from s ∘ f".into()));
    }
    let id_bp = ChainMap::identity(&b_prime);
    let hp0 = h_prime.compose(&tensor_map(&id_bp, &interval.i0));
    let hp1 = h_prime.compose(&tensor_map(&id_bp, &interval.i1));
    if !hp0.equal_maps(&g.compose(&q)) || !hp1.equal_maps(&g_prime) {
        return Err(Error::Validation("straightening homotopy has wrong endpoints".into()));
    }
    Ok(CylinderSquare { b_prime, q, r_prime, g_prime, h_prime, j, body })
}

/// Map out of a direct sum from maps on the two summands.
fn stack_cone(
    left: &ChainComplex,
    right: &ChainComplex,
    on_left: &ChainMap,
    on_right: &ChainMap,
    target: &ChainComplex,
) -> Result<ChainMap> {
    let sum = left.direct_sum(right);
    let len = sum.dims().len().max(target.dims().len());
    let mats = (0..len)
        .map(|d| on_left.component(d).hstack(&on_right.component(d)))
        .collect();
    ChainMap::new(sum, target.clone(), mats)
}

/// A right inverse of a degreewise-surjective map's component.
fn section_for(proj: &ChainMap, deg: usize) -> Matrix {
    let m = proj.component(deg);
    m.solve_matrix(&Matrix::identity(m.fp(), m.rows()))
        .expect("projection component is surjective")
}

/// An amalgamated interval together with the gluing data needed to assemble
/// homotopies on it blockwise.
pub struct Amalgamation {
    pub interval: UnitInterval,
    /// inclusion of the first half
    pub j0: ChainMap,
    /// inclusion of the second half
    pub j1: ChainMap,
    /// per degree, for each glued basis vector: (comes from the first half,
    /// index inside that half)
    lift: Vec<Vec<(bool, usize)>>,
}

/// Glue the 1 end of `first` to the 0 end of `second`.  The contraction is
/// assembled blockwise — the two squares on the diagonal contract through
/// the halves, the mixed squares are constant — and the result is
/// re-validated against every unit-interval identity.
pub fn amalgamate(first: &UnitInterval, second: &UnitInterval) -> Result<Amalgamation> {
    let fp = first.complex.fp();
    let po = pushout(&first.i1, &second.i0)?;
    let j0 = po.left.clone();
    let j1 = po.right.clone();
    let jc = po.quotient.complex.clone();
    let i0 = j0.compose(&first.i0);
    let i1 = j1.compose(&second.i1);
    let s = ChainComplex::unit(fp);
    let pi = induced_from_quotient(
        &po.quotient,
        &stack_cone(&first.complex, &second.complex, &first.pi, &second.pi, &s)?,
    )?;
    // lift table from the deterministic cokernel section
    let lift: Vec<Vec<(bool, usize)>> = (0..jc.dims().len())
        .map(|deg| {
            (0..jc.dim(deg))
                .map(|idx| {
                    let col = po.quotient.sect[deg].column(idx);
                    let pos = col.iter().position(|&c| c != 0).expect("standard section");
                    if pos < first.complex.dim(deg) {
                        (true, pos)
                    } else {
                        (false, pos - first.complex.dim(deg))
                    }
                })
                .collect()
        })
        .collect();

    let jj = tensor(&jc, &jc);
    let jb = multi_basis(&[&jc, &jc]);
    let ff = multi_basis(&[&first.complex, &first.complex]);
    let ss = multi_basis(&[&second.complex, &second.complex]);
    let len = jj.dims().len();
    let mats: Vec<Matrix> = (0..len)
        .map(|deg| {
            let mut m = Matrix::zeros(fp, jc.dim(deg), jj.dim(deg));
            if deg < jb.tuples.len() {
                for (col, (degs, idxs)) in jb.tuples[deg].iter().enumerate() {
                    let (p, v, w) = (degs[0], idxs[0], idxs[1]);
                    let q = deg - p;
                    let (v_first, vi) = lift[p][v];
                    let (w_first, wi) = lift[q][w];
                    let image: Vec<(usize, u64)> = match (v_first, w_first) {
                        (true, true) => {
                            let hsrc = ff.index_of(deg, &[p, q], &[vi, wi]);
                            column_through(&j0, &first.h, deg, hsrc)
                        }
                        (false, false) => {
                            let hsrc = ss.index_of(deg, &[p, q], &[vi, wi]);
                            column_through(&j1, &second.h, deg, hsrc)
                        }
                        // first ⊗ second: collapse the second coordinate
                        (true, false) => {
                            if q != 0 {
                                Vec::new()
                            } else {
                                let scale = second.pi.component(0).get(0, wi);
                                scaled_column(&j0.component(deg), vi, scale)
                            }
                        }
                        // second ⊗ first: collapse the first coordinate
                        (false, true) => {
                            if p != 0 {
                                Vec::new()
                            } else {
                                let scale = second.pi.component(0).get(0, vi);
                                scaled_column(&j0.component(deg), wi, scale)
                            }
                        }
                    };
                    for (row, c) in image {
                        m.set(row, col, fp.add(m.get(row, col), c));
                    }
                }
            }
            m
        })
        .collect();
    let h = ChainMap::new(jj, jc.clone(), mats)?;
    let interval = UnitInterval::new(jc, i0, i1, pi, h)?;
    Ok(Amalgamation { interval, j0, j1, lift })
}

fn scaled_column(m: &Matrix, col: usize, scale: u64) -> Vec<(usize, u64)> {
    if scale == 0 {
        return Vec::new();
    }
    let fp = m.fp();
    m.column(col)
        .into_iter()
        .enumerate()
        .map(|(r, c)| (r, fp.mul(c, scale)))
        .filter(|(_, c)| *c != 0)
        .collect()
}

/// Column `idx` of `post ∘ h` in the given degree, in sparse form.
fn column_through(post: &ChainMap, h: &ChainMap, deg: usize, idx: usize) -> Vec<(usize, u64)> {
    let hcol = h.component(deg).column(idx);
    let post_m = post.component(deg);
    let fp = post_m.fp();
    let mut out = Vec::new();
    for r in 0..post_m.rows() {
        let mut acc = 0u64;
        for (c_idx, &c) in hcol.iter().enumerate() {
            if c != 0 {
                acc = fp.add(acc, fp.mul(post_m.get(r, c_idx), c));
            }
        }
        if acc != 0 {
            out.push((r, acc));
        }
    }
    out
}

/// Assemble a homotopy on an amalgamated interval from strips on the two
/// halves; every glued basis vector routes to its half's strip.  The seam
/// consistency is certified by the chain-map validation of the result.
pub fn glue_homotopy(
    base: &ChainComplex,
    glued: &Amalgamation,
    first_half: &UnitInterval,
    second_half: &UnitInterval,
    seg1: &ChainMap,
    seg2: &ChainMap,
) -> Result<ChainMap> {
    let fp = base.fp();
    let j = &glued.interval.complex;
    let bj = tensor(base, j);
    let basis = multi_basis(&[base, j]);
    let b1 = multi_basis(&[base, &first_half.complex]);
    let b2 = multi_basis(&[base, &second_half.complex]);
    let target = seg1.target().clone();
    if seg2.target() != &target {
        return Err(Error::dim("glued homotopy", "common target", "mismatch"));
    }
    let len = bj.dims().len().max(target.dims().len());
    let mats: Vec<Matrix> = (0..len)
        .map(|deg| {
            let mut m = Matrix::zeros(fp, target.dim(deg), bj.dim(deg));
            if deg < basis.tuples.len() {
                for (col, (degs, idxs)) in basis.tuples[deg].iter().enumerate() {
                    let (p, v, w) = (degs[0], idxs[0], idxs[1]);
                    let q = deg - p;
                    let (is_first, wi) = glued.lift[q][w];
                    let (seg, bb) = if is_first { (seg1, &b1) } else { (seg2, &b2) };
                    let src = bb.index_of(deg, &[p, q], &[v, wi]);
                    let comp = seg.component(deg);
                    for r in 0..comp.rows() {
                        let c = comp.get(r, src);
                        if c != 0 {
                            m.set(r, col, fp.add(m.get(r, col), c));
                        }
                    }
                }
            }
            m
        })
        .collect();
    ChainMap::new(bj, target, mats)
}

/// Outcome of rectifying a levelwise-homotopy-commuting map of spectra.
pub struct Rectified {
    /// the corrected spectrum built from mapping cylinders
    pub c: Spectrum,
    /// level equivalence onto the original source
    pub h: SpectrumMap,
    /// the strictly commuting replacement map
    pub g: SpectrumMap,
    /// per level: the interval and a homotopy `c_n ⊗ I_n -> b_n` from
    /// `f_n ∘ h_n` (i0 end) to `g_n` (i1 end)
    pub homotopies: Vec<(UnitInterval, ChainMap)>,
}

/// Rectify levelwise data `f_n : a_n -> b_n` that commutes with the
/// structure maps only up to supplied homotopies
/// `H_n : a_n⊗K⊗I -> b_{n+1}` (from `f_{n+1}∘σ_a` at `i0` to
/// `σ_b∘(f_n⊗K)` at `i1`) into a strict zig-zag `a <- c -> b` whose
/// backwards leg is a level equivalence.  The interval grows by one
/// amalgamation per level, exactly as the inductive construction demands.
pub fn rectify_spectrum_map(
    a: &Spectrum,
    b: &Spectrum,
    f: &[ChainMap],
    homotopies: &[ChainMap],
    interval: &UnitInterval,
    window: usize,
) -> Result<Rectified> {
    if f.len() < window + 1 || homotopies.len() < window {
        return Err(Error::dim("rectification data", window + 1, f.len()));
    }
    let k = a.k();
    let mut c_levels = vec![a.level(0)];
    let mut c_sigmas: Vec<ChainMap> = Vec::new();
    let mut h_comps = vec![ChainMap::identity(&a.level(0))];
    let mut g_comps = vec![f[0].clone()];
    let mut intervals = vec![interval.clone()];
    // constant straightening homotopy at level 0 (f_0∘h_0 = g_0 on both ends)
    let mut straighteners: Vec<ChainMap> = vec![{
        let collapse = tensor_map(&ChainMap::identity(&c_levels[0]), &interval.pi);
        g_comps[0].compose(&collapse)
    }];

    for n in 0..window {
        let cn = c_levels[n].clone();
        let idk = ChainMap::identity(k);
        let r = a.sigma(n).compose(&tensor_map(&h_comps[n], &idk));
        let s = b.sigma(n);
        let top = tensor_map(&g_comps[n], &idk);
        let bottom = f[n + 1].clone();
        // strip 1 on the base interval: the supplied homotopy pulled back
        let seg1 = homotopies[n].compose(&tensor_map(
            &tensor_map(&h_comps[n], &idk),
            &ChainMap::identity(&interval.complex),
        ));
        // strip 2 on the accumulated interval: the straightener, routed past K
        let in_interval = intervals[n].clone();
        let swap = factor_permutation(&[&cn, k, &in_interval.complex], &[0, 2, 1]);
        let seg2 = s
            .compose(&apply_on_factors(&[&cn, &in_interval.complex, k], 0..2, &straighteners[n]))
            .compose(&swap);
        let glued = amalgamate(interval, &in_interval)?;
        let cnk = tensor(&cn, k);
        let big = glue_homotopy(&cnk, &glued, interval, &in_interval, &seg1, &seg2)?;
        let square = mapping_cylinder_square(&top, &r, &s, &bottom, &big, &glued.interval)?;
        c_levels.push(square.b_prime.clone());
        c_sigmas.push(square.r_prime.clone());
        h_comps.push(square.q.clone());
        g_comps.push(square.g_prime.clone());
        intervals.push(glued.interval);
        straighteners.push(square.h_prime.clone());
    }

    let c = Spectrum::new(k.clone(), c_levels, c_sigmas)?;
    let pad = |comps: &[ChainMap], tgt: &Spectrum| -> Vec<ChainMap> {
        let need = c.tail_index().max(tgt.tail_index()) + 1;
        let idk = ChainMap::identity(k);
        let mut out = comps.to_vec();
        while out.len() < need {
            let last = out.last().unwrap().clone();
            out.push(tensor_map(&last, &idk));
        }
        out
    };
    let h = SpectrumMap::new(c.clone(), a.clone(), pad(&h_comps, a))?;
    let g = SpectrumMap::new(c.clone(), b.clone(), pad(&g_comps, b))?;
    for (n, q) in h_comps.iter().enumerate() {
        if !q.is_quasi_iso() {
            return Err(Error::Validation(format!(
                "rectified leg is not a level equivalence at {n}"
            )));
        }
    }
    let homotopies_out = intervals.into_iter().zip(straighteners).collect();
    Ok(Rectified { c, h, g, homotopies: homotopies_out })
}

/// Result of comparing the two suspensions through a common correction.
pub struct TensoringComparison {
    pub corrected: Spectrum,
    pub to_no_twist: SpectrumMap,
    pub to_twist: SpectrumMap,
}

/// Rectify the identity between the untwisted double suspension
/// `x ⊗̄ K ⊗̄ K` and the twisted one `x ⊗ K ⊗ K`: their structure maps
/// differ exactly by the cyclic permutation of the three suspension
/// coordinates, so the symmetry certificate supplies the homotopies.
/// Both returned legs are validated level equivalences.
pub fn compare_tensorings(x: &Spectrum, cert: &SymmetryCertificate) -> Result<TensoringComparison> {
    if &cert.k != x.k() {
        return Err(Error::Validation("certificate is for a different suspension object".into()));
    }
    let k = x.k();
    let window = x.tail_index() + 2;
    let a = x.suspend_no_twist().suspend_no_twist();
    let b = x.suspend_twist_window(window).suspend_twist_window(window);
    let f: Vec<ChainMap> = (0..=window).map(|n| ChainMap::identity(&a.level(n))).collect();
    // reverse the certificate (it runs cyclic -> identity; the rectification
    // needs identity at the i0 end) and wire it into the structure maps
    let rev = reverse_standard_interval(&cert.interval)?;
    let k3 = tensor_power(k, 3);
    let reversed = cert
        .homotopy
        .compose(&apply_on_factors(&[&k3, &cert.interval.complex], 1..2, &rev));
    let homotopies: Vec<ChainMap> = (0..window)
        .map(|n| {
            let xn = x.level(n);
            let idk = ChainMap::identity(k);
            let sig3 = tensor_map(&tensor_map(&x.sigma(n), &idk), &idk);
            let regroup = split_factor(&[&xn, &k3], 1, &[k, k, k]);
            // x_n ⊗ [certificate] applied to the three suspension factors
            // and the interval, in the flat five-factor presentation
            let applied = apply_on_factors(
                &[&xn, k, k, k, &cert.interval.complex],
                1..5,
                &reversed,
            );
            sig3.compose(&regroup).compose(&applied)
        })
        .collect();
    let rect = rectify_spectrum_map(&a, &b, &f, &homotopies, &cert.interval, window)?;
    for n in 0..=window {
        if !rect.h.component(n).is_quasi_iso() || !rect.g.component(n).is_quasi_iso() {
            return Err(Error::Validation(format!("comparison leg fails at level {n}")));
        }
    }
    Ok(TensoringComparison { corrected: rect.c, to_no_twist: rect.h, to_twist: rect.g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }
    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn standard_interval_validates() {
        for fp in [f2(), f3()] {
            let i = standard_interval(fp).unwrap();
            assert_eq!(i.complex.dims(), &[2, 1]);
            assert_eq!(i.complex.homology(0), 1);
            assert_eq!(i.complex.homology(1), 0);
        }
    }

    #[test]
    fn contraction_identity_columns() {
        let i = standard_interval(f3()).unwrap();
        // H∘(1⊗i1) reproduces the identity on both generators and e
        let id = ChainMap::identity(&i.complex);
        let at1 = i.h.compose(&tensor_map(&id, &i.i1));
        assert!(at1.equal_maps(&id));
    }

    #[test]
    fn cyclic_permutation_is_identity_for_spherical_k() {
        for fp in [f2(), f3()] {
            let k = ChainComplex::sphere(fp, 1);
            let c = cyclic_permutation(&k);
            assert!(c.is_identity_map());
            let cert = certify_symmetric(&k).unwrap().unwrap();
            // constant certificate: both ends of the homotopy agree
            let k3 = tensor_power(&k, 3);
            let at0 = cert.homotopy.compose(&tensor_map(&ChainMap::identity(&k3), &cert.interval.i0));
            assert!(at0.is_identity_map());
        }
    }

    #[test]
    fn compare_tensorings_on_sphere() {
        for fp in [f2(), f3()] {
            let k = ChainComplex::sphere(fp, 1);
            let cert = certify_symmetric(&k).unwrap().unwrap();
            let x = crate::spectra::free_spectrum(&k, 0, &ChainComplex::unit(fp));
            let cmp = compare_tensorings(&x, &cert).unwrap();
            for n in 0..=x.tail_index() + 2 {
                assert!(cmp.to_no_twist.component(n).is_quasi_iso());
                assert!(cmp.to_twist.component(n).is_quasi_iso());
            }
            // the corrected spectrum is a double suspension in homotopy
            for kk in -3..=3i64 {
                let got = crate::spectra::stable_pi(&cmp.corrected, kk).unwrap();
                let expect = crate::spectra::stable_pi(&x, kk - 2).unwrap();
                assert_eq!(got, expect, "degree {kk} over p={}", fp.p());
            }
        }
    }

    #[test]
    fn rectify_strict_input_gives_equivalence() {
        // when f is already strict and the homotopies are constant, the
        // construction still returns a level equivalence and a strict map
        let fp = f3();
        let k = ChainComplex::sphere(fp, 1);
        let interval = standard_interval(fp).unwrap();
        let x = crate::spectra::free_spectrum(&k, 0, &ChainComplex::disk(fp, 1));
        let window = 2;
        let f: Vec<ChainMap> = (0..=window).map(|n| ChainMap::identity(&x.level(n))).collect();
        let homotopies: Vec<ChainMap> = (0..window)
            .map(|n| {
                let src = tensor(&tensor(&x.level(n), &k), &interval.complex);
                let collapse = tensor_map(
                    &ChainMap::identity(&tensor(&x.level(n), &k)),
                    &interval.pi,
                );
                let _ = src;
                x.sigma(n).compose(&collapse)
            })
            .collect();
        let rect = rectify_spectrum_map(&x, &x, &f, &homotopies, &interval, window).unwrap();
        for n in 0..=window {
            assert!(rect.h.component(n).is_quasi_iso());
            assert!(rect.g.component(n).is_quasi_iso());
        }
    }

    #[test]
    fn zero_spectra_rectify_to_zero() {
        let fp = f2();
        let k = ChainComplex::sphere(fp, 1);
        let interval = standard_interval(fp).unwrap();
        let z = crate::spectra::free_spectrum(&k, 0, &ChainComplex::zero(fp));
        let window = 2;
        let f: Vec<ChainMap> = (0..=window).map(|n| ChainMap::identity(&z.level(n))).collect();
        let homotopies: Vec<ChainMap> = (0..window)
            .map(|n| ChainMap::zero(&tensor(&tensor(&z.level(n), &k), &interval.complex), &z.level(n + 1)))
            .collect();
        let rect = rectify_spectrum_map(&z, &z, &f, &homotopies, &interval, window).unwrap();
        for n in 0..=window {
            assert!(rect.c.level(n).is_zero_complex());
        }
    }

    #[test]
    fn amalgamated_interval_revalidates() {
        for fp in [f2(), f3()] {
            let i = standard_interval(fp).unwrap();
            let j = amalgamate(&i, &i).unwrap();
            assert_eq!(j.interval.complex.dims(), &[3, 2]);
            assert!(j.interval.pi.is_quasi_iso());
            // endpoints land on the outer ends
            assert!(j.interval.i0.equal_maps(&j.j0.compose(&i.i0)));
            assert!(j.interval.i1.equal_maps(&j.j1.compose(&i.i1)));
            // and a second amalgamation still validates
            let jj = amalgamate(&i, &j.interval).unwrap();
            assert_eq!(jj.interval.complex.dims(), &[4, 3]);
        }
    }
}

