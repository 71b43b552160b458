use super::complex::ChainComplex;
use super::map::ChainMap;
use crate::matrix::Matrix;
use crate::{Error, Result};

/// A degreewise cokernel `Q = V / im(u)` with its projection and a linear
/// section (the section picks standard basis vectors of `V`, so it is not a
/// chain map in general; it is only used to present induced maps).
pub struct Quotient {
    pub ambient: ChainComplex,
    pub complex: ChainComplex,
    pub proj: ChainMap,
    pub sect: Vec<Matrix>,
}

/// Quotient of the target of `u` by its image.
pub fn quotient_by_image(u: &ChainMap) -> Quotient {
    let v = u.target().clone();
    let fp = v.fp();
    let len = v.dims().len();
    let mut dims = Vec::with_capacity(len);
    let mut projs = Vec::with_capacity(len);
    let mut sects = Vec::with_capacity(len);
    for n in 0..len {
        let m = u.component(n);
        let vd = v.dim(n);
        // pivot coordinates of the image, via row reduction of the transpose
        let (_, pivots) = m.transpose().rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..vd).filter(|c| !pivot_set.contains(c)).collect();
        let r = pivots.len();
        // columns: a spanning set of the image, then the free standard vectors
        let mut cols: Vec<Vec<u64>> = Vec::with_capacity(vd);
        let (rr, _) = m.transpose().rref();
        for row in 0..r {
            cols.push((0..vd).map(|c| rr.get(row, c)).collect());
        }
        for &c in &free {
            let mut e = vec![0u64; vd];
            e[c] = 1;
            cols.push(e);
        }
        let b = Matrix::from_columns(fp, vd, &cols);
        let binv = b.inverse().expect("image basis plus complement is invertible");
        // projection = the complement coordinates of B^{-1}
        let mut proj = Matrix::zeros(fp, free.len(), vd);
        for (qrow, brow) in (r..vd).enumerate() {
            for c in 0..vd {
                proj.set(qrow, c, binv.get(brow, c));
            }
        }
        let mut sect = Matrix::zeros(fp, vd, free.len());
        for (j, &c) in free.iter().enumerate() {
            sect.set(c, j, 1);
        }
        dims.push(free.len());
        projs.push(proj);
        sects.push(sect);
    }
    let mut diffs = Vec::with_capacity(len);
    for n in 0..len {
        let rows = if n == 0 { 0 } else { dims[n - 1] };
        if n == 0 {
            diffs.push(Matrix::zeros(fp, rows, dims[0]));
        } else {
            diffs.push(projs[n - 1].mul(&v.diff(n)).mul(&sects[n]));
        }
    }
    let complex = ChainComplex::new(fp, dims.clone(), diffs).expect("quotient differential");
    // the quotient may trim trailing zero degrees; align the projection data
    let qlen = complex.dims().len();
    projs.truncate(qlen.max(0));
    sects.truncate(qlen);
    while projs.len() < len {
        // ambient degrees above the quotient map to zero
        projs.push(Matrix::zeros(fp, 0, v.dim(projs.len())));
        sects.push(Matrix::zeros(fp, v.dim(sects.len()), 0));
    }
    let proj = ChainMap::new(v.clone(), complex.clone(), projs).expect("projection is a chain map");
    Quotient { ambient: v, complex, proj, sect: sects }
}

/// Coequalizer of a parallel pair, computed as the cokernel of `f - g`.
pub fn coequalizer(f: &ChainMap, g: &ChainMap) -> Result<Quotient> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::dim("coequalizer", "parallel pair", "mismatched shapes"));
    }
    Ok(quotient_by_image(&f.sub(g)))
}

/// Pushout of `b <-f- a -g-> c` with the two inclusion legs.
pub struct Pushout {
    pub quotient: Quotient,
    pub left: ChainMap,
    pub right: ChainMap,
}

pub fn pushout(f: &ChainMap, g: &ChainMap) -> Result<Pushout> {
    if f.source() != g.source() {
        return Err(Error::dim("pushout", "common source", "mismatched sources"));
    }
    let b = f.target().clone();
    let c = g.target().clone();
    let bc = b.direct_sum(&c);
    let len = bc.dims().len().max(f.source().dims().len());
    let mats = (0..len)
        .map(|n| f.component(n).vstack(&g.component(n).neg()))
        .collect();
    let u = ChainMap::new(f.source().clone(), bc.clone(), mats).expect("pushout relation map");
    let q = quotient_by_image(&u);
    let incl_b = ChainMap::identity(&b).into_summand(&bc, |_| 0);
    let incl_c = ChainMap::identity(&c).into_summand(&bc, |n| b.dim(n));
    let left = q.proj.compose(&incl_b);
    let right = q.proj.compose(&incl_c);
    Ok(Pushout { quotient: q, left, right })
}

/// The map out of a quotient induced by `map : V -> Z`, which must kill the
/// relations (checked exactly).
pub fn induced_from_quotient(q: &Quotient, map: &ChainMap) -> Result<ChainMap> {
    if map.source() != &q.ambient {
        return Err(Error::dim("induced map", "quotient ambient", "other source"));
    }
    let len = q.complex.dims().len().max(map.target().dims().len());
    let mats: Vec<Matrix> = (0..len)
        .map(|n| {
            let sect = q
                .sect
                .get(n)
                .cloned()
                .unwrap_or_else(|| Matrix::zeros(q.ambient.fp(), q.ambient.dim(n), 0));
            map.component(n).mul(&sect)
        })
        .collect();
    let out = ChainMap::new(q.complex.clone(), map.target().clone(), mats)?;
    if !out.compose(&q.proj).equal_maps(map) {
        return Err(Error::Validation(
            "map does not factor through the quotient".into(),
        ));
    }
    Ok(out)
}

/// A subcomplex presented by an embedding into its ambient complex.
pub struct Sub {
    pub ambient: ChainComplex,
    pub complex: ChainComplex,
    pub embed: Vec<Matrix>,
    pub incl: ChainMap,
}

/// The subcomplex cut out by linear conditions per degree (`conds[n]` rows
/// vanish).  Fails if the conditions are not closed under the differential.
pub fn kernel_subcomplex(ambient: &ChainComplex, conds: &[Matrix]) -> Result<Sub> {
    let fp = ambient.fp();
    let len = ambient.dims().len();
    let mut embeds = Vec::with_capacity(len);
    for n in 0..len {
        let c = conds
            .get(n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(fp, 0, ambient.dim(n)));
        let basis = c.kernel_basis();
        embeds.push(Matrix::from_columns(fp, ambient.dim(n), &basis));
    }
    let dims: Vec<usize> = embeds.iter().map(|e| e.cols()).collect();
    let mut diffs = Vec::with_capacity(len);
    for n in 0..len {
        if n == 0 {
            diffs.push(Matrix::zeros(fp, 0, dims[0]));
        } else {
            let image = ambient.diff(n).mul(&embeds[n]);
            let coords = embeds[n - 1].solve_matrix(&image).ok_or_else(|| {
                Error::Validation("conditions are not closed under the differential".into())
            })?;
            diffs.push(coords);
        }
    }
    let complex = ChainComplex::new(fp, dims, diffs)?;
    let qlen = complex.dims().len();
    let mut mats = embeds.clone();
    mats.truncate(qlen);
    while mats.len() < len {
        mats.push(Matrix::zeros(fp, ambient.dim(mats.len()), 0));
    }
    let incl = ChainMap::new(complex.clone(), ambient.clone(), mats)?;
    Ok(Sub { ambient: ambient.clone(), complex, embed: embeds, incl })
}

/// Pullback of `X -f-> Z <-g- Y` as a subcomplex of `X ⊕ Y`.
pub struct Pullback {
    pub sub: Sub,
    pub to_left: ChainMap,
    pub to_right: ChainMap,
}

pub fn pullback(f: &ChainMap, g: &ChainMap) -> Result<Pullback> {
    if f.target() != g.target() {
        return Err(Error::dim("pullback", "common target", "mismatched targets"));
    }
    let x = f.source().clone();
    let y = g.source().clone();
    let xy = x.direct_sum(&y);
    let len = xy.dims().len();
    let conds: Vec<Matrix> = (0..len)
        .map(|n| f.component(n).hstack(&g.component(n).neg()))
        .collect();
    let sub = kernel_subcomplex(&xy, &conds)?;
    let fp = xy.fp();
    let proj_x = {
        let mats = (0..len)
            .map(|n| {
                let mut m = Matrix::zeros(fp, x.dim(n), xy.dim(n));
                m.paste(0, 0, &Matrix::identity(fp, x.dim(n)));
                m
            })
            .collect();
        ChainMap::new(xy.clone(), x.clone(), mats)?
    };
    let proj_y = {
        let mats = (0..len)
            .map(|n| {
                let mut m = Matrix::zeros(fp, y.dim(n), xy.dim(n));
                m.paste(0, x.dim(n), &Matrix::identity(fp, y.dim(n)));
                m
            })
            .collect();
        ChainMap::new(xy, y.clone(), mats)?
    };
    let to_left = proj_x.compose(&sub.incl);
    let to_right = proj_y.compose(&sub.incl);
    Ok(Pullback { sub, to_left, to_right })
}

/// The map into a pullback induced by a compatible cone (checked exactly).
pub fn induced_into_pullback(pb: &Pullback, u: &ChainMap, v: &ChainMap) -> Result<ChainMap> {
    if u.source() != v.source() {
        return Err(Error::dim("pullback cone", "common source", "mismatched"));
    }
    let w = u.source().clone();
    let fp = w.fp();
    let len = w.dims().len().max(pb.sub.complex.dims().len());
    let mut mats = Vec::with_capacity(len);
    for n in 0..len {
        let stacked = u.component(n).vstack(&v.component(n));
        let embed = pb
            .sub
            .embed
            .get(n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(fp, stacked.rows(), 0));
        let coords = embed
            .solve_matrix(&stacked)
            .ok_or_else(|| Error::Validation("cone does not land in the pullback".into()))?;
        mats.push(coords);
    }
    let out = ChainMap::new(w, pb.sub.complex.clone(), mats)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::tensor::tensor;
    use crate::field::Fp;
    use crate::rectify::standard_interval;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn pushout_along_identity() {
        let fp = f2();
        let a = ChainComplex::disk(fp, 1);
        let c = ChainComplex::sphere(fp, 1);
        let g = ChainMap::zero(&a, &c);
        let po = pushout(&ChainMap::identity(&a), &g).unwrap();
        assert_eq!(po.quotient.complex, c);
        assert!(po.right.is_degreewise_iso());
    }

    #[test]
    fn pushout_of_zero_span() {
        let fp = f2();
        let z = ChainComplex::zero(fp);
        let po = pushout(&ChainMap::identity(&z), &ChainMap::identity(&z)).unwrap();
        assert!(po.quotient.complex.is_zero_complex());
    }

    #[test]
    fn mapping_cylinder_of_unit_identity_has_interval_shape() {
        // S ⊔_S (S⊗I) along the endpoint inclusion has dims (2, 1)
        let fp = f2();
        let i = standard_interval(fp).unwrap();
        let s = ChainComplex::unit(fp);
        let si = tensor(&s, &i.complex);
        assert_eq!(si, i.complex);
        let i0 = i.i0.clone();
        let po = pushout(&ChainMap::identity(&s), &i0).unwrap();
        assert_eq!(po.quotient.complex.dims(), &[2, 1]);
    }

    #[test]
    fn coequalizer_of_equal_maps_is_target() {
        let fp = f2();
        let d = ChainComplex::disk(fp, 1);
        let id = ChainMap::identity(&d);
        let q = coequalizer(&id, &id).unwrap();
        assert_eq!(q.complex, d);
    }

    #[test]
    fn coequalizer_of_identity_and_zero_is_zero() {
        let fp = f2();
        let d = ChainComplex::disk(fp, 1);
        let q = coequalizer(&ChainMap::identity(&d), &ChainMap::zero(&d, &d)).unwrap();
        assert!(q.complex.is_zero_complex());
    }

    #[test]
    fn pullback_of_surjections() {
        let fp = f2();
        let s = ChainComplex::unit(fp);
        let x = s.direct_sum(&ChainComplex::disk(fp, 1));
        let p = ChainMap::new(
            x.clone(),
            s.clone(),
            vec![Matrix::new(fp, 1, 2, vec![1, 0]).unwrap(), Matrix::zeros(fp, 0, 1)],
        )
        .unwrap();
        let pb = pullback(&p, &p).unwrap();
        assert_eq!(pb.sub.complex.dim(0), 3);
        assert_eq!(pb.sub.complex.dim(1), 2);
        let u = induced_into_pullback(&pb, &ChainMap::identity(&x), &ChainMap::identity(&x)).unwrap();
        assert!(pb.to_left.compose(&u).equal_maps(&ChainMap::identity(&x)));
    }

    #[test]
    fn induced_from_quotient_validates() {
        let fp = f2();
        let d = ChainComplex::disk(fp, 1);
        let q = coequalizer(&ChainMap::identity(&d), &ChainMap::zero(&d, &d)).unwrap();
        // identity on d does not kill the relations, so it cannot factor
        assert!(induced_from_quotient(&q, &ChainMap::identity(&d)).is_err());
    }
}
