//! Seeded instance generators and the builtin test corpus.
//!
//! All randomness flows through a counter-based generator seeded from a
//! `u64`, so identical (seed, sizes) reproduce identical instances byte for
//! byte on every platform.

use crate::chain::{tensor, ChainComplex, ChainMap};
use crate::field::Fp;
use crate::matrix::Matrix;
use crate::rectify::standard_interval;
use crate::solve::{AffineSystem, Term};
use crate::spectra::{free_spectrum, Spectrum, SpectrumMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Seeded = ChaCha8Rng;

pub fn seeded(seed: u64) -> Seeded {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size knobs for generated instances.
#[derive(Debug, Clone, Copy)]
pub struct Sizes {
    pub max_degree: usize,
    pub max_dim: usize,
    pub tail_index: usize,
}

impl Default for Sizes {
    fn default() -> Self {
        Sizes { max_degree: 4, max_dim: 3, tail_index: 2 }
    }
}

impl Sizes {
    pub fn small() -> Sizes {
        Sizes { max_degree: 2, max_dim: 2, tail_index: 1 }
    }
}

/// A random bounded complex with exact `d∘d = 0`: differentials are drawn
/// degree by degree with image constrained to the kernel below.
pub fn random_complex(rng: &mut Seeded, fp: Fp, sizes: &Sizes) -> ChainComplex {
    let len = rng.gen_range(1..=sizes.max_degree + 1);
    let dims: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=sizes.max_dim)).collect();
    let mut diffs: Vec<Matrix> = Vec::with_capacity(len);
    diffs.push(Matrix::zeros(fp, 0, dims[0]));
    for n in 1..len {
        if n == 1 {
            diffs.push(random_matrix(rng, fp, dims[0], dims[1]));
        } else {
            // image of d_n must lie in ker d_{n-1}
            let kernel = diffs[n - 1].kernel_basis();
            let z = Matrix::from_columns(fp, dims[n - 1], &kernel);
            let coeff = random_matrix(rng, fp, kernel.len(), dims[n]);
            diffs.push(z.mul(&coeff));
        }
    }
    ChainComplex::new(fp, dims, diffs).expect("random complex is a complex")
}

/// A random acyclic complex: a direct sum of two-term identity pieces.
pub fn random_acyclic(rng: &mut Seeded, fp: Fp, sizes: &Sizes) -> ChainComplex {
    let mut acc = ChainComplex::zero(fp);
    let pieces = rng.gen_range(1..=sizes.max_dim);
    for _ in 0..pieces {
        let n = rng.gen_range(1..=sizes.max_degree.max(1));
        acc = acc.direct_sum(&ChainComplex::disk(fp, n));
    }
    acc
}

fn random_matrix(rng: &mut Seeded, fp: Fp, rows: usize, cols: usize) -> Matrix {
    let data: Vec<u64> = (0..rows * cols).map(|_| rng.gen_range(0..fp.p())).collect();
    Matrix::new(fp, rows, cols, data).expect("random matrix")
}

/// A random chain map: a random point of the solution space of the
/// commuting-square constraints (always nonempty: zero is a solution).
pub fn random_chain_map(rng: &mut Seeded, src: &ChainComplex, tgt: &ChainComplex) -> ChainMap {
    let fp = src.fp();
    let len = src.dims().len().max(tgt.dims().len());
    let mut sys = AffineSystem::new(fp);
    let unknowns: Vec<usize> = (0..len).map(|n| sys.unknown(tgt.dim(n), src.dim(n))).collect();
    for n in 1..len {
        let d_t = tgt.diff(n);
        let d_s = src.diff(n);
        let id_s = Matrix::identity(fp, src.dim(n));
        let neg = Matrix::identity(fp, tgt.dim(n - 1)).neg();
        let zero = Matrix::zeros(fp, tgt.dim(n - 1), src.dim(n));
        sys.equation(
            &[
                Term { left: &d_t, unknown: unknowns[n], right: &id_s },
                Term { left: &neg, unknown: unknowns[n - 1], right: &d_s },
            ],
            &zero,
        )
        .expect("chain map constraints");
    }
    let basis = sys.homogeneous_basis();
    let mut comps: Vec<Matrix> = (0..len).map(|n| Matrix::zeros(fp, tgt.dim(n), src.dim(n))).collect();
    for sol in &basis {
        let c = rng.gen_range(0..fp.p());
        if c == 0 {
            continue;
        }
        for (n, m) in sol.iter().enumerate() {
            comps[n] = comps[n].add(&m.scale(c));
        }
    }
    ChainMap::new(src.clone(), tgt.clone(), comps).expect("random chain map validates")
}

/// A random spectrum with the requested tail index: random levels joined by
/// random structure maps.
pub fn random_spectrum(rng: &mut Seeded, k: &ChainComplex, sizes: &Sizes) -> Spectrum {
    let fp = k.fp();
    let mut levels = vec![random_complex(rng, fp, sizes)];
    let mut sigmas = Vec::new();
    for n in 0..sizes.tail_index {
        let next = random_complex(rng, fp, sizes);
        let src = tensor(&levels[n], k);
        sigmas.push(random_chain_map(rng, &src, &next));
        levels.push(next);
    }
    Spectrum::new(k.clone(), levels, sigmas).expect("random spectrum")
}

/// A split level fibration onto `base`: the total spectrum is levelwise
/// `base ⊕ fiber` with an upper-triangular structure map drawn at random
/// among those commuting with the projection.
pub fn split_fibration(
    rng: &mut Seeded,
    base: &Spectrum,
    fiber: &Spectrum,
) -> (Spectrum, SpectrumMap) {
    let k = base.k();
    let fp = k.fp();
    let top = base.tail_index().max(fiber.tail_index()) + 1;
    let levels: Vec<ChainComplex> = (0..=top).map(|n| base.level(n).direct_sum(&fiber.level(n))).collect();
    let projs: Vec<ChainMap> = (0..=top)
        .map(|n| {
            let t = &levels[n];
            let b = base.level(n);
            let len = t.dims().len();
            let mats = (0..len)
                .map(|d| {
                    let mut m = Matrix::zeros(fp, b.dim(d), t.dim(d));
                    m.paste(0, 0, &Matrix::identity(fp, b.dim(d)));
                    m
                })
                .collect();
            ChainMap::new(t.clone(), b, mats).expect("projection")
        })
        .collect();
    let mut sigmas = Vec::with_capacity(top);
    for n in 0..top {
        let src = tensor(&levels[n], k);
        let tgt = &levels[n + 1];
        // particular solution: include σ_base after projecting
        let idk = ChainMap::identity(k);
        let part = {
            let down = base.sigma(n).compose(&crate::chain::tensor_map(&projs[n], &idk));
            let len = tgt.dims().len();
            let mats = (0..len)
                .map(|d| {
                    let mut m = Matrix::zeros(fp, tgt.dim(d), src.dim(d));
                    m.paste(0, 0, &down.component(d));
                    m
                })
                .collect();
            ChainMap::new(src.clone(), tgt.clone(), mats).expect("particular structure map")
        };
        // random homogeneous correction: chain maps killed by the projection
        let len = src.dims().len().max(tgt.dims().len());
        let mut sys = AffineSystem::new(fp);
        let unknowns: Vec<usize> = (0..len).map(|d| sys.unknown(tgt.dim(d), src.dim(d))).collect();
        for d in 1..len {
            let d_t = tgt.diff(d);
            let d_s = src.diff(d);
            let id_s = Matrix::identity(fp, src.dim(d));
            let neg = Matrix::identity(fp, tgt.dim(d - 1)).neg();
            let zero = Matrix::zeros(fp, tgt.dim(d - 1), src.dim(d));
            sys.equation(
                &[
                    Term { left: &d_t, unknown: unknowns[d], right: &id_s },
                    Term { left: &neg, unknown: unknowns[d - 1], right: &d_s },
                ],
                &zero,
            )
            .expect("chain constraints");
        }
        for d in 0..len {
            let p = projs[n + 1].component(d);
            let id_s = Matrix::identity(fp, src.dim(d));
            let zero = Matrix::zeros(fp, p.rows(), src.dim(d));
            sys.equation(&[Term { left: &p, unknown: unknowns[d], right: &id_s }], &zero)
                .expect("projection constraint");
        }
        let basis = sys.homogeneous_basis();
        let mut comps: Vec<Matrix> = (0..len).map(|d| part.component(d)).collect();
        for sol in &basis {
            let c = rng.gen_range(0..fp.p());
            if c == 0 {
                continue;
            }
            for (d, m) in sol.iter().enumerate() {
                comps[d] = comps[d].add(&m.scale(c));
            }
        }
        sigmas.push(ChainMap::new(src, tgt.clone(), comps).expect("total structure map"));
    }
    let total = Spectrum::new(k.clone(), levels, sigmas).expect("total spectrum");
    let proj = SpectrumMap::new(total.clone(), base.clone(), projs).expect("split fibration");
    (total, proj)
}

/// The default suspension object: one generator in degree 1.
pub fn default_k(fp: Fp) -> ChainComplex {
    ChainComplex::sphere(fp, 1)
}

/// Named builtin spectra covering the degenerate and nondegenerate cases.
pub fn builtins(fp: Fp) -> Vec<(String, Spectrum)> {
    let k = default_k(fp);
    let s = ChainComplex::unit(fp);
    let interval = standard_interval(fp).expect("interval").complex;
    let mut out = vec![
        ("sphere".to_string(), free_spectrum(&k, 0, &s)),
        ("F1S".to_string(), free_spectrum(&k, 1, &s)),
        ("F2S".to_string(), free_spectrum(&k, 2, &s)),
        ("F3S".to_string(), free_spectrum(&k, 3, &s)),
        ("F0K".to_string(), free_spectrum(&k, 0, &k)),
        ("F0I".to_string(), free_spectrum(&k, 0, &interval)),
        ("F0D".to_string(), free_spectrum(&k, 0, &ChainComplex::disk(fp, 1))),
    ];
    // one non-free spectrum with a nontrivial structure map
    let mut rng = seeded(0x5eed);
    out.push((
        "nonfree".to_string(),
        random_spectrum(&mut rng, &k, &Sizes { max_degree: 2, max_dim: 2, tail_index: 1 }),
    ));
    out
}

/// Look up a builtin spectrum by name.
pub fn builtin(fp: Fp, name: &str) -> Option<Spectrum> {
    builtins(fp).into_iter().find(|(n, _)| n == name).map(|(_, x)| x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let fp = Fp::new(3).unwrap();
        let sizes = Sizes::default();
        let a = random_complex(&mut seeded(11), fp, &sizes);
        let b = random_complex(&mut seeded(11), fp, &sizes);
        assert_eq!(a, b);
    }

    #[test]
    fn random_maps_validate() {
        let fp = Fp::new(2).unwrap();
        let sizes = Sizes::default();
        let mut rng = seeded(5);
        for _ in 0..10 {
            let a = random_complex(&mut rng, fp, &sizes);
            let b = random_complex(&mut rng, fp, &sizes);
            // constructor re-validates the chain condition
            let _ = random_chain_map(&mut rng, &a, &b);
        }
    }

    #[test]
    fn split_fibration_is_level_fibration() {
        let fp = Fp::new(2).unwrap();
        let k = default_k(fp);
        let mut rng = seeded(9);
        let base = random_spectrum(&mut rng, &k, &Sizes::small());
        let fiber = random_spectrum(&mut rng, &k, &Sizes::small());
        let (_, p) = split_fibration(&mut rng, &base, &fiber);
        assert!(p.is_level_fibration());
    }
}
