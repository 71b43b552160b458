use super::perm::{GroupTable, Perm};
use crate::chain::{factor_permutation, kernel_subcomplex, ChainComplex, ChainMap, Sub};
use crate::matrix::Matrix;
use crate::solve::{AffineSystem, Term};
use crate::{Error, Result};
use serde::ser::SerializeStruct;

/// A chain complex with a symmetric-group action, stored through the
/// adjacent-transposition generators; the Coxeter presentation is validated
/// exactly, and arbitrary permutations act through a deterministic reduced
/// word, so the representation is reproducible matrix for matrix.
#[derive(Clone, PartialEq)]
pub struct SymRep {
    n: usize,
    space: ChainComplex,
    gens: Vec<ChainMap>,
}

impl std::fmt::Debug for SymRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SymRep(n={}, dims={:?})", self.n, self.space.dims())
    }
}

impl SymRep {
    pub fn new(n: usize, space: ChainComplex, gens: Vec<ChainMap>) -> Result<SymRep> {
        if gens.len() + 1 != n.max(1) {
            return Err(Error::BadGroupAction(format!(
                "arity {n} needs {} generators, got {}",
                n.max(1) - 1,
                gens.len()
            )));
        }
        for g in &gens {
            if g.source() != &space || g.target() != &space {
                return Err(Error::BadGroupAction("generator is not an endomorphism".into()));
            }
        }
        let rep = SymRep { n, space, gens };
        rep.validate()?;
        Ok(rep)
    }

    fn validate(&self) -> Result<()> {
        let id = ChainMap::identity(&self.space);
        for (i, s) in self.gens.iter().enumerate() {
            if !s.compose(s).equal_maps(&id) {
                return Err(Error::BadGroupAction(format!("generator {i} is not an involution")));
            }
        }
        for i in 0..self.gens.len() {
            for j in i + 2..self.gens.len() {
                let ij = self.gens[i].compose(&self.gens[j]);
                let ji = self.gens[j].compose(&self.gens[i]);
                if !ij.equal_maps(&ji) {
                    return Err(Error::BadGroupAction(format!(
                        "distant generators {i},{j} do not commute"
                    )));
                }
            }
        }
        for i in 0..self.gens.len().saturating_sub(1) {
            let lhs = self.gens[i].compose(&self.gens[i + 1]).compose(&self.gens[i]);
            let rhs = self.gens[i + 1].compose(&self.gens[i]).compose(&self.gens[i + 1]);
            if !lhs.equal_maps(&rhs) {
                return Err(Error::BadGroupAction(format!("braid relation fails at {i}")));
            }
        }
        Ok(())
    }

    /// The trivial action.
    pub fn trivial(n: usize, space: ChainComplex) -> SymRep {
        let gens = (0..n.max(1) - 1).map(|_| ChainMap::identity(&space)).collect();
        SymRep { n, space, gens }
    }

    /// The free (regular) action on `|Σ_n|` copies of `space`, permuted by
    /// left multiplication on the fixed group enumeration.
    pub fn free(n: usize, space: &ChainComplex) -> SymRep {
        let table = GroupTable::new(n);
        let copies = space.power_sum(table.len());
        let fp = space.fp();
        let gens = (0..n.max(1) - 1)
            .map(|i| {
                let s = Perm::adjacent(n, i);
                let len = copies.dims().len();
                let mats: Vec<Matrix> = (0..len)
                    .map(|d| {
                        let block = space.dim(d);
                        let mut m = Matrix::zeros(fp, copies.dim(d), copies.dim(d));
                        for (gi, g) in table.elements.iter().enumerate() {
                            let target = table.index_of(&s.compose(g));
                            for r in 0..block {
                                m.set(target * block + r, gi * block + r, 1);
                            }
                        }
                        m
                    })
                    .collect();
                ChainMap::new(copies.clone(), copies.clone(), mats).expect("free action")
            })
            .collect();
        SymRep { n, space: copies, gens }
    }

    /// The permutation-with-Koszul-signs action on `k^{⊗n}`.
    pub fn tensor_power_action(k: &ChainComplex, n: usize) -> SymRep {
        let space = crate::chain::tensor_power(k, n);
        let factors: Vec<&ChainComplex> = std::iter::repeat(k).take(n).collect();
        let gens = (0..n.max(1) - 1)
            .map(|i| {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(i, i + 1);
                factor_permutation(&factors, &perm)
            })
            .collect();
        SymRep { n, space, gens }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> &ChainComplex {
        &self.space
    }

    pub fn gens(&self) -> &[ChainMap] {
        &self.gens
    }

    /// Action of an arbitrary permutation via its reduced word.
    pub fn rho(&self, p: &Perm) -> ChainMap {
        assert_eq!(p.n(), self.n, "permutation arity");
        let mut acc = ChainMap::identity(&self.space);
        for &i in p.adjacent_word().iter().rev() {
            acc = self.gens[i].compose(&acc);
        }
        acc
    }

    /// Restrict along `Σ_m ⊆ Σ_n` on the first `m` letters.
    pub fn restrict(&self, m: usize) -> SymRep {
        assert!(m <= self.n);
        SymRep {
            n: m,
            space: self.space.clone(),
            gens: self.gens[..m.max(1) - 1].to_vec(),
        }
    }

    /// Restrict along `Σ_m ⊆ Σ_n` on the last `m` letters (the convention
    /// of the shift-down functor, which keeps the appended suspension
    /// letters aligned).
    pub fn restrict_last(&self, m: usize) -> SymRep {
        assert!(m <= self.n);
        SymRep {
            n: m,
            space: self.space.clone(),
            gens: self.gens[self.n - m..].to_vec(),
        }
    }

    /// The fixed-point subcomplex, cut out by `ρ(s_i) - 1` for all
    /// generators.
    pub fn fixed_points(&self) -> Result<Sub> {
        let fp = self.space.fp();
        let len = self.space.dims().len();
        let conds: Vec<Matrix> = (0..len)
            .map(|d| {
                let mut rows = Matrix::zeros(fp, 0, self.space.dim(d));
                for g in &self.gens {
                    let diff = g.component(d).sub(&Matrix::identity(fp, self.space.dim(d)));
                    rows = rows.vstack(&diff);
                }
                rows
            })
            .collect();
        kernel_subcomplex(&self.space, &conds)
    }

    /// Exact projectivity test over the group algebra, degree by degree:
    /// the module is projective iff the identity is a trace, i.e. some
    /// `φ` satisfies `Σ_g ρ(g) φ ρ(g)⁻¹ = 1`.
    pub fn is_projective(&self) -> bool {
        let table = GroupTable::new(self.n);
        let fp = self.space.fp();
        let mats: Vec<(Vec<Matrix>, Vec<Matrix>)> = table
            .elements
            .iter()
            .map(|g| {
                let r = self.rho(g);
                let rinv = self.rho(&g.inverse());
                let len = self.space.dims().len();
                (
                    (0..len).map(|d| r.component(d)).collect(),
                    (0..len).map(|d| rinv.component(d)).collect(),
                )
            })
            .collect();
        for d in 0..self.space.dims().len() {
            let dim = self.space.dim(d);
            if dim == 0 {
                continue;
            }
            let mut sys = AffineSystem::new(fp);
            let phi = sys.unknown(dim, dim);
            let terms: Vec<Term> = mats.iter().map(|(r, rinv)| Term {
                left: &r[d],
                unknown: phi,
                right: &rinv[d],
            }).collect();
            if sys.equation(&terms, &Matrix::identity(fp, dim)).is_err() {
                return false;
            }
            if sys.solve().is_none() {
                return false;
            }
        }
        true
    }
}

impl serde::Serialize for SymRep {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SymRep", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("space", &self.space)?;
        st.serialize_field("gens", &self.gens)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for SymRep {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        #[derive(serde::Deserialize)]
        struct Raw {
            n: usize,
            space: ChainComplex,
            gens: Vec<ChainMap>,
        }
        let raw = Raw::deserialize(d)?;
        SymRep::new(raw.n, raw.space, raw.gens).map_err(DeError::custom)
    }
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
    fn tensor_power_action_signs() {
        let k = ChainComplex::sphere(f3(), 1);
        let rep = SymRep::tensor_power_action(&k, 2);
        // the transposition acts by the Koszul sign -1 in degree 2
        assert_eq!(rep.gens()[0].component(2).get(0, 0), f3().neg(1));
        let rep3 = SymRep::tensor_power_action(&k, 3);
        // a 3-cycle is a product of two adjacent twists: (-1)(-1) = +1
        let cyc = Perm::new(vec![1, 2, 0]);
        assert!(rep3.rho(&cyc).is_identity_map());
    }

    #[test]
    fn rho_is_a_homomorphism() {
        let k = ChainComplex::sphere(f3(), 1);
        let rep = SymRep::tensor_power_action(&k, 3);
        for g in Perm::all(3) {
            for h in Perm::all(3) {
                let lhs = rep.rho(&g).compose(&rep.rho(&h));
                assert!(lhs.equal_maps(&rep.rho(&g.compose(&h))));
            }
        }
    }

    #[test]
    fn free_is_projective_trivial_is_not_mod_2() {
        let s = ChainComplex::unit(f2());
        assert!(SymRep::free(2, &s).is_projective());
        assert!(!SymRep::trivial(2, s.clone()).is_projective());
        // away from the group order everything is projective
        let s5 = ChainComplex::unit(Fp::new(5).unwrap());
        assert!(SymRep::trivial(2, s5).is_projective());
    }

    #[test]
    fn fixed_points_of_regular_rep() {
        // the fixed subspace of the regular representation is the orbit sum
        let s = ChainComplex::unit(f3());
        let rep = SymRep::free(3, &s);
        let fixed = rep.fixed_points().unwrap();
        assert_eq!(fixed.complex.dim(0), 1);
    }
}
