use super::perm::{shuffles, Perm, ShuffleBlock};
use super::rep::SymRep;
use crate::chain::{apply_endo_on_factors, nest, tensor_power, ChainComplex, ChainMap};
use crate::matrix::Matrix;
use crate::Result;

/// One graded family of values with symmetric-group actions, used as a
/// tensor-factor group in induced constructions: the `p`-th slot carries a
/// `Σ_p`-object, presented as a flat list of tensor factors so that block
/// values stay left-nested across groups.
pub trait GroupData {
    /// Flat tensor factors contributed at this size (empty at size 0 for
    /// power-style groups).
    fn factors(&self, size: usize) -> Vec<ChainComplex>;
    /// Whether the value at this size is the zero object.
    fn is_zero(&self, size: usize) -> bool;
    /// Action of `γ ∈ Σ_size` on the nested value.
    fn act(&self, size: usize, gamma: &Perm) -> ChainMap;
    fn fp_zero(&self) -> ChainComplex;
}

/// A window of symmetric-group objects, one per level.
pub struct RepLevels<'a> {
    pub levels: &'a [SymRep],
}

impl GroupData for RepLevels<'_> {
    fn factors(&self, size: usize) -> Vec<ChainComplex> {
        vec![self
            .levels
            .get(size)
            .map(|r| r.space().clone())
            .unwrap_or_else(|| self.fp_zero())]
    }
    fn is_zero(&self, size: usize) -> bool {
        self.levels
            .get(size)
            .map(|r| r.space().is_zero_complex())
            .unwrap_or(true)
    }
    fn act(&self, size: usize, gamma: &Perm) -> ChainMap {
        match self.levels.get(size) {
            Some(r) => r.rho(gamma),
            None => ChainMap::identity(&self.fp_zero()),
        }
    }
    fn fp_zero(&self) -> ChainComplex {
        ChainComplex::zero(self.levels[0].space().fp())
    }
}

/// A single object placed at one arity, zero elsewhere.
pub struct SingleLevel<'a> {
    pub at: usize,
    pub rep: &'a SymRep,
}

impl GroupData for SingleLevel<'_> {
    fn factors(&self, size: usize) -> Vec<ChainComplex> {
        if size == self.at {
            vec![self.rep.space().clone()]
        } else {
            vec![self.fp_zero()]
        }
    }
    fn is_zero(&self, size: usize) -> bool {
        size != self.at || self.rep.space().is_zero_complex()
    }
    fn act(&self, size: usize, gamma: &Perm) -> ChainMap {
        if size == self.at {
            self.rep.rho(gamma)
        } else {
            ChainMap::identity(&self.fp_zero())
        }
    }
    fn fp_zero(&self) -> ChainComplex {
        ChainComplex::zero(self.rep.space().fp())
    }
}

/// Tensor powers of the suspension object with the twist action; `from = 1`
/// gives the positive-powers variant (zero in size 0).
pub struct Powers<'a> {
    pub k: &'a ChainComplex,
    pub from: usize,
}

impl GroupData for Powers<'_> {
    fn factors(&self, size: usize) -> Vec<ChainComplex> {
        if size < self.from {
            vec![self.fp_zero()]
        } else {
            std::iter::repeat(self.k.clone()).take(size).collect()
        }
    }
    fn is_zero(&self, size: usize) -> bool {
        size < self.from || (size > 0 && self.k.is_zero_complex())
    }
    fn act(&self, size: usize, gamma: &Perm) -> ChainMap {
        if size < self.from {
            return ChainMap::identity(&self.fp_zero());
        }
        if size <= 1 {
            return ChainMap::identity(&tensor_power(self.k, size));
        }
        let factors: Vec<&ChainComplex> = std::iter::repeat(self.k).take(size).collect();
        crate::chain::factor_permutation(&factors, gamma.one_line())
    }
    fn fp_zero(&self) -> ChainComplex {
        ChainComplex::zero(self.k.fp())
    }
}

/// One level of an induced block sum: blocks ordered by sizes tuple then
/// assignment word, value bases left-nested over the concatenated flat
/// factor lists of the groups.
pub struct BlockSum {
    pub n: usize,
    pub blocks: Vec<BlockEntry>,
    pub space: ChainComplex,
    offsets: Vec<Vec<usize>>,
}

pub struct BlockEntry {
    pub shuffle: ShuffleBlock,
    pub factors: Vec<ChainComplex>,
    /// factor ranges per group (into `factors`)
    pub ranges: Vec<std::ops::Range<usize>>,
    pub value: ChainComplex,
}

impl BlockSum {
    pub fn new(n: usize, groups: &[&dyn GroupData]) -> BlockSum {
        let fp = groups[0].fp_zero().fp();
        let mut blocks = Vec::new();
        for sizes in compositions(n, groups.len()) {
            for shuffle in shuffles(&sizes) {
                let zero = sizes.iter().zip(groups).any(|(&s, g)| g.is_zero(s));
                let mut factors: Vec<ChainComplex> = Vec::new();
                let mut ranges = Vec::new();
                for (&s, g) in sizes.iter().zip(groups) {
                    let fs = if zero { Vec::new() } else { g.factors(s) };
                    let start = factors.len();
                    factors.extend(fs);
                    ranges.push(start..factors.len());
                }
                let value = if zero || factors.is_empty() {
                    if zero {
                        ChainComplex::zero(fp)
                    } else {
                        ChainComplex::unit(fp)
                    }
                } else {
                    let refs: Vec<&ChainComplex> = factors.iter().collect();
                    nest(&refs)
                };
                blocks.push(BlockEntry { shuffle, factors, ranges, value });
            }
        }
        let maxdeg = blocks.iter().map(|b| b.value.dims().len()).max().unwrap_or(0);
        let mut offsets = vec![vec![0usize; maxdeg]; blocks.len()];
        let mut dims = vec![0usize; maxdeg];
        for (b, entry) in blocks.iter().enumerate() {
            for d in 0..maxdeg {
                offsets[b][d] = dims[d];
                dims[d] += entry.value.dim(d);
            }
        }
        let diffs: Vec<Matrix> = (0..maxdeg)
            .map(|d| {
                let rows = if d == 0 { 0 } else { dims[d - 1] };
                let mut m = Matrix::zeros(fp, rows, dims[d]);
                for (b, entry) in blocks.iter().enumerate() {
                    if d > 0 {
                        m.paste(offsets[b][d - 1], offsets[b][d], &entry.value.diff(d));
                    }
                }
                m
            })
            .collect();
        let space = ChainComplex::new(fp, dims, diffs).expect("block sum complex");
        BlockSum { n, blocks, space, offsets }
    }

    pub fn block_index(&self, word: &[usize]) -> usize {
        self.blocks
            .iter()
            .position(|b| b.shuffle.word == word)
            .expect("block present")
    }

    pub fn offset(&self, block: usize, degree: usize) -> usize {
        self.offsets
            .get(block)
            .and_then(|o| o.get(degree))
            .copied()
            .unwrap_or(0)
    }

    /// Which block a flat index in a given degree belongs to, with the
    /// inner index.
    pub fn locate(&self, degree: usize, flat: usize) -> (usize, usize) {
        for b in 0..self.blocks.len() {
            let off = self.offset(b, degree);
            let dim = self.blocks[b].value.dim(degree);
            if flat >= off && flat < off + dim {
                return (b, flat - off);
            }
        }
        panic!("flat index out of range");
    }

    /// Scatter per-block maps into one ambient matrix for a degree.
    pub fn assemble(
        &self,
        target: &BlockSum,
        degree: usize,
        entries: impl Fn(usize) -> Option<(usize, Matrix)>,
    ) -> Matrix {
        let fp = self.space.fp();
        let mut m = Matrix::zeros(fp, target.space.dim(degree), self.space.dim(degree));
        for b in 0..self.blocks.len() {
            if let Some((tb, mat)) = entries(b) {
                let r0 = target.offset(tb, degree);
                let c0 = self.offset(b, degree);
                for r in 0..mat.rows() {
                    for c in 0..mat.cols() {
                        let v = mat.get(r, c);
                        if v != 0 {
                            m.set(r0 + r, c0 + c, fp.add(m.get(r0 + r, c0 + c), v));
                        }
                    }
                }
            }
        }
        m
    }

    /// The `γ`-action on a block value, one group range at a time (each
    /// group's action is an endomorphism of its own flat factor range).
    pub fn value_action(&self, block: usize, groups: &[&dyn GroupData], parts: &[Perm]) -> ChainMap {
        let entry = &self.blocks[block];
        let mut acc = ChainMap::identity(&entry.value);
        if entry.value.is_zero_complex() {
            return acc;
        }
        for (gi, g) in groups.iter().enumerate() {
            let part = &parts[gi];
            let range = entry.ranges[gi].clone();
            if part.is_identity() || range.is_empty() {
                continue;
            }
            let refs: Vec<&ChainComplex> = entry.factors.iter().collect();
            let m = g.act(entry.shuffle.sizes[gi], part);
            let applied = apply_endo_on_factors(&refs, range, &m);
            acc = applied.compose(&acc);
        }
        acc
    }

    /// The generator actions of the induced representation.
    pub fn induced_rep(&self, groups: &[&dyn GroupData]) -> Result<SymRep> {
        let n = self.n;
        let gens: Vec<ChainMap> = (0..n.max(1) - 1)
            .map(|i| {
                let s = Perm::adjacent(n, i);
                let maps: Vec<(usize, ChainMap)> = self
                    .blocks
                    .iter()
                    .enumerate()
                    .map(|(b, entry)| {
                        let (moved, parts) = entry.shuffle.act(&s);
                        let tb = self.block_index(&moved.word);
                        (tb, self.value_action(b, groups, &parts))
                    })
                    .collect();
                let len = self.space.dims().len();
                let mats: Vec<Matrix> = (0..len)
                    .map(|d| {
                        self.assemble(self, d, |b| {
                            let (tb, ref vm) = maps[b];
                            Some((tb, vm.component(d)))
                        })
                    })
                    .collect();
                ChainMap::new(self.space.clone(), self.space.clone(), mats).expect("induced action")
            })
            .collect();
        SymRep::new(n, self.space.clone(), gens)
    }
}

/// Compositions of `n` into `m` non-negative parts, lexicographic.
pub fn compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0usize; m];
    fn rec(n: usize, m: usize, at: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at + 1 == m {
            cur[at] = n;
            out.push(cur.clone());
            return;
        }
        for v in 0..=n {
            cur[at] = v;
            rec(n - v, m, at + 1, cur, out);
        }
    }
    rec(n, m, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn compositions_enumerate() {
        assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(0, 3).len(), 1);
    }

    #[test]
    fn induced_pair_of_singletons_is_regular() {
        // two single letters induce the regular representation of Σ_2
        let fp = f3();
        let s = ChainComplex::unit(fp);
        let triv1 = SymRep::trivial(1, s.clone());
        let g1 = SingleLevel { at: 1, rep: &triv1 };
        let g2 = SingleLevel { at: 1, rep: &triv1 };
        let bs = BlockSum::new(2, &[&g1, &g2]);
        assert_eq!(bs.space.dim(0), 2);
        let rep = bs.induced_rep(&[&g1, &g2]).unwrap();
        assert_eq!(rep.gens()[0].component(0).get(0, 1), 1);
        assert_eq!(rep.gens()[0].component(0).get(1, 0), 1);
        assert_eq!(rep.gens()[0].component(0).get(0, 0), 0);
    }

    #[test]
    fn induced_with_twist_powers_validates() {
        let fp = f3();
        let k = ChainComplex::sphere(fp, 1);
        let s = ChainComplex::unit(fp);
        let base = SymRep::trivial(0, s);
        let g1 = SingleLevel { at: 0, rep: &base };
        let pw = Powers { k: &k, from: 0 };
        for n in 1..=4usize {
            let bs = BlockSum::new(n, &[&g1, &pw]);
            assert_eq!(bs.space.total_dim(), 1, "one block survives at n={n}");
            let _ = bs.induced_rep(&[&g1, &pw]).unwrap();
        }
    }
}
