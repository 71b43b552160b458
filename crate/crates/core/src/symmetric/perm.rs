use std::collections::HashMap;

/// A permutation of `{0..n-1}` in one-line notation: `one_line[i]` is the
/// image of letter `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    one_line: Vec<usize>,
}

impl Perm {
    pub fn new(one_line: Vec<usize>) -> Perm {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            assert!(v < n && !seen[v], "not a permutation");
            seen[v] = true;
        }
        Perm { one_line }
    }

    pub fn identity(n: usize) -> Perm {
        Perm { one_line: (0..n).collect() }
    }

    /// The adjacent transposition `s_i` swapping `i` and `i+1`.
    pub fn adjacent(n: usize, i: usize) -> Perm {
        assert!(i + 1 < n, "adjacent transposition out of range");
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, i + 1);
        Perm { one_line: v }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm { one_line: (0..self.n()).map(|i| self.apply(other.apply(i))).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.n()];
        for (i, &j) in self.one_line.iter().enumerate() {
            v[j] = i;
        }
        Perm { one_line: v }
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// A word in adjacent transpositions with
    /// `self = s_{w[0]} ∘ s_{w[1]} ∘ ... ∘ s_{w[last]}`
    /// (the rightmost letter acts first), found by bubble sorting.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut p = self.one_line.clone();
        let mut sorting = Vec::new();
        loop {
            let mut moved = false;
            for i in 0..p.len().saturating_sub(1) {
                if p[i] > p[i + 1] {
                    p.swap(i, i + 1);
                    sorting.push(i);
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        // self ∘ s_{i1} ∘ ... ∘ s_{ik} = id, so self = s_{ik} ∘ ... ∘ s_{i1}
        sorting.reverse();
        sorting
    }

    /// All permutations of `n` letters in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut v: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm { one_line: v.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
            v.swap(i, j);
            v[i + 1..].reverse();
        }
        out
    }
}

/// Index lookup for a fixed enumeration of a symmetric group.
pub struct GroupTable {
    pub elements: Vec<Perm>,
    index: HashMap<Vec<usize>, usize>,
}

impl GroupTable {
    pub fn new(n: usize) -> GroupTable {
        let elements = Perm::all(n);
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.one_line().to_vec(), i))
            .collect();
        GroupTable { elements, index }
    }

    pub fn index_of(&self, p: &Perm) -> usize {
        self.index[p.one_line()]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// An ordered set partition of `{0..n-1}` into groups of the given sizes,
/// carried as the assignment word `letter -> group`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShuffleBlock {
    pub sizes: Vec<usize>,
    pub word: Vec<usize>,
}

impl ShuffleBlock {
    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// Letters assigned to a group, ascending.
    pub fn letters(&self, group: usize) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.word[i] == group).collect()
    }

    /// The block's coset representative: increasing on each group,
    /// sending the concatenated group positions to the assigned letters.
    pub fn tau(&self) -> Perm {
        let mut one_line = Vec::with_capacity(self.n());
        for g in 0..self.sizes.len() {
            one_line.extend(self.letters(g));
        }
        Perm::new(one_line)
    }

    /// Apply `g ∈ Σ_n` on the left: the new block and the residual
    /// block-diagonal permutation `γ = τ' ⁻¹ ∘ g ∘ τ`, split per group.
    pub fn act(&self, g: &Perm) -> (ShuffleBlock, Vec<Perm>) {
        let word = {
            let mut w = vec![0; self.n()];
            for i in 0..self.n() {
                w[g.apply(i)] = self.word[i];
            }
            w
        };
        let moved = ShuffleBlock { sizes: self.sizes.clone(), word };
        let gamma = moved.tau().inverse().compose(&g.compose(&self.tau()));
        let mut parts = Vec::with_capacity(self.sizes.len());
        let mut offset = 0;
        for &sz in &self.sizes {
            let part: Vec<usize> = (0..sz).map(|i| gamma.apply(offset + i) - offset).collect();
            parts.push(Perm::new(part));
            offset += sz;
        }
        (moved, parts)
    }
}

/// All ordered set partitions of `{0..n-1}` with the given group sizes, in
/// lexicographic assignment-word order.
pub fn shuffles(sizes: &[usize]) -> Vec<ShuffleBlock> {
    let n: usize = sizes.iter().sum();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn rec(word: &mut Vec<usize>, remaining: &mut [usize], n: usize, out: &mut Vec<Vec<usize>>) {
        if word.len() == n {
            out.push(word.clone());
            return;
        }
        for g in 0..remaining.len() {
            if remaining[g] > 0 {
                remaining[g] -= 1;
                word.push(g);
                rec(word, remaining, n, out);
                word.pop();
                remaining[g] += 1;
            }
        }
    }
    let mut words = Vec::new();
    let mut rem = sizes.to_vec();
    rec(&mut word, &mut rem, n, &mut words);
    for w in words {
        out.push(ShuffleBlock { sizes: sizes.to_vec(), word: w });
    }
    out
}

/// The interleaving permutation placing a concatenation of two sorted letter
/// lists at their ranks inside the union.
pub fn interleave(first: &[usize], second: &[usize]) -> Perm {
    let mut union: Vec<usize> = first.iter().chain(second.iter()).copied().collect();
    union.sort_unstable();
    let rank = |x: usize| union.binary_search(&x).expect("letter in union");
    let one_line: Vec<usize> = first.iter().chain(second.iter()).map(|&x| rank(x)).collect();
    Perm::new(one_line)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_reproduce_permutations() {
        for n in 1..=4usize {
            for p in Perm::all(n) {
                let mut acc = Perm::identity(n);
                // rightmost letter first
                for &i in p.adjacent_word().iter().rev() {
                    acc = Perm::adjacent(n, i).compose(&acc);
                }
                assert_eq!(acc, p);
            }
        }
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(&[1, 1]).len(), 2);
        assert_eq!(shuffles(&[2, 1]).len(), 3);
        assert_eq!(shuffles(&[2, 2]).len(), 6);
        assert_eq!(shuffles(&[1, 1, 1]).len(), 6);
        // identity shuffle comes first
        assert_eq!(shuffles(&[2, 2])[0].word, vec![0, 0, 1, 1]);
    }

    #[test]
    fn block_action_is_left_action() {
        let sizes = vec![2, 1];
        for b in shuffles(&sizes) {
            for g in Perm::all(3) {
                for h in Perm::all(3) {
                    let (b1, parts1) = b.act(&h);
                    let (b2, parts2) = b1.act(&g);
                    let (b12, parts12) = b.act(&g.compose(&h));
                    assert_eq!(b2, b12);
                    for ((a, c), d) in parts2.iter().zip(&parts1).zip(&parts12) {
                        assert_eq!(a.compose(c), *d);
                    }
                }
            }
        }
    }

    #[test]
    fn interleave_ranks() {
        let mu = interleave(&[1], &[0]);
        assert_eq!(mu.one_line(), &[1, 0]);
        let mu = interleave(&[0, 3], &[1, 2]);
        assert_eq!(mu.one_line(), &[0, 3, 1, 2]);
    }
}
