use std::fmt;

use crate::combinatorics::permutation::Permutation;
use crate::combinatorics::subset::SubsetOfN;
use crate::error::{Error, Result};

/// An ordered tuple of pairwise disjoint subsets of `{1, ..., n}` whose union
/// is the whole ground set. Blocks may be empty; a decomposition with all
/// blocks nonempty is a *composition*.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Decomposition {
    ground_size: usize,
    blocks: Vec<SubsetOfN>,
}

impl Decomposition {
    pub fn new(ground_size: usize, blocks: Vec<SubsetOfN>) -> Result<Self> {
        let mut seen = vec![false; ground_size];
        for b in &blocks {
            if b.ground_size() != ground_size {
                return Err(Error::InvalidDecomposition(format!(
                    "block {} lives on ground size {}, expected {}",
                    b,
                    b.ground_size(),
                    ground_size
                )));
            }
            for &x in b.members() {
                if seen[x as usize - 1] {
                    return Err(Error::InvalidDecomposition(format!("element {} repeated", x)));
                }
                seen[x as usize - 1] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvalidDecomposition("blocks do not cover the ground set".into()));
        }
        Ok(Decomposition { ground_size, blocks })
    }

    /// Builds a decomposition from its block-index word: `word[i]` is the
    /// 1-based index of the block containing element `i + 1`.
    pub fn from_word(length: usize, word: &[u8]) -> Decomposition {
        let n = word.len();
        let mut blocks = vec![Vec::new(); length];
        for (i, &b) in word.iter().enumerate() {
            blocks[b as usize - 1].push(i as u8 + 1);
        }
        Decomposition {
            ground_size: n,
            blocks: blocks
                .into_iter()
                .map(|m| SubsetOfN::new(n, m).expect("word blocks are valid subsets"))
                .collect(),
        }
    }

    pub fn block_index_word(&self) -> Vec<u8> {
        let mut word = vec![0u8; self.ground_size];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block.members() {
                word[x as usize - 1] = b as u8 + 1;
            }
        }
        word
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn length(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[SubsetOfN] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &SubsetOfN {
        &self.blocks[i]
    }

    pub fn is_composition(&self) -> bool {
        self.blocks.iter().all(|b| !b.is_empty())
    }

    pub fn relabel(&self, sigma: &Permutation) -> Decomposition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                SubsetOfN::new(
                    self.ground_size,
                    b.members().iter().map(|&x| sigma.image(x)).collect(),
                )
                .expect("relabelled block is a valid subset")
            })
            .collect();
        Decomposition { ground_size: self.ground_size, blocks }
    }

    /// Merges blocks `i` and `i + 1` (0-based).
    pub fn merge_adjacent(&self, i: usize) -> Decomposition {
        let mut blocks = Vec::with_capacity(self.blocks.len() - 1);
        for (k, b) in self.blocks.iter().enumerate() {
            if k == i {
                blocks.push(b.union(&self.blocks[i + 1]));
            } else if k != i + 1 {
                blocks.push(b.clone());
            }
        }
        Decomposition { ground_size: self.ground_size, blocks }
    }

    /// Inserts an empty block at position `j` (0-based).
    pub fn insert_empty(&self, j: usize) -> Decomposition {
        let mut blocks = self.blocks.clone();
        blocks.insert(j, SubsetOfN::empty(self.ground_size));
        Decomposition { ground_size: self.ground_size, blocks }
    }

    /// Transports a run of blocks, all contained in `s`, along `λ_s` to a
    /// decomposition of `{1, ..., |s|}`.
    pub fn transport(blocks: &[SubsetOfN], s: &SubsetOfN) -> Decomposition {
        let m = s.len();
        let new_blocks = blocks
            .iter()
            .map(|b| {
                SubsetOfN::new(
                    m,
                    b.members().iter().map(|&x| s.standardize(x).expect("block ⊆ s")).collect(),
                )
                .expect("standardized block is valid")
            })
            .collect();
        Decomposition { ground_size: m, blocks: new_blocks }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (k, x) in b.members().iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x)?;
            }
        }
        write!(f, ")")
    }
}

/// All decompositions of `{1, ..., n}` into `q` ordered, possibly empty
/// blocks, ordered lexicographically by block-index word. There are `q^n`.
pub fn enumerate_decompositions(n: usize, q: usize) -> Vec<Decomposition> {
    if n == 0 {
        return vec![Decomposition::from_word(q, &[])];
    }
    if q == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut word = vec![1u8; n];
    loop {
        out.push(Decomposition::from_word(q, &word));
        // next word in lexicographic order over {1, ..., q}^n
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (word[i] as usize) < q {
                word[i] += 1;
                for w in &mut word[i + 1..] {
                    *w = 1;
                }
                break;
            }
        }
    }
}

/// All compositions of `{1, ..., n}` into exactly `q` nonempty blocks; empty
/// when `q > n`.
pub fn enumerate_compositions(n: usize, q: usize) -> Vec<Decomposition> {
    if q > n {
        return Vec::new();
    }
    enumerate_decompositions(n, q).into_iter().filter(|d| d.is_composition()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stirling2(n: usize, k: usize) -> usize {
        if n == 0 && k == 0 {
            return 1;
        }
        if n == 0 || k == 0 {
            return 0;
        }
        k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product::<usize>().max(1)
    }

    #[test]
    fn decomposition_counts_are_q_to_the_n() {
        assert_eq!(enumerate_decompositions(0, 3).len(), 1);
        assert_eq!(enumerate_decompositions(2, 1).len(), 1);
        assert_eq!(enumerate_decompositions(5, 1).len(), 1);
        assert_eq!(enumerate_decompositions(2, 2).len(), 4);
        for n in 0..=4 {
            for q in 0..=4usize {
                let expect = if n == 0 { 1 } else { q.pow(n as u32) };
                assert_eq!(enumerate_decompositions(n, q).len(), expect, "n={}, q={}", n, q);
            }
        }
    }

    #[test]
    fn composition_counts_match_stirling_numbers() {
        assert!(enumerate_compositions(2, 3).is_empty());
        assert_eq!(enumerate_compositions(3, 3).len(), 6);
        assert_eq!(enumerate_compositions(3, 2).len(), 6);
        for n in 0..=5 {
            for q in 0..=5 {
                assert_eq!(
                    enumerate_compositions(n, q).len(),
                    factorial(q) * stirling2(n, q),
                    "n={}, q={}",
                    n,
                    q
                );
            }
        }
    }

    #[test]
    fn word_round_trip() {
        for d in enumerate_decompositions(4, 3) {
            let w = d.block_index_word();
            assert_eq!(Decomposition::from_word(3, &w), d);
        }
    }

    #[test]
    fn rejects_overlap_and_gaps() {
        let a = SubsetOfN::new(3, vec![1, 2]).unwrap();
        let b = SubsetOfN::new(3, vec![2, 3]).unwrap();
        assert!(Decomposition::new(3, vec![a.clone(), b]).is_err());
        assert!(Decomposition::new(3, vec![a]).is_err());
    }
}
