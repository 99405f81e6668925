//! The cobar construction on a linearized coalgebra: the free algebra on the
//! desuspended counit-reduced species, with the differential splitting one
//! block at a time through the coproduct.

use std::collections::HashMap;
use std::sync::Arc;

use crate::combinatorics::{enumerate_compositions, SubsetOfN};
use crate::error::Result;
use crate::linalg::{rat, SparseMatrix};
use crate::species::{Bicomodule, Payload, Side, Structure};

/// A basis word: a composition of `{1, ..., n}` with a standardized structure
/// per block. A word of length `q` at arity `n` sits in cohomological degree
/// `q - n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CobarWord {
    pub blocks: Vec<SubsetOfN>,
    pub letters: Vec<Payload>,
}

impl CobarWord {
    pub fn length(&self) -> usize {
        self.blocks.len()
    }

    pub fn describe(&self, species: &dyn Bicomodule) -> String {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .zip(&self.letters)
            .map(|(b, l)| format!("{}:{}", b, species.describe(&Structure::new(b.len(), l.clone()))))
            .collect();
        format!("[{}]", parts.join(" | "))
    }
}

/// The arity-`n` piece of the cobar complex: words by length, and the
/// differential matrices from length `q` to `q + 1`.
pub struct CobarComplex {
    pub arity: usize,
    /// `levels[q]` lists the words of length `q`, sorted.
    pub levels: Vec<Vec<CobarWord>>,
    /// `diffs[q]` maps level `q` to level `q + 1`.
    pub diffs: Vec<SparseMatrix>,
}

impl CobarComplex {
    /// Homology dimensions by word length.
    pub fn homology_dims(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for q in 0..self.levels.len() {
            let dim = self.levels[q].len();
            let rank_out = self.diffs.get(q).map_or(0, |d| d.rank());
            let rank_in = if q == 0 { 0 } else { self.diffs[q - 1].rank() };
            out.push(dim - rank_out - rank_in);
        }
        out
    }

    /// `d² = 0` across all word lengths.
    pub fn differential_squares_to_zero(&self) -> bool {
        for q in 0..self.diffs.len().saturating_sub(1) {
            let composite = self.diffs[q + 1].multiply(&self.diffs[q]).expect("chain dimensions");
            if !composite.is_zero() {
                return false;
            }
        }
        true
    }
}

pub fn cobar_complex(species: &Arc<dyn Bicomodule>, arity: usize) -> Result<CobarComplex> {
    let n = arity;
    let mut levels: Vec<Vec<CobarWord>> = Vec::new();
    // the empty word is the unit, present only at arity zero
    levels.push(if n == 0 { vec![CobarWord { blocks: vec![], letters: vec![] }] } else { vec![] });
    for q in 1..=n {
        let mut words = Vec::new();
        for comp in enumerate_compositions(n, q) {
            let per_block: Vec<Vec<Structure>> =
                comp.blocks().iter().map(|b| species.structures(b.len())).collect();
            if per_block.iter().any(|s| s.is_empty()) {
                continue;
            }
            let mut picks = vec![0usize; q];
            loop {
                words.push(CobarWord {
                    blocks: comp.blocks().to_vec(),
                    letters: picks.iter().enumerate().map(|(i, &k)| per_block[i][k].payload.clone()).collect(),
                });
                let mut pos = 0;
                loop {
                    if pos == q {
                        break;
                    }
                    picks[pos] += 1;
                    if picks[pos] < per_block[pos].len() {
                        break;
                    }
                    picks[pos] = 0;
                    pos += 1;
                }
                if pos == q {
                    break;
                }
            }
        }
        words.sort();
        levels.push(words);
    }

    let mut diffs = Vec::new();
    for q in 0..levels.len().saturating_sub(1) {
        let target_index: HashMap<&CobarWord, usize> =
            levels[q + 1].iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut matrix = SparseMatrix::new(levels[q + 1].len(), levels[q].len());
        for (col, word) in levels[q].iter().enumerate() {
            for i in 0..word.length() {
                let block = &word.blocks[i];
                if block.len() < 2 {
                    continue;
                }
                let letter = Structure::new(block.len(), word.letters[i].clone());
                let sign = if i % 2 == 0 { 1 } else { -1 };
                // split the block into nonempty (A, B)
                for amask in 1u32..(1 << block.len()) - 1 {
                    let a_std = SubsetOfN::from_mask(block.len(), amask);
                    let b_std = a_std.complement();
                    let Some(a_letter) = species.restrict(Side::Right, &letter, &a_std)? else {
                        continue;
                    };
                    let Some(b_letter) = species.restrict(Side::Left, &letter, &b_std)? else {
                        continue;
                    };
                    let lift = |s: &SubsetOfN| {
                        SubsetOfN::new(
                            n,
                            s.members().iter().map(|&k| block.unstandardize(k).unwrap()).collect(),
                        )
                        .expect("sub-block of a block")
                    };
                    let mut blocks = word.blocks.clone();
                    let mut letters = word.letters.clone();
                    blocks[i] = lift(&a_std);
                    blocks.insert(i + 1, lift(&b_std));
                    letters[i] = a_letter.payload;
                    letters.insert(i + 1, b_letter.payload);
                    let next = CobarWord { blocks, letters };
                    let row = *target_index.get(&next).expect("split word is a basis word");
                    matrix.add_to(row, col, &rat(sign));
                }
            }
        }
        diffs.push(matrix);
    }
    Ok(CobarComplex { arity, levels, diffs })
}

/// Unsigned Stirling numbers of the first kind by the standard recurrence;
/// `stirling_first(n)[k]` counts permutations of `n` with `k` cycles.
pub fn stirling_first(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for m in 1..=n {
        let mut next = vec![0u64; m + 1];
        for (k, &v) in row.iter().enumerate() {
            next[k] += (m as u64 - 1) * v;
            next[k + 1] += v;
        }
        row = next;
    }
    row
}
