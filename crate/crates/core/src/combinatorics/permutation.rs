use std::fmt;

use crate::combinatorics::subset::SubsetOfN;
use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}`, stored by its images `(σ(1), ..., σ(n))`.
///
/// Composition convention, used everywhere in this crate:
/// `(σ ∘ τ)(i) = σ(τ(i))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n as u8).collect() }
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return Err(Error::InvalidPermutation(format!("{:?}", images)));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i j)` in `S_n`.
    pub fn transposition(n: usize, i: u8, j: u8) -> Result<Self> {
        if i == 0 || j == 0 || i as usize > n || j as usize > n || i == j {
            return Err(Error::InvalidPermutation(format!("transposition ({} {}) in S_{}", i, j, n)));
        }
        let mut images: Vec<u8> = (1..=n as u8).collect();
        images.swap(i as usize - 1, j as usize - 1);
        Ok(Permutation { images })
    }

    /// The adjacent transposition `(k, k+1)` in `S_n`, `1 ≤ k ≤ n-1`.
    pub fn adjacent(n: usize, k: usize) -> Self {
        let mut images: Vec<u8> = (1..=n as u8).collect();
        images.swap(k - 1, k);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: u8) -> u8 {
        self.images[i as usize - 1]
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let images = other.images.iter().map(|&i| self.image(i)).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let n = self.degree();
        let mut images = vec![0u8; n];
        for (k, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = k as u8 + 1;
        }
        Permutation { images }
    }

    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `+1` or `-1`, the parity of the inversion count.
    pub fn sign(&self) -> i64 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All of `S_n` in lexicographic order of image tuples.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation { images: images.clone() });
            // next lexicographic permutation
            let mut i = match (0..images.len().saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) {
                Some(i) => i,
                None => break,
            };
            let j = (i + 1..images.len()).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            i += 1;
            images[i..].reverse();
            if out.len() > 1_000_000 {
                panic!("S_{} is too large to enumerate", n);
            }
        }
        out
    }

    /// Writes `self` as a product of adjacent transpositions (applied right to left).
    pub fn adjacent_word(&self) -> Vec<usize> {
        // bubble sort of the image tuple; each swap records one generator
        let mut images = self.images.clone();
        let mut word = Vec::new();
        let n = images.len();
        loop {
            let mut swapped = false;
            for k in 0..n.saturating_sub(1) {
                if images[k] > images[k + 1] {
                    images.swap(k, k + 1);
                    word.push(k + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        // word sorts self to the identity, so self = product of the word reversed
        word.reverse();
        word
    }

    /// The permutation `λ_{σ(S)} ∘ σ ∘ λ_S⁻¹` of `{1, ..., |S|}` induced on a subset.
    pub fn induced(&self, s: &SubsetOfN) -> Permutation {
        let image_set = SubsetOfN::new(
            self.degree(),
            s.members().iter().map(|&x| self.image(x)).collect(),
        )
        .expect("image of a subset is a subset");
        let images = s
            .members()
            .iter()
            .map(|&x| image_set.standardize(self.image(x)).unwrap())
            .collect();
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.images {
            write!(f, "{}", x)?;
        }
        Ok(())
    }
}
