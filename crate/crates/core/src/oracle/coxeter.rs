//! The complex of compositions of `{1, ..., j}` with block-merging face
//! maps, whose dual computes the reduced cohomology of a `(j-2)`-sphere with
//! the sign action on the top class.

use std::collections::HashMap;

use crate::combinatorics::{enumerate_compositions, Decomposition, Permutation};
use crate::error::{Error, Result};
use crate::linalg::{rat, Rational, SparseMatrix};

/// Compositions of `{1, ..., j}` by block count, with coboundary matrices on
/// the dual side.
pub struct CoxeterComplex {
    pub j: usize,
    /// `levels[b - 1]` lists the compositions into `b` blocks, `1 ≤ b ≤ j`.
    pub levels: Vec<Vec<Decomposition>>,
}

impl CoxeterComplex {
    pub fn build(j: usize) -> Result<CoxeterComplex> {
        if j == 0 {
            return Err(Error::IndexOutOfRange("the complex needs j ≥ 1".into()));
        }
        let levels = (1..=j).map(|b| enumerate_compositions(j, b)).collect();
        Ok(CoxeterComplex { j, levels })
    }

    /// The face `∂_i` merges blocks `i` and `i + 1` (0-based).
    pub fn face(f: &Decomposition, i: usize) -> Decomposition {
        f.merge_adjacent(i)
    }

    /// Coboundary from functions on `b`-block compositions to functions on
    /// `(b+1)`-block compositions: `(δη)(F) = Σ (-1)^i η(∂_i F)`.
    pub fn coboundary(&self, b: usize) -> SparseMatrix {
        let source = &self.levels[b - 1];
        let target = &self.levels[b];
        let index: HashMap<&Decomposition, usize> = source.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut m = SparseMatrix::new(target.len(), source.len());
        for (row, f) in target.iter().enumerate() {
            for i in 0..b {
                let merged = Self::face(f, i);
                let col = index[&merged];
                m.add_to(row, col, &rat(if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        m
    }

    /// Reduced cohomology dimensions, indexed by degree `p = b - 2` for
    /// `b = 1, ..., j` (so starting at degree `-1`).
    pub fn cohomology_dims(&self) -> Vec<(i64, usize)> {
        let j = self.j;
        let mut ranks = vec![0usize; j];
        for b in 1..j {
            ranks[b] = self.coboundary(b).rank();
        }
        let mut out = Vec::new();
        for b in 1..=j {
            let dim = self.levels[b - 1].len();
            let rank_out = if b < j { ranks[b] } else { 0 };
            let rank_in = if b > 1 { ranks[b - 1] } else { 0 };
            out.push((b as i64 - 2, dim - rank_out - rank_in));
        }
        out
    }

    /// The cocycle generating the top class: the indicator of the identity
    /// composition into singletons.
    pub fn top_class(&self) -> Vec<Rational> {
        let top = &self.levels[self.j - 1];
        let identity = Decomposition::from_word(self.j, &(1..=self.j as u8).collect::<Vec<_>>());
        top.iter().map(|f| if *f == identity { rat(1) } else { rat(0) }).collect()
    }

    /// The sign by which a transposition acts on the top cohomology class;
    /// requires `j ≥ 2`.
    pub fn transposition_action_on_top(&self) -> Result<i64> {
        let j = self.j;
        if j < 2 {
            return Err(Error::IndexOutOfRange("transpositions need j ≥ 2".into()));
        }
        let tau = Permutation::transposition(j, 1, 2)?;
        let top = &self.levels[j - 1];
        let index: HashMap<&Decomposition, usize> = top.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let xi = self.top_class();
        // (τ·η)(F) = η(τ⁻¹ F)
        let tau_inv = tau.inverse();
        let mut tau_xi = vec![rat(0); top.len()];
        for (row, f) in top.iter().enumerate() {
            let pre = f.relabel(&tau_inv);
            tau_xi[row] = xi[index[&pre]].clone();
        }
        let delta_in = self.coboundary(j - 1);
        // acts by -1 exactly when τξ + ξ is a coboundary
        let sum: Vec<Rational> = xi.iter().zip(&tau_xi).map(|(a, b)| a + b).collect();
        if delta_in.in_image(&sum) {
            return Ok(-1);
        }
        let diff: Vec<Rational> = xi.iter().zip(&tau_xi).map(|(a, b)| a - b).collect();
        if delta_in.in_image(&diff) {
            return Ok(1);
        }
        Err(Error::DimensionMismatch("top class is not an eigenvector of the transposition".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semisimplicial_identities() {
        // ∂_i ∂_k = ∂_k ∂_{i+1} for i ≥ k, exhaustively for j ≤ 5
        for j in 1..=5usize {
            let cx = CoxeterComplex::build(j).unwrap();
            for level in &cx.levels {
                for f in level {
                    let b = f.length();
                    if b < 3 {
                        continue;
                    }
                    for i in 0..b - 2 {
                        for k in 0..=i {
                            let lhs = CoxeterComplex::face(&CoxeterComplex::face(f, i + 1), k);
                            let rhs = CoxeterComplex::face(&CoxeterComplex::face(f, k), i);
                            assert_eq!(lhs, rhs, "j={}, F={}, i={}, k={}", j, f, i, k);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn faces_are_equivariant() {
        for j in 2..=4usize {
            let cx = CoxeterComplex::build(j).unwrap();
            for sigma in Permutation::all(j) {
                for level in &cx.levels {
                    for f in level {
                        if f.length() < 2 {
                            continue;
                        }
                        for i in 0..f.length() - 1 {
                            assert_eq!(
                                CoxeterComplex::face(f, i).relabel(&sigma),
                                CoxeterComplex::face(&f.relabel(&sigma), i)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sphere_cohomology_for_one_point() {
        let cx = CoxeterComplex::build(1).unwrap();
        assert_eq!(cx.cohomology_dims(), vec![(-1, 1)]);
    }

    #[test]
    fn sphere_cohomology_for_two_points() {
        let cx = CoxeterComplex::build(2).unwrap();
        assert_eq!(cx.levels[1].len(), 2);
        assert_eq!(cx.cohomology_dims(), vec![(-1, 0), (0, 1)]);
    }

    #[test]
    fn sphere_cohomology_j_three() {
        let cx = CoxeterComplex::build(3).unwrap();
        assert_eq!(cx.cohomology_dims(), vec![(-1, 0), (0, 0), (1, 1)]);
        assert_eq!(cx.transposition_action_on_top().unwrap(), -1);
    }

    #[test]
    fn top_class_is_a_cocycle_representative() {
        // the top level has no outgoing coboundary, and the class is nonzero
        let cx = CoxeterComplex::build(4).unwrap();
        let xi = cx.top_class();
        assert_eq!(xi.iter().filter(|v| !num::Zero::is_zero(*v)).count(), 1);
        let delta_in = cx.coboundary(3);
        assert!(!delta_in.in_image(&xi));
    }
}
