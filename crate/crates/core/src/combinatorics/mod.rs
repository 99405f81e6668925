//! Finite-set combinatorics: subsets, decompositions and compositions,
//! permutations and signs, the Schubert statistic, and shuffles.
//!
//! Everything here is immutable after construction and pure.

mod decomposition;
mod permutation;
mod schubert;
mod subset;

pub use decomposition::{enumerate_compositions, enumerate_decompositions, Decomposition};
pub use permutation::Permutation;
pub use schubert::{enumerate_shuffles, monotone_pair_bijection, schubert, split_sign, Shuffle};
pub use subset::SubsetOfN;
