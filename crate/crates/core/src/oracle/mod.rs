//! Brute-force reference complexes: the normalized cochain complex with its
//! coface and codegeneracy maps, the cobar construction on a linearized
//! coalgebra, and the complex of compositions computing sphere cohomology.

mod cobar;
mod cochain;
mod complex;
mod coxeter;

pub use cobar::{cobar_complex, stirling_first, CobarComplex, CobarWord};
pub use cochain::{
    codegeneracy, coface, delta, delta_vanishes, Cochain, CochainEval, CochainWitness,
    FunctionalCochain,
};
pub use complex::{cochain_to_vector, delta_matrix, truncated_cohomology, ComplexBasis};
pub use coxeter::CoxeterComplex;
