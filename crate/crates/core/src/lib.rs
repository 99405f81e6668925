//! Exact cohomology of bicomodules over the exponential species in
//! combinatorial species.
//!
//! The engine computes the cohomology of a linearized bicomodule two ways:
//! through the small complex of sign-equivariant functionals on orbit
//! representatives, and through brute-force truncations of the normalized
//! cochain complex. On top of that sit the cup and external products, the
//! cobar construction with its Koszul-dual homology, the
//! sphere-cohomology complex of compositions, and the integration of
//! 2-cocycles into weak deformations. All arithmetic is exact over the
//! rationals.

pub mod combinatorics;
pub mod deform;
mod error;
pub mod koszul;
pub mod linalg;
pub mod oracle;
pub mod products;
pub mod species;

pub use error::{Error, Result};
pub use linalg::{rat, ratio, Rational, SparseMatrix};
pub use species::{
    Bicomodule, CustomSpeciesDoc, Engine, OrbitTable, PairOrbitTable, Payload, Side, Structure,
};
