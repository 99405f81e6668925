//! The species/bicomodule abstraction and the shipped examples.
//!
//! A [`Bicomodule`] packages a finitary set species together with its
//! relabeling action and standardized left/right restriction maps. All
//! structures live on ground sets `{1, ..., n}`; restriction re-encodes onto
//! `{1, ..., |S|}` through the order-preserving bijection.

mod builtin;
mod cauchy;
mod custom;
mod orbits;
mod registry;

use std::fmt;

use crate::combinatorics::{Permutation, SubsetOfN};
use crate::error::Result;

pub use builtin::{exponential, graphs, linear_orders, partitions, set_compositions, singleton_power};
pub(crate) use builtin::graph_has_edge;
pub use cauchy::CauchyProduct;
pub use custom::{exponential_doc, parse_custom, signed_orders_doc, validate_custom, CustomSpecies, CustomSpeciesDoc};
pub use orbits::{OrbitInfo, OrbitTable, PairKey, PairOrbit, PairOrbitTable};
pub use registry::Engine;

/// Which coaction a restriction comes from.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Canonical encoding of one structure of a set species.
///
/// Two equal structures have identical payloads, and the derived ordering on
/// payloads is the ordering of canonical encodings used to pick orbit
/// representatives.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Payload {
    /// The single structure of the exponential species.
    Unit,
    /// A linear order, listing the ground set from smallest to largest.
    Word(Vec<u8>),
    /// A set partition: blocks ascending internally, sorted between them.
    Blocks(Vec<Vec<u8>>),
    /// A set composition: ordered blocks, each ascending.
    OrderedBlocks(Vec<Vec<u8>>),
    /// A simple graph: bit `k` of `edges` is the `k`-th vertex pair in
    /// lexicographic order.
    Graph { order: u8, edges: u32 },
    /// A structure of a Cauchy product: `split[i] = 0` puts element `i + 1`
    /// in the left part.
    Pair { split: Vec<u8>, left: Box<Payload>, right: Box<Payload> },
    /// A structure of a table-defined species, by index.
    Ref(u16),
}

impl Payload {
    pub fn display(&self) -> String {
        match self {
            Payload::Unit => "e".to_string(),
            Payload::Word(w) => {
                if w.is_empty() {
                    "()".to_string()
                } else {
                    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("")
                }
            }
            Payload::Blocks(blocks) => {
                let inner = blocks
                    .iter()
                    .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                    .collect::<Vec<_>>()
                    .join("|");
                format!("{{{}}}", inner)
            }
            Payload::OrderedBlocks(blocks) => {
                let inner = blocks
                    .iter()
                    .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                    .collect::<Vec<_>>()
                    .join("|");
                format!("({})", inner)
            }
            Payload::Graph { order, edges } => {
                let pairs = builtin::edge_pairs(*order);
                let mut out = Vec::new();
                for (k, (a, b)) in pairs.iter().enumerate() {
                    if edges >> k & 1 == 1 {
                        out.push(format!("{}-{}", a, b));
                    }
                }
                format!("[{}]", out.join(","))
            }
            Payload::Pair { split, left, right } => {
                let s: Vec<String> = split
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| v == 0)
                    .map(|(i, _)| (i + 1).to_string())
                    .collect();
                format!("({{{}}}: {} ⊗ {})", s.join(","), left.display(), right.display())
            }
            Payload::Ref(i) => format!("#{}", i),
        }
    }
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// One element of `X₀[n]`, canonically encoded.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Structure {
    pub arity: usize,
    pub payload: Payload,
}

impl Structure {
    pub fn new(arity: usize, payload: Payload) -> Self {
        Structure { arity, payload }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.payload)
    }
}

/// A finitary set species with relabeling and standardized left/right
/// restrictions, i.e. the data of a linearized bicomodule over the
/// exponential species.
///
/// `restrict` returns `None` for components that are linearly zero (the
/// singleton species has no structures below its concentration arity).
pub trait Bicomodule: Send + Sync {
    fn id(&self) -> &str;

    /// Whether left and right restrictions coincide pointwise.
    fn cosymmetric(&self) -> bool;

    /// Largest arity with defined structures, if the species is truncated.
    fn arity_bound(&self) -> Option<usize> {
        None
    }

    /// Complete duplicate-free enumeration of `X₀[n]`.
    fn structures(&self, arity: usize) -> Vec<Structure>;

    fn relabel(&self, sigma: &Permutation, z: &Structure) -> Result<Structure>;

    /// The structure `z` restricted to `keep ⊆ {1, ..., arity}` and
    /// re-encoded on `{1, ..., |keep|}`.
    fn restrict(&self, side: Side, z: &Structure, keep: &SubsetOfN) -> Result<Option<Structure>>;

    fn describe(&self, z: &Structure) -> String {
        z.payload.display()
    }
}

/// Relabels by an adjacent transposition; the workhorse of orbit traversal.
pub(crate) fn relabel_adjacent(
    species: &dyn Bicomodule,
    k: usize,
    z: &Structure,
) -> Structure {
    let sigma = Permutation::adjacent(z.arity, k);
    species.relabel(&sigma, z).expect("adjacent relabeling cannot fail")
}
