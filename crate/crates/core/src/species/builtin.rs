//! The built-in species: exponential, singleton powers, linear orders,
//! partitions, set compositions, and graphs. All carry their usual
//! restriction structure, which is the same on both sides.

use std::sync::Arc;

use crate::combinatorics::{enumerate_compositions, Permutation, SubsetOfN};
use crate::error::{Error, Result};
use crate::species::{Bicomodule, Payload, Side, Structure};

fn check_arity(z: &Structure, sigma: &Permutation) -> Result<()> {
    if sigma.degree() != z.arity {
        return Err(Error::ArityMismatch { expected: z.arity, got: sigma.degree() });
    }
    Ok(())
}

fn check_subset(z: &Structure, keep: &SubsetOfN) -> Result<()> {
    if keep.ground_size() != z.arity {
        return Err(Error::InvalidSubset(format!(
            "subset on ground {} applied to structure of arity {}",
            keep.ground_size(),
            z.arity
        )));
    }
    Ok(())
}

/// Vertex pairs `(a, b)`, `a < b`, of `{1, ..., n}` in lexicographic order.
pub(crate) fn edge_pairs(n: u8) -> Vec<(u8, u8)> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            out.push((a, b));
        }
    }
    out
}

pub(crate) fn graph_has_edge(order: u8, edges: u32, a: u8, b: u8) -> bool {
    edges >> edge_index(order, a, b) & 1 == 1
}

fn edge_index(n: u8, a: u8, b: u8) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let a = a as usize;
    let b = b as usize;
    let n = n as usize;
    // pairs (1,2)..(1,n) come first, then (2,3)..
    (a - 1) * n - a * (a - 1) / 2 + (b - a) - 1
}

/// The exponential species: one structure per finite set.
struct Exponential;

impl Bicomodule for Exponential {
    fn id(&self) -> &str {
        "E"
    }

    fn cosymmetric(&self) -> bool {
        true
    }

    fn structures(&self, arity: usize) -> Vec<Structure> {
        vec![Structure::new(arity, Payload::Unit)]
    }

    fn relabel(&self, sigma: &Permutation, z: &Structure) -> Result<Structure> {
        check_arity(z, sigma)?;
        Ok(z.clone())
    }

    fn restrict(&self, _side: Side, z: &Structure, keep: &SubsetOfN) -> Result<Option<Structure>> {
        check_subset(z, keep)?;
        Ok(Some(Structure::new(keep.len(), Payload::Unit)))
    }
}

pub fn exponential() -> Arc<dyn Bicomodule> {
    Arc::new(Exponential)
}

/// The `k`-th Cauchy power of the singleton species: `k!` linear orders at
/// arity `k`, nothing elsewhere. Restriction to a proper subset is zero.
struct SingletonPower {
    k: usize,
    id: String,
}

impl Bicomodule for SingletonPower {
    fn id(&self) -> &str {
        &self.id
    }

    fn cosymmetric(&self) -> bool {
        true
    }

    fn structures(&self, arity: usize) -> Vec<Structure> {
        if arity != self.k {
            return Vec::new();
        }
        Permutation::all(self.k)
            .into_iter()
            .map(|p| Structure::new(self.k, Payload::Word(p.images().to_vec())))
            .collect()
    }

    fn relabel(&self, sigma: &Permutation, z: &Structure) -> Result<Structure> {
        check_arity(z, sigma)?;
        let Payload::Word(w) = &z.payload else { unreachable!() };
        Ok(Structure::new(z.arity, Payload::Word(w.iter().map(|&x| sigma.image(x)).collect())))
    }

    fn restrict(&self, _side: Side, z: &Structure, keep: &SubsetOfN) -> Result<Option<Structure>> {
        check_subset(z, keep)?;
        if keep.is_full() {
            Ok(Some(z.clone()))
        } else {
            Ok(None)
        }
    }
}

pub fn singleton_power(k: usize) -> Arc<dyn Bicomodule> {
    let id = match k {
        0 => "1".to_string(),
        1 => "S".to_string(),
        _ => format!("S^{}", k),
    };
    Arc::new(SingletonPower { k, id })
}

/// Linear orders, restricted by keeping the induced order.
struct LinearOrders;

fn restrict_word(w: &[u8], keep: &SubsetOfN) -> Vec<u8> {
    w.iter().filter(|&&x| keep.contains(x)).map(|&x| keep.standardize(x).unwrap()).collect()
}

impl Bicomodule for LinearOrders {
    fn id(&self) -> &str {
        "L"
    }

    fn cosymmetric(&self) -> bool {
        true
    }

    fn structures(&self, arity: usize) -> Vec<Structure> {
        Permutation::all(arity)
            .into_iter()
            .map(|p| Structure::new(arity, Payload::Word(p.images().to_vec())))
            .collect()
    }

    fn relabel(&self, sigma: &Permutation, z: &Structure) -> Result<Structure> {
        check_arity(z, sigma)?;
        let Payload::Word(w) = &z.payload else { unreachable!() };
        Ok(Structure::new(z.arity, Payload::Word(w.iter().map(|&x| sigma.image(x)).collect())))
    }

    fn restrict(&self, _side: Side, z: &Structure, keep: &SubsetOfN) -> Result<Option<Structure>> {
        check_subset(z, keep)?;
        let Payload::Word(w) = &z.payload else { unreachable!() };
        Ok(Some(Structure::new(keep.len(), Payload::Word(restrict_word(w, keep)))))
    }
}

pub fn linear_orders() -> Arc<dyn Bicomodule> {
    Arc::new(LinearOrders)
}

/// Set partitions, restricted by intersecting blocks and dropping empties.
struct Partitions;

fn canonical_blocks(mut blocks: Vec<Vec<u8>>) -> Vec<Vec<u8>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    blocks
}

fn enumerate_partitions(n: usize) -> Vec<Vec<Vec<u8>>> {
    // restricted-growth words
    let mut out = Vec::new();
    let mut word = vec![0usize; n];
    fn rec(word: &mut Vec<usize>, i: usize, max_used: usize, out: &mut Vec<Vec<Vec<u8>>>) {
        let n = word.len();
        if i == n {
            let blocks = if n == 0 {
                Vec::new()
            } else {
                let count = max_used + 1;
                let mut blocks = vec![Vec::new(); count];
                for (e, &b) in word.iter().enumerate() {
                    blocks[b].push(e as u8 + 1);
                }
                blocks
            };
            out.push(canonical_blocks(blocks));
            return;
        }
        for b in 0..=max_used + 1 {
            word[i] = b;
            rec(word, i + 1, max_used.max(b), out);
        }
    }
    if n == 0 {
        out.push(Vec::new());
    } else {
        for b in 0..1 {
            word[0] = b;
            rec(&mut word, 1, 0, &mut out);
        }
    }
    out.sort();
    out.dedup();
    out
}

impl Bicomodule for Partitions {
    fn id(&self) -> &str {
        "P"
    }

    fn cosymmetric(&self) -> bool {
        true
    }

    fn structures(&self, arity: usize) -> Vec<Structure> {
        enumerate_partitions(arity)
            .into_iter()
            .map(|b| Structure::new(arity, Payload::Blocks(b)))
            .collect()
    }

    fn relabel(&self, sigma: &Permutation, z: &Structure) -> Result<Structure> {
        check_arity(z, sigma)?;
        let Payload::Blocks(blocks) = &z.payload else { unreachable!() };
        let mapped = blocks
            .iter()
            .map(|b| b.iter().map(|&x| sigma.image(x)).collect())
            .collect();
        Ok(Structure::new(z.arity, Payload::Blocks(canonical_blocks(mapped))))
    }

    fn restrict(&self, _side: Side, z: &Structure, keep: &SubsetOfN) -> Result<Option<Structure>> {
        check_subset(z, keep)?;
        let Payload::Blocks(blocks) = &z.payload else { unreachable!() };
        let mapped: Vec<Vec<u8>> = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .filter(|&&x| keep.contains(x))
                    .map(|&x| keep.standardize(x).unwrap())
                    .collect::<Vec<u8>>()
            })
            .filter(|b| !b.is_empty())
            .collect();
        Ok(Some(Structure::new(keep.len(), Payload::Blocks(canonical_blocks(mapped)))))
    }
}

pub fn partitions() -> Arc<dyn Bicomodule> {
    Arc::new(Partitions)
}

/// Set compositions (ordered partitions), restricted by intersecting blocks
/// in order and deleting empties.
struct SetCompositions;

impl Bicomodule for SetCompositions {
    fn id(&self) -> &str {
        "C"
    }

    fn cosymmetric(&self) -> bool {
        true
    }

    fn structures(&self, arity: usize) -> Vec<Structure> {
        let mut out = Vec::new();
        for q in 0..=arity {
            for comp in enumerate_compositions(arity, q) {
                if arity == 0 && q > 0 {
                    continue;
                }
                let blocks = comp.blocks().iter().map(|b| b.members().to_vec()).collect();
                out.push(Structure::new(arity, Payload::OrderedBlocks(blocks)));
            }
        }
        out.sort();
        out
    }

    fn relabel(&self, sigma: &Permutation, z: &Structure) -> Result<Structure> {
        check_arity(z, sigma)?;
        let Payload::OrderedBlocks(blocks) = &z.payload else { unreachable!() };
        let mapped = blocks
            .iter()
            .map(|b| {
                let mut m: Vec<u8> = b.iter().map(|&x| sigma.image(x)).collect();
                m.sort_unstable();
                m
            })
            .collect();
        Ok(Structure::new(z.arity, Payload::OrderedBlocks(mapped)))
    }

    fn restrict(&self, _side: Side, z: &Structure, keep: &SubsetOfN) -> Result<Option<Structure>> {
        check_subset(z, keep)?;
        let Payload::OrderedBlocks(blocks) = &z.payload else { unreachable!() };
        let mapped: Vec<Vec<u8>> = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .filter(|&&x| keep.contains(x))
                    .map(|&x| keep.standardize(x).unwrap())
                    .collect::<Vec<u8>>()
            })
            .filter(|b| !b.is_empty())
            .collect();
        Ok(Some(Structure::new(keep.len(), Payload::OrderedBlocks(mapped))))
    }
}

pub fn set_compositions() -> Arc<dyn Bicomodule> {
    Arc::new(SetCompositions)
}

/// Simple graphs, restricted to induced subgraphs.
struct Graphs;

impl Bicomodule for Graphs {
    fn id(&self) -> &str {
        "Gr"
    }

    fn cosymmetric(&self) -> bool {
        true
    }

    fn structures(&self, arity: usize) -> Vec<Structure> {
        let n = arity as u8;
        let m = edge_pairs(n).len();
        (0u32..1 << m).map(|edges| Structure::new(arity, Payload::Graph { order: n, edges })).collect()
    }

    fn relabel(&self, sigma: &Permutation, z: &Structure) -> Result<Structure> {
        check_arity(z, sigma)?;
        let Payload::Graph { order, edges } = z.payload else { unreachable!() };
        let pairs = edge_pairs(order);
        let mut out = 0u32;
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if edges >> k & 1 == 1 {
                out |= 1 << edge_index(order, sigma.image(a), sigma.image(b));
            }
        }
        Ok(Structure::new(z.arity, Payload::Graph { order, edges: out }))
    }

    fn restrict(&self, _side: Side, z: &Structure, keep: &SubsetOfN) -> Result<Option<Structure>> {
        check_subset(z, keep)?;
        let Payload::Graph { order, edges } = z.payload else { unreachable!() };
        let pairs = edge_pairs(order);
        let m = keep.len() as u8;
        let mut out = 0u32;
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if edges >> k & 1 == 1 && keep.contains(a) && keep.contains(b) {
                out |= 1 << edge_index(m, keep.standardize(a).unwrap(), keep.standardize(b).unwrap());
            }
        }
        Ok(Some(Structure::new(keep.len(), Payload::Graph { order: m, edges: out })))
    }
}

pub fn graphs() -> Arc<dyn Bicomodule> {
    Arc::new(Graphs)
}
