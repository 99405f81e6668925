//! Orbit enumeration for the relabeling action, with odd-stabilizer
//! detection, and orbits of (composition, structure) pairs.
//!
//! Orbits are traversed by breadth-first search over adjacent
//! transpositions, tracking the parity of the permutation that carries the
//! representative to each member. A parity conflict on any member means some
//! odd permutation stabilizes the orbit.

use std::collections::HashMap;

use crate::error::Result;
use crate::species::{relabel_adjacent, Bicomodule, Payload};

#[derive(Clone, Debug)]
pub struct OrbitInfo {
    pub rep: Payload,
    pub size: usize,
    pub has_odd_stabilizer: bool,
}

/// Orbits of `X₀[n]` under `S_n`, with canonical representatives (the least
/// canonical encoding in each orbit).
pub struct OrbitTable {
    pub arity: usize,
    pub orbits: Vec<OrbitInfo>,
    index: HashMap<Payload, (u32, i8)>,
}

impl OrbitTable {
    pub fn build(species: &dyn Bicomodule, arity: usize) -> Result<OrbitTable> {
        let structures = species.structures(arity);
        let mut index: HashMap<Payload, (u32, i8)> = HashMap::with_capacity(structures.len());
        let mut orbits: Vec<OrbitInfo> = Vec::new();

        for start in &structures {
            if index.contains_key(&start.payload) {
                continue;
            }
            // parity of the permutation carrying `start` to each member
            let mut local: HashMap<Payload, u8> = HashMap::new();
            local.insert(start.payload.clone(), 0);
            let mut queue = vec![start.clone()];
            let mut odd = false;
            while let Some(z) = queue.pop() {
                let par = local[&z.payload];
                for k in 1..arity {
                    let y = relabel_adjacent(species, k, &z);
                    match local.get(&y.payload) {
                        None => {
                            local.insert(y.payload.clone(), par ^ 1);
                            queue.push(y);
                        }
                        Some(&p) => {
                            if p != par ^ 1 {
                                odd = true;
                            }
                        }
                    }
                }
            }
            let rep = local.keys().min().expect("orbit is nonempty").clone();
            let rep_par = local[&rep];
            let id = orbits.len() as u32;
            for (payload, par) in &local {
                let sign = if (par ^ rep_par) == 0 { 1 } else { -1 };
                index.insert(payload.clone(), (id, sign));
            }
            orbits.push(OrbitInfo { rep, size: local.len(), has_odd_stabilizer: odd });
        }

        // canonical order: ascending representatives
        let mut order: Vec<u32> = (0..orbits.len() as u32).collect();
        order.sort_by(|&a, &b| orbits[a as usize].rep.cmp(&orbits[b as usize].rep));
        let mut relocation = vec![0u32; orbits.len()];
        for (new_id, &old_id) in order.iter().enumerate() {
            relocation[old_id as usize] = new_id as u32;
        }
        let mut sorted = Vec::with_capacity(orbits.len());
        for &old_id in &order {
            sorted.push(orbits[old_id as usize].clone());
        }
        for v in index.values_mut() {
            v.0 = relocation[v.0 as usize];
        }
        Ok(OrbitTable { arity, orbits: sorted, index })
    }

    /// Orbit id and the sign of a permutation carrying the representative to
    /// this element. The sign is meaningless for odd-stabilized orbits.
    pub fn lookup(&self, payload: &Payload) -> Option<(u32, i8)> {
        self.index.get(payload).copied()
    }

    pub fn orbit(&self, id: u32) -> &OrbitInfo {
        &self.orbits[id as usize]
    }

    /// Orbit ids with no odd stabilizer, in representative order; these index
    /// the Koszul basis in this degree.
    pub fn koszul_basis(&self) -> Vec<u32> {
        (0..self.orbits.len() as u32).filter(|&i| !self.orbits[i as usize].has_odd_stabilizer).collect()
    }

    pub fn total_structures(&self) -> usize {
        self.orbits.iter().map(|o| o.size).sum()
    }
}

/// A (composition, structure) pair at a fixed arity, keyed by the
/// block-index word of the composition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PairKey {
    pub word: Vec<u8>,
    pub payload: Payload,
}

#[derive(Clone, Debug)]
pub struct PairOrbit {
    pub rep: PairKey,
    pub size: usize,
}

/// Orbits of pairs (composition of `[n]` into `q` blocks, structure) under
/// the diagonal relabeling action. These index the normalized cochain bases.
pub struct PairOrbitTable {
    pub arity: usize,
    pub degree: usize,
    pub orbits: Vec<PairOrbit>,
    index: HashMap<PairKey, u32>,
}

impl PairOrbitTable {
    pub fn build(species: &dyn Bicomodule, arity: usize, degree: usize) -> Result<PairOrbitTable> {
        let compositions = crate::combinatorics::enumerate_compositions(arity, degree);
        let structures = species.structures(arity);
        let mut index: HashMap<PairKey, u32> = HashMap::new();
        let mut orbits: Vec<PairOrbit> = Vec::new();

        for comp in &compositions {
            let word = comp.block_index_word();
            for z in &structures {
                let start = PairKey { word: word.clone(), payload: z.payload.clone() };
                if index.contains_key(&start) {
                    continue;
                }
                let mut members: Vec<PairKey> = vec![start.clone()];
                let mut seen: HashMap<PairKey, ()> = HashMap::new();
                seen.insert(start.clone(), ());
                let mut queue = vec![(start, z.clone())];
                while let Some((key, zs)) = queue.pop() {
                    for k in 1..arity {
                        let mut w = key.word.clone();
                        w.swap(k - 1, k);
                        let y = relabel_adjacent(species, k, &zs);
                        let next = PairKey { word: w, payload: y.payload.clone() };
                        if !seen.contains_key(&next) {
                            seen.insert(next.clone(), ());
                            members.push(next.clone());
                            queue.push((next, y));
                        }
                    }
                }
                let rep = members.iter().min().unwrap().clone();
                let id = orbits.len() as u32;
                for m in members.iter() {
                    index.insert(m.clone(), id);
                }
                orbits.push(PairOrbit { rep, size: members.len() });
            }
        }

        let mut order: Vec<u32> = (0..orbits.len() as u32).collect();
        order.sort_by(|&a, &b| orbits[a as usize].rep.cmp(&orbits[b as usize].rep));
        let mut relocation = vec![0u32; orbits.len()];
        for (new_id, &old_id) in order.iter().enumerate() {
            relocation[old_id as usize] = new_id as u32;
        }
        let mut sorted = Vec::with_capacity(orbits.len());
        for &old_id in &order {
            sorted.push(orbits[old_id as usize].clone());
        }
        for v in index.values_mut() {
            *v = relocation[*v as usize];
        }
        Ok(PairOrbitTable { arity, degree, orbits: sorted, index })
    }

    pub fn lookup(&self, key: &PairKey) -> Option<u32> {
        self.index.get(key).copied()
    }

    pub fn dimension(&self) -> usize {
        self.orbits.len()
    }
}
