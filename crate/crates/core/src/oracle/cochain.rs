//! Cochains of the complex with values in tensor powers of the exponential
//! species: equivariant scalar components indexed by decompositions.
//!
//! Two representations are used. A [`FunctionalCochain`] evaluates its
//! components on demand, which is how cofaces, codegeneracies, products and
//! the distinguished cocycles are built; it never materializes an orbit
//! basis, so it works at arities where storage would be prohibitive. A
//! [`Cochain`] stores values on orbit representatives of (composition,
//! structure) pairs and is the vector form used for matrix computations.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;

use crate::combinatorics::Decomposition;
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::species::{Bicomodule, Engine, PairKey, PairOrbitTable, Side, Structure};

/// Anything that evaluates like a cochain: a scalar component at each
/// decomposition of `{1, ..., n}` of length `degree`, for each structure of
/// arity `n`, invariant under simultaneous relabeling.
pub trait CochainEval: Send + Sync {
    fn degree(&self) -> usize;
    fn eval(&self, f: &Decomposition, z: &Structure) -> Rational;
}

/// A cochain given by an evaluation rule.
#[derive(Clone)]
pub struct FunctionalCochain {
    degree: usize,
    eval: Arc<dyn Fn(&Decomposition, &Structure) -> Rational + Send + Sync>,
}

impl FunctionalCochain {
    pub fn new(
        degree: usize,
        eval: impl Fn(&Decomposition, &Structure) -> Rational + Send + Sync + 'static,
    ) -> Self {
        FunctionalCochain { degree, eval: Arc::new(eval) }
    }
}

impl CochainEval for FunctionalCochain {
    fn degree(&self) -> usize {
        self.degree
    }

    fn eval(&self, f: &Decomposition, z: &Structure) -> Rational {
        debug_assert_eq!(f.length(), self.degree);
        debug_assert_eq!(f.ground_size(), z.arity);
        (self.eval)(f, z)
    }
}

/// A normalized cochain stored on orbit representatives of (composition,
/// structure) pairs, truncated at `max_arity`. Components at decompositions
/// with an empty block, and beyond the truncation arity, are zero.
#[derive(Clone)]
pub struct Cochain {
    pub species: String,
    pub degree: usize,
    pub max_arity: usize,
    tables: BTreeMap<usize, Arc<PairOrbitTable>>,
    components: BTreeMap<PairKey, Rational>,
}

impl Cochain {
    pub fn zero(engine: &Engine, species: &Arc<dyn Bicomodule>, degree: usize, max_arity: usize) -> Result<Self> {
        let mut tables = BTreeMap::new();
        for n in degree..=max_arity {
            tables.insert(n, engine.pair_table(species, n, degree)?);
        }
        Ok(Cochain {
            species: species.id().to_string(),
            degree,
            max_arity,
            tables,
            components: BTreeMap::new(),
        })
    }

    /// Stores a value on the orbit of the given pair.
    pub fn set_component(&mut self, f: &Decomposition, z: &Structure, value: Rational) {
        let n = f.ground_size();
        let table = self.tables.get(&n).expect("arity within bound");
        let key = PairKey { word: f.block_index_word(), payload: z.payload.clone() };
        let id = table.lookup(&key).expect("pair belongs to the species");
        let rep = table.orbits[id as usize].rep.clone();
        if value.is_zero() {
            self.components.remove(&rep);
        } else {
            self.components.insert(rep, value);
        }
    }

    pub fn components(&self) -> impl Iterator<Item = (&PairKey, &Rational)> {
        self.components.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Materializes an evaluation rule on all pair orbits with arity ≤
    /// `max_arity`.
    pub fn from_eval(
        engine: &Engine,
        species: &Arc<dyn Bicomodule>,
        source: &dyn CochainEval,
        max_arity: usize,
    ) -> Result<Self> {
        let mut out = Cochain::zero(engine, species, source.degree(), max_arity)?;
        let degree = source.degree();
        for n in degree..=max_arity {
            let table = out.tables.get(&n).unwrap().clone();
            for orbit in &table.orbits {
                let f = Decomposition::from_word(degree, &orbit.rep.word);
                let z = Structure::new(n, orbit.rep.payload.clone());
                let v = source.eval(&f, &z);
                if !v.is_zero() {
                    out.components.insert(orbit.rep.clone(), v);
                }
            }
        }
        Ok(out)
    }
}

impl CochainEval for Cochain {
    fn degree(&self) -> usize {
        self.degree
    }

    fn eval(&self, f: &Decomposition, z: &Structure) -> Rational {
        if f.length() != self.degree || !f.is_composition() || f.ground_size() > self.max_arity {
            return Rational::zero();
        }
        let Some(table) = self.tables.get(&f.ground_size()) else {
            return Rational::zero();
        };
        let key = PairKey { word: f.block_index_word(), payload: z.payload.clone() };
        match table.lookup(&key) {
            Some(id) => {
                let rep = &table.orbits[id as usize].rep;
                self.components.get(rep).cloned().unwrap_or_else(Rational::zero)
            }
            None => Rational::zero(),
        }
    }
}

/// The `i`-th coface of a cochain, `0 ≤ i ≤ degree + 1`. The outer cofaces
/// restrict the structure on the left and right; the inner ones merge
/// adjacent blocks.
pub fn coface(
    species: Arc<dyn Bicomodule>,
    alpha: Arc<dyn CochainEval>,
    i: usize,
) -> Result<FunctionalCochain> {
    let q = alpha.degree();
    if i > q + 1 {
        return Err(Error::IndexOutOfRange(format!("coface index {} for degree {}", i, q)));
    }
    Ok(FunctionalCochain::new(q + 1, move |f, z| coface_term(species.as_ref(), alpha.as_ref(), i, f, z)))
}

pub(crate) fn coface_term(
    species: &dyn Bicomodule,
    alpha: &dyn CochainEval,
    i: usize,
    f: &Decomposition,
    z: &Structure,
) -> Rational {
    let q = alpha.degree();
    debug_assert_eq!(f.length(), q + 1);
    if i == 0 {
        let keep = f.block(0).complement();
        match species.restrict(Side::Left, z, &keep).expect("restriction within bounds") {
            Some(y) => alpha.eval(&Decomposition::transport(&f.blocks()[1..], &keep), &y),
            None => Rational::zero(),
        }
    } else if i == q + 1 {
        let keep = f.block(q).complement();
        match species.restrict(Side::Right, z, &keep).expect("restriction within bounds") {
            Some(y) => alpha.eval(&Decomposition::transport(&f.blocks()[..q], &keep), &y),
            None => Rational::zero(),
        }
    } else {
        alpha.eval(&f.merge_adjacent(i - 1), z)
    }
}

/// The `j`-th codegeneracy: inserts an empty block at position `j`,
/// `0 ≤ j ≤ degree - 1`.
pub fn codegeneracy(alpha: Arc<dyn CochainEval>, j: usize) -> Result<FunctionalCochain> {
    let q = alpha.degree();
    if q == 0 || j > q - 1 {
        return Err(Error::IndexOutOfRange(format!("codegeneracy index {} for degree {}", j, q)));
    }
    Ok(FunctionalCochain::new(q - 1, move |f, z| alpha.eval(&f.insert_empty(j), z)))
}

/// The full differential `δ = Σ (-1)^i d^i` as an evaluation rule.
pub fn delta(species: Arc<dyn Bicomodule>, alpha: Arc<dyn CochainEval>) -> FunctionalCochain {
    let q = alpha.degree();
    FunctionalCochain::new(q + 1, move |f, z| {
        let mut acc = Rational::zero();
        for i in 0..=q + 1 {
            let term = coface_term(species.as_ref(), alpha.as_ref(), i, f, z);
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    })
}

/// A witness that a cochain identity fails: the decomposition, structure and
/// offending value.
#[derive(Clone, Debug)]
pub struct CochainWitness {
    pub decomposition: String,
    pub structure: String,
    pub value: Rational,
}

/// Checks `δα = 0` on all compositions of arity ≤ `max_arity`, in parallel
/// over structures. Returns the first witness in deterministic order.
pub fn delta_vanishes(
    species: &Arc<dyn Bicomodule>,
    alpha: &dyn CochainEval,
    max_arity: usize,
) -> Option<CochainWitness> {
    use rayon::prelude::*;
    let q = alpha.degree();
    for n in (q + 1)..=max_arity {
        let comps = crate::combinatorics::enumerate_compositions(n, q + 1);
        let structures = species.structures(n);
        let witness = structures.par_iter().find_map_first(|z| {
            for f in &comps {
                let mut acc = Rational::zero();
                for i in 0..=q + 1 {
                    let term = coface_term(species.as_ref(), alpha, i, f, z);
                    if i % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                if !acc.is_zero() {
                    return Some(CochainWitness {
                        decomposition: f.to_string(),
                        structure: species.describe(z),
                        value: acc,
                    });
                }
            }
            None
        });
        if witness.is_some() {
            return witness;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_decompositions;
    use crate::linalg::rat;
    use crate::species::linear_orders;

    fn all_pairs(species: &Arc<dyn Bicomodule>, n: usize, q: usize) -> Vec<(Decomposition, Structure)> {
        let mut out = Vec::new();
        for f in enumerate_decompositions(n, q) {
            for z in species.structures(n) {
                out.push((f.clone(), z));
            }
        }
        out
    }

    /// Components that only see the block sizes, a convenient test cochain.
    fn size_cochain(degree: usize) -> FunctionalCochain {
        FunctionalCochain::new(degree, |f, _z| {
            rat(f.blocks().iter().map(|b| b.len() as i64 + 1).product::<i64>())
        })
    }

    #[test]
    fn cosimplicial_identities_hold() {
        // σ^j ∘ d^j = id = σ^j ∘ d^{j+1}, exhaustively at arity ≤ 3, degree ≤ 3
        let l = linear_orders();
        for q in 1..=3usize {
            let alpha: Arc<dyn CochainEval> = Arc::new(size_cochain(q));
            for j in 0..=q - 1 {
                for i in [j, j + 1] {
                    let d = coface(l.clone(), alpha.clone(), i).unwrap();
                    let sd = codegeneracy(Arc::new(d), j).unwrap();
                    for n in 0..=3usize {
                        for (f, z) in all_pairs(&l, n, q) {
                            assert_eq!(
                                sd.eval(&f, &z),
                                alpha.eval(&f, &z),
                                "q={}, j={}, i={}, F={}, z={}",
                                q,
                                j,
                                i,
                                f,
                                z
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn codegeneracy_kills_normalized_cochains() {
        // σ^0 of a degree-1 normalized cochain reads a component with an
        // empty block
        let l = linear_orders();
        let kappa = crate::products::cardinality_cocycle();
        let s0 = codegeneracy(Arc::new(kappa), 0).unwrap();
        for z in l.structures(0) {
            let f = Decomposition::from_word(0, &[]);
            assert_eq!(s0.eval(&f, &z), rat(0));
        }
        let zero = FunctionalCochain::new(2, |_, _| rat(0));
        let s1 = codegeneracy(Arc::new(zero), 1).unwrap();
        for (f, z) in all_pairs(&l, 2, 1) {
            assert_eq!(s1.eval(&f, &z), rat(0));
        }
    }

    #[test]
    fn coface_index_out_of_range_is_rejected() {
        let l = linear_orders();
        let alpha: Arc<dyn CochainEval> = Arc::new(size_cochain(2));
        assert!(coface(l.clone(), alpha.clone(), 3).is_ok());
        assert!(coface(l, alpha, 4).is_err());
    }
}
