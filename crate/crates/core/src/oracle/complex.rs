//! The normalized cochain complex truncated by arity, and its cohomology.
//!
//! Components at arity `n` of the differential only read components at
//! arities ≤ `n`, so restricting to arities ≤ `N` is a quotient complex; its
//! cohomology agrees with the full one in degrees ≤ `N - 1` because the
//! discarded part is acyclic there.

use std::collections::HashMap;
use std::sync::Arc;

use num::Zero;

use crate::combinatorics::Decomposition;
use crate::error::{Error, Result};
use crate::linalg::{cohomology_at, Rational, SparseMatrix};
use crate::oracle::cochain::Cochain;
use crate::species::{Bicomodule, Engine, PairKey, Side, Structure};

/// Basis of the degree-`q` term truncated at arity `max_arity`: one basis
/// functional per orbit of (composition, structure) pairs.
pub struct ComplexBasis {
    pub degree: usize,
    pub max_arity: usize,
    pub entries: Vec<(usize, u32)>,
    index: HashMap<(usize, u32), usize>,
}

impl ComplexBasis {
    pub fn build(engine: &Engine, species: &Arc<dyn Bicomodule>, degree: usize, max_arity: usize) -> Result<Self> {
        let mut entries = Vec::new();
        for n in degree..=max_arity {
            let table = engine.pair_table(species, n, degree)?;
            for id in 0..table.dimension() as u32 {
                entries.push((n, id));
            }
        }
        let index = entries.iter().enumerate().map(|(pos, &e)| (e, pos)).collect();
        Ok(ComplexBasis { degree, max_arity, entries, index })
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn position(&self, arity: usize, orbit: u32) -> Option<usize> {
        self.index.get(&(arity, orbit)).copied()
    }
}

/// The matrix of `δ` from degree `q` to degree `q + 1`, both truncated at
/// `max_arity`.
pub fn delta_matrix(
    engine: &Engine,
    species: &Arc<dyn Bicomodule>,
    q: usize,
    max_arity: usize,
) -> Result<SparseMatrix> {
    let source = ComplexBasis::build(engine, species, q, max_arity)?;
    let target = ComplexBasis::build(engine, species, q + 1, max_arity)?;
    let mut matrix = SparseMatrix::new(target.dimension(), source.dimension());

    for (row, &(n, orbit)) in target.entries.iter().enumerate() {
        let table = engine.pair_table(species, n, q + 1)?;
        let rep = &table.orbits[orbit as usize].rep;
        let f = Decomposition::from_word(q + 1, &rep.word);
        let z = Structure::new(n, rep.payload.clone());
        // δ component by component: outer cofaces restrict, inner ones merge
        for i in 0..=q + 1 {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let (g, y) = if i == 0 {
                let keep = f.block(0).complement();
                let Some(y) = species.restrict(Side::Left, &z, &keep)? else { continue };
                (Decomposition::transport(&f.blocks()[1..], &keep), y)
            } else if i == q + 1 {
                let keep = f.block(q).complement();
                let Some(y) = species.restrict(Side::Right, &z, &keep)? else { continue };
                (Decomposition::transport(&f.blocks()[..q], &keep), y)
            } else {
                (f.merge_adjacent(i - 1), z.clone())
            };
            let m = g.ground_size();
            let source_table = engine.pair_table(species, m, q)?;
            let key = PairKey { word: g.block_index_word(), payload: y.payload };
            let id = source_table.lookup(&key).expect("coface lands in the species");
            let col = source.position(m, id).expect("coface stays within the truncation");
            matrix.add_to(row, col, &crate::linalg::rat(sign));
        }
    }
    Ok(matrix)
}

/// Cohomology at degree `q` of the truncated normalized complex. Exact for
/// the full complex when `q ≤ max_arity - 1`; the bound `max_arity ≥ q + 1`
/// is required.
pub fn truncated_cohomology(
    engine: &Engine,
    species: &Arc<dyn Bicomodule>,
    q: usize,
    max_arity: usize,
) -> Result<(usize, Vec<Cochain>)> {
    if max_arity < q + 1 {
        return Err(Error::TruncationTooSmall { needed: q + 1, got: max_arity });
    }
    let d_in = if q == 0 {
        let basis = ComplexBasis::build(engine, species, 0, max_arity)?;
        SparseMatrix::new(basis.dimension(), 0)
    } else {
        delta_matrix(engine, species, q - 1, max_arity)?
    };
    let d_out = delta_matrix(engine, species, q, max_arity)?;
    let (dim, vectors) = cohomology_at(&d_in, &d_out)?;
    let basis = ComplexBasis::build(engine, species, q, max_arity)?;
    let mut reps = Vec::new();
    for v in vectors {
        reps.push(vector_to_cochain(engine, species, q, max_arity, &basis, &v)?);
    }
    Ok((dim, reps))
}

pub fn vector_to_cochain(
    engine: &Engine,
    species: &Arc<dyn Bicomodule>,
    q: usize,
    max_arity: usize,
    basis: &ComplexBasis,
    v: &[Rational],
) -> Result<Cochain> {
    let mut out = Cochain::zero(engine, species, q, max_arity)?;
    for (pos, val) in v.iter().enumerate() {
        if val.is_zero() {
            continue;
        }
        let (n, orbit) = basis.entries[pos];
        let table = engine.pair_table(species, n, q)?;
        let rep = &table.orbits[orbit as usize].rep;
        let f = Decomposition::from_word(q, &rep.word);
        let z = Structure::new(n, rep.payload.clone());
        out.set_component(&f, &z, val.clone());
    }
    Ok(out)
}

/// Expresses a stored cochain in a complex basis.
pub fn cochain_to_vector(
    engine: &Engine,
    species: &Arc<dyn Bicomodule>,
    basis: &ComplexBasis,
    alpha: &Cochain,
) -> Result<Vec<Rational>> {
    use crate::oracle::CochainEval;
    let mut v = vec![Rational::zero(); basis.dimension()];
    for (pos, &(n, orbit)) in basis.entries.iter().enumerate() {
        let table = engine.pair_table(species, n, basis.degree)?;
        let rep = &table.orbits[orbit as usize].rep;
        let f = Decomposition::from_word(basis.degree, &rep.word);
        let z = Structure::new(n, rep.payload.clone());
        v[pos] = alpha.eval(&f, &z);
    }
    Ok(v)
}
