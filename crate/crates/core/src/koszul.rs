//! The small complex: degree `p` holds the equivariant functionals from the
//! arity-`p` structures to the sign representation. Such a functional is
//! determined by its values on orbit representatives, vanishes on every
//! orbit with an odd stabilizer, and transports along `f(σ·z) = sign(σ) f(z)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;

use crate::combinatorics::{Decomposition, Permutation, SubsetOfN};
use crate::error::{Error, Result};
use crate::linalg::{cohomology_at, rat, Rational, SparseMatrix};
use crate::oracle::{CochainEval, FunctionalCochain};
use crate::species::{Bicomodule, Engine, OrbitTable, Payload, Side, Structure};

/// An equivariant functional to the sign representation, stored on orbit
/// representatives without odd stabilizers.
#[derive(Clone)]
pub struct KoszulCochain {
    pub species: String,
    pub degree: usize,
    table: Arc<OrbitTable>,
    coeffs: BTreeMap<Payload, Rational>,
}

impl KoszulCochain {
    pub fn zero(engine: &Engine, species: &Arc<dyn Bicomodule>, degree: usize) -> Result<Self> {
        Ok(KoszulCochain {
            species: species.id().to_string(),
            degree,
            table: engine.orbit_table(species, degree)?,
            coeffs: BTreeMap::new(),
        })
    }

    /// Sets the value on an orbit representative; the orbit must have no odd
    /// stabilizer.
    pub fn set(&mut self, rep: &Payload, value: Rational) {
        let (id, _) = self.table.lookup(rep).expect("representative belongs to the species");
        let orbit = self.table.orbit(id);
        assert_eq!(&orbit.rep, rep, "value must be stored on the orbit representative");
        assert!(!orbit.has_odd_stabilizer, "odd-stabilized orbits carry no nonzero values");
        if value.is_zero() {
            self.coeffs.remove(rep);
        } else {
            self.coeffs.insert(rep.clone(), value);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<Payload, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `f(z)`: zero on odd-stabilized orbits, sign-transported otherwise.
    pub fn evaluate(&self, z: &Structure) -> Result<Rational> {
        if z.arity != self.degree {
            return Err(Error::ArityMismatch { expected: self.degree, got: z.arity });
        }
        let Some((id, sign)) = self.table.lookup(&z.payload) else {
            return Err(Error::UnknownSpecies(format!(
                "structure {} does not belong to `{}` at arity {}",
                z.payload, self.species, self.degree
            )));
        };
        let orbit = self.table.orbit(id);
        if orbit.has_odd_stabilizer {
            return Ok(Rational::zero());
        }
        let Some(c) = self.coeffs.get(&orbit.rep) else {
            return Ok(Rational::zero());
        };
        Ok(if sign > 0 { c.clone() } else { -c.clone() })
    }

    pub fn scale(&self, factor: &Rational) -> KoszulCochain {
        let mut out = self.clone();
        if factor.is_zero() {
            out.coeffs.clear();
            return out;
        }
        for v in out.coeffs.values_mut() {
            *v *= factor;
        }
        out
    }

    pub fn sub(&self, other: &KoszulCochain) -> KoszulCochain {
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            let cur = out.coeffs.get(k).cloned().unwrap_or_else(Rational::zero) - v;
            if cur.is_zero() {
                out.coeffs.remove(k);
            } else {
                out.coeffs.insert(k.clone(), cur);
            }
        }
        out
    }
}

impl PartialEq for KoszulCochain {
    fn eq(&self, other: &Self) -> bool {
        self.species == other.species && self.degree == other.degree && self.coeffs == other.coeffs
    }
}

impl std::fmt::Debug for KoszulCochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "KoszulCochain({}, deg {}, {{", self.species, self.degree)?;
        for (k, v) in &self.coeffs {
            write!(f, " {} ↦ {};", k, v)?;
        }
        write!(f, " }})")
    }
}

/// Dimension of the degree-`p` term: the number of orbits of arity-`p`
/// structures with no odd stabilizer.
pub fn dimension(engine: &Engine, species: &Arc<dyn Bicomodule>, p: usize) -> Result<usize> {
    Ok(engine.orbit_table(species, p)?.koszul_basis().len())
}

/// The basis functionals: value one on one even orbit representative each.
pub fn basis(engine: &Engine, species: &Arc<dyn Bicomodule>, p: usize) -> Result<Vec<KoszulCochain>> {
    let table = engine.orbit_table(species, p)?;
    let mut out = Vec::new();
    for id in table.koszul_basis() {
        let mut f = KoszulCochain::zero(engine, species, p)?;
        f.set(&table.orbit(id).rep.clone(), rat(1));
        out.push(f);
    }
    Ok(out)
}

fn differential_value(
    species: &Arc<dyn Bicomodule>,
    f: &KoszulCochain,
    z: &Structure,
) -> Result<Rational> {
    let p1 = z.arity;
    let mut acc = Rational::zero();
    for i in 1..=p1 as u8 {
        let keep = SubsetOfN::full(p1).remove(i);
        let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
        if let Some(y) = species.restrict(Side::Right, z, &keep)? {
            let v = f.evaluate(&y)?;
            if sign > 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        if let Some(y) = species.restrict(Side::Left, z, &keep)? {
            let v = f.evaluate(&y)?;
            if sign > 0 {
                acc -= v;
            } else {
                acc += v;
            }
        }
    }
    Ok(acc)
}

/// The differential: the alternating sum over single deletions of the right
/// minus left restrictions. Identically zero for cosymmetric species.
pub fn differential(
    engine: &Engine,
    species: &Arc<dyn Bicomodule>,
    f: &KoszulCochain,
) -> Result<KoszulCochain> {
    let p1 = f.degree + 1;
    let table = engine.orbit_table(species, p1)?;
    let mut out = KoszulCochain::zero(engine, species, p1)?;
    for id in table.koszul_basis() {
        let rep = table.orbit(id).rep.clone();
        let v = differential_value(species, f, &Structure::new(p1, rep.clone()))?;
        if !v.is_zero() {
            out.set(&rep, v);
        }
    }
    Ok(out)
}

/// One degree of the complex: the basis in degree `p` and the matrix of the
/// differential into degree `p + 1`.
pub struct KoszulSlice {
    pub degree: usize,
    pub basis: Vec<Payload>,
    pub differential: SparseMatrix,
}

pub fn complex_slice(engine: &Engine, species: &Arc<dyn Bicomodule>, p: usize) -> Result<KoszulSlice> {
    let table_p = engine.orbit_table(species, p)?;
    let basis_ids = table_p.koszul_basis();
    let basis: Vec<Payload> = basis_ids.iter().map(|&id| table_p.orbit(id).rep.clone()).collect();
    let dim_p = basis.len();

    if species.cosymmetric() {
        // the two restrictions agree termwise, so the matrix is zero; this
        // also avoids enumerating arity p + 1
        return Ok(KoszulSlice { degree: p, basis, differential: SparseMatrix::new(0, dim_p) });
    }

    let differential = differential_matrix(engine, species, p)?;
    Ok(KoszulSlice { degree: p, basis, differential })
}

/// The matrix of the differential from degree `p` to `p + 1`, always built
/// from the deletion formula (no cosymmetry shortcut).
pub fn differential_matrix(
    engine: &Engine,
    species: &Arc<dyn Bicomodule>,
    p: usize,
) -> Result<SparseMatrix> {
    let table_p = engine.orbit_table(species, p)?;
    let basis: Vec<Payload> =
        table_p.koszul_basis().iter().map(|&id| table_p.orbit(id).rep.clone()).collect();
    let fs = basis_cochains(engine, species, p, &basis)?;
    let table_up = engine.orbit_table(species, p + 1)?;
    let up_ids = table_up.koszul_basis();
    let mut matrix = SparseMatrix::new(up_ids.len(), basis.len());
    for (row, &uid) in up_ids.iter().enumerate() {
        let z = Structure::new(p + 1, table_up.orbit(uid).rep.clone());
        for (col, f) in fs.iter().enumerate() {
            let v = differential_value(species, f, &z)?;
            if !v.is_zero() {
                matrix.set(row, col, v);
            }
        }
    }
    Ok(matrix)
}

fn basis_cochains(
    engine: &Engine,
    species: &Arc<dyn Bicomodule>,
    p: usize,
    basis: &[Payload],
) -> Result<Vec<KoszulCochain>> {
    basis
        .iter()
        .map(|rep| {
            let mut f = KoszulCochain::zero(engine, species, p)?;
            f.set(rep, rat(1));
            Ok(f)
        })
        .collect()
}

/// Cohomology of the small complex at degree `p`: dimension and
/// representative cocycles.
pub fn cohomology(
    engine: &Engine,
    species: &Arc<dyn Bicomodule>,
    p: usize,
) -> Result<(usize, Vec<KoszulCochain>)> {
    let slice = complex_slice(engine, species, p)?;
    let dim_p = slice.basis.len();
    let d_in = if p == 0 {
        SparseMatrix::new(dim_p, 0)
    } else {
        let below = complex_slice(engine, species, p - 1)?;
        if species.cosymmetric() {
            SparseMatrix::new(dim_p, below.basis.len())
        } else {
            below.differential
        }
    };
    let (dim, vectors) = cohomology_at(&d_in, &slice.differential)?;
    let mut reps = Vec::new();
    for v in vectors {
        let mut f = KoszulCochain::zero(engine, species, p)?;
        for (i, val) in v.iter().enumerate() {
            if !val.is_zero() {
                f.set(&slice.basis[i], val.clone());
            }
        }
        reps.push(f);
    }
    Ok((dim, reps))
}

/// Collapses a cochain to its equivariant shadow: the alternating sum of its
/// components over singleton decompositions.
pub fn cochain_to_koszul(
    engine: &Engine,
    species: &Arc<dyn Bicomodule>,
    alpha: &dyn CochainEval,
) -> Result<KoszulCochain> {
    let p = alpha.degree();
    let table = engine.orbit_table(species, p)?;
    let mut out = KoszulCochain::zero(engine, species, p)?;
    let perms = Permutation::all(p);
    for id in table.koszul_basis() {
        let rep = table.orbit(id).rep.clone();
        let z = Structure::new(p, rep.clone());
        let mut acc = Rational::zero();
        for sigma in &perms {
            // block k of the singleton decomposition of σ holds σ(k)
            let inv = sigma.inverse();
            let word: Vec<u8> = (1..=p as u8).map(|x| inv.image(x)).collect();
            let f = Decomposition::from_word(p, &word);
            let v = alpha.eval(&f, &z);
            if sigma.sign() > 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        if !acc.is_zero() {
            out.set(&rep, acc);
        }
    }
    Ok(out)
}

/// The standard lift: supported at arity `p` on singleton decompositions,
/// with the component at the decomposition of `σ` equal to `sign(σ)/p!` times
/// the functional.
pub fn koszul_to_cochain(f: &KoszulCochain) -> FunctionalCochain {
    let p = f.degree;
    let f = f.clone();
    let factorial: i64 = (1..=p as i64).product::<i64>().max(1);
    FunctionalCochain::new(p, move |dec, z| {
        if z.arity != p || dec.ground_size() != p {
            return Rational::zero();
        }
        if dec.blocks().iter().any(|b| b.len() != 1) {
            return Rational::zero();
        }
        let images: Vec<u8> = dec.blocks().iter().map(|b| b.members()[0]).collect();
        let sigma = Permutation::from_images(images).expect("singleton blocks form a permutation");
        let v = f.evaluate(z).expect("arity checked");
        let signed = if sigma.sign() > 0 { v } else { -v };
        signed / rat(factorial)
    })
}
