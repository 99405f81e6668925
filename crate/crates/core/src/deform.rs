//! Weak deformations: star products on 2-cochains, the deformation
//! equations order by order, and exponential integration of a 2-cocycle.

use std::sync::Arc;

use num::Zero;

use crate::combinatorics::{enumerate_decompositions, Decomposition, SubsetOfN};
use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};
use crate::oracle::{CochainEval, FunctionalCochain};
use crate::species::{Bicomodule, Side, Structure};

/// Evaluates a cochain at a decomposition of a subset `U ⊆ {1, ..., n}`,
/// transporting blocks onto `{1, ..., |U|}`; a zero restriction makes the
/// component zero.
fn eval_on_subset(
    alpha: &dyn CochainEval,
    blocks: &[SubsetOfN],
    union: &SubsetOfN,
    y: &Option<Structure>,
) -> Rational {
    match y {
        Some(y) => alpha.eval(&Decomposition::transport(blocks, union), y),
        None => Rational::zero(),
    }
}

/// The two one-sided star products, their difference, and the bracket, as
/// 3-cochains.
pub fn star_products(
    species: Arc<dyn Bicomodule>,
    alpha: Arc<dyn CochainEval>,
    beta: Arc<dyn CochainEval>,
) -> (FunctionalCochain, FunctionalCochain, FunctionalCochain, FunctionalCochain) {
    assert_eq!(alpha.degree(), 2);
    assert_eq!(beta.degree(), 2);
    let s10 = star_one_zero(species.clone(), alpha.clone(), beta.clone());
    let s01 = star_zero_one(species.clone(), alpha.clone(), beta.clone());
    let mixed = star(species.clone(), alpha.clone(), beta.clone());
    let bracket = {
        let ab = star(species.clone(), alpha.clone(), beta.clone());
        let ba = star(species, beta, alpha);
        FunctionalCochain::new(3, move |f, z| ab.eval(f, z) - ba.eval(f, z))
    };
    (s10, s01, mixed, bracket)
}

fn star_one_zero(
    species: Arc<dyn Bicomodule>,
    alpha: Arc<dyn CochainEval>,
    beta: Arc<dyn CochainEval>,
) -> FunctionalCochain {
    FunctionalCochain::new(3, move |f, z| {
        let (r, s, t) = (f.block(0), f.block(1), f.block(2));
        let st = s.union(t);
        let a = alpha.eval(&Decomposition::new(f.ground_size(), vec![r.clone(), st.clone()]).unwrap(), z);
        if a.is_zero() {
            return a;
        }
        let y = species.restrict(Side::Left, z, &st).expect("restriction in bounds");
        a * eval_on_subset(beta.as_ref(), &[s.clone(), t.clone()], &st, &y)
    })
}

fn star_zero_one(
    species: Arc<dyn Bicomodule>,
    alpha: Arc<dyn CochainEval>,
    beta: Arc<dyn CochainEval>,
) -> FunctionalCochain {
    FunctionalCochain::new(3, move |f, z| {
        let (r, s, t) = (f.block(0), f.block(1), f.block(2));
        let rs = r.union(s);
        let a = alpha.eval(&Decomposition::new(f.ground_size(), vec![rs.clone(), t.clone()]).unwrap(), z);
        if a.is_zero() {
            return a;
        }
        let y = species.restrict(Side::Right, z, &rs).expect("restriction in bounds");
        a * eval_on_subset(beta.as_ref(), &[r.clone(), s.clone()], &rs, &y)
    })
}

/// `α ⋆ β = α ⋆₁,₀ β − α ⋆₀,₁ β`; the first obstruction of a 2-cocycle is
/// its star square.
pub fn star(
    species: Arc<dyn Bicomodule>,
    alpha: Arc<dyn CochainEval>,
    beta: Arc<dyn CochainEval>,
) -> FunctionalCochain {
    let a = star_one_zero(species.clone(), alpha.clone(), beta.clone());
    let b = star_zero_one(species, alpha, beta);
    FunctionalCochain::new(3, move |f, z| a.eval(f, z) - b.eval(f, z))
}

/// A truncated deformation: coefficient 2-cochains `Δ_1, ..., Δ_m` with
/// `Δ_0 = 1` implicit.
pub struct DeformationSeries {
    pub species_id: String,
    pub arity_bound: usize,
    pub order: usize,
    coeffs: Vec<Arc<FunctionalCochain>>,
}

#[derive(Clone, Debug)]
pub struct DeformationWitness {
    pub equation: usize,
    pub decomposition: String,
    pub structure: String,
    pub value: Rational,
}

impl DeformationSeries {
    /// Builds a series from explicit coefficient cochains `Δ_1, ..., Δ_m`.
    pub fn from_coefficients(
        species_id: String,
        arity_bound: usize,
        coeffs: Vec<FunctionalCochain>,
    ) -> Self {
        let order = coeffs.len();
        DeformationSeries {
            species_id,
            arity_bound,
            order,
            coeffs: coeffs.into_iter().map(Arc::new).collect(),
        }
    }

    /// `Δ_i` evaluated at a two-block decomposition of a subset, on a
    /// possibly zero restriction.
    fn coefficient(
        &self,
        i: usize,
        blocks: &[SubsetOfN],
        union: &SubsetOfN,
        y: &Option<Structure>,
    ) -> Rational {
        if y.is_none() {
            return Rational::zero();
        }
        if i == 0 {
            return rat(1);
        }
        if i > self.order {
            return Rational::zero();
        }
        eval_on_subset(self.coeffs[i - 1].as_ref(), blocks, union, y)
    }

    /// The coefficient cochains as evaluation rules, `i ≥ 1`.
    pub fn coefficient_cochain(&self, i: usize) -> Option<Arc<FunctionalCochain>> {
        self.coeffs.get(i - 1).cloned()
    }

    /// The multiplicative form of a coefficient: `q^{Δ_1(S,T)(z)}`.
    pub fn q_expansion(&self, delta1_value: &Rational) -> String {
        format!("q^{}", crate::linalg::rational_to_string(delta1_value))
    }
}

/// Checks the order-`n` deformation equation on every decomposition
/// `(R, S, T)` of every arity up to the series bound; returns the first
/// violation.
pub fn check_deformation(
    species: &Arc<dyn Bicomodule>,
    series: &DeformationSeries,
    n: usize,
) -> Result<Option<DeformationWitness>> {
    for k in 0..=series.arity_bound {
        let structures = species.structures(k);
        for f in enumerate_decompositions(k, 3) {
            let (r, s, t) = (f.block(0), f.block(1), f.block(2));
            let rs = r.union(s);
            let st = s.union(t);
            let full = SubsetOfN::full(k);
            for z in &structures {
                let left_rest = species.restrict(Side::Right, z, &rs)?;
                let right_rest = species.restrict(Side::Left, z, &st)?;
                let mut acc = Rational::zero();
                for i in 0..=n {
                    let j = n - i;
                    // Δ_i((R∪S, T))(z) · Δ_j((R, S))(z restricted right to R∪S)
                    let a = series.coefficient(
                        i,
                        &[rs.clone(), t.clone()],
                        &full,
                        &Some(z.clone()),
                    );
                    if !a.is_zero() {
                        acc += a * series.coefficient(j, &[r.clone(), s.clone()], &rs, &left_rest);
                    }
                    // Δ_i((R, S∪T))(z) · Δ_j((S, T))(z restricted left to S∪T)
                    let b = series.coefficient(
                        i,
                        &[r.clone(), st.clone()],
                        &full,
                        &Some(z.clone()),
                    );
                    if !b.is_zero() {
                        acc -= b * series.coefficient(j, &[s.clone(), t.clone()], &st, &right_rest);
                    }
                }
                if !acc.is_zero() {
                    return Ok(Some(DeformationWitness {
                        equation: n,
                        decomposition: f.to_string(),
                        structure: species.describe(z),
                        value: acc,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Checks that a 2-cochain is normalized and closed within the arity bound;
/// returns a witness on failure.
pub fn check_two_cocycle(
    species: &Arc<dyn Bicomodule>,
    delta1: &FunctionalCochain,
    arity_bound: usize,
) -> Result<()> {
    assert_eq!(delta1.degree(), 2);
    for k in 0..=arity_bound {
        for f in enumerate_decompositions(k, 2) {
            if f.is_composition() {
                continue;
            }
            for z in species.structures(k) {
                let v = delta1.eval(&f, &z);
                if !v.is_zero() {
                    return Err(Error::NotNormalized {
                        witness: format!("Δ₁{}({}) = {}", f, species.describe(&z), v),
                    });
                }
            }
        }
    }
    // the degree-1 equation is exactly closedness
    let probe = DeformationSeries::from_coefficients(
        species.id().to_string(),
        arity_bound,
        vec![delta1.clone()],
    );
    if let Some(w) = check_deformation(species, &probe, 1)? {
        return Err(Error::NotACocycle {
            witness: format!("(R,S,T) = {}, z = {}, value {}", w.decomposition, w.structure, w.value),
        });
    }
    Ok(())
}

/// Integrates a normalized 2-cocycle exponentially: `Δ_i = Δ_1^i / i!`
/// pointwise. The resulting series satisfies every deformation equation; the
/// ones up to the requested order are verified within the arity bound.
pub fn integrate(
    species: &Arc<dyn Bicomodule>,
    delta1: FunctionalCochain,
    order: usize,
    arity_bound: usize,
) -> Result<DeformationSeries> {
    check_two_cocycle(species, &delta1, arity_bound)?;
    let base = Arc::new(delta1);
    let mut coeffs = Vec::new();
    for i in 1..=order {
        let base = base.clone();
        let factorial: i64 = (1..=i as i64).product();
        coeffs.push(FunctionalCochain::new(2, move |f, z| {
            let v = base.eval(f, z);
            if v.is_zero() {
                return v;
            }
            let mut power = rat(1);
            for _ in 0..i {
                power *= &v;
            }
            power / rat(factorial)
        }));
    }
    let series = DeformationSeries::from_coefficients(species.id().to_string(), arity_bound, coeffs);
    for n in 0..=order {
        if let Some(w) = check_deformation(species, &series, n)? {
            return Err(Error::NotACocycle {
                witness: format!(
                    "integrated series fails equation {} at {} on {} (value {})",
                    w.equation, w.decomposition, w.structure, w.value
                ),
            });
        }
    }
    Ok(series)
}
