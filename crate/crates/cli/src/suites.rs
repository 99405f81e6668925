//! The verification suites behind `verify --suite <name>`: each re-derives a
//! family of facts two independent ways and reports per-check outcomes.

use std::sync::Arc;

use species_cohomology::deform::{check_deformation, integrate, star, DeformationSeries};
use species_cohomology::koszul;
use species_cohomology::oracle::{
    cobar_complex, cochain_to_vector, delta_matrix, delta_vanishes, stirling_first,
    truncated_cohomology, Cochain, ComplexBasis, CoxeterComplex,
};
use species_cohomology::products::{
    cardinality_cocycle, cup_koszul, kunneth_matrix, schubert_cocycle,
};
use species_cohomology::species::signed_orders_doc;
use species_cohomology::{rat, Engine, Result};

use crate::report::Check;

fn check(name: impl Into<String>, pass: bool, witness: Option<String>) -> Check {
    Check { name: name.into(), pass, witness: if pass { None } else { witness } }
}

/// Truncated brute-force cohomology equals the small-complex cohomology for
/// every registered species, including the bundled non-cosymmetric one.
pub fn koszul_vs_oracle(engine: &Engine) -> Result<Vec<Check>> {
    let signed_id = engine.add_custom(&signed_orders_doc(4))?;
    let mut checks = Vec::new();
    let plan: Vec<(&str, usize)> = vec![
        ("E", 4),
        ("L", 4),
        ("P", 3),
        ("C", 3),
        ("S", 3),
        ("S^2", 3),
        ("Gr", 3),
        (&signed_id, 3),
    ];
    for (id, max_q) in plan {
        let sp = engine.resolve(id)?;
        for q in 0..=max_q {
            let (oracle_dim, _) = truncated_cohomology(engine, &sp, q, q + 1)?;
            let (koszul_dim, _) = koszul::cohomology(engine, &sp, q)?;
            checks.push(check(
                format!("{}: H^{} oracle vs small complex", id, q),
                oracle_dim == koszul_dim,
                Some(format!("oracle {} vs small complex {}", oracle_dim, koszul_dim)),
            ));
        }
    }
    Ok(checks)
}

/// Reduced sphere cohomology of the composition complex, concentrated in the
/// top degree with the sign action on the generator.
pub fn coxeter(max_j: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for j in 1..=max_j {
        let cx = CoxeterComplex::build(j)?;
        let dims = cx.cohomology_dims();
        let concentrated = dims.iter().all(|&(p, d)| d == usize::from(p == j as i64 - 2));
        checks.push(check(
            format!("j={}: cohomology concentrated in degree {}", j, j as i64 - 2),
            concentrated,
            Some(format!("{:?}", dims)),
        ));
        if j >= 2 {
            let sign = cx.transposition_action_on_top()?;
            checks.push(check(
                format!("j={}: transposition acts by -1 on the top class", j),
                sign == -1,
                Some(format!("acts by {}", sign)),
            ));
        }
    }
    Ok(checks)
}

/// The cobar complexes of the exponential species and of linear orders:
/// square-zero differentials, acyclicity down to the dual algebra, and the
/// cycle-counting homology of orders.
pub fn cobar(engine: &Engine, max_arity: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let e = engine.resolve("E")?;
    for n in 0..=max_arity {
        let cx = cobar_complex(&e, n)?;
        checks.push(check(
            format!("E arity {}: d² = 0", n),
            cx.differential_squares_to_zero(),
            None,
        ));
        let dims = cx.homology_dims();
        let concentrated =
            dims.iter().enumerate().all(|(q, &d)| d == usize::from(q == n));
        checks.push(check(
            format!("E arity {}: homology is one class in degree zero", n),
            concentrated,
            Some(format!("{:?}", dims)),
        ));
    }
    let l = engine.resolve("L")?;
    for n in 1..=max_arity {
        let cx = cobar_complex(&l, n)?;
        checks.push(check(
            format!("L arity {}: d² = 0", n),
            cx.differential_squares_to_zero(),
            None,
        ));
        let dims = cx.homology_dims();
        let stirling = stirling_first(n);
        let matches = (1..=n).all(|q| dims[q] as u64 == stirling[q]);
        checks.push(check(
            format!("L arity {}: homology dimensions count permutations by cycles", n),
            matches,
            Some(format!("got {:?}, expected {:?}", &dims[1..], &stirling[1..])),
        ));
    }
    Ok(checks)
}

/// Ring facts: the exterior generator of the exponential species, the
/// divided-power relations of linear orders, graded commutativity, and
/// associativity.
pub fn cup_relations(engine: &Engine) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let e = engine.resolve("E")?;
    let mut dims = Vec::new();
    for q in 0..=4 {
        dims.push(koszul::cohomology(engine, &e, q)?.0);
    }
    checks.push(check("E: dimensions 1,1,0,0,0", dims == vec![1, 1, 0, 0, 0], Some(format!("{:?}", dims))));
    let f1 = koszul::basis(engine, &e, 1)?.remove(0);
    checks.push(check("E: f1 ⌣ f1 = 0", cup_koszul(engine, &e, &f1, &f1)?.is_zero(), None));

    let l = engine.resolve("L")?;
    let mut all_one = true;
    for p in 0..=6 {
        all_one &= koszul::cohomology(engine, &l, p)?.0 == 1;
    }
    checks.push(check("L: H^p is one-dimensional for p ≤ 6", all_one, None));
    let f = |p: usize| -> Result<_> { Ok(koszul::basis(engine, &l, p)?.remove(0)) };
    checks.push(check(
        "L: f2 ⌣ f2 = 2 f4",
        cup_koszul(engine, &l, &f(2)?, &f(2)?)? == f(4)?.scale(&rat(2)),
        None,
    ));
    checks.push(check(
        "L: f2 ⌣ f4 = 3 f6",
        cup_koszul(engine, &l, &f(2)?, &f(4)?)? == f(6)?.scale(&rat(3)),
        None,
    ));
    checks.push(check("L: f1 ⌣ f2 = f3", cup_koszul(engine, &l, &f(1)?, &f(2)?)? == f(3)?, None));
    checks.push(check("L: f1 ⌣ f3 = 0", cup_koszul(engine, &l, &f(1)?, &f(3)?)?.is_zero(), None));

    for id in ["E", "L", "P", "C", "Gr"] {
        let sp = engine.resolve(id)?;
        let mut commutes = true;
        'outer: for p in 0..=5usize {
            for q in 0..=5 - p {
                for fb in koszul::basis(engine, &sp, p)? {
                    for gb in koszul::basis(engine, &sp, q)? {
                        let fg = cup_koszul(engine, &sp, &fb, &gb)?;
                        let gf = cup_koszul(engine, &sp, &gb, &fb)?;
                        let signed = if (p * q) % 2 == 0 { gf } else { gf.scale(&rat(-1)) };
                        if fg != signed {
                            commutes = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        checks.push(check(format!("{}: cup is graded commutative for p+q ≤ 5", id), commutes, None));
    }

    let mut associative = true;
    for a in 1..=4usize {
        for b in 1..=4usize {
            for c in 1..=4usize {
                if a + b + c > 6 {
                    continue;
                }
                let left = cup_koszul(engine, &l, &cup_koszul(engine, &l, &f(a)?, &f(b)?)?, &f(c)?)?;
                let right = cup_koszul(engine, &l, &f(a)?, &cup_koszul(engine, &l, &f(b)?, &f(c)?)?)?;
                if left != right {
                    associative = false;
                }
            }
        }
    }
    checks.push(check("L: cup is associative up to total degree 6", associative, None));

    Ok(checks)
}

/// Deformation facts: the cardinality class, integration of the order
/// statistic cocycle, and its first obstruction.
pub fn deformation(engine: &Engine, max_arity: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let p = engine.resolve("P")?;
    let kappa = cardinality_cocycle();
    let w = delta_vanishes(&p, &kappa, max_arity);
    checks.push(check(
        "P: the cardinality cochain is closed",
        w.is_none(),
        w.map(|w| format!("{} on {}", w.decomposition, w.structure)),
    ));
    let stored = Cochain::from_eval(engine, &p, &kappa, max_arity)?;
    let basis = ComplexBasis::build(engine, &p, 1, max_arity)?;
    let vector = cochain_to_vector(engine, &p, &basis, &stored)?;
    let d0 = delta_matrix(engine, &p, 0, max_arity)?;
    checks.push(check("P: the cardinality cocycle is not a coboundary", !d0.in_image(&vector), None));

    let l = engine.resolve("L")?;
    match integrate(&l, schubert_cocycle(), 4, max_arity) {
        Ok(series) => {
            let mut pass = true;
            let mut witness = None;
            for n in 0..=4 {
                if let Some(w) = check_deformation(&l, &series, n)? {
                    pass = false;
                    witness = Some(format!(
                        "equation {} fails at {} on {} with value {}",
                        w.equation, w.decomposition, w.structure, w.value
                    ));
                }
            }
            checks.push(check(
                "L: the integrated order statistic cocycle satisfies the equations to order 4",
                pass,
                witness,
            ));
        }
        Err(e) => {
            checks.push(check(
                "L: the integrated order statistic cocycle satisfies the equations to order 4",
                false,
                Some(e.to_string()),
            ));
        }
    }

    let sigma1 = star(l.clone(), Arc::new(schubert_cocycle()), Arc::new(schubert_cocycle()));
    let w = delta_vanishes(&l, &sigma1, max_arity);
    checks.push(check(
        "L: the first obstruction of the order statistic cocycle is a 3-cocycle",
        w.is_none(),
        w.map(|w| format!("{} on {}", w.decomposition, w.structure)),
    ));

    // a series missing its second coefficient must fail the second equation
    let truncated = DeformationSeries::from_coefficients("L".into(), max_arity, vec![schubert_cocycle()]);
    let fails = check_deformation(&l, &truncated, 2)?.is_some();
    checks.push(check("L: dropping the second coefficient breaks the second equation", fails, None));

    Ok(checks)
}

/// The external product: dimension count and full rank for L·E, plus the
/// suspension shift.
pub fn kunneth(engine: &Engine, max_degree: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let l = engine.resolve("L")?;
    let e = engine.resolve("E")?;
    let le = engine.resolve("L*E")?;
    for n in 0..=max_degree {
        let product_dim = koszul::dimension(engine, &le, n)?;
        let mut sum = 0;
        let mut rank = 0;
        let mut cols = 0;
        for p in 0..=n {
            sum += koszul::dimension(engine, &l, p)? * koszul::dimension(engine, &e, n - p)?;
            let m = kunneth_matrix(engine, &l, &e, &le, p, n - p)?;
            cols += m.cols();
            rank += m.rank();
        }
        checks.push(check(
            format!("L·E arity {}: dimensions multiply out", n),
            product_dim == sum,
            Some(format!("product {} vs sum {}", product_dim, sum)),
        ));
        checks.push(check(
            format!("L·E arity {}: the external product has full rank", n),
            rank == cols && cols == product_dim,
            Some(format!("rank {} of {} into {}", rank, cols, product_dim)),
        ));
    }
    for base in ["E", "L"] {
        let sp = engine.resolve(base)?;
        let suspended = engine.resolve(&format!("S*{}", base))?;
        let mut shifted = koszul::cohomology(engine, &suspended, 0)?.0 == 0;
        for p in 1..=max_degree {
            shifted &= koszul::cohomology(engine, &suspended, p)?.0
                == koszul::cohomology(engine, &sp, p - 1)?.0;
        }
        checks.push(check(format!("S·{}: cohomology shifts by one", base), shifted, None));
    }
    Ok(checks)
}
