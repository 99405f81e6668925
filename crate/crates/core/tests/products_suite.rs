//! Ring structure: graded commutativity, associativity, the generator
//! relations of linear orders, the external product, and the Leibniz rule on
//! the non-cosymmetric table species.

use std::sync::Arc;

use species_cohomology::koszul::{self, KoszulCochain};
use species_cohomology::products::{cup_koszul, kunneth_matrix, kunneth_product};
use species_cohomology::species::signed_orders_doc;
use species_cohomology::{rat, Bicomodule, Engine};

#[test]
fn cup_is_graded_commutative_on_cosymmetric_species() {
    let engine = Engine::new();
    for id in ["E", "L", "P", "C", "Gr"] {
        let sp = engine.resolve(id).unwrap();
        for p in 0..=5usize {
            for q in 0..=5 - p {
                let fs = koszul::basis(&engine, &sp, p).unwrap();
                let gs = koszul::basis(&engine, &sp, q).unwrap();
                for f in &fs {
                    for g in &gs {
                        let fg = cup_koszul(&engine, &sp, f, g).unwrap();
                        let gf = cup_koszul(&engine, &sp, g, f).unwrap();
                        let signed = if (p * q) % 2 == 0 { gf } else { gf.scale(&rat(-1)) };
                        assert_eq!(fg, signed, "{}: p={}, q={}", id, p, q);
                    }
                }
            }
        }
    }
}

#[test]
fn cup_is_associative_on_linear_orders() {
    let engine = Engine::new();
    let l = engine.resolve("L").unwrap();
    let f = |p: usize| koszul::basis(&engine, &l, p).unwrap().remove(0);
    for a in 1..=4usize {
        for b in 1..=4 {
            for c in 1..=4 {
                if a + b + c > 6 {
                    continue;
                }
                let left = cup_koszul(&engine, &l, &cup_koszul(&engine, &l, &f(a), &f(b)).unwrap(), &f(c))
                    .unwrap();
                let right =
                    cup_koszul(&engine, &l, &f(a), &cup_koszul(&engine, &l, &f(b), &f(c)).unwrap())
                        .unwrap();
                assert_eq!(left, right, "degrees {}, {}, {}", a, b, c);
            }
        }
    }
}

#[test]
fn linear_order_ring_is_generated_in_degrees_one_and_two() {
    let engine = Engine::new();
    let l = engine.resolve("L").unwrap();
    let f = |p: usize| koszul::basis(&engine, &l, p).unwrap().remove(0);
    // iterated products of the two generators hit every degree up to six
    let mut even = f(2);
    let mut scale = 1i64;
    for k in 2..=3usize {
        even = cup_koszul(&engine, &l, &even, &f(2)).unwrap();
        scale *= k as i64;
        assert_eq!(even, f(2 * k).scale(&rat(scale)), "degree {}", 2 * k);
    }
    for p in 1..=2usize {
        let odd = cup_koszul(&engine, &l, &f(1), &f(2 * p)).unwrap();
        assert_eq!(odd, f(2 * p + 1));
    }
    assert!(cup_koszul(&engine, &l, &f(1), &f(1)).unwrap().is_zero());
    assert!(cup_koszul(&engine, &l, &f(1), &f(3)).unwrap().is_zero());
    assert!(cup_koszul(&engine, &l, &f(1), &f(5)).unwrap().is_zero());
}

#[test]
fn kunneth_dimensions_add_up_for_orders_times_exponential() {
    let engine = Engine::new();
    let l = engine.resolve("L").unwrap();
    let e = engine.resolve("E").unwrap();
    let le = engine.resolve("L*E").unwrap();
    for n in 0..=5usize {
        let product_dim = koszul::dimension(&engine, &le, n).unwrap();
        let sum: usize = (0..=n)
            .map(|p| {
                koszul::dimension(&engine, &l, p).unwrap() * koszul::dimension(&engine, &e, n - p).unwrap()
            })
            .sum();
        assert_eq!(product_dim, sum, "arity {}", n);
        if n >= 1 {
            assert_eq!(sum, 2);
        }
    }
}

#[test]
fn kunneth_map_is_an_isomorphism_for_orders_times_exponential() {
    let engine = Engine::new();
    let l = engine.resolve("L").unwrap();
    let e = engine.resolve("E").unwrap();
    let le = engine.resolve("L*E").unwrap();
    for n in 0..=5usize {
        let mut total_cols = 0;
        let mut stacked_rank = 0;
        // columns across all (p, q) with p + q = n are independent because
        // they live on disjoint split sizes; ranks therefore add
        for p in 0..=n {
            let m = kunneth_matrix(&engine, &l, &e, &le, p, n - p).unwrap();
            total_cols += m.cols();
            stacked_rank += m.rank();
        }
        assert_eq!(stacked_rank, total_cols, "arity {}: injective", n);
        assert_eq!(total_cols, koszul::dimension(&engine, &le, n).unwrap(), "arity {}: onto", n);
    }
}

#[test]
fn kunneth_with_the_unit_species_is_the_identity() {
    let engine = Engine::new();
    let one = engine.resolve("1").unwrap();
    let l = engine.resolve("L").unwrap();
    let prod = engine.resolve("1*L").unwrap();
    for q in 0..=4usize {
        assert_eq!(
            koszul::dimension(&engine, &prod, q).unwrap(),
            koszul::dimension(&engine, &l, q).unwrap()
        );
        let unit = koszul::basis(&engine, &one, 0).unwrap().remove(0);
        let g = koszul::basis(&engine, &l, q).unwrap().remove(0);
        let image = kunneth_product(&engine, &prod, &unit, &g).unwrap();
        // the image evaluates on (∅, w) pairs exactly as g does on w
        for z in prod.structures(q) {
            let inner = match &z.payload {
                species_cohomology::Payload::Pair { right, .. } => {
                    species_cohomology::Structure::new(q, (**right).clone())
                }
                _ => unreachable!(),
            };
            assert_eq!(image.evaluate(&z).unwrap(), g.evaluate(&inner).unwrap());
        }
    }
}

#[test]
fn leibniz_rule_on_the_non_cosymmetric_species() {
    let engine = Engine::new();
    let id = engine.add_custom(&signed_orders_doc(5)).unwrap();
    let sp: Arc<dyn Bicomodule> = engine.resolve(&id).unwrap();
    let d = |f: &KoszulCochain| koszul::differential(&engine, &sp, f).unwrap();
    for p in 0..=2usize {
        for q in 0..=2 {
            if p + q > 3 {
                continue;
            }
            for f in koszul::basis(&engine, &sp, p).unwrap() {
                for g in koszul::basis(&engine, &sp, q).unwrap() {
                    let lhs = d(&cup_koszul(&engine, &sp, &f, &g).unwrap());
                    let df_g = cup_koszul(&engine, &sp, &d(&f), &g).unwrap();
                    let f_dg = cup_koszul(&engine, &sp, &f, &d(&g)).unwrap();
                    let sign = if p % 2 == 0 { rat(1) } else { rat(-1) };
                    // d(f⌣g) = df⌣g + (-1)^p f⌣dg
                    let rhs = df_g.sub(&f_dg.scale(&(-sign)));
                    assert_eq!(lhs, rhs, "p={}, q={}", p, q);
                }
            }
        }
    }
}
