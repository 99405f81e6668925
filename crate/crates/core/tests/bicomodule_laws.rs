//! Exhaustive law checks for every registered species: counit,
//! coassociativity, bicomodule compatibility, equivariance of restrictions,
//! and cosymmetry where declared.

use std::sync::Arc;

use rayon::prelude::*;
use species_cohomology::combinatorics::{Permutation, SubsetOfN};
use species_cohomology::species::{exponential_doc, signed_orders_doc, validate_custom};
use species_cohomology::{Bicomodule, Engine, Side};

fn law_species() -> Vec<(Arc<dyn Bicomodule>, usize)> {
    let engine = Engine::new();
    let signed: Arc<dyn Bicomodule> = Arc::new(validate_custom(&signed_orders_doc(4)).unwrap());
    vec![
        (engine.resolve("E").unwrap(), 6),
        (engine.resolve("L").unwrap(), 6),
        (engine.resolve("P").unwrap(), 6),
        (engine.resolve("C").unwrap(), 6),
        (engine.resolve("S").unwrap(), 4),
        (engine.resolve("S^2").unwrap(), 4),
        (engine.resolve("Gr").unwrap(), 5),
        (engine.resolve("S*L").unwrap(), 5),
        (signed, 4),
    ]
}

/// All functions from `n` positions to `{0, ..., base - 1}`.
fn assignments(n: usize, base: usize) -> Vec<Vec<u8>> {
    let total = base.pow(n as u32);
    let mut all = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut v = vec![0u8; n];
        for slot in v.iter_mut() {
            *slot = (code % base) as u8;
            code /= base;
        }
        all.push(v);
    }
    all
}

fn subset_where(n: usize, assignment: &[u8], pred: impl Fn(u8) -> bool) -> SubsetOfN {
    SubsetOfN::new(n, (1..=n as u8).filter(|&x| pred(assignment[x as usize - 1])).collect()).unwrap()
}

/// Transports a subset of `s` along the standardization of `s`.
fn inside(s: &SubsetOfN, sub: &SubsetOfN) -> SubsetOfN {
    SubsetOfN::new(s.len(), sub.members().iter().map(|&x| s.standardize(x).unwrap()).collect())
        .unwrap()
}

#[test]
fn counit_restriction_to_full_set_is_identity() {
    for (sp, max_n) in law_species() {
        for n in 0..=max_n {
            let full = SubsetOfN::full(n);
            for z in sp.structures(n) {
                for side in [Side::Left, Side::Right] {
                    assert_eq!(sp.restrict(side, &z, &full).unwrap().as_ref(), Some(&z), "{}", sp.id());
                }
            }
        }
    }
}

#[test]
fn restriction_is_coassociative() {
    // restricting I → B → A equals I → A for every chain A ⊆ B ⊆ I
    for (sp, max_n) in law_species() {
        for n in 0..=max_n {
            let chains: Vec<(SubsetOfN, SubsetOfN)> = assignments(n, 3)
                .iter()
                .map(|a| {
                    (subset_where(n, a, |c| c == 0), subset_where(n, a, |c| c <= 1))
                })
                .collect();
            sp.structures(n).par_iter().for_each(|z| {
                for (a, b) in &chains {
                    let a_in_b = inside(b, a);
                    for side in [Side::Left, Side::Right] {
                        let direct = sp.restrict(side, z, a).unwrap();
                        let via = match sp.restrict(side, z, b).unwrap() {
                            Some(zb) => sp.restrict(side, &zb, &a_in_b).unwrap(),
                            None => None,
                        };
                        assert_eq!(direct, via, "{} at arity {}, A={}, B={}", sp.id(), n, a, b);
                    }
                }
            });
        }
    }
}

#[test]
fn deletions_commute() {
    // deleting i then j equals deleting j then i, after index adjustment
    for (sp, max_n) in law_species() {
        for n in 2..=max_n {
            sp.structures(n).par_iter().for_each(|z| {
                for i in 1..=n as u8 {
                    for j in 1..=n as u8 {
                        if i == j {
                            continue;
                        }
                        let keep_i = SubsetOfN::full(n).remove(i);
                        let keep_j = SubsetOfN::full(n).remove(j);
                        let j_after_i = keep_i.standardize(j).unwrap();
                        let i_after_j = keep_j.standardize(i).unwrap();
                        for side in [Side::Left, Side::Right] {
                            let one = sp.restrict(side, z, &keep_i).unwrap().and_then(|y| {
                                sp.restrict(side, &y, &SubsetOfN::full(n - 1).remove(j_after_i)).unwrap()
                            });
                            let two = sp.restrict(side, z, &keep_j).unwrap().and_then(|y| {
                                sp.restrict(side, &y, &SubsetOfN::full(n - 1).remove(i_after_j)).unwrap()
                            });
                            assert_eq!(one, two, "{} arity {}, delete {} and {}", sp.id(), n, i, j);
                        }
                    }
                }
            });
        }
    }
}

#[test]
fn bicomodule_compatibility() {
    // ρ_{S∩T} λ_S = λ_{S∩T} ρ_T whenever S ∪ T is the whole ground set
    for (sp, max_n) in law_species() {
        for n in 0..=max_n {
            let splits: Vec<(SubsetOfN, SubsetOfN)> = assignments(n, 3)
                .iter()
                .map(|a| (subset_where(n, a, |c| c != 1), subset_where(n, a, |c| c != 0)))
                .collect();
            sp.structures(n).par_iter().for_each(|z| {
                for (s, t) in &splits {
                    let meet = s.intersection(t);
                    let lhs = match sp.restrict(Side::Left, z, s).unwrap() {
                        Some(zs) => sp.restrict(Side::Right, &zs, &inside(s, &meet)).unwrap(),
                        None => None,
                    };
                    let rhs = match sp.restrict(Side::Right, z, t).unwrap() {
                        Some(zt) => sp.restrict(Side::Left, &zt, &inside(t, &meet)).unwrap(),
                        None => None,
                    };
                    assert_eq!(lhs, rhs, "{} at arity {}, S={}, T={}", sp.id(), n, s, t);
                }
            });
        }
    }
}

#[test]
fn restriction_is_equivariant() {
    // relabel then restrict equals restrict then relabel by the induced map;
    // adjacent transpositions generate, so checking them suffices
    for (sp, max_n) in law_species() {
        for n in 2..=max_n.min(5) {
            let structures = sp.structures(n);
            for k in 1..n {
                let sigma = Permutation::adjacent(n, k);
                structures.par_iter().for_each(|z| {
                    for mask in 0u32..1 << n {
                        let keep = SubsetOfN::from_mask(n, mask);
                        let keep_image =
                            SubsetOfN::new(n, keep.members().iter().map(|&x| sigma.image(x)).collect())
                                .unwrap();
                        let induced = sigma.induced(&keep);
                        for side in [Side::Left, Side::Right] {
                            let lhs =
                                sp.restrict(side, &sp.relabel(&sigma, z).unwrap(), &keep_image).unwrap();
                            let rhs = match sp.restrict(side, z, &keep).unwrap() {
                                Some(y) => Some(sp.relabel(&induced, &y).unwrap()),
                                None => None,
                            };
                            assert_eq!(lhs, rhs, "{} arity {} keep {}", sp.id(), n, keep);
                        }
                    }
                });
            }
        }
    }
}

#[test]
fn relabeling_is_functorial() {
    for (sp, max_n) in law_species() {
        for n in 0..=max_n.min(4) {
            let structures = sp.structures(n);
            let perms = Permutation::all(n);
            for z in &structures {
                assert_eq!(&sp.relabel(&Permutation::identity(n), z).unwrap(), z);
            }
            for sigma in &perms {
                for tau in &perms {
                    let st = sigma.compose(tau);
                    for z in &structures {
                        let one = sp.relabel(&st, z).unwrap();
                        let two = sp.relabel(sigma, &sp.relabel(tau, z).unwrap()).unwrap();
                        assert_eq!(one, two, "{} arity {}", sp.id(), n);
                    }
                }
            }
        }
    }
}

#[test]
fn declared_cosymmetry_is_real() {
    for (sp, max_n) in law_species() {
        if !sp.cosymmetric() {
            continue;
        }
        for n in 0..=max_n {
            sp.structures(n).par_iter().for_each(|z| {
                for mask in 0u32..1 << n {
                    let keep = SubsetOfN::from_mask(n, mask);
                    assert_eq!(
                        sp.restrict(Side::Left, z, &keep).unwrap(),
                        sp.restrict(Side::Right, z, &keep).unwrap(),
                        "{} at arity {}",
                        sp.id(),
                        n
                    );
                }
            });
        }
    }
}

#[test]
fn signed_orders_really_differs_on_the_right() {
    let signed: Arc<dyn Bicomodule> = Arc::new(validate_custom(&signed_orders_doc(3)).unwrap());
    assert!(!signed.cosymmetric());
    let mut found = false;
    for n in 1..=3usize {
        for z in signed.structures(n) {
            for mask in 0u32..1 << n {
                let keep = SubsetOfN::from_mask(n, mask);
                if signed.restrict(Side::Left, &z, &keep).unwrap()
                    != signed.restrict(Side::Right, &z, &keep).unwrap()
                {
                    found = true;
                }
            }
        }
    }
    assert!(found);
}

#[test]
fn structure_counts_and_orbit_sums_agree() {
    let engine = Engine::new();
    for (id, n, orbit_count) in [("E", 4usize, 1usize), ("L", 4, 1), ("Gr", 4, 11)] {
        let sp = engine.resolve(id).unwrap();
        let table = engine.orbit_table(&sp, n).unwrap();
        assert_eq!(table.orbits.len(), orbit_count, "{}", id);
        assert_eq!(table.total_structures(), sp.structures(n).len(), "{}", id);
    }
    // graphs on 5 vertices: 34 isomorphism classes, 6 without odd automorphisms
    let gr = engine.resolve("Gr").unwrap();
    let t5 = engine.orbit_table(&gr, 5).unwrap();
    assert_eq!(t5.orbits.len(), 34);
    assert_eq!(t5.koszul_basis().len(), 6);
    assert_eq!(t5.total_structures(), 1 << 10);
}

#[test]
fn custom_exponential_tables_match_builtin() {
    let engine = Engine::new();
    let e = engine.resolve("E").unwrap();
    let table: Arc<dyn Bicomodule> = Arc::new(validate_custom(&exponential_doc(4)).unwrap());
    for n in 0..=4usize {
        assert_eq!(table.structures(n).len(), e.structures(n).len());
        for mask in 0u32..1 << n {
            let keep = SubsetOfN::from_mask(n, mask);
            for (zt, ze) in table.structures(n).iter().zip(e.structures(n).iter()) {
                let rt = table.restrict(Side::Left, zt, &keep).unwrap().map(|s| s.arity);
                let re = e.restrict(Side::Left, ze, &keep).unwrap().map(|s| s.arity);
                assert_eq!(rt, re);
            }
        }
    }
}
