//! Multiplicative structure: the cup product on the small complex and on
//! cochains, the external product along Cauchy products, and the
//! distinguished cocycles.

use std::sync::Arc;

use num::Zero;

use crate::combinatorics::{split_sign, Decomposition, SubsetOfN};
use crate::error::Result;
use crate::koszul::KoszulCochain;
use crate::linalg::{rat, Rational, SparseMatrix};
use crate::oracle::{CochainEval, FunctionalCochain};
use crate::species::{graph_has_edge, Bicomodule, CauchyProduct, Engine, Payload, Side, Structure};

/// Evaluates `(f ⌣ g)(z)` directly: the signed sum over two-block
/// decompositions of the ground set, with `f` reading the right restriction
/// and `g` the left one. Works at any arity without orbit enumeration.
pub fn cup_eval(
    species: &Arc<dyn Bicomodule>,
    f: &KoszulCochain,
    g: &KoszulCochain,
    z: &Structure,
) -> Result<Rational> {
    let p = f.degree;
    let q = g.degree;
    debug_assert_eq!(z.arity, p + q);
    let mut acc = Rational::zero();
    for s in SubsetOfN::enumerate_of_size(p + q, p) {
        let t = s.complement();
        let Some(a) = species.restrict(Side::Right, z, &s)? else { continue };
        let fa = f.evaluate(&a)?;
        if fa.is_zero() {
            continue;
        }
        let Some(b) = species.restrict(Side::Left, z, &t)? else { continue };
        let gb = g.evaluate(&b)?;
        if gb.is_zero() {
            continue;
        }
        let term = fa * gb;
        if split_sign(&s, &t) > 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The cup product on the small complex, stored on orbit representatives of
/// degree `p + q`.
pub fn cup_koszul(
    engine: &Engine,
    species: &Arc<dyn Bicomodule>,
    f: &KoszulCochain,
    g: &KoszulCochain,
) -> Result<KoszulCochain> {
    let n = f.degree + g.degree;
    let table = engine.orbit_table(species, n)?;
    let mut out = KoszulCochain::zero(engine, species, n)?;
    for id in table.koszul_basis() {
        let rep = table.orbit(id).rep.clone();
        let v = cup_eval(species, f, g, &Structure::new(n, rep.clone()))?;
        if !v.is_zero() {
            out.set(&rep, v);
        }
    }
    Ok(out)
}

/// The cup product of cochains: the component at `F` is the product of the
/// `α`-component on the first `p` blocks of the right restriction with the
/// `β`-component on the last `q` blocks of the left restriction.
pub fn cup_cochain(
    species: Arc<dyn Bicomodule>,
    alpha: Arc<dyn CochainEval>,
    beta: Arc<dyn CochainEval>,
) -> FunctionalCochain {
    let p = alpha.degree();
    let q = beta.degree();
    FunctionalCochain::new(p + q, move |f, z| {
        debug_assert_eq!(f.length(), p + q);
        let s = f.blocks()[..p].iter().fold(SubsetOfN::empty(f.ground_size()), |acc, b| acc.union(b));
        let t = s.complement();
        let Some(a) = species.restrict(Side::Right, z, &s).expect("restriction in bounds") else {
            return Rational::zero();
        };
        let va = alpha.eval(&Decomposition::transport(&f.blocks()[..p], &s), &a);
        if va.is_zero() {
            return Rational::zero();
        }
        let Some(b) = species.restrict(Side::Left, z, &t).expect("restriction in bounds") else {
            return Rational::zero();
        };
        let vb = beta.eval(&Decomposition::transport(&f.blocks()[p..], &t), &b);
        va * vb
    })
}

/// The external product `K^p(X) ⊗ K^q(Y) → K^{p+q}(X·Y)`.
pub fn kunneth_product(
    engine: &Engine,
    product: &Arc<dyn Bicomodule>,
    f: &KoszulCochain,
    g: &KoszulCochain,
) -> Result<KoszulCochain> {
    let p = f.degree;
    let n = p + g.degree;
    let table = engine.orbit_table(product, n)?;
    let mut out = KoszulCochain::zero(engine, product, n)?;
    for id in table.koszul_basis() {
        let rep = table.orbit(id).rep.clone();
        let Payload::Pair { split, left, right } = &rep else {
            panic!("external product expects a Cauchy product species")
        };
        let s = CauchyProduct::split_subset(split);
        if s.len() != p {
            continue;
        }
        let t = s.complement();
        let fa = f.evaluate(&Structure::new(p, (**left).clone()))?;
        let gb = g.evaluate(&Structure::new(n - p, (**right).clone()))?;
        let mut v = fa * gb;
        if split_sign(&s, &t) < 0 {
            v = -v;
        }
        if !v.is_zero() {
            out.set(&rep, v);
        }
    }
    Ok(out)
}

/// The matrix of the external product from `K^p(X) ⊗ K^q(Y)` into
/// `K^{p+q}(X·Y)`, columns indexed by basis pairs.
pub fn kunneth_matrix(
    engine: &Engine,
    x: &Arc<dyn Bicomodule>,
    y: &Arc<dyn Bicomodule>,
    product: &Arc<dyn Bicomodule>,
    p: usize,
    q: usize,
) -> Result<SparseMatrix> {
    let fx = crate::koszul::basis(engine, x, p)?;
    let gy = crate::koszul::basis(engine, y, q)?;
    let table = engine.orbit_table(product, p + q)?;
    let target = table.koszul_basis();
    let mut matrix = SparseMatrix::new(target.len(), fx.len() * gy.len());
    for (i, f) in fx.iter().enumerate() {
        for (j, g) in gy.iter().enumerate() {
            let prod = kunneth_product(engine, product, f, g)?;
            let col = i * gy.len() + j;
            for (row, &id) in target.iter().enumerate() {
                let rep = &table.orbit(id).rep;
                let v = prod.coeffs().get(rep).cloned().unwrap_or_else(Rational::zero);
                if !v.is_zero() {
                    matrix.set(row, col, v);
                }
            }
        }
    }
    Ok(matrix)
}

/// The degree-1 cochain sending a structure on `n` letters to `n`. A cocycle
/// on every species.
pub fn cardinality_cocycle() -> FunctionalCochain {
    FunctionalCochain::new(1, |f, _z| rat(f.block(0).len() as i64))
}

/// The degree-2 cochain on linear orders counting pairs across the two
/// blocks that the order lists in block order. Its shadow on the small
/// complex is the degree-2 sign functional.
pub fn schubert_cocycle() -> FunctionalCochain {
    FunctionalCochain::new(2, |f, z| {
        let Payload::Word(w) = &z.payload else {
            panic!("the order statistic cocycle lives on linear orders")
        };
        let mut position = vec![0usize; z.arity + 1];
        for (i, &x) in w.iter().enumerate() {
            position[x as usize] = i;
        }
        let mut count = 0i64;
        for &s in f.block(0).members() {
            for &t in f.block(1).members() {
                if position[s as usize] < position[t as usize] {
                    count += 1;
                }
            }
        }
        rat(count)
    })
}

/// The degree-2 cochain `(S, T) ↦ |S|·|T|`, a normalized cocycle on every
/// species; it is the cup square of the cardinality cocycle.
pub fn size_product_cocycle() -> FunctionalCochain {
    FunctionalCochain::new(2, |f, _z| rat((f.block(0).len() * f.block(1).len()) as i64))
}

/// The degree-4 cochain on graphs counting embeddings of the four-vertex
/// path with the `i`-th vertex in the `i`-th block.
pub fn graph_path_cocycle() -> FunctionalCochain {
    FunctionalCochain::new(4, |f, z| {
        let Payload::Graph { order, edges } = z.payload else {
            panic!("the path cocycle lives on graphs")
        };
        let mut count = 0i64;
        for &v1 in f.block(0).members() {
            for &v2 in f.block(1).members() {
                if !graph_has_edge(order, edges, v1, v2) {
                    continue;
                }
                for &v3 in f.block(2).members() {
                    if !graph_has_edge(order, edges, v2, v3) {
                        continue;
                    }
                    for &v4 in f.block(3).members() {
                        if graph_has_edge(order, edges, v3, v4) {
                            count += 1;
                        }
                    }
                }
            }
        }
        rat(count)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koszul::{basis, cochain_to_koszul};
    use crate::species::Engine;

    #[test]
    fn cup_with_degree_zero_unit_is_identity() {
        let engine = Engine::new();
        let l = engine.resolve("L").unwrap();
        let unit = basis(&engine, &l, 0).unwrap().remove(0);
        for p in 0..=3 {
            let f = basis(&engine, &l, p).unwrap().remove(0);
            assert_eq!(cup_koszul(&engine, &l, &f, &unit).unwrap(), f);
            assert_eq!(cup_koszul(&engine, &l, &unit, &f).unwrap(), f);
        }
    }

    #[test]
    fn linear_order_generators_multiply_with_binomials() {
        let engine = Engine::new();
        let l = engine.resolve("L").unwrap();
        let f = |p: usize| basis(&engine, &l, p).unwrap().remove(0);
        // f2 ⌣ f2 = 2 f4, f2 ⌣ f4 = 3 f6, f1 ⌣ f2 = f3, f1 ⌣ f3 = 0
        assert_eq!(cup_koszul(&engine, &l, &f(2), &f(2)).unwrap(), f(4).scale(&rat(2)));
        assert_eq!(cup_koszul(&engine, &l, &f(2), &f(4)).unwrap(), f(6).scale(&rat(3)));
        assert_eq!(cup_koszul(&engine, &l, &f(1), &f(2)).unwrap(), f(3));
        assert!(cup_koszul(&engine, &l, &f(1), &f(3)).unwrap().is_zero());
    }

    #[test]
    fn exponential_generator_squares_to_zero() {
        let engine = Engine::new();
        let e = engine.resolve("E").unwrap();
        let f1 = basis(&engine, &e, 1).unwrap().remove(0);
        assert!(cup_koszul(&engine, &e, &f1, &f1).unwrap().is_zero());
    }

    #[test]
    fn cardinality_cocycle_shadow_is_the_counting_functional() {
        let engine = Engine::new();
        for id in ["L", "P", "E"] {
            let sp = engine.resolve(id).unwrap();
            let kappa = cardinality_cocycle();
            let shadow = cochain_to_koszul(&engine, &sp, &kappa).unwrap();
            for z in sp.structures(1) {
                assert_eq!(shadow.evaluate(&z).unwrap(), rat(1), "{}", id);
            }
        }
    }

    #[test]
    fn schubert_cocycle_shadow_is_the_sign_functional() {
        let engine = Engine::new();
        let l = engine.resolve("L").unwrap();
        let shadow = cochain_to_koszul(&engine, &l, &schubert_cocycle()).unwrap();
        let f2 = basis(&engine, &l, 2).unwrap().remove(0);
        assert_eq!(shadow, f2);
    }

    #[test]
    fn cochain_cup_matches_koszul_cup_on_orders() {
        let engine = Engine::new();
        let l = engine.resolve("L").unwrap();
        for (p, q) in [(1usize, 1usize), (1, 2), (2, 2), (2, 3), (1, 4)] {
            let f = basis(&engine, &l, p).unwrap().remove(0);
            let g = basis(&engine, &l, q).unwrap().remove(0);
            let lifted = cup_cochain(
                l.clone(),
                Arc::new(crate::koszul::koszul_to_cochain(&f)),
                Arc::new(crate::koszul::koszul_to_cochain(&g)),
            );
            let via_cochains = cochain_to_koszul(&engine, &l, &lifted).unwrap();
            let direct = cup_koszul(&engine, &l, &f, &g).unwrap();
            assert_eq!(via_cochains, direct, "p={}, q={}", p, q);
        }
    }

    #[test]
    fn path_cocycle_counts_embeddings() {
        // singleton blocks in path order on the path graph: exactly one
        let p4 = graph_path_cocycle();
        let path = path_graph_on_four();
        let f = Decomposition::from_word(4, &[1, 2, 3, 4]);
        assert_eq!(p4.eval(&f, &path), rat(1));
        // reversed singleton blocks also embed exactly once
        let f_rev = Decomposition::from_word(4, &[4, 3, 2, 1]);
        assert_eq!(p4.eval(&f_rev, &path), rat(1));
    }

    fn path_graph_on_four() -> Structure {
        // edges 1-2, 2-3, 3-4
        let engine = Engine::new();
        let gr = engine.resolve("Gr").unwrap();
        for z in gr.structures(4) {
            let Payload::Graph { order, edges } = z.payload else { continue };
            let want = graph_has_edge(order, edges, 1, 2)
                && graph_has_edge(order, edges, 2, 3)
                && graph_has_edge(order, edges, 3, 4)
                && edges.count_ones() == 3;
            if want {
                return z;
            }
        }
        unreachable!()
    }

    #[test]
    fn path_cocycle_shadow_is_nonzero_on_the_path() {
        let engine = Engine::new();
        let gr = engine.resolve("Gr").unwrap();
        let shadow = cochain_to_koszul(&engine, &gr, &graph_path_cocycle()).unwrap();
        assert_eq!(shadow.evaluate(&path_graph_on_four()).unwrap(), rat(2));
    }
}
