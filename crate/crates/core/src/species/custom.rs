//! Table-defined species loaded from a JSON document.
//!
//! The document lists, per arity up to a bound, the structures, the action of
//! adjacent transpositions, and the left/right restriction images under
//! deletion of one element. Restrictions to arbitrary subsets are composed
//! from single deletions; coassociativity, which is validated, makes the
//! composition order irrelevant. Beyond `max_arity` the species is zero.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Permutation, SubsetOfN};
use crate::error::{Error, Result};
use crate::species::{Bicomodule, Payload, Side, Structure};

#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomSpeciesDoc {
    pub name: String,
    pub max_arity: usize,
    pub cosymmetric: bool,
    /// `structures[n]` lists the canonical names of the structures of arity `n`.
    pub structures: Vec<Vec<String>>,
    /// `transposition_action[n][i-1][j]`: index of `(i, i+1) · z_j` at arity `n`.
    pub transposition_action: Vec<Vec<Vec<usize>>>,
    /// `delete_left[n][i-1][j]`: index at arity `n-1` of the left restriction
    /// of `z_j` to the complement of `{i}`, or `null` for the zero component.
    pub delete_left: Vec<Vec<Vec<Option<usize>>>>,
    pub delete_right: Vec<Vec<Vec<Option<usize>>>>,
}

pub struct CustomSpecies {
    name: String,
    max_arity: usize,
    cosymmetric: bool,
    names: Vec<Vec<String>>,
    act: Vec<Vec<Vec<u16>>>,
    delete: [Vec<Vec<Vec<Option<u16>>>>; 2],
}

impl CustomSpecies {
    fn index_of(&self, z: &Structure) -> u16 {
        let Payload::Ref(i) = z.payload else { panic!("custom species structure expected") };
        i
    }

    /// Deletes the element labeled `label` at arity `n`, standardizing the rest.
    fn delete_one(&self, side: Side, n: usize, label: u8, idx: u16) -> Option<u16> {
        let table = &self.delete[if matches!(side, Side::Left) { 0 } else { 1 }];
        table[n][label as usize - 1][idx as usize]
    }
}

impl Bicomodule for CustomSpecies {
    fn id(&self) -> &str {
        &self.name
    }

    fn cosymmetric(&self) -> bool {
        self.cosymmetric
    }

    fn arity_bound(&self) -> Option<usize> {
        Some(self.max_arity)
    }

    fn structures(&self, arity: usize) -> Vec<Structure> {
        if arity > self.max_arity {
            return Vec::new();
        }
        (0..self.names[arity].len() as u16).map(|i| Structure::new(arity, Payload::Ref(i))).collect()
    }

    fn relabel(&self, sigma: &Permutation, z: &Structure) -> Result<Structure> {
        if sigma.degree() != z.arity {
            return Err(Error::ArityMismatch { expected: z.arity, got: sigma.degree() });
        }
        let mut idx = self.index_of(z);
        for k in sigma.adjacent_word().into_iter().rev() {
            idx = self.act[z.arity][k - 1][idx as usize];
        }
        Ok(Structure::new(z.arity, Payload::Ref(idx)))
    }

    fn restrict(&self, side: Side, z: &Structure, keep: &SubsetOfN) -> Result<Option<Structure>> {
        if keep.ground_size() != z.arity {
            return Err(Error::InvalidSubset(format!(
                "subset on ground {} applied to structure of arity {}",
                keep.ground_size(),
                z.arity
            )));
        }
        let mut idx = self.index_of(z);
        let mut n = z.arity;
        // delete the complement, largest label first, so labels stay current
        for &label in keep.complement().members().iter().rev() {
            match self.delete_one(side, n, label, idx) {
                Some(next) => idx = next,
                None => return Ok(None),
            }
            n -= 1;
        }
        Ok(Some(Structure::new(keep.len(), Payload::Ref(idx))))
    }

    fn describe(&self, z: &Structure) -> String {
        let Payload::Ref(i) = z.payload else { return z.payload.display() };
        self.names[z.arity][i as usize].clone()
    }
}

fn doc_err(path: String, message: String) -> Error {
    Error::SpeciesDocument { path, message }
}

/// Validates a document and builds the species. Every violated bicomodule
/// law is reported with a witness.
pub fn validate_custom(doc: &CustomSpeciesDoc) -> Result<CustomSpecies> {
    let m = doc.max_arity;
    if doc.structures.len() != m + 1 {
        return Err(doc_err("structures".into(), format!("expected {} arity levels, got {}", m + 1, doc.structures.len())));
    }
    if doc.transposition_action.len() != m + 1 {
        return Err(doc_err("transposition_action".into(), format!("expected {} arity levels", m + 1)));
    }
    for (field, table) in [("delete_left", &doc.delete_left), ("delete_right", &doc.delete_right)] {
        if table.len() != m + 1 {
            return Err(doc_err(field.into(), format!("expected {} arity levels", m + 1)));
        }
    }

    for n in 0..=m {
        let count = doc.structures[n].len();
        if count > u16::MAX as usize {
            return Err(doc_err(format!("structures[{}]", n), "too many structures".into()));
        }
        let mut names = doc.structures[n].clone();
        names.sort();
        names.dedup();
        if names.len() != count {
            return Err(doc_err(format!("structures[{}]", n), "duplicate structure names".into()));
        }
        if doc.transposition_action[n].len() != n.saturating_sub(1) {
            return Err(doc_err(
                format!("transposition_action[{}]", n),
                format!("expected {} generator tables", n.saturating_sub(1)),
            ));
        }
        for (i, table) in doc.transposition_action[n].iter().enumerate() {
            if table.len() != count {
                return Err(doc_err(format!("transposition_action[{}][{}]", n, i), "length mismatch".into()));
            }
            let mut seen = vec![false; count];
            for (j, &img) in table.iter().enumerate() {
                if img >= count {
                    return Err(doc_err(
                        format!("transposition_action[{}][{}][{}]", n, i, j),
                        format!("index {} out of range", img),
                    ));
                }
                if seen[img] {
                    return Err(doc_err(format!("transposition_action[{}][{}]", n, i), "not a bijection".into()));
                }
                seen[img] = true;
            }
        }
        for (field, table) in [("delete_left", &doc.delete_left), ("delete_right", &doc.delete_right)] {
            if table[n].len() != n {
                return Err(doc_err(format!("{}[{}]", field, n), format!("expected {} deletion tables", n)));
            }
            for (i, del) in table[n].iter().enumerate() {
                if del.len() != count {
                    return Err(doc_err(format!("{}[{}][{}]", field, n, i), "length mismatch".into()));
                }
                let below = if n == 0 { 0 } else { doc.structures[n - 1].len() };
                for (j, img) in del.iter().enumerate() {
                    if let Some(img) = img {
                        if *img >= below {
                            return Err(doc_err(
                                format!("{}[{}][{}][{}]", field, n, i, j),
                                format!("index {} out of range at arity {}", img, n - 1),
                            ));
                        }
                    }
                }
            }
        }
    }

    let species = CustomSpecies {
        name: doc.name.clone(),
        max_arity: m,
        cosymmetric: doc.cosymmetric,
        names: doc.structures.clone(),
        act: doc
            .transposition_action
            .iter()
            .map(|per_n| per_n.iter().map(|t| t.iter().map(|&x| x as u16).collect()).collect())
            .collect(),
        delete: [
            doc.delete_left
                .iter()
                .map(|per_n| per_n.iter().map(|t| t.iter().map(|x| x.map(|v| v as u16)).collect()).collect())
                .collect(),
            doc.delete_right
                .iter()
                .map(|per_n| per_n.iter().map(|t| t.iter().map(|x| x.map(|v| v as u16)).collect()).collect())
                .collect(),
        ],
    };

    // Coxeter relations make the relabeling action well defined
    for n in 2..=m {
        let count = species.names[n].len();
        let gen = |k: usize, i: u16| species.act[n][k - 1][i as usize];
        for j in 0..count as u16 {
            for k in 1..n {
                if gen(k, gen(k, j)) != j {
                    return Err(Error::LawViolation {
                        law: "involution".into(),
                        witness: format!("arity {}, generator ({} {}), structure {}", n, k, k + 1, species.names[n][j as usize]),
                    });
                }
            }
            for k in 1..n {
                for l in k + 2..n {
                    if gen(k, gen(l, j)) != gen(l, gen(k, j)) {
                        return Err(Error::LawViolation {
                            law: "commuting generators".into(),
                            witness: format!("arity {}, generators {} and {}, structure {}", n, k, l, species.names[n][j as usize]),
                        });
                    }
                }
            }
            for k in 1..n - 1 {
                let lhs = gen(k, gen(k + 1, gen(k, j)));
                let rhs = gen(k + 1, gen(k, gen(k + 1, j)));
                if lhs != rhs {
                    return Err(Error::LawViolation {
                        law: "braid relation".into(),
                        witness: format!("arity {}, generators {} and {}, structure {}", n, k, k + 1, species.names[n][j as usize]),
                    });
                }
            }
        }
    }

    // coassociativity of single deletions, per side
    for side in [Side::Left, Side::Right] {
        for n in 2..=m {
            for idx in 0..species.names[n].len() as u16 {
                for i in 1..=n as u8 {
                    for j in 1..=n as u8 {
                        if i == j {
                            continue;
                        }
                        let j_after_i = if j > i { j - 1 } else { j };
                        let i_after_j = if i > j { i - 1 } else { i };
                        let a = species
                            .delete_one(side, n, i, idx)
                            .and_then(|x| species.delete_one(side, n - 1, j_after_i, x));
                        let b = species
                            .delete_one(side, n, j, idx)
                            .and_then(|x| species.delete_one(side, n - 1, i_after_j, x));
                        if a != b {
                            return Err(Error::LawViolation {
                                law: "coassociativity".into(),
                                witness: format!(
                                    "arity {}, structure {}, deleting {} then {} vs {} then {} ({:?} side)",
                                    n, species.names[n][idx as usize], i, j, j, i, side
                                ),
                            });
                        }
                    }
                }
            }
        }
    }

    // equivariance of deletions with the relabeling action
    for side in [Side::Left, Side::Right] {
        for n in 2..=m {
            for idx in 0..species.names[n].len() as u16 {
                let z = Structure::new(n, Payload::Ref(idx));
                for k in 1..n {
                    let sigma = Permutation::adjacent(n, k);
                    let sz = species.relabel(&sigma, &z)?;
                    for i in 1..=n as u8 {
                        let keep = SubsetOfN::full(n).remove(i);
                        let keep_image = SubsetOfN::full(n).remove(sigma.image(i));
                        let lhs = species.restrict(side, &sz, &keep_image)?;
                        let rhs = match species.restrict(side, &z, &keep)? {
                            Some(r) => Some(species.relabel(&sigma.induced(&keep), &r)?),
                            None => None,
                        };
                        if lhs != rhs {
                            return Err(Error::LawViolation {
                                law: "equivariance".into(),
                                witness: format!(
                                    "arity {}, structure {}, generator ({} {}), deleted element {} ({:?} side)",
                                    n, species.names[n][idx as usize], k, k + 1, i, side
                                ),
                            });
                        }
                    }
                }
            }
        }
    }

    // bicomodule compatibility: ρ_{S∩T} λ_S = λ_{S∩T} ρ_T whenever S ∪ T is everything
    for n in 0..=m {
        for idx in 0..species.names[n].len() as u16 {
            let z = Structure::new(n, Payload::Ref(idx));
            let mut assignment = vec![0u8; n];
            loop {
                let s = SubsetOfN::new(n, (1..=n as u8).filter(|&x| assignment[x as usize - 1] != 1).collect())?;
                let t = SubsetOfN::new(n, (1..=n as u8).filter(|&x| assignment[x as usize - 1] != 0).collect())?;
                let meet = s.intersection(&t);
                let lhs = match species.restrict(Side::Left, &z, &s)? {
                    Some(zs) => {
                        let meet_in_s = SubsetOfN::new(
                            s.len(),
                            meet.members().iter().map(|&x| s.standardize(x).unwrap()).collect(),
                        )?;
                        species.restrict(Side::Right, &zs, &meet_in_s)?
                    }
                    None => None,
                };
                let rhs = match species.restrict(Side::Right, &z, &t)? {
                    Some(zt) => {
                        let meet_in_t = SubsetOfN::new(
                            t.len(),
                            meet.members().iter().map(|&x| t.standardize(x).unwrap()).collect(),
                        )?;
                        species.restrict(Side::Left, &zt, &meet_in_t)?
                    }
                    None => None,
                };
                if lhs != rhs {
                    return Err(Error::LawViolation {
                        law: "bicomodule compatibility".into(),
                        witness: format!(
                            "arity {}, structure {}, S = {}, T = {}",
                            n, species.names[n][idx as usize], s, t
                        ),
                    });
                }
                // next assignment over {S only, T only, both}
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    if assignment[pos] < 2 {
                        assignment[pos] += 1;
                        for a in assignment[..pos].iter_mut() {
                            *a = 0;
                        }
                        break;
                    }
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
        }
    }

    // declared cosymmetry means the two deletion tables agree
    if doc.cosymmetric && doc.delete_left != doc.delete_right {
        return Err(doc_err(
            "cosymmetric".into(),
            "declared cosymmetric but delete_left and delete_right differ".into(),
        ));
    }

    Ok(species)
}

pub fn parse_custom(json: &str) -> Result<CustomSpecies> {
    let doc: CustomSpeciesDoc = serde_json::from_str(json)?;
    validate_custom(&doc)
}

/// The bundled non-cosymmetric species: a linear order together with a sign;
/// both restrictions forget elements, and the right one additionally flips
/// the sign once per deleted element. The Koszul differential of this
/// species is nonzero in every even degree.
pub fn signed_orders_doc(max_arity: usize) -> CustomSpeciesDoc {
    let orders: Vec<Vec<Permutation>> = (0..=max_arity).map(Permutation::all).collect();
    let index_of = |n: usize, w: &[u8], sign_bit: usize| -> usize {
        let pos = orders[n].iter().position(|p| p.images() == w).expect("order exists");
        2 * pos + sign_bit
    };
    let mut structures = Vec::new();
    let mut act = Vec::new();
    let mut del_l = Vec::new();
    let mut del_r = Vec::new();
    for n in 0..=max_arity {
        let mut names = Vec::new();
        for p in &orders[n] {
            for s in ["+", "-"] {
                let word: String = p.images().iter().map(|x| x.to_string()).collect();
                names.push(format!("{}{}", word, s));
            }
        }
        structures.push(names);

        let mut act_n = Vec::new();
        for k in 1..n {
            let sigma = Permutation::adjacent(n, k);
            let mut table = Vec::new();
            for p in &orders[n] {
                let mapped: Vec<u8> = p.images().iter().map(|&x| sigma.image(x)).collect();
                for sbit in 0..2 {
                    table.push(index_of(n, &mapped, sbit));
                }
            }
            act_n.push(table);
        }
        act.push(act_n);

        let mut del_l_n = Vec::new();
        let mut del_r_n = Vec::new();
        for i in 1..=n as u8 {
            let mut tl = Vec::new();
            let mut tr = Vec::new();
            for p in &orders[n] {
                let reduced: Vec<u8> =
                    p.images().iter().filter(|&&x| x != i).map(|&x| if x > i { x - 1 } else { x }).collect();
                for sbit in 0..2usize {
                    tl.push(Some(index_of(n - 1, &reduced, sbit)));
                    tr.push(Some(index_of(n - 1, &reduced, 1 - sbit)));
                }
            }
            del_l_n.push(tl);
            del_r_n.push(tr);
        }
        del_l.push(del_l_n);
        del_r.push(del_r_n);
    }
    CustomSpeciesDoc {
        name: "signed-orders".into(),
        max_arity,
        cosymmetric: false,
        structures,
        transposition_action: act,
        delete_left: del_l,
        delete_right: del_r,
    }
}

/// The exponential species as a table document, for exercising the loader.
pub fn exponential_doc(max_arity: usize) -> CustomSpeciesDoc {
    let structures = vec![vec!["e".to_string()]; max_arity + 1];
    let act = (0..=max_arity).map(|n| vec![vec![0usize]; n.saturating_sub(1)]).collect();
    let del: Vec<Vec<Vec<Option<usize>>>> = (0..=max_arity).map(|n| vec![vec![Some(0usize)]; n]).collect();
    CustomSpeciesDoc {
        name: "E-table".into(),
        max_arity,
        cosymmetric: true,
        structures,
        transposition_action: act,
        delete_left: del.clone(),
        delete_right: del,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_document_validates_and_matches_builtin() {
        let doc = exponential_doc(4);
        let sp = validate_custom(&doc).unwrap();
        assert!(sp.cosymmetric());
        for n in 0..=4 {
            assert_eq!(sp.structures(n).len(), 1);
        }
        let z = Structure::new(3, Payload::Ref(0));
        let keep = SubsetOfN::new(3, vec![1, 3]).unwrap();
        let r = sp.restrict(Side::Left, &z, &keep).unwrap().unwrap();
        assert_eq!(r.arity, 2);
    }

    #[test]
    fn signed_orders_document_validates_and_is_not_cosymmetric() {
        let doc = signed_orders_doc(4);
        let sp = validate_custom(&doc).unwrap();
        assert!(!sp.cosymmetric());
        assert_eq!(sp.structures(0).len(), 2);
        assert_eq!(sp.structures(3).len(), 12);
        // left keeps the sign, right flips it per deleted element
        let z = Structure::new(1, Payload::Ref(0)); // "1+"
        let empty = SubsetOfN::empty(1);
        let l = sp.restrict(Side::Left, &z, &empty).unwrap().unwrap();
        let r = sp.restrict(Side::Right, &z, &empty).unwrap().unwrap();
        assert_ne!(l, r);
        assert_eq!(sp.describe(&l), "+");
        assert_eq!(sp.describe(&r), "-");
    }

    #[test]
    fn non_coassociative_document_is_rejected_with_witness() {
        let mut doc = exponential_doc(3);
        doc.structures[0] = vec!["p".into(), "q".into()];
        doc.structures[1] = vec!["a".into(), "b".into()];
        doc.delete_left[1] = vec![vec![Some(0), Some(1)]];
        doc.delete_right[1] = vec![vec![Some(0), Some(1)]];
        // deleting 1 from z reaches a, deleting 2 reaches b; composed to
        // arity 0 the two orders land on different structures
        doc.structures[2] = vec!["z".into()];
        doc.transposition_action[2] = vec![vec![0]];
        doc.delete_left[2] = vec![vec![Some(0)], vec![Some(1)]];
        doc.delete_right[2] = vec![vec![Some(0)], vec![Some(1)]];
        doc.structures[3] = vec![];
        doc.transposition_action[3] = vec![vec![], vec![]];
        doc.delete_left[3] = vec![vec![], vec![], vec![]];
        doc.delete_right[3] = vec![vec![], vec![], vec![]];
        match validate_custom(&doc) {
            Err(Error::LawViolation { law, witness }) => {
                assert_eq!(law, "coassociativity");
                assert!(witness.contains("z"));
            }
            other => panic!("expected coassociativity violation, got {:?}", other.err()),
        }
    }

    #[test]
    fn broken_bijection_is_rejected_with_field_path() {
        let mut doc = exponential_doc(3);
        doc.structures[2] = vec!["x".into(), "y".into()];
        doc.transposition_action[2] = vec![vec![0, 0]];
        doc.delete_left[2] = vec![vec![Some(0), Some(0)], vec![Some(0), Some(0)]];
        doc.delete_right[2] = vec![vec![Some(0), Some(0)], vec![Some(0), Some(0)]];
        doc.structures[3] = vec![];
        doc.transposition_action[3] = vec![vec![], vec![]];
        doc.delete_left[3] = vec![vec![], vec![], vec![]];
        doc.delete_right[3] = vec![vec![], vec![], vec![]];
        match validate_custom(&doc) {
            Err(Error::SpeciesDocument { path, .. }) => assert!(path.contains("transposition_action[2]")),
            other => panic!("expected document error, got {:?}", other.err()),
        }
    }

    #[test]
    fn json_round_trip() {
        let doc = signed_orders_doc(3);
        let json = serde_json::to_string(&doc).unwrap();
        let sp = parse_custom(&json).unwrap();
        assert_eq!(sp.id(), "signed-orders");
    }
}
