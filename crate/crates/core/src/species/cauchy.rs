//! The Cauchy product of two bicomodules. A structure on `{1, ..., n}` is a
//! two-block decomposition `(S, T)` together with standardized structures of
//! the factors on `|S|` and `|T|` letters; restriction acts componentwise.

use std::sync::Arc;

use crate::combinatorics::{Permutation, SubsetOfN};
use crate::error::{Error, Result};
use crate::species::{Bicomodule, Payload, Side, Structure};

pub struct CauchyProduct {
    id: String,
    left: Arc<dyn Bicomodule>,
    right: Arc<dyn Bicomodule>,
}

impl CauchyProduct {
    pub fn new(left: Arc<dyn Bicomodule>, right: Arc<dyn Bicomodule>) -> Self {
        let id = format!("{}*{}", left.id(), right.id());
        CauchyProduct { id, left, right }
    }

    /// The left-part subset encoded by a pair payload.
    pub fn split_subset(split: &[u8]) -> SubsetOfN {
        let members = split
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 0)
            .map(|(i, _)| i as u8 + 1)
            .collect();
        SubsetOfN::new(split.len(), members).expect("split word is a valid subset")
    }

    pub fn parts<'a>(z: &'a Structure) -> (&'a [u8], &'a Payload, &'a Payload) {
        let Payload::Pair { split, left, right } = &z.payload else {
            panic!("Cauchy product structure expected")
        };
        (split, left, right)
    }
}

impl Bicomodule for CauchyProduct {
    fn id(&self) -> &str {
        &self.id
    }

    fn cosymmetric(&self) -> bool {
        self.left.cosymmetric() && self.right.cosymmetric()
    }

    fn arity_bound(&self) -> Option<usize> {
        match (self.left.arity_bound(), self.right.arity_bound()) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        }
    }

    fn structures(&self, arity: usize) -> Vec<Structure> {
        let mut out = Vec::new();
        for mask in 0u32..1 << arity {
            let s = SubsetOfN::from_mask(arity, mask);
            let p = s.len();
            let left_structs = self.left.structures(p);
            if left_structs.is_empty() {
                continue;
            }
            let right_structs = self.right.structures(arity - p);
            if right_structs.is_empty() {
                continue;
            }
            let split: Vec<u8> = (1..=arity as u8).map(|x| if s.contains(x) { 0 } else { 1 }).collect();
            for l in &left_structs {
                for r in &right_structs {
                    out.push(Structure::new(
                        arity,
                        Payload::Pair {
                            split: split.clone(),
                            left: Box::new(l.payload.clone()),
                            right: Box::new(r.payload.clone()),
                        },
                    ));
                }
            }
        }
        out.sort();
        out
    }

    fn relabel(&self, sigma: &Permutation, z: &Structure) -> Result<Structure> {
        if sigma.degree() != z.arity {
            return Err(Error::ArityMismatch { expected: z.arity, got: sigma.degree() });
        }
        let (split, lp, rp) = CauchyProduct::parts(z);
        let s = CauchyProduct::split_subset(split);
        let t = s.complement();
        let mut new_split = vec![0u8; z.arity];
        for (i, &v) in split.iter().enumerate() {
            new_split[sigma.image(i as u8 + 1) as usize - 1] = v;
        }
        let l = self
            .left
            .relabel(&sigma.induced(&s), &Structure::new(s.len(), lp.clone()))?;
        let r = self
            .right
            .relabel(&sigma.induced(&t), &Structure::new(t.len(), rp.clone()))?;
        Ok(Structure::new(
            z.arity,
            Payload::Pair { split: new_split, left: Box::new(l.payload), right: Box::new(r.payload) },
        ))
    }

    fn restrict(&self, side: Side, z: &Structure, keep: &SubsetOfN) -> Result<Option<Structure>> {
        if keep.ground_size() != z.arity {
            return Err(Error::InvalidSubset(format!(
                "subset on ground {} applied to structure of arity {}",
                keep.ground_size(),
                z.arity
            )));
        }
        let (split, lp, rp) = CauchyProduct::parts(z);
        let s = CauchyProduct::split_subset(split);
        let t = s.complement();
        // the kept elements of each part, transported into the part
        let keep_in_s = SubsetOfN::new(
            s.len(),
            s.members().iter().filter(|x| keep.contains(**x)).map(|&x| s.standardize(x).unwrap()).collect(),
        )
        .expect("standardized subset");
        let keep_in_t = SubsetOfN::new(
            t.len(),
            t.members().iter().filter(|x| keep.contains(**x)).map(|&x| t.standardize(x).unwrap()).collect(),
        )
        .expect("standardized subset");
        let Some(l) = self.left.restrict(side, &Structure::new(s.len(), lp.clone()), &keep_in_s)? else {
            return Ok(None);
        };
        let Some(r) = self.right.restrict(side, &Structure::new(t.len(), rp.clone()), &keep_in_t)? else {
            return Ok(None);
        };
        let new_split: Vec<u8> = keep
            .members()
            .iter()
            .map(|&x| if s.contains(x) { 0 } else { 1 })
            .collect();
        Ok(Some(Structure::new(
            keep.len(),
            Payload::Pair { split: new_split, left: Box::new(l.payload), right: Box::new(r.payload) },
        )))
    }

    fn describe(&self, z: &Structure) -> String {
        let (split, lp, rp) = CauchyProduct::parts(z);
        let s = CauchyProduct::split_subset(split);
        format!(
            "({}: {} ⊗ {})",
            s,
            self.left.describe(&Structure::new(s.len(), lp.clone())),
            self.right.describe(&Structure::new(z.arity - s.len(), rp.clone()))
        )
    }
}
