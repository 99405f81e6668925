use std::fmt;

use crate::error::{Error, Result};

/// A subset of the ground set `{1, ..., n}`.
///
/// Members are stored as an ascending list; equality and ordering agree with
/// the bitmask encoding over the same ground set. The ground size is always
/// carried so that complements are well defined.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SubsetOfN {
    ground_size: usize,
    members: Vec<u8>,
}

impl SubsetOfN {
    pub fn new(ground_size: usize, mut members: Vec<u8>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&m) = members.last() {
            if m as usize > ground_size || members[0] == 0 {
                return Err(Error::InvalidSubset(format!(
                    "members {:?} not contained in {{1, ..., {}}}",
                    members, ground_size
                )));
            }
        }
        Ok(SubsetOfN { ground_size, members })
    }

    pub fn empty(ground_size: usize) -> Self {
        SubsetOfN { ground_size, members: Vec::new() }
    }

    pub fn full(ground_size: usize) -> Self {
        SubsetOfN { ground_size, members: (1..=ground_size as u8).collect() }
    }

    /// Bit `i` of `mask` selects element `i + 1`.
    pub fn from_mask(ground_size: usize, mask: u32) -> Self {
        debug_assert!(ground_size <= 31);
        let members = (0..ground_size as u8).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        SubsetOfN { ground_size, members }
    }

    pub fn mask(&self) -> u32 {
        self.members.iter().fold(0u32, |m, &x| m | 1 << (x - 1))
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn members(&self) -> &[u8] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.ground_size
    }

    pub fn contains(&self, x: u8) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn complement(&self) -> SubsetOfN {
        let members = (1..=self.ground_size as u8).filter(|x| !self.contains(*x)).collect();
        SubsetOfN { ground_size: self.ground_size, members }
    }

    pub fn is_disjoint(&self, other: &SubsetOfN) -> bool {
        self.members.iter().all(|x| !other.contains(*x))
    }

    pub fn intersection(&self, other: &SubsetOfN) -> SubsetOfN {
        let members = self.members.iter().copied().filter(|x| other.contains(*x)).collect();
        SubsetOfN { ground_size: self.ground_size, members }
    }

    pub fn union(&self, other: &SubsetOfN) -> SubsetOfN {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        members.sort_unstable();
        members.dedup();
        SubsetOfN { ground_size: self.ground_size, members }
    }

    pub fn remove(&self, x: u8) -> SubsetOfN {
        let members = self.members.iter().copied().filter(|&y| y != x).collect();
        SubsetOfN { ground_size: self.ground_size, members }
    }

    /// The order-preserving bijection `λ_S : S → {1, ..., |S|}`.
    pub fn standardize(&self, x: u8) -> Option<u8> {
        self.members.binary_search(&x).ok().map(|k| k as u8 + 1)
    }

    /// Inverse of `λ_S`: the `k`-th smallest member.
    pub fn unstandardize(&self, k: u8) -> Option<u8> {
        self.members.get(k as usize - 1).copied()
    }

    /// All subsets of `{1, ..., n}` with exactly `k` elements, in mask order.
    pub fn enumerate_of_size(ground_size: usize, k: usize) -> Vec<SubsetOfN> {
        (0u32..1 << ground_size)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| SubsetOfN::from_mask(ground_size, m))
            .collect()
    }
}

impl fmt::Display for SubsetOfN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", m)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standardize_is_order_preserving() {
        let s = SubsetOfN::new(6, vec![2, 5]).unwrap();
        assert_eq!(s.standardize(2), Some(1));
        assert_eq!(s.standardize(5), Some(2));
        assert_eq!(s.standardize(3), None);
        let full = SubsetOfN::full(4);
        for x in 1..=4 {
            assert_eq!(full.standardize(x), Some(x));
        }
    }

    #[test]
    fn complement_and_mask_round_trip() {
        let s = SubsetOfN::new(5, vec![1, 4]).unwrap();
        assert_eq!(s.complement().members(), &[2, 3, 5]);
        assert_eq!(SubsetOfN::from_mask(5, s.mask()), s);
    }

    #[test]
    fn rejects_out_of_range_members() {
        assert!(SubsetOfN::new(3, vec![4]).is_err());
        assert!(SubsetOfN::new(3, vec![0]).is_err());
    }
}
