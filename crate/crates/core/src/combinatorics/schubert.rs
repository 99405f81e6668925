use crate::combinatorics::permutation::Permutation;
use crate::combinatorics::subset::SubsetOfN;
use crate::error::{Error, Result};

/// The Schubert statistic `sch(S, T) = #{(s, t) ∈ S × T : s < t}` of a pair
/// of disjoint subsets.
pub fn schubert(s: &SubsetOfN, t: &SubsetOfN) -> Result<usize> {
    if s.ground_size() != t.ground_size() {
        return Err(Error::InvalidSubset(format!(
            "ground sizes differ: {} vs {}",
            s.ground_size(),
            t.ground_size()
        )));
    }
    if !s.is_disjoint(t) {
        return Err(Error::NotDisjoint(format!("{} and {}", s, t)));
    }
    let mut count = 0;
    for &a in s.members() {
        for &b in t.members() {
            if a < b {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// The sign attached to a two-block decomposition `(S, T)` in all product
/// formulas. It equals the sign of `u_{S,T}`, whose inversion count is
/// `sch(T, S)`.
pub fn split_sign(s: &SubsetOfN, t: &SubsetOfN) -> i64 {
    let sch_ts = schubert(t, s).expect("split_sign needs disjoint subsets");
    if sch_ts % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The unique bijection `u_{S,T}` carrying `S` onto `{1, ..., p}` and `T`
/// onto `{p+1, ..., p+q}` monotonically, for a decomposition `(S, T)` of the
/// full ground set.
pub fn monotone_pair_bijection(s: &SubsetOfN, t: &SubsetOfN) -> Result<Permutation> {
    if !s.is_disjoint(t) {
        return Err(Error::NotDisjoint(format!("{} and {}", s, t)));
    }
    let n = s.ground_size();
    if t.ground_size() != n || s.len() + t.len() != n {
        return Err(Error::InvalidDecomposition(format!("({}, {}) does not cover the ground set", s, t)));
    }
    let p = s.len() as u8;
    let mut images = vec![0u8; n];
    for &x in s.members() {
        images[x as usize - 1] = s.standardize(x).unwrap();
    }
    for &x in t.members() {
        images[x as usize - 1] = p + t.standardize(x).unwrap();
    }
    Permutation::from_images(images)
}

/// A `(p, q)`-shuffle: a two-block decomposition `(S, T)` together with
/// permutations of each block, standardized to `S_p` and `S_q`.
#[derive(Clone, Debug)]
pub struct Shuffle {
    pub s: SubsetOfN,
    pub t: SubsetOfN,
    pub sigma1: Permutation,
    pub sigma2: Permutation,
}

impl Shuffle {
    /// The permutation of `{1, ..., p+q}` reading the shuffled `S`-word
    /// followed by the shuffled `T`-word.
    pub fn concatenated(&self) -> Permutation {
        let mut images = Vec::with_capacity(self.s.ground_size());
        for k in 1..=self.s.len() as u8 {
            images.push(self.s.unstandardize(self.sigma1.image(k)).unwrap());
        }
        for k in 1..=self.t.len() as u8 {
            images.push(self.t.unstandardize(self.sigma2.image(k)).unwrap());
        }
        Permutation::from_images(images).expect("concatenation of a shuffle is a permutation")
    }
}

/// All `(p, q)`-shuffles of `{1, ..., p+q}`; there are `(p+q)!` of them.
pub fn enumerate_shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let n = p + q;
    let mut out = Vec::new();
    for s in SubsetOfN::enumerate_of_size(n, p) {
        let t = s.complement();
        for sigma1 in Permutation::all(p) {
            for sigma2 in Permutation::all(q) {
                out.push(Shuffle { s: s.clone(), t: t.clone(), sigma1: sigma1.clone(), sigma2: sigma2.clone() });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schubert_examples() {
        let n = 4;
        let s1 = SubsetOfN::new(2, vec![1]).unwrap();
        let t1 = SubsetOfN::new(2, vec![2]).unwrap();
        assert_eq!(schubert(&s1, &t1).unwrap(), 1);

        let empty = SubsetOfN::empty(n);
        let t = SubsetOfN::new(n, vec![1, 3]).unwrap();
        assert_eq!(schubert(&empty, &t).unwrap(), 0);

        let s = SubsetOfN::new(n, vec![2, 4]).unwrap();
        assert_eq!(schubert(&s, &t).unwrap(), 1);
    }

    #[test]
    fn schubert_rejects_overlap() {
        let s = SubsetOfN::new(3, vec![1, 2]).unwrap();
        let t = SubsetOfN::new(3, vec![2, 3]).unwrap();
        assert!(schubert(&s, &t).is_err());
    }

    #[test]
    fn monotone_pair_bijection_examples() {
        // S an initial segment gives the identity
        let s = SubsetOfN::new(5, vec![1, 2, 3]).unwrap();
        let u = monotone_pair_bijection(&s, &s.complement()).unwrap();
        assert!(u.is_identity());

        // S = {2}, T = {1}: u is the transposition, sch(S, T) = 0, sch(T, S) = 1
        let s = SubsetOfN::new(2, vec![2]).unwrap();
        let t = SubsetOfN::new(2, vec![1]).unwrap();
        let u = monotone_pair_bijection(&s, &t).unwrap();
        assert_eq!(u.sign(), -1);
        assert_eq!(schubert(&s, &t).unwrap(), 0);
        assert_eq!(schubert(&t, &s).unwrap(), 1);

        // S = {1,3}, T = {2,4}: sch(S, T) = 3 and sign(u) = -1
        let s = SubsetOfN::new(4, vec![1, 3]).unwrap();
        let t = SubsetOfN::new(4, vec![2, 4]).unwrap();
        let u = monotone_pair_bijection(&s, &t).unwrap();
        assert_eq!(schubert(&s, &t).unwrap(), 3);
        assert_eq!(u.sign(), -1);
    }

    /// The sign of `u_{S,T}` is `(-1)^{sch(T,S)}`, exhaustively for n ≤ 6.
    #[test]
    fn sign_of_monotone_bijection_is_schubert_parity() {
        for n in 0..=6usize {
            for mask in 0u32..1 << n {
                let s = SubsetOfN::from_mask(n, mask);
                let t = s.complement();
                let u = monotone_pair_bijection(&s, &t).unwrap();
                let sch_ts = schubert(&t, &s).unwrap();
                assert_eq!(u.sign(), if sch_ts % 2 == 0 { 1 } else { -1 }, "S={}, T={}", s, t);
                assert_eq!(u.sign(), split_sign(&s, &t));
                // and the two statistics differ by |S||T|
                let sch_st = schubert(&s, &t).unwrap();
                assert_eq!((sch_st + sch_ts) % 2, (s.len() * t.len()) % 2);
            }
        }
    }

    /// Concatenating a shuffle has sign `(-1)^{σ¹ + σ² + sch(T,S)}`,
    /// exhaustively for p + q ≤ 6.
    #[test]
    fn concatenation_sign_law() {
        for p in 0..=3usize {
            for q in 0..=(6 - p).min(3) {
                for sh in enumerate_shuffles(p, q) {
                    let sigma = sh.concatenated();
                    let sch_ts = schubert(&sh.t, &sh.s).unwrap() as i64;
                    let expect = sh.sigma1.sign() * sh.sigma2.sign() * (-1i64).pow((sch_ts % 2) as u32);
                    assert_eq!(sigma.sign(), expect);
                }
            }
        }
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(enumerate_shuffles(0, 3).len(), 6);
        assert_eq!(enumerate_shuffles(1, 1).len(), 2);
        assert_eq!(enumerate_shuffles(2, 2).len(), 24);
    }

    /// `(-1)^{sch(S,T)} = (-1)^{sch(T,S) + |S||T|}` for all disjoint S, T with
    /// |S| + |T| ≤ 7.
    #[test]
    fn schubert_swap_parity() {
        for n in 0..=7usize {
            for smask in 0u32..1 << n {
                let s = SubsetOfN::from_mask(n, smask);
                let rest = s.complement();
                // T ranges over subsets of the complement
                let rest_members = rest.members().to_vec();
                for tbits in 0u32..1 << rest_members.len() {
                    let t_members: Vec<u8> = rest_members
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| tbits >> i & 1 == 1)
                        .map(|(_, &x)| x)
                        .collect();
                    let t = SubsetOfN::new(n, t_members).unwrap();
                    let a = schubert(&s, &t).unwrap();
                    let b = schubert(&t, &s).unwrap();
                    assert_eq!((a + b) % 2, (s.len() * t.len()) % 2);
                }
            }
        }
    }
}
