//! Numerical semigroups containing a fixed element `p`, stored by their Apery
//! coordinates.

use std::collections::BTreeSet;
use std::fmt;

use num::Integer;

use crate::cone;
use crate::error::{Error, Result};

/// A numerical semigroup `H` with `p` in `H`, stored as `(p, mu)` where
/// `h_i = i + mu_i * p` is the least element of `H` congruent to `i` mod `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Semigroup {
    p: u64,
    mu: Vec<u64>,
}

fn gcd_all(xs: &[u64]) -> u64 {
    xs.iter().fold(0, |g, &x| g.gcd(&x))
}

impl Semigroup {
    /// The semigroup of all non-negative integers, seen as containing `p`.
    pub fn naturals(p: u64) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidP(p));
        }
        Ok(Semigroup { p, mu: vec![0; p as usize - 1] })
    }

    /// Wraps an Apery coordinate vector, checking the cone inequalities.
    pub fn from_mu(p: u64, mu: Vec<u64>) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidP(p));
        }
        if mu.len() + 1 != p as usize {
            return Err(Error::DimensionMismatch { expected: p as usize - 1, got: mu.len() });
        }
        for (i, &m) in mu.iter().enumerate() {
            m.checked_mul(p)
                .and_then(|x| x.checked_add(i as u64 + 1))
                .ok_or(Error::Overflow)?;
        }
        if !cone::in_cone(p, &mu) {
            return Err(Error::NotInCone(mu, p));
        }
        Ok(Semigroup { p, mu })
    }

    /// Builds the semigroup from its Apery elements `h_1, ..., h_{p-1}`.
    pub fn from_apery(p: u64, apery: &[u64]) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidP(p));
        }
        if apery.len() + 1 != p as usize {
            return Err(Error::DimensionMismatch { expected: p as usize - 1, got: apery.len() });
        }
        let mut mu = Vec::with_capacity(apery.len());
        for (idx, &h) in apery.iter().enumerate() {
            let i = idx as u64 + 1;
            if h % p != i || h < i {
                return Err(Error::NotInCone(apery.to_vec(), p));
            }
            mu.push((h - i) / p);
        }
        Self::from_mu(p, mu)
    }

    /// Semigroup generated by `gens`, anchored at `p`.
    ///
    /// Apery elements are read off a sieve of the generated set up to
    /// `p * max(gens)`, which bounds every Apery element.
    pub fn from_generators(gens: &[u64], p: u64) -> Result<Self> {
        if let Some(&bad) = gens.iter().find(|&&g| g == 0) {
            return Err(Error::InvalidGenerator(bad));
        }
        let g = gcd_all(gens);
        if g != 1 {
            return Err(Error::NonCoprimeGenerators(gens.to_vec(), g));
        }
        if p < 3 {
            return Err(Error::InvalidP(p));
        }
        let max = *gens.iter().max().expect("gcd of an empty set is 0");
        let bound = p.checked_mul(max).ok_or(Error::Overflow)? as usize;
        let mut reach = vec![false; bound + 1];
        reach[0] = true;
        for n in 1..=bound {
            reach[n] = gens.iter().any(|&g| g as usize <= n && reach[n - g as usize]);
        }
        if !reach[p as usize] {
            return Err(Error::PNotInSemigroup(p));
        }
        let mut apery = vec![None; p as usize - 1];
        for n in 1..=bound {
            let r = n % p as usize;
            if r != 0 && reach[n] && apery[r - 1].is_none() {
                apery[r - 1] = Some(n as u64);
            }
        }
        let apery: Vec<u64> = apery
            .into_iter()
            .map(|h| h.expect("sieve bound covers every residue"))
            .collect();
        Self::from_apery(p, &apery)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn mu(&self) -> &[u64] {
        &self.mu
    }

    /// `h_i` for `i = 1, ..., p-1`; `h_0 = 0` is implicit.
    pub fn apery(&self) -> Vec<u64> {
        (1..self.p).map(|i| self.apery_element(i)).collect()
    }

    /// Least element congruent to `i` modulo `p` (0 for `i = 0`).
    pub fn apery_element(&self, residue: u64) -> u64 {
        let i = residue % self.p;
        if i == 0 {
            0
        } else {
            i + self.mu[i as usize - 1] * self.p
        }
    }

    pub fn is_naturals(&self) -> bool {
        self.mu.iter().all(|&m| m == 0)
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.apery_element(n % self.p)
    }

    pub fn genus(&self) -> u64 {
        self.mu.iter().sum()
    }

    /// Largest gap. Undefined for `N`.
    pub fn frobenius(&self) -> Result<u64> {
        if self.is_naturals() {
            return Err(Error::FrobeniusOfN);
        }
        Ok(self.apery().into_iter().max().unwrap_or(0) - self.p)
    }

    /// Frobenius number with the convention `F(N) = -1`.
    pub fn frobenius_signed(&self) -> i64 {
        self.frobenius().map_or(-1, |f| f as i64)
    }

    pub fn gaps(&self) -> Vec<u64> {
        let top = self.apery().into_iter().max().unwrap_or(0);
        (1..top).filter(|&n| !self.contains(n)).collect()
    }

    pub fn multiplicity(&self) -> u64 {
        self.apery().into_iter().chain([self.p]).min().unwrap_or(self.p)
    }

    /// Minimal generating set, sorted.
    ///
    /// Every minimal generator lies in `{p} U Ap(H, p)`; a candidate is
    /// minimal iff it is not a sum of two non-zero elements.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let mut candidates: BTreeSet<u64> = self.apery().into_iter().collect();
        candidates.insert(self.p);
        candidates
            .into_iter()
            .filter(|&x| !(1..=x / 2).any(|a| self.contains(a) && self.contains(x - a)))
            .collect()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators().len()
    }

    /// `2g = F + 1`; `N` counts as symmetric.
    pub fn is_symmetric(&self) -> bool {
        2 * self.genus() as i64 == self.frobenius_signed() + 1
    }

    /// `2g = F + 2`.
    pub fn is_pseudo_symmetric(&self) -> bool {
        2 * self.genus() as i64 == self.frobenius_signed() + 2
    }

    /// `edim = m = p`.
    pub fn is_max_embedding_dim(&self) -> bool {
        self.multiplicity() == self.p && self.embedding_dimension() == self.p as usize
    }

    pub fn classify(&self) -> Classification {
        Classification {
            symmetric: self.is_symmetric(),
            pseudo_symmetric: self.is_pseudo_symmetric(),
            max_embedding_dim: self.is_max_embedding_dim(),
        }
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.minimal_generators().iter().map(u64::to_string).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub max_embedding_dim: bool,
}

pub fn from_generators(gens: &[u64], p: u64) -> Result<Semigroup> {
    Semigroup::from_generators(gens, p)
}

/// A numerical semigroup given by its gaps, computed independently of the
/// Apery representation. Used as a reference in tests and oracles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GapSet {
    gaps: BTreeSet<u64>,
}

impl GapSet {
    pub fn naturals() -> Self {
        GapSet { gaps: BTreeSet::new() }
    }

    /// Sieves the semigroup generated by `gens` until a run of `min(gens)`
    /// consecutive elements appears; every gap precedes that run.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if let Some(&bad) = gens.iter().find(|&&g| g == 0) {
            return Err(Error::InvalidGenerator(bad));
        }
        let g = gcd_all(gens);
        if g != 1 {
            return Err(Error::NonCoprimeGenerators(gens.to_vec(), g));
        }
        let m = *gens.iter().min().expect("non-empty") as usize;
        let mut reach = vec![true];
        let mut run = 1;
        let mut gaps = BTreeSet::new();
        let mut n = 0;
        while run < m {
            n += 1;
            let hit = gens.iter().any(|&g| g as usize <= n && reach[n - g as usize]);
            reach.push(hit);
            if hit {
                run += 1;
            } else {
                run = 0;
                gaps.insert(n as u64);
            }
        }
        Ok(GapSet { gaps })
    }

    /// Checks closure of the complement under addition.
    pub fn from_gaps(gaps: impl IntoIterator<Item = u64>) -> Option<Self> {
        let gaps: BTreeSet<u64> = gaps.into_iter().collect();
        if gaps.contains(&0) {
            return None;
        }
        let top = gaps.iter().next_back().copied().unwrap_or(0);
        for a in 1..=top {
            if gaps.contains(&a) {
                continue;
            }
            for b in a..=top - a {
                if !gaps.contains(&b) && gaps.contains(&(a + b)) {
                    return None;
                }
            }
        }
        Some(GapSet { gaps })
    }

    pub fn gaps(&self) -> &BTreeSet<u64> {
        &self.gaps
    }

    pub fn contains(&self, n: u64) -> bool {
        !self.gaps.contains(&n)
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn frobenius(&self) -> i64 {
        self.gaps.iter().next_back().map_or(-1, |&f| f as i64)
    }

    /// Least element congruent to each non-zero residue mod `p`.
    pub fn apery(&self, p: u64) -> Vec<u64> {
        (1..p)
            .map(|i| (0..).map(|k| i + k * p).find(|&n| self.contains(n)).expect("cofinite"))
            .collect()
    }

    /// Minimal generators by brute force.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let f = self.frobenius().max(0) as u64;
        let m = (1..).find(|&n| self.contains(n)).expect("cofinite");
        (1..=f + m + 1)
            .filter(|&x| self.contains(x))
            .filter(|&x| !(1..x).any(|a| self.contains(a) && self.contains(x - a)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(gens: &[u64], p: u64) -> Semigroup {
        Semigroup::from_generators(gens, p).unwrap()
    }

    #[test]
    fn generators_to_mu() {
        assert_eq!(s(&[3, 7], 3).mu(), &[2, 4]);
        assert_eq!(s(&[1], 3).mu(), &[0, 0]);
        assert_eq!(s(&[4, 9, 15], 4).apery(), vec![9, 18, 15]);
    }

    #[test]
    fn generator_errors() {
        assert_eq!(
            Semigroup::from_generators(&[4, 6], 4),
            Err(Error::NonCoprimeGenerators(vec![4, 6], 2))
        );
        assert_eq!(Semigroup::from_generators(&[3, 7], 5), Err(Error::PNotInSemigroup(5)));
        assert_eq!(Semigroup::from_generators(&[], 3).unwrap_err(), Error::NonCoprimeGenerators(vec![], 0));
        assert_eq!(Semigroup::from_generators(&[0, 1], 3), Err(Error::InvalidGenerator(0)));
        assert_eq!(Semigroup::from_generators(&[1], 2), Err(Error::InvalidP(2)));
    }

    #[test]
    fn from_mu_rejects_points_outside_cone() {
        assert!(matches!(Semigroup::from_mu(3, vec![0, 1]), Err(Error::NotInCone(..))));
        assert!(matches!(
            Semigroup::from_mu(3, vec![0]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn membership() {
        let h = s(&[3, 7], 3);
        assert!(h.contains(10));
        assert!(!h.contains(11));
        assert!(h.contains(0));
        assert!(Semigroup::naturals(3).unwrap().contains(1));
    }

    #[test]
    fn invariants_of_small_examples() {
        let h = s(&[3, 7], 3);
        assert_eq!(h.genus(), 6);
        assert_eq!(h.gaps(), vec![1, 2, 4, 5, 8, 11]);
        assert_eq!(h.frobenius(), Ok(11));
        assert_eq!(h.multiplicity(), 3);
        assert_eq!(h.embedding_dimension(), 2);

        assert_eq!(s(&[3, 4], 3).frobenius(), Ok(5));

        let medim = Semigroup::from_mu(4, vec![1, 1, 1]).unwrap();
        assert_eq!(medim.genus(), 3);
        assert_eq!(medim.frobenius(), Ok(3));
        assert_eq!(medim.minimal_generators(), vec![4, 5, 6, 7]);
        assert!(medim.is_max_embedding_dim());

        let n = Semigroup::naturals(3).unwrap();
        assert_eq!(n.genus(), 0);
        assert_eq!(n.frobenius(), Err(Error::FrobeniusOfN));
        assert_eq!(n.multiplicity(), 1);
        assert_eq!(n.embedding_dimension(), 1);
    }

    #[test]
    fn classification() {
        let h = s(&[3, 4], 3);
        assert!(h.is_symmetric());
        assert!(!h.is_pseudo_symmetric());

        let h = s(&[3, 4, 5], 3);
        assert_eq!(h.gaps(), vec![1, 2]);
        assert!(h.is_pseudo_symmetric());
        assert!(h.is_max_embedding_dim());
        assert_eq!(h.mu(), &[1, 1]);

        let n = Semigroup::naturals(5).unwrap();
        assert!(n.is_symmetric());
        assert!(!n.is_pseudo_symmetric());
        assert!(!n.is_max_embedding_dim());
    }

    #[test]
    fn display_lists_minimal_generators() {
        assert_eq!(s(&[3, 7, 10], 3).to_string(), "<3,7>");
    }

    #[test]
    fn gap_set_sieve() {
        let g = GapSet::from_generators(&[3, 7]).unwrap();
        assert_eq!(g.gaps().iter().copied().collect::<Vec<_>>(), vec![1, 2, 4, 5, 8, 11]);
        assert_eq!(g.frobenius(), 11);
        assert_eq!(g.apery(3), vec![7, 14]);
        assert_eq!(GapSet::from_generators(&[1]).unwrap(), GapSet::naturals());
        assert_eq!(g.minimal_generators(), vec![3, 7]);
    }

    #[test]
    fn gap_set_closure() {
        assert!(GapSet::from_gaps([1, 2]).is_some());
        assert!(GapSet::from_gaps([1, 3]).is_some());
        assert!(GapSet::from_gaps([1, 4]).is_none());
        assert!(GapSet::from_gaps([0]).is_none());
    }
}
