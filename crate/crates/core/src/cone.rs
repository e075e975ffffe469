//! The cone of Apery coordinates.
//!
//! A numerical semigroup `H` containing `p` is determined by the vector
//! `mu = (mu_1, ..., mu_{p-1})` with `h_i = i + mu_i * p` the least element of
//! `H` congruent to `i`. The admissible vectors are exactly the lattice points
//! of the polyhedral cone cut out by
//!
//! ```text
//! X_i + X_j - X_{i+j}     >= 0    (i + j < p)
//! X_i + X_j - X_{i+j-p}   >= -1   (i + j > p)
//! ```
//!
//! Translating the vertex `v = (-1/p, ..., -(p-1)/p)` to the origin gives the
//! homogeneous cone `C*` whose edges control the quasi-periods of the
//! counting functions.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num::{BigInt, BigRational};

use crate::error::{Error, Result};
use crate::linalg::{self, rat};
use crate::verify::Verdict;

/// Largest `p` for which [`edges_of_cone_star`] runs its subset search.
pub const EDGE_SEARCH_MAX_P: u64 = 7;

/// `X_i + X_j - X_k >= bound`, with 1-based coordinate indices and
/// `bound` either `0` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inequality {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub bound: i64,
}

impl Inequality {
    /// `X_i + X_j - X_k - bound`; non-negative iff satisfied.
    pub fn slack(&self, x: &[u64]) -> i64 {
        x[self.i - 1] as i64 + x[self.j - 1] as i64 - x[self.k - 1] as i64 - self.bound
    }

    /// Left-hand side as a dense normal vector of length `dim`.
    pub fn normal(&self, dim: usize) -> Vec<i64> {
        let mut n = vec![0; dim];
        n[self.i - 1] += 1;
        n[self.j - 1] += 1;
        n[self.k - 1] -= 1;
        n
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i == self.j {
            write!(f, "2X{} >= X{}", self.i, self.k)?;
        } else {
            write!(f, "X{} + X{} >= X{}", self.i, self.j, self.k)?;
        }
        if self.bound != 0 {
            write!(f, " - {}", -self.bound)?;
        }
        Ok(())
    }
}

fn inequalities(p: u64) -> impl Iterator<Item = Inequality> {
    let p = p as usize;
    (1..p).flat_map(move |i| {
        (i..p).filter_map(move |j| match (i + j).cmp(&p) {
            std::cmp::Ordering::Less => Some(Inequality { i, j, k: i + j, bound: 0 }),
            std::cmp::Ordering::Greater => Some(Inequality { i, j, k: i + j - p, bound: -1 }),
            std::cmp::Ordering::Equal => None,
        })
    })
}

/// Membership test without building a [`ConeModel`]. `x` must have `p - 1`
/// coordinates.
pub fn in_cone(p: u64, x: &[u64]) -> bool {
    debug_assert_eq!(x.len() + 1, p as usize);
    inequalities(p).all(|ineq| ineq.slack(x) >= 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeModel {
    p: u64,
    inequalities: Vec<Inequality>,
}

/// Builds the inequality system for `p`, one inequality per unordered pair
/// `i <= j` with `i + j != p`.
pub fn build_cone(p: u64) -> Result<ConeModel> {
    if p < 3 {
        return Err(Error::InvalidP(p));
    }
    Ok(ConeModel { p, inequalities: inequalities(p).collect() })
}

impl ConeModel {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.p as usize - 1
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    /// Every inequality defines a facet, so this is also the facet count.
    pub fn facet_count(&self) -> usize {
        self.inequalities.len()
    }

    pub fn vertex(&self) -> Vec<BigRational> {
        let p = BigInt::from(self.p);
        (1..self.p)
            .map(|i| BigRational::new(-BigInt::from(i), p.clone()))
            .collect()
    }

    fn check_dim(&self, x: &[u64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    pub fn contains(&self, x: &[u64]) -> Result<bool> {
        self.check_dim(x)?;
        Ok(self.inequalities.iter().all(|q| q.slack(x) >= 0))
    }

    pub fn contains_interior(&self, x: &[u64]) -> Result<bool> {
        self.check_dim(x)?;
        Ok(self.inequalities.iter().all(|q| q.slack(x) > 0))
    }

    /// Inequalities satisfied with equality at `x`.
    pub fn active(&self, x: &[u64]) -> Result<Vec<Inequality>> {
        self.check_dim(x)?;
        Ok(self.inequalities.iter().copied().filter(|q| q.slack(x) == 0).collect())
    }

    /// Membership in the translated cone `C*` (all right-hand sides zero).
    pub fn star_contains(&self, x: &[i64]) -> bool {
        self.inequalities
            .iter()
            .all(|q| x[q.i - 1] + x[q.j - 1] - x[q.k - 1] >= 0)
    }
}

pub fn is_in_cone(cone: &ConeModel, x: &[u64]) -> Result<bool> {
    cone.contains(x)
}

pub fn is_in_interior(cone: &ConeModel, x: &[u64]) -> Result<bool> {
    cone.contains_interior(x)
}

/// Checks that the interior lattice points are exactly `(1, ..., 1)` plus the
/// lattice points of the cone, over the box `[0, bound]^(p-1)`.
pub fn interior_shift_check(p: u64, bound: u64) -> Result<Verdict> {
    let cone = build_cone(p)?;
    let mut verdict = Verdict::new();
    let dim = cone.dim();
    for x in (0..dim).map(|_| 0..=bound).multi_cartesian_product() {
        let interior = cone.contains_interior(&x)?;
        let shifted = x.iter().all(|&c| c >= 1) && {
            let y: Vec<u64> = x.iter().map(|c| c - 1).collect();
            cone.contains(&y)?
        };
        verdict.record(interior == shifted, || {
            format!("x = {x:?}: interior = {interior}, x - 1 in cone = {shifted}")
        });
    }
    Ok(verdict)
}

/// Primitive integer generators of the edges of `C*`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSet {
    pub p: u64,
    pub deltas: Vec<Vec<u64>>,
}

impl EdgeSet {
    pub fn len(&self) -> usize {
        self.deltas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deltas.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<u64>> {
        self.deltas.iter()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .deltas
            .iter()
            .map(|d| format!("({})", d.iter().join(",")))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Enumerates the edges of `C*` by an active-set search: every edge is the
/// one-dimensional kernel of some `p - 2` linearly independent facet normals,
/// oriented so that it satisfies every inequality.
pub fn edges_of_cone_star(p: u64) -> Result<EdgeSet> {
    if p < 3 {
        return Err(Error::InvalidP(p));
    }
    if p > EDGE_SEARCH_MAX_P {
        return Err(Error::UnsupportedP { p, max: EDGE_SEARCH_MAX_P });
    }
    let cone = build_cone(p)?;
    let dim = cone.dim();
    let normals: Vec<Vec<BigRational>> = cone
        .inequalities()
        .iter()
        .map(|q| q.normal(dim).into_iter().map(rat).collect())
        .collect();

    let mut found = BTreeSet::new();
    for subset in normals.iter().combinations(dim - 1) {
        let rows: Vec<Vec<BigRational>> = subset.into_iter().cloned().collect();
        let basis = linalg::kernel(&rows, dim);
        if basis.len() != 1 {
            continue;
        }
        let ray = linalg::primitive(&basis[0]);
        for candidate in [ray.clone(), ray.iter().map(|c| -c).collect()] {
            if cone.star_contains(&candidate) {
                found.insert(candidate.iter().map(|&c| c as u64).collect::<Vec<u64>>());
            }
        }
    }
    Ok(EdgeSet { p, deltas: found.into_iter().collect() })
}

/// Rank of the facet normals active at `x` in `C*`; equals `p - 2` on an edge.
pub fn star_active_rank(cone: &ConeModel, x: &[i64]) -> usize {
    let dim = cone.dim();
    let rows: Vec<Vec<BigRational>> = cone
        .inequalities()
        .iter()
        .filter(|q| x[q.i - 1] + x[q.j - 1] - x[q.k - 1] == 0)
        .map(|q| q.normal(dim).into_iter().map(rat).collect())
        .collect();
    linalg::rank(&rows)
}

/// `X_a + X_b = X_c + offset` (1-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocusEquation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub offset: i64,
}

impl LocusEquation {
    pub fn holds(&self, x: &[u64]) -> bool {
        x[self.a - 1] as i64 + x[self.b - 1] as i64 == x[self.c - 1] as i64 + self.offset
    }
}

impl fmt::Display for LocusEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a == self.b {
            write!(f, "2X{} = X{}", self.a, self.c)?;
        } else {
            write!(f, "X{} + X{} = X{}", self.a, self.b, self.c)?;
        }
        match self.offset.signum() {
            1 => write!(f, " + {}", self.offset),
            -1 => write!(f, " - {}", -self.offset),
            _ => Ok(()),
        }
    }
}

/// Affine subspace attached to a permutation whose lattice points in the
/// cone (other than the origin) are the pseudo-symmetric semigroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaLocus {
    /// `sigma[k - 1] = sigma(k)` for `k = 1, ..., p - 1`.
    pub sigma: Vec<usize>,
    pub equations: Vec<LocusEquation>,
}

impl SigmaLocus {
    pub fn dim(&self) -> usize {
        self.sigma.len()
    }
}

/// Builds the locus for `sigma` if it satisfies the defining congruences.
fn sigma_locus(p: usize, sigma: &[usize]) -> Option<SigmaLocus> {
    let s = |k: usize| sigma[k - 1];
    let top = s(p - 2);
    let mut equations = Vec::with_capacity(p - 2);
    for i in 1..=p - 3 {
        let (a, b) = (s(i), s(p - 2 - i));
        let offset = if a + b == top {
            0
        } else if a + b == top + p {
            -1
        } else {
            return None;
        };
        equations.push(LocusEquation { a, b, c: top, offset });
    }
    let last = s(p - 1);
    let offset = if 2 * last == top {
        1
    } else if 2 * last == top + p {
        0
    } else {
        return None;
    };
    equations.push(LocusEquation { a: last, b: last, c: top, offset });
    Some(SigmaLocus { sigma: sigma.to_vec(), equations })
}

/// All permutations of `{1, ..., p-1}` satisfying
/// `sigma(i) + sigma(p-2-i) = sigma(p-2) (mod p)` and
/// `2 sigma(p-1) = sigma(p-2) (mod p)`, in lexicographic order.
pub fn sigma_star_set(p: u64) -> Result<Vec<SigmaLocus>> {
    if p < 3 {
        return Err(Error::InvalidP(p));
    }
    let p = p as usize;
    Ok((1..p)
        .permutations(p - 1)
        .filter_map(|sigma| sigma_locus(p, &sigma))
        .collect())
}

pub fn in_sigma_locus(locus: &SigmaLocus, x: &[u64]) -> Result<bool> {
    if x.len() != locus.dim() {
        return Err(Error::DimensionMismatch { expected: locus.dim(), got: x.len() });
    }
    Ok(locus.equations.iter().all(|e| e.holds(x)))
}

/// True if `x` lies in `L_sigma` for some admissible `sigma`.
pub fn in_some_sigma_locus(loci: &[SigmaLocus], x: &[u64]) -> Result<bool> {
    for l in loci {
        if in_sigma_locus(l, x)? {
            return Ok(true);
        }
    }
    Ok(false)
}
