//! Pruned depth-first enumeration of lattice points of the Apery cone, in
//! genus slices and in the boxes cut out by "contains q".
//!
//! Coordinates are assigned in index order; each cone inequality is checked
//! as soon as the largest of its three indices is assigned. Results come out
//! in lexicographic order of `mu`. The search forest may be split on the
//! first coordinate across worker threads; counts and listings are
//! independent of the worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num::Integer;
use rayon::prelude::*;

use crate::cone::{build_cone, ConeModel, Inequality};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use crate::verify::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum ClassFilter {
    #[default]
    All,
    Sym,
    Psym,
    Medim,
}

impl ClassFilter {
    pub const ALL: [ClassFilter; 4] =
        [ClassFilter::All, ClassFilter::Sym, ClassFilter::Psym, ClassFilter::Medim];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassFilter::All => "all",
            ClassFilter::Sym => "sym",
            ClassFilter::Psym => "psym",
            ClassFilter::Medim => "medim",
        }
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassFilter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(ClassFilter::All),
            "sym" => Ok(ClassFilter::Sym),
            "psym" => Ok(ClassFilter::Psym),
            "medim" => Ok(ClassFilter::Medim),
            other => Err(format!("unknown class `{other}` (expected all, sym, psym or medim)")),
        }
    }
}

/// Labelled count sequence, e.g. `G(4,.)` over `g = 0..=8`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub label: String,
    pub p: u64,
    pub class_filter: ClassFilter,
    pub values: BTreeMap<u64, u64>,
}

impl CountTable {
    pub fn get(&self, index: u64) -> Option<u64> {
        self.values.get(&index).copied()
    }
}

fn genus_label(p: u64, filter: ClassFilter) -> String {
    match filter {
        ClassFilter::All => format!("G({p},g)"),
        ClassFilter::Sym => format!("Gsym({p},g)"),
        ClassFilter::Psym => format!("Gpsym({p},g)"),
        ClassFilter::Medim => format!("G0({p},g)"),
    }
}

fn containing_label(p: u64, filter: ClassFilter) -> String {
    match filter {
        ClassFilter::All => format!("N({p},q)"),
        ClassFilter::Sym => format!("Sym({p},q)"),
        ClassFilter::Psym => format!("Psym({p},q)"),
        ClassFilter::Medim => format!("Medim({p},q)"),
    }
}

/// Per-coordinate upper bounds for semigroups containing `p` and `q`:
/// `mu_j` is at most the Apery coordinate of `<p, q>` itself.
pub fn containing_bounds(p: u64, q: u64) -> Result<Vec<u64>> {
    if p < 3 {
        return Err(Error::InvalidP(p));
    }
    if q == 0 || p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let mut bounds = vec![0; p as usize - 1];
    for k in 1..p {
        let h = k * q;
        let j = h % p;
        bounds[j as usize - 1] = (h - j) / p;
    }
    Ok(bounds)
}

enum Region<'a> {
    Genus(u64),
    Box(&'a [u64]),
}

struct Search {
    p: u64,
    cone: ConeModel,
    /// `checks[d]`: inequalities whose largest index is `d + 1`.
    checks: Vec<Vec<Inequality>>,
}

impl Search {
    fn new(p: u64) -> Result<Self> {
        let cone = build_cone(p)?;
        let mut checks = vec![Vec::new(); cone.dim()];
        for q in cone.inequalities() {
            checks[q.i.max(q.j).max(q.k) - 1].push(*q);
        }
        Ok(Search { p, cone, checks })
    }

    fn dim(&self) -> usize {
        self.cone.dim()
    }

    fn first_range(&self, region: &Region) -> RangeInclusive<u64> {
        match region {
            Region::Genus(g) => 0..=*g,
            Region::Box(b) => 0..=b[0],
        }
    }

    fn ok_at(&self, mu: &[u64], depth: usize) -> bool {
        self.checks[depth].iter().all(|q| q.slack(mu) >= 0)
    }

    /// Visits every cone point of the region whose first coordinate is `first`.
    fn subtree(&self, region: &Region, first: u64, visit: &mut dyn FnMut(&[u64])) {
        let mut mu = vec![0; self.dim()];
        mu[0] = first;
        match region {
            Region::Genus(g) => self.genus_dfs(&mut mu, 1, *g - first, visit),
            Region::Box(b) => self.box_dfs(&mut mu, 1, b, visit),
        }
    }

    fn genus_dfs(&self, mu: &mut [u64], depth: usize, remaining: u64, visit: &mut dyn FnMut(&[u64])) {
        if depth == self.dim() - 1 {
            mu[depth] = remaining;
            if self.ok_at(mu, depth) {
                visit(mu);
            }
            return;
        }
        for v in 0..=remaining {
            mu[depth] = v;
            if self.ok_at(mu, depth) {
                self.genus_dfs(mu, depth + 1, remaining - v, visit);
            }
        }
    }

    fn box_dfs(&self, mu: &mut [u64], depth: usize, bounds: &[u64], visit: &mut dyn FnMut(&[u64])) {
        if depth == self.dim() {
            visit(mu);
            return;
        }
        for v in 0..=bounds[depth] {
            mu[depth] = v;
            if self.ok_at(mu, depth) {
                self.box_dfs(mu, depth + 1, bounds, visit);
            }
        }
    }

    fn accepts(&self, mu: &[u64], filter: ClassFilter) -> bool {
        let genus = || mu.iter().sum::<u64>() as i64;
        let frobenius = || {
            mu.iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(i, &m)| (i as u64 + 1 + m * self.p - self.p) as i64)
                .max()
                .unwrap_or(-1)
        };
        match filter {
            ClassFilter::All => true,
            ClassFilter::Sym => 2 * genus() == frobenius() + 1,
            ClassFilter::Psym => 2 * genus() == frobenius() + 2,
            ClassFilter::Medim => self.cone.inequalities().iter().all(|q| q.slack(mu) > 0),
        }
    }
}

/// Enumeration front end; `workers > 1` splits the search across a thread pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    workers: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator { workers: 1 }
    }
}

impl Enumerator {
    pub fn with_workers(workers: usize) -> Self {
        Enumerator { workers: workers.max(1) }
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    fn run<T: Send>(&self, firsts: RangeInclusive<u64>, job: impl Fn(u64) -> T + Sync) -> Vec<T> {
        if self.workers == 1 {
            return firsts.map(job).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .expect("thread pool");
        let firsts: Vec<u64> = firsts.collect();
        pool.install(|| firsts.par_iter().map(|&f| job(f)).collect())
    }

    fn count(&self, p: u64, region: Region, filter: ClassFilter) -> Result<u64> {
        let search = Search::new(p)?;
        let parts = self.run(search.first_range(&region), |first| {
            let mut n = 0u64;
            search.subtree(&region, first, &mut |mu| {
                if search.accepts(mu, filter) {
                    n += 1;
                }
            });
            n
        });
        Ok(parts.into_iter().sum())
    }

    fn list(&self, p: u64, region: Region, filter: ClassFilter) -> Result<Vec<Semigroup>> {
        let search = Search::new(p)?;
        let parts = self.run(search.first_range(&region), |first| {
            let mut out = Vec::new();
            search.subtree(&region, first, &mut |mu| {
                if search.accepts(mu, filter) {
                    out.push(mu.to_vec());
                }
            });
            out
        });
        parts
            .into_iter()
            .flatten()
            .map(|mu| Semigroup::from_mu(p, mu))
            .collect()
    }

    pub fn enumerate_by_genus(&self, p: u64, g: u64, filter: ClassFilter) -> Result<Vec<Semigroup>> {
        self.list(p, Region::Genus(g), filter)
    }

    pub fn count_by_genus(&self, p: u64, g: u64, filter: ClassFilter) -> Result<u64> {
        self.count(p, Region::Genus(g), filter)
    }

    /// `H(p, g)`: semigroups containing `p` of genus at most `g`.
    pub fn cumulative_by_genus(&self, p: u64, g: u64) -> Result<u64> {
        (0..=g).map(|j| self.count_by_genus(p, j, ClassFilter::All)).sum()
    }

    pub fn enumerate_containing(&self, p: u64, q: u64, filter: ClassFilter) -> Result<Vec<Semigroup>> {
        let bounds = containing_bounds(p, q)?;
        self.list(p, Region::Box(&bounds), filter)
    }

    /// `N`, `Sym`, `Psym` or `Medim` of `(p, q)` depending on `filter`.
    pub fn count_containing(&self, p: u64, q: u64, filter: ClassFilter) -> Result<u64> {
        let bounds = containing_bounds(p, q)?;
        self.count(p, Region::Box(&bounds), filter)
    }

    pub fn genus_table(&self, p: u64, genera: RangeInclusive<u64>, filter: ClassFilter) -> Result<CountTable> {
        let values = genera
            .map(|g| Ok((g, self.count_by_genus(p, g, filter)?)))
            .collect::<Result<_>>()?;
        Ok(CountTable { label: genus_label(p, filter), p, class_filter: filter, values })
    }

    /// Counts over every `q` in `qs` coprime to `p`; other `q` are skipped.
    pub fn containing_table(
        &self,
        p: u64,
        qs: impl IntoIterator<Item = u64>,
        filter: ClassFilter,
    ) -> Result<CountTable> {
        let values = qs
            .into_iter()
            .filter(|q| *q > 0 && q.gcd(&p) == 1)
            .map(|q| Ok((q, self.count_containing(p, q, filter)?)))
            .collect::<Result<_>>()?;
        Ok(CountTable { label: containing_label(p, filter), p, class_filter: filter, values })
    }
}

pub fn enumerate_by_genus(p: u64, g: u64, filter: ClassFilter) -> Result<Vec<Semigroup>> {
    Enumerator::default().enumerate_by_genus(p, g, filter)
}

pub fn count_by_genus(p: u64, g: u64, filter: ClassFilter) -> Result<u64> {
    Enumerator::default().count_by_genus(p, g, filter)
}

pub fn cumulative_by_genus(p: u64, g: u64) -> Result<u64> {
    Enumerator::default().cumulative_by_genus(p, g)
}

pub fn count_containing(p: u64, q: u64, filter: ClassFilter) -> Result<u64> {
    Enumerator::default().count_containing(p, q, filter)
}

pub fn enumerate_containing(p: u64, q: u64, filter: ClassFilter) -> Result<Vec<Semigroup>> {
    Enumerator::default().enumerate_containing(p, q, filter)
}

/// Calls `visit` on every lattice point of the cone inside the box
/// `0 <= x_j <= bounds[j]`, in lexicographic order.
pub fn for_each_in_box(p: u64, bounds: &[u64], mut visit: impl FnMut(&[u64])) -> Result<()> {
    let search = Search::new(p)?;
    if bounds.len() != search.dim() {
        return Err(Error::DimensionMismatch { expected: search.dim(), got: bounds.len() });
    }
    let region = Region::Box(bounds);
    for first in search.first_range(&region) {
        search.subtree(&region, first, &mut visit);
    }
    Ok(())
}

/// `G0(p, g) = G(p, g - (p - 1))` for `p - 1 <= g <= g_max`.
pub fn verify_interior_identity(p: u64, g_max: u64) -> Result<Verdict> {
    let mut verdict = Verdict::new();
    for g in p - 1..=g_max {
        let interior = count_by_genus(p, g, ClassFilter::Medim)?;
        let shifted = count_by_genus(p, g - (p - 1), ClassFilter::All)?;
        verdict.record(interior == shifted, || {
            format!("G0({p},{g}) = {interior} but G({p},{}) = {shifted}", g - (p - 1))
        });
    }
    Ok(verdict)
}

/// `Medim(p, q) = N(p, q - p)` for every `p < q <= q_max` coprime to `p`.
pub fn verify_medim_identity(p: u64, q_max: u64) -> Result<Verdict> {
    let mut verdict = Verdict::new();
    for q in (p + 1..=q_max).filter(|q| q.gcd(&p) == 1) {
        let medim = count_containing(p, q, ClassFilter::Medim)?;
        let prev = count_containing(p, q - p, ClassFilter::All)?;
        verdict.record(medim == prev, || {
            format!("Medim({p},{q}) = {medim} but N({p},{}) = {prev}", q - p)
        });
    }
    Ok(verdict)
}
