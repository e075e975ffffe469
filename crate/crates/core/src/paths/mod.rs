//! Lattice paths of the `(p, q)`-system.
//!
//! The gaps of `<p, q>` are in bijection with the integer points `(a, b)` of
//! the triangle `p(X+1) + q(Y+1) < pq`, via `gamma = pq - (a+1)p - (b+1)q`. A
//! semigroup containing `p` and `q` closes a down-closed set `L` of those
//! points, bounded by a staircase path from the `Y`-axis to the `X`-axis.
//!
//! Paths are stored by their row widths: `rows[b]` is the number of points of
//! `L` on the line `Y = b`. Row widths are non-increasing in `b`.

pub mod closed_form;
pub mod recursion;

use std::fmt;

use num::Integer;

use crate::enumeration::{count_containing, ClassFilter};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// A coprime pair, ordered so that `p < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathSystem {
    p: u64,
    q: u64,
}

impl PathSystem {
    /// Swaps the arguments if needed so that the smaller one plays `p`.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 || p.gcd(&q) != 1 {
            return Err(Error::NotCoprime(p, q));
        }
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        Ok(PathSystem { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of rows `Y = 0, ..., p - 2` that meet the triangle.
    pub fn row_count(&self) -> usize {
        self.p.saturating_sub(1) as usize
    }

    /// Number of triangle points on row `b`.
    pub fn row_capacity(&self, b: usize) -> u64 {
        let b = b as u64;
        if b + 1 >= self.p {
            return 0;
        }
        (self.q * (self.p - b - 1) - 1) / self.p
    }

    pub fn contains_point(&self, a: u64, b: u64) -> bool {
        (b as usize) < self.row_count() && a < self.row_capacity(b as usize)
    }

    /// Every point of the triangle, row by row.
    pub fn points(&self) -> Vec<(u64, u64)> {
        (0..self.row_count())
            .flat_map(|b| (0..self.row_capacity(b)).map(move |a| (a, b as u64)))
            .collect()
    }

    pub fn gap_of_point(&self, a: u64, b: u64) -> Result<u64> {
        if !self.contains_point(a, b) {
            return Err(Error::PointOutsideTriangle(a, b));
        }
        Ok(self.p * self.q - (a + 1) * self.p - (b + 1) * self.q)
    }

    pub fn point_of_gap(&self, gap: u64) -> Result<(u64, u64)> {
        let not_a_gap = Error::NotAGap(gap, self.p, self.q);
        let pq = self.p * self.q;
        if gap == 0 || gap >= pq {
            return Err(not_a_gap);
        }
        let Some(b1) = (1..self.p).find(|&b1| (b1 * self.q + gap).is_multiple_of(self.p)) else {
            return Err(not_a_gap);
        };
        let rest = pq.checked_sub(gap + b1 * self.q).ok_or(not_a_gap.clone())?;
        if rest < self.p {
            return Err(not_a_gap);
        }
        Ok((rest / self.p - 1, b1 - 1))
    }

    /// Membership in `<p, q>`.
    pub fn in_numerical_semigroup(&self, n: u64) -> bool {
        (0..self.p).any(|k| k * self.q <= n && (n - k * self.q).is_multiple_of(self.p))
    }

    /// `p` unless it is below 3, in which case `q`.
    fn anchor(&self) -> Result<u64> {
        if self.p >= 3 {
            Ok(self.p)
        } else if self.q >= 3 {
            Ok(self.q)
        } else {
            Err(Error::InvalidP(self.q))
        }
    }
}

/// Staircase path, stored as the row widths of the enclosed point set `L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticePath {
    rows: Vec<u64>,
}

impl LatticePath {
    /// The empty path, belonging to `<p, q>` itself.
    pub fn empty() -> Self {
        LatticePath { rows: Vec::new() }
    }

    pub fn from_rows(sys: &PathSystem, rows: &[u64]) -> Result<Self> {
        let mut rows = rows.to_vec();
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.len() > sys.row_count() {
            return Err(Error::InvalidPath(format!("{} rows exceed the triangle", rows.len())));
        }
        for (b, &w) in rows.iter().enumerate() {
            if w > sys.row_capacity(b) {
                return Err(Error::InvalidPath(format!("row {b} leaves the triangle")));
            }
            if b > 0 && w > rows[b - 1] {
                return Err(Error::InvalidPath(format!("row {b} is wider than row {}", b - 1)));
            }
        }
        Ok(LatticePath { rows })
    }

    /// Rebuilds a path from its corner sequence `(P_0, ..., P_m)`.
    pub fn from_corners(sys: &PathSystem, corners: &[(u64, u64)]) -> Result<Self> {
        let Some(&(a0, top)) = corners.first() else {
            return Ok(Self::empty());
        };
        let bad = |msg: &str| Err(Error::InvalidPath(msg.to_string()));
        if a0 != 0 {
            return bad("path must start on the Y-axis");
        }
        if corners.last().map(|c| c.1) != Some(0) {
            return bad("path must end on the X-axis");
        }
        for w in corners.windows(2) {
            if w[1].0 < w[0].0 || w[1].1 > w[0].1 || w[1] == w[0] {
                return bad("corners must move right and down");
            }
        }
        let rows: Vec<u64> = (0..=top)
            .map(|b| {
                let last = corners.iter().rposition(|c| c.1 >= b).expect("top corner covers");
                corners[last].0 + 1
            })
            .collect();
        Self::from_rows(sys, &rows)
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row of the starting point `(0, b)`, if the path is non-empty.
    pub fn top_row(&self) -> Option<u64> {
        self.rows.len().checked_sub(1).map(|b| b as u64)
    }

    fn width(&self, b: usize) -> u64 {
        self.rows.get(b).copied().unwrap_or(0)
    }

    pub fn contains(&self, a: u64, b: u64) -> bool {
        a < self.width(b as usize)
    }

    /// The enclosed point set `L`.
    pub fn points(&self) -> Vec<(u64, u64)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(b, &w)| (0..w).map(move |a| (a, b as u64)))
            .collect()
    }

    /// `(P_0, ..., P_m)`: start on the `Y`-axis, every point where a right
    /// step is followed by a down step, end on the `X`-axis.
    pub fn corners(&self) -> Vec<(u64, u64)> {
        let Some(top) = self.top_row() else {
            return Vec::new();
        };
        let mut out = vec![(0, top)];
        for b in (1..=top as usize).rev() {
            let end = self.rows[b] - 1;
            let reached_by_right_step = end > 0 && self.rows[b] > self.width(b + 1);
            if reached_by_right_step {
                out.push((end, b as u64));
            }
        }
        let last = (self.rows[0] - 1, 0);
        if out.last() != Some(&last) {
            out.push(last);
        }
        out
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.corners().iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Closure conditions on `L`, checked over all pairs of points:
///
/// a) `a + a' >= q - 1` requires `(a + a' - q + 1, b + b' + 1)` in `L`;
/// b) `b + b' >= p - 1` requires `(a + a' + 1, b + b' - p + 1)` in `L`.
pub fn is_admissible(sys: &PathSystem, path: &LatticePath) -> bool {
    let pts = path.points();
    let (p, q) = (sys.p, sys.q);
    for (idx, &(a, b)) in pts.iter().enumerate() {
        for &(a2, b2) in &pts[idx..] {
            if a + a2 + 1 >= q && !path.contains(a + a2 + 1 - q, b + b2 + 1) {
                return false;
            }
            if b + b2 + 1 >= p && !path.contains(a + a2 + 1, b + b2 + 1 - p) {
                return false;
            }
        }
    }
    true
}

/// Row-level form of the closure conditions. Within a pair of rows the
/// rightmost points are the hardest case, so only those are tested. Returns
/// `None` while the target row is still unassigned.
fn row_pair_ok(sys: &PathSystem, rows: &[u64], b: usize, b2: usize) -> Option<bool> {
    let (p, q) = (sys.p as usize, sys.q);
    let (w, w2) = (rows[b], rows[b2]);
    if w == 0 || w2 == 0 {
        return Some(true);
    }
    let reach = w + w2 - 2;
    if reach + 1 >= q {
        let t = b + b2 + 1;
        if t + 1 >= p {
            return Some(false);
        }
        let wt = *rows.get(t)?;
        if wt < reach + 2 - q {
            return Some(false);
        }
    }
    if b + b2 + 1 >= p {
        let t = b + b2 + 1 - p;
        if rows[t] < reach + 2 {
            return Some(false);
        }
    }
    Some(true)
}

/// Visits the row vectors of every admissible path (including the empty
/// one), pruning as soon as a closure condition fails.
pub fn for_each_admissible(sys: &PathSystem, mut visit: impl FnMut(&[u64])) {
    let n = sys.row_count();
    let mut rows = Vec::with_capacity(n);
    if n == 0 {
        visit(&rows);
        return;
    }
    dfs(sys, &mut rows, u64::MAX, &mut visit);
}

fn dfs(sys: &PathSystem, rows: &mut Vec<u64>, prev: u64, visit: &mut dyn FnMut(&[u64])) {
    let k = rows.len();
    if k == sys.row_count() {
        visit(rows);
        return;
    }
    let cap = sys.row_capacity(k).min(prev);
    for w in 0..=cap {
        rows.push(w);
        let ok = (0..=k).all(|b2| {
            (0..=b2).all(|b| {
                let involves_k = b2 == k || b + b2 + 1 == k;
                !involves_k || row_pair_ok(sys, rows, b, b2).unwrap_or(true)
            })
        });
        if ok {
            dfs(sys, rows, w, visit);
        }
        rows.pop();
    }
}

/// `L(p, q)`: number of non-empty admissible paths.
pub fn count_admissible(sys: &PathSystem) -> u64 {
    let mut n = 0;
    for_each_admissible(sys, |rows| {
        if rows.iter().any(|&w| w > 0) {
            n += 1;
        }
    });
    n
}

/// Every admissible path, the empty one first.
pub fn admissible_paths(sys: &PathSystem) -> Vec<LatticePath> {
    let mut out = Vec::new();
    for_each_admissible(sys, |rows| {
        out.push(LatticePath::from_rows(sys, rows).expect("search stays in the triangle"));
    });
    out.sort();
    out
}

/// Path enclosing the gaps of `<p, q>` that `s` closes.
pub fn path_from_semigroup(sys: &PathSystem, s: &Semigroup) -> Result<LatticePath> {
    if !s.contains(sys.p) || !s.contains(sys.q) {
        return Err(Error::NotContainingQ(sys.p, sys.q));
    }
    let rows: Vec<u64> = (0..sys.row_count())
        .map(|b| {
            (0..sys.row_capacity(b))
                .filter(|&a| s.contains(sys.p * sys.q - (a + 1) * sys.p - (b as u64 + 1) * sys.q))
                .count() as u64
        })
        .collect();
    LatticePath::from_rows(sys, &rows)
}

/// Semigroup `<p, q>` together with the gaps enclosed by `path`, anchored at
/// `p` (or at `q` when `p < 3`).
pub fn semigroup_from_path(sys: &PathSystem, path: &LatticePath) -> Result<Semigroup> {
    if !is_admissible(sys, path) {
        return Err(Error::NotAdmissible);
    }
    let anchor = sys.anchor()?;
    let closed: std::collections::BTreeSet<u64> = path
        .points()
        .into_iter()
        .map(|(a, b)| sys.gap_of_point(a, b))
        .collect::<Result<_>>()?;
    let member = |n: u64| sys.in_numerical_semigroup(n) || closed.contains(&n);
    let apery: Vec<u64> = (1..anchor)
        .map(|r| {
            (0..)
                .map(|k| r + k * anchor)
                .find(|&n| member(n))
                .expect("every residue meets <p, q>")
        })
        .collect();
    Semigroup::from_apery(anchor, &apery)
}

/// Admissible paths split by their starting row: those starting at
/// `(0, b)` with `b <= p - 3`, classified by symmetry, and those starting at
/// `(0, p - 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StartCounts {
    pub low: u64,
    pub low_symmetric: u64,
    pub low_pseudo_symmetric: u64,
    pub top: u64,
}

pub fn start_counts(sys: &PathSystem) -> Result<StartCounts> {
    let mut counts = StartCounts::default();
    let top_row = sys.row_count() as u64 - 1;
    for path in admissible_paths(sys) {
        match path.top_row() {
            None => {}
            Some(b) if b == top_row => counts.top += 1,
            Some(_) => {
                counts.low += 1;
                let s = semigroup_from_path(sys, &path)?;
                counts.low_symmetric += s.is_symmetric() as u64;
                counts.low_pseudo_symmetric += s.is_pseudo_symmetric() as u64;
            }
        }
    }
    Ok(counts)
}

/// One value of `q` in [`verify_path_recursions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionRow {
    pub q: u64,
    pub paths: StartCounts,
    pub n: u64,
    pub n_prev: u64,
    pub sym: u64,
    pub sym_prev: u64,
    pub psym: u64,
    pub psym_prev: u64,
}

impl RecursionRow {
    /// `N(p,q) = N_pq + N(p,q-p) + 1`.
    pub fn n_holds(&self) -> bool {
        self.n == self.paths.low + self.n_prev + 1
    }

    /// `Sym(p,q) = S_pq + Sym(p,q-p) + 1`.
    pub fn sym_holds(&self) -> bool {
        self.sym == self.paths.low_symmetric + self.sym_prev + 1
    }

    /// `Psym(p,q) = P_pq + Psym(p,q-p)`.
    pub fn psym_holds(&self) -> bool {
        self.psym == self.paths.low_pseudo_symmetric + self.psym_prev
    }

    /// Paths starting on the top row correspond to `<p, q - p>`.
    pub fn top_holds(&self) -> bool {
        self.paths.top == self.n_prev
    }

    pub fn holds(&self) -> bool {
        self.n_holds() && self.sym_holds() && self.psym_holds() && self.top_holds()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionReport {
    pub p: u64,
    pub rows: Vec<RecursionRow>,
}

impl RecursionReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(RecursionRow::holds)
    }

    pub fn failures(&self) -> Vec<&RecursionRow> {
        self.rows.iter().filter(|r| !r.holds()).collect()
    }
}

/// Checks the three path recursions for every `p < q <= q_max` coprime to
/// `p`. Path counts come from the path search; `N`, `Sym` and `Psym` from
/// the cone enumeration.
pub fn verify_path_recursions(p: u64, q_max: u64) -> Result<RecursionReport> {
    if p < 3 {
        return Err(Error::InvalidP(p));
    }
    let mut rows = Vec::new();
    for q in (p + 1..=q_max).filter(|q| q.gcd(&p) == 1) {
        let sys = PathSystem::new(p, q)?;
        let c = |q, f| count_containing(p, q, f);
        rows.push(RecursionRow {
            q,
            paths: start_counts(&sys)?,
            n: c(q, ClassFilter::All)?,
            n_prev: c(q - p, ClassFilter::All)?,
            sym: c(q, ClassFilter::Sym)?,
            sym_prev: c(q - p, ClassFilter::Sym)?,
            psym: c(q, ClassFilter::Psym)?,
            psym_prev: c(q - p, ClassFilter::Psym)?,
        });
    }
    Ok(RecursionReport { p, rows })
}
