//! Quasi-polynomials with rational coefficients: exact fitting from count
//! sequences, the shift/difference/sum operators, and period prediction from
//! the edges of the homogeneous cone.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::cone::edges_of_cone_star;
use crate::error::{Error, Result};

/// Degree cap for [`fit_auto`].
pub const MAX_AUTO_DEGREE: usize = 6;

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Renders `a/b`, or `a` for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense polynomial, coefficients from the constant term up, with no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `x -> f(x + c)`.
    pub fn translate(&self, c: &BigRational) -> Self {
        let linear = Polynomial::new(vec![c.clone(), BigRational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, a| &(&acc * &linear) + &Polynomial::constant(a.clone()))
    }

    /// The unique polynomial of degree `< points.len()` through `points`.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Self {
        let mut out = Polynomial::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Polynomial::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    let factor = Polynomial::new(vec![-xj.clone(), BigRational::one()]);
                    basis = (&basis * &factor).scale(&(xi - xj).recip());
                }
            }
            out = &out + &basis;
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &-rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let mag = format_rational(&a);
            match (k, a.is_one()) {
                (0, _) => f.write_str(&mag)?,
                (_, true) => {}
                _ => write!(f, "{mag} ")?,
            }
            match k {
                0 => {}
                1 => f.write_str("n")?,
                _ => write!(f, "n^{k}")?,
            }
        }
        Ok(())
    }
}

/// `f(n) = f_{n mod N}(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiPolynomial {
    constituents: Vec<Polynomial>,
}

impl QuasiPolynomial {
    /// One constituent per residue class; the period is their count.
    pub fn new(constituents: Vec<Polynomial>) -> Self {
        assert!(!constituents.is_empty(), "a quasi-polynomial needs at least one constituent");
        QuasiPolynomial { constituents }
    }

    pub fn polynomial(p: Polynomial) -> Self {
        Self::new(vec![p])
    }

    pub fn period(&self) -> usize {
        self.constituents.len()
    }

    pub fn constituents(&self) -> &[Polynomial] {
        &self.constituents
    }

    pub fn constituent(&self, residue: usize) -> &Polynomial {
        &self.constituents[residue % self.period()]
    }

    /// `None` for the zero quasi-polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.constituents.iter().filter_map(Polynomial::degree).max()
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn evaluate(&self, n: u64) -> BigRational {
        self.constituent((n % self.period() as u64) as usize).evaluate(&rational(n as i64))
    }

    pub fn values(&self, len: usize) -> Vec<BigRational> {
        (0..len as u64).map(|n| self.evaluate(n)).collect()
    }

    /// `E f (n) = f(n + 1)`.
    pub fn shift(&self) -> Self {
        let one = BigRational::one();
        Self::new((0..self.period()).map(|i| self.constituent(i + 1).translate(&one)).collect())
    }

    /// `Δ f (n) = f(n + 1) - f(n)`.
    pub fn difference(&self) -> Self {
        let shifted = self.shift();
        Self::new(
            (0..self.period())
                .map(|i| shifted.constituent(i) - self.constituent(i))
                .collect(),
        )
    }

    /// `Σ f (n) = f(0) + ... + f(n)`, of the same period and one degree
    /// higher. Each constituent of the sum is a polynomial, so it is fitted
    /// exactly from enough cumulative values.
    pub fn partial_sum(&self) -> Self {
        let d = self.degree().map_or(0, |d| d + 1);
        let n = self.period();
        let len = n * (d + 2);
        let mut total = BigRational::zero();
        let sums: Vec<BigRational> = (0..len as u64)
            .map(|k| {
                total += self.evaluate(k);
                total.clone()
            })
            .collect();
        Self::new((0..n).map(|r| interpolate_class(&sums, n, r, d + 1)).collect())
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.period();
        for (i, c) in self.constituents.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "n = {i} mod {n}: {c}")?;
        }
        Ok(())
    }
}

fn interpolate_class(values: &[BigRational], period: usize, residue: usize, points: usize) -> Polynomial {
    let pts: Vec<(BigRational, BigRational)> = (residue..values.len())
        .step_by(period)
        .take(points)
        .map(|n| (rational(n as i64), values[n].clone()))
        .collect();
    Polynomial::interpolate(&pts)
}

/// Interpolates each residue class mod `period` on its first `degree + 1`
/// samples and checks every remaining sample exactly.
pub fn fit(values: &[BigRational], period: usize, degree: usize) -> Result<QuasiPolynomial> {
    assert!(period > 0, "period must be positive");
    let need = degree + 2;
    for residue in 0..period {
        let got = values.len().saturating_sub(residue).div_ceil(period);
        if got < need {
            return Err(Error::InsufficientSamples { residue, got, need });
        }
    }
    let qp = QuasiPolynomial::new(
        (0..period)
            .map(|r| interpolate_class(values, period, r, degree + 1))
            .collect(),
    );
    for (n, actual) in values.iter().enumerate() {
        let predicted = qp.evaluate(n as u64);
        if &predicted != actual {
            return Err(Error::VerificationMismatch {
                n,
                actual: format_rational(actual),
                predicted: format_rational(&predicted),
            });
        }
    }
    Ok(qp)
}

pub fn fit_counts(values: &[u64], period: usize, degree: usize) -> Result<QuasiPolynomial> {
    fit(&to_rationals(values), period, degree)
}

pub fn to_rationals(values: &[u64]) -> Vec<BigRational> {
    values.iter().map(|&v| BigRational::from_integer(v.into())).collect()
}

/// Smallest period up to `max_period` (and, for it, the smallest degree up
/// to [`MAX_AUTO_DEGREE`]) that fits. A fixed `period` skips the search over
/// periods; likewise a fixed `degree`.
pub fn fit_auto(
    values: &[BigRational],
    period: Option<usize>,
    degree: Option<usize>,
    max_period: usize,
) -> Result<QuasiPolynomial> {
    let periods: Vec<usize> = period.map_or_else(|| (1..=max_period).collect(), |n| vec![n]);
    let degrees: Vec<usize> = degree.map_or_else(|| (0..=MAX_AUTO_DEGREE).collect(), |d| vec![d]);
    for &n in &periods {
        for &d in &degrees {
            if let Ok(qp) = fit(values, n, d) {
                return Ok(qp);
            }
        }
    }
    Err(Error::NoFit {
        max_period: periods.last().copied().unwrap_or(0),
        max_degree: degrees.last().copied().unwrap_or(0),
    })
}

/// Values `f(i + n p)` for `n = 0..count`, the natural index for counts
/// like `N(p, q)` restricted to one residue class of `q`.
pub fn residue_sequence(
    p: u64,
    residue: u64,
    count: usize,
    f: impl Fn(u64) -> Result<u64>,
) -> Result<Vec<BigRational>> {
    (0..count as u64)
        .map(|n| f(residue + n * p).map(|v| BigRational::from_integer(v.into())))
        .collect()
}

/// Degree-`d` coefficient of every constituent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingReport {
    pub degree: usize,
    pub coefficients: Vec<BigRational>,
}

impl LeadingReport {
    pub fn is_constant(&self) -> bool {
        self.coefficients.windows(2).all(|w| w[0] == w[1])
    }

    /// The common value, if constant.
    pub fn common(&self) -> Option<&BigRational> {
        self.is_constant().then(|| &self.coefficients[0])
    }
}

pub fn leading_coefficient_report(qp: &QuasiPolynomial) -> LeadingReport {
    let degree = qp.degree().unwrap_or(0);
    LeadingReport {
        degree,
        coefficients: qp.constituents().iter().map(|c| c.coeff(degree)).collect(),
    }
}

/// Primitive non-negative counting direction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaForm {
    alpha: Vec<u64>,
}

impl AlphaForm {
    pub fn new(alpha: Vec<u64>) -> Result<Self> {
        let g = alpha.iter().fold(0u64, |g, &a| g.gcd(&a));
        if g != 1 {
            return Err(Error::InvalidAlpha(alpha));
        }
        Ok(AlphaForm { alpha })
    }

    /// `(1, ..., 1)`, which counts by genus.
    pub fn ones(p: u64) -> Self {
        AlphaForm { alpha: vec![1; p as usize - 1] }
    }

    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    pub fn dot(&self, x: &[u64]) -> u64 {
        self.alpha.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// Least common multiple of `alpha . delta` over the edges `delta` of the
/// homogeneous cone. Rejects directions orthogonal to an edge.
pub fn predict_quasi_period(p: u64, alpha: &AlphaForm) -> Result<u64> {
    let edges = edges_of_cone_star(p)?;
    let dim = p as usize - 1;
    if alpha.alpha.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: alpha.alpha.len() });
    }
    let mut period = 1u64;
    for edge in edges.iter() {
        let d = alpha.dot(edge);
        if d == 0 {
            return Err(Error::EdgeInHyperplane { alpha: alpha.alpha.clone(), edge: edge.clone() });
        }
        period = period.lcm(&d);
    }
    Ok(period)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticRow {
    pub q: u64,
    pub value: u64,
    /// `|value / q^e - limit|`.
    pub deviation: BigRational,
    /// `C / q`.
    pub bound: BigRational,
}

impl AsymptoticRow {
    pub fn holds(&self) -> bool {
        self.deviation <= self.bound
    }

    /// `deviation * q`, to compare against `C` directly.
    pub fn scaled(&self) -> BigRational {
        &self.deviation * rational(self.q as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticReport {
    pub exponent: u32,
    pub limit: BigRational,
    pub constant: BigRational,
    pub rows: Vec<AsymptoticRow>,
}

impl AsymptoticReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(AsymptoticRow::holds)
    }

    pub fn last(&self) -> Option<&AsymptoticRow> {
        self.rows.last()
    }

    /// Largest `deviation * q` over all rows.
    pub fn worst(&self) -> Option<&AsymptoticRow> {
        self.rows.iter().max_by(|a, b| a.scaled().cmp(&b.scaled()))
    }
}

/// Checks `|f(q) / q^exponent - limit| <= constant / q` for every `q`.
pub fn asymptotic_ratio_check(
    counter: impl Fn(u64) -> Result<u64>,
    exponent: u32,
    limit: &BigRational,
    constant: &BigRational,
    qs: impl IntoIterator<Item = u64>,
) -> Result<AsymptoticReport> {
    let rows = qs
        .into_iter()
        .map(|q| {
            let value = counter(q)?;
            let qr = rational(q as i64);
            let ratio = BigRational::from_integer(value.into()) / num::pow(qr.clone(), exponent as usize);
            Ok(AsymptoticRow { q, value, deviation: (ratio - limit).abs(), bound: constant / qr })
        })
        .collect::<Result<_>>()?;
    Ok(AsymptoticReport { exponent, limit: limit.clone(), constant: constant.clone(), rows })
}
