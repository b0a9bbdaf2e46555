//! Truncated power series in `q` with big-integer coefficients, and the
//! partition generating functions built from them.
//!
//! `(q)_∞` is represented by `(q)_N` at order `N`: every factor `1 - q^m`
//! with `m > N` is `1` modulo `q^(N+1)`, so dropping them changes nothing
//! that is kept.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::spt::{spt_total, SptParams};

/// Coefficients `c_0, ..., c_N` of a series known modulo `q^(N+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The series `c_0 + c_1 q + ...` at order `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition("a series needs at least one coefficient"));
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c q^e`, which is zero when `e` exceeds the order.
    pub fn monomial(c: i64, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = BigInt::from(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`; reading past the order is an error.
    pub fn coeff(&self, i: usize) -> Result<&BigInt> {
        self.coeffs.get(i).ok_or(Error::BeyondOrder {
            index: i,
            order: self.order(),
        })
    }

    /// The same series known to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        Self {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// Multiplies in place by `1 - q^m`.
    pub fn mul_one_minus_power(&mut self, m: usize) {
        if m == 0 {
            self.coeffs.iter_mut().for_each(|c| c.set_zero());
            return;
        }
        for i in (m..self.coeffs.len()).rev() {
            let prev = self.coeffs[i - m].clone();
            self.coeffs[i] -= prev;
        }
    }

    /// Multiplies in place by `1/(1 - q^m) = 1 + q^m + q^2m + ...`, `m >= 1`.
    pub fn div_one_minus_power(&mut self, m: usize) {
        assert!(m >= 1, "1/(1 - q^0) is not a power series");
        for i in m..self.coeffs.len() {
            let prev = self.coeffs[i - m].clone();
            self.coeffs[i] += prev;
        }
    }

    /// Multiplies by `q^e`, keeping the order.
    pub fn shift(&self, e: usize) -> Self {
        let mut s = Self::zero(self.order());
        for i in e..=self.order() {
            s.coeffs[i] = self.coeffs[i - e].clone();
        }
        s
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NotInvertible(c0.to_string()));
        }
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        out[0] = c0.clone();
        for i in 1..=n {
            let mut s = BigInt::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * &out[i - j];
                }
            }
            // c0 * out[i] = -s and c0 = ±1 is its own inverse
            out[i] = -(s * c0);
        }
        Ok(Self { coeffs: out })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag == BigInt::one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `(q)_n = (1-q)(1-q^2)...(1-q^n)` to order `order`; `(q)_0 = 1`.
pub fn pochhammer_q(n: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for m in 1..=n.min(order) {
        s.mul_one_minus_power(m);
    }
    s
}

/// `(q)_∞` to order `order`.
pub fn euler_product(order: usize) -> TruncatedSeries {
    pochhammer_q(order, order)
}

/// Multiplies by `1/(q)_∞` in place.
fn divide_by_euler_product(s: &mut TruncatedSeries) {
    for m in 1..=s.order() {
        s.div_one_minus_power(m);
    }
}

/// Coefficients `p(0), ..., p(order)` of `1/(q)_∞`.
pub fn gf_p_coefficients(order: usize) -> Result<Vec<BigInt>> {
    if order < 1 {
        return Err(Error::Precondition("generating function order must be at least 1"));
    }
    let mut s = TruncatedSeries::one(order);
    divide_by_euler_product(&mut s);
    Ok(s.into_coeffs())
}

/// The two smallest-parts generating functions with a known closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SptVariant {
    /// `(0,1)`: `(1/(q)_∞) Σ q^n (q)_{n-1} / (1 - q^n)`.
    ZeroOne,
    /// `(1,1)`: the same sum with each term weighted by `n`.
    OneOne,
}

impl SptVariant {
    pub fn params(self) -> SptParams {
        match self {
            Self::ZeroOne => SptParams::new(0, 1),
            Self::OneOne => SptParams::new(1, 1),
        }
    }
}

impl FromStr for SptVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim_matches(|c| c == '(' || c == ')').replace(' ', "").as_str() {
            "0,1" => Ok(Self::ZeroOne),
            "1,1" => Ok(Self::OneOne),
            _ => Err(Error::UnknownForm(s.to_string())),
        }
    }
}

/// Coefficients `0..=order` of the generating function of `variant`.
pub fn gf_spt(variant: SptVariant, order: usize) -> Result<Vec<BigInt>> {
    if order < 1 {
        return Err(Error::Precondition("generating function order must be at least 1"));
    }
    let weighted = variant == SptVariant::OneOne;
    let mut sum = TruncatedSeries::zero(order);
    // (q)_{n-1}, advanced one factor per step
    let mut poch = TruncatedSeries::one(order);
    for n in 1..=order {
        if n > 1 {
            poch.mul_one_minus_power(n - 1);
        }
        let mut term = poch.shift(n);
        term.div_one_minus_power(n);
        if weighted {
            term = term.scale(&BigInt::from(n));
        }
        sum = &sum + &term;
    }
    divide_by_euler_product(&mut sum);
    Ok(sum.into_coeffs())
}

/// `(1/(q)_∞) Σ_{n≥1} n^a (q^n (q)_{n-1} / (1 - q^n))^b` to order `order`.
pub fn conjectured_series(a: u32, b: u32, order: usize) -> Result<Vec<BigInt>> {
    if b < 1 || order < 1 {
        return Err(Error::Precondition("conjectured series needs b >= 1 and order >= 1"));
    }
    let mut sum = TruncatedSeries::zero(order);
    let mut poch = TruncatedSeries::one(order);
    for n in 1..=order {
        if n > 1 {
            poch.mul_one_minus_power(n - 1);
        }
        if n * b as usize > order {
            break;
        }
        let mut base = poch.shift(n);
        base.div_one_minus_power(n);
        let term = base.pow(b).scale(&BigInt::from(n).pow(a));
        sum = &sum + &term;
    }
    divide_by_euler_product(&mut sum);
    Ok(sum.into_coeffs())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRow {
    pub n: u64,
    pub series: BigInt,
    pub spt: BigUint,
}

impl ConjectureRow {
    pub fn agrees(&self) -> bool {
        self.series == BigInt::from(self.spt.clone())
    }
}

/// Coefficient-by-coefficient comparison of [`conjectured_series`] with
/// `spt_(a,b)(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub a: u32,
    pub b: u32,
    pub order: usize,
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(ConjectureRow::agrees)
    }

    pub fn first_mismatch(&self) -> Option<&ConjectureRow> {
        self.rows.iter().find(|r| !r.agrees())
    }

    pub fn agreeing(&self) -> usize {
        self.rows.iter().filter(|r| r.agrees()).count()
    }

    /// Whether this `(a, b)` has a known generating function.
    pub fn is_known_case(&self) -> bool {
        self.b == 1 && self.a <= 1
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a,b) = ({},{}), n = 1..{}: {}/{} agree",
            self.a,
            self.b,
            self.order,
            self.agreeing(),
            self.rows.len()
        )?;
        if let Some(r) = self.first_mismatch() {
            write!(f, "; first mismatch at n = {}: series {} vs spt {}", r.n, r.series, r.spt)?;
        }
        Ok(())
    }
}

/// Compares the conjectured series with `spt_(a,b)` for `n = 1..=order`.
/// Reports only; disagreement is not an error.
pub fn conjecture_report(a: u32, b: u32, order: usize) -> Result<ConjectureReport> {
    let coeffs = conjectured_series(a, b, order)?;
    let params = SptParams::new(a, b);
    let rows = (1..=order)
        .map(|n| {
            Ok(ConjectureRow {
                n: n as u64,
                series: coeffs[n].clone(),
                spt: spt_total(params, n as i64)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConjectureReport { a, b, order, rows })
}
