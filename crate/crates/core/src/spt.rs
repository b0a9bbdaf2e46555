//! Generalized smallest-parts sums.
//!
//! `spt_(a,b)(n)` adds `sigma^a * count^b` over all partitions of `n`, where
//! `sigma` is the smallest part and `count` its multiplicity. `(0, 1)` is
//! Andrews' spt function.
//!
//! The closed formula works per number of parts `k`. Writing the partitions
//! of `n` into `k` parts with smallest part `m` as `m` copies of a common
//! floor plus a partition of `n - km` into `v < k` parts, the smallest part
//! occurs `k - v` times, except for the all-equal partition `{n/k, ..., n/k}`
//! which the correction term `floor(k floor(n/k)/n) (k^b - (k-1)^b)` fixes up.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition_fn::p_recursive;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SptParams {
    /// Exponent on the smallest part.
    pub a: u32,
    /// Exponent on its multiplicity.
    pub b: u32,
}

impl SptParams {
    /// Andrews' smallest-parts function.
    pub const ANDREWS: SptParams = SptParams { a: 0, b: 1 };

    pub const fn new(a: u32, b: u32) -> Self {
        Self { a, b }
    }
}

impl fmt::Display for SptParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

fn pow(base: i64, e: u32) -> BigUint {
    BigUint::from(base as u64).pow(e)
}

/// `Some(value)` for the boundary cases shared by every formula, `None` when
/// the general `k >= 2` formula applies.
fn boundary(a: u32, n: i64, k: i64) -> Option<BigUint> {
    if n < 0 || k < 1 {
        return Some(BigUint::zero());
    }
    if n == 0 {
        return Some(if k == 1 { BigUint::one() } else { BigUint::zero() });
    }
    if k > n {
        return Some(BigUint::zero());
    }
    if k == 1 {
        // the single partition {n}
        return Some(pow(n, a));
    }
    None
}

/// 1 when `k | n` (for `1 <= k <= n`), else 0.
fn divides_indicator(n: i64, k: i64) -> u32 {
    ((k * (n / k)) / n) as u32
}

/// `spt_(a,b)(n, k)`: the sum restricted to partitions with exactly `k`
/// parts. `spt_(a,b)(0, 1) = 1` by convention.
pub fn spt_nk(params: SptParams, n: i64, k: i64) -> BigUint {
    let SptParams { a, b } = params;
    if let Some(v) = boundary(a, n, k) {
        return v;
    }
    let q = n / k;
    let correction =
        pow(q, a) * divides_indicator(n, k) * (pow(k, b) - pow(k - 1, b));
    let mut sum = BigUint::zero();
    for m in 1..=q {
        let rest = n - k * m;
        let mut inner = BigUint::zero();
        for v in 1..k {
            let p = p_recursive(rest, v);
            if !p.is_zero() {
                inner += pow(k - v, b) * p;
            }
        }
        sum += pow(m, a) * inner;
    }
    correction + sum
}

/// `spt_(a,b)(n) = sum_{k=1}^{n} spt_(a,b)(n, k)` for `n >= 1`.
pub fn spt_total(params: SptParams, n: i64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroArgument { op: "spt_total" });
    }
    if n < 0 {
        return Err(Error::Precondition("spt_total needs n >= 1"));
    }
    Ok((1..=n).map(|k| spt_nk(params, n, k)).sum())
}

/// The special cases of the smallest-parts sum, each evaluated by its own
/// formula rather than through [`spt_nk`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SptForm {
    /// `(1, 0)`: sum of the smallest parts.
    Spt10,
    /// `(a, 0)`.
    SptA0(u32),
    /// `(0, 1)`: number of smallest parts.
    Spt01,
    /// `(0, b)`.
    Spt0B(u32),
    /// `(1, 1)`.
    Spt11,
}

impl SptForm {
    pub fn params(self) -> SptParams {
        match self {
            Self::Spt10 => SptParams::new(1, 0),
            Self::SptA0(a) => SptParams::new(a, 0),
            Self::Spt01 => SptParams::new(0, 1),
            Self::Spt0B(b) => SptParams::new(0, b),
            Self::Spt11 => SptParams::new(1, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Spt10 => "spt10",
            Self::SptA0(_) => "spta0",
            Self::Spt01 => "spt01",
            Self::Spt0B(_) => "spt0b",
            Self::Spt11 => "spt11",
        }
    }

    /// Parses a form name; `spta0` and `spt0b` take `exponent`.
    pub fn parse(name: &str, exponent: Option<u32>) -> Result<Self> {
        let need = |e: Option<u32>| e.ok_or(Error::Precondition("this form needs an exponent"));
        match name {
            "spt10" => Ok(Self::Spt10),
            "spta0" => Ok(Self::SptA0(need(exponent)?)),
            "spt01" => Ok(Self::Spt01),
            "spt0b" => Ok(Self::Spt0B(need(exponent)?)),
            "spt11" => Ok(Self::Spt11),
            _ => Err(Error::UnknownForm(name.to_string())),
        }
    }
}

impl FromStr for SptForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

pub fn spt_special(form: SptForm, n: i64, k: i64) -> BigUint {
    if let Some(v) = boundary(form.params().a, n, k) {
        return v;
    }
    let q = n / k;
    let p = p_recursive;
    match form {
        SptForm::Spt10 => {
            let mut s = BigUint::zero();
            for m in 1..=q {
                let inner: BigUint = (1..k).map(|v| p(n - k * m, v)).sum();
                s += BigUint::from(m as u64) * inner;
            }
            s
        }
        SptForm::SptA0(a) => {
            let mut s = BigUint::zero();
            for m in 1..=q {
                let inner: BigUint = (1..k).map(|v| p(n - k * m, v)).sum();
                s += pow(m, a) * inner;
            }
            s
        }
        SptForm::Spt01 => {
            let mut s = BigUint::from(divides_indicator(n, k));
            for m in 1..=q {
                for v in 1..k {
                    s += BigUint::from((k - v) as u64) * p(n - k * m, v);
                }
            }
            s
        }
        SptForm::Spt0B(b) => {
            let mut s = divides_indicator(n, k) * (pow(k, b) - pow(k - 1, b));
            for m in 1..=q {
                for v in 1..k {
                    s += pow(k - v, b) * p(n - k * m, v);
                }
            }
            s
        }
        SptForm::Spt11 => {
            let mut s = BigUint::from((q as u64) * u64::from(divides_indicator(n, k)));
            for m in 1..=q {
                let inner: BigUint = (1..k)
                    .map(|v| BigUint::from((k - v) as u64) * p(n - k * m, v))
                    .sum();
                s += BigUint::from(m as u64) * inner;
            }
            s
        }
    }
}

/// Both sides of `p <= spt_(a,b)` at one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityWitness {
    pub params: SptParams,
    pub n: i64,
    /// `None` for the comparison of totals over all `k`.
    pub k: Option<i64>,
    pub p: BigUint,
    pub spt: BigUint,
}

impl InequalityWitness {
    pub fn ordering(&self) -> Ordering {
        self.p.cmp(&self.spt)
    }

    pub fn holds(&self) -> bool {
        self.p <= self.spt
    }

    pub fn is_equal(&self) -> bool {
        self.p == self.spt
    }
}

pub fn check_inequality(params: SptParams, n: i64, k: i64) -> InequalityWitness {
    InequalityWitness {
        params,
        n,
        k: Some(k),
        p: p_recursive(n, k),
        spt: spt_nk(params, n, k),
    }
}

/// Compares `p(n)` with `spt_(a,b)(n)`.
pub fn check_inequality_total(params: SptParams, n: i64) -> Result<InequalityWitness> {
    let spt = spt_total(params, n)?;
    Ok(InequalityWitness {
        params,
        n,
        k: None,
        p: (1..=n).map(|k| p_recursive(n, k)).sum(),
        spt,
    })
}
