//! Counting partitions of `n` into exactly `k` parts.
//!
//! Two formulas are implemented side by side:
//!
//! - [`p_recursive`] peels off the smallest part `m` and recurses on what is
//!   left: `p(n, k) = sum_{m=1}^{n/k} sum_{v=1}^{k-1} p(n - km, v)`.
//! - [`p_closed`] writes `p(n, k)` for `k >= 3` as a `(k-2)`-fold nested sum
//!   of `floor((2 + n - sum_j j*m_j) / 2)`, where `m_j` is the number of
//!   columns of height `j` in the conjugate diagram. The nested sum is
//!   evaluated by [`eval_multisum`].
//!
//! [`p_pentagonal`] is the classical Euler recurrence for `p(n)` and serves
//! as an oracle for both.
//!
//! Conventions: `p(0, 1) = p(0) = 1`, and `p(n, k) = 0` whenever `n < 0`,
//! `k < 1` or `k > n` (apart from `(0, 1)`).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{cos_two_pi_thirds, nearest_int, neg_one_pow, ratio, Rational};

/// A nested sum whose index ranges depend on the outer indices.
///
/// Index 0 runs from `outer_start`, every later index from `inner_start`.
/// Each index runs up to `upper_bound(partial, weight)`, where `partial`
/// holds the indices fixed so far and `weight = sum weights[i] * index[i]`
/// over them. The summand sees the full assignment and its weight. An index
/// whose upper bound is below its start contributes nothing.
pub struct MultiSumSpec<U, S> {
    pub depth: usize,
    pub outer_start: i64,
    pub inner_start: i64,
    pub weights: Vec<i64>,
    pub upper_bound: U,
    pub summand: S,
}

/// Evaluates a [`MultiSumSpec`] by iterative descent, keeping the running
/// weight of the fixed indices. `max_terms` caps the number of summand
/// evaluations.
pub fn eval_multisum<U, S>(spec: &MultiSumSpec<U, S>, max_terms: Option<u64>) -> Result<BigUint>
where
    U: Fn(&[i64], i64) -> i64,
    S: Fn(&[i64], i64) -> u64,
{
    let depth = spec.depth;
    if depth == 0 {
        return Err(Error::EmptyMultiSum);
    }
    if spec.weights.len() != depth {
        return Err(Error::Precondition("multi-sum needs one weight per index"));
    }
    let mut idx = vec![0i64; depth];
    let mut hi = vec![0i64; depth];
    // weight_before[i] = weight of idx[..i]
    let mut weight_before = vec![0i64; depth + 1];
    let mut total: u128 = 0;
    let mut terms: u64 = 0;

    let mut level = 0usize;
    idx[0] = spec.outer_start;
    hi[0] = (spec.upper_bound)(&[], 0);
    loop {
        if idx[level] > hi[level] {
            if level == 0 {
                break;
            }
            level -= 1;
            idx[level] += 1;
            continue;
        }
        let weight = weight_before[level] + spec.weights[level] * idx[level];
        if level + 1 == depth {
            if let Some(limit) = max_terms {
                if terms >= limit {
                    return Err(Error::WalkBudget(limit));
                }
            }
            terms += 1;
            total += u128::from((spec.summand)(&idx, weight));
            idx[level] += 1;
            continue;
        }
        weight_before[level + 1] = weight;
        level += 1;
        idx[level] = spec.inner_start;
        hi[level] = (spec.upper_bound)(&idx[..level], weight);
    }
    Ok(BigUint::from(total))
}

/// Which formula evaluates `p(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Recursive,
    Closed,
}

/// Memo table for [`p_recursive`].
///
/// Besides `p(n, k)` it stores the inner sum `sum_{v=1}^{j} p(n, v)` of the
/// recursion, which is what the recursion actually reads. Entries are never
/// overwritten with a different value, so concurrent writers racing on the
/// same key are harmless.
#[derive(Debug, Default)]
pub struct PartitionTable {
    exact: RwLock<HashMap<(i64, i64), BigUint>>,
    at_most: RwLock<HashMap<(i64, i64), BigUint>>,
}

impl PartitionTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide table used by the free functions.
    pub fn global() -> &'static PartitionTable {
        static TABLE: OnceLock<PartitionTable> = OnceLock::new();
        TABLE.get_or_init(PartitionTable::new)
    }

    /// Number of stored `p(n, k)` entries.
    pub fn len(&self) -> usize {
        self.exact.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn p(&self, n: i64, k: i64) -> BigUint {
        if n < 0 || k < 1 {
            return BigUint::zero();
        }
        if n == 0 {
            return if k == 1 { BigUint::one() } else { BigUint::zero() };
        }
        if k > n {
            return BigUint::zero();
        }
        if k == 1 {
            return BigUint::one();
        }
        if let Some(v) = self.exact.read().expect("memo lock poisoned").get(&(n, k)) {
            return v.clone();
        }
        let mut value = BigUint::zero();
        for m in 1..=n / k {
            value += self.at_most(n - k * m, k - 1);
        }
        self.exact
            .write()
            .expect("memo lock poisoned")
            .entry((n, k))
            .or_insert_with(|| value.clone());
        value
    }

    /// `sum_{v=1}^{j} p(n, v)`.
    fn at_most(&self, n: i64, j: i64) -> BigUint {
        if n < 0 || j < 1 {
            return BigUint::zero();
        }
        if n == 0 {
            return BigUint::one();
        }
        let j = j.min(n);
        if j == 1 {
            return BigUint::one();
        }
        if let Some(v) = self.at_most.read().expect("memo lock poisoned").get(&(n, j)) {
            return v.clone();
        }
        let mut value = BigUint::zero();
        for v in 1..=j {
            value += self.p(n, v);
        }
        self.at_most
            .write()
            .expect("memo lock poisoned")
            .entry((n, j))
            .or_insert_with(|| value.clone());
        value
    }
}

/// `p(n, k)` by the smallest-part recursion, memoized in the global table.
pub fn p_recursive(n: i64, k: i64) -> BigUint {
    PartitionTable::global().p(n, k)
}

/// Limits for the nested-sum evaluation of `p(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedFormBudget {
    /// Largest `k` reported as the guard in refusals.
    pub k_guard: i64,
    /// Maximum number of summand evaluations.
    pub max_terms: u64,
}

impl Default for ClosedFormBudget {
    fn default() -> Self {
        Self {
            k_guard: 16,
            max_terms: 100_000_000,
        }
    }
}

/// Exact number of summand evaluations the nested sum for `p(n, k)` with
/// `k >= 3` performs: the multisets of parts from `3..=k`, containing `k` at
/// least once, with total at most `n`. Saturates at `u128::MAX`.
pub fn closed_form_terms(n: i64, k: i64) -> u128 {
    if k < 3 || n < k {
        return 0;
    }
    let room = (n - k) as usize;
    let mut ways = vec![0u128; room + 1];
    ways[0] = 1;
    for part in 3..=k as usize {
        for s in part..=room {
            ways[s] = ways[s].saturating_add(ways[s - part]);
        }
    }
    ways.iter().fold(0u128, |acc, &w| acc.saturating_add(w))
}

/// `p(n, k)` from the closed nested-sum formula with the default budget.
pub fn p_closed(n: i64, k: i64) -> Result<BigUint> {
    p_closed_with(n, k, ClosedFormBudget::default())
}

/// `p(n, k)` from the closed nested-sum formula.
///
/// `k = 1` and `k = 2` are the constants `1` and `floor(n/2)`. For `k >= 3`
/// the indices are `m_k >= 1` followed by `m_{k-1}, ..., m_3 >= 0`, each
/// bounded by `floor((n - sum_{j > i} j m_j) / i)`, and the summand is
/// `floor((2 + n - sum_{j=3}^{k} j m_j) / 2)`.
pub fn p_closed_with(n: i64, k: i64, budget: ClosedFormBudget) -> Result<BigUint> {
    if n < 0 || k < 1 {
        return Ok(BigUint::zero());
    }
    if n == 0 {
        return Ok(if k == 1 { BigUint::one() } else { BigUint::zero() });
    }
    if k > n {
        return Ok(BigUint::zero());
    }
    match k {
        1 => return Ok(BigUint::one()),
        2 => return Ok(BigUint::from((n / 2) as u64)),
        _ => {}
    }
    let estimate = closed_form_terms(n, k);
    if estimate > u128::from(budget.max_terms) {
        return Err(Error::TermBudget {
            n,
            k,
            estimate,
            budget: budget.max_terms,
            k_guard: budget.k_guard,
        });
    }
    let depth = (k - 2) as usize;
    // position i holds m_{k-i}
    let spec = MultiSumSpec {
        depth,
        outer_start: 1,
        inner_start: 0,
        weights: (0..depth as i64).map(|i| k - i).collect(),
        upper_bound: |partial: &[i64], weight: i64| (n - weight).div_euclid(k - partial.len() as i64),
        summand: |_: &[i64], weight: i64| (2 + n - weight).div_euclid(2) as u64,
    };
    eval_multisum(&spec, Some(budget.max_terms))
}

/// `p(n) = sum_k p(n, k)` by the chosen formula.
pub fn p_total(n: i64, strategy: Strategy) -> Result<BigUint> {
    if n < 0 {
        return Ok(BigUint::zero());
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    match strategy {
        Strategy::Recursive => Ok((1..=n).map(|k| p_recursive(n, k)).sum()),
        Strategy::Closed => (1..=n).map(|k| p_closed(n, k)).sum(),
    }
}

static PENTAGONAL: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// `p(n)` from Euler's pentagonal-number recurrence
/// `p(n) = sum_{j >= 1} (-1)^(j+1) [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)]`.
pub fn p_pentagonal(n: i64) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    let n = n as usize;
    let mut memo = PENTAGONAL.lock().expect("pentagonal cache poisoned");
    if memo.is_empty() {
        memo.push(BigInt::one());
    }
    while memo.len() <= n {
        let i = memo.len();
        let mut sum = BigInt::zero();
        for j in 1usize.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let mut term = memo[i - g1].clone();
            if g2 <= i {
                term += &memo[i - g2];
            }
            if j % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        memo.push(sum);
    }
    memo[n].magnitude().clone()
}

/// The closed forms available for `p(n, k)` with `k <= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallKForm {
    /// `1`, `floor(n/2)`, or `sum_{m=1}^{n/3} floor((2 + n - 3m)/2)`.
    Floor,
    /// `<(2n-1)/4>` for `k = 2`, `<n^2/12>` for `k = 3`.
    NearestInt,
    /// `(2n - 1 + (-1)^n) / 4`, `k = 2` only.
    Parity,
    /// `(6n^2 - 7 - 9(-1)^n + 16 cos(2 pi n/3)) / 72`, `k = 3` only.
    Trig,
}

impl SmallKForm {
    pub const ALL: [SmallKForm; 4] = [Self::Floor, Self::NearestInt, Self::Parity, Self::Trig];

    pub fn name(self) -> &'static str {
        match self {
            Self::Floor => "floor",
            Self::NearestInt => "nearest-int",
            Self::Parity => "parity",
            Self::Trig => "trig",
        }
    }

    /// Whether the form has a definition for this `k`.
    pub fn applies_to(self, k: i64) -> bool {
        match self {
            Self::Floor => (1..=3).contains(&k),
            Self::NearestInt => k == 2 || k == 3,
            Self::Parity => k == 2,
            Self::Trig => k == 3,
        }
    }
}

impl fmt::Display for SmallKForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SmallKForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownForm(s.to_string()))
    }
}

fn to_count(x: Rational) -> Result<BigUint> {
    if !x.is_integer() || x.is_negative() {
        return Err(Error::Precondition("closed form did not evaluate to a nonnegative integer"));
    }
    Ok(x.to_integer().magnitude().clone())
}

/// `p(n, k)` for `k <= 3` by one of the classical closed forms, evaluated
/// in exact rational arithmetic.
pub fn p_small_k(n: i64, k: i64, form: SmallKForm) -> Result<BigUint> {
    if !form.applies_to(k) {
        return Err(Error::FormNotApplicable {
            form: form.name(),
            k,
        });
    }
    if n < 0 {
        return Ok(BigUint::zero());
    }
    let nn = n as u64;
    let sign = neg_one_pow(nn);
    let value = match (form, k) {
        (SmallKForm::Floor, 1) => Rational::from_integer(BigInt::from(i64::from(n >= 1))),
        (SmallKForm::Floor, 2) => Rational::from_integer(BigInt::from(n / 2)),
        (SmallKForm::Floor, _) => {
            let s: i64 = (1..=n / 3).map(|m| (2 + n - 3 * m).div_euclid(2)).sum();
            Rational::from_integer(BigInt::from(s))
        }
        (SmallKForm::NearestInt, 2) => Rational::from_integer(nearest_int(&ratio(2 * n - 1, 4))?),
        (SmallKForm::NearestInt, _) => {
            Rational::from_integer(nearest_int(&Rational::new(BigInt::from(n) * n, 12.into()))?)
        }
        (SmallKForm::Parity, _) => ratio(2 * n - 1 + sign, 4),
        (SmallKForm::Trig, _) => {
            let n2 = BigInt::from(n) * n;
            let poly = Rational::from_integer(BigInt::from(6) * n2 - 7 - 9 * sign);
            (poly + cos_two_pi_thirds(nn) * ratio(16, 1)) / ratio(72, 1)
        }
    };
    to_count(value)
}

/// `<(n+3)^2 / 12>`, which equals `p(n,1) + p(n,2) + p(n,3)` for `n >= 1`.
pub fn hardy_sum(n: i64) -> Result<BigInt> {
    let n3 = BigInt::from(n) + 3;
    nearest_int(&Rational::new(&n3 * &n3, 12.into()))
}
