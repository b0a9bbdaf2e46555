//! Brute-force partition enumeration.
//!
//! Everything here walks the partitions one by one. It is the ground truth
//! the formula modules are tested against, so it deliberately shares no code
//! with them beyond gcd.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numtheory::gcd_all;

/// A partition written with nondecreasing parts.
///
/// The empty partition is the only partition of 0; by convention it counts
/// as having one part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from nondecreasing positive parts.
    pub fn new(parts: Vec<u64>) -> Option<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] <= w[1]);
        ok.then_some(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts; 1 for the empty partition of 0.
    pub fn k(&self) -> usize {
        self.parts.len().max(1)
    }
}

/// Value and multiplicity of the smallest part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmallestPartStat {
    pub sigma: u64,
    pub count: u64,
}

/// Iterator over the partitions of `n` into exactly `k` parts in
/// lexicographic order of the part sequence.
#[derive(Debug, Clone)]
pub struct Partitions {
    n: u64,
    current: Option<Vec<u64>>,
}

impl Partitions {
    fn new(n: i64, k: i64) -> Self {
        let current = match (n, k) {
            (0, 1) => Some(Vec::new()),
            _ if n < 1 || k < 1 || k > n => None,
            _ => {
                let k = k as usize;
                let mut first = vec![1u64; k];
                first[k - 1] = n as u64 - (k as u64 - 1);
                Some(first)
            }
        };
        Self {
            n: n.max(0) as u64,
            current,
        }
    }

    /// Smallest lexicographic successor with the same length and sum.
    fn advance(&self, parts: &[u64]) -> Option<Vec<u64>> {
        let k = parts.len();
        if k < 2 {
            return None;
        }
        let mut prefix: u64 = parts[..k - 1].iter().sum();
        for i in (0..k - 1).rev() {
            prefix -= parts[i];
            let bumped = parts[i] + 1;
            let fill = bumped * (k - 1 - i) as u64;
            if prefix + fill > self.n {
                continue;
            }
            let last = self.n - prefix - fill;
            if last >= bumped {
                let mut next = parts[..i].to_vec();
                next.resize(k - 1, bumped);
                next.push(last);
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        self.current = self.advance(&parts);
        Some(Partition { parts })
    }
}

/// Partitions of `n` into exactly `k` parts. Out-of-range arguments give an
/// empty iteration; `(0, 1)` yields the empty partition once.
pub fn partitions(n: i64, k: i64) -> Partitions {
    Partitions::new(n, k)
}

/// Every partition of `n`, grouped by number of parts.
pub fn all_partitions(n: i64) -> impl Iterator<Item = Partition> {
    let ks = if n == 0 { 1..=1 } else { 1..=n.max(0) };
    ks.flat_map(move |k| partitions(n, k))
}

pub fn gcd_of(p: &Partition) -> Result<u64> {
    if p.is_empty() {
        return Err(Error::EmptyPartition { what: "gcd" });
    }
    Ok(gcd_all(&p.parts))
}

pub fn smallest_part_stat(p: &Partition) -> Result<SmallestPartStat> {
    let sigma = *p
        .parts
        .first()
        .ok_or(Error::EmptyPartition { what: "smallest part" })?;
    let count = p.parts.iter().take_while(|&&x| x == sigma).count() as u64;
    Ok(SmallestPartStat { sigma, count })
}

/// Brute-force counters with a cap on the size of `n` they will enumerate.
#[derive(Debug, Clone, Copy)]
pub struct BruteForce {
    pub max_n: i64,
}

impl Default for BruteForce {
    fn default() -> Self {
        Self { max_n: 80 }
    }
}

impl BruteForce {
    pub fn with_max_n(max_n: i64) -> Self {
        Self { max_n }
    }

    fn guard(&self, n: i64) -> Result<()> {
        if n > self.max_n {
            Err(Error::EnumerationBudget { n, max_n: self.max_n })
        } else {
            Ok(())
        }
    }

    pub fn p(&self, n: i64, k: i64) -> Result<u64> {
        self.guard(n)?;
        Ok(partitions(n, k).count() as u64)
    }

    pub fn p_total(&self, n: i64) -> Result<u64> {
        self.guard(n)?;
        Ok(all_partitions(n).count() as u64)
    }

    fn spt_sum(a: u32, b: u32, parts: impl Iterator<Item = Partition>) -> BigUint {
        parts
            .filter(|p| !p.is_empty())
            .map(|p| {
                let s = smallest_part_stat(&p).expect("nonempty");
                BigUint::from(s.sigma).pow(a) * BigUint::from(s.count).pow(b)
            })
            .sum()
    }

    /// `sum sigma^a * count^b` over the partitions of `n` into `k` parts.
    /// The empty partition of 0 contributes 1.
    pub fn spt_nk(&self, a: u32, b: u32, n: i64, k: i64) -> Result<BigUint> {
        self.guard(n)?;
        if (n, k) == (0, 1) {
            return Ok(BigUint::one());
        }
        Ok(Self::spt_sum(a, b, partitions(n, k)))
    }

    pub fn spt(&self, a: u32, b: u32, n: i64) -> Result<BigUint> {
        self.guard(n)?;
        if n == 0 {
            return Ok(BigUint::one());
        }
        Ok(Self::spt_sum(a, b, all_partitions(n)))
    }

    /// Partitions of `n` into `k` parts whose parts share a factor > 1.
    pub fn lambda(&self, n: i64, k: i64) -> Result<u64> {
        self.guard(n)?;
        Ok(partitions(n, k)
            .filter(|p| !p.is_empty() && gcd_of(p).expect("nonempty") > 1)
            .count() as u64)
    }

    /// Relatively prime partitions of `n` into `k` parts; the empty
    /// partition of 0 counts as relatively prime.
    pub fn ppsi(&self, n: i64, k: i64) -> Result<u64> {
        self.guard(n)?;
        Ok(partitions(n, k)
            .filter(|p| p.is_empty() || gcd_of(p).expect("nonempty") == 1)
            .count() as u64)
    }

    pub fn lambda_total(&self, n: i64) -> Result<u64> {
        self.guard(n)?;
        (1..=n.max(1)).map(|k| self.lambda(n, k)).sum()
    }

    pub fn ppsi_total(&self, n: i64) -> Result<u64> {
        self.guard(n)?;
        (1..=n.max(1)).map(|k| self.ppsi(n, k)).sum()
    }

    /// Distinct gcds among the partitions of `n` into `k` parts.
    pub fn gcd_set(&self, n: i64, k: i64) -> Result<BTreeSet<u64>> {
        self.guard(n)?;
        Ok(partitions(n, k)
            .filter(|p| !p.is_empty())
            .map(|p| gcd_of(&p).expect("nonempty"))
            .collect())
    }
}

pub fn brute_p(n: i64, k: i64) -> Result<u64> {
    BruteForce::default().p(n, k)
}

pub fn brute_p_total(n: i64) -> Result<u64> {
    BruteForce::default().p_total(n)
}

pub fn brute_spt(a: u32, b: u32, n: i64) -> Result<BigUint> {
    BruteForce::default().spt(a, b, n)
}

pub fn brute_spt_nk(a: u32, b: u32, n: i64, k: i64) -> Result<BigUint> {
    BruteForce::default().spt_nk(a, b, n, k)
}

pub fn brute_lambda(n: i64, k: i64) -> Result<u64> {
    BruteForce::default().lambda(n, k)
}

pub fn brute_ppsi(n: i64, k: i64) -> Result<u64> {
    BruteForce::default().ppsi(n, k)
}

pub fn gcd_set(n: i64, k: i64) -> Result<BTreeSet<u64>> {
    BruteForce::default().gcd_set(n, k)
}

/// `p(n, k)` for all `0 <= n, k <= n_max` from the classical recurrence
/// `p(n, k) = p(n - 1, k - 1) + p(n - k, k)`, indexed `[n][k]`.
pub fn classical_p_table(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut t = vec![vec![BigUint::zero(); n_max + 1]; n_max + 1];
    t[0][0] = BigUint::one();
    for n in 1..=n_max {
        for k in 1..=n {
            let v = &t[n - 1][k - 1] + &t[n - k][k];
            t[n][k] = v;
        }
    }
    // p(0, 1) = 1 by convention; p(0, 0) was only a recurrence seed.
    t[0][0] = BigUint::zero();
    if n_max >= 1 {
        t[0][1] = BigUint::one();
    }
    t
}

/// The gcds attained by partitions of `n` into `k` parts, found by counting
/// instead of enumerating: partitions with every part divisible by `g` are
/// counted from the classical table, then the counts with gcd exactly `g`
/// come from subtracting the counts of proper multiples of `g`.
pub fn gcd_set_by_counting(table: &[Vec<BigUint>], n: usize, k: usize) -> BTreeSet<u64> {
    if n == 0 || k == 0 || k > n {
        return BTreeSet::new();
    }
    let mut exact = vec![BigUint::zero(); n + 1];
    for g in (1..=n).rev() {
        if !n.is_multiple_of(g) || k > n / g {
            continue;
        }
        let mut count = table[n / g][k].clone();
        for h in (2 * g..=n).step_by(g) {
            count -= &exact[h];
        }
        exact[g] = count;
    }
    (1..=n)
        .filter(|&g| !exact[g].is_zero())
        .map(|g| g as u64)
        .collect()
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}
