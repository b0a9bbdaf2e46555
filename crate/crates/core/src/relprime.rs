//! Relatively prime partitions.
//!
//! `Λ(n, k)` counts partitions of `n` into `k` parts whose parts share a
//! common factor, `p_Ψ(n, k) = p(n, k) - Λ(n, k)` the relatively prime ones.
//! `Λ` is computed by inclusion–exclusion over the divisors of `n`, and
//! independently by Möbius inversion.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{divisors, lcm, mobius};
use crate::partition_fn::p_recursive;

fn p(n: u64, k: u64) -> BigUint {
    p_recursive(n as i64, k as i64)
}

/// A strictly increasing run of divisors `1 < m_1 < ... < m_i` of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorChain {
    members: Vec<u64>,
    lcm: u64,
}

impl DivisorChain {
    /// `None` unless `members` is nonempty, strictly increasing, and made of
    /// divisors of `n` greater than 1.
    pub fn new(n: u64, members: Vec<u64>) -> Option<Self> {
        if members.is_empty() || n == 0 {
            return None;
        }
        if members.iter().any(|&m| m <= 1 || !n.is_multiple_of(m)) {
            return None;
        }
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        let l = members.iter().fold(1, |acc, &m| lcm(acc, m));
        Some(Self { members, lcm: l })
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn lcm(&self) -> u64 {
        self.lcm
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `+1` for odd length, `-1` for even.
    pub fn sign(&self) -> i8 {
        if self.members.len() % 2 == 1 {
            1
        } else {
            -1
        }
    }
}

/// `Λ_m(n, k)`: partitions of `n` into `k` parts all divisible by `m`.
pub fn lambda_divisible(m: u64, n: u64, k: u64) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if !n.is_multiple_of(m) {
        return Ok(BigUint::zero());
    }
    Ok(p(n / m, k))
}

/// Boundary rows shared by every `Λ` route.
fn lambda_boundary(n: u64, k: u64) -> Option<BigUint> {
    if n <= 1 || k == 0 || k > n {
        return Some(BigUint::zero());
    }
    if k == 1 {
        return Some(BigUint::from(1u8));
    }
    None
}

fn nonnegative(v: BigInt) -> BigUint {
    debug_assert!(!v.is_negative(), "negative partition count {v}");
    v.to_biguint().unwrap_or_default()
}

/// `Λ(n, k)` by inclusion–exclusion over divisor chains.
///
/// Chains are grouped by their lcm: processing the divisors in increasing
/// order, each chain either skips the next divisor or appends it, and only
/// the running `(lcm, signed count)` pairs are kept. A chain whose lcm
/// exceeds `n/k` contributes nothing and neither does any extension of it,
/// so such states are dropped as soon as they appear.
pub fn lambda_inclexcl(n: u64, k: u64) -> BigUint {
    if let Some(v) = lambda_boundary(n, k) {
        return v;
    }
    let cap = n / k;
    // lcm -> sum over chains with that lcm of (-1)^(len+1)
    let mut states: BTreeMap<u64, i64> = BTreeMap::new();
    for d in divisors(n).expect("n >= 2") {
        if d == 1 || d > cap {
            continue;
        }
        let extended: Vec<(u64, i64)> = states
            .iter()
            .filter_map(|(&l, &c)| {
                let l2 = lcm(l, d);
                (l2 <= cap).then_some((l2, -c))
            })
            .collect();
        *states.entry(d).or_insert(0) += 1;
        for (l, c) in extended {
            *states.entry(l).or_insert(0) += c;
        }
        states.retain(|_, c| *c != 0);
    }
    let total: BigInt = states
        .iter()
        .map(|(&l, &c)| BigInt::from(c) * BigInt::from(p(n / l, k)))
        .sum();
    nonnegative(total)
}

/// The chains that survive lcm pruning, in depth-first order.
///
/// Fails with [`Error::WalkBudget`] once more than `max_chains` chains have
/// been produced.
pub fn contributing_chains(n: u64, k: u64, max_chains: u64) -> Result<Vec<DivisorChain>> {
    let mut out = Vec::new();
    if n <= 1 || k == 0 || k > n {
        return Ok(out);
    }
    let cap = n / k;
    let divs: Vec<u64> = divisors(n)?.into_iter().filter(|&d| d > 1 && d <= cap).collect();

    // stack of (members, lcm, next index)
    let mut stack: Vec<(Vec<u64>, u64, usize)> = vec![(Vec::new(), 1, 0)];
    while let Some((members, l, start)) = stack.pop() {
        for i in (start..divs.len()).rev() {
            let l2 = lcm(l, divs[i]);
            if l2 > cap {
                continue;
            }
            let mut next = members.clone();
            next.push(divs[i]);
            stack.push((next, l2, i + 1));
        }
        if !members.is_empty() {
            if out.len() as u64 >= max_chains {
                return Err(Error::WalkBudget(max_chains));
            }
            out.push(DivisorChain { members, lcm: l });
        }
    }
    Ok(out)
}

/// `Λ(n, k)` by summing `±p(n/lcm, k)` over every contributing chain
/// explicitly. Exponential in the number of divisors; bounded by `max_chains`.
pub fn lambda_inclexcl_walk(n: u64, k: u64, max_chains: u64) -> Result<BigUint> {
    if let Some(v) = lambda_boundary(n, k) {
        return Ok(v);
    }
    let mut total = BigInt::zero();
    for chain in contributing_chains(n, k, max_chains)? {
        let term = BigInt::from(p(n / chain.lcm(), k));
        if chain.sign() > 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(nonnegative(total))
}

/// `Λ(n, k) = p(n, k) - Σ_{d|n} μ(d) p(n/d, k)`.
pub fn lambda_mobius(n: u64, k: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroArgument { op: "lambda_mobius" });
    }
    let mut coprime = BigInt::zero();
    for d in divisors(n)? {
        match mobius(d)? {
            0 => {}
            mu => coprime += BigInt::from(mu) * BigInt::from(p(n / d, k)),
        }
    }
    Ok(nonnegative(BigInt::from(p(n, k)) - coprime))
}

/// `p_Ψ(n, k)`: partitions of `n` into `k` relatively prime parts.
pub fn p_psi(n: u64, k: u64) -> BigUint {
    p(n, k) - lambda_inclexcl(n, k)
}

/// `p_Ψ(n)`, with `p_Ψ(0) = 1`.
pub fn p_psi_total(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::from(1u8);
    }
    (1..=n).map(|k| p_psi(n, k)).sum()
}

/// `Λ(n)`.
pub fn lambda_total(n: u64) -> BigUint {
    (1..=n).map(|k| lambda_inclexcl(n, k)).sum()
}
