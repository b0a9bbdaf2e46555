//! Integer utilities: factorization, divisors, the totient family, Möbius,
//! and exact nearest-integer rounding of rationals.
//!
//! Inputs are `u64`; anything that can outgrow a machine word (Jordan's
//! totient of higher order, Dedekind's psi near the top of the range) is
//! returned as a [`BigUint`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds `num / den` as a normalized [`Rational`].
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Prime factorization of a positive integer, keyed by prime in increasing
/// order. The factorization of 1 is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactorMap {
    entries: BTreeMap<u64, u32>,
}

impl FactorMap {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct prime factors.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn exponent(&self, prime: u64) -> u32 {
        self.entries.get(&prime).copied().unwrap_or(0)
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.entries.iter().map(|(&p, &e)| (p, e))
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.keys().copied()
    }

    /// Multiplies the factorization back out.
    pub fn product(&self) -> BigUint {
        self.iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * BigUint::from(p).pow(e))
    }

    /// Number of divisors, `prod (e + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.iter().map(|(_, e)| u64::from(e) + 1).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.entries.values().all(|&e| e == 1)
    }
}

impl fmt::Display for FactorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (p, e) in self.iter() {
            if !first {
                f.write_str(" * ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

fn nonzero(n: u64, op: &'static str) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroArgument { op })
    } else {
        Ok(())
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Factorizes `n` by trial division up to `sqrt(n)`.
pub fn factorize(n: u64) -> Result<FactorMap> {
    nonzero(n, "factorize")?;
    let mut entries = BTreeMap::new();
    let mut rest = n;
    let mut d = 2u64;
    while d <= rest / d {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            entries.insert(d, e);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        entries.insert(rest, 1);
    }
    Ok(FactorMap { entries })
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let fm = factorize(n)?;
    let mut out = vec![1u64];
    for (p, e) in fm.iter() {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Jordan's totient `J_m(n) = n^m prod_{p | n} (1 - p^-m)`.
///
/// Evaluated as `prod p^(m(e-1)) (p^m - 1)` over the prime powers `p^e || n`,
/// which keeps everything integral.
pub fn jordan_totient(m: u32, n: u64) -> Result<BigUint> {
    nonzero(n, "jordan_totient")?;
    if m == 0 {
        return Err(Error::Precondition("Jordan totient order must be at least 1"));
    }
    let fm = factorize(n)?;
    Ok(fm.iter().fold(BigUint::one(), |acc, (p, e)| {
        let p = BigUint::from(p);
        let pm = p.pow(m);
        acc * pm.pow(e - 1) * (pm - 1u32)
    }))
}

/// Euler's totient, `J_1`.
pub fn euler_phi(n: u64) -> Result<u64> {
    nonzero(n, "euler_phi")?;
    let fm = factorize(n)?;
    Ok(fm
        .iter()
        .map(|(p, e)| p.pow(e - 1) * (p - 1))
        .product())
}

/// Dedekind's psi, `n prod_{p | n} (1 + 1/p)`.
pub fn dedekind_psi(n: u64) -> Result<BigUint> {
    nonzero(n, "dedekind_psi")?;
    let fm = factorize(n)?;
    Ok(fm.iter().fold(BigUint::one(), |acc, (p, e)| {
        acc * BigUint::from(p).pow(e - 1) * BigUint::from(p + 1)
    }))
}

pub fn mobius(n: u64) -> Result<i8> {
    nonzero(n, "mobius")?;
    let fm = factorize(n)?;
    if !fm.is_squarefree() {
        return Ok(0);
    }
    Ok(if fm.len() % 2 == 0 { 1 } else { -1 })
}

/// Number of divisors via `sum_{k=1}^{n} floor(k floor(n/k) / n)`.
///
/// The summand is 1 exactly when `k | n`.
pub fn divisor_count_floor(n: u64) -> Result<u64> {
    nonzero(n, "divisor_count_floor")?;
    let n128 = u128::from(n);
    Ok((1..=n128).map(|k| (k * (n128 / k)) / n128).sum::<u128>() as u64)
}

/// The integer nearest to `x`. Exact half-integers are rejected.
pub fn nearest_int(x: &Rational) -> Result<BigInt> {
    if x.denom() == &BigInt::from(2) {
        return Err(Error::HalfInteger {
            value: x.to_string(),
        });
    }
    let half = ratio(1, 2);
    Ok((x + half).floor().to_integer())
}

/// `(-1)^n`.
pub fn neg_one_pow(n: u64) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `cos(2 pi n / 3)` as an exact rational: 1 when `3 | n`, otherwise `-1/2`.
pub fn cos_two_pi_thirds(n: u64) -> Rational {
    if n.is_multiple_of(3) {
        Rational::one()
    } else {
        ratio(-1, 2)
    }
}

/// Least common multiple of two positive integers.
pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Greatest common divisor of a slice; 0 for an empty slice.
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0u64, |g, &v| g.gcd(&v))
}

/// Converts an integral rational to a `BigInt`, `None` if it has a
/// fractional part.
pub fn as_integer(x: &Rational) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gcd_count(n: u64) -> u64 {
        (1..=n).filter(|&i| i.gcd(&n) == 1).count() as u64
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().is_empty());
        let f12 = factorize(12).unwrap();
        assert_eq!(f12.iter().collect::<Vec<_>>(), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97).unwrap().iter().collect::<Vec<_>>(), vec![(97, 1)]);
        assert_eq!(factorize(0), Err(Error::ZeroArgument { op: "factorize" }));
        assert_eq!(f12.to_string(), "2^2 * 3");
    }

    #[test]
    fn factorize_large_prime_and_square() {
        let p = 999_999_937u64;
        assert_eq!(factorize(p).unwrap().iter().collect::<Vec<_>>(), vec![(p, 1)]);
        let sq = 65_521u64 * 65_521;
        assert_eq!(factorize(sq).unwrap().iter().collect::<Vec<_>>(), vec![(65_521, 2)]);
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(30).unwrap(), vec![1, 2, 3, 5, 6, 10, 15, 30]);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn totient_examples() {
        assert_eq!(jordan_totient(1, 30).unwrap(), BigUint::from(8u32));
        assert_eq!(jordan_totient(2, 4).unwrap(), BigUint::from(12u32));
        for m in 1..6 {
            assert_eq!(jordan_totient(m, 1).unwrap(), BigUint::one());
        }
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(30).unwrap(), 8);
        assert_eq!(euler_phi(4).unwrap(), 2);
        assert_eq!(dedekind_psi(1).unwrap(), BigUint::from(1u32));
        assert_eq!(dedekind_psi(6).unwrap(), BigUint::from(12u32));
        assert_eq!(dedekind_psi(4).unwrap(), BigUint::from(6u32));
        assert!(euler_phi(0).is_err());
        assert!(dedekind_psi(0).is_err());
        assert!(jordan_totient(2, 0).is_err());
    }

    #[test]
    fn jordan_two_counts_pairs() {
        // J_2(n) = #{(i, j) in [1, n]^2 : gcd(i, j, n) = 1}
        for n in 1..=40u64 {
            let brute = (1..=n)
                .flat_map(|i| (1..=n).map(move |j| (i, j)))
                .filter(|&(i, j)| i.gcd(&j).gcd(&n) == 1)
                .count();
            assert_eq!(jordan_totient(2, n).unwrap(), BigUint::from(brute), "n = {n}");
        }
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
        assert!(mobius(0).is_err());
    }

    #[test]
    fn divisor_count_floor_examples() {
        assert_eq!(divisor_count_floor(1).unwrap(), 1);
        assert_eq!(divisor_count_floor(12).unwrap(), 6);
        assert_eq!(divisor_count_floor(30).unwrap(), 8);
    }

    #[test]
    fn nearest_int_examples() {
        assert_eq!(nearest_int(&ratio(25, 12)).unwrap(), BigInt::from(2));
        assert_eq!(nearest_int(&ratio(3, 1)).unwrap(), BigInt::from(3));
        assert_eq!(nearest_int(&ratio(64, 12)).unwrap(), BigInt::from(5));
        assert_eq!(nearest_int(&ratio(-1, 4)).unwrap(), BigInt::from(0));
        assert_eq!(nearest_int(&ratio(-3, 4)).unwrap(), BigInt::from(-1));
        assert!(matches!(nearest_int(&ratio(5, 2)), Err(Error::HalfInteger { .. })));
        assert!(matches!(nearest_int(&ratio(-1, 2)), Err(Error::HalfInteger { .. })));
    }

    #[test]
    fn trig_and_sign_lookup() {
        assert_eq!(cos_two_pi_thirds(0), Rational::one());
        assert_eq!(cos_two_pi_thirds(4), ratio(-1, 2));
        assert_eq!(neg_one_pow(7), -1);
        assert_eq!(neg_one_pow(10), 1);
    }

    #[test]
    fn divisor_count_floor_matches_divisors() {
        for n in 1..=10_000u64 {
            assert_eq!(divisor_count_floor(n).unwrap(), divisors(n).unwrap().len() as u64);
        }
    }

    #[test]
    fn phi_matches_gcd_count() {
        for n in 1..=500 {
            assert_eq!(euler_phi(n).unwrap(), gcd_count(n), "n = {n}");
        }
    }

    #[test]
    fn psi_times_phi_is_j2() {
        for n in 1..=300 {
            let lhs = dedekind_psi(n).unwrap() * euler_phi(n).unwrap();
            assert_eq!(lhs, jordan_totient(2, n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn mobius_sums_to_indicator() {
        for n in 1..=1000u64 {
            let s: i64 = divisors(n)
                .unwrap()
                .into_iter()
                .map(|d| i64::from(mobius(d).unwrap()))
                .sum();
            assert_eq!(s, i64::from(n == 1), "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn factorization_round_trips(n in 1u64..5_000_000) {
            let fm = factorize(n).unwrap();
            prop_assert_eq!(fm.product(), BigUint::from(n));
            prop_assert!(fm.primes().all(is_prime));
            let primes: Vec<_> = fm.primes().collect();
            prop_assert!(primes.windows(2).all(|w| w[0] < w[1]));
            let divs = divisors(n).unwrap();
            prop_assert_eq!(divs.len() as u64, fm.divisor_count());
            prop_assert!(divs.iter().all(|d| n % d == 0));
            prop_assert!(divs.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(divs[0], 1);
            prop_assert_eq!(*divs.last().unwrap(), n);
        }
    }
}
