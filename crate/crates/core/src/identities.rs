//! Identities tying `p(n,2)`, `p(n,3)`, `Λ(n,2)`, `Λ(n,3)` to `φ`, `J₂` and `ψ`.
//!
//! Each identity carries the least `n` from which it holds (found by direct
//! evaluation) and the failing values below that point.

use std::fmt;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{
    cos_two_pi_thirds, dedekind_psi, euler_phi, jordan_totient, nearest_int, neg_one_pow, Rational,
};
use crate::partition_fn::p_recursive;
use crate::relprime::lambda_inclexcl;

/// Exact evaluator; `None` where the expression is undefined.
pub type Evaluator = fn(u64) -> Option<Rational>;

/// A value below the window, as printed by [`Rational`]'s `Display`
/// (`None` for undefined).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnownException {
    pub n: u64,
    pub lhs: Option<&'static str>,
    pub rhs: Option<&'static str>,
}

#[derive(Clone, Copy)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub lhs: Evaluator,
    pub rhs: Evaluator,
    /// First `n` for which `lhs(n) = rhs(n)` is expected.
    pub window_start: u64,
    pub known_exceptions: &'static [KnownException],
}

impl fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("id", &self.id)
            .field("window_start", &self.window_start)
            .finish_non_exhaustive()
    }
}

impl IdentityCheck {
    pub fn in_window(&self, n: u64) -> bool {
        n >= self.window_start
    }
}

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

fn pk(n: u64, k: i64) -> Rational {
    int(p_recursive(n as i64, k))
}

fn lam(n: u64, k: u64) -> Rational {
    int(lambda_inclexcl(n, k))
}

fn phi(n: u64) -> Option<Rational> {
    euler_phi(n).ok().map(int)
}

fn j2(n: u64) -> Option<Rational> {
    jordan_totient(2, n).ok().map(int)
}

fn psi(n: u64) -> Option<Rational> {
    dedekind_psi(n).ok().map(int)
}

/// `⟨x⟩` as a rational.
fn nint(x: Rational) -> Option<Rational> {
    nearest_int(&x).ok().map(Rational::from_integer)
}

fn n_rat(n: u64) -> Rational {
    int(n)
}

/// `⟨(n+3)²/12⟩`.
fn hardy(n: u64) -> Option<Rational> {
    let m = n_rat(n + 3);
    nint(&m * &m / int(12))
}

fn sign(n: u64) -> Rational {
    int(neg_one_pow(n))
}

fn c2(n: u64) -> Rational {
    int(2) * (pk(n, 2) - lam(n, 2))
}

fn c12(n: u64) -> Rational {
    int(12) * (pk(n, 3) - lam(n, 3))
}

fn p123(n: u64) -> Option<Rational> {
    Some(pk(n, 1) + pk(n, 2) + pk(n, 3))
}

fn p2(n: u64) -> Option<Rational> {
    Some(pk(n, 2))
}

fn p3(n: u64) -> Option<Rational> {
    Some(pk(n, 3))
}

fn psi_phi(n: u64) -> Option<Rational> {
    Some(psi(n)? * phi(n)?)
}

fn eb_phi_rhs(n: u64) -> Option<Rational> {
    Some(c2(n))
}

fn eb_j2_rhs(n: u64) -> Option<Rational> {
    Some(c12(n))
}

fn hardy_phi_rhs(n: u64) -> Option<Rational> {
    Some(int(2) * (hardy(n)? - lam(n, 2) - lam(n, 3) - int(1) - j2(n)? / int(12)))
}

fn hardy_j2_rhs(n: u64) -> Option<Rational> {
    Some(int(12) * (hardy(n)? - lam(n, 2) - lam(n, 3) - int(1) - phi(n)? / int(2)))
}

fn hons_p3_rhs(n: u64) -> Option<Rational> {
    let m = n_rat(n);
    nint(&m * &m / int(12))
}

fn hons_j2_rhs(n: u64) -> Option<Rational> {
    Some(int(12) * (hons_p3_rhs(n)? - lam(n, 3)))
}

fn w_p2a_rhs(n: u64) -> Option<Rational> {
    nint(Rational::new(BigInt::from(2 * n) - 1, BigInt::from(4)))
}

fn w_p2b_rhs(n: u64) -> Option<Rational> {
    Some((int(2 * n) - int(1) + sign(n)) / int(4))
}

fn w_p3_rhs(n: u64) -> Option<Rational> {
    let m = n_rat(n);
    Some(
        (int(6) * &m * &m - int(7) - int(9) * sign(n) + int(16) * cos_two_pi_thirds(n))
            / int(72),
    )
}

fn w_phi_rhs(n: u64) -> Option<Rational> {
    Some(n_rat(n) + (sign(n) - int(1)) / int(2) - int(2) * lam(n, 2))
}

fn w_j2_rhs(n: u64) -> Option<Rational> {
    let m = n_rat(n);
    Some(
        &m * &m + (int(16) * cos_two_pi_thirds(n) - int(7) - int(9) * sign(n)) / int(6)
            - int(12) * lam(n, 3),
    )
}

fn comb_phi_rhs(n: u64) -> Option<Rational> {
    Some(int(2) * (hardy(n)? - lam(n, 2) - int(1) - pk(n, 3)))
}

fn comb_j2_rhs(n: u64) -> Option<Rational> {
    Some(int(12) * (hardy(n)? - lam(n, 3) - int(1) - pk(n, 2)))
}

fn psi_a_rhs(n: u64) -> Option<Rational> {
    let den = c2(n);
    if den.is_zero() {
        return None;
    }
    Some(j2(n)? / den)
}

const fn ex(n: u64, lhs: &'static str, rhs: &'static str) -> KnownException {
    KnownException {
        n,
        lhs: Some(lhs),
        rhs: Some(rhs),
    }
}

const PHI_EXCEPTIONS: &[KnownException] = &[ex(1, "1", "0"), ex(2, "1", "2")];
const J2_EXCEPTIONS: &[KnownException] = &[ex(1, "1", "0"), ex(2, "3", "0"), ex(3, "8", "12")];

static REGISTRY: [IdentityCheck; 16] = [
    IdentityCheck {
        id: "EB-PHI",
        description: "phi(n) = 2(p(n,2) - Lambda(n,2))",
        lhs: phi,
        rhs: eb_phi_rhs,
        window_start: 3,
        known_exceptions: PHI_EXCEPTIONS,
    },
    IdentityCheck {
        id: "EB-J2",
        description: "J2(n) = 12(p(n,3) - Lambda(n,3))",
        lhs: j2,
        rhs: eb_j2_rhs,
        window_start: 4,
        known_exceptions: J2_EXCEPTIONS,
    },
    IdentityCheck {
        id: "HARDY-SUM",
        description: "p(n,1) + p(n,2) + p(n,3) = <(n+3)^2/12>",
        lhs: p123,
        rhs: hardy,
        window_start: 1,
        known_exceptions: &[],
    },
    IdentityCheck {
        id: "HARDY-PHI",
        description: "phi(n) = 2(<(n+3)^2/12> - Lambda(n,2) - Lambda(n,3) - 1 - J2(n)/12)",
        lhs: phi,
        rhs: hardy_phi_rhs,
        window_start: 4,
        known_exceptions: &[ex(1, "1", "-1/6"), ex(2, "1", "3/2"), ex(3, "2", "8/3")],
    },
    IdentityCheck {
        id: "HARDY-J2",
        description: "J2(n) = 12(<(n+3)^2/12> - Lambda(n,2) - Lambda(n,3) - 1 - phi(n)/2)",
        lhs: j2,
        rhs: hardy_j2_rhs,
        window_start: 4,
        known_exceptions: &[ex(1, "1", "-6"), ex(2, "3", "6"), ex(3, "8", "12")],
    },
    IdentityCheck {
        id: "HONS-P3",
        description: "p(n,3) = <n^2/12>",
        lhs: p3,
        rhs: hons_p3_rhs,
        window_start: 1,
        known_exceptions: &[],
    },
    IdentityCheck {
        id: "HONS-J2",
        description: "J2(n) = 12(<n^2/12> - Lambda(n,3))",
        lhs: j2,
        rhs: hons_j2_rhs,
        window_start: 4,
        known_exceptions: J2_EXCEPTIONS,
    },
    IdentityCheck {
        id: "W-P2A",
        description: "p(n,2) = <(2n-1)/4>",
        lhs: p2,
        rhs: w_p2a_rhs,
        window_start: 1,
        known_exceptions: &[],
    },
    IdentityCheck {
        id: "W-P2B",
        description: "p(n,2) = (2n - 1 + (-1)^n)/4",
        lhs: p2,
        rhs: w_p2b_rhs,
        window_start: 1,
        known_exceptions: &[],
    },
    IdentityCheck {
        id: "W-P3",
        description: "p(n,3) = (6n^2 - 7 - 9(-1)^n + 16cos(2 pi n/3))/72",
        lhs: p3,
        rhs: w_p3_rhs,
        window_start: 1,
        known_exceptions: &[],
    },
    IdentityCheck {
        id: "W-PHI",
        description: "phi(n) = n + ((-1)^n - 1)/2 - 2 Lambda(n,2)",
        lhs: phi,
        rhs: w_phi_rhs,
        window_start: 3,
        known_exceptions: PHI_EXCEPTIONS,
    },
    IdentityCheck {
        id: "W-J2",
        description: "J2(n) = n^2 + (16cos(2 pi n/3) - 7 - 9(-1)^n)/6 - 12 Lambda(n,3)",
        lhs: j2,
        rhs: w_j2_rhs,
        window_start: 4,
        known_exceptions: J2_EXCEPTIONS,
    },
    IdentityCheck {
        id: "COMB-PHI",
        description: "phi(n) = 2(<(n+3)^2/12> - Lambda(n,2) - 1 - p(n,3))",
        lhs: phi,
        rhs: comb_phi_rhs,
        window_start: 3,
        known_exceptions: PHI_EXCEPTIONS,
    },
    IdentityCheck {
        id: "COMB-J2",
        description: "J2(n) = 12(<(n+3)^2/12> - Lambda(n,3) - 1 - p(n,2))",
        lhs: j2,
        rhs: comb_j2_rhs,
        window_start: 4,
        known_exceptions: J2_EXCEPTIONS,
    },
    IdentityCheck {
        id: "PSI-A",
        description: "psi(n) = J2(n) / (2(p(n,2) - Lambda(n,2)))",
        lhs: psi,
        rhs: psi_a_rhs,
        window_start: 3,
        known_exceptions: &[
            KnownException {
                n: 1,
                lhs: Some("1"),
                rhs: None,
            },
            ex(2, "3", "3/2"),
        ],
    },
    IdentityCheck {
        id: "PSI-B",
        description: "psi(n) phi(n) = 12(p(n,3) - Lambda(n,3))",
        lhs: psi_phi,
        rhs: eb_j2_rhs,
        window_start: 4,
        known_exceptions: J2_EXCEPTIONS,
    },
];

pub fn registry() -> &'static [IdentityCheck] {
    &REGISTRY
}

pub fn find(id: &str) -> Result<&'static IdentityCheck> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// One evaluated point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub n: u64,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
}

impl Evaluation {
    pub fn agrees(&self) -> bool {
        self.lhs.is_some() && self.lhs == self.rhs
    }
}

fn show(v: &Option<Rational>) -> String {
    v.as_ref().map_or_else(|| "undefined".to_string(), |r| r.to_string())
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = {}: {} vs {}", self.n, show(&self.lhs), show(&self.rhs))
    }
}

pub fn evaluate(check: &IdentityCheck, n: u64) -> Evaluation {
    Evaluation {
        n,
        lhs: (check.lhs)(n),
        rhs: (check.rhs)(n),
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub id: &'static str,
    pub n_lo: u64,
    pub n_hi: u64,
    /// Points inside the window that were compared.
    pub checked: u64,
    /// In-window disagreements; these are failures.
    pub mismatches: Vec<Evaluation>,
    /// Below-window points that disagree; informational only.
    pub exceptions: Vec<Evaluation>,
    /// Wall time; zero on targets without a clock.
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

// wasm32-unknown-unknown has no clock; timings read zero there.
#[cfg(not(target_arch = "wasm32"))]
mod clock {
    use std::time::{Duration, Instant};

    pub fn start() -> Instant {
        Instant::now()
    }

    pub fn since(t: Instant) -> Duration {
        t.elapsed()
    }
}

#[cfg(target_arch = "wasm32")]
mod clock {
    use std::time::Duration;

    pub fn start() {}

    pub fn since(_: ()) -> Duration {
        Duration::ZERO
    }
}

pub fn verify(id: &str, n_lo: u64, n_hi: u64) -> Result<VerificationReport> {
    let check = find(id)?;
    if n_lo < 1 || n_lo > n_hi {
        return Err(Error::InvalidRange { lo: n_lo, hi: n_hi });
    }
    let start = clock::start();
    let mut report = VerificationReport {
        id: check.id,
        n_lo,
        n_hi,
        checked: 0,
        mismatches: Vec::new(),
        exceptions: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for n in n_lo..=n_hi {
        let e = evaluate(check, n);
        if check.in_window(n) {
            report.checked += 1;
            if !e.agrees() {
                report.mismatches.push(e);
            }
        } else if !e.agrees() {
            report.exceptions.push(e);
        }
    }
    report.elapsed = clock::since(start);
    Ok(report)
}

/// `true` when the recorded exception still disagrees and prints as recorded.
pub fn exception_confirmed(check: &IdentityCheck, ex: &KnownException) -> bool {
    let e = evaluate(check, ex.n);
    let text = |v: &Option<Rational>| v.as_ref().map(|r| r.to_string());
    !e.agrees()
        && text(&e.lhs).as_deref() == ex.lhs
        && text(&e.rhs).as_deref() == ex.rhs
        && !check.in_window(ex.n)
}

/// `n² mod 12`, used to show `⟨n²/12⟩` never lands on a half.
pub fn square_residue_mod_12(n: u64) -> u64 {
    (n % 12) * (n % 12) % 12
}
