//! Exact arithmetic for restricted integer partitions.
//!
//! The crate counts partitions of `n` into exactly `k` parts by two
//! independent formulas (a recursion over the smallest part and a nested
//! floor-sum), evaluates the generalized smallest-parts sums
//! `spt_(a,b)`, counts partitions whose parts share a common factor by
//! inclusion-exclusion over the divisors of `n`, and checks a catalog of
//! identities tying those counts to Euler's, Jordan's and Dedekind's
//! totient functions.
//!
//! Every formula has a brute-force counterpart in [`enumerate`] so the
//! test suites can compare the two on small inputs.

pub mod enumerate;
pub mod error;
pub mod identities;
pub mod numtheory;
pub mod partition_fn;
pub mod qseries;
pub mod relprime;
pub mod spt;

pub use error::{Error, Result};
