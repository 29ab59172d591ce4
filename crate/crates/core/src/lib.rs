//! Search and verification toolkit for good examples of Hall's conjecture.
//!
//! A *good example* is a pair of naturals (x, y) whose cube/square gap
//! k = x³ − y² is nonzero yet smaller than √x in absolute value. Hall's
//! conjecture asserts |k| > C·√x for some constant C; good examples probe
//! how small that constant could be.
//!
//! The crate provides:
//!
//! - [`oracle`]: an exhaustive brute-force scanner that serves as ground
//!   truth for small x, plus the Hall-ratio renderer.
//! - [`sieve`]: a congruence sieve over quadruples (q, f, c, h) that finds
//!   every good example with x < q_max⁶ without visiting each x.
//! - [`polys`]: the Hall polynomials B, C, F, H, their congruence
//!   predicates, and the exact recovery of (x, y, k) from a quadruple.
//! - [`cf`]: continued-fraction convergents of √x and the convergent
//!   selection rule that links a good example back to its quadruple.
//! - [`numeric`]: exact big-integer floor roots, modular inverse, and a
//!   CRT for possibly non-coprime moduli.
//! - [`catalog`]: the 50 published good examples used as a regression
//!   fixture by the `verify` and `table` commands.
//!
//! All arithmetic is exact: every √ and sixth-root comparison is done by
//! cross-multiplied integer power comparison, never floating point.
//!
//! With the default `parallel` feature the oracle scan and the sieve
//! drivers distribute work with rayon; disabling it falls back to the
//! sequential implementations with identical results.

use num_bigint::{BigInt, BigUint};

pub mod catalog;
pub mod cf;
pub mod numeric;
pub mod oracle;
pub mod polys;
pub mod sieve;

/// A verified solution of x³ − y² = k with 0 < |k| < √x, together with the
/// rational approximation p/q ≈ √x that produced or verifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodTriplet {
    pub x: BigUint,
    pub y: BigUint,
    pub k: BigInt,
    pub p: BigUint,
    pub q: BigUint,
}

impl GoodTriplet {
    /// Re-checks the defining arithmetic: x³ − y² = k, k ≠ 0, k² < x.
    pub fn is_consistent(&self) -> bool {
        use num_traits::Zero;
        let cube = BigInt::from(self.x.pow(3));
        let ysq = BigInt::from(self.y.pow(2));
        let k = cube - ysq;
        k == self.k && !k.is_zero() && (&k * &k) < BigInt::from(self.x.clone())
    }
}
