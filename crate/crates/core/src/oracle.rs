//! Brute-force ground truth: checks a single x directly and scans ranges
//! exhaustively. Deliberately independent of the sieve: nothing here
//! touches quadruples or congruences, so the two can cross-check each
//! other.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::cf::select_approx;
use crate::numeric::isqrt;
use crate::GoodTriplet;

/// Test whether x is the first component of a good triplet.
///
/// Only the two squares bracketing x³ can be within √x of it, so it
/// suffices to try y = ⌊√(x³)⌋ and its successor. Returns the triplet with
/// the closer y, or `None` when the gap k is zero or k² ≥ x.
pub fn goodness(x: &BigUint) -> Option<GoodTriplet> {
    if *x < BigUint::from(2u32) {
        return None;
    }
    let cube = x.pow(3);
    let s = isqrt(&cube);
    let below = &cube - &s * &s;
    let s1 = &s + 1u32;
    let above = &s1 * &s1 - &cube;
    let y = if below < above { s } else { s1 };
    let k = BigInt::from(cube) - BigInt::from(&y * &y);
    if k.is_zero() || &k * &k >= BigInt::from(x.clone()) {
        return None;
    }
    // a good x is never a perfect square (k would be at least 2x^(3/2) − 1)
    let sel = select_approx(x).expect("good x is not a perfect square");
    Some(GoodTriplet {
        x: x.clone(),
        y,
        k,
        p: sel.p,
        q: sel.q,
    })
}

/// All good triplets with lo ≤ x ≤ hi, ascending by x.
///
/// Dispatches to the rayon scan when the `parallel` feature is enabled.
pub fn scan(lo: u64, hi: u64) -> Vec<GoodTriplet> {
    #[cfg(feature = "parallel")]
    {
        scan_par(lo, hi)
    }
    #[cfg(not(feature = "parallel"))]
    {
        scan_seq(lo, hi)
    }
}

/// Sequential scan; the fallback used when `parallel` is disabled, and the
/// baseline the benchmarks compare against.
pub fn scan_seq(lo: u64, hi: u64) -> Vec<GoodTriplet> {
    (lo..=hi)
        .filter_map(|x| goodness(&BigUint::from(x)))
        .collect()
}

/// Data-parallel scan over the range; results are merged back in x order.
#[cfg(feature = "parallel")]
pub fn scan_par(lo: u64, hi: u64) -> Vec<GoodTriplet> {
    let mut found: Vec<GoodTriplet> = (lo..=hi)
        .into_par_iter()
        .filter_map(|x| goodness(&BigUint::from(x)))
        .collect();
    found.sort_by(|a, b| a.x.cmp(&b.x));
    found
}

/// Render the Hall ratio √x/|k| rounded half-up to two decimals, using
/// integer scaling only: ⌊√(x·10⁸)⌋ supplies four guard digits.
///
/// Returns `None` when k = 0 (the ratio is undefined).
pub fn hall_ratio(x: &BigUint, k: &BigInt) -> Option<String> {
    if k.is_zero() {
        return None;
    }
    let scaled = isqrt(&(x * BigUint::from(100_000_000u64)));
    let abs_k = k.magnitude();
    // round-half-up of scaled/(100·|k|): ⌊(2·scaled + 100·|k|) / (200·|k|)⌋
    let hundredths = (BigUint::from(2u32) * scaled + BigUint::from(100u32) * abs_k)
        / (BigUint::from(200u32) * abs_k);
    let whole = &hundredths / BigUint::from(100u32);
    let frac = hundredths % BigUint::from(100u32);
    Some(format!("{whole}.{frac:02}"))
}
