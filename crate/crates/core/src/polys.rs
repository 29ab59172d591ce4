//! The Hall polynomials and the exact recovery of a triplet from their
//! values.
//!
//! ```text
//! B(q, p, x)    = p² − q²x
//! C(q, p, x, y) = p³ − 3pq²x + 2q³y
//! F(q, p, x, y) = 4pC − 3B²
//! H(q, p, x, y) = 9FB − 8C²
//! ```
//!
//! When p/q is a close rational approximation to √x and (x, y, k) is a
//! good triplet, the values of C, F, H are tiny compared to their inputs
//! (see [`crate::cf::BoundsReport`]). Conversely, the defining equations
//! invert exactly:
//!
//! ```text
//! B = (H + 8C²)/(9F)    p = (F + 3B²)/(4C)
//! x = (p² − B)/q²       y = (3pq²x − p³ + C)/(2q³)
//! ```
//!
//! [`recover`] walks that division chain, rejecting as soon as any quotient
//! fails to be an integer, and accepts only candidates with 0 < k² < x.
//! The sieve enumerates candidate (q, f, c, h) tuples and funnels each one
//! through [`recover`].

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::GoodTriplet;

/// Sieve state: a candidate (q, f, c, h) where f, c, h stand for the values
/// of F, C, H at some hidden (p, x, y). f and h are signed; c is positive.
///
/// For the true quadruple of a good triplet, |f| ≤ 8q, |h| ≤ 72q⁴ and
/// 0 < c < 3q·x^(1/6) + 1, with gcd(f, q) = 1. The sieve keeps q ≥ 2;
/// q = 1 arises only when deriving the quadruple of x = 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadruple {
    pub q: BigUint,
    pub f: BigInt,
    pub c: BigUint,
    pub h: BigInt,
}

/// Why [`recover`] rejected a quadruple. These are ordinary search
/// outcomes, not faults; the variants appear in the order the checks run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    BNotInteger,
    PNotInteger,
    XNotInteger,
    YNotInteger,
    KZero,
    KTooLarge,
    Nonpositive,
}

/// Result of running the recovery chain on a quadruple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecoveryOutcome {
    Good(GoodTriplet),
    Rejected(RejectReason),
}

impl RecoveryOutcome {
    pub fn triplet(&self) -> Option<&GoodTriplet> {
        match self {
            RecoveryOutcome::Good(t) => Some(t),
            RecoveryOutcome::Rejected(_) => None,
        }
    }
}

fn int(u: &BigUint) -> BigInt {
    BigInt::from(u.clone())
}

/// B(q, p, x) = p² − q²x
pub fn eval_b(q: &BigUint, p: &BigUint, x: &BigUint) -> BigInt {
    int(&p.pow(2)) - int(&(q.pow(2) * x))
}

/// C(q, p, x, y) = p³ − 3pq²x + 2q³y
pub fn eval_c(q: &BigUint, p: &BigUint, x: &BigUint, y: &BigUint) -> BigInt {
    int(&p.pow(3)) - 3 * int(&(p * q.pow(2) * x)) + 2 * int(&(q.pow(3) * y))
}

/// F(q, p, x, y) = 4pC − 3B²
pub fn eval_f(q: &BigUint, p: &BigUint, x: &BigUint, y: &BigUint) -> BigInt {
    let b = eval_b(q, p, x);
    let c = eval_c(q, p, x, y);
    4 * int(p) * c - 3 * &b * &b
}

/// H(q, p, x, y) = 9FB − 8C²
pub fn eval_h(q: &BigUint, p: &BigUint, x: &BigUint, y: &BigUint) -> BigInt {
    let b = eval_b(q, p, x);
    let c = eval_c(q, p, x, y);
    let f = eval_f(q, p, x, y);
    9 * f * b - 8 * &c * &c
}

/// F in fully expanded form: p⁴ − (6p²x − 8pqy + 3q²x²)q².
///
/// Serves as an independent route to the same value as [`eval_f`].
pub fn expand_f(q: &BigUint, p: &BigUint, x: &BigUint, y: &BigUint) -> BigInt {
    let (q, p, x, y) = (int(q), int(p), int(x), int(y));
    let paren = 6 * &p * &p * &x - 8 * &p * &q * &y + 3 * &q * &q * &x * &x;
    p.pow(4) - paren * &q * &q
}

/// H in fully expanded form:
/// p⁶ − (15p⁴x − 40p³qy + 45p²q²x² − 24pq³xy − 27q⁴x³ + 32q⁴y²)q².
pub fn expand_h(q: &BigUint, p: &BigUint, x: &BigUint, y: &BigUint) -> BigInt {
    let (q, p, x, y) = (int(q), int(p), int(x), int(y));
    let q2 = &q * &q;
    let q3 = &q2 * &q;
    let q4 = &q3 * &q;
    let paren = 15 * p.pow(4) * &x - 40 * p.pow(3) * &q * &y + 45 * &p * &p * &q2 * &x * &x
        - 24 * &p * &q3 * &x * &y
        - 27 * &q4 * x.pow(3)
        + 32 * &q4 * &y * &y;
    p.pow(6) - paren * &q2
}

/// The six congruences satisfied by the polynomial values at any integer
/// point (they are identities, so all hold for every input):
///
/// 1. C ≡ p³ (mod q²)
/// 2. F ≡ p⁴ (mod q²)
/// 3. H ≡ p⁶ (mod q²)
/// 4. H ≡ −8C² (mod 9|F|), vacuously true when F = 0
/// 5. p⁴ − 2pC + F ≡ 0 (mod q³)
/// 6. 4p⁶ − 5p³C + H ≡ 0 (mod q³)
pub fn check_congruences(q: &BigUint, p: &BigUint, x: &BigUint, y: &BigUint) -> [bool; 6] {
    let c = eval_c(q, p, x, y);
    let f = eval_f(q, p, x, y);
    let h = eval_h(q, p, x, y);
    let p_int = int(p);
    let q2 = int(&q.pow(2));
    let q3 = int(&q.pow(3));

    let divisible = |n: &BigInt, m: &BigInt| (n % m).is_zero();

    [
        divisible(&(&c - p_int.pow(3)), &q2),
        divisible(&(&f - p_int.pow(4)), &q2),
        divisible(&(&h - p_int.pow(6)), &q2),
        f.is_zero() || divisible(&(&h + 8 * &c * &c), &(9 * f.abs())),
        divisible(&(p_int.pow(4) - 2 * &p_int * &c + &f), &q3),
        divisible(&(4 * p_int.pow(6) - 5 * p_int.pow(3) * &c + &h), &q3),
    ]
}

fn exact_div(num: BigInt, den: &BigInt) -> Option<BigInt> {
    let (quot, rem) = num.div_rem(den);
    rem.is_zero().then_some(quot)
}

/// Values produced by [`division_chain`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainValues {
    pub b: BigInt,
    pub p: BigInt,
    pub x: BigInt,
    pub y: BigInt,
}

/// The raw inversion b → p → x → y from (q, f, c, h), with divisibility
/// checks but no positivity or goodness gates. `c` is signed here so the
/// chain can be exercised on arbitrary inputs; [`recover`] adds the gates.
///
/// Requires f ≠ 0 and c ≠ 0 (the true values always satisfy this).
pub fn division_chain(
    q: &BigUint,
    f: &BigInt,
    c: &BigInt,
    h: &BigInt,
) -> Result<ChainValues, RejectReason> {
    debug_assert!(!f.is_zero() && !c.is_zero());
    let b = exact_div(h + 8 * c * c, &(9 * f)).ok_or(RejectReason::BNotInteger)?;
    let p = exact_div(f + 3 * &b * &b, &(4 * c)).ok_or(RejectReason::PNotInteger)?;
    let q2 = int(&q.pow(2));
    let x = exact_div(&p * &p - &b, &q2).ok_or(RejectReason::XNotInteger)?;
    let y = exact_div(3 * &p * &q2 * &x - p.pow(3) + c, &(2 * int(&q.pow(3))))
        .ok_or(RejectReason::YNotInteger)?;
    Ok(ChainValues { b, p, x, y })
}

/// Recover a good triplet from a quadruple, or report the first failing
/// check. The checks run in a fixed order: b, p, x, y integrality
/// (interleaved with positivity), then k ≠ 0 and k² < x.
pub fn recover(quad: &Quadruple) -> RecoveryOutcome {
    use RejectReason::*;
    debug_assert!(
        !quad.f.is_zero() && !quad.c.is_zero(),
        "quadruple invariant: f != 0 and c > 0"
    );
    let reject = |r| RecoveryOutcome::Rejected(r);

    let c = int(&quad.c);
    let b = match exact_div(&quad.h + 8 * &c * &c, &(9 * &quad.f)) {
        Some(b) => b,
        None => return reject(BNotInteger),
    };
    let p = match exact_div(&quad.f + 3 * &b * &b, &(4 * &c)) {
        Some(p) => p,
        None => return reject(PNotInteger),
    };
    if !p.is_positive() {
        return reject(Nonpositive);
    }
    let q2 = int(&quad.q.pow(2));
    let x = match exact_div(&p * &p - &b, &q2) {
        Some(x) => x,
        None => return reject(XNotInteger),
    };
    if x < BigInt::from(2) {
        return reject(Nonpositive);
    }
    let y = match exact_div(3 * &p * &q2 * &x - p.pow(3) + &c, &(2 * int(&quad.q.pow(3)))) {
        Some(y) => y,
        None => return reject(YNotInteger),
    };
    if !y.is_positive() {
        return reject(Nonpositive);
    }
    let k = x.pow(3) - &y * &y;
    if k.is_zero() {
        return reject(KZero);
    }
    if &k * &k >= x {
        return reject(KTooLarge);
    }
    RecoveryOutcome::Good(GoodTriplet {
        x: x.to_biguint().unwrap(),
        y: y.to_biguint().unwrap(),
        k,
        p: p.to_biguint().unwrap(),
        q: quad.q.clone(),
    })
}

impl Quadruple {
    pub fn new(q: u64, f: i64, c: u64, h: i64) -> Self {
        Quadruple {
            q: BigUint::from(q),
            f: BigInt::from(f),
            c: BigUint::from(c),
            h: BigInt::from(h),
        }
    }
}

impl std::fmt::Display for Quadruple {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fm, "(q={}, f={}, c={}, h={})", self.q, self.f, self.c, self.h)
    }
}
