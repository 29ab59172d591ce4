//! Continued-fraction expansion of √x and the convergent-selection rule
//! that attaches a quadruple to a good triplet.
//!
//! For non-square x the expansion is computed with the exact (m, d, a)
//! recurrence for quadratic irrationals, so every partial quotient and
//! convergent is produced by integer arithmetic alone. Only the first few
//! convergents are ever needed: the selection rule stops at the first
//! denominator whose sixth power exceeds x.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::numeric::isqrt;
use crate::polys::{self, Quadruple};
use crate::GoodTriplet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error("sqrt({0}) is rational: {0} is a perfect square")]
    PerfectSquare(BigUint),
    #[error("continued fraction of sqrt(x) needs x >= 2, got {0}")]
    TooSmall(BigUint),
}

/// One term of the continued fraction of √x: partial quotient `a` and the
/// convergent numerator/denominator `h`/`k`.
///
/// Consecutive convergents satisfy h·k′ − h′·k = ±1 and k is
/// non-decreasing (strictly increasing from the second term on).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    pub a: BigUint,
    pub h: BigUint,
    pub k: BigUint,
}

/// Lazy stream of convergents of √x. Never terminates on its own (√x is
/// irrational); callers take as many terms as they need.
#[derive(Debug, Clone)]
pub struct ConvergentStream {
    x: BigUint,
    a0: BigUint,
    // (m, d, a) state of the most recently emitted term
    m: BigUint,
    d: BigUint,
    a: BigUint,
    h_prev: BigUint,
    h_pprev: BigUint,
    k_prev: BigUint,
    k_pprev: BigUint,
    started: bool,
}

impl Iterator for ConvergentStream {
    type Item = Convergent;

    fn next(&mut self) -> Option<Convergent> {
        if !self.started {
            self.started = true;
            return Some(Convergent {
                a: self.a0.clone(),
                h: self.h_prev.clone(),
                k: self.k_prev.clone(),
            });
        }
        // m' = a·d − m;  d' = (x − m'²)/d;  a' = ⌊(a0 + m')/d'⌋
        let m_next = &self.a * &self.d - &self.m;
        let d_next = (&self.x - &m_next * &m_next) / &self.d;
        let a_next = (&self.a0 + &m_next) / &d_next;
        let h = &a_next * &self.h_prev + &self.h_pprev;
        let k = &a_next * &self.k_prev + &self.k_pprev;
        self.m = m_next;
        self.d = d_next;
        self.a = a_next.clone();
        self.h_pprev = std::mem::replace(&mut self.h_prev, h.clone());
        self.k_pprev = std::mem::replace(&mut self.k_prev, k.clone());
        Some(Convergent { a: a_next, h, k })
    }
}

/// Start the convergent stream of √x. Rejects x < 2 and perfect squares
/// (whose square root is rational and has no infinite expansion).
pub fn cf_stream(x: &BigUint) -> Result<ConvergentStream, CfError> {
    if *x < BigUint::from(2u32) {
        return Err(CfError::TooSmall(x.clone()));
    }
    let a0 = isqrt(x);
    if &a0 * &a0 == *x {
        return Err(CfError::PerfectSquare(x.clone()));
    }
    Ok(ConvergentStream {
        x: x.clone(),
        a0: a0.clone(),
        m: BigUint::zero(),
        d: BigUint::one(),
        a: a0.clone(),
        h_prev: a0,
        h_pprev: BigUint::one(),
        k_prev: BigUint::one(),
        k_pprev: BigUint::zero(),
        started: false,
    })
}

/// The convergent p/q selected for x, plus the following denominator Q.
///
/// q is the last denominator with q⁶ < x and Q the first with Q⁶ > x;
/// equality is impossible because x is not a perfect sixth power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectedApprox {
    pub p: BigUint,
    pub q: BigUint,
    pub q_next: BigUint,
}

/// Pick the convergent h_j/k_j of √x with k_j⁶ < x < k_{j+1}⁶.
pub fn select_approx(x: &BigUint) -> Result<SelectedApprox, CfError> {
    let mut stream = cf_stream(x)?;
    let mut prev = stream.next().expect("stream is infinite");
    for conv in stream {
        if conv.k.pow(6) > *x {
            return Ok(SelectedApprox {
                p: prev.h,
                q: prev.k,
                q_next: conv.k,
            });
        }
        prev = conv;
    }
    unreachable!("denominators grow without bound")
}

/// Which of the expected bounds the quadruple of a triplet satisfies, each
/// checked by exact integer power comparison:
///
/// - `c_positive`: 0 < C
/// - `c_upper`: C < 3q·x^(1/6) + 1, as (C−1)⁶ < 3⁶q⁶x
/// - `f_bound`: |F| ≤ 8q
/// - `h_bound`: |H| ≤ 72q⁴
/// - `q_bound`: q⁶ < x
/// - `p_bound`: p < x^(2/3) + 1, as (p−1)³ < x²
///
/// Reported separately so a failing bound names itself; for every good
/// triplet all six hold at the selected convergent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsReport {
    pub c_positive: bool,
    pub c_upper: bool,
    pub f_bound: bool,
    pub h_bound: bool,
    pub q_bound: bool,
    pub p_bound: bool,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        self.c_positive
            && self.c_upper
            && self.f_bound
            && self.h_bound
            && self.q_bound
            && self.p_bound
    }

    /// Names of the failed bounds, empty when all hold.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.c_positive {
            out.push("c_positive");
        }
        if !self.c_upper {
            out.push("c_upper");
        }
        if !self.f_bound {
            out.push("f_bound");
        }
        if !self.h_bound {
            out.push("h_bound");
        }
        if !self.q_bound {
            out.push("q_bound");
        }
        if !self.p_bound {
            out.push("p_bound");
        }
        out
    }
}

/// Derive the quadruple (q, F, C, H) of a verified good triplet from its
/// selected convergent, and report which bounds it satisfies.
///
/// Panics if C ≤ 0, which cannot happen for a genuine good triplet.
pub fn quadruple_from_triplet(t: &GoodTriplet) -> Result<(Quadruple, BoundsReport), CfError> {
    let sel = select_approx(&t.x)?;
    let c = polys::eval_c(&sel.q, &sel.p, &t.x, &t.y);
    let f = polys::eval_f(&sel.q, &sel.p, &t.x, &t.y);
    let h = polys::eval_h(&sel.q, &sel.p, &t.x, &t.y);

    let x_int = BigInt::from(t.x.clone());
    let c_positive = c > BigInt::zero();
    let c_upper = c_positive && {
        let c_m1 = &c - 1u32;
        c_m1.pow(6) < BigInt::from(729u32) * BigInt::from(sel.q.pow(6)) * &x_int
    };
    let f_bound = *f.magnitude() <= BigUint::from(8u32) * &sel.q;
    let h_bound = *h.magnitude() <= BigUint::from(72u32) * sel.q.pow(4);
    let q_bound = sel.q.pow(6) < t.x;
    let p_bound = {
        let p_m1 = BigInt::from(sel.p.clone()) - 1u32;
        p_m1.pow(3) < &x_int * &x_int
    };

    let report = BoundsReport {
        c_positive,
        c_upper,
        f_bound,
        h_bound,
        q_bound,
        p_bound,
    };
    let quad = Quadruple {
        q: sel.q,
        f,
        c: c.to_biguint()
            .expect("C of a good triplet at its selected convergent is positive"),
        h,
    };
    Ok((quad, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn u(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn take(x: u64, n: usize) -> Vec<Convergent> {
        cf_stream(&u(x)).unwrap().take(n).collect()
    }

    #[test]
    fn sqrt2_convergents() {
        let conv = take(2, 4);
        let pairs: Vec<(u64, u64)> = conv
            .iter()
            .map(|c| {
                (
                    c.h.to_string().parse().unwrap(),
                    c.k.to_string().parse().unwrap(),
                )
            })
            .collect();
        assert_eq!(pairs, vec![(1, 1), (3, 2), (7, 5), (17, 12)]);
    }

    #[test]
    fn sqrt5234_quotients_and_convergents() {
        let conv = take(5234, 4);
        let quots: Vec<u64> = conv
            .iter()
            .map(|c| c.a.to_string().parse().unwrap())
            .collect();
        assert_eq!(quots, vec![72, 2, 1, 7]);
        assert_eq!((conv[2].h.clone(), conv[2].k.clone()), (u(217), u(3)));
        assert_eq!(conv[3].k, u(23));
    }

    #[test]
    fn rejects_perfect_square_and_small() {
        assert_eq!(cf_stream(&u(4)).unwrap_err(), CfError::PerfectSquare(u(4)));
        assert_eq!(cf_stream(&u(1)).unwrap_err(), CfError::TooSmall(u(1)));
        assert_eq!(cf_stream(&u(0)).unwrap_err(), CfError::TooSmall(u(0)));
    }

    #[test]
    fn select_examples() {
        let sel = select_approx(&u(5234)).unwrap();
        assert_eq!((sel.p, sel.q, sel.q_next), (u(217), u(3), u(23)));

        let sel = select_approx(&u(2)).unwrap();
        assert_eq!((sel.p, sel.q, sel.q_next), (u(1), u(1), u(2)));

        let sel = select_approx(&u(93844)).unwrap();
        assert_eq!((sel.p.clone(), sel.q.clone()), (u(919), u(3)));
        assert!(sel.q_next.pow(6) > u(93844));
    }

    #[test]
    fn select_bracket_holds() {
        for x in [2u64, 3, 5234, 8158, 93844, 367806, 421351, 952764389446] {
            let xb = u(x);
            let sel = select_approx(&xb).unwrap();
            assert!(sel.q.pow(6) < xb, "q bound fails for {x}");
            assert!(sel.q_next.pow(6) > xb, "Q bound fails for {x}");
        }
    }

    #[test]
    fn quadruple_of_worked_example() {
        let t = GoodTriplet {
            x: u(5234),
            y: u(378_661),
            k: BigInt::from(-17),
            p: u(217),
            q: u(3),
        };
        let (quad, report) = quadruple_from_triplet(&t).unwrap();
        assert_eq!(quad, Quadruple::new(3, 1, 1, -161));
        assert!(report.all_hold(), "failed bounds: {:?}", report.failures());
    }

    #[test]
    fn quadruple_of_x2_has_q1() {
        let t = GoodTriplet {
            x: u(2),
            y: u(3),
            k: BigInt::from(-1),
            p: u(1),
            q: u(1),
        };
        let (quad, report) = quadruple_from_triplet(&t).unwrap();
        assert_eq!(quad.q, u(1));
        assert!(report.all_hold(), "failed bounds: {:?}", report.failures());
    }
}
