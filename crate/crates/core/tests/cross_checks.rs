//! Cross-module checks: the sieve against the brute-force oracle, the
//! convergent machinery against its exact inequalities, and the worked
//! micro-example in both directions.

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};

use hall_core::cf;
use hall_core::oracle;
use hall_core::polys::{self, Quadruple, RecoveryOutcome};
use hall_core::sieve;

fn u(n: u64) -> BigUint {
    BigUint::from(n)
}

#[test]
fn oracle_scan_to_a_million() {
    let found = oracle::scan(2, 1_000_000);
    let xs: Vec<u64> = found
        .iter()
        .map(|t| t.x.to_string().parse().unwrap())
        .collect();
    assert_eq!(
        xs,
        vec![2, 5234, 8158, 93844, 367806, 421351, 720114, 939787]
    );
    for t in &found {
        assert!(t.is_consistent());
    }
}

#[test]
fn every_small_triplet_satisfies_the_quadruple_bounds() {
    for t in oracle::scan(2, 1_000_000) {
        let (_, report) = cf::quadruple_from_triplet(&t).unwrap();
        assert!(
            report.all_hold(),
            "bounds {:?} failed for x={}",
            report.failures(),
            t.x
        );
    }
}

#[test]
fn sieve_finds_every_reachable_small_triplet() {
    // completeness: any oracle triplet whose selected q lies in the searched
    // range and whose c fits the enumeration bound must be rediscovered
    let q_hi = 8u64;
    let summary = sieve::search_range(2, q_hi, q_hi, 1, |_| {});
    let sieve_xs: Vec<&BigUint> = summary.triplets.iter().map(|t| &t.x).collect();

    for t in oracle::scan(2, 1_000_000) {
        let (quad, _) = cf::quadruple_from_triplet(&t).unwrap();
        let q: u64 = quad.q.to_string().parse().unwrap();
        let within_c = quad.c <= u(3 * q * q_hi);
        if (2..=q_hi).contains(&q) && within_c {
            assert!(
                sieve_xs.contains(&&t.x),
                "sieve missed x={} (q={q}, c={})",
                t.x,
                quad.c
            );
        }
    }
}

#[test]
fn sieve_output_below_a_million_matches_oracle_except_x2() {
    let summary = sieve::search_range(2, 8, 8, 2, |_| {});
    let sieve_small: Vec<BigUint> = summary
        .triplets
        .iter()
        .filter(|t| t.x <= u(1_000_000))
        .map(|t| t.x.clone())
        .collect();
    let oracle_minus_2: Vec<BigUint> = oracle::scan(2, 1_000_000)
        .into_iter()
        .map(|t| t.x)
        .filter(|x| *x != u(2))
        .collect();
    assert_eq!(sieve_small, oracle_minus_2);
}

#[test]
fn worked_example_is_a_bidirectional_fixed_point() {
    let quad = Quadruple::new(3, 1, 1, -161);
    let out = polys::recover(&quad);
    let t = match out {
        RecoveryOutcome::Good(t) => t,
        other => panic!("expected recovery, got {other:?}"),
    };
    assert_eq!(
        (&t.x, &t.y, &t.k),
        (&u(5234), &u(378_661), &BigInt::from(-17))
    );

    let (back, report) = cf::quadruple_from_triplet(&t).unwrap();
    assert_eq!(back, quad);
    assert!(report.all_hold());
}

#[test]
fn convergent_inequalities_hold_exactly() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    while checked < 100 {
        let x: u64 = rng.gen_range(2..=1_000_000_000_000);
        let xb = u(x);
        let root = hall_core::numeric::isqrt(&xb);
        if &root * &root == xb {
            continue;
        }
        checked += 1;

        let mut stream = cf::cf_stream(&xb).unwrap();
        let mut prev = stream.next().unwrap();
        let mut took = 0usize;
        for conv in stream {
            // unimodularity of consecutive convergents
            let det = BigInt::from(conv.h.clone()) * BigInt::from(prev.k.clone())
                - BigInt::from(prev.h.clone()) * BigInt::from(conv.k.clone());
            assert_eq!(det.magnitude(), &u(1), "unimodularity failed for x={x}");

            // 1/(k(k+k')) < |h/k − √x| < 1/(kk'), via squared cross products
            let (h, k, k_next) = (&prev.h, &prev.k, &conv.k);
            let upper_den = k * k_next;
            let hi = h * k_next;
            assert!(
                (BigInt::from(hi.clone()) - 1u32).pow(2) < BigInt::from(&xb * (&upper_den * &upper_den)),
                "upper-left fails for x={x}"
            );
            assert!(
                &xb * (&upper_den * &upper_den) < (&hi + 1u32).pow(2),
                "upper-right fails for x={x}"
            );
            let lower_den = k * (k + k_next);
            let lo = h * (k + k_next);
            let lhs = BigInt::from(&xb * (&lower_den * &lower_den));
            let outside_left = lhs < (BigInt::from(lo.clone()) - 1u32).pow(2);
            let outside_right = lhs > (BigInt::from(lo.clone()) + 1u32).pow(2);
            assert!(
                outside_left || outside_right,
                "lower bound fails for x={x}"
            );

            prev = conv;
            took += 1;
            if prev.k.pow(6) > xb && took >= 4 {
                break;
            }
        }
    }
}

#[test]
fn selected_convergent_is_unique_crossing() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let x: u64 = rng.gen_range(2..=1_000_000_000);
        let xb = u(x);
        let root = hall_core::numeric::isqrt(&xb);
        if &root * &root == xb {
            continue;
        }
        let sel = cf::select_approx(&xb).unwrap();
        assert!(sel.q.pow(6) < xb);
        assert!(sel.q_next.pow(6) > xb);
        // denominators never decrease, so the crossing index is unique
        let ks: Vec<BigUint> = cf::cf_stream(&xb)
            .unwrap()
            .take(8)
            .map(|c| c.k)
            .collect();
        for w in ks.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }
}
