//! Exact big-integer primitives shared by every other module: floor roots,
//! modular inverse, and a Chinese-Remainder combination that also handles
//! non-coprime moduli.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Floor square root: the unique s with s² ≤ n < (s+1)².
pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

/// Floor k-th root: the unique s with sᵏ ≤ n < (s+1)ᵏ. Requires k ≥ 1.
pub fn iroot(n: &BigUint, k: u32) -> BigUint {
    assert!(k >= 1, "iroot requires k >= 1");
    n.nth_root(k)
}

/// Modular inverse of a modulo m, normalized to [0, m).
///
/// Returns `None` when gcd(a, m) ≠ 1; callers use that to switch to the
/// non-coprime CRT path.
pub fn modinv(a: &BigInt, m: &BigUint) -> Option<BigUint> {
    let m_int = BigInt::from(m.clone());
    let a_red = a.mod_floor(&m_int);
    if m.is_one() {
        // everything is congruent mod 1; 0 is the canonical inverse
        return Some(BigUint::zero());
    }
    let ext = a_red.extended_gcd(&m_int);
    if !ext.gcd.is_one() {
        return None;
    }
    Some(ext.x.mod_floor(&m_int).to_biguint().unwrap())
}

/// Combined residue produced by [`crt`]: `residue` lies in [0, modulus)
/// and `modulus` is lcm(m1, m2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtResult {
    pub residue: BigUint,
    pub modulus: BigUint,
}

/// Solve r ≡ r1 (mod m1), r ≡ r2 (mod m2) for general (possibly
/// non-coprime) moduli.
///
/// Returns `None` when r1 ≢ r2 (mod gcd(m1, m2)), i.e. the system has no
/// solution and the caller's candidate branch is empty.
pub fn crt(r1: &BigInt, m1: &BigUint, r2: &BigInt, m2: &BigUint) -> Option<CrtResult> {
    assert!(!m1.is_zero() && !m2.is_zero(), "crt requires m1, m2 >= 1");
    let m1_int = BigInt::from(m1.clone());
    let m2_int = BigInt::from(m2.clone());
    let g = m1_int.gcd(&m2_int);
    let diff = r2 - r1;
    if !(&diff % &g).is_zero() {
        return None;
    }
    let lcm = &m1_int / &g * &m2_int;
    let m2_red = (&m2_int / &g).to_biguint().unwrap();
    // r = r1 + m1·t with t ≡ (diff/g)·(m1/g)⁻¹ (mod m2/g); m1/g and m2/g
    // are coprime, so the inverse exists.
    let t = if m2_red.is_one() {
        BigInt::zero()
    } else {
        let inv = modinv(&(&m1_int / &g), &m2_red).expect("m1/g and m2/g are coprime");
        ((diff / &g) * BigInt::from(inv)).mod_floor(&BigInt::from(m2_red))
    };
    let residue = (r1 + m1_int * t).mod_floor(&lcm);
    Some(CrtResult {
        residue: residue.to_biguint().unwrap(),
        modulus: lcm.to_biguint().unwrap(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Num;
    use proptest::prelude::*;

    fn big(n: u128) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn isqrt_zero_and_perfect_square() {
        assert_eq!(isqrt(&big(0)), big(0));
        assert_eq!(isqrt(&big(16)), big(4));
    }

    #[test]
    fn isqrt_of_5234_cubed() {
        let n = big(5234).pow(3);
        assert_eq!(n, big(143_384_152_904));
        let s = isqrt(&n);
        assert_eq!(s, big(378_660));
        assert!(&s * &s <= n);
        let s1 = &s + 1u32;
        assert!(&s1 * &s1 > n);
    }

    #[test]
    fn isqrt_exhaustive_small() {
        for n in 0u64..=1_000_000 {
            let n = BigUint::from(n);
            let s = isqrt(&n);
            assert!(&s * &s <= n);
            assert!((&s + 1u32) * (&s + 1u32) > n);
        }
    }

    #[test]
    fn iroot_examples() {
        assert_eq!(iroot(&big(64), 6), big(2));
        assert_eq!(iroot(&big(5234), 6), big(4));
        assert!(big(4).pow(6) <= big(5234) && big(5234) < big(5).pow(6));
        let n = BigUint::from_str_radix("1000000000000000000000000", 10).unwrap();
        assert_eq!(iroot(&n, 6), big(10_000));
    }

    #[test]
    fn modinv_examples() {
        assert_eq!(modinv(&BigInt::from(3), &big(7)), Some(big(5)));
        for m in [2u32, 3, 10, 97, 1000] {
            assert_eq!(modinv(&BigInt::one(), &BigUint::from(m)), Some(big(1)));
        }
        assert_eq!(modinv(&BigInt::from(6), &big(9)), None);
    }

    #[test]
    fn modinv_negative_input() {
        // -4 ≡ 3 (mod 7), inverse 5
        assert_eq!(modinv(&BigInt::from(-4), &big(7)), Some(big(5)));
    }

    #[test]
    fn crt_examples() {
        let r = crt(&BigInt::from(2), &big(3), &BigInt::from(3), &big(5)).unwrap();
        assert_eq!((r.residue, r.modulus), (big(8), big(15)));

        let r = crt(&BigInt::from(1), &big(27), &BigInt::from(1), &big(9)).unwrap();
        assert_eq!((r.residue, r.modulus), (big(1), big(27)));

        assert_eq!(crt(&BigInt::zero(), &big(4), &BigInt::one(), &big(2)), None);
    }

    #[test]
    fn crt_matches_brute_force_small_moduli() {
        for m1 in 1u64..=30 {
            for m2 in 1u64..=30 {
                let l = num_integer::lcm(m1, m2);
                for r1 in 0..m1 {
                    for r2 in 0..m2 {
                        let brute = (0..l).find(|r| r % m1 == r1 && r % m2 == r2);
                        let got = crt(
                            &BigInt::from(r1),
                            &BigUint::from(m1),
                            &BigInt::from(r2),
                            &BigUint::from(m2),
                        );
                        match (brute, got) {
                            (None, None) => {}
                            (Some(r), Some(res)) => {
                                assert_eq!(res.residue, BigUint::from(r));
                                assert_eq!(res.modulus, BigUint::from(l));
                            }
                            (b, g) => panic!(
                                "crt({r1},{m1},{r2},{m2}): brute {b:?} vs crt {g:?}"
                            ),
                        }
                    }
                }
            }
        }
    }

    fn arb_biguint(max_bytes: usize) -> impl Strategy<Value = BigUint> {
        proptest::collection::vec(any::<u8>(), 1..=max_bytes)
            .prop_map(|bytes| BigUint::from_bytes_be(&bytes))
    }

    proptest! {
        #[test]
        fn iroot_bracket_random(n in arb_biguint(64), k in prop::sample::select(vec![2u32, 3, 6])) {
            let s = iroot(&n, k);
            prop_assert!(s.pow(k) <= n);
            prop_assert!((&s + 1u32).pow(k) > n);
        }

        #[test]
        fn modinv_random_coprime(a in 1u64.., m in 2u64..) {
            let g = num_integer::gcd(a, m);
            let (a, m) = (a / g, m / g);
            prop_assume!(m >= 2);
            let inv = modinv(&BigInt::from(a), &BigUint::from(m)).unwrap();
            let prod = (BigUint::from(a % m) * &inv) % BigUint::from(m);
            prop_assert_eq!(prod, BigUint::one());
        }

        #[test]
        fn crt_result_satisfies_both_congruences(
            r1 in -500i64..500, m1 in 1u64..200,
            r2 in -500i64..500, m2 in 1u64..200,
        ) {
            if let Some(res) = crt(&BigInt::from(r1), &BigUint::from(m1),
                                   &BigInt::from(r2), &BigUint::from(m2)) {
                let resi = BigInt::from(res.residue.clone());
                prop_assert!((&resi - r1).mod_floor(&BigInt::from(m1)).is_zero());
                prop_assert!((&resi - r2).mod_floor(&BigInt::from(m2)).is_zero());
                prop_assert_eq!(res.modulus, BigUint::from(num_integer::lcm(m1, m2)));
                prop_assert!(res.residue < BigUint::from(num_integer::lcm(m1, m2)));
            }
        }
    }
}
