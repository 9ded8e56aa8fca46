//! Integer helpers: 2-adic valuations, the coprime-part divisor search, the
//! parity weight, and gcd/lcm with explicit conventions at zero.

/// 2-adic valuation extended with a greatest element at zero.
///
/// `sigma2(0)` is `Infinity`, which compares strictly greater than every
/// finite valuation and is never equal to `Finite(0)`. This matches the
/// divisibility reading (every power of two divides zero) and gives the
/// admissibility conditions a uniform shape at the boundary parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtValuation {
    Finite(u32),
    Infinity,
}

impl ExtValuation {
    pub fn is_zero(self) -> bool {
        self == ExtValuation::Finite(0)
    }
}

impl std::fmt::Display for ExtValuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtValuation::Finite(v) => write!(f, "{v}"),
            ExtValuation::Infinity => write!(f, "inf"),
        }
    }
}

/// Exponent of the largest power of two dividing `n`, with `sigma2(0) = Infinity`.
pub fn sigma2(n: i64) -> ExtValuation {
    if n == 0 {
        ExtValuation::Infinity
    } else {
        ExtValuation::Finite(n.unsigned_abs().trailing_zeros())
    }
}

/// The product-with-zero test `sigma2(x) * sigma2(y) != 0`, read as
/// "both valuations are nonzero" so that `Infinity` counts as nonzero.
pub fn sigma2_product_nonzero(x: i64, y: i64) -> bool {
    !sigma2(x).is_zero() && !sigma2(y).is_zero()
}

/// Greatest common divisor with `gcd(0, n) = gcd(n, 0) = n`.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `gcd` on signed inputs via absolute values.
pub fn gcd_i(a: i64, b: i64) -> u64 {
    gcd(a.unsigned_abs(), b.unsigned_abs())
}

/// Least common multiple with `lcm0(0, n) = lcm0(n, 0) = 0`.
///
/// The zero convention makes the matching-shift formula
/// `(m + h - lcm0(h, m)) / 2` degrade to `(m + h) / 2` at `h = 0`.
pub fn lcm0(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Smallest divisor `j` of `m` such that `gcd(n, m / j) = 1`.
///
/// `j` ranges over divisors of `m` only, so the result always divides `m`;
/// `j = m` always qualifies, hence the search never fails. `tau(0, m) = m`.
pub fn tau(n: u64, m: u64) -> u64 {
    assert!(m >= 1, "tau needs a positive modulus");
    for j in 1..=m {
        if m % j == 0 && gcd(n, m / j) == 1 {
            return j;
        }
    }
    unreachable!("j = m always satisfies gcd(n, 1) = 1")
}

/// Parity weight: 2 for even `n`, 1 for odd `n`.
pub fn alpha(n: i64) -> u64 {
    if n % 2 == 0 {
        2
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sigma2_values() {
        assert_eq!(sigma2(12), ExtValuation::Finite(2));
        assert_eq!(sigma2(7), ExtValuation::Finite(0));
        assert_eq!(sigma2(0), ExtValuation::Infinity);
        assert_eq!(sigma2(-8), ExtValuation::Finite(3));
        assert_eq!(sigma2(1), ExtValuation::Finite(0));
    }

    #[test]
    fn infinity_is_greatest_and_nonzero() {
        assert!(ExtValuation::Infinity > ExtValuation::Finite(u32::MAX));
        assert!(!sigma2(0).is_zero());
        // sigma2(m) > sigma2(l - a*h) must fail when l = a*h.
        assert!(!(sigma2(6) > sigma2(0)));
        // the product test passes at h = 0 whenever sigma2(l) != 0.
        assert!(sigma2_product_nonzero(0, 2));
        assert!(!sigma2_product_nonzero(0, 1));
    }

    #[test]
    fn gcd_conventions() {
        assert_eq!(gcd(0, 12), 12);
        assert_eq!(gcd(12, 0), 12);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd_i(-9, 6), 3);
        assert_eq!(gcd_i(0, -6), 6);
    }

    #[test]
    fn lcm0_conventions() {
        assert_eq!(lcm0(0, 6), 0);
        assert_eq!(lcm0(6, 0), 0);
        assert_eq!(lcm0(4, 6), 12);
        assert_eq!(lcm0(1, 1), 1);
    }

    #[test]
    fn tau_values() {
        assert_eq!(tau(4, 12), 4);
        assert_eq!(tau(5, 12), 1);
        assert_eq!(tau(0, 12), 12);
        assert_eq!(tau(4, 2), 2);
        assert_eq!(tau(4, 1), 1);
        assert_eq!(tau(2, 12), 4);
        assert_eq!(tau(6, 4), 4);
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(4), 2);
        assert_eq!(alpha(7), 1);
        assert_eq!(alpha(0), 2);
        assert_eq!(alpha(-3), 1);
    }

    proptest! {
        #[test]
        fn tau_divides_and_strips_common_part(n in 0u64..600, m in 1u64..600) {
            let t = tau(n, m);
            prop_assert_eq!(m % t, 0);
            prop_assert_eq!(gcd(n, m / t), 1);
            // minimality over divisors
            for j in 1..t {
                if m % j == 0 {
                    prop_assert_ne!(gcd(n, m / j), 1);
                }
            }
        }

        #[test]
        fn sigma2_doubling(n in 1i64..100_000) {
            let ExtValuation::Finite(v) = sigma2(n) else { panic!() };
            prop_assert_eq!(sigma2(2 * n), ExtValuation::Finite(v + 1));
            prop_assert_eq!(sigma2(-n), sigma2(n));
        }

        #[test]
        fn alpha_period_two(n in -1000i64..1000) {
            prop_assert_eq!(alpha(n), alpha(n + 2));
            prop_assert_eq!(alpha(n) + alpha(n + 1), 3);
        }

        #[test]
        fn gcd_lcm_product(a in 1u64..10_000, b in 1u64..10_000) {
            prop_assert_eq!(gcd(a, b) * lcm0(a, b), a * b);
        }
    }
}
