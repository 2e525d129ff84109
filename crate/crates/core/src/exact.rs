//! Integer and rational primitives shared by every other module.
//!
//! Big integers and rationals come from `num-bigint` / `num-rational`;
//! [`Rational`] is always kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Generalized binomial coefficient `a (a-1) ... (a-k+1) / k!` for any integer `a`.
///
/// Built by incremental multiply/divide: after step `i` the accumulator is
/// `binomial(a, i + 1)`, so every division is exact.
pub fn binomial(a: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    let a = BigInt::from(a);
    for i in 0..k {
        let factor = &a - BigInt::from(i);
        if factor.is_zero() {
            return BigInt::zero();
        }
        acc *= factor;
        acc /= BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `a (a-1) ... (a-n+1)`; the empty product for `n = 0` is 1.
pub fn falling_factorial(a: i64, n: u64) -> BigInt {
    let a = BigInt::from(a);
    (0..n).fold(BigInt::one(), |acc, i| acc * (&a - BigInt::from(i)))
}

/// `(-1)^e` as an `i64`, for any integer exponent.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn rational(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int_rational(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Converts an exact rational to an integer, failing if it has a denominator.
pub fn to_integer(q: &Rational, context: &str) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NotIntegral(format!("{context} = {q}")))
    }
}

/// Exact integer division `num / den`, failing on a nonzero remainder.
pub fn exact_div(num: &BigInt, den: &BigInt, context: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NotIntegral(format!("{context} = {num}/{den}")))
    }
}

pub(crate) fn is_nonnegative(x: &BigInt) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(2, 5), big(0));
        // (-3)(-4)/2!
        assert_eq!(binomial(-3, 2), big(6));
        assert_eq!(binomial(-3, 2), binomial(4, 2));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(-1, 0), big(1));
        assert_eq!(binomial(-1, 5), big(-1));
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), big(1));
        assert_eq!(factorial(5), big(120));
        let product: i64 = (1..=10).product();
        assert_eq!(factorial(10), big(product));
        assert_eq!(factorial(10), big(3_628_800));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(-2, 3), big(-24));
        assert_eq!(falling_factorial(17, 0), big(1));
        assert_eq!(falling_factorial(-5, 0), big(1));
        assert_eq!(falling_factorial(5, 5), big(120));
        assert_eq!(falling_factorial(5, 6), big(0));
    }

    #[test]
    fn pascal_rule_on_grid() {
        for a in -50..=50 {
            for k in 1..=50u64 {
                assert_eq!(
                    binomial(a, k),
                    binomial(a - 1, k - 1) + binomial(a - 1, k),
                    "a={a} k={k}"
                );
            }
        }
    }

    #[test]
    fn upper_negation_on_grid() {
        for a in 1..=40i64 {
            for k in 0..=40u64 {
                let sign = big(sign_pow(k as i64));
                assert_eq!(binomial(-a, k), sign * binomial(a + k as i64 - 1, k));
            }
        }
    }

    #[test]
    fn binomial_matches_factorial_quotient() {
        for n in 0..=30u64 {
            for k in 0..=n {
                let q = factorial(n) / (factorial(k) * factorial(n - k));
                assert_eq!(binomial(n as i64, k), q);
            }
        }
    }

    #[test]
    fn exact_helpers() {
        assert_eq!(exact_div(&big(12), &big(4), "x").unwrap(), big(3));
        assert!(matches!(
            exact_div(&big(13), &big(4), "x"),
            Err(Error::NotIntegral(_))
        ));
        assert_eq!(to_integer(&rational(6, 3), "x").unwrap(), big(2));
        assert!(to_integer(&rational(1, 2), "x").is_err());
        let q = rational(4, -6);
        assert_eq!(q.numer(), &big(-2));
        assert_eq!(q.denom(), &big(3));
    }

    proptest! {
        #[test]
        fn rational_reciprocal_round_trip(p in -10_000i64..10_000, q in -10_000i64..10_000) {
            prop_assume!(p != 0 && q != 0);
            let prod = rational(p, q) * rational(q, p);
            prop_assert!(prod.is_one());
        }

        #[test]
        fn falling_factorial_is_binomial_times_factorial(a in -60i64..60, k in 0u64..20) {
            prop_assert_eq!(falling_factorial(a, k), binomial(a, k) * factorial(k));
        }
    }
}
