//! Exact integer and rational arithmetic.
//!
//! Every integer quantity produced by the crate (c₂, dimensions, Euler
//! characteristics) is a [`BigInt`]; interval endpoints are [`Rational`]s.
//! Small structural parameters (δ, s, σ, twists) stay `i64`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_bigint::BigInt;

/// Always-reduced rational with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `num / den` reduced. Panics on a zero denominator.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn rational_from_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Falling-factorial binomial m(m−1)…(m−k+1)/k!, valid for every integer m.
///
/// This is the polynomial extension used for Euler characteristics; for
/// negative m it is generally nonzero, e.g. `binom_poly(-1, 3) == -1`.
pub fn binom_poly(m: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..i64::from(k) {
        num *= big(m) - j;
        den *= j + 1;
    }
    debug_assert!(num.is_multiple_of(&den));
    num / den
}

/// Binomial coefficient truncated at zero: C(m, k) for m ≥ k, else 0.
///
/// Used for dimensions of spaces of sections, e.g. h⁰(O_P³(n)) = C(n+3, 3).
pub fn binom_trunc(m: i64, k: u32) -> BigInt {
    if m < i64::from(k) {
        BigInt::zero()
    } else {
        binom_poly(m, k)
    }
}

/// Largest integer ≤ q.
pub fn floor(q: &Rational) -> BigInt {
    q.floor().to_integer()
}

/// Smallest integer ≥ q.
pub fn ceil(q: &Rational) -> BigInt {
    q.ceil().to_integer()
}

/// Smallest integer strictly greater than q.
pub fn next_integer_above(q: &Rational) -> BigInt {
    floor(q) + 1
}

/// Largest integer strictly less than q.
pub fn prev_integer_below(q: &Rational) -> BigInt {
    ceil(q) - 1
}

pub fn is_even(n: i64) -> bool {
    n.rem_euclid(2) == 0
}

/// Max(x, 0) for a signed big integer.
pub fn positive_part(x: &BigInt) -> BigInt {
    if x.is_positive() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

/// Decimal-string serde adapters. Values such as c₂ grow cubically in δ, so
/// JSON carries them as strings instead of numbers.
pub mod serde_str {
    use super::{BigInt, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub mod bigint {
        use super::*;

        pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&v.to_string())
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
            let raw = String::deserialize(d)?;
            BigInt::from_str(&raw).map_err(D::Error::custom)
        }
    }

    /// Rationals as `"p/q"`, or `"p"` when integral.
    pub mod rational {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&v.to_string())
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
            let raw = String::deserialize(d)?;
            Rational::from_str(&raw).map_err(D::Error::custom)
        }
    }

    pub mod option_rational {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(q) => s.serialize_some(&q.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|raw| Rational::from_str(&raw).map_err(D::Error::custom))
                .transpose()
        }
    }

    pub mod option_bigint {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(n) => s.serialize_some(&n.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|raw| BigInt::from_str(&raw).map_err(D::Error::custom))
                .transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Counts monomials of degree n in four variables by enumeration.
    fn count_monomials(n: i64) -> i64 {
        let mut count = 0;
        for a in 0..=n {
            for b in 0..=n - a {
                for _c in 0..=n - a - b {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn binom_trunc_examples() {
        assert_eq!(binom_trunc(7, 3), big(35));
        assert_eq!(binom_trunc(-1, 3), big(0));
        assert_eq!(binom_trunc(2, 3), big(0));
        assert_eq!(binom_trunc(13, 3), big(count_monomials(10)));
        assert_eq!(count_monomials(10), 286);
    }

    #[test]
    fn binom_poly_examples() {
        assert_eq!(binom_poly(7, 3), big(35));
        assert_eq!(binom_poly(-1, 3), big(-1));
        assert_eq!(binom_poly(0, 3), big(0));
        assert_eq!(binom_poly(-5, 0), big(1));
    }

    #[test]
    fn monomial_count_matches_truncated_binomial() {
        for n in 0..=20 {
            assert_eq!(binom_trunc(n + 3, 3), big(count_monomials(n)), "n = {n}");
        }
    }

    #[test]
    fn rounding_helpers() {
        let q = ratio(7, 2);
        assert_eq!(floor(&q), big(3));
        assert_eq!(ceil(&q), big(4));
        assert_eq!(next_integer_above(&rational_from_int(2)), big(3));
        assert_eq!(prev_integer_below(&rational_from_int(2)), big(1));
        assert_eq!(floor(&ratio(-7, 2)), big(-4));
    }

    #[test]
    fn serde_roundtrip_strings() {
        #[derive(serde::Serialize, serde::Deserialize, PartialEq, Debug)]
        struct Holder {
            #[serde(with = "serde_str::bigint")]
            n: BigInt,
            #[serde(with = "serde_str::rational")]
            q: Rational,
            #[serde(with = "serde_str::option_rational")]
            r: Option<Rational>,
        }
        let h = Holder {
            n: big(10).pow(30),
            q: ratio(355, 4),
            r: None,
        };
        let json = serde_json::to_string(&h).unwrap();
        assert!(json.contains("\"355/4\""));
        assert_eq!(serde_json::from_str::<Holder>(&json).unwrap(), h);
    }

    proptest! {
        #[test]
        fn trunc_agrees_with_poly_on_nonnegatives(m in 0i64..200, k in 0u32..8) {
            prop_assert_eq!(binom_trunc(m, k), binom_poly(m, k));
        }

        #[test]
        fn reflection_identity(m in -200i64..200, k in 0u32..8) {
            let sign = if k % 2 == 0 { big(1) } else { big(-1) };
            prop_assert_eq!(binom_poly(m, k), sign * binom_poly(i64::from(k) - 1 - m, k));
        }

        #[test]
        fn rational_inverse(a in -10_000i64..10_000, b in -10_000i64..10_000) {
            prop_assume!(a != 0 && b != 0);
            let q = ratio(a, b);
            prop_assert_eq!(&q * ratio(b, a), rational_from_int(1));
            prop_assert!(q.denom() > &big(0));
            let reduced = ratio(q.numer().clone(), q.denom().clone());
            prop_assert_eq!(reduced, q);
        }
    }
}
