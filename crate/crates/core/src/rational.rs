//! Exact rational scalars.
//!
//! Everything in this crate is computed over arbitrary-precision rationals in
//! canonical reduced form (gcd(|p|, q) = 1, q >= 1, zero is 0/1).  The
//! representation is `num_rational::BigRational`, which maintains exactly
//! that canonical form; this module adds the constructors and the `p/q`
//! string round trip used by the serialization layer and the CLI.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;

/// Arbitrary-precision rational in canonical reduced form.
pub type Rational = num_rational::BigRational;

/// Builds an integer scalar.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Builds the rational `n`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Builds the rational `n/d`.  Panics on `d == 0`; intended for literals.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// `2^e` for a signed exponent `e`.
pub fn pow2(e: i32) -> Rational {
    let two = Rational::from_integer(Int::from(2));
    num_traits::pow::Pow::pow(&two, e)
}

/// `b^e` for a signed exponent `e`.  Panics if `b == 0` and `e < 0`.
pub fn int_pow(b: i64, e: i32) -> Rational {
    let base = Rational::from_integer(Int::from(b));
    num_traits::pow::Pow::pow(&base, e)
}

/// Canonical string form: `p/q`, or just `p` when the value is an integer.
pub fn to_string(r: &Rational) -> String {
    r.to_string()
}

/// Parses `p/q` or `p` into a canonical rational.
pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    Rational::from_str(t).map_err(|e| Error::Parse(format!("`{t}`: {e}")))
}

/// True when the rational is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// The exact integer value, or a domain error when `r` is not an integer.
pub fn to_integer(r: &Rational) -> Result<Int> {
    if is_integer(r) {
        Ok(r.numer().clone())
    } else {
        Err(Error::Domain(format!("{r} is not an integer")))
    }
}

/// Sign as -1, 0 or 1.
pub fn signum(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_are_canonical() {
        assert_eq!(frac(2, 4), frac(1, 2));
        assert_eq!(frac(1, -2), frac(-1, 2));
        assert_eq!(frac(-3, -6), frac(1, 2));
        assert_eq!(frac(0, 7), rat(0));
        assert_eq!(frac(0, 7).denom(), &int(1));
    }

    #[test]
    fn string_round_trip() {
        for s in ["0", "1", "-1", "5/66", "-691/2730", "1/2"] {
            let r = parse(s).unwrap();
            assert_eq!(to_string(&r), s);
            assert_eq!(parse(&to_string(&r)).unwrap(), r);
        }
        // Non-canonical inputs normalize.
        assert_eq!(to_string(&parse("2/4").unwrap()), "1/2");
        assert_eq!(to_string(&parse("-4/2").unwrap()), "-2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse("").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("a/b").is_err());
    }

    #[test]
    fn signed_powers() {
        assert_eq!(pow2(-3), frac(1, 8));
        assert_eq!(pow2(0), rat(1));
        assert_eq!(pow2(5), rat(32));
        assert_eq!(int_pow(3, -2), frac(1, 9));
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(to_integer(&rat(17)).unwrap(), int(17));
        assert!(to_integer(&frac(1, 2)).is_err());
    }
}
