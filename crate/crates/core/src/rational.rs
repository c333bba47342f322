//! Arbitrary-precision rational scalars.
//!
//! `Rational` is `num`'s `BigRational`: always reduced, denominator positive,
//! so equality is structural. The helpers here cover parsing (`p/q` or plain
//! integers) and canonical formatting.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `p`, `-p`, or `p/q` with a descriptive error.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::InvalidRational {
            text: text.to_string(),
            reason: "empty".to_string(),
        });
    }
    let bad = |reason: &str| Error::InvalidRational {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad("not an integer"))?;
            Ok(Rational::from_integer(n))
        }
        Some((ns, ds)) => {
            let n: BigInt = ns.trim().parse().map_err(|_| bad("bad numerator"))?;
            let d: BigInt = ds.trim().parse().map_err(|_| bad("bad denominator"))?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical string form: `p` when the denominator is 1, else `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True for values in `{-1, -2, -3, ...}`.
pub fn is_negative_integer(r: &Rational) -> bool {
    r.is_integer() && r.is_negative()
}

/// Nearest f64; saturates for out-of-range magnitudes.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
