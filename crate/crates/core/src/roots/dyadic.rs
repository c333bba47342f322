//! Dyadic rationals m / 2^e used as bisection points.
//!
//! Keeping isolation endpoints dyadic lets polynomial sign evaluation replace
//! denominator powers with bit shifts.

use std::cmp::Ordering;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Dyadic {
    pub mant: BigInt,
    pub exp: u32, // value = mant / 2^exp
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: u32) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    #[cfg(test)]
    pub fn from_int(n: i64) -> Self {
        Dyadic {
            mant: BigInt::from(n),
            exp: 0,
        }
    }

    /// +/- 2^t.
    pub fn power_of_two(t: u32, negative: bool) -> Self {
        let mant = BigInt::one() << t;
        Dyadic {
            mant: if negative { -mant } else { mant },
            exp: 0,
        }
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && !self.mant.bit(0) {
            self.mant >>= 1;
            self.exp -= 1;
        }
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mant.clone(), BigInt::one() << self.exp)
    }

    /// Exact midpoint.
    pub fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let e = a.exp.max(b.exp);
        let am = &a.mant << (e - a.exp);
        let bm = &b.mant << (e - b.exp);
        Dyadic::new(am + bm, e + 1)
    }

    /// b - a as a rational (callers compare widths against rational targets).
    pub fn width(a: &Dyadic, b: &Dyadic) -> Rational {
        b.to_rational() - a.to_rational()
    }

    pub fn sign(&self) -> i8 {
        match self.mant.sign() {
            num::bigint::Sign::Minus => -1,
            num::bigint::Sign::NoSign => 0,
            num::bigint::Sign::Plus => 1,
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        let a = &self.mant << (e - self.exp);
        let b = &other.mant << (e - other.exp);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
