//! Dense univariate polynomials with exact rational coefficients.
//!
//! `ExactPoly` stores coefficients in ascending degree order; the vector is
//! empty for the zero polynomial and otherwise ends in a nonzero coefficient.
//! All operations are exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactPoly {
    coeffs: Vec<Rational>,
}

impl ExactPoly {
    fn normalized(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExactPoly {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::normalized(vec![c])
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        ExactPoly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    /// c * x^deg.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        ExactPoly { coeffs }
    }

    /// From ascending coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self::normalized(coeffs)
    }

    /// Convenience constructor from machine integers (ascending order).
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::normalized(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^j (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Index of the lowest nonzero coefficient, `None` for zero.
    pub fn trailing_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ExactPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divide every coefficient by `c`. Panics if `c` is zero.
    pub fn scalar_div(&self, c: &Rational) -> Self {
        assert!(!c.is_zero(), "scalar_div by zero");
        ExactPoly {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * Rational::from_integer(j.into()))
            .collect();
        Self::normalized(coeffs)
    }

    /// p(-x): flips the sign of odd-degree coefficients.
    pub fn compose_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
            .collect();
        ExactPoly { coeffs }
    }

    /// Monic rescaling; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scalar_div(&lc.clone()),
        }
    }

    /// Euclidean division: `self = q * rhs + r` with `deg r < deg rhs`.
    pub fn div_rem(&self, rhs: &Self) -> Result<(Self, Self)> {
        let d_rhs = rhs.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lc = rhs.coeffs[d_rhs].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_rhs {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d_rhs];
        for k in (d_rhs..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &lc;
            for j in 0..d_rhs {
                let t = &q * &rhs.coeffs[j];
                rem[k - d_rhs + j] -= t;
            }
            rem[k] = Rational::zero();
            quot[k - d_rhs] = q;
        }
        Ok((Self::normalized(quot), Self::normalized(rem)))
    }

    /// Division known to be exact; panics if a remainder appears.
    pub fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs).expect("exact_div by zero polynomial");
        assert!(r.is_zero(), "exact_div left a remainder");
        q
    }

    /// Monic gcd by the Euclidean algorithm, normalizing at every step to
    /// bound coefficient growth. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

/// The index-raising operator p -> x (p + p').
pub fn t_operator(p: &ExactPoly) -> ExactPoly {
    let s = p + &p.derivative();
    &ExactPoly::x() * &s
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for j in 0..n {
            coeffs.push(self.coeff(j) + rhs.coeff(j));
        }
        ExactPoly::normalized(coeffs)
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for j in 0..n {
            coeffs.push(self.coeff(j) - rhs.coeff(j));
        }
        ExactPoly::normalized(coeffs)
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs =
            vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ExactPoly::normalized(coeffs)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let coef = format_rational(&mag);
            match (j, coef.as_str()) {
                (0, _) => write!(f, "{coef}")?,
                (1, "1") => write!(f, "x")?,
                (1, _) => write!(f, "{coef}*x")?,
                (_, "1") => write!(f, "x^{j}")?,
                _ => write!(f, "{coef}*x^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn normalization_and_queries() {
        let p = ExactPoly::from_integers(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(ExactPoly::from_integers(&[0, 0]).is_zero());
        assert_eq!(ExactPoly::zero().degree(), None);
        assert_eq!(p.coeff(5), rat_int(0));
        assert_eq!(ExactPoly::from_integers(&[0, 0, 3]).trailing_valuation(), Some(2));
    }

    #[test]
    fn derivative_power_rule() {
        // d/dx (x^3 + 3x^2 + x) = 3x^2 + 6x + 1
        let p = ExactPoly::from_integers(&[0, 1, 3, 1]);
        assert_eq!(p.derivative(), ExactPoly::from_integers(&[1, 6, 3]));
    }

    #[test]
    fn eval_exact() {
        // x^2 + 4x + 2 at -1 -> -1
        let p = ExactPoly::from_integers(&[2, 4, 1]);
        assert_eq!(p.eval(&rat_int(-1)), rat_int(-1));
        assert_eq!(p.eval(&rat(1, 2)), rat(17, 4));
    }

    #[test]
    fn gcd_examples() {
        let x = ExactPoly::x();
        let x2 = ExactPoly::monomial(rat_int(1), 2);
        assert_eq!(x2.gcd(&x), x);
        // gcd of coprime polynomials is 1
        let p = ExactPoly::from_integers(&[2, 4, 1]);
        assert_eq!(p.gcd(&p.derivative()).degree(), Some(0));
        // common factor (x+1)
        let a = &p * &ExactPoly::from_integers(&[1, 1]);
        let b = &ExactPoly::from_integers(&[3, 3]) * &ExactPoly::from_integers(&[5, 1]);
        assert_eq!(a.gcd(&b), ExactPoly::from_integers(&[1, 1]));
    }

    #[test]
    fn div_rem_round_trip() {
        let a = ExactPoly::from_integers(&[3, -2, 0, 7, 1]);
        let b = ExactPoly::from_integers(&[1, 5, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
        assert!(a.div_rem(&ExactPoly::zero()).is_err());
    }

    #[test]
    fn t_operator_matches_manual() {
        // T(x + 1) = x(x + 2) = x^2 + 2x
        let p = ExactPoly::from_integers(&[1, 1]);
        assert_eq!(t_operator(&p), ExactPoly::from_integers(&[0, 2, 1]));
    }

    #[test]
    fn compose_neg_flips_odd() {
        let p = ExactPoly::from_integers(&[2, 4, 1]);
        assert_eq!(p.compose_neg(), ExactPoly::from_integers(&[2, -4, 1]));
    }

    #[test]
    fn display_readable() {
        let p = ExactPoly::from_integers(&[2, 4, 1]);
        assert_eq!(p.to_string(), "x^2 + 4*x + 2");
        let q = ExactPoly::from_coeffs(vec![rat(-1, 2), rat_int(0), rat_int(-1)]);
        assert_eq!(q.to_string(), "-x^2 - 1/2");
    }
}
