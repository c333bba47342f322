//! Primitive integer polynomials backing the root engine.
//!
//! An `IntPoly` is a positive-content-free integer multiple of the rational
//! polynomial it came from, so it has the same roots and the same sign
//! everywhere. Sign evaluation at dyadic and rational points is homogeneous
//! Horner over `BigInt`, with shifts standing in for denominator powers at
//! dyadic points.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::poly::ExactPoly;
use crate::rational::Rational;

use super::dyadic::Dyadic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    coeffs: Vec<BigInt>, // ascending, last nonzero unless empty
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Clear denominators and strip the (positive) content.
    pub fn from_exact(p: &ExactPoly) -> Self {
        let mut lcm = BigInt::one();
        for c in p.coeffs() {
            lcm = lcm.lcm(c.denom());
        }
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut a = IntPoly::from_coeffs(coeffs);
        a.make_primitive();
        a
    }

    pub fn to_exact(&self) -> ExactPoly {
        ExactPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading of zero polynomial")
    }

    pub fn constant_coeff(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide by the positive content (sign preserved).
    pub fn make_primitive(&mut self) {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return;
        }
        for c in &mut self.coeffs {
            *c = &*c / &g;
        }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly { coeffs: vec![] };
        }
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * BigInt::from(j))
                .collect(),
        )
    }

    pub fn negate(&mut self) {
        for c in &mut self.coeffs {
            *c = -&*c;
        }
    }

    fn sign_of(v: &BigInt) -> i8 {
        match v.sign() {
            num::bigint::Sign::Minus => -1,
            num::bigint::Sign::NoSign => 0,
            num::bigint::Sign::Plus => 1,
        }
    }

    /// Sign of p at mant / 2^exp: homogeneous Horner with shifts.
    pub fn sign_at_dyadic(&self, x: &Dyadic) -> i8 {
        let d = match self.degree() {
            None => return 0,
            Some(d) => d,
        };
        if d == 0 {
            return Self::sign_of(&self.coeffs[0]);
        }
        let mut acc = self.coeffs[d].clone();
        for i in (0..d).rev() {
            acc *= &x.mant;
            let shift = x.exp as usize * (d - i);
            acc += &self.coeffs[i] << shift;
        }
        Self::sign_of(&acc)
    }

    /// Sign of p at num/den with den > 0.
    pub fn sign_at_rational(&self, x: &Rational) -> i8 {
        let d = match self.degree() {
            None => return 0,
            Some(d) => d,
        };
        let num = x.numer();
        let den = x.denom();
        let mut acc = self.coeffs[d].clone();
        let mut den_pow = BigInt::one();
        for i in (0..d).rev() {
            acc *= num;
            den_pow *= den;
            acc += &self.coeffs[i] * &den_pow;
        }
        Self::sign_of(&acc)
    }

    pub fn sign_at_zero(&self) -> i8 {
        Self::sign_of(&self.constant_coeff())
    }

    pub fn sign_at_pos_inf(&self) -> i8 {
        if self.is_zero() {
            0
        } else {
            Self::sign_of(self.leading())
        }
    }

    pub fn sign_at_neg_inf(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = Self::sign_of(self.leading());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Pseudo-remainder of `self` by `g`, scaled by a positive factor, so the
    /// result is a positive multiple of the rational remainder.
    pub fn pseudo_rem_positive(&self, g: &IntPoly) -> IntPoly {
        let dg = g.degree().expect("pseudo_rem by zero polynomial");
        let lc = g.leading().clone();
        let mut r = self.coeffs.clone();
        let mut scalings = 0usize;
        while r.len() > dg {
            let top = r.last().unwrap().clone();
            if top.is_zero() {
                r.pop();
                continue;
            }
            let shift = r.len() - 1 - dg;
            // r := lc * r - top * x^shift * g
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for j in 0..=dg {
                let t = &top * &g.coeffs[j];
                r[shift + j] -= t;
            }
            r.pop();
            scalings += 1;
        }
        let mut out = IntPoly::from_coeffs(r);
        if lc.is_negative() && scalings % 2 == 1 {
            out.negate();
        }
        out
    }

    /// Exact division; `None` if the division is not exact over the integers.
    pub fn exact_div(&self, g: &IntPoly) -> Option<IntPoly> {
        let dg = g.degree()?;
        if self.is_zero() {
            return Some(IntPoly { coeffs: vec![] });
        }
        let d = self.degree().unwrap();
        if d < dg {
            return None;
        }
        let lc = g.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); d - dg + 1];
        for k in (dg..=d).rev() {
            if r[k].is_zero() {
                continue;
            }
            let (qc, rem) = r[k].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for j in 0..=dg {
                let t = &qc * &g.coeffs[j];
                r[k - dg + j] -= t;
            }
            q[k - dg] = qc;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// Primitive gcd with positive leading coefficient (roots only; scalars
    /// are irrelevant).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        a.make_primitive();
        b.make_primitive();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return IntPoly::from_coeffs(vec![BigInt::one()]);
            }
            let mut r = a.pseudo_rem_positive(&b);
            r.make_primitive();
            a = b;
            b = r;
        }
        if a.leading().is_negative() {
            a.negate();
        }
        a
    }

    /// Remove a known rational root a (= num/den), i.e. divide by
    /// (den*x - num). Panics if the division is not exact.
    pub fn deflate_root(&self, root: &Rational) -> IntPoly {
        let lin = IntPoly::from_coeffs(vec![-root.numer().clone(), root.denom().clone()]);
        let mut q = self
            .exact_div(&lin)
            .expect("deflate_root: claimed root does not divide");
        q.make_primitive();
        q
    }

    /// Exponent t such that every real root lies strictly inside
    /// (-2^t, 2^t): a power-of-two Fujiwara-style bound.
    pub fn root_bound_exp(&self) -> u32 {
        let d = match self.degree() {
            None | Some(0) => return 0,
            Some(d) => d,
        };
        let lead_bits = self.leading().magnitude().bits() as i64;
        let mut t: i64 = 0;
        for k in 1..=d {
            let c = &self.coeffs[d - k];
            if c.is_zero() {
                continue;
            }
            let diff = c.magnitude().bits() as i64 - lead_bits + 1;
            let s = diff.div_euclid(k as i64) + i64::from(diff.rem_euclid(k as i64) != 0);
            t = t.max(s);
        }
        // bound 2^{1+t}; one more power of two makes containment strict
        (1 + t.max(0) + 1) as u32
    }

    /// The rational roots of a squarefree polynomial, found by the rational
    /// root test with a bounded divisor search, each deflated out. The
    /// remaining polynomial is returned alongside the roots.
    pub fn extract_rational_roots(&self) -> (IntPoly, Vec<Rational>) {
        let mut p = self.clone();
        let mut roots = Vec::new();
        if p.degree().is_none() {
            return (p, roots);
        }
        // root at zero
        if p.constant_coeff().is_zero() && p.degree() > Some(0) {
            let mut coeffs = p.coeffs.clone();
            coeffs.remove(0);
            p = IntPoly::from_coeffs(coeffs);
            roots.push(Rational::zero());
        }
        loop {
            match p.degree() {
                None | Some(0) => break,
                Some(1) => {
                    roots.push(Rational::new(-p.coeffs[0].clone(), p.coeffs[1].clone()));
                    p = IntPoly::from_coeffs(vec![BigInt::one()]);
                    break;
                }
                Some(_) => {}
            }
            let nums = bounded_divisors(&p.constant_coeff().abs());
            let dens = bounded_divisors(&p.leading().abs());
            let (nums, dens) = match (nums, dens) {
                (Some(n), Some(d)) => (n, d),
                _ => break, // factorization too expensive; bisection still finds hits
            };
            let mut found = None;
            'search: for a in &nums {
                for b in &dens {
                    for cand in [Rational::new(a.clone(), b.clone()),
                                 Rational::new(-a.clone(), b.clone())] {
                        if p.sign_at_rational(&cand) == 0 {
                            found = Some(cand);
                            break 'search;
                        }
                    }
                }
            }
            match found {
                Some(r) => {
                    p = p.deflate_root(&r);
                    roots.push(r);
                }
                None => break,
            }
        }
        roots.sort();
        (p, roots)
    }
}

/// All positive divisors of n, or `None` when n does not factor over small
/// primes or has too many divisors to enumerate cheaply.
fn bounded_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    const MAX_DIVISORS: usize = 4096;
    if n.is_zero() {
        return None;
    }
    let mut rest = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    while (&p * &p) <= rest {
        if p > BigInt::from(100_000) {
            break;
        }
        if rest.is_multiple_of(&p) {
            let mut e = 0;
            while rest.is_multiple_of(&p) {
                rest /= &p;
                e += 1;
            }
            factors.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if !rest.is_one() {
        if rest.magnitude().bits() <= 34 || (&p * &p) > rest {
            factors.push((rest, 1)); // prime leftover
        } else {
            return None; // large composite remainder; give up honestly
        }
    }
    let count: usize = factors.iter().map(|(_, e)| *e as usize + 1).product();
    if count > MAX_DIVISORS {
        return None;
    }
    let mut divisors = vec![BigInt::one()];
    for (q, e) in factors {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc = &acc * &q;
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    Some(divisors)
}
