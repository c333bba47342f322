//! The bridge to multiple Laguerre polynomials of the first kind.
//!
//! Each (alpha-vector, multi-index) pair determines a block-structured phi
//! sequence; the corresponding generalized Bell polynomial composed with
//! x -> -x is the multiple Laguerre polynomial, normalized here with leading
//! coefficient (-1)^{|n|}. For q = 1 this equals n! times the classical
//! Laguerre polynomial, which gives an independent oracle through the
//! three-term recurrence. Orthogonality against x^alpha e^{-x} reduces to
//! exact rational sums because every Gamma-function ratio is a rising product.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::genbell::genbell;
use crate::phi::PhiSequence;
use crate::poly::ExactPoly;
use crate::rational::{format_rational, Rational};

/// A multi-index (n_1, ..., n_q) with q >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndex {
    parts: Vec<usize>,
}

impl MultiIndex {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyMultiIndex);
        }
        Ok(MultiIndex { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |n| = n_1 + ... + n_q.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Parameters (alpha_1, ..., alpha_q).
///
/// Pairwise differences alpha_i - alpha_j are expected to be non-integers
/// when q >= 2; violations are reported by `has_integer_differences` (the
/// Bell-side construction still goes through, only the multiple-orthogonality
/// interpretation degrades).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaVector {
    values: Vec<Rational>,
}

impl AlphaVector {
    pub fn new(values: Vec<Rational>) -> Self {
        AlphaVector { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn has_integer_differences(&self) -> bool {
        for i in 0..self.values.len() {
            for j in i + 1..self.values.len() {
                if (&self.values[i] - &self.values[j]).is_integer() {
                    return true;
                }
            }
        }
        false
    }
}

/// The block-structured sequence: within block j (of length n_j) the entries
/// are alpha_j + 1, ..., alpha_j + n_j; the tail is zero.
pub fn laguerre_phi_sequence(alpha: &AlphaVector, nvec: &MultiIndex) -> Result<PhiSequence> {
    if alpha.len() != nvec.parts().len() {
        return Err(Error::LengthMismatch {
            alphas: alpha.len(),
            parts: nvec.parts().len(),
        });
    }
    let mut prefix = Vec::with_capacity(nvec.total());
    for (a, &nj) in alpha.values().iter().zip(nvec.parts()) {
        for k in 1..=nj {
            prefix.push(a + Rational::from_integer(k.into()));
        }
    }
    Ok(PhiSequence::from_prefix(prefix))
}

/// The multiple Laguerre polynomial L_{n}^{alpha}(x) = Be_{|n|}^{phi}(-x),
/// with leading coefficient (-1)^{|n|}. For q = 1 this equals
/// n! L_n^alpha in the classical normalization.
pub fn multiple_laguerre(alpha: &AlphaVector, nvec: &MultiIndex) -> Result<ExactPoly> {
    let phi = laguerre_phi_sequence(alpha, nvec)?;
    Ok(genbell(&phi, nvec.total()).compose_neg())
}

/// Classical L_n^alpha by the three-term recurrence
/// (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1},
/// from L_0 = 1 and L_1 = 1 + alpha - x. Exact in rationals.
pub fn classical_laguerre_oracle(alpha: &Rational, n: usize) -> ExactPoly {
    let mut prev = ExactPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = ExactPoly::from_coeffs(vec![
        alpha + Rational::one(),
        -Rational::one(),
    ]);
    for k in 1..n {
        let kf = Rational::from_integer(k.into());
        // (2k + 1 + alpha - x) L_k
        let lin = ExactPoly::from_coeffs(vec![
            &kf + &kf + Rational::one() + alpha,
            -Rational::one(),
        ]);
        let next = &(&lin * &cur) - &prev.scalar_mul(&(&kf + alpha));
        prev = cur;
        cur = next.scalar_div(&(kf + Rational::one()));
    }
    cur
}

/// Exact orthogonality of the multiple Laguerre polynomial: for each j and
/// each k < n_j, verifies sum_m c_m (alpha_j+1)(alpha_j+2)...(alpha_j+k+m) = 0,
/// the Gamma-ratio form of the integral against x^{alpha_j} e^{-x} x^k.
/// Requires alpha_j > -1 for every j.
pub fn check_multiple_orthogonality(alpha: &AlphaVector, nvec: &MultiIndex) -> Result<bool> {
    for (idx, a) in alpha.values().iter().enumerate() {
        if *a <= -Rational::one() {
            return Err(Error::DivergentWeight {
                index: idx + 1,
                value: format_rational(a),
            });
        }
    }
    Ok(orthogonality_table(alpha, nvec)?
        .into_iter()
        .all(|(_, _, ok)| ok))
}

/// Per-condition results (j, k, holds) behind `check_multiple_orthogonality`.
pub fn orthogonality_table(
    alpha: &AlphaVector,
    nvec: &MultiIndex,
) -> Result<Vec<(usize, usize, bool)>> {
    let poly = multiple_laguerre(alpha, nvec)?;
    let mut out = Vec::new();
    for (j, (a, &nj)) in alpha.values().iter().zip(nvec.parts()).enumerate() {
        for k in 0..nj {
            // rising(t) = (a+1)(a+2)...(a+k+m) accumulated incrementally
            let mut rising = Rational::one();
            for u in 1..=k {
                rising *= a + Rational::from_integer(u.into());
            }
            let mut acc = Rational::zero();
            for (m, c) in poly.coeffs().iter().enumerate() {
                if m > 0 {
                    rising *= a + Rational::from_integer((k + m).into());
                }
                acc += c * &rising;
            }
            out.push((j + 1, k, acc.is_zero()));
        }
    }
    Ok(out)
}
