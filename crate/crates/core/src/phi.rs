//! Parameter sequences phi = (phi_i) with a finite explicit prefix and a tail
//! rule, plus the elementary symmetric functions built from them.
//!
//! Every entry phi_i (i >= 1) is defined: entries beyond the prefix come from
//! the tail. The textual grammar is `r1,r2,...,rL[;tail=zero|const:R|affine:A]`
//! where `affine:A` means phi_i = A + i beyond the prefix.

use std::fmt;
use std::str::FromStr;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::ExactPoly;
use crate::rational::{format_rational, is_negative_integer, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tail {
    Zero,
    Constant(Rational),
    Affine(Rational),
}

impl fmt::Display for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tail::Zero => write!(f, "zero"),
            Tail::Constant(r) => write!(f, "const:{}", format_rational(r)),
            Tail::Affine(a) => write!(f, "affine:{}", format_rational(a)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiSequence {
    prefix: Vec<Rational>,
    tail: Tail,
}

impl PhiSequence {
    pub fn new(prefix: Vec<Rational>, tail: Tail) -> Self {
        // Constant(0) is the zero tail.
        let tail = match tail {
            Tail::Constant(r) if r.is_zero() => Tail::Zero,
            t => t,
        };
        PhiSequence { prefix, tail }
    }

    /// Finite support: the given prefix followed by zeros.
    pub fn from_prefix(prefix: Vec<Rational>) -> Self {
        Self::new(prefix, Tail::Zero)
    }

    /// The all-zero sequence (classical Bell case).
    pub fn zeros() -> Self {
        Self::from_prefix(Vec::new())
    }

    /// The constant sequence phi_i = r (the r-Bell case).
    pub fn constant(r: Rational) -> Self {
        Self::new(Vec::new(), Tail::Constant(r))
    }

    /// phi_i = alpha + i for every i (the Laguerre case).
    pub fn affine(alpha: Rational) -> Self {
        Self::new(Vec::new(), Tail::Affine(alpha))
    }

    pub fn prefix(&self) -> &[Rational] {
        &self.prefix
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix.len()
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn has_zero_tail(&self) -> bool {
        matches!(self.tail, Tail::Zero)
    }

    /// phi_i for 1-based i. Panics for i = 0.
    pub fn get(&self, i: usize) -> Rational {
        assert!(i >= 1, "phi indices start at 1");
        if i <= self.prefix.len() {
            return self.prefix[i - 1].clone();
        }
        match &self.tail {
            Tail::Zero => Rational::zero(),
            Tail::Constant(r) => r.clone(),
            Tail::Affine(a) => a + Rational::from_integer(i.into()),
        }
    }

    /// phi_1..phi_n as a vector.
    pub fn materialize(&self, n: usize) -> Vec<Rational> {
        (1..=n).map(|i| self.get(i)).collect()
    }

    /// The sequence with the l-th term removed; later entries shift left.
    ///
    /// Beyond the prefix this is the identity for zero and constant tails.
    /// Removing inside an affine tail is rejected because the result cannot
    /// be expressed by a tail rule of the same shape.
    pub fn remove_term(&self, l: usize) -> Result<PhiSequence> {
        assert!(l >= 1, "term indices start at 1");
        if l <= self.prefix.len() {
            let mut prefix = self.prefix.clone();
            prefix.remove(l - 1);
            let tail = match &self.tail {
                Tail::Affine(a) => Tail::Affine(a + Rational::from_integer(1.into())),
                t => t.clone(),
            };
            return Ok(PhiSequence::new(prefix, tail));
        }
        match &self.tail {
            Tail::Zero | Tail::Constant(_) => Ok(self.clone()),
            Tail::Affine(_) => Err(Error::RemoveInAffineTail {
                l,
                prefix_len: self.prefix.len(),
            }),
        }
    }

    /// phi with entry l bumped by m; the prefix materializes from the tail
    /// rule when l lies beyond it.
    pub fn perturb(&self, l: usize, m: &Rational) -> PhiSequence {
        assert!(l >= 1, "term indices start at 1");
        if m.is_zero() {
            return self.clone();
        }
        let mut prefix = if l > self.prefix.len() {
            self.materialize(l)
        } else {
            self.prefix.clone()
        };
        prefix[l - 1] += m;
        PhiSequence::new(prefix, self.tail.clone())
    }

    /// The entrywise shift s + phi.
    pub fn shift(&self, s: &Rational) -> PhiSequence {
        let prefix = self.prefix.iter().map(|p| p + s).collect();
        let tail = match &self.tail {
            Tail::Zero => Tail::Constant(s.clone()),
            Tail::Constant(r) => Tail::Constant(r + s),
            Tail::Affine(a) => Tail::Affine(a + s),
        };
        PhiSequence::new(prefix, tail)
    }

    /// True if phi_i >= 0 for every i >= 1 (tail-aware).
    pub fn is_nonneg(&self) -> bool {
        if self.prefix.iter().any(|p| p.is_negative()) {
            return false;
        }
        match &self.tail {
            Tail::Zero => true,
            Tail::Constant(r) => !r.is_negative(),
            Tail::Affine(a) => {
                !(a + Rational::from_integer((self.prefix.len() + 1).into())).is_negative()
            }
        }
    }

    /// First index violating phi_i >= 0 among i = 1..=n, if any.
    pub fn first_negative_through(&self, n: usize) -> Option<usize> {
        (1..=n).find(|&i| self.get(i).is_negative())
    }

    /// First index with phi_i in {-1, -2, ...} among i = 1..=n, if any.
    pub fn first_negative_integer_through(&self, n: usize) -> Option<usize> {
        (1..=n).find(|&i| is_negative_integer(&self.get(i)))
    }

    /// i_0 = min { i : phi_i = 0 }, or `None` when no entry vanishes.
    pub fn first_zero_index(&self) -> Option<usize> {
        if let Some(p) = self.prefix.iter().position(|p| p.is_zero()) {
            return Some(p + 1);
        }
        let len = self.prefix.len();
        match &self.tail {
            Tail::Zero => Some(len + 1),
            Tail::Constant(_) => None, // Constant(0) normalizes to Zero
            Tail::Affine(a) => {
                let at = -a;
                if at.is_integer() {
                    let i: usize = num::ToPrimitive::to_usize(at.numer())?;
                    (i > len).then_some(i)
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for PhiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.prefix.iter().map(format_rational).collect();
        write!(f, "{}", entries.join(","))?;
        if self.prefix.is_empty() || !matches!(self.tail, Tail::Zero) {
            write!(f, ";tail={}", self.tail)?;
        }
        Ok(())
    }
}

impl FromStr for PhiSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::InvalidRational {
            text: s.to_string(),
            reason,
        };
        if s.trim().is_empty() {
            return Err(bad("empty phi specification".into()));
        }
        let (prefix_part, tail_part) = match s.split_once(';') {
            Some((p, t)) => (p, Some(t)),
            None => (s, None),
        };
        let mut prefix = Vec::new();
        if !prefix_part.trim().is_empty() {
            for (idx, tok) in prefix_part.split(',').enumerate() {
                let r = parse_rational(tok).map_err(|e| {
                    let reason = match e {
                        Error::InvalidRational { reason, .. } => reason,
                        other => other.to_string(),
                    };
                    bad(format!("entry {}: `{}`: {}", idx + 1, tok.trim(), reason))
                })?;
                prefix.push(r);
            }
        }
        let tail = match tail_part {
            None => Tail::Zero,
            Some(t) => {
                let t = t.trim();
                let spec = t
                    .strip_prefix("tail=")
                    .ok_or_else(|| bad(format!("expected `tail=...`, got `{t}`")))?;
                if spec == "zero" {
                    Tail::Zero
                } else if let Some(r) = spec.strip_prefix("const:") {
                    Tail::Constant(parse_rational(r).map_err(|_| {
                        bad(format!("tail constant `{r}` is not a rational"))
                    })?)
                } else if let Some(a) = spec.strip_prefix("affine:") {
                    Tail::Affine(parse_rational(a).map_err(|_| {
                        bad(format!("tail offset `{a}` is not a rational"))
                    })?)
                } else {
                    return Err(bad(format!(
                        "unknown tail `{spec}` (expected zero, const:R, or affine:A)"
                    )));
                }
            }
        };
        Ok(PhiSequence::new(prefix, tail))
    }
}

/// Elementary symmetric functions Phi_0^n .. Phi_n^n of phi_1..phi_n,
/// so that prod_{i<=n} (x + phi_i) = sum_j Phi_{n-j}^n x^j.
pub fn elementary_symmetric(phi: &PhiSequence, n: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); n + 1];
    e[0] = Rational::from_integer(1.into());
    for i in 1..=n {
        let p = phi.get(i);
        for j in (1..=i).rev() {
            let t = &e[j - 1] * &p;
            e[j] += t;
        }
    }
    e
}

/// prod_{i=1}^{n} (x + phi_i) as a polynomial.
pub fn linear_factor_product(phi: &PhiSequence, n: usize) -> ExactPoly {
    let e = elementary_symmetric(phi, n);
    let coeffs = (0..=n).map(|j| e[n - j].clone()).collect();
    ExactPoly::from_coeffs(coeffs)
}
