//! Sturm chains over the integers.
//!
//! Members are positive integer multiples of the canonical rational chain, so
//! sign variations are identical. Zero values are dropped when counting
//! variations; with that convention V(a) - V(b) counts the distinct real
//! roots in the half-open interval (a, b], including endpoints that are
//! themselves roots.

use crate::rational::Rational;

use super::dyadic::Dyadic;
use super::int_poly::IntPoly;

#[derive(Clone, Debug)]
pub(crate) struct SturmChain {
    members: Vec<IntPoly>,
}

impl SturmChain {
    /// Chain from (p, p'). If p is not squarefree the bottom member is a
    /// positive multiple of gcd(p, p'); callers check `is_squarefree` and
    /// rebuild on the squarefree part when exact location work is needed.
    pub fn new(p: &IntPoly) -> SturmChain {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut members = Vec::new();
        let mut a = p.clone();
        a.make_primitive();
        members.push(a);
        let mut d = p.derivative();
        d.make_primitive();
        if d.is_zero() {
            return SturmChain { members };
        }
        members.push(d);
        loop {
            let n = members.len();
            let mut r = members[n - 2].pseudo_rem_positive(&members[n - 1]);
            if r.is_zero() {
                break;
            }
            r.make_primitive();
            r.negate();
            members.push(r);
        }
        SturmChain { members }
    }

    /// True when the chain bottom is a constant, i.e. gcd(p, p') is trivial.
    pub fn is_squarefree(&self) -> bool {
        self.members
            .last()
            .is_none_or(|m| m.degree() == Some(0))
    }

    /// The bottom member (a positive multiple of gcd(p, p')).
    pub fn bottom(&self) -> &IntPoly {
        self.members.last().unwrap()
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at_dyadic(&self, x: &Dyadic) -> usize {
        Self::variations(self.members.iter().map(|m| m.sign_at_dyadic(x)))
    }

    pub fn variations_at_rational(&self, x: &Rational) -> usize {
        Self::variations(self.members.iter().map(|m| m.sign_at_rational(x)))
    }

    pub fn variations_at_zero(&self) -> usize {
        Self::variations(self.members.iter().map(|m| m.sign_at_zero()))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.members.iter().map(|m| m.sign_at_neg_inf()))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.members.iter().map(|m| m.sign_at_pos_inf()))
    }

    /// Distinct real roots in (lo, hi].
    pub fn count_rational(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at_rational(lo) - self.variations_at_rational(hi)
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }

    /// Distinct real roots in (0, +inf).
    pub fn count_positive(&self) -> usize {
        self.variations_at_zero() - self.variations_at_pos_inf()
    }

    /// Distinct real roots in (-inf, 0].
    pub fn count_nonpositive(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ExactPoly;
    use crate::rational::{rat, rat_int};

    fn chain_of(coeffs: &[i64]) -> SturmChain {
        SturmChain::new(&IntPoly::from_exact(&ExactPoly::from_integers(coeffs)))
    }

    #[test]
    fn counts_quadratic() {
        // x^2 + 4x + 2, roots -2 +- sqrt2
        let c = chain_of(&[2, 4, 1]);
        assert!(c.is_squarefree());
        assert_eq!(c.count_rational(&rat_int(-4), &rat_int(0)), 2);
        assert_eq!(c.count_rational(&rat_int(-2), &rat_int(0)), 1);
        assert_eq!(c.count_all(), 2);
        assert_eq!(c.count_positive(), 0);
    }

    #[test]
    fn no_real_roots() {
        let c = chain_of(&[1, 0, 1]);
        assert_eq!(c.count_rational(&rat_int(-10), &rat_int(10)), 0);
        assert_eq!(c.count_all(), 0);
    }

    #[test]
    fn multiple_roots_counted_once_after_rebuild() {
        // x^2: not squarefree
        let c = chain_of(&[0, 0, 1]);
        assert!(!c.is_squarefree());
        // rebuild on the squarefree part x
        let p = IntPoly::from_exact(&ExactPoly::from_integers(&[0, 0, 1]));
        let sf = p.exact_div(c.bottom()).unwrap();
        let c2 = SturmChain::new(&sf);
        assert_eq!(c2.count_rational(&rat_int(-1), &rat_int(1)), 1);
    }

    #[test]
    fn half_open_convention_at_exact_roots() {
        // roots at 1 and 2: (1, 2] contains just 2; (0, 1] contains just 1
        let c = chain_of(&[2, -3, 1]);
        assert_eq!(c.count_rational(&rat_int(1), &rat_int(2)), 1);
        assert_eq!(c.count_rational(&rat_int(0), &rat_int(1)), 1);
        assert_eq!(c.count_rational(&rat_int(0), &rat(1, 2)), 0);
        assert_eq!(c.count_rational(&rat_int(2), &rat_int(9)), 0);
        assert_eq!(c.count_rational(&rat_int(0), &rat_int(2)), 2);
    }

    #[test]
    fn zero_boundary_counts() {
        // x(x-1)(x+1): nonpositive (-inf,0] -> {-1, 0}; positive -> {1}
        let c = chain_of(&[0, -1, 0, 1]);
        assert_eq!(c.count_nonpositive(), 2);
        assert_eq!(c.count_positive(), 1);
        assert_eq!(c.count_all(), 3);
    }
}
