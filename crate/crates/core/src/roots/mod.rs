//! Certified real-root analysis over exact rationals: Sturm counting, root
//! isolation with multiplicities, the interlacing predicate, positive-zero
//! prediction from sign changes of prod (x + phi_i) at integers, and
//! leftmost-zero bounds.

mod dyadic;
mod int_poly;
mod interlace;
mod isolate;
mod sturm;

pub use interlace::{check_interlace, InterlacingVerdict};
pub use isolate::{isolate_roots, RootIsolation, RootLoc, SignCounts};

pub(crate) use isolate::{compare_locs, LocOrder};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::phi::{linear_factor_product, PhiSequence};
use crate::poly::ExactPoly;
use crate::rational::{format_rational, Rational};
use crate::stirling::bell_poly;

use int_poly::IntPoly;
use sturm::SturmChain;

/// Default number of bisections granted to a root before interval
/// comparisons give up and report an undecided outcome.
pub const REFINEMENT_BUDGET: usize = 64;

/// Exact number of distinct real roots of `p` in the half-open interval
/// (lo, hi].
pub fn sturm_count(p: &ExactPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    assert!(lo < hi, "empty interval");
    Ok(squarefree_chain(p).count_rational(lo, hi))
}

/// Real-root counts for `p`, both distinct and with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootCount {
    pub distinct: usize,
    pub with_multiplicity: usize,
}

/// Count the real roots of `p` over the whole line.
pub fn real_root_count(p: &ExactPoly) -> Result<RootCount> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a = IntPoly::from_exact(p);
    let chain = SturmChain::new(&a);
    if chain.is_squarefree() {
        let distinct = chain.count_all();
        return Ok(RootCount {
            distinct,
            with_multiplicity: distinct,
        });
    }
    // fall back to a full isolation for the multiplicity structure
    let iso = isolate_roots(p, &Rational::one())?;
    Ok(RootCount {
        distinct: iso.distinct_count(),
        with_multiplicity: iso.real_count_with_multiplicity(),
    })
}

/// True when gcd(p, p') is constant, i.e. all roots are simple.
pub fn is_squarefree(p: &ExactPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(SturmChain::new(&IntPoly::from_exact(p)).is_squarefree())
}

/// Multiplicity of x = 0 as a root of `p` (the lowest nonzero coefficient
/// index); zero when p(0) != 0.
pub fn multiplicity_at_zero(p: &ExactPoly) -> Result<usize> {
    p.trailing_valuation().ok_or(Error::ZeroPolynomial)
}

/// Distinct real roots split by sign, plus the multiplicity of x = 0,
/// straight from chain variations (no isolation).
pub fn distinct_sign_counts(p: &ExactPoly) -> Result<SignCounts> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = squarefree_chain(p);
    let zero_multiplicity = p.trailing_valuation().unwrap();
    let nonpositive = chain.count_nonpositive();
    Ok(SignCounts {
        negative: nonpositive - usize::from(zero_multiplicity > 0),
        zero_multiplicity,
        positive: chain.count_positive(),
    })
}

/// |H| for H = { l >= 1 : P(l) P(l+1) < 0 }, with P = prod_{i<=K} (x+phi_i)
/// over the explicit prefix of a zero-tailed sequence. This predicts the
/// eventual number of positive zeros of Be_n^phi. Requires no entry in
/// {-1, -2, ...}.
pub fn positive_zero_prediction(phi: &PhiSequence) -> Result<usize> {
    if !phi.has_zero_tail() {
        return Err(Error::NonZeroTail {
            found: phi.tail().to_string(),
        });
    }
    let k = phi.prefix_len();
    if let Some(i) = phi.first_negative_integer_through(k) {
        return Err(Error::NegativeIntegerEntry {
            index: i,
            value: format_rational(&phi.get(i)),
        });
    }
    if k == 0 {
        return Ok(0);
    }
    let p = linear_factor_product(phi, k);
    // beyond ceil(max |phi_i|) every factor of P(l) is positive
    let max_abs = phi
        .prefix()
        .iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    let stop = to_ceil_usize(&max_abs) + 1;
    let mut count = 0;
    let mut prev = p.eval(&Rational::one());
    for l in 1..=stop {
        let next = p.eval(&Rational::from_integer((l + 1).into()));
        if (prev.is_negative() && next.is_positive())
            || (prev.is_positive() && next.is_negative())
        {
            count += 1;
        }
        prev = next;
    }
    Ok(count)
}

fn to_ceil_usize(r: &Rational) -> usize {
    let c = r.ceil();
    num::ToPrimitive::to_usize(c.numer()).unwrap_or(usize::MAX)
}

/// The two-sided bound on the leftmost zero of Be_n^phi for nonnegative phi:
/// a closed-form rational lower bound and the isolated leftmost zero of the
/// classical Be_n as the upper reference point.
#[derive(Clone, Debug)]
pub struct LeftmostBounds {
    /// alpha_n = max { -1, phi_1 - 1, ..., phi_n - n }.
    pub alpha_n: Rational,
    /// -4n - alpha_n - 2, strictly below the leftmost zero.
    pub lower: Rational,
    /// Isolation of the classical Be_n; its leftmost root is the upper
    /// reference xi_1.
    pub classical: RootIsolation,
}

impl LeftmostBounds {
    pub fn classical_leftmost(&self) -> RootLoc {
        self.classical.leftmost().expect("Be_n has roots for n >= 1")
    }
}

/// Compute the Corollary-style bounds for the leftmost zero. Requires
/// phi_i >= 0 for i <= n and n >= 1.
pub fn leftmost_zero_bounds(
    phi: &PhiSequence,
    n: usize,
    width: &Rational,
) -> Result<LeftmostBounds> {
    assert!(n >= 1, "leftmost zero needs n >= 1");
    if let Some(i) = phi.first_negative_through(n) {
        return Err(Error::NegativeEntry {
            index: i,
            value: format_rational(&phi.get(i)),
        });
    }
    let mut alpha_n = -Rational::one();
    for i in 1..=n {
        let cand = phi.get(i) - Rational::from_integer(i.into());
        if cand > alpha_n {
            alpha_n = cand;
        }
    }
    let lower = -Rational::from_integer((4 * n + 2).into()) - &alpha_n;
    let classical = isolate_roots(&bell_poly(n), width)?;
    Ok(LeftmostBounds {
        alpha_n,
        lower,
        classical,
    })
}

/// True when root `a` is certainly strictly below root `b` (disjoint
/// locations only; overlapping intervals compare false).
pub fn loc_strictly_less(a: &RootLoc, b: &RootLoc) -> bool {
    compare_locs(a, b) == LocOrder::Less
}

/// Refine the leftmost roots of two isolations until strictly ordered.
/// Ok(true) when `a`'s leftmost root is strictly below `b`'s. Budget
/// exhaustion or a shared root surfaces as an error.
pub fn leftmost_strictly_less(
    a: &mut RootIsolation,
    b: &mut RootIsolation,
    budget: usize,
) -> Result<bool> {
    assert!(a.distinct_count() > 0 && b.distinct_count() > 0);
    a.separate_selected(&[0], b, &[0], budget)?;
    Ok(loc_strictly_less(
        &a.leftmost().unwrap(),
        &b.leftmost().unwrap(),
    ))
}

/// Which part of the root set enters an interlacing comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroSelector {
    All,
    Negative,
    Positive,
}

/// Refine two isolations until comparable and check whether the selected
/// zeros of `p` interlace those of `q`. Budget exhaustion and shared roots
/// surface as `Undecided`.
pub fn interlacing_between(
    p: &mut RootIsolation,
    q: &mut RootIsolation,
    selector: ZeroSelector,
    budget: usize,
) -> InterlacingVerdict {
    let class = |iso: &RootIsolation| match selector {
        ZeroSelector::All => iso.all_indices(),
        ZeroSelector::Negative => iso.indices_by_class(std::cmp::Ordering::Less),
        ZeroSelector::Positive => iso.indices_by_class(std::cmp::Ordering::Greater),
    };
    let sel_p = class(p);
    let sel_q = class(q);
    if let Err(e) = p.separate_selected(&sel_p, q, &sel_q, budget) {
        return InterlacingVerdict::Undecided(e.to_string());
    }
    check_interlace(&p.locs_at(&sel_p), &q.locs_at(&sel_q))
}

fn squarefree_chain(p: &ExactPoly) -> SturmChain {
    let a = IntPoly::from_exact(p);
    let chain = SturmChain::new(&a);
    if chain.is_squarefree() {
        return chain;
    }
    let mut g = chain.bottom().clone();
    g.make_primitive();
    if g.leading().is_negative() {
        g.negate();
    }
    let sf = a.exact_div(&g).expect("gcd divides the polynomial");
    SturmChain::new(&sf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genbell::genbell;
    use crate::rational::{rat, rat_int};

    fn seq(entries: &[(i64, i64)]) -> PhiSequence {
        PhiSequence::from_prefix(entries.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn sturm_count_examples() {
        let p = ExactPoly::from_integers(&[2, 4, 1]);
        assert_eq!(sturm_count(&p, &rat_int(-4), &rat_int(0)).unwrap(), 2);
        let q = ExactPoly::from_integers(&[1, 0, 1]);
        assert_eq!(sturm_count(&q, &rat_int(-10), &rat_int(10)).unwrap(), 0);
        // multiple roots count once
        let sq = ExactPoly::from_integers(&[0, 0, 1]);
        assert_eq!(sturm_count(&sq, &rat_int(-1), &rat_int(1)).unwrap(), 1);
        assert!(sturm_count(&ExactPoly::zero(), &rat_int(0), &rat_int(1)).is_err());
    }

    #[test]
    fn real_root_count_examples() {
        assert_eq!(
            real_root_count(&ExactPoly::from_integers(&[1, 0, 1])).unwrap(),
            RootCount { distinct: 0, with_multiplicity: 0 }
        );
        // Be_4 with phi = (-2,-2): two real roots (0 and one negative), two nonreal
        let phi = seq(&[(-2, 1), (-2, 1)]);
        let p = genbell(&phi, 4);
        assert_eq!(
            real_root_count(&p).unwrap(),
            RootCount { distinct: 2, with_multiplicity: 2 }
        );
        // nonnegative phi: all n roots real
        let phi = seq(&[(1, 2), (3, 1), (2, 1)]);
        for n in 1..=9 {
            let count = real_root_count(&genbell(&phi, n)).unwrap();
            assert_eq!(count.distinct, n);
            assert_eq!(count.with_multiplicity, n);
        }
        // multiplicity-aware counting
        let sq = ExactPoly::from_integers(&[0, 0, 1]);
        assert_eq!(
            real_root_count(&sq).unwrap(),
            RootCount { distinct: 1, with_multiplicity: 2 }
        );
    }

    #[test]
    fn multiplicity_at_zero_examples() {
        assert_eq!(
            multiplicity_at_zero(&ExactPoly::from_integers(&[2, 4, 1])).unwrap(),
            0
        );
        // Be_2 with phi = (-1) is x^2
        let p = genbell(&seq(&[(-1, 1)]), 2);
        assert_eq!(p, ExactPoly::from_integers(&[0, 0, 1]));
        assert_eq!(multiplicity_at_zero(&p).unwrap(), 2);
        // Be_3 classical
        assert_eq!(multiplicity_at_zero(&bell_poly(3)).unwrap(), 1);
    }

    #[test]
    fn positive_zero_prediction_examples() {
        assert_eq!(positive_zero_prediction(&seq(&[(-3, 2)])).unwrap(), 1);
        assert_eq!(positive_zero_prediction(&seq(&[(1, 1), (2, 1)])).unwrap(), 0);
        assert_eq!(
            positive_zero_prediction(&seq(&[(-3, 2), (-7, 2)])).unwrap(),
            2
        );
        assert_eq!(
            positive_zero_prediction(&seq(&[(5, 2), (-1, 2), (-9, 2)])).unwrap(),
            1
        );
        assert_eq!(positive_zero_prediction(&PhiSequence::zeros()).unwrap(), 0);
        assert!(matches!(
            positive_zero_prediction(&seq(&[(-2, 1)])),
            Err(Error::NegativeIntegerEntry { index: 1, .. })
        ));
        assert!(matches!(
            positive_zero_prediction(&PhiSequence::constant(rat(1, 2))),
            Err(Error::NonZeroTail { .. })
        ));
    }

    #[test]
    fn leftmost_bounds_examples() {
        let w = rat(1, 1 << 20);
        // phi = (5,0,0), n=3: alpha_3 = 4, lower = -18
        let b = leftmost_zero_bounds(&seq(&[(5, 1)]), 3, &w).unwrap();
        assert_eq!(b.alpha_n, rat_int(4));
        assert_eq!(b.lower, rat_int(-18));
        // all-zero phi: alpha_n = -1, lower = -4n - 1
        let b = leftmost_zero_bounds(&PhiSequence::zeros(), 3, &w).unwrap();
        assert_eq!(b.alpha_n, rat_int(-1));
        assert_eq!(b.lower, rat_int(-13));
        // phi = (1,2,3), n=3: alpha_3 = 0, lower = -14
        let b = leftmost_zero_bounds(&seq(&[(1, 1), (2, 1), (3, 1)]), 3, &w).unwrap();
        assert_eq!(b.alpha_n, rat_int(0));
        assert_eq!(b.lower, rat_int(-14));
        assert!(matches!(
            leftmost_zero_bounds(&seq(&[(-1, 2)]), 2, &w),
            Err(Error::NegativeEntry { .. })
        ));
    }

    #[test]
    fn interlacing_between_consecutive_bell() {
        let w = rat(1, 1 << 20);
        for n in 1..=8 {
            let mut a = isolate_roots(&bell_poly(n + 1), &w).unwrap();
            let mut b = isolate_roots(&bell_poly(n), &w).unwrap();
            let verdict =
                interlacing_between(&mut a, &mut b, ZeroSelector::Negative, REFINEMENT_BUDGET);
            assert!(verdict.holds(), "n={n}: {verdict:?}");
        }
    }
}
