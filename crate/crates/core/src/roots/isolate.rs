//! Certified real-root isolation.
//!
//! The square-free part is split off by Yun's algorithm (multiplicities come
//! with it for free), rational roots are deflated out exactly, and the
//! irrational remainder is isolated by Sturm subdivision over a power-of-two
//! box. Every interval is open, has dyadic endpoints at which the defining
//! factor has opposite nonzero signs, and contains exactly one real root.

use std::cmp::Ordering;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::ExactPoly;
use crate::rational::{format_rational, Rational};

use super::dyadic::Dyadic;
use super::int_poly::IntPoly;
use super::sturm::SturmChain;

/// One isolated real root: an exact rational point or a certified open
/// interval around a single irrational root.
#[derive(Clone, Debug, PartialEq)]
pub enum RootLoc {
    Point {
        value: Rational,
        multiplicity: usize,
    },
    Interval {
        lo: Rational,
        hi: Rational,
        multiplicity: usize,
    },
}

impl RootLoc {
    pub fn multiplicity(&self) -> usize {
        match self {
            RootLoc::Point { multiplicity, .. } => *multiplicity,
            RootLoc::Interval { multiplicity, .. } => *multiplicity,
        }
    }

    pub fn lo(&self) -> &Rational {
        match self {
            RootLoc::Point { value, .. } => value,
            RootLoc::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &Rational {
        match self {
            RootLoc::Point { value, .. } => value,
            RootLoc::Interval { hi, .. } => hi,
        }
    }

    pub fn is_point(&self) -> bool {
        matches!(self, RootLoc::Point { .. })
    }

    /// True if the root is certainly negative (resp. positive for `.1`).
    pub fn sign_class(&self) -> Ordering {
        match self {
            RootLoc::Point { value, .. } => value.cmp(&Rational::zero()),
            RootLoc::Interval { lo, hi, .. } => {
                if !hi.is_positive() {
                    Ordering::Less
                } else if !lo.is_negative() {
                    Ordering::Greater
                } else {
                    unreachable!("interval straddles zero after sign resolution")
                }
            }
        }
    }
}

/// How two isolated roots compare.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum LocOrder {
    Less,
    Greater,
    SharedPoint,
    Overlap,
}

pub(crate) fn compare_locs(a: &RootLoc, b: &RootLoc) -> LocOrder {
    let both_points = a.is_point() && b.is_point();
    match (a.hi().cmp(b.lo()), b.hi().cmp(a.lo())) {
        (Ordering::Less, _) => LocOrder::Less,
        (_, Ordering::Less) => LocOrder::Greater,
        (Ordering::Equal, Ordering::Equal) if both_points => LocOrder::SharedPoint,
        // touching open intervals still order strictly
        (Ordering::Equal, _) => LocOrder::Less,
        (_, Ordering::Equal) => LocOrder::Greater,
        _ => LocOrder::Overlap,
    }
}

#[derive(Clone, Debug)]
struct Factor {
    /// Square-free, rational-root-free defining polynomial.
    sf: IntPoly,
}

#[derive(Clone, Debug)]
enum Entry {
    Exact {
        value: Rational,
        multiplicity: usize,
    },
    Bracket {
        lo: Dyadic,
        hi: Dyadic,
        sign_lo: i8,
        factor: usize,
        multiplicity: usize,
    },
}

impl Entry {
    fn lo_rational(&self) -> Rational {
        match self {
            Entry::Exact { value, .. } => value.clone(),
            Entry::Bracket { lo, .. } => lo.to_rational(),
        }
    }

    fn to_loc(&self) -> RootLoc {
        match self {
            Entry::Exact {
                value,
                multiplicity,
            } => RootLoc::Point {
                value: value.clone(),
                multiplicity: *multiplicity,
            },
            Entry::Bracket {
                lo,
                hi,
                multiplicity,
                ..
            } => RootLoc::Interval {
                lo: lo.to_rational(),
                hi: hi.to_rational(),
                multiplicity: *multiplicity,
            },
        }
    }
}

/// Certified list of the real roots of a polynomial.
#[derive(Clone, Debug)]
pub struct RootIsolation {
    entries: Vec<Entry>,
    factors: Vec<Factor>,
    square_free_part: ExactPoly,
    degree: usize,
}

/// Distinct-root counts by sign, plus the multiplicity of a root at zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignCounts {
    pub negative: usize,
    pub zero_multiplicity: usize,
    pub positive: usize,
}

/// Isolate every real root of `p` into disjoint certified locations, with
/// intervals narrower than `width`.
///
/// ```
/// use genbell_core::poly::ExactPoly;
/// use genbell_core::rational::rat;
/// use genbell_core::roots::isolate_roots;
///
/// // x^3 + 3x^2 + x = x (x^2 + 3x + 1)
/// let p = ExactPoly::from_integers(&[0, 1, 3, 1]);
/// let iso = isolate_roots(&p, &rat(1, 1024))?;
/// assert_eq!(iso.distinct_count(), 3);
/// assert_eq!(iso.sign_counts().zero_multiplicity, 1);
/// # Ok::<(), genbell_core::Error>(())
/// ```
pub fn isolate_roots(p: &ExactPoly, width: &Rational) -> Result<RootIsolation> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = p.degree().unwrap();
    let a = IntPoly::from_exact(p);

    // square-free decomposition (multiplicities via Yun when needed)
    let sf_factors: Vec<(IntPoly, usize)> = {
        let g = a.gcd(&a.derivative());
        if g.degree() == Some(0) || degree == 0 {
            vec![(a.clone(), 1)]
        } else {
            yun_decomposition(&a)
        }
    };

    let mut square_free_part = ExactPoly::one();
    for (f, _) in &sf_factors {
        square_free_part = &square_free_part * &f.to_exact();
    }
    let square_free_part = square_free_part.monic();

    let mut factors = Vec::new();
    let mut entries: Vec<Entry> = Vec::new();
    for (full, multiplicity) in sf_factors {
        let (mut sf, rational_roots) = full.extract_rational_roots();
        for value in rational_roots {
            entries.push(Entry::Exact {
                value,
                multiplicity,
            });
        }
        if sf.degree().is_none_or(|d| d == 0) {
            continue;
        }
        let idx = factors.len();
        loop {
            match isolate_squarefree(&sf, width, idx, multiplicity) {
                IsolateOutcome::Done(brackets) => {
                    entries.extend(brackets);
                    break;
                }
                IsolateOutcome::FoundRational(r) => {
                    sf = sf.deflate_root(&r);
                    entries.push(Entry::Exact {
                        value: r,
                        multiplicity,
                    });
                }
            }
        }
        factors.push(Factor { sf });
    }

    let mut isolation = RootIsolation {
        entries,
        factors,
        square_free_part,
        degree,
    };
    isolation.sort_and_disjoin();
    isolation.resolve_zero_straddles();
    debug_assert!(isolation.check_invariants());
    Ok(isolation)
}

enum IsolateOutcome {
    Done(Vec<Entry>),
    FoundRational(Rational),
}

fn isolate_squarefree(
    sf: &IntPoly,
    width: &Rational,
    factor: usize,
    multiplicity: usize,
) -> IsolateOutcome {
    let chain = SturmChain::new(sf);
    let t = sf.root_bound_exp();
    let lo = Dyadic::power_of_two(t, true);
    let hi = Dyadic::power_of_two(t, false);
    let v_lo = chain.variations_at_dyadic(&lo);
    let v_hi = chain.variations_at_dyadic(&hi);

    let mut brackets = Vec::new();
    let mut stack = vec![(lo, v_lo, hi, v_hi)];
    while let Some((lo, v_lo, hi, v_hi)) = stack.pop() {
        match v_lo - v_hi {
            0 => {}
            1 => {
                let sign_lo = sf.sign_at_dyadic(&lo);
                debug_assert_ne!(sign_lo, 0);
                debug_assert_eq!(sf.sign_at_dyadic(&hi), -sign_lo);
                let mut entry = Entry::Bracket {
                    lo,
                    hi,
                    sign_lo,
                    factor,
                    multiplicity,
                };
                if let Some(r) = refine_bracket_to_width(&mut entry, sf, width) {
                    return IsolateOutcome::FoundRational(r);
                }
                brackets.push(entry);
            }
            _ => {
                let mid = Dyadic::midpoint(&lo, &hi);
                if sf.sign_at_dyadic(&mid) == 0 {
                    return IsolateOutcome::FoundRational(mid.to_rational());
                }
                let v_mid = chain.variations_at_dyadic(&mid);
                stack.push((lo, v_lo, mid.clone(), v_mid));
                stack.push((mid, v_mid, hi, v_hi));
            }
        }
    }
    IsolateOutcome::Done(brackets)
}

/// Bisect a bracket until its width drops below `width`. Returns a rational
/// root if one of the midpoints hits it exactly.
fn refine_bracket_to_width(
    entry: &mut Entry,
    sf: &IntPoly,
    width: &Rational,
) -> Option<Rational> {
    let Entry::Bracket { lo, hi, sign_lo, .. } = entry else {
        return None;
    };
    while &Dyadic::width(lo, hi) >= width {
        let mid = Dyadic::midpoint(lo, hi);
        let s = sf.sign_at_dyadic(&mid);
        if s == 0 {
            return Some(mid.to_rational());
        }
        if s == *sign_lo {
            *lo = mid;
        } else {
            *hi = mid;
        }
    }
    None
}

/// Yun's square-free decomposition over the integers; returns coprime
/// square-free factors with their multiplicities.
fn yun_decomposition(a: &IntPoly) -> Vec<(IntPoly, usize)> {
    let mut out = Vec::new();
    let d = a.derivative();
    let g = a.gcd(&d);
    let mut w = a.exact_div(&g).expect("gcd divides");
    let mut y = d.exact_div(&g).expect("gcd divides derivative");
    let mut i = 1usize;
    loop {
        let wd = w.derivative();
        let z = sub(&y, &wd);
        if w.degree() == Some(0) {
            break;
        }
        let h = w.gcd(&z);
        if h.degree().is_some_and(|dg| dg > 0) {
            out.push((h.clone(), i));
        }
        w = w.exact_div(&h).expect("yun factor divides");
        y = z.exact_div(&h).expect("yun cofactor divides");
        i += 1;
    }
    out
}

fn sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    let mut coeffs = Vec::with_capacity(n);
    for j in 0..n {
        let av = a.coeffs().get(j).cloned().unwrap_or_else(Zero::zero);
        let bv = b.coeffs().get(j).cloned().unwrap_or_else(Zero::zero);
        coeffs.push(av - bv);
    }
    IntPoly::from_coeffs(coeffs)
}

impl RootIsolation {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn square_free_part(&self) -> &ExactPoly {
        &self.square_free_part
    }

    /// Ordered root locations.
    pub fn roots(&self) -> Vec<RootLoc> {
        self.entries.iter().map(Entry::to_loc).collect()
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    /// Sum of multiplicities of the real roots.
    pub fn real_count_with_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.to_loc().multiplicity()).sum()
    }

    pub fn nonreal_count(&self) -> usize {
        self.degree - self.real_count_with_multiplicity()
    }

    pub fn is_all_simple(&self) -> bool {
        self.entries.iter().all(|e| e.to_loc().multiplicity() == 1)
    }

    pub fn leftmost(&self) -> Option<RootLoc> {
        self.entries.first().map(Entry::to_loc)
    }

    /// Distinct counts by sign and the zero-root multiplicity.
    pub fn sign_counts(&self) -> SignCounts {
        let mut counts = SignCounts {
            negative: 0,
            zero_multiplicity: 0,
            positive: 0,
        };
        for e in &self.entries {
            let loc = e.to_loc();
            match loc {
                RootLoc::Point { ref value, .. } if value.is_zero() => {
                    counts.zero_multiplicity = loc.multiplicity();
                }
                _ => match loc.sign_class() {
                    Ordering::Less => counts.negative += 1,
                    Ordering::Greater => counts.positive += 1,
                    Ordering::Equal => counts.zero_multiplicity = loc.multiplicity(),
                },
            }
        }
        counts
    }

    /// Roots strictly below zero, in increasing order.
    pub fn negative_roots(&self) -> Vec<RootLoc> {
        self.entries
            .iter()
            .map(Entry::to_loc)
            .filter(|l| l.sign_class() == Ordering::Less)
            .collect()
    }

    /// Roots strictly above zero, in increasing order.
    pub fn positive_roots(&self) -> Vec<RootLoc> {
        self.entries
            .iter()
            .map(Entry::to_loc)
            .filter(|l| l.sign_class() == Ordering::Greater)
            .collect()
    }

    /// Bisect the entry at `idx` up to `steps` times (no-op for exact points).
    pub fn refine_entry(&mut self, idx: usize, steps: usize) {
        for _ in 0..steps {
            if !self.bisect_entry(idx) {
                return;
            }
        }
    }

    /// Shrink every interval below the given width.
    pub fn refine_to_width(&mut self, width: &Rational) {
        for idx in 0..self.entries.len() {
            let factor_sf = match &self.entries[idx] {
                Entry::Bracket { factor, .. } => self.factors[*factor].sf.clone(),
                Entry::Exact { .. } => continue,
            };
            if let Some(r) = refine_bracket_to_width(&mut self.entries[idx], &factor_sf, width) {
                let multiplicity = self.entries[idx].to_loc().multiplicity();
                self.entries[idx] = Entry::Exact {
                    value: r,
                    multiplicity,
                };
            }
        }
    }

    /// Bisect entry `idx` once; true if it is still an interval.
    fn bisect_entry(&mut self, idx: usize) -> bool {
        let factor_sf = match &self.entries[idx] {
            Entry::Bracket { factor, .. } => self.factors[*factor].sf.clone(),
            Entry::Exact { .. } => return false,
        };
        let Entry::Bracket { lo, hi, sign_lo, multiplicity, .. } = &mut self.entries[idx] else {
            unreachable!()
        };
        let mid = Dyadic::midpoint(lo, hi);
        let s = factor_sf.sign_at_dyadic(&mid);
        if s == 0 {
            let multiplicity = *multiplicity;
            self.entries[idx] = Entry::Exact {
                value: mid.to_rational(),
                multiplicity,
            };
            return false;
        }
        if s == *sign_lo {
            *lo = mid;
        } else {
            *hi = mid;
        }
        true
    }

    fn width_of(&self, idx: usize) -> Rational {
        match &self.entries[idx] {
            Entry::Exact { .. } => Rational::zero(),
            Entry::Bracket { lo, hi, .. } => Dyadic::width(lo, hi),
        }
    }

    /// Sort entries and shrink intervals from distinct factors until all are
    /// pairwise disjoint. Roots of coprime factors are distinct, so this
    /// terminates.
    fn sort_and_disjoin(&mut self) {
        let mut guard = 0usize;
        loop {
            // the (lo, hi) key puts an exact point ahead of a bracket that
            // starts at the same value (the bracket's root lies above it)
            self.entries
                .sort_by_key(|a| (a.lo_rational(), a.to_loc().hi().clone()));
            let mut clean = true;
            for i in 1..self.entries.len() {
                let (a, b) = (&self.entries[i - 1], &self.entries[i]);
                match compare_locs(&a.to_loc(), &b.to_loc()) {
                    LocOrder::Less => {}
                    LocOrder::Greater => clean = false, // re-sort handles it
                    LocOrder::SharedPoint => {
                        unreachable!("coprime factors share a rational root")
                    }
                    LocOrder::Overlap => {
                        clean = false;
                        let wider = if self.width_of(i - 1) >= self.width_of(i) {
                            i - 1
                        } else {
                            i
                        };
                        self.bisect_entry(wider);
                    }
                }
            }
            if clean {
                return;
            }
            guard += 1;
            assert!(
                guard < 100_000,
                "disjointness refinement failed to terminate"
            );
        }
    }

    /// Shrink any interval containing zero to one side of it. The defining
    /// factors never vanish at zero (rational roots were deflated), so one
    /// exact sign evaluation decides the side.
    fn resolve_zero_straddles(&mut self) {
        for entry in &mut self.entries {
            let Entry::Bracket { lo, hi, sign_lo, factor, .. } = entry else {
                continue;
            };
            if lo.sign() < 0 && hi.sign() > 0 {
                let s0 = self.factors[*factor].sf.sign_at_zero();
                debug_assert_ne!(s0, 0);
                if s0 == *sign_lo {
                    *lo = Dyadic::zero();
                    *sign_lo = s0;
                } else {
                    *hi = Dyadic::zero();
                }
            }
        }
    }

    fn check_invariants(&self) -> bool {
        let total: usize = self.real_count_with_multiplicity();
        if total > self.degree || !(self.degree - total).is_multiple_of(2) {
            return false;
        }
        for i in 1..self.entries.len() {
            if compare_locs(&self.entries[i - 1].to_loc(), &self.entries[i].to_loc())
                != LocOrder::Less
            {
                return false;
            }
        }
        true
    }

    /// Entry indices whose root falls in the given sign class. Stable under
    /// refinement: intervals never straddle zero.
    pub(crate) fn indices_by_class(&self, class: Ordering) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.to_loc().sign_class() == class)
            .map(|(i, _)| i)
            .collect()
    }

    pub(crate) fn all_indices(&self) -> Vec<usize> {
        (0..self.entries.len()).collect()
    }

    pub(crate) fn locs_at(&self, indices: &[usize]) -> Vec<RootLoc> {
        indices.iter().map(|&i| self.entries[i].to_loc()).collect()
    }

    /// Refine both isolations until every root of one is strictly ordered
    /// against every root of the other. Detects genuinely shared roots via a
    /// polynomial gcd and reports them as exhaustion of the comparison.
    pub fn separate_from(&mut self, other: &mut RootIsolation, budget: usize) -> Result<()> {
        let a = self.all_indices();
        let b = other.all_indices();
        self.separate_selected(&a, other, &b, budget)
    }

    /// As `separate_from`, restricted to the given entry indices on each side.
    pub(crate) fn separate_selected(
        &mut self,
        sel_self: &[usize],
        other: &mut RootIsolation,
        sel_other: &[usize],
        budget: usize,
    ) -> Result<()> {
        let mut spent_self = vec![0usize; self.entries.len()];
        let mut spent_other = vec![0usize; other.entries.len()];
        loop {
            let mut progressed = false;
            let mut all_clean = true;
            for &i in sel_self {
                for &j in sel_other {
                    match compare_locs(&self.entries[i].to_loc(), &other.entries[j].to_loc()) {
                        LocOrder::Less | LocOrder::Greater => continue,
                        LocOrder::SharedPoint => {
                            return Err(Error::RefinementExhausted(format!(
                                "shared root at {}",
                                format_rational(self.entries[i].to_loc().lo())
                            )));
                        }
                        LocOrder::Overlap => {
                            all_clean = false;
                            // an exact rational point inside the other's
                            // bracket is decisively shared or not
                            if (self.entries[i].to_loc().is_point()
                                || other.entries[j].to_loc().is_point())
                                && self.shares_root_in_overlap(i, other, j) {
                                    return Err(Error::RefinementExhausted(format!(
                                        "shared root at {}",
                                        format_rational(&self.entries[i].lo_rational())
                                    )));
                                }
                            let self_is_point = self.entries[i].to_loc().is_point();
                            let other_is_point = other.entries[j].to_loc().is_point();
                            let self_exhausted = spent_self[i] >= budget || self_is_point;
                            let other_exhausted = spent_other[j] >= budget || other_is_point;
                            if self_exhausted && other_exhausted {
                                // only now test for a genuinely shared root:
                                // the overlap is tiny, so a gcd root inside it
                                // is the root of both brackets
                                if self.shares_root_in_overlap(i, other, j) {
                                    return Err(Error::RefinementExhausted(format!(
                                        "shared root inside ({}, {})",
                                        format_rational(&self.entries[i].lo_rational()),
                                        format_rational(other.entries[j].to_loc().hi()),
                                    )));
                                }
                                return Err(Error::RefinementExhausted(format!(
                                    "{} bisections did not separate roots near {}",
                                    budget,
                                    format_rational(&self.entries[i].lo_rational())
                                )));
                            }
                            let take_self = if self_exhausted {
                                false
                            } else if other_exhausted {
                                true
                            } else {
                                spent_self[i] <= spent_other[j]
                            };
                            if take_self {
                                spent_self[i] += 1;
                                self.bisect_entry(i);
                            } else {
                                spent_other[j] += 1;
                                other.bisect_entry(j);
                            }
                            progressed = true;
                        }
                    }
                }
            }
            if all_clean {
                return Ok(());
            }
            if !progressed {
                return Err(Error::RefinementExhausted(
                    "separation made no progress".to_string(),
                ));
            }
        }
    }

    /// True when the two entries' defining polynomials share a root inside
    /// the overlap of the two intervals.
    fn shares_root_in_overlap(&self, i: usize, other: &RootIsolation, j: usize) -> bool {
        let (pa, loc_a) = match &self.entries[i] {
            Entry::Exact { value, .. } => {
                // a rational point inside the other's bracket: shared iff the
                // other's factor vanishes there
                if let Entry::Bracket { factor, .. } = &other.entries[j] {
                    return other.factors[*factor].sf.sign_at_rational(value) == 0;
                }
                return false;
            }
            Entry::Bracket { factor, .. } => {
                (&self.factors[*factor].sf, self.entries[i].to_loc())
            }
        };
        let (pb, loc_b) = match &other.entries[j] {
            Entry::Exact { value, .. } => {
                return pa.sign_at_rational(value) == 0;
            }
            Entry::Bracket { factor, .. } => {
                (&other.factors[*factor].sf, other.entries[j].to_loc())
            }
        };
        let g = pa.gcd(pb);
        if g.degree().is_none_or(|d| d == 0) {
            return false;
        }
        let olo = loc_a.lo().max(loc_b.lo()).clone();
        let ohi = loc_a.hi().min(loc_b.hi()).clone();
        if olo >= ohi {
            return false;
        }
        SturmChain::new(&g).count_rational(&olo, &ohi) > 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genbell::genbell;
    use crate::phi::PhiSequence;
    use crate::rational::{rat, rat_int};

    fn width_default() -> Rational {
        rat(1, 1 << 20)
    }

    #[test]
    fn quadratic_two_intervals() {
        // x^2 + 4x + 2: roots -2 - sqrt2 (~ -3.414), -2 + sqrt2 (~ -0.586)
        let p = ExactPoly::from_integers(&[2, 4, 1]);
        let iso = isolate_roots(&p, &rat(1, 100)).unwrap();
        let roots = iso.roots();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert_eq!(r.multiplicity(), 1);
            assert!(!r.is_point());
            assert!(r.hi() - r.lo() < rat(1, 100));
        }
        assert!(roots[0].lo() < &rat(-341, 100) && roots[0].hi() > &rat(-342, 100));
        assert!(roots[1].lo() < &rat(-58, 100) && roots[1].hi() > &rat(-59, 100));
        assert_eq!(iso.nonreal_count(), 0);
    }

    #[test]
    fn double_root_is_exact_point() {
        let p = ExactPoly::from_integers(&[0, 0, 1]); // x^2
        let iso = isolate_roots(&p, &width_default()).unwrap();
        assert_eq!(
            iso.roots(),
            vec![RootLoc::Point {
                value: rat_int(0),
                multiplicity: 2
            }]
        );
        assert_eq!(iso.square_free_part(), &ExactPoly::x());
    }

    #[test]
    fn bell3_zero_point_plus_two_negatives() {
        // x^3 + 3x^2 + x = x (x^2 + 3x + 1)
        let p = ExactPoly::from_integers(&[0, 1, 3, 1]);
        let iso = isolate_roots(&p, &width_default()).unwrap();
        let roots = iso.roots();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(|r| r.multiplicity() == 1));
        let counts = iso.sign_counts();
        assert_eq!(counts.negative, 2);
        assert_eq!(counts.zero_multiplicity, 1);
        assert_eq!(counts.positive, 0);
    }

    #[test]
    fn rational_roots_are_points() {
        // (2x-1)(x+3)(x^2+1)
        let p = &(&ExactPoly::from_integers(&[-1, 2]) * &ExactPoly::from_integers(&[3, 1]))
            * &ExactPoly::from_integers(&[1, 0, 1]);
        let iso = isolate_roots(&p, &width_default()).unwrap();
        assert_eq!(
            iso.roots(),
            vec![
                RootLoc::Point { value: rat_int(-3), multiplicity: 1 },
                RootLoc::Point { value: rat(1, 2), multiplicity: 1 },
            ]
        );
        assert_eq!(iso.nonreal_count(), 2);
    }

    #[test]
    fn multiplicities_via_decomposition() {
        // (x+1)^3 (x-2)^2 (x^2+x+1)
        let p = &(&ExactPoly::from_integers(&[1, 1]).pow(3)
            * &ExactPoly::from_integers(&[-2, 1]).pow(2))
            * &ExactPoly::from_integers(&[1, 1, 1]);
        let iso = isolate_roots(&p, &width_default()).unwrap();
        assert_eq!(
            iso.roots(),
            vec![
                RootLoc::Point { value: rat_int(-1), multiplicity: 3 },
                RootLoc::Point { value: rat_int(2), multiplicity: 2 },
            ]
        );
        assert_eq!(iso.real_count_with_multiplicity(), 5);
        assert_eq!(iso.nonreal_count(), 2);
        assert!(!iso.is_all_simple());
    }

    #[test]
    fn mixed_multiplicities_with_irrational_roots() {
        // (x^2 - 2)^2 (x - 1/3)
        let p = &ExactPoly::from_integers(&[-2, 0, 1]).pow(2)
            * &ExactPoly::from_coeffs(vec![rat(-1, 3), rat_int(1)]);
        let iso = isolate_roots(&p, &width_default()).unwrap();
        let roots = iso.roots();
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[0].multiplicity(), 2); // -sqrt2
        assert_eq!(roots[1].multiplicity(), 1); // 1/3
        assert_eq!(roots[2].multiplicity(), 2); // +sqrt2
        assert_eq!(roots[1], RootLoc::Point { value: rat(1, 3), multiplicity: 1 });
        assert_eq!(iso.real_count_with_multiplicity(), 5);
    }

    #[test]
    fn genbell_negative_pair_counts() {
        // phi = (-2, -2): Be_4 has a zero at 0, one negative root, two nonreal
        let phi = PhiSequence::from_prefix(vec![rat_int(-2), rat_int(-2)]);
        let p = genbell(&phi, 4);
        let iso = isolate_roots(&p, &width_default()).unwrap();
        let counts = iso.sign_counts();
        assert_eq!(counts.zero_multiplicity, 1);
        assert_eq!(counts.negative, 1);
        assert_eq!(counts.positive, 0);
        assert_eq!(iso.nonreal_count(), 2);
    }

    #[test]
    fn separation_detects_shared_roots() {
        let p = ExactPoly::from_integers(&[2, 4, 1]);
        let q = &p * &ExactPoly::from_integers(&[5, 1]); // shares both roots of p
        let mut a = isolate_roots(&p, &rat(1, 4)).unwrap();
        let mut b = isolate_roots(&q, &rat(1, 4)).unwrap();
        let err = a.separate_from(&mut b, 64).unwrap_err();
        assert!(matches!(err, Error::RefinementExhausted(_)));
    }

    #[test]
    fn separation_of_close_roots() {
        // roots at 1/2 +- 1/2048 vs root at 1/2
        let p = &ExactPoly::from_coeffs(vec![rat(-1023, 2048), rat_int(1)])
            * &ExactPoly::from_coeffs(vec![rat(-1025, 2048), rat_int(1)]);
        let q = ExactPoly::from_coeffs(vec![rat(-1, 2), rat_int(1)]);
        let mut a = isolate_roots(&p, &rat(1, 4)).unwrap();
        let mut b = isolate_roots(&q, &rat(1, 4)).unwrap();
        a.separate_from(&mut b, 64).unwrap();
        let av = a.roots();
        let bv = b.roots();
        assert_eq!(compare_locs(&av[0], &bv[0]), LocOrder::Less);
        assert_eq!(compare_locs(&bv[0], &av[1]), LocOrder::Less);
    }

    #[test]
    fn zero_poly_rejected() {
        assert!(matches!(
            isolate_roots(&ExactPoly::zero(), &width_default()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn isolation_soundness_against_sturm_counts() {
        // random-ish products of linear factors and an irreducible quadratic
        let lin: [(i64, i64); 4] = [(1, 2), (-3, 1), (7, 5), (0, 1)];
        let mut p = ExactPoly::from_integers(&[3, 0, 1]); // x^2 + 3
        for (n, d) in lin {
            p = &p * &ExactPoly::from_coeffs(vec![rat(n, d), rat_int(1)]);
        }
        let iso = isolate_roots(&p, &width_default()).unwrap();
        assert_eq!(iso.distinct_count(), 4);
        assert_eq!(iso.nonreal_count(), 2);
        let a = IntPoly::from_exact(&p);
        let chain = SturmChain::new(&a);
        assert_eq!(chain.count_all(), 4);
        // every interval contains exactly one distinct root
        for r in iso.roots() {
            if !r.is_point() {
                let c = chain.count_rational(r.lo(), r.hi());
                assert_eq!(c, 1);
            }
        }
    }
}
