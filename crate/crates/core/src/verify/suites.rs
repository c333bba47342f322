//! Executable theorem suites over (phi, n).
//!
//! Each suite turns the clauses of one zero-structure theorem into cases:
//! exact count/simplicity checks ride on Sturm chains, order comparisons ride
//! on refined isolation intervals, and anything the interval engine cannot
//! decide within its budget is reported undecided rather than guessed.

use std::cmp::Ordering;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::genbell::{genbell, genbell_prefix};
use crate::phi::PhiSequence;
use crate::poly::ExactPoly;
use crate::rational::{format_rational, Rational};
use crate::roots::{
    compare_locs, interlacing_between, is_squarefree, isolate_roots, multiplicity_at_zero,
    real_root_count, InterlacingVerdict, LocOrder, RootIsolation, RootLoc, ZeroSelector,
    REFINEMENT_BUDGET,
};

use super::report::{inputs, Outcome, VerificationReport};

fn strictly_less(a: &RootLoc, b: &RootLoc) -> bool {
    compare_locs(a, b) == LocOrder::Less
}

/// Lazily isolated family Be_0^phi .. Be_{n_max}^phi.
pub(crate) struct Family {
    pub polys: Vec<ExactPoly>,
    isos: Vec<Option<RootIsolation>>,
    width: Rational,
}

impl Family {
    pub fn new(phi: &PhiSequence, n_max: usize, width: &Rational) -> Family {
        Family {
            polys: genbell_prefix(phi, n_max),
            isos: (0..=n_max).map(|_| None).collect(),
            width: width.clone(),
        }
    }

    pub fn poly(&self, n: usize) -> &ExactPoly {
        &self.polys[n]
    }

    pub fn take_iso(&mut self, n: usize) -> Result<RootIsolation> {
        match self.isos[n].take() {
            Some(iso) => Ok(iso),
            None => isolate_roots(&self.polys[n], &self.width),
        }
    }

    pub fn put_iso(&mut self, n: usize, iso: RootIsolation) {
        self.isos[n] = Some(iso);
    }
}

pub(crate) fn verdict_case(
    report: &mut VerificationReport,
    ins: std::collections::BTreeMap<String, String>,
    expected: &str,
    verdict: InterlacingVerdict,
) {
    let (outcome, observed) = match verdict {
        InterlacingVerdict::Holds => (Outcome::Pass, "interlaces".to_string()),
        InterlacingVerdict::Fails(w) => (Outcome::Fail, w),
        InterlacingVerdict::Undecided(w) => (Outcome::Undecided, w),
    };
    report.record(ins, expected, observed, outcome);
}

fn bool_case(
    report: &mut VerificationReport,
    ins: std::collections::BTreeMap<String, String>,
    expected: &str,
    observed: String,
    ok: bool,
) {
    report.record(
        ins,
        expected,
        observed,
        if ok { Outcome::Pass } else { Outcome::Fail },
    );
}

fn validate_nonneg(phi: &PhiSequence) -> Result<()> {
    if phi.is_nonneg() {
        return Ok(());
    }
    let bad = phi
        .first_negative_through(phi.prefix_len())
        .unwrap_or(phi.prefix_len() + 1);
    Err(Error::NegativeEntry {
        index: bad,
        value: format_rational(&phi.get(bad)),
    })
}

/// Default removal probes: three distinct indices covering the first entry,
/// the middle of the prefix, and one slot beyond it (removal past the prefix
/// is the identity for zero and constant tails). Affine tails only admit
/// removals inside the prefix.
pub fn default_probes(phi: &PhiSequence) -> Vec<usize> {
    let len = phi.prefix_len();
    let affine = matches!(phi.tail(), crate::phi::Tail::Affine(_));
    let mut probes: Vec<usize> = [1, len / 2 + 1, len + 1]
        .into_iter()
        .filter(|&l| !affine || l <= len)
        .collect();
    probes.sort_unstable();
    probes.dedup();
    let mut next = len + 2;
    while probes.len() < 3 && !affine {
        probes.push(next);
        next += 1;
    }
    probes
}

/// Default perturbations: a positive bump on the first entry and, where some
/// prefix entry is positive, a sign-preserving negative bump on it.
pub fn default_perturbations(phi: &PhiSequence) -> Vec<(usize, Rational)> {
    let mut out = vec![(1, Rational::new(1.into(), 2.into()))];
    for (i, v) in phi.prefix().iter().enumerate() {
        if v.is_positive() {
            out.push((i + 1, -(v / Rational::from_integer(2.into()))));
            break;
        }
    }
    out
}

/// The nonnegative-parameter theorem: constant-term dichotomy, n simple
/// nonpositive zeros, negative-zero interlacing against removal probes, and
/// the signed perturbation interlacing directions.
pub fn verify_nonneg_theorem(
    phi: &PhiSequence,
    n_max: usize,
    l_probes: &[usize],
    perturbations: &[(usize, Rational)],
    width: &Rational,
) -> Result<VerificationReport> {
    validate_nonneg(phi)?;
    let mut report = VerificationReport::new("nonneg", 0);
    let phi_str = phi.to_string();
    let i0 = phi.first_zero_index();

    let mut family = Family::new(phi, n_max + 1, width);

    for n in 1..=n_max {
        let base = inputs(&[("phi", phi_str.clone()), ("n", n.to_string())]);

        // part (1): Be_n(0) = prod phi_i vanishes exactly from i_0 on
        let c0 = family.poly(n).coeff(0);
        let expect_zero = i0.is_some_and(|i| n >= i);
        bool_case(
            &mut report,
            base.clone(),
            "constant term vanishes exactly when n >= i_0",
            format!("Be_n(0) = {}, i_0 = {i0:?}", format_rational(&c0)),
            c0.is_zero() == expect_zero,
        );

        // part (2): n simple nonpositive zeros
        let iso = family.take_iso(n)?;
        let counts = iso.sign_counts();
        let simple = iso.is_all_simple();
        let sf = is_squarefree(family.poly(n))?;
        bool_case(
            &mut report,
            base.clone(),
            "n simple nonpositive real zeros",
            format!(
                "distinct={} negative={} zero_mult={} positive={} squarefree={}",
                iso.distinct_count(),
                counts.negative,
                counts.zero_multiplicity,
                counts.positive,
                sf
            ),
            iso.distinct_count() == n && counts.positive == 0 && simple && sf,
        );
        family.put_iso(n, iso);

        // part (2): negative zeros of Be_{n+1} interlace those of Be_n^{phi^{l}}
        for &l in l_probes {
            let removed = phi.remove_term(l)?;
            let mut upper = family.take_iso(n + 1)?;
            let verdict = if removed == *phi {
                let mut lower = family.take_iso(n)?;
                let v = interlacing_between(
                    &mut upper,
                    &mut lower,
                    ZeroSelector::Negative,
                    REFINEMENT_BUDGET,
                );
                family.put_iso(n, lower);
                v
            } else {
                let mut lower = isolate_roots(&genbell(&removed, n), width)?;
                interlacing_between(
                    &mut upper,
                    &mut lower,
                    ZeroSelector::Negative,
                    REFINEMENT_BUDGET,
                )
            };
            family.put_iso(n + 1, upper);
            let mut ins = base.clone();
            ins.insert("l".into(), l.to_string());
            verdict_case(
                &mut report,
                ins,
                "negative zeros of Be_{n+1} interlace negative zeros of Be_n^{phi^{l}}",
                verdict,
            );
        }

        // part (4): perturbation interlacing, direction by the sign of M
        for (l, m) in perturbations {
            if *l > n {
                continue;
            }
            assert!(!m.is_zero() && *m > -phi.get(*l), "invalid perturbation");
            let perturbed = phi.perturb(*l, m);
            let mut pert_iso = isolate_roots(&genbell(&perturbed, n), width)?;
            let mut base_iso = family.take_iso(n)?;
            let verdict = if m.is_positive() {
                interlacing_between(
                    &mut pert_iso,
                    &mut base_iso,
                    ZeroSelector::Negative,
                    REFINEMENT_BUDGET,
                )
            } else {
                interlacing_between(
                    &mut base_iso,
                    &mut pert_iso,
                    ZeroSelector::Negative,
                    REFINEMENT_BUDGET,
                )
            };
            family.put_iso(n, base_iso);
            let mut ins = base.clone();
            ins.insert("l".into(), l.to_string());
            ins.insert("M".into(), format_rational(m));
            verdict_case(
                &mut report,
                ins,
                "perturbed negative zeros interlace in the direction of sign(M)",
                verdict,
            );
        }
    }
    Ok(report)
}

/// Zero monotonicity: every zero of Be_n^psi sits strictly below the matching
/// zero of Be_n^phi when phi < psi entrywise, except that a zero pinned at
/// the origin (present in both) stays put.
pub fn verify_monotonicity(
    phi: &PhiSequence,
    psi: &PhiSequence,
    n: usize,
    width: &Rational,
) -> Result<VerificationReport> {
    validate_nonneg(phi)?;
    validate_nonneg(psi)?;
    let mut strict = false;
    for i in 1..=n {
        match phi.get(i).cmp(&psi.get(i)) {
            Ordering::Greater => return Err(Error::NotStrictlyBelow { n }),
            Ordering::Less => strict = true,
            Ordering::Equal => {}
        }
    }
    if !strict {
        return Err(Error::NotStrictlyBelow { n });
    }

    let mut report = VerificationReport::new("monotonicity", 0);
    let ins = inputs(&[
        ("phi", phi.to_string()),
        ("psi", psi.to_string()),
        ("n", n.to_string()),
    ]);

    let mut iso_phi = isolate_roots(&genbell(phi, n), width)?;
    let mut iso_psi = isolate_roots(&genbell(psi, n), width)?;
    if iso_phi.distinct_count() != n || iso_psi.distinct_count() != n {
        report.record(
            ins,
            "both polynomials have n simple real zeros",
            format!(
                "distinct counts {} and {}",
                iso_phi.distinct_count(),
                iso_psi.distinct_count()
            ),
            Outcome::Fail,
        );
        return Ok(report);
    }

    // separate every nonzero root pair; zeros pinned at the origin are exact
    // points and already disjoint from everything else
    let zero = Rational::zero();
    let nonzero = |iso: &RootIsolation| -> Vec<usize> {
        iso.roots()
            .iter()
            .enumerate()
            .filter(|(_, r)| !(r.is_point() && *r.lo() == zero))
            .map(|(i, _)| i)
            .collect()
    };
    let sp = nonzero(&iso_psi);
    let sq = nonzero(&iso_phi);
    if let Err(e) = iso_psi.separate_selected(&sp, &mut iso_phi, &sq, REFINEMENT_BUDGET) {
        report.record(ins, "zeros strictly decrease", e.to_string(), Outcome::Undecided);
        return Ok(report);
    }

    let roots_phi = iso_phi.roots();
    let roots_psi = iso_psi.roots();
    for k in 0..n {
        let a = &roots_psi[k];
        let b = &roots_phi[k];
        let pinned =
            a.is_point() && b.is_point() && a.lo() == &zero && b.lo() == &zero;
        let ok = pinned || strictly_less(a, b);
        let mut ins_k = ins.clone();
        ins_k.insert("k".into(), (k + 1).to_string());
        bool_case(
            &mut report,
            ins_k,
            "zeta_k(psi) < zeta_k(phi) (equality only at a pinned zero root)",
            format!(
                "zeta_k(psi) in [{}, {}], zeta_k(phi) in [{}, {}]",
                format_rational(a.lo()),
                format_rational(a.hi()),
                format_rational(b.lo()),
                format_rational(b.hi())
            ),
            ok,
        );
    }
    Ok(report)
}

/// The one-negative-entry theorem: zero-count split at n = m, simplicity,
/// interlacing clauses for removal probes (including l = m), and the
/// monotonicity of the unique positive zero under perturbations.
pub fn verify_one_negative(
    phi: &PhiSequence,
    n_max: usize,
    width: &Rational,
) -> Result<VerificationReport> {
    // exactly one negative entry among phi_1..phi_{n_max + 1}, others positive
    let horizon = n_max + 1;
    let mut m = None;
    for i in 1..=horizon {
        let v = phi.get(i);
        if v.is_negative() {
            if m.is_some() {
                return Err(Error::NegativeEntryCount {
                    upto: horizon,
                    found: 2,
                });
            }
            m = Some(i);
        } else if v.is_zero() {
            return Err(Error::NegativeEntry {
                index: i,
                value: "0 (must be strictly positive)".into(),
            });
        }
    }
    let m = m.ok_or(Error::NegativeEntryCount {
        upto: horizon,
        found: 0,
    })?;

    let mut report = VerificationReport::new("one-negative", 0);
    let phi_str = phi.to_string();
    let mut family = Family::new(phi, n_max + 1, width);

    let probe_other = if m == 1 { 2 } else { 1 };

    for n in 1..=n_max {
        let mut base = inputs(&[("phi", phi_str.clone()), ("n", n.to_string())]);
        base.insert("m".into(), m.to_string());

        // count split
        let iso = family.take_iso(n)?;
        let counts = iso.sign_counts();
        let simple = iso.is_all_simple();
        let (exp_neg, exp_pos) = if n < m { (n, 0) } else { (n - 1, 1) };
        bool_case(
            &mut report,
            base.clone(),
            "n-1 negative and one positive zero for n >= m, all simple (n negative before)",
            format!(
                "negative={} positive={} zero_mult={} simple={}",
                counts.negative, counts.positive, counts.zero_multiplicity, simple
            ),
            counts.negative == exp_neg
                && counts.positive == exp_pos
                && counts.zero_multiplicity == 0
                && simple
                && iso.distinct_count() == n,
        );
        family.put_iso(n, iso);

        // interlacing clauses for l != m and l = m
        for &l in &[probe_other, m] {
            let removed = phi.remove_term(l)?;
            let mut lower = isolate_roots(&genbell(&removed, n), width)?;
            let mut upper = family.take_iso(n + 1)?;
            let selector = if l == m {
                ZeroSelector::All
            } else {
                ZeroSelector::Negative
            };
            let verdict =
                interlacing_between(&mut upper, &mut lower, selector, REFINEMENT_BUDGET);
            let mut ins = base.clone();
            ins.insert("l".into(), l.to_string());
            verdict_case(
                &mut report,
                ins.clone(),
                if l == m {
                    "zeros of Be_{n+1} interlace zeros of Be_n^{phi^{m}}"
                } else {
                    "negative zeros of Be_{n+1} interlace negative zeros of Be_n^{phi^{l}}"
                },
                verdict,
            );

            // positive-zero comparison for l != m and n >= m
            if l != m && n >= m {
                let outcome = positive_root_strictly_less(&mut upper, &mut lower);
                record_order_case(
                    &mut report,
                    ins,
                    "positive zero of Be_{n+1} below positive zero of Be_n^{phi^{l}}",
                    outcome,
                );
            }
            family.put_iso(n + 1, upper);
        }

        // positive-zero monotonicity via perturbations, for n >= m
        if n >= m {
            let m_bump = -(phi.get(m) / Rational::from_integer(2.into())); // > 0, keeps phi_m negative
            let perturbed_m = phi.perturb(m, &m_bump);
            let mut pert = isolate_roots(&genbell(&perturbed_m, n), width)?;
            let mut orig = family.take_iso(n)?;
            let outcome = positive_root_strictly_less(&mut pert, &mut orig);
            let mut ins = base.clone();
            ins.insert("perturb".into(), format!("l={m}, M={}", format_rational(&m_bump)));
            record_order_case(
                &mut report,
                ins,
                "positive zero decreases as phi_m increases",
                outcome,
            );

            if probe_other <= n {
                let bump = Rational::new(1.into(), 2.into());
                let perturbed_i = phi.perturb(probe_other, &bump);
                let mut pert_i = isolate_roots(&genbell(&perturbed_i, n), width)?;
                let outcome = positive_root_strictly_less(&mut orig, &mut pert_i);
                let mut ins = base.clone();
                ins.insert(
                    "perturb".into(),
                    format!("l={probe_other}, M=1/2"),
                );
                record_order_case(
                    &mut report,
                    ins,
                    "positive zero increases as a positive phi_i increases",
                    outcome,
                );
            }
            family.put_iso(n, orig);
        }
    }
    Ok(report)
}

/// Outcome of an order comparison between the unique positive roots of two
/// isolations.
enum OrderOutcome {
    Holds(String),
    Fails(String),
    Undecided(String),
}

fn positive_root_strictly_less(
    smaller: &mut RootIsolation,
    larger: &mut RootIsolation,
) -> OrderOutcome {
    let sa = smaller.indices_by_class(Ordering::Greater);
    let sb = larger.indices_by_class(Ordering::Greater);
    if sa.len() != 1 || sb.len() != 1 {
        return OrderOutcome::Fails(format!(
            "expected unique positive zeros, found {} and {}",
            sa.len(),
            sb.len()
        ));
    }
    if let Err(e) = smaller.separate_selected(&sa, larger, &sb, REFINEMENT_BUDGET) {
        return OrderOutcome::Undecided(e.to_string());
    }
    let a = smaller.locs_at(&sa).pop().unwrap();
    let b = larger.locs_at(&sb).pop().unwrap();
    let desc = format!(
        "[{}, {}] vs [{}, {}]",
        format_rational(a.lo()),
        format_rational(a.hi()),
        format_rational(b.lo()),
        format_rational(b.hi())
    );
    if strictly_less(&a, &b) {
        OrderOutcome::Holds(desc)
    } else {
        OrderOutcome::Fails(desc)
    }
}

fn record_order_case(
    report: &mut VerificationReport,
    ins: std::collections::BTreeMap<String, String>,
    expected: &str,
    outcome: OrderOutcome,
) {
    match outcome {
        OrderOutcome::Holds(obs) => report.record(ins, expected, obs, Outcome::Pass),
        OrderOutcome::Fails(obs) => report.record(ins, expected, obs, Outcome::Fail),
        OrderOutcome::Undecided(obs) => report.record(ins, expected, obs, Outcome::Undecided),
    }
}

/// Multiplicity of the zero at the origin for zero-tailed sequences: equals
/// the smallest positive integer m with prod (m + phi_i) != 0, checked at n
/// and at n + 1.
pub fn verify_zero_multiplicity(phi: &PhiSequence, n: usize) -> Result<VerificationReport> {
    if !phi.has_zero_tail() {
        return Err(Error::NonZeroTail {
            found: phi.tail().to_string(),
        });
    }
    let k = phi.prefix_len();
    if n <= k {
        return Err(Error::NBelowPrefix { n, k });
    }
    let mut report = VerificationReport::new("zero-mult", 0);

    // expected multiplicity: first positive integer not hit by -phi
    let mut expected = 1usize;
    loop {
        let target = -Rational::from_integer(expected.into());
        if phi.prefix().contains(&target) {
            expected += 1;
        } else {
            break;
        }
    }

    let ins = inputs(&[("phi", phi.to_string()), ("n", n.to_string())]);
    let polys = genbell_prefix(phi, n + 1);
    let m_n = multiplicity_at_zero(&polys[n])?;
    bool_case(
        &mut report,
        ins.clone(),
        "multiplicity at 0 equals 1 + longest prefix of {-1,-2,...} hit by phi",
        format!("multiplicity {m_n}, expected {expected}"),
        m_n == expected,
    );
    let m_next = multiplicity_at_zero(&polys[n + 1])?;
    bool_case(
        &mut report,
        ins,
        "multiplicity at 0 is the same for consecutive n",
        format!("n: {m_n}, n+1: {m_next}"),
        m_n == m_next,
    );
    Ok(report)
}

/// The double-negative-integer family phi = (-m, -m, 0, ...): for n >= 3
/// exactly two non-real zeros, a simple zero at the origin, n - 3 simple
/// negative zeros, and consecutive negative sets interlace.
pub fn verify_negative_pair(
    m: usize,
    n_max: usize,
    width: &Rational,
) -> Result<VerificationReport> {
    if m < 2 {
        return Err(Error::PairTooSmall(m));
    }
    let mm = -Rational::from_integer(m.into());
    let phi = PhiSequence::from_prefix(vec![mm.clone(), mm]);
    let mut report = VerificationReport::new("negative-pair", 0);
    let mut family = Family::new(&phi, n_max.max(3), width);

    for n in 3..=n_max {
        let base = inputs(&[("m", m.to_string()), ("n", n.to_string())]);
        let iso = family.take_iso(n)?;
        let counts = iso.sign_counts();
        bool_case(
            &mut report,
            base.clone(),
            "simple zero at 0, two non-real zeros, n-3 simple negative zeros",
            format!(
                "zero_mult={} nonreal={} negative={} positive={} simple={}",
                counts.zero_multiplicity,
                iso.nonreal_count(),
                counts.negative,
                counts.positive,
                iso.is_all_simple()
            ),
            counts.zero_multiplicity == 1
                && iso.nonreal_count() == 2
                && counts.negative == n - 3
                && counts.positive == 0
                && iso.is_all_simple(),
        );
        family.put_iso(n, iso);

        let mut upper = family.take_iso(n)?;
        let mut lower = family.take_iso(n - 1)?;
        let verdict =
            interlacing_between(&mut upper, &mut lower, ZeroSelector::Negative, REFINEMENT_BUDGET);
        family.put_iso(n - 1, lower);
        family.put_iso(n, upper);
        verdict_case(
            &mut report,
            base,
            "negative zeros of Be_n interlace negative zeros of Be_{n-1}",
            verdict,
        );
    }
    Ok(report)
}

/// Finite-support scan: per-n real counts against the parity floor, the
/// eventual positive count |H|, simplicity, stabilization point n_0, and the
/// separate negative/positive interlacing between consecutive n from n_0 on.
#[allow(clippy::needless_range_loop)] // n is the polynomial index throughout
pub fn verify_finite_support(
    phi: &PhiSequence,
    n_lo: usize,
    n_hi: usize,
    width: &Rational,
) -> Result<VerificationReport> {
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
    let s = crate::roots::positive_zero_prediction(phi)?;
    let n_lo = n_lo.max(1);
    assert!(n_lo <= n_hi, "empty scan window");

    let mut report = VerificationReport::new("finite-support", 0);
    let phi_str = phi.to_string();
    let mut family = Family::new(phi, n_hi, width);

    // chain-level scan: realness, simplicity, positive counts, parity floor
    let mut good = vec![false; n_hi + 1];
    for n in n_lo..=n_hi {
        let p = family.poly(n).clone();
        let count = real_root_count(&p)?;
        let simple = is_squarefree(&p)?;
        let positives = crate::roots::distinct_sign_counts(&p)?.positive;
        let base = inputs(&[("phi", phi_str.clone()), ("n", n.to_string())]);

        if n >= k {
            let floor = if k % 2 == 1 { n - k + 1 } else { n - k };
            bool_case(
                &mut report,
                base.clone(),
                "real-zero count at least n-K+1 (K odd) or n-K (K even)",
                format!("real(with multiplicity)={} floor={floor}", count.with_multiplicity),
                count.with_multiplicity >= floor,
            );
        }
        good[n] = count.with_multiplicity == n && simple && positives == s;
        report.record(
            base,
            "per-n profile (real, simple, positive count)",
            format!(
                "real={} simple={simple} positive={positives} (|H|={s})",
                count.with_multiplicity
            ),
            Outcome::ReportOnly,
        );
    }

    // n_0: start of the terminal run where everything holds
    let mut n0 = None;
    for n in (n_lo..=n_hi).rev() {
        if good[n] {
            n0 = Some(n);
        } else {
            break;
        }
    }
    let header = inputs(&[("phi", phi_str.clone())]);
    match n0 {
        None => {
            report.record(
                header,
                "stabilization point n_0",
                format!("no n in [{n_lo}, {n_hi}] starts an all-real-simple run with |H| positives"),
                Outcome::Undecided,
            );
            return Ok(report);
        }
        Some(n0) => {
            report.record(
                header,
                "stabilization point n_0",
                n0.to_string(),
                Outcome::Pass,
            );
            // persistence is mie2: anchored at the first real+simple n >= K
            for n in n0..=n_hi {
                let base = inputs(&[("phi", phi_str.clone()), ("n", n.to_string())]);
                bool_case(
                    &mut report,
                    base,
                    "real simple zeros persist with |H| positive zeros",
                    format!("holds={}", good[n]),
                    good[n],
                );
            }
            // interlacing of negative and positive sets between consecutive n
            for n in n0..n_hi {
                let base = inputs(&[("phi", phi_str.clone()), ("n", n.to_string())]);
                let mut upper = family.take_iso(n + 1)?;
                let mut lower = family.take_iso(n)?;
                let vn = interlacing_between(
                    &mut upper,
                    &mut lower,
                    ZeroSelector::Negative,
                    REFINEMENT_BUDGET,
                );
                let vp = interlacing_between(
                    &mut upper,
                    &mut lower,
                    ZeroSelector::Positive,
                    REFINEMENT_BUDGET,
                );
                family.put_iso(n, lower);
                family.put_iso(n + 1, upper);
                verdict_case(
                    &mut report,
                    base.clone(),
                    "negative zeros of Be_{n+1} interlace negative zeros of Be_n",
                    vn,
                );
                verdict_case(
                    &mut report,
                    base,
                    "positive zeros of Be_{n+1} interlace positive zeros of Be_n",
                    vp,
                );
            }
        }
    }
    Ok(report)
}
