//! Explorers for the two open problems: the shifted-parameter interlacing
//! set and the real-zero conjecture for Bell-basis combinations.
//!
//! First-n observations are report-only (no finite scan can settle them);
//! the persistence clauses are theorems and are asserted pass/fail.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::genbell::genbell_prefix;
use crate::poly::{t_operator, ExactPoly};
use crate::phi::PhiSequence;
use crate::rational::{format_rational, Rational};
use crate::roots::{
    interlacing_between, is_squarefree, isolate_roots, real_root_count, InterlacingVerdict,
    ZeroSelector, REFINEMENT_BUDGET,
};
use crate::stirling::bell_poly;

use super::report::{inputs, Outcome, VerificationReport};

/// For each n <= n_max, test whether the zeros of Be_n^{s+phi} interlace the
/// zeros of Be_n^phi, and report the first failing n (or none). Membership
/// of s in the interlacing set cannot be decided by any finite scan, so the
/// per-n outcomes are report-only.
pub fn explore_shift_interlacing(
    phi: &PhiSequence,
    s: &Rational,
    n_max: usize,
    width: &Rational,
) -> Result<VerificationReport> {
    if !phi.is_nonneg() {
        let bad = phi
            .first_negative_through(phi.prefix_len())
            .unwrap_or(phi.prefix_len() + 1);
        return Err(Error::NegativeEntry {
            index: bad,
            value: format_rational(&phi.get(bad)),
        });
    }
    if !s.is_positive() {
        return Err(Error::NonpositiveShift(format_rational(s)));
    }

    let mut report = VerificationReport::new("shift", 0);
    let shifted = phi.shift(s);
    let base_polys = genbell_prefix(phi, n_max);
    let shifted_polys = genbell_prefix(&shifted, n_max);

    let mut first_failure: Option<usize> = None;
    for n in 1..=n_max {
        let ins = inputs(&[
            ("phi", phi.to_string()),
            ("s", format_rational(s)),
            ("n", n.to_string()),
        ]);
        let mut upper = isolate_roots(&shifted_polys[n], width)?;
        let mut lower = isolate_roots(&base_polys[n], width)?;
        let verdict =
            interlacing_between(&mut upper, &mut lower, ZeroSelector::All, REFINEMENT_BUDGET);
        let observed = match &verdict {
            InterlacingVerdict::Holds => "interlaces".to_string(),
            InterlacingVerdict::Fails(w) => {
                if first_failure.is_none() {
                    first_failure = Some(n);
                }
                format!("fails: {w}")
            }
            InterlacingVerdict::Undecided(w) => format!("undecided: {w}"),
        };
        let outcome = if matches!(verdict, InterlacingVerdict::Undecided(_)) {
            Outcome::Undecided
        } else {
            Outcome::ReportOnly
        };
        report.record(
            ins,
            "zeros of Be_n^{s+phi} interlace zeros of Be_n^phi",
            observed,
            outcome,
        );
    }

    report.record(
        inputs(&[("phi", phi.to_string()), ("s", format_rational(s))]),
        "first failing n",
        first_failure.map_or_else(|| format!("none up to {n_max}"), |n| n.to_string()),
        Outcome::ReportOnly,
    );
    Ok(report)
}

/// Explore p_n = sum_j gamma_j Be_{n-j} for n = K..n_max: report the first n
/// with all-real zeros, assert that realness and simplicity persist once
/// attained (these persistence clauses are theorems), and cross-check the
/// p_n = T^{n-K}(p_K) identity exactly.
pub fn explore_conjecture(
    gamma: &[Rational],
    n_max: usize,
    width: &Rational,
) -> Result<VerificationReport> {
    let _ = width;
    assert!(!gamma.is_empty(), "gamma must be nonempty");
    if !gamma[0].is_one() {
        return Err(Error::BadLeadingGamma(format_rational(&gamma[0])));
    }
    let k = gamma.len() - 1;
    assert!(n_max >= k, "n_max below K");

    // P(x) = sum_j gamma_j x^{K-j} must not vanish at positive integers;
    // beyond the Cauchy bound it cannot, so the scan is finite
    let p_poly = ExactPoly::from_coeffs(gamma.iter().rev().cloned().collect());
    let mut cauchy = Rational::one();
    for g in gamma.iter().skip(1) {
        if g.abs() > cauchy {
            cauchy = g.abs();
        }
    }
    let scan_to = num::ToPrimitive::to_usize((Rational::one() + cauchy).ceil().numer())
        .unwrap_or(usize::MAX);
    for m in 1..=scan_to {
        if p_poly.eval(&Rational::from_integer(m.into())).is_zero() {
            return Err(Error::RootAtPositiveInteger { m });
        }
    }

    let gamma_str = gamma
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(",");
    let mut report = VerificationReport::new("conjecture", 0);

    // p_n for n = K..n_max, plus the iterated-operator route
    let bells: Vec<ExactPoly> = (0..=n_max).map(bell_poly).collect();
    let combo = |n: usize| -> ExactPoly {
        let mut acc = ExactPoly::zero();
        for (j, g) in gamma.iter().enumerate() {
            acc = &acc + &bells[n - j].scalar_mul(g);
        }
        acc
    };

    let mut t_iterate = combo(k);
    let mut first_real: Option<usize> = None;
    let mut first_real_simple: Option<usize> = None;
    for n in k..=n_max {
        let p_n = combo(n);
        let ins = inputs(&[("gamma", gamma_str.clone()), ("n", n.to_string())]);

        if n > k {
            t_iterate = t_operator(&t_iterate);
        }
        report.record(
            ins.clone(),
            "p_n equals the (n-K)-fold raise of p_K",
            (p_n == t_iterate).to_string(),
            if p_n == t_iterate {
                Outcome::Pass
            } else {
                Outcome::Fail
            },
        );

        if p_n.is_zero() {
            continue;
        }
        let count = real_root_count(&p_n)?;
        let all_real = count.with_multiplicity == n;
        let simple = is_squarefree(&p_n)?;
        report.record(
            ins.clone(),
            "per-n zero profile",
            format!("real={} of {n}, simple={simple}", count.with_multiplicity),
            Outcome::ReportOnly,
        );
        if all_real && first_real.is_none() {
            first_real = Some(n);
        }
        if all_real && simple && first_real_simple.is_none() {
            first_real_simple = Some(n);
        }
        if let Some(n1) = first_real {
            if n >= n1 {
                report.record(
                    ins.clone(),
                    "realness persists once attained",
                    format!("all_real={all_real}"),
                    if all_real { Outcome::Pass } else { Outcome::Fail },
                );
            }
        }
        if let Some(n1) = first_real_simple {
            if n >= n1 {
                report.record(
                    ins,
                    "real and simple zeros persist once attained",
                    format!("all_real={all_real}, simple={simple}"),
                    if all_real && simple {
                        Outcome::Pass
                    } else {
                        Outcome::Fail
                    },
                );
            }
        }
    }

    report.record(
        inputs(&[("gamma", gamma_str)]),
        "first n with all zeros real",
        first_real.map_or_else(|| format!("none up to {n_max}"), |n| n.to_string()),
        Outcome::ReportOnly,
    );
    Ok(report)
}
