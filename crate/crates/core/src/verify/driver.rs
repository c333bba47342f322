//! Randomized trial drivers: generate seeded corpora and fold per-trial suite
//! runs into one report. Cases are merged in trial order, so reports are
//! byte-reproducible for a given (seed, trials).

use crate::error::Result;
use crate::rational::Rational;

use super::gen::{case_rng, random_dominating, random_nonneg_phi, random_one_negative_phi};
use super::report::VerificationReport;
use super::suites::{
    default_perturbations, default_probes, verify_monotonicity, verify_nonneg_theorem,
    verify_one_negative,
};

/// Nonnegative-theorem trials: per trial, the full theorem suite plus one
/// monotonicity comparison against a dominating sequence.
pub fn nonneg_trials(
    trials: usize,
    n_max: usize,
    seed: u64,
    width: &Rational,
) -> Result<VerificationReport> {
    let mut merged = VerificationReport::new("nonneg", seed);
    for t in 0..trials {
        let mut rng = case_rng(seed, t as u64);
        let phi = random_nonneg_phi(&mut rng, 8);
        let probes = default_probes(&phi);
        let perturbations = default_perturbations(&phi);
        let report = verify_nonneg_theorem(&phi, n_max, &probes, &perturbations, width)?;
        merged.absorb(t, report);

        let psi = random_dominating(&mut rng, &phi, n_max);
        let report = verify_monotonicity(&phi, &psi, n_max, width)?;
        merged.absorb(t, report);
    }
    Ok(merged)
}

/// One-negative-entry trials.
pub fn one_negative_trials(
    trials: usize,
    n_max: usize,
    seed: u64,
    width: &Rational,
) -> Result<VerificationReport> {
    let mut merged = VerificationReport::new("one-negative", seed);
    for t in 0..trials {
        let mut rng = case_rng(seed, t as u64);
        let (phi, _m) = random_one_negative_phi(&mut rng, 8);
        let report = verify_one_negative(&phi, n_max, width)?;
        merged.absorb(t, report);
    }
    Ok(merged)
}
