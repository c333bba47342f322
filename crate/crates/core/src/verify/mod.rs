//! Executable verification suites: each zero-structure theorem becomes a
//! parameterized check over (phi, n) producing a structured report, and the
//! two open problems get report-only explorers.

mod driver;
mod explore;
mod gen;
mod report;
mod suites;

pub use driver::{nonneg_trials, one_negative_trials};
pub use explore::{explore_conjecture, explore_shift_interlacing};
pub use gen::{case_rng, random_alpha, random_dominating, random_nonneg_phi, random_one_negative_phi};
pub use report::{inputs, Case, Outcome, Summary, VerificationReport};
pub use suites::{
    default_perturbations, default_probes, verify_finite_support, verify_monotonicity,
    verify_negative_pair, verify_nonneg_theorem, verify_one_negative, verify_zero_multiplicity,
};
