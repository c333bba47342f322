//! The interlacing predicate between two ordered sets of isolated roots.
//!
//! U interlaces V when between two consecutive elements of U there is exactly
//! one element of V, and either |U| = |V| + 1, or |U| = |V| and
//! max U < max V. The relation is deliberately asymmetric in the equal-size
//! case. Verdicts are decided purely from isolation data: if any pair of
//! locations cannot be ordered, the answer is `Undecided`, never a guess.

use serde::Serialize;

use crate::rational::format_rational;

use super::isolate::{compare_locs, LocOrder, RootLoc};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "snake_case")]
pub enum InterlacingVerdict {
    Holds,
    Fails(String),
    Undecided(String),
}

impl InterlacingVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, InterlacingVerdict::Holds)
    }
}

fn describe(loc: &RootLoc) -> String {
    match loc {
        RootLoc::Point { value, .. } => format_rational(value),
        RootLoc::Interval { lo, hi, .. } => {
            format!("({}, {})", format_rational(lo), format_rational(hi))
        }
    }
}

/// Decide whether the ordered set `u` interlaces the ordered set `v`.
///
/// Inputs are the distinct root locations of two polynomials, refined until
/// pairwise disjoint (see `RootIsolation::separate_from`); multiplicities are
/// ignored here.
pub fn check_interlace(u: &[RootLoc], v: &[RootLoc]) -> InterlacingVerdict {
    let k = u.len();
    let kappa = v.len();
    if k != kappa + 1 && k != kappa {
        return InterlacingVerdict::Fails(format!(
            "size mismatch: |U| = {k} cannot interlace |V| = {kappa}"
        ));
    }
    if k == 0 {
        return InterlacingVerdict::Holds;
    }

    #[derive(Clone, Copy, PartialEq)]
    enum Side {
        U,
        V,
    }
    let mut merged: Vec<(Side, &RootLoc)> = u
        .iter()
        .map(|l| (Side::U, l))
        .chain(v.iter().map(|l| (Side::V, l)))
        .collect();
    // (lo, hi) keys order a point ahead of an interval opening at its value
    merged.sort_by(|a, b| (a.1.lo(), a.1.hi()).cmp(&(b.1.lo(), b.1.hi())));

    // adjacent comparability implies a total order on disjoint locations
    for w in merged.windows(2) {
        match compare_locs(w[0].1, w[1].1) {
            LocOrder::Less => {}
            LocOrder::SharedPoint => {
                return InterlacingVerdict::Undecided(format!(
                    "shared root at {}",
                    describe(w[0].1)
                ));
            }
            LocOrder::Overlap | LocOrder::Greater => {
                return InterlacingVerdict::Undecided(format!(
                    "indistinguishable locations {} and {}",
                    describe(w[0].1),
                    describe(w[1].1)
                ));
            }
        }
    }

    // the merged sequence must alternate U, V, U, V, ... starting with U;
    // it ends with U when |U| = |V| + 1 and with V when |U| = |V| (the
    // trailing V is exactly the max U < max V clause)
    for (pos, (side, loc)) in merged.iter().enumerate() {
        let expect = if pos % 2 == 0 { Side::U } else { Side::V };
        if *side != expect {
            let witness = if pos == merged.len() - 1 && k == kappa && *side == Side::U {
                format!("max U = {} is not below max V", describe(loc))
            } else if *side == Side::U {
                format!(
                    "no element of V between consecutive elements of U near {}",
                    describe(loc)
                )
            } else {
                format!(
                    "more than one element of V in a gap of U near {}",
                    describe(loc)
                )
            };
            return InterlacingVerdict::Fails(witness);
        }
    }
    InterlacingVerdict::Holds
}
