//! Floating-point series oracles for Be_n^phi.
//!
//! The generalized Poisson moment sum_{j>=0} (j+phi_1)...(j+phi_n) e^{-x} x^j / j!
//! equals Be_n^phi(x), and the same sum without the e^{-x} factor equals
//! e^x Be_n^phi(x). These are deliberately independent of the exact
//! construction routes: they only touch phi through f64 values.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::phi::PhiSequence;
use crate::rational::{format_rational, is_negative_integer, to_f64, Rational};

struct SeriesSum {
    total: f64,
    term_weight: f64, // x^j / j!, possibly scaled by e^{-x}
}

/// Shared truncated summation of sum_j prod_i (j + phi_i) * w_j where
/// w_j = scale * x^j / j!. Terms eventually decay like x^j/j!; we stop once
/// a geometric bound on the remaining tail drops below `tol` relative to the
/// partial sum, past the index where the factors are positive and the term
/// ratio is below one. A hard cap guards against non-termination.
fn truncated_sum(phis: &[f64], x: f64, scale: f64, tol: f64) -> f64 {
    let n = phis.len();
    let ax = x.abs();
    let min_phi = phis.iter().cloned().fold(0.0f64, f64::min);
    let settle = ax + n as f64 + (-min_phi).max(0.0) + 1.0;
    let cap = 10 * (n + ax.ceil() as usize + 50);

    let mut sum = SeriesSum {
        total: 0.0,
        term_weight: scale,
    };
    let mut j = 0usize;
    loop {
        let jf = j as f64;
        let weight: f64 = phis.iter().map(|p| jf + p).product();
        let term = weight * sum.term_weight;
        sum.total += term;

        // ratio of |t_{j+1}| / |t_j| once all factors are positive
        if jf > settle {
            let mut ratio = ax / (jf + 1.0);
            for p in phis {
                ratio *= (jf + 1.0 + p) / (jf + p);
            }
            if ratio < 1.0 {
                let tail = term.abs() * ratio / (1.0 - ratio);
                if tail < tol * (1.0 + sum.total.abs()) {
                    break;
                }
            }
        }
        j += 1;
        if j > cap {
            break;
        }
        sum.term_weight *= x / j as f64;
    }
    sum.total
}

/// Be_n^phi(x) as the n-th generalized moment of the Poisson law with mean x.
/// Requires x > 0 and tol > 0.
pub fn poisson_moment_eval(
    phi: &PhiSequence,
    n: usize,
    x: &Rational,
    tol: f64,
) -> Result<f64> {
    if tol <= 0.0 {
        return Err(Error::NonpositiveTolerance(tol));
    }
    if !x.is_positive() {
        return Err(Error::NonpositivePoint(format_rational(x)));
    }
    let xf = to_f64(x);
    let phis: Vec<f64> = (1..=n).map(|i| to_f64(&phi.get(i))).collect();
    Ok(truncated_sum(&phis, xf, (-xf).exp(), tol))
}

/// e^x Be_n^phi(x) by the raw series sum_j prod_i (j+phi_i) x^j / j!.
/// No restriction on phi. Requires tol > 0.
pub fn hypergeometric_eval(
    phi: &PhiSequence,
    n: usize,
    x: &Rational,
    tol: f64,
) -> Result<f64> {
    if tol <= 0.0 {
        return Err(Error::NonpositiveTolerance(tol));
    }
    let xf = to_f64(x);
    let phis: Vec<f64> = (1..=n).map(|i| to_f64(&phi.get(i))).collect();
    Ok(truncated_sum(&phis, xf, 1.0, tol))
}

/// e^x Be_n^phi(x) through the Pochhammer-ratio form
/// prod_i phi_i * sum_j prod_i [(1+phi_i)_j / (phi_i)_j] x^j / j!,
/// defined only when no phi_i (i <= n) is zero or a negative integer.
pub fn hypergeometric_eval_ratio(
    phi: &PhiSequence,
    n: usize,
    x: &Rational,
    tol: f64,
) -> Result<f64> {
    if tol <= 0.0 {
        return Err(Error::NonpositiveTolerance(tol));
    }
    for i in 1..=n {
        let p = phi.get(i);
        if p.is_zero() || is_negative_integer(&p) {
            return Err(Error::PochhammerPole {
                index: i,
                value: format_rational(&p),
            });
        }
    }
    let xf = to_f64(x);
    let ax = xf.abs();
    let phis: Vec<f64> = (1..=n).map(|i| to_f64(&phi.get(i))).collect();
    let front: f64 = phis.iter().product();
    let min_phi = phis.iter().cloned().fold(0.0f64, f64::min);
    let settle = ax + n as f64 + (-min_phi).max(0.0) + 1.0;
    let cap = 10 * (n + ax.ceil() as usize + 50);

    // term_j = prod_i (1+phi_i)_j / (phi_i)_j * x^j / j!, updated by the
    // Pochhammer quotient (1+phi_i+j)/(phi_i+j)
    let mut term = 1.0f64;
    let mut total = 0.0f64;
    let mut j = 0usize;
    loop {
        total += term;
        let jf = j as f64;
        let mut ratio = xf / (jf + 1.0);
        for p in &phis {
            ratio *= (1.0 + p + jf) / (p + jf);
        }
        if jf > settle {
            let r = ratio.abs();
            if r < 1.0 {
                let tail = (term * ratio).abs() / (1.0 - r);
                if tail < tol * (1.0 + total.abs()) {
                    break;
                }
            }
        }
        j += 1;
        if j > cap {
            break;
        }
        term *= ratio;
    }
    Ok(front * total)
}
