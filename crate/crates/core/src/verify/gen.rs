//! Deterministic random inputs for the suites.
//!
//! Rationals draw numerators from [0, 20] and denominators from [1, 8];
//! prefixes have at most 8 entries. Each trial gets its own stream derived
//! from (seed, trial index), so reports replay bit-for-bit.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::phi::{PhiSequence, Tail};
use crate::rational::{rat, Rational};

pub fn case_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(trial))
}

pub fn random_nonneg_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.random_range(0..=20), rng.random_range(1..=8))
}

fn random_positive_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.random_range(1..=20), rng.random_range(1..=8))
}

/// Zero-tailed nonnegative sequence with 1..=max_len prefix entries.
pub fn random_nonneg_phi(rng: &mut ChaCha8Rng, max_len: usize) -> PhiSequence {
    let len = rng.random_range(1..=max_len.min(8));
    PhiSequence::from_prefix((0..len).map(|_| random_nonneg_rational(rng)).collect())
}

/// A sequence psi with phi <= psi entrywise and at least one strict bump
/// among the first n entries.
pub fn random_dominating(rng: &mut ChaCha8Rng, phi: &PhiSequence, n: usize) -> PhiSequence {
    loop {
        let mut prefix = phi.materialize(n.max(phi.prefix_len()));
        let mut bumped = false;
        for p in prefix.iter_mut().take(n) {
            if rng.random_range(0..3) == 0 {
                *p += random_positive_rational(rng);
                bumped = true;
            }
        }
        if bumped {
            return PhiSequence::new(prefix, phi.tail().clone());
        }
    }
}

/// Strictly positive entries everywhere except one negative non-integer
/// entry at a random position within the prefix; the tail is a positive
/// constant so the hypothesis holds for every index. Returns (phi, m).
pub fn random_one_negative_phi(rng: &mut ChaCha8Rng, max_len: usize) -> (PhiSequence, usize) {
    let len = rng.random_range(1..=max_len.min(8));
    let mut prefix: Vec<Rational> =
        (0..len).map(|_| random_positive_rational(rng)).collect();
    let m = rng.random_range(0..len);
    // negative with denominator >= 2, never a negative integer
    let num = rng.random_range(1..=20) * 2 + 1;
    let den = rng.random_range(1..=4) * 2;
    prefix[m] = rat(-num, den);
    if prefix[m].is_integer() {
        prefix[m] -= rat(1, 2);
    }
    let tail = Tail::Constant(random_positive_rational(rng));
    (PhiSequence::new(prefix, tail), m + 1)
}

/// Rational alpha > -1 (for Laguerre-bridge corpora).
pub fn random_alpha(rng: &mut ChaCha8Rng) -> Rational {
    let den = rng.random_range(1..=8);
    let num = rng.random_range(-(den - 1)..=(4 * den));
    rat(num, den)
}
