//! Property tests for the exact-arithmetic invariants.

use proptest::collection::vec;
use proptest::prelude::*;

use genbell_core::genbell::{
    genbell, genbell_via_definition, genbell_via_recurrence, genbell_via_rho,
};
use genbell_core::phi::{elementary_symmetric, linear_factor_product, PhiSequence, Tail};
use genbell_core::poly::ExactPoly;
use genbell_core::rational::{rat, rat_int, Rational};
use genbell_core::roots::{check_interlace, isolate_roots, sturm_count, RootLoc};

fn rational_entry() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

fn nonneg_entry() -> impl Strategy<Value = Rational> {
    (0i64..=20, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

fn phi_signed() -> impl Strategy<Value = PhiSequence> {
    vec(rational_entry(), 1..=8).prop_map(PhiSequence::from_prefix)
}

fn phi_nonneg() -> impl Strategy<Value = PhiSequence> {
    vec(nonneg_entry(), 1..=8).prop_map(PhiSequence::from_prefix)
}

/// Reference implementation of the asymmetric interlacing predicate on
/// plain rational sets.
fn brute_force_interlace(u: &[Rational], v: &[Rational]) -> bool {
    let (k, kappa) = (u.len(), v.len());
    if k != kappa + 1 && k != kappa {
        return false;
    }
    if k == 0 {
        return true;
    }
    let mut inside = 0;
    for w in u.windows(2) {
        let count = v.iter().filter(|x| w[0] < **x && **x < w[1]).count();
        if count != 1 {
            return false;
        }
        inside += count;
    }
    if inside != kappa.saturating_sub(usize::from(k == kappa)) {
        return false;
    }
    if k == kappa && u.last() >= v.last() {
        return false;
    }
    true
}

fn points(values: &[Rational]) -> Vec<RootLoc> {
    values
        .iter()
        .map(|v| RootLoc::Point {
            value: v.clone(),
            multiplicity: 1,
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn elementary_symmetric_expands_linear_factors(phi in phi_signed()) {
        let n = phi.prefix_len();
        let e = elementary_symmetric(&phi, n);
        prop_assert_eq!(e[0].clone(), rat_int(1));
        // prod (x + phi_i) must reproduce the coefficient vector exactly
        let mut product = ExactPoly::one();
        for i in 1..=n {
            product = &product * &ExactPoly::from_coeffs(vec![phi.get(i), rat_int(1)]);
        }
        prop_assert_eq!(product.clone(), linear_factor_product(&phi, n));
        for j in 0..=n {
            prop_assert_eq!(product.coeff(j), e[n - j].clone());
        }
    }

    #[test]
    fn construction_routes_agree(phi in phi_signed(), n in 0usize..=10) {
        let a = genbell_via_definition(&phi, n);
        let b = genbell_via_recurrence(&phi, n);
        let c = genbell_via_rho(&phi, n);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&b, &c);
    }

    #[test]
    fn genbell_is_monic_symmetric_and_local(phi in phi_signed(), n in 1usize..=8) {
        let p = genbell(&phi, n);
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert!(p.is_monic());
        // constant term is the product of the first n entries
        let prod: Rational = (1..=n).map(|i| phi.get(i)).product();
        prop_assert_eq!(p.coeff(0), prod);
        // reversing the first n entries leaves the polynomial unchanged
        let mut reversed: Vec<Rational> = phi.materialize(n);
        reversed.reverse();
        prop_assert_eq!(genbell(&PhiSequence::from_prefix(reversed), n), p.clone());
        // entries beyond n are irrelevant
        let bumped = phi.perturb(n + 1, &rat(7, 3));
        prop_assert_eq!(genbell(&bumped, n), p);
    }

    #[test]
    fn division_round_trips(a in vec(rational_entry(), 0..=8), b in vec(rational_entry(), 1..=5)) {
        let a = ExactPoly::from_coeffs(a);
        let b = ExactPoly::from_coeffs(b);
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn phi_spec_round_trips(prefix in vec(rational_entry(), 0..=6), tail in 0u8..3, t in rational_entry()) {
        let tail = match tail {
            0 => Tail::Zero,
            1 => Tail::Constant(t.clone()),
            _ => Tail::Affine(t.clone()),
        };
        let phi = PhiSequence::new(prefix, tail);
        let text = phi.to_string();
        let parsed: PhiSequence = text.parse().unwrap();
        prop_assert_eq!(parsed, phi);
    }

    #[test]
    fn interlacing_matches_brute_force(
        mut u in vec(rational_entry(), 0..=6),
        mut v in vec(rational_entry(), 0..=6),
    ) {
        // independent sorted sets with shared values removed: arbitrary gap
        // patterns, size mismatches, and max-order violations all appear
        u.sort();
        u.dedup();
        v.sort();
        v.dedup();
        v.retain(|x| !u.contains(x));
        let verdict = check_interlace(&points(&u), &points(&v));
        prop_assert_eq!(verdict.holds(), brute_force_interlace(&u, &v));
    }

    #[test]
    fn isolation_finds_planted_roots(mut planted in vec(rational_entry(), 1..=5), with_quad in proptest::bool::ANY) {
        planted.sort();
        planted.dedup();
        let mut p = ExactPoly::one();
        for r in &planted {
            p = &p * &ExactPoly::from_coeffs(vec![-r.clone(), rat_int(1)]);
        }
        if with_quad {
            p = &p * &ExactPoly::from_integers(&[3, 1, 1]); // no real roots
        }
        let iso = isolate_roots(&p, &rat(1, 1 << 20)).unwrap();
        prop_assert_eq!(iso.distinct_count(), planted.len());
        prop_assert_eq!(iso.nonreal_count(), if with_quad { 2 } else { 0 });
        let found = iso.roots();
        for (loc, expect) in found.iter().zip(&planted) {
            match loc {
                RootLoc::Point { value, multiplicity } => {
                    prop_assert_eq!(value, expect);
                    prop_assert_eq!(*multiplicity, 1usize);
                }
                RootLoc::Interval { lo, hi, .. } => {
                    prop_assert!(lo < expect && expect < hi);
                }
            }
        }
        // soundness: each root is alone in its reported location
        for loc in &found {
            if let RootLoc::Interval { lo, hi, .. } = loc {
                prop_assert_eq!(sturm_count(&p, lo, hi).unwrap(), 1);
            }
        }
    }

    #[test]
    fn isolation_recovers_planted_multiplicities(
        mut planted in vec((rational_entry(), 1u32..=3), 1..=3),
        with_quad in proptest::bool::ANY,
    ) {
        planted.sort_by(|a, b| a.0.cmp(&b.0));
        planted.dedup_by(|a, b| a.0 == b.0);
        let mut p = ExactPoly::one();
        for (r, m) in &planted {
            p = &p * &ExactPoly::from_coeffs(vec![-r.clone(), rat_int(1)]).pow(*m);
        }
        if with_quad {
            p = &p * &ExactPoly::from_integers(&[1, 1, 2]);
        }
        let iso = isolate_roots(&p, &rat(1, 1 << 20)).unwrap();
        prop_assert_eq!(iso.distinct_count(), planted.len());
        prop_assert_eq!(iso.nonreal_count(), if with_quad { 2 } else { 0 });
        for (loc, (expect, m)) in iso.roots().iter().zip(&planted) {
            prop_assert_eq!(loc.multiplicity(), *m as usize);
            match loc {
                RootLoc::Point { value, .. } => prop_assert_eq!(value, expect),
                RootLoc::Interval { lo, hi, .. } => {
                    prop_assert!(lo < expect && expect < hi)
                }
            }
        }
    }

    #[test]
    fn nonneg_zero_counts_match_degree(phi in phi_nonneg(), n in 1usize..=8) {
        // all zeros real, simple, nonpositive
        let p = genbell(&phi, n);
        let iso = isolate_roots(&p, &rat(1, 1 << 10)).unwrap();
        prop_assert_eq!(iso.distinct_count(), n);
        prop_assert!(iso.is_all_simple());
        prop_assert_eq!(iso.sign_counts().positive, 0usize);
    }
}
