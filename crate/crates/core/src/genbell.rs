//! Generalized Bell polynomials: three independent exact construction routes
//! and the structural identities relating them.
//!
//! For a sequence phi, Be_n^phi is monic of degree n, depends only on
//! phi_1..phi_n, and is symmetric in them. Route one expands the definition
//! through elementary symmetric functions, route two iterates the one-step
//! recurrence, and route three converts the falling-factorial coordinates of
//! prod (x + phi_i).

use num::{One, Zero};

use crate::error::Result;
use crate::phi::{elementary_symmetric, PhiSequence};
use crate::poly::{t_operator, ExactPoly};
use crate::rational::Rational;
use crate::stirling::bell_poly;

/// Be_n^phi = sum_{j=0}^n Phi_{n-j}^n Be_j.
pub fn genbell_via_definition(phi: &PhiSequence, n: usize) -> ExactPoly {
    let e = elementary_symmetric(phi, n);
    let mut acc = ExactPoly::zero();
    for j in 0..=n {
        acc = &acc + &bell_poly(j).scalar_mul(&e[n - j]);
    }
    acc
}

/// Be_n^phi by iterating Be_{k+1}^phi = x(1 + d/dx)Be_k^phi + phi_{k+1} Be_k^phi.
pub fn genbell_via_recurrence(phi: &PhiSequence, n: usize) -> ExactPoly {
    genbell_prefix(phi, n).pop().unwrap()
}

/// All of Be_0^phi .. Be_n^phi in one sweep of the recurrence.
pub fn genbell_prefix(phi: &PhiSequence, n: usize) -> Vec<ExactPoly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(ExactPoly::one());
    for k in 0..n {
        let prev = out.last().unwrap();
        let next = &t_operator(prev) + &prev.scalar_mul(&phi.get(k + 1));
        out.push(next);
    }
    out
}

/// Canonical constructor (the recurrence route).
///
/// ```
/// use genbell_core::genbell::genbell;
/// use genbell_core::poly::ExactPoly;
/// use genbell_core::phi::PhiSequence;
/// use genbell_core::rational::rat_int;
///
/// let phi = PhiSequence::from_prefix(vec![rat_int(1), rat_int(2)]);
/// assert_eq!(genbell(&phi, 2), ExactPoly::from_integers(&[2, 4, 1]));
/// ```
pub fn genbell(phi: &PhiSequence, n: usize) -> ExactPoly {
    genbell_via_recurrence(phi, n)
}

/// Coordinates rho_{n,j}^phi of prod_{i<=n}(x + phi_i) in the falling
/// factorial basis x(x-1)...(x-j+1), computed by the coefficient recurrence.
pub fn rho_coefficients(phi: &PhiSequence, n: usize) -> Vec<Rational> {
    let mut rho = vec![Rational::one()];
    for k in 0..n {
        let p = phi.get(k + 1);
        let mut next = vec![Rational::zero(); k + 2];
        next[0] = &rho[0] * &p;
        for j in 1..=k {
            next[j] = &rho[j - 1] + &(&p + Rational::from_integer(j.into())) * &rho[j];
        }
        next[k + 1] = rho[k].clone();
        rho = next;
    }
    rho
}

/// Be_n^phi = sum_j rho_{n,j}^phi x^j.
pub fn genbell_via_rho(phi: &PhiSequence, n: usize) -> ExactPoly {
    ExactPoly::from_coeffs(rho_coefficients(phi, n))
}

/// Checks Be_{n+1}^phi = phi_l Be_n^{phi^{l}} + x(1 + d/dx) Be_n^{phi^{l}}
/// exactly, where phi^{l} removes the l-th term. Requires n >= l - 1.
pub fn check_general_recurrence(phi: &PhiSequence, l: usize, n: usize) -> Result<bool> {
    assert!(l >= 1 && n + 1 >= l, "requires n >= l - 1");
    let removed = phi.remove_term(l)?;
    let base = genbell(&removed, n);
    let rhs = &base.scalar_mul(&phi.get(l)) + &t_operator(&base);
    Ok(genbell(phi, n + 1) == rhs)
}

/// Checks Be_n^{phi^{l,M}} = Be_n^phi + M Be_{n-1}^{phi^{l}} exactly.
/// Requires 1 <= l <= n.
pub fn check_perturbation_identity(
    phi: &PhiSequence,
    l: usize,
    m: &Rational,
    n: usize,
) -> Result<bool> {
    assert!((1..=n).contains(&l), "requires 1 <= l <= n");
    let lhs = genbell(&phi.perturb(l, m), n);
    let rhs = &genbell(phi, n) + &genbell(&phi.remove_term(l)?, n - 1).scalar_mul(m);
    Ok(lhs == rhs)
}

/// The partial derivative of Be_n^phi with respect to phi_i, which equals
/// Be_{n-1}^{phi^{i}}. Requires 1 <= i <= n.
///
/// The dependence of Be_n^phi on phi_i is affine, so the difference quotient
/// (Be_n^{phi + h e_i} - Be_n^phi)/h is independent of h; tests pin this down
/// at h = 1.
pub fn partial_derivative_wrt_phi(phi: &PhiSequence, i: usize, n: usize) -> Result<ExactPoly> {
    assert!((1..=n).contains(&i), "requires 1 <= i <= n");
    Ok(genbell(&phi.remove_term(i)?, n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phi::Tail;
    use crate::rational::{rat, rat_int};

    fn seq(entries: &[(i64, i64)]) -> PhiSequence {
        PhiSequence::from_prefix(entries.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn definition_route_examples() {
        // Be_2 + 3 Be_1 + 2 Be_0 = x^2 + 4x + 2
        let phi = seq(&[(1, 1), (2, 1)]);
        assert_eq!(
            genbell_via_definition(&phi, 2),
            ExactPoly::from_integers(&[2, 4, 1])
        );
        assert_eq!(genbell_via_definition(&phi, 0), ExactPoly::one());
        assert_eq!(
            genbell_via_definition(&seq(&[(5, 2)]), 1),
            ExactPoly::from_coeffs(vec![rat(5, 2), rat_int(1)])
        );
    }

    #[test]
    fn recurrence_route_examples() {
        let phi = seq(&[(1, 1), (2, 1)]);
        assert_eq!(
            genbell_via_recurrence(&phi, 2),
            ExactPoly::from_integers(&[2, 4, 1])
        );
        // constant sequence 1: x(1+d/dx)(x+1) + (x+1) = x^2 + 3x + 1
        let ones = PhiSequence::constant(rat_int(1));
        assert_eq!(
            genbell_via_recurrence(&ones, 2),
            ExactPoly::from_integers(&[1, 3, 1])
        );
        // zero sequence reduces to the classical Bell polynomial
        assert_eq!(
            genbell_via_recurrence(&PhiSequence::zeros(), 3),
            ExactPoly::from_integers(&[0, 1, 3, 1])
        );
    }

    #[test]
    fn rho_route_examples() {
        let phi = seq(&[(1, 1), (2, 1)]);
        assert_eq!(
            rho_coefficients(&phi, 2),
            vec![rat_int(2), rat_int(4), rat_int(1)]
        );
        assert_eq!(
            genbell_via_rho(&phi, 2),
            ExactPoly::from_integers(&[2, 4, 1])
        );
        // top coefficient is always 1
        for n in 0..8 {
            assert_eq!(rho_coefficients(&seq(&[(7, 3), (1, 2), (5, 1)]), n)[n], rat_int(1));
        }
        // for the zero sequence the rho coincide with the Stirling row
        let rho = rho_coefficients(&PhiSequence::zeros(), 6);
        let bell = crate::stirling::bell_poly(6);
        for (j, r) in rho.iter().enumerate() {
            assert_eq!(*r, bell.coeff(j));
        }
    }

    #[test]
    fn routes_agree_small() {
        let cases = [
            seq(&[(1, 1), (2, 1), (3, 1)]),
            seq(&[(-3, 2), (7, 2)]),
            PhiSequence::constant(rat(2, 3)),
            PhiSequence::affine(rat(1, 2)),
            PhiSequence::new(vec![rat(5, 4)], Tail::Constant(rat(-1, 3))),
        ];
        for phi in &cases {
            for n in 0..=10 {
                let a = genbell_via_definition(phi, n);
                let b = genbell_via_recurrence(phi, n);
                let c = genbell_via_rho(phi, n);
                assert_eq!(a, b, "{phi} n={n}");
                assert_eq!(b, c, "{phi} n={n}");
            }
        }
    }

    #[test]
    fn monic_degree_constant_term() {
        let phi = seq(&[(3, 4), (0, 1), (9, 5), (2, 1)]);
        for n in 1..=8 {
            let p = genbell(&phi, n);
            assert_eq!(p.degree(), Some(n));
            assert!(p.is_monic());
            let prod: Rational = (1..=n).map(|i| phi.get(i)).product();
            assert_eq!(p.eval(&rat_int(0)), prod);
        }
    }

    #[test]
    fn symmetry_and_dependence() {
        let a = seq(&[(1, 2), (7, 3), (4, 1)]);
        let b = seq(&[(4, 1), (1, 2), (7, 3)]);
        assert_eq!(genbell(&a, 3), genbell(&b, 3));
        // entries beyond n do not matter
        let c = seq(&[(1, 2), (7, 3), (4, 1), (99, 1)]);
        assert_eq!(genbell(&a, 3), genbell(&c, 3));
    }

    #[test]
    fn general_recurrence_examples() {
        let phi = seq(&[(1, 1), (2, 1), (3, 1)]);
        assert!(check_general_recurrence(&phi, 2, 2).unwrap());
        // l = n + 1 reduces to the one-step recurrence
        for n in 0..6 {
            assert!(check_general_recurrence(&phi, n + 1, n).unwrap());
        }
        let rnd = seq(&[(5, 3), (-1, 4), (7, 1), (2, 5)]);
        for l in 1..=4 {
            for n in (l - 1).max(1)..=8 {
                assert!(check_general_recurrence(&rnd, l, n).unwrap(), "l={l} n={n}");
            }
        }
    }

    #[test]
    fn perturbation_identity_examples() {
        let phi = seq(&[(1, 1), (2, 1)]);
        assert!(check_perturbation_identity(&phi, 1, &rat_int(3), 2).unwrap());
        assert!(check_perturbation_identity(&phi, 2, &rat_int(0), 2).unwrap());
        let rnd = seq(&[(5, 3), (-1, 4), (7, 1)]);
        for l in 1..=3 {
            for n in l..=7 {
                assert!(
                    check_perturbation_identity(&rnd, l, &rat(-2, 3), n).unwrap(),
                    "l={l} n={n}"
                );
            }
        }
        // perturbing inside a constant tail materializes it and still satisfies
        // the identity
        let tailed = PhiSequence::new(vec![rat(1, 2)], Tail::Constant(rat(5, 4)));
        assert!(check_perturbation_identity(&tailed, 3, &rat(7, 2), 4).unwrap());
    }

    #[test]
    fn partial_derivative_examples() {
        let phi = seq(&[(1, 1), (2, 1)]);
        // d/d phi_1 Be_2 = Be_1^{(2)} = x + 2
        assert_eq!(
            partial_derivative_wrt_phi(&phi, 1, 2).unwrap(),
            ExactPoly::from_integers(&[2, 1])
        );
        assert_eq!(
            partial_derivative_wrt_phi(&PhiSequence::zeros(), 1, 1).unwrap(),
            ExactPoly::one()
        );
        // matches the h = 1 difference quotient exactly
        let rnd = seq(&[(3, 2), (5, 1), (1, 7)]);
        for i in 1..=3 {
            for n in i..=6 {
                let d = partial_derivative_wrt_phi(&rnd, i, n).unwrap();
                let quot = &genbell(&rnd.perturb(i, &rat_int(1)), n) - &genbell(&rnd, n);
                assert_eq!(d, quot, "i={i} n={n}");
            }
        }
    }
}
