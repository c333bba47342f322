//! Stirling numbers of the second kind and the classical Bell polynomials.
//!
//! The triangle S(n,j) is grown on demand through the recurrence
//! S(n,j) = j S(n-1,j) + S(n-1,j-1) and memoized behind a global lock, so
//! concurrent readers always observe a consistent table.

use std::sync::{OnceLock, RwLock};

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{t_operator, ExactPoly};
use crate::rational::Rational;

/// Growable triangle of S(n,j), 0 <= j <= n.
#[derive(Debug, Default)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new() -> Self {
        StirlingTable {
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub fn rows_computed(&self) -> usize {
        self.rows.len()
    }

    /// Extend the triangle so row `n` exists.
    pub fn ensure(&mut self, n: usize) {
        if self.rows.is_empty() {
            self.rows.push(vec![BigInt::one()]);
        }
        while self.rows.len() <= n {
            let prev = self.rows.last().unwrap();
            let m = self.rows.len();
            let mut row = Vec::with_capacity(m + 1);
            row.push(BigInt::zero());
            for j in 1..m {
                row.push(BigInt::from(j) * &prev[j] + &prev[j - 1]);
            }
            row.push(BigInt::one());
            self.rows.push(row);
        }
    }

    pub fn get(&mut self, n: usize, j: usize) -> Result<BigInt> {
        if j > n {
            return Err(Error::IndexOutOfRange { n, j });
        }
        self.ensure(n);
        Ok(self.rows[n][j].clone())
    }

    pub fn row(&mut self, n: usize) -> Vec<BigInt> {
        self.ensure(n);
        self.rows[n].clone()
    }
}

fn global() -> &'static RwLock<StirlingTable> {
    static TABLE: OnceLock<RwLock<StirlingTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(StirlingTable::new()))
}

/// S(n,j) from the shared memoized table.
pub fn stirling2(n: usize, j: usize) -> Result<BigInt> {
    if j > n {
        return Err(Error::IndexOutOfRange { n, j });
    }
    {
        let table = global().read().unwrap();
        if n < table.rows.len() {
            return Ok(table.rows[n][j].clone());
        }
    }
    global().write().unwrap().get(n, j)
}

fn stirling_row(n: usize) -> Vec<BigInt> {
    {
        let table = global().read().unwrap();
        if n < table.rows.len() {
            return table.rows[n].clone();
        }
    }
    global().write().unwrap().row(n)
}

/// Classical Bell polynomial Be_n(x) = sum_j S(n,j) x^j.
pub fn bell_poly(n: usize) -> ExactPoly {
    let row = stirling_row(n);
    ExactPoly::from_coeffs(row.into_iter().map(Rational::from_integer).collect())
}

/// Be_n built by iterating Be_{k+1} = x (1 + d/dx) Be_k from Be_0 = 1.
pub fn bell_poly_via_recurrence(n: usize) -> ExactPoly {
    let mut p = ExactPoly::one();
    for _ in 0..n {
        p = t_operator(&p);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    /// Independent route: S(n,j) = (1/j!) sum_i (-1)^{j-i} C(j,i) i^n.
    fn stirling2_alternating(n: usize, j: usize) -> BigInt {
        let mut binom = BigInt::one();
        let mut acc = BigInt::zero();
        for i in 0..=j {
            if i > 0 {
                binom = binom * BigInt::from(j - i + 1) / BigInt::from(i);
            }
            let term = &binom * BigInt::from(i).pow(n as u32);
            if (j - i).is_multiple_of(2) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let mut fact = BigInt::one();
        for i in 2..=j {
            fact *= BigInt::from(i);
        }
        &acc / &fact
    }

    #[test]
    fn base_cases() {
        assert_eq!(stirling2(0, 0).unwrap(), BigInt::one());
        for n in 1..20 {
            assert_eq!(stirling2(n, n).unwrap(), BigInt::one());
            assert_eq!(stirling2(n, 0).unwrap(), BigInt::zero());
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(stirling2(3, 2).unwrap(), BigInt::from(3));
        assert_eq!(stirling2(4, 2).unwrap(), BigInt::from(7));
        assert_eq!(stirling2(10, 3).unwrap(), BigInt::from(9330));
    }

    #[test]
    fn out_of_range_is_domain_error() {
        assert!(matches!(
            stirling2(2, 3),
            Err(Error::IndexOutOfRange { n: 2, j: 3 })
        ));
    }

    #[test]
    fn recurrence_matches_alternating_sum_to_40() {
        for n in 0..=40 {
            for j in 0..=n {
                assert_eq!(
                    stirling2(n, j).unwrap(),
                    stirling2_alternating(n, j),
                    "S({n},{j})"
                );
            }
        }
    }

    #[test]
    fn bell_poly_examples() {
        assert_eq!(bell_poly(0), ExactPoly::one());
        assert_eq!(bell_poly(1), ExactPoly::x());
        assert_eq!(bell_poly(3), ExactPoly::from_integers(&[0, 1, 3, 1]));
    }

    #[test]
    fn bell_routes_agree_to_40() {
        for n in 0..=40 {
            assert_eq!(bell_poly(n), bell_poly_via_recurrence(n), "n={n}");
        }
    }

    #[test]
    fn concurrent_readers_see_consistent_table() {
        let handles: Vec<_> = (0..8)
            .map(|k| {
                std::thread::spawn(move || {
                    for n in 0..30 {
                        let v = stirling2(n + k % 3, (n + k % 3) / 2).unwrap();
                        assert!(v >= BigInt::zero());
                    }
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
    }
}
