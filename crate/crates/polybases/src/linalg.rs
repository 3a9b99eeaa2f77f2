//! Exact linear algebra over the integers: fraction-free (Bareiss)
//! Gaussian elimination for solving basis-expansion systems and computing
//! ranks. Back substitution returns exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// The unique solution, as exact rationals in column order.
    Unique(Vec<BigRational>),
    Inconsistent,
    Underdetermined,
}

/// Fraction-free forward elimination in place. Returns the pivot list as
/// `(row, col)` pairs; `width` marks how many leading columns belong to the
/// coefficient block (the rest are right-hand sides carried along).
fn eliminate(m: &mut [Vec<BigInt>], width: usize) -> Vec<(usize, usize)> {
    let rows = m.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..width {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        for i in r + 1..rows {
            let total = m[i].len();
            for j in 0..total {
                if j == c {
                    continue;
                }
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push((r, c));
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Solves `A x = b` exactly. `a` has one row per equation.
pub fn solve_exact(a: &[Vec<BigInt>], b: &[BigInt]) -> SolveOutcome {
    assert_eq!(a.len(), b.len());
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut v = row.clone();
            v.push(rhs.clone());
            v
        })
        .collect();
    let pivots = eliminate(&mut m, cols);
    // rows without a pivot must have a zero right-hand side
    let pivot_rows: std::collections::BTreeSet<usize> = pivots.iter().map(|&(r, _)| r).collect();
    for (i, row) in m.iter().enumerate() {
        if !pivot_rows.contains(&i) && !row[cols].is_zero() {
            return SolveOutcome::Inconsistent;
        }
    }
    if pivots.len() < cols {
        if cols == 0 {
            return SolveOutcome::Unique(vec![]);
        }
        return SolveOutcome::Underdetermined;
    }
    // back substitution on the row-echelon form
    let mut x = vec![BigRational::zero(); cols];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = BigRational::from(m[r][cols].clone());
        for j in c + 1..cols {
            if !m[r][j].is_zero() {
                acc -= BigRational::from(m[r][j].clone()) * &x[j];
            }
        }
        x[c] = acc / BigRational::from(m[r][c].clone());
    }
    SolveOutcome::Unique(x)
}

pub fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let width = m.first().map_or(0, |r| r.len());
    eliminate(&mut m, width).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn bv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn unique_solution() {
        let a = bi(&[&[2, 1], &[1, 3]]);
        let b = bv(&[5, 10]);
        match solve_exact(&a, &b) {
            SolveOutcome::Unique(x) => {
                assert_eq!(x[0], BigRational::from(BigInt::from(1)));
                assert_eq!(x[1], BigRational::from(BigInt::from(3)));
            }
            other => panic!("expected unique, got {other:?}"),
        }
    }

    #[test]
    fn rational_solution() {
        let a = bi(&[&[2]]);
        let b = bv(&[3]);
        match solve_exact(&a, &b) {
            SolveOutcome::Unique(x) => {
                assert_eq!(x[0], BigRational::new(3.into(), 2.into()));
            }
            other => panic!("expected unique, got {other:?}"),
        }
    }

    #[test]
    fn overdetermined_consistent_and_not() {
        let a = bi(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert!(matches!(
            solve_exact(&a, &bv(&[2, 3, 5])),
            SolveOutcome::Unique(_)
        ));
        assert_eq!(solve_exact(&a, &bv(&[2, 3, 6])), SolveOutcome::Inconsistent);
    }

    #[test]
    fn underdetermined() {
        let a = bi(&[&[1, 1]]);
        assert_eq!(solve_exact(&a, &bv(&[2])), SolveOutcome::Underdetermined);
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(bi(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(bi(&[&[1, 2], &[0, 1]])), 2);
        assert_eq!(rank(bi(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(
            rank(bi(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9], &[1, 0, 0]])),
            3
        );
    }
}
