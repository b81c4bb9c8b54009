//! Small exact linear algebra over the integers and rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::laurent::LaurentPolynomial;

/// Dense row-major integer matrix.
pub type IntMatrix = Vec<Vec<i64>>;

pub type Rational = Ratio<i128>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for k in 0..inner {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] = out[i][j]
                    .checked_add(aik.checked_mul(b[k][j]).expect("matrix overflow"))
                    .expect("matrix overflow");
            }
        }
    }
    out
}

pub fn mat_vec(a: &IntMatrix, x: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(&r, &v)| r * v).sum())
        .collect()
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    let m = a.first().map_or(0, Vec::len);
    (0..m)
        .map(|j| a.iter().map(|row| row[j]).collect())
        .collect()
}

/// `x^T J y`.
pub fn bilinear(j: &IntMatrix, x: &[i64], y: &[i64]) -> i64 {
    x.iter()
        .zip(j)
        .map(|(&xi, row)| xi * row.iter().zip(y).map(|(&a, &b)| a * b).sum::<i64>())
        .sum()
}

/// Characteristic polynomial `det(t I - A)` by Berkowitz's division-free recursion.
pub fn charpoly(a: &IntMatrix) -> LaurentPolynomial {
    let n = a.len();
    // Coefficients, highest degree first.
    let mut p: Vec<i128> = vec![1];
    for r in 0..n {
        let s: Vec<i128> = (0..r).map(|i| a[i][r] as i128).collect();
        let row: Vec<i128> = (0..r).map(|j| a[r][j] as i128).collect();
        // col = [1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S]
        let mut col = Vec::with_capacity(r + 2);
        col.push(1i128);
        col.push(-(a[r][r] as i128));
        let mut v = s;
        for _ in 0..r {
            let dot: i128 = row
                .iter()
                .zip(&v)
                .map(|(x, y)| x.checked_mul(*y).expect("charpoly overflow"))
                .sum();
            col.push(-dot);
            v = (0..r)
                .map(|i| (0..r).map(|j| a[i][j] as i128 * v[j]).sum())
                .collect();
        }
        let mut next = vec![0i128; r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, &pj) in p.iter().enumerate() {
                if i >= j && i - j < col.len() {
                    *slot = slot
                        .checked_add(col[i - j].checked_mul(pj).expect("charpoly overflow"))
                        .expect("charpoly overflow");
                }
            }
        }
        p = next;
    }
    LaurentPolynomial::from_terms(p.iter().enumerate().map(|(i, &c)| {
        (
            (n - i) as i64,
            i64::try_from(c).expect("charpoly coefficient exceeds i64"),
        )
    }))
}

/// Determinant via the constant term of the characteristic polynomial.
pub fn det(a: &IntMatrix) -> i64 {
    let n = a.len();
    let c = charpoly(a).coeff(0);
    if n.is_multiple_of(2) {
        c
    } else {
        -c
    }
}

fn row_reduce(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let (src, dst) = if i < r {
                    let (lo, hi) = m.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = m.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= f * *s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

/// Rank over the rationals of the given row vectors.
pub fn rank_q(rows: &[Vec<i64>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational::from_integer(x as i128))
                .collect()
        })
        .collect();
    row_reduce(&mut m, cols).len()
}

/// Rank over the field with two elements.
pub fn rank_mod2(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<bool>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(2) == 1).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c]) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] {
                let pivot_row = m[rank].clone();
                for (d, s) in m[i].iter_mut().zip(pivot_row) {
                    *d ^= s;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `A x = b` over the rationals; free variables are set to zero.
/// Returns `None` when the system is inconsistent.
pub fn solve_q(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<Rational>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            row.iter()
                .chain(core::iter::once(&rhs))
                .map(|&x| Rational::from_integer(x as i128))
                .collect()
        })
        .collect();
    let pivots = row_reduce(&mut m, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols];
    }
    Some(x)
}

/// Inverse of a unimodular integer matrix (`det = ±1`), or `None`.
pub fn inverse_unimodular(a: &IntMatrix) -> Option<IntMatrix> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&x| Rational::from_integer(x as i128))
                .chain((0..n).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }))
                .collect()
        })
        .collect();
    let pivots = row_reduce(&mut m, n);
    if pivots.len() != n {
        return None;
    }
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = m[i][n + j];
            if !v.is_integer() {
                return None;
            }
            out[i][j] = i64::try_from(v.to_integer()).ok()?;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_small_matrices() {
        // [[0,-1],[1,1]] has charpoly t^2 - t + 1
        let a = vec![vec![0, -1], vec![1, 1]];
        assert_eq!(charpoly(&a), LaurentPolynomial::from_coeffs(&[1, -1, 1]));
        assert_eq!(
            charpoly(&vec![vec![5]]),
            LaurentPolynomial::from_coeffs(&[-5, 1])
        );
        assert_eq!(charpoly(&Vec::new()), LaurentPolynomial::one());
    }

    #[test]
    fn charpoly_matches_cofactor_expansion() {
        let a = vec![vec![2, -1, 3], vec![0, 4, 1], vec![-2, 5, 1]];
        // trace 7; principal 2-minors 8 + 8 - 1 = 15; det = -2 + 2 + 24 = 24
        assert_eq!(
            charpoly(&a),
            LaurentPolynomial::from_coeffs(&[-24, 15, -7, 1])
        );
        assert_eq!(det(&a), 24);
    }

    #[test]
    fn ranks() {
        let rows = vec![vec![1, 1, 0], vec![1, -1, 0], vec![2, 0, 0]];
        assert_eq!(rank_q(&rows), 2);
        assert_eq!(rank_mod2(&rows), 1);
    }

    #[test]
    fn solve_and_inverse() {
        let a = vec![vec![1, 1], vec![1, -1]];
        let x = solve_q(&a, &[3, 1]).unwrap();
        assert_eq!(
            x,
            vec![Rational::from_integer(2), Rational::from_integer(1)]
        );
        assert!(solve_q(&[vec![1, 1], vec![2, 2]], &[1, 3]).is_none());
        let u = vec![vec![2, 1], vec![1, 1]];
        let inv = inverse_unimodular(&u).unwrap();
        assert_eq!(mat_mul(&u, &inv), identity(2));
    }
}
