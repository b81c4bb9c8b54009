//! Alexander polynomials from the torus formula and the reduced Burau representation.

use alloc::vec;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn t_power_minus_one(k: u32) -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(i64::from(k), 1), (0, -1)])
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, normalized.
pub fn torus_alexander(p: u32, q: u32) -> Result<LaurentPolynomial> {
    if p == 0 || q == 0 || gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let num = t_power_minus_one(p * q) * t_power_minus_one(1);
    let den = t_power_minus_one(p) * t_power_minus_one(q);
    Ok(num.divide_exact(&den)?.normalized())
}

type PolyMatrix = Vec<Vec<LaurentPolynomial>>;

fn poly_identity(n: usize) -> PolyMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        LaurentPolynomial::one()
                    } else {
                        LaurentPolynomial::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Reduced Burau matrix of `σ_i` on `n` strands.
fn burau_generator(n: usize, i: usize) -> PolyMatrix {
    let m = n - 1;
    let k = i - 1;
    let t = LaurentPolynomial::t();
    let mut a = poly_identity(m);
    a[k][k] = -&t;
    if k >= 1 {
        a[k][k - 1] = t.clone();
    }
    if k + 1 < m {
        a[k][k + 1] = LaurentPolynomial::one();
    }
    a
}

fn poly_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    let mut out = vec![vec![LaurentPolynomial::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Fraction-free (Bareiss) determinant of a polynomial matrix.
fn poly_det(mut a: PolyMatrix) -> LaurentPolynomial {
    let n = a.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut negate = false;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return LaurentPolynomial::zero();
            };
            a.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.divide_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `det(I - ρ(w)) / (1 + t + … + t^{s-1})`, normalized.
pub fn burau_alexander(w: &BraidWord) -> Result<LaurentPolynomial> {
    w.require_connected()?;
    let n = w.strands();
    let mut rho = poly_identity(n - 1);
    for g in w.generators() {
        rho = poly_mul(&rho, &burau_generator(n, g));
    }
    let mut m = poly_identity(n - 1);
    for (i, row) in m.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = &*x - &rho[i][j];
        }
    }
    let det = poly_det(m);
    let geometric = LaurentPolynomial::from_coeffs(&vec![1; n]);
    Ok(det.divide_exact(&geometric)?.normalized())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(g: &[usize]) -> BraidWord {
        BraidWord::from_generators(g).unwrap()
    }

    #[test]
    fn torus_formula() {
        assert_eq!(
            torus_alexander(2, 3).unwrap(),
            LaurentPolynomial::from_coeffs(&[1, -1, 1])
        );
        let t37 = torus_alexander(3, 7).unwrap();
        assert_eq!(
            t37,
            LaurentPolynomial::from_coeffs(&[1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1])
        );
        let q = &t37 * &LaurentPolynomial::from_coeffs(&[1, 1]);
        assert_eq!(
            q,
            LaurentPolynomial::from_coeffs(&[1, 0, -1, 1, 0, -1, 1, 1, -1, 0, 1, -1, 0, 1])
        );
        assert_eq!(torus_alexander(4, 6), Err(Error::NotCoprime { p: 4, q: 6 }));
        assert_eq!(torus_alexander(1, 5).unwrap(), LaurentPolynomial::one());
    }

    #[test]
    fn torus_degree_is_twice_genus() {
        for p in 2..7u32 {
            for q in 2..10u32 {
                if gcd(p, q) == 1 {
                    let d = torus_alexander(p, q).unwrap();
                    assert_eq!(d.max_exponent(), Some(i64::from((p - 1) * (q - 1))));
                    assert_eq!(d.eval(1), Some(1));
                }
            }
        }
    }

    #[test]
    fn burau_examples() {
        assert_eq!(
            burau_alexander(&word(&[1, 1, 1])).unwrap(),
            LaurentPolynomial::from_coeffs(&[1, -1, 1])
        );
        assert_eq!(
            burau_alexander(&word(&[1, 1])).unwrap(),
            LaurentPolynomial::from_coeffs(&[1, -1])
        );
        assert_eq!(
            burau_alexander(&word(&[1, 2])).unwrap(),
            LaurentPolynomial::one()
        );
        assert!(matches!(
            burau_alexander(&BraidWord::new(4, alloc::vec![1, 2]).unwrap()),
            Err(Error::DisconnectedWord { .. })
        ));
    }

    #[test]
    fn burau_matches_torus_formula() {
        for p in 2..=5u32 {
            for q in 2..=9u32 {
                if gcd(p, q) != 1 {
                    continue;
                }
                let g: Vec<usize> = (0..q).flat_map(|_| 1..p as usize).collect();
                let b = burau_alexander(&word(&g)).unwrap();
                assert!(
                    b.eq_up_to_unit(&torus_alexander(p, q).unwrap()),
                    "T({p},{q})"
                );
            }
        }
    }

    #[test]
    fn burau_of_figure_braid_two_components() {
        // Two-component links have Δ(1) = 0.
        let d = burau_alexander(&word(&[3, 1, 2, 2, 3, 1, 2, 1])).unwrap();
        assert_eq!(d.eval(1), Some(0));
    }
}
