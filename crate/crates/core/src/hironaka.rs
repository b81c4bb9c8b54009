//! Coefficient matching for `(t + 1) Δ = t^n P(t) + ε t^d P(1/t)`.
//!
//! A positive `(n - 1)`-plumbing summand forces such a decomposition with
//! integral `P`. Only `Δ` is known, so `ε` ranges over both signs and
//! `d = deg Q - n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HironakaSolution {
    pub n: usize,
    pub epsilon: i8,
    pub d: usize,
    pub p: LaurentPolynomial,
    /// Whether the solution was found for `-Δ` rather than `Δ`.
    pub negated: bool,
}

impl HironakaSolution {
    /// Degree of `P`, or `None` for `P = 0`.
    pub fn degree(&self) -> Option<i64> {
        self.p.max_exponent()
    }

    /// `deg P = d` exactly.
    pub fn attains_degree(&self) -> bool {
        self.degree() == Some(self.d as i64)
    }

    /// `t^n P(t) + ε t^d P(1/t)`.
    pub fn right_hand_side(&self) -> LaurentPolynomial {
        let mirrored = self
            .p
            .reciprocal()
            .shift(self.d as i64)
            .scale(i64::from(self.epsilon));
        &self.p.shift(self.n as i64) + &mirrored
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityRow {
    pub n: usize,
    pub epsilon: i8,
    pub solution: Option<HironakaSolution>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HironakaBound {
    pub delta: LaurentPolynomial,
    pub n_max: usize,
    /// Largest `n` whose solution also has `deg P = d`.
    pub n_max_strict: Option<usize>,
    pub table: Vec<FeasibilityRow>,
}

impl HironakaBound {
    /// Largest plumbing depth not excluded: `n_max - 1`.
    pub fn plumbing_bound(&self) -> usize {
        self.n_max.saturating_sub(1)
    }
}

fn q_of(delta: &LaurentPolynomial) -> LaurentPolynomial {
    &LaurentPolynomial::from_coeffs(&[1, 1]) * &delta.normalized()
}

fn solve_for(q: &LaurentPolynomial, n: usize, epsilon: i8) -> Option<LaurentPolynomial> {
    let big_d = q.max_exponent()? as usize;
    if n > big_d {
        return None;
    }
    let d = big_d - n;
    let eps = i64::from(epsilon);
    let mut a = vec![vec![0i64; d + 1]; big_d + 1];
    for (j, row) in a.iter_mut().enumerate() {
        if j >= n && j - n <= d {
            row[j - n] += 1;
        }
        if j <= d {
            row[d - j] += eps;
        }
    }
    let b: Vec<i64> = (0..=big_d).map(|j| q.coeff(j as i64)).collect();
    let x = linalg::solve_q(&a, &b)?;
    if x.iter().any(|v| !v.is_integer()) {
        return None;
    }
    Some(LaurentPolynomial::from_terms(
        x.iter()
            .enumerate()
            .map(|(k, v)| (k as i64, *v.numer() as i64)),
    ))
}

/// Solves for `P` at a given `n` and `ε`, trying `Δ` and then `-Δ`.
pub fn hironaka_solve(
    delta: &LaurentPolynomial,
    n: usize,
    epsilon: i8,
) -> Option<HironakaSolution> {
    let q = q_of(delta);
    let big_d = q.max_exponent()? as usize;
    if n > big_d {
        return None;
    }
    for negated in [false, true] {
        let target = if negated { -&q } else { q.clone() };
        if let Some(p) = solve_for(&target, n, epsilon) {
            let sol = HironakaSolution {
                n,
                epsilon,
                d: big_d - n,
                p,
                negated,
            };
            if sol.right_hand_side() == target {
                return Some(sol);
            }
        }
    }
    None
}

/// Feasibility over all `n` and both signs.
pub fn hironaka_max_n(delta: &LaurentPolynomial) -> Result<HironakaBound> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let big_d = q_of(delta).max_exponent().unwrap_or(0) as usize;
    let mut table = Vec::new();
    for n in 0..=big_d {
        for epsilon in [1i8, -1] {
            table.push(FeasibilityRow {
                n,
                epsilon,
                solution: hironaka_solve(delta, n, epsilon),
            });
        }
    }
    let feasible = |strict: bool| {
        table
            .iter()
            .filter_map(|r| r.solution.as_ref())
            .filter(|s| !strict || s.attains_degree())
            .map(|s| s.n)
            .max()
    };
    Ok(HironakaBound {
        delta: delta.normalized(),
        n_max: feasible(false).unwrap_or(0),
        n_max_strict: feasible(true),
        table,
    })
}
