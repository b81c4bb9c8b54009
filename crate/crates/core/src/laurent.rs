//! Sparse Laurent polynomials in one variable `t` with integer coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// `sum c_k t^k` with `k` ranging over the integers. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, i64>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coefficient * t^exponent`.
    pub fn monomial(coefficient: i64, exponent: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coefficient);
        p
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `coeffs[k] * t^k` for `k = 0, 1, ...`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (k as i64, c)))
    }

    /// Sums repeated exponents.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exponent: i64, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert(0);
        *entry = checked_add(*entry, coefficient);
        if *entry == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest exponent; `None` for zero.
    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent; `None` for zero.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Span `max - min` of the exponents (the degree of the normalized form); 0 for zero.
    pub fn span(&self) -> i64 {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn leading_coeff(&self) -> i64 {
        self.terms.values().next_back().copied().unwrap_or(0)
    }

    pub fn trailing_coeff(&self) -> i64 {
        self.terms.values().next().copied().unwrap_or(0)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Substitute `t -> 1/t`.
    pub fn reciprocal(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| (e, checked_mul(c, k)))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Representative of the class up to units `±t^k` with minimal exponent 0
    /// and positive constant term.
    pub fn normalized(&self) -> Self {
        let Some(lo) = self.min_exponent() else {
            return Self::zero();
        };
        let shifted = self.shift(-lo);
        if shifted.trailing_coeff() < 0 {
            -shifted
        } else {
            shifted
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.is_zero() || (self.min_exponent() == Some(0) && self.trailing_coeff() > 0)
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Dense coefficients from the minimal exponent upward, with that exponent.
    pub fn dense(&self) -> (i64, Vec<i64>) {
        let Some(lo) = self.min_exponent() else {
            return (0, Vec::new());
        };
        let hi = self.max_exponent().unwrap_or(lo);
        let coeffs = (lo..=hi).map(|e| self.coeff(e)).collect();
        (lo, coeffs)
    }

    pub fn eval(&self, t: i64) -> Option<i64> {
        let mut acc: i64 = 0;
        for (e, c) in self.terms() {
            if e < 0 && t != 1 && t != -1 {
                return None;
            }
            let power = t.checked_pow(e.unsigned_abs() as u32)?;
            acc = acc.checked_add(c.checked_mul(power)?)?;
        }
        Some(acc)
    }

    /// Exact quotient `self / divisor` in `Z[t, 1/t]`.
    ///
    /// Long division on the representatives shifted to minimal exponent 0;
    /// the divisor's leading coefficient must divide every intermediate
    /// leading term.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (a_lo, b_lo) = (
            self.min_exponent().unwrap(),
            divisor.min_exponent().unwrap(),
        );
        let mut rem = self.shift(-a_lo);
        let b = divisor.shift(-b_lo);
        let b_deg = b.max_exponent().unwrap();
        let b_lead = b.leading_coeff();
        let mut quotient = Self::zero();
        while let Some(r_deg) = rem.max_exponent() {
            if r_deg < b_deg || rem.leading_coeff() % b_lead != 0 {
                break;
            }
            let factor = Self::monomial(rem.leading_coeff() / b_lead, r_deg - b_deg);
            rem = &rem - &(&factor * &b);
            quotient = &quotient + &factor;
        }
        if !rem.is_zero() {
            return Err(Error::NotDivisible {
                remainder: rem.shift(a_lo),
            });
        }
        Ok(quotient.shift(a_lo - b_lo))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, checked_mul(c1, c2));
            }
        }
        out
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, m) => write!(f, "{m}t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, m) => write!(f, "{m}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tm1(k: i64) -> LaurentPolynomial {
        LaurentPolynomial::monomial(1, k) - LaurentPolynomial::one()
    }

    #[test]
    fn divide_trefoil_torus_formula() {
        let num = tm1(6) * tm1(1);
        let den = tm1(2) * tm1(3);
        let q = num.divide_exact(&den).unwrap();
        assert_eq!(q, LaurentPolynomial::from_coeffs(&[1, -1, 1]));
    }

    #[test]
    fn divide_by_one() {
        let x = LaurentPolynomial::from_terms([(-2, 3), (5, -1)]);
        assert_eq!(x.divide_exact(&LaurentPolynomial::one()).unwrap(), x);
    }

    #[test]
    fn not_divisible_reports_remainder() {
        let a = LaurentPolynomial::from_coeffs(&[1, 0, 1]);
        let b = LaurentPolynomial::from_coeffs(&[1, 1]);
        match a.divide_exact(&b) {
            Err(Error::NotDivisible { remainder }) => {
                assert_eq!(remainder, LaurentPolynomial::monomial(2, 0))
            }
            other => panic!("expected NotDivisible, got {other:?}"),
        }
    }

    #[test]
    fn normalization_strips_units() {
        let p = LaurentPolynomial::from_terms([(-3, -1), (-2, 1), (-1, -1)]);
        assert_eq!(p.normalized(), LaurentPolynomial::from_coeffs(&[1, -1, 1]));
        assert!(p.eq_up_to_unit(&LaurentPolynomial::from_coeffs(&[-1, 1, -1])));
    }

    #[test]
    fn display() {
        let p = LaurentPolynomial::from_coeffs(&[1, -1, 0, 2]);
        assert_eq!(alloc::format!("{p}"), "1 - t + 2t^3");
        assert_eq!(alloc::format!("{}", LaurentPolynomial::zero()), "0");
    }

    fn small_poly() -> impl Strategy<Value = LaurentPolynomial> {
        proptest::collection::vec((-4i64..6, -5i64..6), 0..6)
            .prop_map(LaurentPolynomial::from_terms)
    }

    proptest! {
        #[test]
        fn product_divides_back(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.divide_exact(&b).unwrap(), a);
        }

        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a - &a).is_zero(), true);
        }
    }
}
