//! Truncated power series with a fixed order.
//!
//! A `TruncatedSeries` stores the coefficients of `x^0 .. x^order`
//! explicitly, including zeros: unlike `Poly` there is no trimming, because
//! the truncation order is part of the meaning.  Arithmetic on two series
//! truncates to the smaller order, which is the only sound choice.
//!
//! The main client is the expansion of `B_n(x) (x+1)^(k-n)` with `k < n`,
//! where the negative binomial series supplies the second factor.

use crate::poly::Poly;
use crate::rational::Rational;
use crate::sequences::binomial;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>, // exactly order + 1 entries
}

impl TruncatedSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    /// Builds a series from explicit coefficients of `x^0 .. x^order`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the constant term");
        TruncatedSeries { coeffs }
    }

    /// Truncation of a polynomial.
    pub fn from_poly(p: &Poly, order: usize) -> Self {
        let coeffs = (0..=order).map(|i| p.coeff(i)).collect();
        TruncatedSeries { coeffs }
    }

    /// Truncation of `(1 + x)^a` for any integer `a` (finite for `a >= 0`,
    /// the genuine infinite series for `a < 0`).
    pub fn binomial_series(a: i64, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|v| Rational::from_integer(binomial(a, v as u32)))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`; `None` beyond the truncation order, where the
    /// series simply carries no information.
    pub fn coeff(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect();
        TruncatedSeries { coeffs }
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }
}
