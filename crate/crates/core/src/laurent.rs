//! Laurent polynomials: finitely many terms with integer exponents of both
//! signs.  The reciprocal Bernoulli polynomials `x^k B_n(1/x)` live here.
//!
//! Representation: the least exponent plus a dense ascending coefficient
//! vector.  Canonical form trims zero coefficients from both ends, and the
//! zero element is the empty vector with `min_exp = 0`, so structural
//! equality is mathematical equality.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn new(min_exp: i64, coeffs: Vec<Rational>) -> Self {
        let mut l = LaurentPoly { min_exp, coeffs };
        l.normalize();
        l
    }

    pub fn zero() -> Self {
        LaurentPoly { min_exp: 0, coeffs: Vec::new() }
    }

    /// `c * x^e`.
    pub fn monomial(e: i64, c: Rational) -> Self {
        LaurentPoly::new(e, vec![c])
    }

    pub fn from_poly(p: &Poly) -> Self {
        LaurentPoly::new(0, p.coeffs().to_vec())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let leading_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.min_exp += leading_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Least exponent carrying a nonzero coefficient (0 for the zero element).
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Greatest exponent carrying a nonzero coefficient.
    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `x^e`.
    pub fn coeff(&self, e: i64) -> Rational {
        if e < self.min_exp {
            return Rational::zero();
        }
        self.coeffs.get((e - self.min_exp) as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// Ascending coefficients starting at `min_exp`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `x^e`.
    pub fn mul_pow_x(&self, e: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { min_exp: self.min_exp + e, coeffs: self.coeffs.clone() }
    }

    pub fn derivative(&self) -> LaurentPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * crate::rational::rat(self.min_exp + i as i64))
            .collect();
        LaurentPoly::new(self.min_exp - 1, coeffs)
    }

    /// `k`-fold derivative.
    pub fn derivative_n(&self, k: u32) -> LaurentPoly {
        let mut l = self.clone();
        for _ in 0..k {
            l = l.derivative();
        }
        l
    }

    /// Evaluation; `x0 = 0` is rejected when negative exponents are present.
    pub fn evaluate(&self, x0: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if x0.is_zero() {
            if self.min_exp < 0 {
                return Err(Error::Domain(
                    "evaluation at 0 with negative exponents present".into(),
                ));
            }
            return Ok(if self.min_exp == 0 {
                self.coeffs[0].clone()
            } else {
                Rational::zero()
            });
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        // acc holds the value of the ascending tail; apply x0^min_exp.
        let e = self.min_exp;
        let p = num_traits::pow::Pow::pow(x0, e.unsigned_abs() as u32);
        Ok(if e >= 0 { acc * p } else { acc / p })
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> LaurentPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if (self.min_exp + i as i64).rem_euclid(2) == 0 {
                    c.clone()
                } else {
                    -c
                }
            })
            .collect();
        LaurentPoly::new(self.min_exp, coeffs)
    }

    /// The underlying polynomial when no negative exponents are present.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.min_exp < 0 {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); self.min_exp as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Some(Poly::from_coeffs(coeffs))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match self.min_exp + i as i64 {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                e => write!(f, "({c})*x^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.min_exp.min(rhs.min_exp);
        let max = self.max_exp().max(rhs.max_exp());
        let mut coeffs = Vec::with_capacity((max - min + 1) as usize);
        for e in min..=max {
            coeffs.push(self.coeff(e) + rhs.coeff(e));
        }
        LaurentPoly::new(min, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_exp + rhs.min_exp, coeffs)
    }
}
