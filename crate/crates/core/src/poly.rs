//! Dense univariate polynomials over the exact rationals.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros,
//! so structural equality is mathematical equality.  Besides ring arithmetic
//! the module provides the calculus operators used throughout the crate
//! (derivative, antiderivative, composition, forward difference, the theta
//! operator `1 + alpha * t * d/dt`), exact division, and rewriting of a
//! polynomial as a polynomial in a quadratic such as x(x-1)/2 or (2x-1)^2.

use crate::error::{Error, Result};
use crate::rational::{rat, Int, Rational};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial with exact rational coefficients, ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Builds a polynomial from ascending-order coefficients, trimming
    /// trailing zeros so the representation is canonical.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from small integers, ascending order.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Ascending-order coefficient slice with no trailing zeros.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Small non-negative integer power.
    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// `k`-fold derivative.
    pub fn derivative_n(&self, k: u32) -> Poly {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.derivative();
        }
        p
    }

    /// Antiderivative with constant term zero.
    pub fn antiderivative(&self) -> Poly {
        let mut coeffs = vec![Rational::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / rat(i as i64 + 1));
        }
        Poly::from_coeffs(coeffs)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.evaluate_counted(x).0
    }

    /// Horner evaluation that also reports how many rational multiplications
    /// the loop performed (used by the benchmarking front end).
    pub fn evaluate_counted(&self, x: &Rational) -> (Rational, usize) {
        let mut acc = Rational::zero();
        let mut mults = 0;
        for c in self.coeffs.iter().rev() {
            if !acc.is_zero() {
                acc *= x;
                mults += 1;
            }
            acc += c;
        }
        (acc, mults)
    }

    /// Horner composition `self(q(x))`.
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &Rational) -> Poly {
        self.compose(&Poly::from_coeffs(vec![c.clone(), Rational::one()]))
    }

    /// Forward difference `p(x+1) - p(x)`; drops the degree by exactly one
    /// on nonconstant input.
    pub fn forward_difference(&self) -> Poly {
        &self.shift(&Rational::one()) - self
    }

    /// The operator `1 + alpha * t * d/dt` applied to `self` (viewed as a
    /// polynomial in `t`).
    pub fn theta(&self, alpha: &Rational) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c + c * alpha * rat(i as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Quotient and remainder of division by `d`.
    pub fn divmod(&self, d: &Poly) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = vec![
            Rational::zero();
            self.coeffs.len().saturating_sub(dd).max(1)
        ];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.leading().unwrap() / &lead;
            let shift = rd - dd;
            quo[shift] = q.clone();
            let sub = d.scale(&q);
            let mut sub_coeffs = vec![Rational::zero(); shift];
            sub_coeffs.extend(sub.coeffs);
            rem = &rem - &Poly::from_coeffs(sub_coeffs);
        }
        Ok((Poly::from_coeffs(quo), rem))
    }

    /// Exact division; fails with `NonzeroRemainder` when `d` does not
    /// divide `self`.
    pub fn exact_divide(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonzeroRemainder)
        }
    }

    /// `self(-x)`.
    pub fn reflect(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Display for Poly {
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
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
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
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// The quadratic substitution targets used when rewriting power sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubstitutionBasis {
    /// y = x(x-1)/2
    Y,
    /// u = x(x-1)
    U,
    /// xi = -x(x-1)
    Xi,
    /// omega = (2x-1)^2
    Omega,
}

impl SubstitutionBasis {
    /// The quadratic itself as a polynomial in x.
    pub fn quadratic(self) -> Poly {
        match self {
            SubstitutionBasis::Y => {
                Poly::from_coeffs(vec![rat(0), crate::rational::frac(-1, 2), crate::rational::frac(1, 2)])
            }
            SubstitutionBasis::U => Poly::from_ints(&[0, -1, 1]),
            SubstitutionBasis::Xi => Poly::from_ints(&[0, 1, -1]),
            SubstitutionBasis::Omega => Poly::from_ints(&[1, -4, 4]),
        }
    }
}

/// Rewrites `p` as a polynomial in the quadratic `q`, returning the
/// coefficient vector `c` with `p(x) = sum_k c_k q(x)^k`.  Works by
/// eliminating the leading term against the appropriate power of `q`;
/// fails with `NotInBasis` when a residue survives.
pub fn rebase_quadratic(p: &Poly, q: &Poly) -> Result<Poly> {
    if q.degree() != Some(2) {
        return Err(Error::Domain("substitution target must be a quadratic".into()));
    }
    if p.is_zero() {
        return Ok(Poly::zero());
    }
    let k_max = p.degree().unwrap() / 2;
    // q^0, q^1, ..., q^k_max
    let mut powers = Vec::with_capacity(k_max + 1);
    let mut acc = Poly::one();
    for _ in 0..=k_max {
        powers.push(acc.clone());
        acc = &acc * q;
    }
    let q_lead = q.leading().unwrap().clone();
    let mut rem = p.clone();
    let mut out = vec![Rational::zero(); k_max + 1];
    let mut q_lead_pow = num_traits::pow::Pow::pow(&q_lead, k_max as i32);
    for k in (0..=k_max).rev() {
        if rem.degree() == Some(2 * k) {
            let c = rem.leading().unwrap() / &q_lead_pow;
            rem = &rem - &powers[k].scale(&c);
            out[k] = c;
        }
        if k > 0 {
            q_lead_pow = &q_lead_pow / &q_lead;
        }
    }
    if rem.is_zero() {
        Ok(Poly::from_coeffs(out))
    } else {
        Err(Error::NotInBasis)
    }
}

/// Rewrites `p` in one of the standard quadratics.
pub fn rebase_in(p: &Poly, basis: SubstitutionBasis) -> Result<Poly> {
    rebase_quadratic(p, &basis.quadratic())
}

/// Coefficient symmetry of a polynomial against an explicit reflection
/// length `n` (the coefficients `a_0..a_n` are compared pairwise with
/// `a_n..a_0`; `n` may exceed the degree, which pads with zeros).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PalindromeClass {
    /// a_v = a_(n-v) for all v.
    Palindromic,
    /// a_v = -a_(n-v) for all v.
    AntiPalindromic,
    /// |a_v| = |a_(n-v)| for all v, mixed signs.
    QuasiPalindromic,
    /// No coefficient symmetry.
    None,
}

/// Classifies the coefficient symmetry of `p` with respect to length `n`.
/// Fails when `n` is smaller than the degree of `p` (the comparison would
/// silently drop coefficients).
pub fn palindrome_class(p: &Poly, n: usize) -> Result<PalindromeClass> {
    if let Some(d) = p.degree() {
        if n < d {
            return Err(Error::Domain(format!(
                "reflection length {n} is smaller than the degree {d}"
            )));
        }
    }
    let mut palin = true;
    let mut anti = true;
    let mut quasi = true;
    for v in 0..=n {
        let a = p.coeff(v);
        let b = p.coeff(n - v);
        if a != b {
            palin = false;
        }
        if a != -&b {
            anti = false;
        }
        if a != b && a != -&b {
            quasi = false;
        }
    }
    Ok(if palin {
        PalindromeClass::Palindromic
    } else if anti {
        PalindromeClass::AntiPalindromic
    } else if quasi {
        PalindromeClass::QuasiPalindromic
    } else {
        PalindromeClass::None
    })
}

/// Sum of `p(nu)` for `nu = 1..=x`, as a polynomial in `x`: each monomial
/// `x^j` is replaced by the corresponding shifted power sum (and `1` by `x`).
pub fn summation_operator(p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (j, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = if j == 0 {
            Poly::x()
        } else {
            crate::bernoulli::power_sum_inclusive(j as u32)
        };
        out = &out + &term.scale(c);
    }
    out
}

/// Big-integer power with exact multiplication counting (used by the naive
/// power-sum strategy in benchmarks).
pub fn int_pow_counted(base: &Int, e: u32) -> (Int, usize) {
    // Square-and-multiply, counting big-integer multiplications.
    if e == 0 {
        return (Int::one(), 0);
    }
    let mut result = base.clone();
    let mut mults = 0;
    let bits = 32 - e.leading_zeros();
    for i in (0..bits - 1).rev() {
        result = &result * &result;
        mults += 1;
        if (e >> i) & 1 == 1 {
            result = &result * base;
            mults += 1;
        }
    }
    (result, mults)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_ints(coeffs)
    }

    // ---- Construction and basic ring laws ----

    #[test]
    fn normalization_strips_trailing_zeros() {
        let q = Poly::from_coeffs(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(q.degree(), Some(0));
        assert_eq!(q, Poly::one());
        assert!(Poly::from_coeffs(vec![rat(0), rat(0)]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn ring_arithmetic() {
        let a = p(&[1, 2]); // 1 + 2x
        let b = p(&[0, 1, 3]); // x + 3x^2
        assert_eq!(&a + &b, p(&[1, 3, 3]));
        assert_eq!(&a - &b, p(&[1, 1, -3]));
        assert_eq!(&a * &b, p(&[0, 1, 5, 6]));
        assert_eq!(-&a, p(&[-1, -2]));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!(&a * &Poly::zero(), Poly::zero());
        assert_eq!(a.pow(0), Poly::one());
        assert_eq!(a.pow(2), p(&[1, 4, 4]));
    }

    #[test]
    fn calculus_operators() {
        let q = p(&[5, 0, 3]); // 5 + 3x^2
        assert_eq!(q.derivative(), p(&[0, 6]));
        assert_eq!(q.antiderivative().derivative(), q);
        assert_eq!(q.antiderivative().coeff(0), rat(0));
        assert_eq!(Poly::one().derivative(), Poly::zero());
        assert_eq!(q.derivative_n(2), p(&[6]));
        assert_eq!(q.derivative_n(3), Poly::zero());
    }

    #[test]
    fn evaluation_and_composition() {
        let q = p(&[1, -1, 2]); // 1 - x + 2x^2
        assert_eq!(q.evaluate(&rat(3)), rat(16));
        assert_eq!(q.evaluate(&frac(1, 2)), rat(1));
        let inner = p(&[1, 1]); // x + 1
        assert_eq!(q.compose(&inner), p(&[2, 3, 2]));
        assert_eq!(q.shift(&rat(1)), q.compose(&inner));
        // compose agrees with pointwise evaluation
        for x in -3..4 {
            assert_eq!(
                q.compose(&inner).evaluate(&rat(x)),
                q.evaluate(&(rat(x) + rat(1)))
            );
        }
    }

    #[test]
    fn evaluation_counts_multiplications() {
        let q = p(&[4, 3, 2, 1]);
        let (val, mults) = q.evaluate_counted(&rat(2));
        assert_eq!(val, rat(26));
        assert_eq!(mults, 3); // degree many
    }

    #[test]
    fn forward_difference_drops_degree() {
        let q = p(&[0, 0, 0, 1]); // x^3
        assert_eq!(q.forward_difference(), p(&[1, 3, 3]));
        for d in 1..8usize {
            let m = Poly::monomial(rat(1), d);
            assert_eq!(m.forward_difference().degree(), Some(d - 1));
        }
        assert_eq!(Poly::one().forward_difference(), Poly::zero());
    }

    #[test]
    fn theta_operator() {
        // (1 + a t D) t^k = (1 + a k) t^k, checked coefficientwise.
        let q = p(&[7, 0, 5]);
        let t = q.theta(&frac(1, 2));
        assert_eq!(t.coeff(0), rat(7));
        assert_eq!(t.coeff(2), rat(10));
        // alpha = 0 is the identity
        assert_eq!(q.theta(&rat(0)), q);
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[1, 1]); // x + 1
        assert_eq!(a.exact_divide(&b).unwrap(), p(&[-1, 1]));
        assert_eq!(a.exact_divide(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert!(matches!(
            p(&[1, 0, 1]).exact_divide(&b),
            Err(Error::NonzeroRemainder)
        ));
        assert!(a.exact_divide(&Poly::zero()).is_err());
        // (q * d) / d == q for assorted shapes
        let d = p(&[2, -3, 1, 5]);
        for q in [p(&[1]), p(&[0, 7]), p(&[-2, 0, 0, 9]), Poly::zero()] {
            assert_eq!((&q * &d).exact_divide(&d).unwrap(), q);
        }
    }

    #[test]
    fn divmod_remainder() {
        let (q, r) = p(&[1, 2, 3]).divmod(&p(&[1, 1])).unwrap();
        assert_eq!(&(&q * &p(&[1, 1])) + &r, p(&[1, 2, 3]));
        assert!(r.degree() < Some(1) || r.is_zero());
    }

    // ---- Quadratic rebasing ----

    #[test]
    fn rebase_round_trip() {
        for basis in [
            SubstitutionBasis::Y,
            SubstitutionBasis::U,
            SubstitutionBasis::Xi,
            SubstitutionBasis::Omega,
        ] {
            let q = basis.quadratic();
            // c(t) = 3 - t + 2t^3, expand c(q(x)) and recover c.
            let c = p(&[3, -1, 0, 2]);
            let expanded = c.compose(&q);
            assert_eq!(rebase_quadratic(&expanded, &q).unwrap(), c, "{basis:?}");
        }
    }

    #[test]
    fn rebase_rejects_residues() {
        let u = SubstitutionBasis::U.quadratic();
        assert!(matches!(rebase_quadratic(&Poly::x(), &u), Err(Error::NotInBasis)));
        assert!(matches!(
            rebase_quadratic(&p(&[0, 0, 0, 1]), &u),
            Err(Error::NotInBasis)
        ));
        assert!(rebase_quadratic(&Poly::one(), &Poly::x()).is_err()); // not a quadratic
        assert_eq!(rebase_quadratic(&Poly::zero(), &u).unwrap(), Poly::zero());
    }

    // ---- Palindrome classification ----

    #[test]
    fn palindrome_classes() {
        assert_eq!(palindrome_class(&p(&[1, 2, 1]), 2).unwrap(), PalindromeClass::Palindromic);
        assert_eq!(
            palindrome_class(&p(&[1, 0, -1]), 2).unwrap(),
            PalindromeClass::AntiPalindromic
        );
        assert_eq!(
            palindrome_class(&p(&[1, 2, -1]), 2).unwrap(),
            PalindromeClass::QuasiPalindromic
        );
        assert_eq!(palindrome_class(&p(&[1, 2, 3]), 2).unwrap(), PalindromeClass::None);
        // Length matters: x + x^2 is palindromic for n = 3, not for n = 2.
        let q = p(&[0, 1, 1]);
        assert_eq!(palindrome_class(&q, 3).unwrap(), PalindromeClass::Palindromic);
        assert_eq!(palindrome_class(&q, 2).unwrap(), PalindromeClass::None);
        assert!(palindrome_class(&q, 1).is_err());
        // The zero polynomial is palindromic at any length.
        assert_eq!(palindrome_class(&Poly::zero(), 4).unwrap(), PalindromeClass::Palindromic);
    }

    #[test]
    fn reflection() {
        let q = p(&[1, 2, 3, 4]);
        assert_eq!(q.reflect(), p(&[1, -2, 3, -4]));
        for x in -3..4 {
            assert_eq!(q.reflect().evaluate(&rat(x)), q.evaluate(&rat(-x)));
        }
    }

    #[test]
    fn counted_integer_power() {
        for b in [-3i64, 0, 2, 10] {
            for e in 0..12u32 {
                if b == 0 && e == 0 {
                    continue;
                }
                let (v, _) = int_pow_counted(&Int::from(b), e);
                assert_eq!(v, Int::from(b).pow(e));
            }
        }
        assert_eq!(int_pow_counted(&Int::from(0), 0).0, Int::from(1));
    }
}
