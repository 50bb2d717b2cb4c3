//! Reciprocal Bernoulli polynomials `x^k B_n(1/x)` and the coefficient
//! numbers they generate.
//!
//! Reversing a Bernoulli polynomial turns the coefficient triangle inside
//! out: derivatives of `x^k B_n(1/x)` evaluated at 1 produce the central
//! derivative numbers, the shifted variant `B_n(x) (x+1)^(k-n)` produces a
//! symmetric number triangle, and the coefficients sitting in the middle of
//! those expansions are, up to scaling, exactly the Faulhaber coefficients.
//! Every quantity here is computed by at least two independent routes and
//! the routes are compared exactly before anything is returned.

use crate::bernoulli::bernoulli_poly;
use crate::error::{Error, Result};
use crate::faulhaber::{degree_index, faulhaber_by_substitution, faulhaber_step_down, FaulhaberPoly};
use crate::laurent::LaurentPoly;
use crate::poly::{palindrome_class, PalindromeClass, Poly};
use crate::rational::{frac, pow2, rat, Rational};
use crate::sequences::{
    bernoulli_number, binomial, factorial, falling_factorial_int, genocchi, lah,
};
use crate::series::TruncatedSeries;
use num_traits::{One, Zero};

/// `x^k B_n(1/x)`: a Laurent polynomial whose coefficients are those of
/// `B_n` reversed, living on exponents `k-n .. k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecipBernoulli {
    pub n: u32,
    pub k: i64,
    pub laurent: LaurentPoly,
}

pub fn recip_bernoulli(n: u32, k: i64) -> RecipBernoulli {
    let b = bernoulli_poly(n);
    let reversed: Vec<Rational> = (0..=n as usize).rev().map(|j| b.coeff(j)).collect();
    RecipBernoulli { n, k, laurent: LaurentPoly::new(k - n as i64, reversed) }
}

/// Residual of the reflection law
/// `B_(n,k)(-x) = (-1)^(n+k) (B_(n,k)(x) + n x^(k-n+1))`
/// (writing `B_(n,k)` for `x^k B_n(1/x)`); zero for every n >= 1.
pub fn recip_reflect_check(n: u32, k: i64) -> LaurentPoly {
    assert!(n >= 1);
    let b = recip_bernoulli(n, k).laurent;
    let spike = LaurentPoly::monomial(k - n as i64 + 1, rat(n as i64));
    let inner = &b + &spike;
    let signed = if (n as i64 + k).rem_euclid(2) == 0 { inner } else { -&inner };
    &b.reflect() - &signed
}

/// n-th derivative of the composition `g(h(x))` by the generalized chain
/// rule: `sum_(k=1)^(n) (g^(k) o h) / k! * psi_(n,k)` with
/// `psi_(n,k) = sum_(j=1)^(k) C(k,j) (-1)^(k-j) h^(k-j) (h^j)^(n)`.
/// The result is compared with direct differentiation before returning.
pub fn hoppe_derivative(g: &Poly, h: &Poly, n: u32) -> Result<Poly> {
    if n < 1 {
        return Err(Error::Domain("the chain rule expansion starts at order 1".into()));
    }
    let mut sum = Poly::zero();
    for k in 1..=n {
        let outer = g.derivative_n(k).compose(h);
        let mut psi = Poly::zero();
        for j in 1..=k {
            let c = Rational::from_integer(binomial(k as i64, j));
            let term = &h.pow(k - j) * &h.pow(j).derivative_n(n);
            let signed = if (k - j) % 2 == 0 { term } else { -&term };
            psi = &psi + &signed.scale(&c);
        }
        sum = &sum + &(&outer * &psi).scale(&(Rational::one() / Rational::from_integer(factorial(k))));
    }
    if sum != g.compose(h).derivative_n(n) {
        return Err(Error::HoppeMismatch { n });
    }
    Ok(sum)
}

/// l-th derivative of `B_n(1/x)` through the reciprocal chain rule: Lah
/// numbers carry the derivatives of `1/x`, so
/// `D^l B_n(1/x) = sum_(nu=1)^(l) L(l,nu) (n)_nu x^(-(l+nu)) B_(n-nu)(1/x)`.
pub fn recip_derivative_hoppe(n: u32, l: u32) -> LaurentPoly {
    assert!(l >= 1, "use the polynomial itself for l = 0");
    let mut sum = LaurentPoly::zero();
    for nu in 1..=l.min(n) {
        let scale = Rational::from_integer(
            lah(l, nu).expect("1 <= nu <= l") * falling_factorial_int(n as i64, nu),
        );
        let tail = recip_bernoulli(n - nu, 0).laurent;
        sum = &sum + &tail.mul_pow_x(-(l as i64 + nu as i64)).scale(&scale);
    }
    sum
}

/// l-th derivative of `x^k B_n(1/x)` assembled with the Leibniz rule on top
/// of the reciprocal chain rule (independent of both the direct and the
/// closed-form routes).
pub fn recip_derivative_leibniz(n: u32, k: i64, l: u32) -> LaurentPoly {
    let mut sum = LaurentPoly::zero();
    for j in 0..=l {
        let scale = Rational::from_integer(
            binomial(l as i64, j) * falling_factorial_int(k, l - j),
        );
        if scale.is_zero() {
            continue;
        }
        let inner = if j == 0 {
            recip_bernoulli(n, 0).laurent
        } else {
            recip_derivative_hoppe(n, j)
        };
        sum = &sum + &inner.mul_pow_x(k - (l - j) as i64).scale(&scale);
    }
    sum
}

/// Closed form for the l-th derivative of `x^k B_n(1/x)` (n, k >= l >= 0):
/// `l! sum_(nu=0)^(l) (-1)^nu C(k-nu, k-l) C(n, nu) x^(k-l-nu) B_(n-nu)(1/x)`.
/// Verified against direct differentiation before returning.
pub fn recip_derivative_closed(n: u32, k: i64, l: u32) -> Result<LaurentPoly> {
    if (n as i64) < l as i64 || k < l as i64 {
        return Err(Error::Domain(format!(
            "closed derivative form needs n, k >= l, got n = {n}, k = {k}, l = {l}"
        )));
    }
    let mut sum = LaurentPoly::zero();
    for nu in 0..=l {
        let c = Rational::from_integer(
            binomial(k - nu as i64, (k - l as i64) as u32) * binomial(n as i64, nu),
        );
        if c.is_zero() {
            continue;
        }
        let signed = if nu % 2 == 0 { c } else { -c };
        let term = recip_bernoulli(n - nu, k - l as i64 - nu as i64).laurent;
        sum = &sum + &term.scale(&signed);
    }
    let result = sum.scale(&Rational::from_integer(factorial(l)));
    if result != recip_bernoulli(n, k).laurent.derivative_n(l) {
        return Err(Error::ClosedFormMismatch { n, k, l });
    }
    Ok(result)
}

/// The central derivative number `b_(n,k)`: the k-th derivative of
/// `x^(2k) B_n(1/x)` at `x = 1`, by the closed sum
/// `(-1)^n k! sum_(nu=0)^(k) C(2k-nu, k) C(n, nu) B_(n-nu)`.
/// For `k >= 2` the three-term recurrence
/// `b_(n,k) = 2(2k-1) b_(n,k-1) + n(n-1) b_(n-2,k-2)`
/// is recomputed from closed-form values and compared.
pub fn b_small(n: u32, k: u32) -> Result<Rational> {
    if k > n {
        return Err(Error::Domain(format!(
            "central derivative numbers live on 0 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let value = b_small_closed(n, k);
    if k >= 2 {
        // n >= 2 is implied by k <= n.
        let rec = rat(2) * rat(2 * k as i64 - 1) * b_small_closed(n, k - 1)
            + rat(n as i64) * rat(n as i64 - 1) * b_small_closed(n - 2, k - 2);
        if rec != value {
            return Err(Error::RecurrenceMismatch { n, k });
        }
    }
    Ok(value)
}

fn b_small_closed(n: u32, k: u32) -> Rational {
    let mut sum = Rational::zero();
    for nu in 0..=k.min(n) {
        sum += Rational::from_integer(
            binomial(2 * k as i64 - nu as i64, k) * binomial(n as i64, nu),
        ) * bernoulli_number(n - nu);
    }
    let scaled = sum * Rational::from_integer(factorial(k));
    if n % 2 == 0 {
        scaled
    } else {
        -scaled
    }
}

/// The auxiliary polynomial
/// `Lambda_(n,k)(x) = sum_(nu=0)^(k) C(n,nu) (2k-nu)_k x^(n-nu)`
/// whose Bernoulli specialization `x^(n-nu) -> B_(n-nu)` collapses to
/// `(-1)^n b_(n,k)`.  For `k >= 2` the differential recurrence
/// `n(n-1) Lambda_(n-2,k-2) = Lambda_(n,k) - 2(2k-1) Lambda_(n,k-1)`
/// is checked on closed-form instances.
pub fn lambda_poly(n: u32, k: u32) -> Result<Poly> {
    if k > n {
        return Err(Error::Domain(format!(
            "the auxiliary polynomials live on 0 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let value = lambda_closed(n, k);
    if k >= 2 {
        let lhs = lambda_closed(n - 2, k - 2).scale(&rat(n as i64 * (n as i64 - 1)));
        let rhs = &lambda_closed(n, k)
            - &lambda_closed(n, k - 1).scale(&rat(2 * (2 * k as i64 - 1)));
        if lhs != rhs {
            return Err(Error::LambdaRecurrenceViolation { n, k });
        }
    }
    Ok(value)
}

fn lambda_closed(n: u32, k: u32) -> Poly {
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for nu in 0..=k.min(n) {
        coeffs[(n - nu) as usize] = Rational::from_integer(
            binomial(n as i64, nu) * falling_factorial_int(2 * k as i64 - nu as i64, k),
        );
    }
    Poly::from_coeffs(coeffs)
}

/// One row of the shifted reciprocal triangle:
/// `B[n,k] = sum_(nu=k)^(n) C(n,nu) C(nu,k) B_nu` for k = 0..n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFrakNumbers {
    pub n: u32,
    pub values: Vec<Rational>,
}

impl BFrakNumbers {
    /// The row as a polynomial `sum_k B[n,k] x^k`.
    pub fn poly(&self) -> Poly {
        Poly::from_coeffs(self.values.clone())
    }
}

/// Computes row n of the shifted triangle and verifies its structure: the
/// signed reflection `B[n,k] = (-1)^n B[n,n-k]`, the endpoint values
/// `B[n,0] = (-1)^n B_n` and `B[n,n] = B_n`, the evaluations
/// `row(-1) = 1` and `row(1) = B_n + G_n/2`, the partial-sum identity
/// `sum_(k<n) B[n,k] = G_n/2`, and the shift identity that the row equals
/// `(x+1)^n B_n(1/(x+1))` expanded.
pub fn b_frak_numbers(n: u32) -> Result<BFrakNumbers> {
    let values: Vec<Rational> = (0..=n)
        .map(|k| {
            let mut sum = Rational::zero();
            for nu in k..=n {
                sum += Rational::from_integer(
                    binomial(n as i64, nu) * binomial(nu as i64, k),
                ) * bernoulli_number(nu);
            }
            sum
        })
        .collect();
    let fail = |check: &'static str| Err(Error::SymmetryViolation { n, check });
    for k in 0..=n as usize {
        let signed = if n % 2 == 0 {
            values[n as usize - k].clone()
        } else {
            -&values[n as usize - k]
        };
        if values[k] != signed {
            return fail("signed reflection");
        }
    }
    let bn = bernoulli_number(n);
    let first = if n % 2 == 0 { bn.clone() } else { -&bn };
    if values[0] != first || values[n as usize] != bn {
        return fail("endpoint values");
    }
    let row = BFrakNumbers { n, values };
    let poly = row.poly();
    if poly.evaluate(&rat(-1)) != Rational::one() {
        return fail("value 1 at x = -1");
    }
    let half_genocchi = genocchi(n) / rat(2);
    if poly.evaluate(&Rational::one()) != &bn + &half_genocchi {
        return fail("value B_n + G_n/2 at x = 1");
    }
    if n >= 1 {
        let partial: Rational = row.values[..n as usize].iter().cloned().sum();
        if partial != half_genocchi {
            return fail("partial sum G_n/2");
        }
    }
    let shifted = recip_bernoulli(n, n as i64)
        .laurent
        .to_poly()
        .expect("no negative exponents at k = n")
        .shift(&Rational::one());
    if shifted != poly {
        return fail("shift of the reciprocal polynomial");
    }
    Ok(row)
}

/// `B_n(x) (x+1)^(k-n)`: a polynomial when `k >= n` (returned with its
/// coefficient symmetry), a truncated series otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BFrakSeries {
    Polynomial { poly: Poly, symmetry: PalindromeClass },
    Truncated(TruncatedSeries),
}

pub fn b_frak_series(n: u32, k: i64, order: usize) -> Result<BFrakSeries> {
    let row_poly = b_frak_numbers(n)?.poly();
    if k >= n as i64 {
        let shift = Poly::from_ints(&[1, 1]).pow((k - n as i64) as u32);
        let poly = &row_poly * &shift;
        let symmetry = palindrome_class(&poly, k as usize)?;
        Ok(BFrakSeries::Polynomial { poly, symmetry })
    } else {
        let series = TruncatedSeries::from_poly(&row_poly, order)
            .mul(&TruncatedSeries::binomial_series(k - n as i64, order));
        Ok(BFrakSeries::Truncated(series))
    }
}

/// The central coefficients of an odd-index row: `f_(n,k)` is the
/// coefficient of `x^k` in `B_n(x)(x+1)^(2k-n)`.  Three independent routes
/// are compared for every k:
/// extraction from the series/polynomial, the central derivative number
/// divided by k!, and the binomial combination of the row numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralCoeffs {
    pub n: u32,
    /// `f_(n,0) .. f_(n,n)`; zero outside `1 <= k <= (n-1)/2`.
    pub values: Vec<Rational>,
}

pub fn central_coeffs(n: u32) -> Result<CentralCoeffs> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Domain(format!(
            "central coefficients require odd n >= 3, got {n}"
        )));
    }
    let row = b_frak_numbers(n)?;
    let mut values = Vec::with_capacity(n as usize + 1);
    for k in 0..=n as usize {
        let extracted = match b_frak_series(n, 2 * k as i64, k)? {
            BFrakSeries::Polynomial { poly, .. } => poly.coeff(k),
            BFrakSeries::Truncated(series) => {
                series.coeff(k).expect("order covers k").clone()
            }
        };
        let derived = b_small(n, k as u32)? / Rational::from_integer(factorial(k as u32));
        let mut combined = Rational::zero();
        for (nu, b) in row.values.iter().enumerate().take(k + 1) {
            combined += Rational::from_integer(binomial(
                2 * k as i64 - n as i64,
                (k - nu) as u32,
            )) * b;
        }
        if extracted != derived || extracted != combined {
            return Err(Error::RouteMismatch { n, k: k as u32 });
        }
        values.push(extracted);
    }
    // Support and sign structure: zero at k = 0 and beyond the middle,
    // constant sign (-1)^((n-1)/2) inside.
    let half = (n as usize + 1) / 2;
    let expected_sign = if ((n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    for (k, v) in values.iter().enumerate() {
        let ok = if k == 0 || k >= half {
            v.is_zero()
        } else {
            crate::rational::signum(v) == expected_sign
        };
        if !ok {
            return Err(Error::RouteMismatch { n, k: k as u32 });
        }
    }
    Ok(CentralCoeffs { n, values })
}

/// For odd n and each `k` in the upper half `(n+1)/2 <= k <= n`, both
/// vanishing sums: the Bernoulli route
/// `sum_nu C(2k-nu, k) C(n, nu) B_(n-nu)` and the row route
/// `sum_nu C(2k-n, k-nu) B[n,nu]`.  All returned values are zero.
pub fn zero_sum_checks(n: u32) -> Result<Vec<(Rational, Rational)>> {
    if n % 2 == 0 {
        return Err(Error::Domain("the vanishing sums concern odd n".into()));
    }
    let row = b_frak_numbers(n)?;
    let mut out = Vec::new();
    for k in (n + 1) / 2..=n {
        let mut bernoulli_route = Rational::zero();
        for nu in 0..=k.min(n) {
            bernoulli_route += Rational::from_integer(
                binomial(2 * k as i64 - nu as i64, k) * binomial(n as i64, nu),
            ) * bernoulli_number(n - nu);
        }
        let mut row_route = Rational::zero();
        for (nu, b) in row.values.iter().enumerate().take(k as usize + 1) {
            row_route += Rational::from_integer(binomial(
                2 * k as i64 - n as i64,
                (k as usize - nu) as u32,
            )) * b;
        }
        out.push((bernoulli_route, row_route));
    }
    Ok(out)
}

/// Rebuilds the Faulhaber polynomial `F_n` from central derivative numbers:
/// `f_(n,k) = (-1)^(k+1) (2^(k+2) / (k+2)!) b_(n,k+1)`, and checks the
/// even companion `f_(n-1,k) = (-1)^(k+1) (3/n) (2^(k+1) / (k+1)!) b_(n,k+1)`
/// along with the derivative values `F_n^(k)(0) = k! f_(n,k)`.  Everything
/// is compared against the power-sum construction.
pub fn bridge_to_faulhaber(n: u32) -> Result<FaulhaberPoly> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Domain(format!(
            "the bridge runs over odd n >= 3, got {n}"
        )));
    }
    let d = degree_index(n);
    let mut odd_coeffs = Vec::with_capacity(d + 1);
    let mut even_coeffs = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let b = b_small(n, k as u32 + 1)?;
        let sign = if k % 2 == 0 { rat(-1) } else { rat(1) };
        odd_coeffs.push(
            &sign * pow2(k as i32 + 2) / Rational::from_integer(factorial(k as u32 + 2)) * &b,
        );
        even_coeffs.push(
            sign * frac(3, n as i64) * pow2(k as i32 + 1)
                / Rational::from_integer(factorial(k as u32 + 1))
                * &b,
        );
    }
    let reference = faulhaber_by_substitution(n)?;
    if odd_coeffs != reference.coeffs() {
        return Err(Error::BridgeMismatch { n });
    }
    let even_reference = faulhaber_step_down(&reference)?;
    if even_coeffs != even_reference.coeffs() {
        return Err(Error::BridgeMismatch { n });
    }
    // Derivative values at 0 agree with the scaled numbers.
    let as_poly = reference.as_poly();
    for k in 0..=d {
        let deriv_at_zero = as_poly.derivative_n(k as u32).coeff(0);
        if deriv_at_zero != Rational::from_integer(factorial(k as u32)) * &odd_coeffs[k] {
            return Err(Error::BridgeMismatch { n });
        }
    }
    Ok(reference)
}

/// Residual of the binomial reciprocity law
/// `(-1)^r sum_nu C(r,nu) B_(s+nu) = (-1)^s sum_nu C(s,nu) B_(r+nu)`;
/// zero for all r, s >= 0.
pub fn reciprocity_check(r: u32, s: u32) -> Rational {
    let side = |a: u32, b: u32| {
        let mut sum = Rational::zero();
        for nu in 0..=a {
            sum += Rational::from_integer(binomial(a as i64, nu)) * bernoulli_number(b + nu);
        }
        if a % 2 == 0 {
            sum
        } else {
            -sum
        }
    };
    side(r, s) - side(s, r)
}
