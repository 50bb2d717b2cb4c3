//! Faulhaber polynomials and their coefficient identities.
//!
//! For n >= 2 the power sum `S_n(x)` factors as `f_n(x) * F_n(y)` with
//! `y = x(x-1)/2`, where the cofactor `f_n` is `S_2` for even n and `S_1^2`
//! for odd n.  `F_n` is the Faulhaber polynomial; its degree is
//! `d_n = floor(n/2) - 1`.
//!
//! The module builds `F_n` by four independent routes -- polynomial division
//! plus quadratic rebasing, a closed-form alternating binomial sum, a
//! triangular linear system, and a two-term coefficient chain running up the
//! odd indices -- and cross-checks them nowhere less than exactly.  It also
//! carries the classical coefficient apparatus tied to these polynomials:
//! the theta-operator recurrences, the vanishing linear relations among the
//! coefficients, the Jacobi and Schroeder coefficient triangles, the even
//! part of `B_n(x)` as a polynomial in `x(x-1)`, and iterated (r-fold) power
//! sums with their own quadratic factorization.

use crate::bernoulli::power_sum_poly;
use crate::error::{Error, Result};
use crate::poly::{rebase_in, rebase_quadratic, summation_operator, Poly, SubstitutionBasis};
use crate::rational::{frac, pow2, rat, Rational};
use crate::sequences::{bernoulli_number, binomial};
use num_traits::{One, Signed, Zero};

/// Degree of `F_n`: `floor(n/2) - 1`.
pub fn degree_index(n: u32) -> usize {
    (n as usize) / 2 - 1
}

/// The cofactor `f_n` with `S_n(x) = f_n(x) * F_n(x(x-1)/2)`:
/// `S_2(x)` for even n, `S_1(x)^2` for odd n.
pub fn cofactor_poly(n: u32) -> Poly {
    if n % 2 == 0 {
        power_sum_poly(2)
    } else {
        power_sum_poly(1).pow(2)
    }
}

/// A Faulhaber polynomial: the coefficients of `F_n` in ascending powers of
/// the triangular-number variable `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaulhaberPoly {
    n: u32,
    coeffs: Vec<Rational>,
}

impl FaulhaberPoly {
    fn from_parts(n: u32, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(degree_index(n) + 1, Rational::zero());
        FaulhaberPoly { n, coeffs }
    }

    /// Reconstructs a polynomial from raw parts, re-running the full
    /// invariant check so that corrupted data cannot round-trip.
    pub fn from_checked(n: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!(
                "Faulhaber polynomials start at n = 2, got {n}"
            )));
        }
        let f = FaulhaberPoly { n, coeffs };
        f.check_invariants()?;
        Ok(f)
    }

    /// The power-sum index n (not the degree in y).
    pub fn index(&self) -> u32 {
        self.n
    }

    /// Ascending coefficients; always exactly `degree_index(n) + 1` entries.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficients as an ordinary polynomial in y.
    pub fn as_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    pub fn evaluate(&self, y: &Rational) -> Rational {
        self.as_poly().evaluate(y)
    }

    /// Everything a Faulhaber polynomial must satisfy regardless of how it
    /// was built: full support with alternating signs ending positive at the
    /// top, value 1 at y = 1, the Bernoulli boundary value at y = 0, and for
    /// odd n the closed-form leading coefficient `2^((n+1)/2) / (n+1)`.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.n;
        let d = degree_index(n);
        let fail = |what: &str| {
            Err(Error::Domain(format!("F_{n} violates `{what}`")))
        };
        if self.coeffs.len() != d + 1 {
            return fail("coefficient count = degree_index + 1");
        }
        let sum: Rational = self.coeffs.iter().cloned().sum();
        if !sum.is_one() {
            return fail("F(1) = 1");
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            let positive = (d - k) % 2 == 0;
            if c.is_zero() || c.is_positive() != positive {
                return fail("sign alternation with positive leading coefficient");
            }
        }
        let at_zero = if n % 2 == 0 {
            rat(6) * bernoulli_number(n)
        } else {
            rat(2 * n as i64) * bernoulli_number(n - 1)
        };
        if self.coeffs[0] != at_zero {
            return fail("Bernoulli boundary value at y = 0");
        }
        if n % 2 == 1 {
            let lead = pow2((n as i32 + 1) / 2) / rat(n as i64 + 1);
            if self.coeffs[d] != lead {
                return fail("closed-form leading coefficient");
            }
        }
        Ok(())
    }
}

/// Route 1: divide `S_n` by the cofactor and rewrite the quotient in
/// `y = x(x-1)/2`.  Works for every n >= 2, either parity.
pub fn faulhaber_by_substitution(n: u32) -> Result<FaulhaberPoly> {
    if n < 2 {
        return Err(Error::Domain(format!("Faulhaber polynomials start at n = 2, got {n}")));
    }
    let quotient = power_sum_poly(n).exact_divide(&cofactor_poly(n))?;
    let in_y = rebase_in(&quotient, SubstitutionBasis::Y)?;
    Ok(FaulhaberPoly::from_parts(n, in_y.coeffs().to_vec()))
}

/// Route 2 (odd n): the closed-form alternating binomial sum
/// `f_(n,k) = (-1)^k (2^(k+2)/(k+2)) *
///            sum_(nu=0)^(k+1) C(2k+2-nu, k+1) C(n, nu) B_(n-nu)`.
pub fn faulhaber_gv(n: u32) -> Result<FaulhaberPoly> {
    odd_index_guard(n)?;
    let d = degree_index(n);
    let coeffs = (0..=d)
        .map(|k| {
            let mut sum = Rational::zero();
            for nu in 0..=(k as u32 + 1) {
                sum += Rational::from_integer(
                    binomial(2 * (k as i64 + 1) - nu as i64, k as u32 + 1)
                        * binomial(n as i64, nu),
                ) * bernoulli_number(n - nu);
            }
            let scale = pow2(k as i32 + 2) / rat(k as i64 + 2);
            if k % 2 == 0 {
                sum * scale
            } else {
                -sum * scale
            }
        })
        .collect();
    Ok(FaulhaberPoly::from_parts(n, coeffs))
}

/// Route 3 (odd n): solve the triangular system
/// `C(n, l+1) B_(n-l-1) = (l+2) sum_(k=0)^(l) C(k+2, l-k) (1/2)^(k+2) f_(n,k)`
/// for l = 0..d_n; the l-th equation introduces exactly one new unknown.
pub fn faulhaber_triangular(n: u32) -> Result<FaulhaberPoly> {
    odd_index_guard(n)?;
    let d = degree_index(n);
    let mut coeffs: Vec<Rational> = Vec::with_capacity(d + 1);
    for l in 0..=d {
        let lhs = Rational::from_integer(binomial(n as i64, l as u32 + 1))
            * bernoulli_number(n - l as u32 - 1);
        let mut known = Rational::zero();
        for (k, f) in coeffs.iter().enumerate() {
            known += Rational::from_integer(binomial(k as i64 + 2, (l - k) as u32))
                * pow2(-(k as i32 + 2))
                * f;
        }
        // Coefficient of the new unknown f_(n,l) is (l+2) / 2^(l+2).
        let new = (lhs / rat(l as i64 + 2) - known) * pow2(l as i32 + 2);
        coeffs.push(new);
    }
    Ok(FaulhaberPoly::from_parts(n, coeffs))
}

/// Step from odd `n` down to `n - 1`:
/// `f_(n-1,k) = (3 / 2n) (k+2) f_(n,k)`, same coefficient count.
pub fn faulhaber_step_down(f: &FaulhaberPoly) -> Result<FaulhaberPoly> {
    let n = f.index();
    odd_index_guard(n)?;
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| frac(3, 2 * n as i64) * rat(k as i64 + 2) * c)
        .collect();
    Ok(FaulhaberPoly::from_parts(n - 1, coeffs))
}

/// Route 4 (odd n): run the two-term coefficient chain up the odd indices
/// from `F_3 = 1`.  For each step `m`, the leading coefficient comes from
/// its closed form, the equation
/// `C(m,2) f_(m-2,k) = (1/2) C(2k+6,2) f_(m,k+1) + (1/4) C(k+4,2) f_(m,k+2)`
/// at `k = d-1` must then hold identically (consistency check), the same
/// equation for `k = d-2 .. 0` yields each next-lower coefficient, and the
/// constant term is fixed by `F_m(0) = 2m B_(m-1)`.  A final `F_m(1) = 1`
/// check closes the step.
pub fn faulhaber_chain(n: u32) -> Result<FaulhaberPoly> {
    odd_index_guard(n)?;
    let mut prev = FaulhaberPoly::from_parts(3, vec![Rational::one()]);
    if n == 3 {
        return Ok(prev);
    }
    for m in (5..=n as i64).step_by(2) {
        let d = degree_index(m as u32);
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = pow2((m as i32 + 1) / 2) / rat(m + 1);

        // Consistency of the assumed leading coefficient with the previous
        // polynomial's leading coefficient (the k = d-1 equation, whose
        // f_(m,d+1) term is zero).
        let lhs = Rational::from_integer(binomial(m, 2)) * prev.coeff(d - 1);
        let rhs = frac(1, 2)
            * Rational::from_integer(binomial(2 * (d as i64 + 2), 2))
            * &coeffs[d];
        if lhs != rhs {
            return Err(Error::ChainInconsistency { n: m as u32 });
        }

        // Walk downward: the k-th equation gives f_(m,k+1).
        for k in (0..=d.saturating_sub(2)).rev() {
            if d < 2 {
                break;
            }
            let known = frac(1, 4)
                * Rational::from_integer(binomial(k as i64 + 4, 2))
                * &coeffs[k + 2];
            let target = Rational::from_integer(binomial(m, 2)) * prev.coeff(k);
            let divisor =
                frac(1, 2) * Rational::from_integer(binomial(2 * (k as i64 + 3), 2));
            coeffs[k + 1] = (target - known) / divisor;
        }

        // The equations never touch the constant term; the boundary value
        // F_m(0) supplies it.
        coeffs[0] = rat(2 * m) * bernoulli_number(m as u32 - 1);

        // Close the step: the chain and the boundary value must combine to
        // a polynomial with F_m(1) = 1.
        let sum: Rational = coeffs.iter().cloned().sum();
        if !sum.is_one() {
            return Err(Error::ChainInconsistency { n: m as u32 });
        }
        prev = FaulhaberPoly::from_parts(m as u32, coeffs);
    }
    Ok(prev)
}

fn odd_index_guard(n: u32) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Domain(format!("this construction requires odd n >= 3, got {n}")));
    }
    Ok(())
}

/// Residual of the theta-operator recurrence connecting `F_n` to `F_(n-1)`
/// (zero iff the recurrence holds).  For odd n:
/// `n F_(n-1) - 3 (1 + (y/2) d/dy) F_n`.  For even n:
/// `n y^2 F_(n-1) - (1/6)(1 + y d/dy)(F_n - F_n(0)) - 2y (1 + (2y/3) d/dy) F_n`.
pub fn theta_recurrence_check(n: u32) -> Result<Poly> {
    if n < 3 {
        return Err(Error::Domain(format!("the recurrence starts at n = 3, got {n}")));
    }
    let fn_ = faulhaber_by_substitution(n)?.as_poly();
    let fm = faulhaber_by_substitution(n - 1)?.as_poly();
    if n % 2 == 1 {
        let lhs = fm.scale(&rat(n as i64));
        let rhs = fn_.theta(&frac(1, 2)).scale(&rat(3));
        Ok(&lhs - &rhs)
    } else {
        let y_sq = Poly::monomial(Rational::one(), 2);
        let lhs = (&y_sq * &fm).scale(&rat(n as i64));
        let centered = &fn_ - &Poly::constant(fn_.coeff(0));
        let first = centered.theta(&Rational::one()).scale(&frac(1, 6));
        let second = &Poly::monomial(rat(2), 1) * &fn_.theta(&frac(2, 3));
        Ok(&(&lhs - &first) - &second)
    }
}

/// The vanishing linear relations among the coefficients of one `F_n`
/// (odd n >= 5): for each `l = 0..d_n - 1`,
/// `sum_(k=l)^(d_n) C(k+2, 2(k-l)+1) (1/2)^(k-l) f_(n,k) = 0`.
/// Only `k <= 2l + 1` can contribute (the binomial vanishes beyond), which
/// is asserted along the way.  Returns the residuals.
pub fn knuth_residuals(n: u32) -> Result<Vec<Rational>> {
    odd_index_guard(n)?;
    if n < 5 {
        return Err(Error::Domain("the relations are vacuous below n = 5".into()));
    }
    let f = faulhaber_by_substitution(n)?;
    let d = degree_index(n);
    let mut residuals = Vec::with_capacity(d);
    for l in 0..d {
        let mut sum = Rational::zero();
        for k in l..=d {
            let c = binomial(k as i64 + 2, 2 * (k - l) as u32 + 1);
            debug_assert!(
                k <= 2 * l + 1 || c.is_zero(),
                "support claim failed at n = {n}, l = {l}, k = {k}"
            );
            sum += Rational::from_integer(c) * pow2(-((k - l) as i32)) * f.coeff(k);
        }
        residuals.push(sum);
    }
    Ok(residuals)
}

/// Coefficients of an odd power sum over the basis `u = x(x-1)`:
/// `S_(2m-1)(x) = (1/2m) (a_0 u^m + a_1 u^(m-1) + ... + a_(m-1) u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiCoeffs {
    pub m: u32,
    /// `a_0 .. a_(m-1)`, descending powers of u.
    pub a: Vec<Rational>,
}

impl JacobiCoeffs {
    /// The power sum this row encodes, as a polynomial in x.
    pub fn power_sum(&self) -> Poly {
        let mut in_u = vec![Rational::zero(); self.m as usize + 1];
        for (k, a) in self.a.iter().enumerate() {
            in_u[self.m as usize - k] = a / rat(2 * self.m as i64);
        }
        Poly::from_coeffs(in_u).compose(&SubstitutionBasis::U.quadratic())
    }
}

fn jacobi_row(m: u32) -> Result<Vec<Rational>> {
    if m == 1 {
        // S_1 = u/2.
        return Ok(vec![Rational::one()]);
    }
    let n = 2 * m - 1;
    let f = faulhaber_by_substitution(n)?;
    let d = degree_index(n); // = m - 2
    let a = (0..m as usize)
        .map(|k| {
            if k > d {
                Rational::zero()
            } else {
                rat(n as i64 + 1) * f.coeff(d - k) / pow2(m as i32 - k as i32)
            }
        })
        .collect();
    Ok(a)
}

/// Builds the Jacobi coefficient row for `S_(2m-1)` and verifies its
/// endpoints (`a_0 = 1`, `a_(m-1) = 0`), its reconstruction of the power
/// sum, and the three-term recurrence against row `m - 1`:
/// `C(2m,2) a_k^(m-1) = C(2m-2k,2) a_k^(m) + C(m-k+1,2) a_(k-1)^(m)`.
pub fn jacobi_coeffs(m: u32) -> Result<JacobiCoeffs> {
    if m < 2 {
        return Err(Error::Domain(format!("Jacobi rows start at m = 2, got {m}")));
    }
    let a = jacobi_row(m)?;
    if !a[0].is_one() || !a[m as usize - 1].is_zero() {
        return Err(Error::JacobiRecurrenceViolation { m, k: 0 });
    }
    let row = JacobiCoeffs { m, a };
    if row.power_sum() != power_sum_poly(2 * m - 1) {
        return Err(Error::JacobiRecurrenceViolation { m, k: m });
    }
    let prev = jacobi_row(m - 1)?;
    for (k, pk) in prev.iter().enumerate() {
        let lhs = Rational::from_integer(binomial(2 * m as i64, 2)) * pk;
        let mut rhs = Rational::from_integer(binomial(2 * (m as i64 - k as i64), 2))
            * &row.a[k];
        if k > 0 {
            rhs += Rational::from_integer(binomial(m as i64 - k as i64 + 1, 2))
                * &row.a[k - 1];
        }
        if lhs != rhs {
            return Err(Error::JacobiRecurrenceViolation { m, k: k as u32 });
        }
    }
    Ok(row)
}

/// Schroeder's beta (odd case) and gamma (even case) coefficient rows for
/// the power sums of exponent `2m+1` and `2m` over `xi = -x(x-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchroederCoeffs {
    pub m: u32,
    pub beta: Vec<Rational>,
    pub gamma: Vec<Rational>,
}

impl SchroederCoeffs {
    /// `S_(2m+1)(x) = ((-1)^(m+1) / (2m+2)) sum_(k=2)^(m+1) beta_(m-k+1) xi^k`.
    pub fn odd_power_sum(&self) -> Poly {
        let m = self.m as usize;
        let mut in_xi = vec![Rational::zero(); m + 2];
        for k in 2..=m + 1 {
            in_xi[k] = self.beta[m + 1 - k].clone();
        }
        let sign = if m % 2 == 1 { rat(1) } else { rat(-1) };
        Poly::from_coeffs(in_xi)
            .compose(&SubstitutionBasis::Xi.quadratic())
            .scale(&(sign / rat(2 * m as i64 + 2)))
    }

    /// `S_(2m)(x) = ((-1)^m / (2m+1)) (x - 1/2) sum_(k=1)^(m) gamma_(m-k) xi^k`.
    pub fn even_power_sum(&self) -> Poly {
        let m = self.m as usize;
        let mut in_xi = vec![Rational::zero(); m + 1];
        for k in 1..=m {
            in_xi[k] = self.gamma[m - k].clone();
        }
        let sign = if m % 2 == 0 { rat(1) } else { rat(-1) };
        let envelope = Poly::from_coeffs(vec![frac(-1, 2), rat(1)]);
        (&Poly::from_coeffs(in_xi).compose(&SubstitutionBasis::Xi.quadratic()) * &envelope)
            .scale(&(sign / rat(2 * m as i64 + 1)))
    }
}

fn schroeder_beta(m: u32, k: u32) -> Rational {
    schroeder_entry(m, k, true)
}

fn schroeder_gamma(m: u32, k: u32) -> Rational {
    schroeder_entry(m, k, false)
}

/// Common closed form behind beta (odd) and gamma (even):
/// `(-1)^(k+1) 4^(-k) sum_nu C(2m+2 or 2m+1, 2nu) C(m-nu+1 or m-nu, k-nu)
///  (4^nu - 2) B_(2nu)`.
fn schroeder_entry(m: u32, k: u32, odd_case: bool) -> Rational {
    let mut sum = Rational::zero();
    for nu in 0..=k {
        let top = if odd_case { 2 * m as i64 + 2 } else { 2 * m as i64 + 1 };
        let mid = if odd_case { m as i64 - nu as i64 + 1 } else { m as i64 - nu as i64 };
        sum += Rational::from_integer(binomial(top, 2 * nu) * binomial(mid, k - nu))
            * (pow2(2 * nu as i32) - rat(2))
            * bernoulli_number(2 * nu);
    }
    let scaled = sum * pow2(-2 * (k as i32));
    if k % 2 == 0 {
        -scaled
    } else {
        scaled
    }
}

/// Builds Schroeder's coefficient rows for a given `m >= 1` and verifies,
/// exactly: both zeroth entries are 1; every entry is positive; the
/// proportionality `(m+1) gamma_k = (m-k+1) beta_k`; the beta recurrence
/// against row `m-1`; the tail values `beta_(m-1) = (1/2) beta_(m-2)` and
/// `beta_(m-1) = C(2m+2,2) |B_2m|`; and the sign link `a_k^(m+1) =
/// (-1)^k beta_k^(m)` into the Jacobi row.
pub fn schroeder_coeffs(m: u32) -> Result<SchroederCoeffs> {
    if m < 1 {
        return Err(Error::Domain("Schroeder rows start at m = 1".into()));
    }
    let beta: Vec<Rational> = (0..m).map(|k| schroeder_beta(m, k)).collect();
    let gamma: Vec<Rational> = (0..m).map(|k| schroeder_gamma(m, k)).collect();
    let fail = |check: &'static str| Err(Error::SchroederIdentityViolation { m, check });

    if !beta[0].is_one() || !gamma[0].is_one() {
        return fail("beta_0 = gamma_0 = 1");
    }
    if beta.iter().chain(gamma.iter()).any(|c| !c.is_positive()) {
        return fail("positivity");
    }
    for k in 0..m as usize {
        if rat(m as i64 + 1) * &gamma[k] != rat(m as i64 - k as i64 + 1) * &beta[k] {
            return fail("(m+1) gamma_k = (m-k+1) beta_k");
        }
    }
    if m >= 2 {
        for k in 0..=(m as usize - 2) {
            let lhs = Rational::from_integer(binomial(2 * (m as i64 - k as i64) + 2, 2))
                * &beta[k];
            let mut rhs = Rational::from_integer(binomial(2 * m as i64 + 2, 2))
                * schroeder_beta(m - 1, k as u32);
            if k > 0 {
                rhs += Rational::from_integer(binomial(m as i64 - k as i64 + 2, 2))
                    * &beta[k - 1];
            }
            if lhs != rhs {
                return fail("row-to-row recurrence");
            }
        }
        if rat(2) * &beta[m as usize - 1] != beta[m as usize - 2] {
            return fail("beta_(m-1) = beta_(m-2)/2");
        }
    }
    let tail = Rational::from_integer(binomial(2 * m as i64 + 2, 2))
        * bernoulli_number(2 * m).abs();
    if beta[m as usize - 1] != tail {
        return fail("beta_(m-1) = C(2m+2,2)|B_2m|");
    }
    let jacobi = jacobi_row(m + 1)?;
    for (k, b) in beta.iter().enumerate() {
        let signed = if k % 2 == 0 { b.clone() } else { -b };
        if jacobi[k] != signed {
            return fail("a_k = (-1)^k beta_k");
        }
    }
    Ok(SchroederCoeffs { m, beta, gamma })
}

/// The even part of an odd-index Bernoulli polynomial, as a polynomial in
/// `u = x(x-1)`: returns `P` with `B_n(x) = (2x-1) P(x(x-1))`, equivalently
/// `(1/2) B_n(x) / (x - 1/2) = P(u)`.  Its coefficients are the central
/// coefficients with alternating signs; several structural checks run
/// before the polynomial is returned.
pub fn bold_f_poly(n: u32) -> Result<Poly> {
    odd_index_guard(n)?;
    let central = crate::reciprocal::central_coeffs(n)?;
    let coeffs: Vec<Rational> = central
        .values
        .iter()
        .enumerate()
        .map(|(k, f)| if k % 2 == 0 { f.clone() } else { -f })
        .collect();
    let p = Poly::from_coeffs(coeffs);
    let check = |ok: bool| {
        if ok {
            Ok(())
        } else {
            Err(Error::BnFpViolation { n })
        }
    };
    check(p.coeff(0).is_zero())?;
    check(p.degree() == Some((n as usize - 1) / 2))?;
    // (2x - 1) P(x(x-1)) = B_n(x)
    let recomposed = &Poly::from_ints(&[-1, 2]) * &p.compose(&SubstitutionBasis::U.quadratic());
    check(recomposed == crate::bernoulli::bernoulli_poly(n))?;
    // Division route: (1/2) B_n / (x - 1/2), rebased in u, gives the same
    // coefficients.
    let half = Poly::from_coeffs(vec![frac(-1, 2), rat(1)]);
    let quotient = crate::bernoulli::bernoulli_poly(n)
        .exact_divide(&half)?
        .scale(&frac(1, 2));
    check(rebase_in(&quotient, SubstitutionBasis::U)? == p)?;
    Ok(p)
}

/// The lifted Faulhaber pair `(G_n, G_(n-1))` with `G_n(y) = y^2 F_n(y)` and
/// `G_(n-1)(y) = (2/3) y F_(n-1)(y)` for odd n, satisfying
/// `G_n' = n G_(n-1)`, `G_n(y(x)) = S_n(x)` and
/// `(x - 1/2) G_(n-1)(y(x)) = S_(n-1)(x)`.
pub fn frak_f_pair(n: u32) -> Result<(Poly, Poly)> {
    odd_index_guard(n)?;
    let f_odd = faulhaber_by_substitution(n)?;
    let f_even = faulhaber_step_down(&f_odd)?;
    let g_odd = &Poly::monomial(Rational::one(), 2) * &f_odd.as_poly();
    let g_even = &Poly::monomial(frac(2, 3), 1) * &f_even.as_poly();
    let check = |ok: bool| {
        if ok {
            Ok(())
        } else {
            Err(Error::AppellViolation { n })
        }
    };
    check(g_odd.derivative() == g_even.scale(&rat(n as i64)))?;
    let y = SubstitutionBasis::Y.quadratic();
    check(g_odd.compose(&y) == power_sum_poly(n))?;
    let envelope = Poly::from_coeffs(vec![frac(-1, 2), rat(1)]);
    check(&envelope * &g_even.compose(&y) == power_sum_poly(n - 1))?;
    Ok((g_odd, g_even))
}

/// An iterated power sum and its quadratic factorization.  `poly` sums the
/// n-th powers r-fold-inclusively (each layer sums from 1 to the argument);
/// `g` satisfies `poly(x) = g(x(x+r)) * base(x)` where `base` is the r-fold
/// sum of exponent `d` (1 for odd n, 2 for even n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RFoldSum {
    pub n: u32,
    pub r: u32,
    /// Reduced exponent: 1 for odd n, 2 for even n.
    pub d: u32,
    /// The r-fold sum of n-th powers, as a polynomial in the top argument.
    pub poly: Poly,
    /// The quotient expressed in the quadratic `x(x+r)`.
    pub g: Poly,
}

/// r-fold inclusive power sum of exponent `d`.
fn iterated_sum(d: u32, r: u32) -> Poly {
    let mut s = Poly::monomial(Rational::one(), d as usize);
    for _ in 0..r {
        s = summation_operator(&s);
    }
    s
}

/// Builds the r-fold power sum of exponent n and factors it through the
/// matching low-exponent r-fold sum: the quotient is a polynomial in
/// `x(x+r)`.
pub fn rfold(n: u32, r: u32) -> Result<RFoldSum> {
    if n < 1 || r < 1 {
        return Err(Error::Domain(format!("r-fold sums need n >= 1 and r >= 1, got n = {n}, r = {r}")));
    }
    let poly = iterated_sum(n, r);
    let d = if n % 2 == 1 { 1 } else { 2 };
    let base = iterated_sum(d, r);
    let quotient = poly.exact_divide(&base)?;
    let quadratic = Poly::from_coeffs(vec![Rational::zero(), rat(r as i64), Rational::one()]);
    let g = rebase_quadratic(&quotient, &quadratic)?;
    Ok(RFoldSum { n, r, d, poly, g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::power_sum_eval_brute;
    use crate::rational::to_integer;

    fn fixture(n: u32, denom: i64, numers: &[i64]) -> FaulhaberPoly {
        // numers are ascending coefficients of the common-denominator form.
        FaulhaberPoly::from_parts(
            n,
            numers.iter().map(|&c| frac(c, denom)).collect(),
        )
    }

    #[test]
    fn substitution_reproduces_known_rows() {
        // Classical table: F_2 = F_3 = 1, F_4 = (6y-1)/5, F_5 = (4y-1)/3,
        // F_9 = (16y^3 - 20y^2 + 12y - 3)/5.
        assert_eq!(faulhaber_by_substitution(2).unwrap(), fixture(2, 1, &[1]));
        assert_eq!(faulhaber_by_substitution(3).unwrap(), fixture(3, 1, &[1]));
        assert_eq!(faulhaber_by_substitution(4).unwrap(), fixture(4, 5, &[-1, 6]));
        assert_eq!(faulhaber_by_substitution(5).unwrap(), fixture(5, 3, &[-1, 4]));
        assert_eq!(
            faulhaber_by_substitution(9).unwrap(),
            fixture(9, 5, &[-3, 12, -20, 16])
        );
        assert!(faulhaber_by_substitution(1).is_err());
    }

    #[test]
    fn all_four_routes_agree_on_odd_indices() {
        for n in (3..=21u32).step_by(2) {
            let a = faulhaber_by_substitution(n).unwrap();
            let b = faulhaber_gv(n).unwrap();
            let c = faulhaber_triangular(n).unwrap();
            let d = faulhaber_chain(n).unwrap();
            assert_eq!(a, b, "gv at n = {n}");
            assert_eq!(a, c, "triangular at n = {n}");
            assert_eq!(a, d, "chain at n = {n}");
        }
    }

    #[test]
    fn step_down_matches_direct_even_construction() {
        for n in (3..=21u32).step_by(2) {
            let odd = faulhaber_by_substitution(n).unwrap();
            let even = faulhaber_step_down(&odd).unwrap();
            assert_eq!(even, faulhaber_by_substitution(n - 1).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn invariants_hold_for_all_constructions() {
        for n in 2..=25u32 {
            faulhaber_by_substitution(n).unwrap().check_invariants().unwrap();
        }
        for n in (3..=25u32).step_by(2) {
            faulhaber_gv(n).unwrap().check_invariants().unwrap();
            faulhaber_chain(n).unwrap().check_invariants().unwrap();
        }
    }

    #[test]
    fn factorization_matches_brute_sums() {
        for n in 2..=12u32 {
            let f = faulhaber_by_substitution(n).unwrap();
            let cof = cofactor_poly(n);
            for m in 0..=20u64 {
                let x = rat(m as i64);
                let y = frac(m as i64 * (m as i64 - 1), 2);
                let value = cof.evaluate(&x) * f.evaluate(&y);
                assert_eq!(
                    to_integer(&value).unwrap(),
                    power_sum_eval_brute(n, m),
                    "n = {n}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn odd_guard_rejects_bad_indices() {
        assert!(faulhaber_gv(4).is_err());
        assert!(faulhaber_triangular(2).is_err());
        assert!(faulhaber_chain(1).is_err());
        assert!(faulhaber_step_down(&faulhaber_by_substitution(4).unwrap()).is_err());
    }

    #[test]
    fn theta_recurrences_hold() {
        for n in 3..=18u32 {
            assert!(
                theta_recurrence_check(n).unwrap().is_zero(),
                "residual at n = {n}"
            );
        }
    }

    #[test]
    fn coefficient_relations_vanish() {
        for n in (5..=17u32).step_by(2) {
            for (l, r) in knuth_residuals(n).unwrap().iter().enumerate() {
                assert!(r.is_zero(), "n = {n}, l = {l}");
            }
        }
        // The n = 5 relation written out: C(2,1) f_0 + C(3,3)(1/2) f_1 = 0.
        let f = faulhaber_by_substitution(5).unwrap();
        assert_eq!(rat(2) * f.coeff(0) + frac(1, 2) * f.coeff(1), rat(0));
    }

    #[test]
    fn jacobi_rows() {
        // m = 5 encodes S_9 = (1/10)(u^4 ... ) with row 1, -5/2, 3, -3/2, 0.
        let row = jacobi_coeffs(5).unwrap();
        assert_eq!(
            row.a,
            vec![rat(1), frac(-5, 2), rat(3), frac(-3, 2), rat(0)]
        );
        assert_eq!(row.power_sum(), power_sum_poly(9));
        for m in 2..=9u32 {
            let row = jacobi_coeffs(m).unwrap();
            assert_eq!(row.power_sum(), power_sum_poly(2 * m - 1), "m = {m}");
        }
        assert!(jacobi_coeffs(1).is_err());
    }

    #[test]
    fn jacobi_vanishing_relations() {
        // sum_(j=0)^(k) C(m-j, 2k+1-2j) a_j = 0 for 1 <= k < m: the same
        // vanishing content as the coefficient relations, over a's.
        for m in 2..=8u32 {
            let row = jacobi_coeffs(m).unwrap();
            for k in 1..m as usize {
                let mut sum = Rational::zero();
                for (j, a) in row.a.iter().enumerate().take(k + 1) {
                    sum += Rational::from_integer(binomial(
                        m as i64 - j as i64,
                        (2 * k + 1 - 2 * j) as u32,
                    )) * a;
                }
                assert!(sum.is_zero(), "m = {m}, k = {k}");
            }
        }
    }

    #[test]
    fn schroeder_rows() {
        let row = schroeder_coeffs(1).unwrap();
        assert_eq!(row.beta, vec![rat(1)]);
        assert_eq!(row.gamma, vec![rat(1)]);
        let row2 = schroeder_coeffs(2).unwrap();
        assert_eq!(row2.beta, vec![rat(1), frac(1, 2)]);
        assert_eq!(row2.gamma, vec![rat(1), frac(1, 3)]);
        for m in 1..=8u32 {
            schroeder_coeffs(m).unwrap();
        }
    }

    #[test]
    fn schroeder_reconstructions() {
        for m in 1..=7u32 {
            let row = schroeder_coeffs(m).unwrap();
            assert_eq!(row.odd_power_sum(), power_sum_poly(2 * m + 1), "odd, m = {m}");
            assert_eq!(row.even_power_sum(), power_sum_poly(2 * m), "even, m = {m}");
        }
    }

    #[test]
    fn even_bernoulli_part_in_u() {
        // B_3(x) = (2x-1) * (1/2) x(x-1): bold row for n = 3 is u/2.
        assert_eq!(bold_f_poly(3).unwrap(), Poly::from_coeffs(vec![rat(0), frac(1, 2)]));
        // n = 7 from the classical table: (1/2)u^3 - (1/2)u^2 + (1/6)u.
        assert_eq!(
            bold_f_poly(7).unwrap(),
            Poly::from_coeffs(vec![rat(0), frac(1, 6), frac(-1, 2), frac(1, 2)])
        );
        for n in (3..=15u32).step_by(2) {
            bold_f_poly(n).unwrap();
        }
        assert!(bold_f_poly(4).is_err());
    }

    #[test]
    fn lifted_pair() {
        for n in (3..=15u32).step_by(2) {
            let (g_odd, g_even) = frak_f_pair(n).unwrap();
            assert_eq!(g_odd.derivative(), g_even.scale(&rat(n as i64)), "n = {n}");
        }
        let (g3, g2) = frak_f_pair(3).unwrap();
        assert_eq!(g3, Poly::monomial(rat(1), 2));
        assert_eq!(g2, Poly::monomial(frac(2, 3), 1));
    }

    #[test]
    fn rfold_factorization() {
        // Brute iterated sums as the oracle.
        fn brute(n: u32, r: u32, m: u64) -> Rational {
            if r == 0 {
                return crate::rational::int_pow(m as i64, n as i32);
            }
            (1..=m).map(|nu| brute(n, r - 1, nu)).sum()
        }
        for n in 1..=7u32 {
            for r in 1..=3u32 {
                let rf = rfold(n, r).unwrap();
                assert_eq!(rf.d, if n % 2 == 1 { 1 } else { 2 });
                for m in 0..=10u64 {
                    assert_eq!(
                        rf.poly.evaluate(&rat(m as i64)),
                        brute(n, r, m),
                        "value at n = {n}, r = {r}, m = {m}"
                    );
                }
                // Factorized form agrees with the full polynomial.
                let base = iterated_sum(rf.d, r);
                let quadratic =
                    Poly::from_coeffs(vec![rat(0), rat(r as i64), rat(1)]);
                let rebuilt = &rf.g.compose(&quadratic) * &base;
                assert_eq!(rebuilt, rf.poly, "factorization at n = {n}, r = {r}");
            }
        }
        assert!(rfold(0, 1).is_err());
        assert!(rfold(3, 0).is_err());
    }

    #[test]
    fn chain_rejects_corrupted_start() {
        // The chain is self-checking: feeding it an impossible target index
        // errors instead of fabricating output.
        assert!(faulhaber_chain(2).is_err());
    }
}
