//! Bernoulli polynomials and exact power-sum polynomials.
//!
//! The central objects are `S_n(x)` with `S_n(m) = 0^n + 1^n + ... + (m-1)^n`
//! and its shifted companion summing `1^n .. m^n`.  Everything is verified
//! against `power_sum_eval_brute`, which adds the powers up directly and is
//! deliberately independent of any polynomial identity.
//!
//! The module also houses the classical symmetry apparatus around `B_n(x)`:
//! the multiplication theorem, the expansion around `x = 1/2` in even powers,
//! the rewriting of odd power sums in the square `(2x-1)^2`, and the
//! reduction of powers of triangular numbers to single power sums.

use crate::error::{Error, Result};
use crate::poly::{rebase_in, Poly, SubstitutionBasis};
use crate::rational::{frac, pow2, rat, Int, Rational};
use crate::sequences::{bernoulli_half, bernoulli_number, binomial};
use num_traits::{One, Zero};

/// Bernoulli polynomial `B_n(x) = sum_k C(n,k) B_(n-k) x^k`.
pub fn bernoulli_poly(n: u32) -> Poly {
    let coeffs = (0..=n)
        .map(|k| Rational::from_integer(binomial(n as i64, n - k)) * bernoulli_number(n - k))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// Power-sum polynomial: `S_n(m) = sum of nu^n for nu = 0..m-1`, obtained
/// from `(B_(n+1)(x) - B_(n+1)) / (n+1)`.
pub fn power_sum_poly(n: u32) -> Poly {
    let b = bernoulli_poly(n + 1);
    let c = Poly::constant(bernoulli_number(n + 1));
    (&b - &c).scale(&(rat(1) / rat(n as i64 + 1)))
}

/// Direct summation `sum of nu^n for nu = 0..m-1` over big integers.  This is
/// the independent oracle for every polynomial identity in the crate (note
/// `0^0 = 1`, so the n = 0 sum counts the terms).
pub fn power_sum_eval_brute(n: u32, m: u64) -> Int {
    let mut acc = Int::zero();
    for nu in 0..m {
        if nu == 0 {
            if n == 0 {
                acc += 1;
            }
            continue;
        }
        acc += Int::from(nu).pow(n);
    }
    acc
}

/// Inclusive power sum `sum of nu^n for nu = 1..=m` as a polynomial in `m`;
/// equals `S_n(x+1)` for `n >= 1`.
pub fn power_sum_inclusive(n: u32) -> Poly {
    assert!(n >= 1, "the inclusive sum of 0th powers is x, not S_0(x+1)");
    power_sum_poly(n).shift(&Rational::one())
}

/// `B_n(x) + (n/2) x^(n-1)`: adding the spike cancels the lone odd
/// coefficient of `B_n`, leaving `sum over even nu of C(n,nu) B_nu x^(n-nu)`,
/// which has the parity of `x^n`: `p(-x) = (-1)^n p(x)`.
pub fn b_diamond(n: u32) -> Poly {
    assert!(n >= 1);
    let spike = Poly::monomial(frac(n as i64, 2), n as usize - 1);
    &bernoulli_poly(n) + &spike
}

/// `k^(1-n) B_n(kx) - B_n(x)`, verified against its additive form
/// `sum of B_n(x + nu/k) for nu = 1..k-1` (the multiplication theorem).
pub fn b_hat(n: u32, k: u32) -> Result<Poly> {
    if k == 0 {
        return Err(Error::Domain("multiplication index k must be positive".into()));
    }
    let bn = bernoulli_poly(n);
    let scaled = bn.compose(&Poly::monomial(rat(k as i64), 1));
    let lhs = &scaled.scale(&crate::rational::int_pow(k as i64, 1 - n as i32)) - &bn;
    let mut rhs = Poly::zero();
    for nu in 1..k {
        rhs = &rhs + &bn.shift(&frac(nu as i64, k as i64));
    }
    if lhs != rhs {
        return Err(Error::RaabeViolation { n, k });
    }
    Ok(lhs)
}

/// Expansion of `B_n(x)` in powers of `(x - 1/2)`: only even shifts appear,
/// with coefficients `C(n, nu) B_nu(1/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfExpansion {
    pub n: u32,
    /// Entry `j` is the coefficient of `(x - 1/2)^(n - 2j)`.
    pub coeffs: Vec<Rational>,
}

impl HalfExpansion {
    /// Expands the stored even-shift terms back into an ordinary polynomial.
    pub fn reconstruct(&self) -> Poly {
        let base = Poly::from_coeffs(vec![frac(-1, 2), rat(1)]); // x - 1/2
        let mut out = Poly::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = self.n as usize - 2 * j;
            out = &out + &base.pow(e as u32).scale(c);
        }
        out
    }
}

/// Computes the even-power expansion of `B_n` around `x = 1/2`.
pub fn half_expansion(n: u32) -> HalfExpansion {
    let coeffs = (0..=n / 2)
        .map(|j| {
            let nu = 2 * j;
            Rational::from_integer(binomial(n as i64, nu)) * bernoulli_half(nu)
        })
        .collect();
    HalfExpansion { n, coeffs }
}

/// For odd `n`, rewrites `S_n(x)` as a polynomial in `omega = (2x - 1)^2`.
/// Even `n` is rejected: those power sums carry an odd factor `(x - 1/2)`
/// that no polynomial in `omega` can produce.
pub fn omega_form(n: u32) -> Result<Poly> {
    if n % 2 == 0 || n < 3 {
        return Err(Error::Domain(format!(
            "omega form requires odd n >= 3, got {n}"
        )));
    }
    rebase_in(&power_sum_poly(n), SubstitutionBasis::Omega)
}

/// Residual of the reduction of the l-th power of the triangular-number
/// polynomial to a combination of single power sums:
/// `S_1(x)^l - 2^(1-l) * sum over odd nu <= l of C(l, nu) S_(2l-nu)(x)`.
/// Zero for every `l >= 1`.
pub fn stern_check(l: u32) -> Poly {
    assert!(l >= 1);
    let s1 = power_sum_poly(1);
    let lhs = s1.pow(l);
    let mut rhs = Poly::zero();
    for nu in (1..=l).step_by(2) {
        let c = Rational::from_integer(binomial(l as i64, nu));
        rhs = &rhs + &power_sum_poly(2 * l - nu).scale(&c);
    }
    &lhs - &rhs.scale(&pow2(1 - l as i32))
}
