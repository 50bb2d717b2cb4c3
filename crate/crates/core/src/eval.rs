//! Evaluation strategies for power sums over big integers.
//!
//! All strategies compute the inclusive sum `1^n + 2^n + ... + m^n` exactly;
//! they differ in how much arithmetic they need.  `Naive` adds `m` powers,
//! the polynomial strategies evaluate a fixed-degree polynomial.  Every
//! strategy reports the number of big-number multiplications it performed,
//! so the asymptotic gap is observable, and the dispatcher can run several
//! strategies and insist on identical integers.

use crate::bernoulli::power_sum_poly;
use crate::error::{Error, Result};
use crate::faulhaber::{cofactor_poly, faulhaber_by_substitution};
use crate::poly::{int_pow_counted, Poly, SubstitutionBasis};
use crate::rational::{frac, rat, to_integer, Int, Rational};
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Direct summation: `m` exponentiations.
    Naive,
    /// Evaluate `S_n(m + 1)` where `S_n` comes from Bernoulli polynomials.
    Bernoulli,
    /// Evaluate the factored form `f_n(x) * F_n(x(x-1)/2)` at `x = m + 1`.
    Faulhaber,
    /// For odd n >= 3, evaluate the expansion in `omega = (2x - 1)^2` at
    /// `x = m + 1`, i.e. at `omega = (2m + 1)^2`.
    Omega,
}

impl Strategy {
    pub const ALL: [Strategy; 4] =
        [Strategy::Naive, Strategy::Bernoulli, Strategy::Faulhaber, Strategy::Omega];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Naive => "naive",
            Strategy::Bernoulli => "bernoulli",
            Strategy::Faulhaber => "faulhaber",
            Strategy::Omega => "omega",
        }
    }

    pub fn parse(s: &str) -> Result<Strategy> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown strategy `{s}`")))
    }

    /// Whether this strategy can evaluate exponent n at all.
    pub fn supports(self, n: u32) -> bool {
        match self {
            Strategy::Naive | Strategy::Bernoulli => true,
            Strategy::Faulhaber => n >= 2,
            Strategy::Omega => n >= 3 && n % 2 == 1,
        }
    }
}

/// The outcome of one evaluation: the exact integer value and how many
/// big-number multiplications the strategy spent producing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalReport {
    pub strategy: Strategy,
    pub n: u32,
    pub m: u64,
    pub value: Int,
    pub multiplications: usize,
}

/// Computes `1^n + ... + m^n` with the requested strategy.
pub fn eval_power_sum(strategy: Strategy, n: u32, m: u64) -> Result<EvalReport> {
    if !strategy.supports(n) {
        return Err(Error::Domain(format!(
            "strategy `{}` does not apply to exponent {n}",
            strategy.name()
        )));
    }
    let (value, multiplications) = match strategy {
        Strategy::Naive => {
            let mut acc = Int::zero();
            let mut mults = 0usize;
            for nu in 1..=m {
                let (p, c) = int_pow_counted(&Int::from(nu), n);
                acc += p;
                mults += c;
            }
            (acc, mults)
        }
        Strategy::Bernoulli => {
            // Inclusive sums shift the exclusive polynomial by one, except at
            // n = 0 where the inclusive sum is exactly m.
            let (poly, x) = if n == 0 {
                (Poly::x(), rat(m as i64))
            } else {
                (power_sum_poly(n), rat(m as i64) + Rational::one())
            };
            let (v, mults) = poly.evaluate_counted(&x);
            (expect_integer(v)?, mults)
        }
        Strategy::Faulhaber => {
            let f = faulhaber_by_substitution(n)?;
            let x = rat(m as i64) + Rational::one();
            let y = frac((m as i64 + 1) * m as i64, 2);
            let (cof, c1) = cofactor_poly(n).evaluate_counted(&x);
            let (fy, c2) = f.as_poly().evaluate_counted(&y);
            // One more multiplication joins the two factors.
            (expect_integer(cof * fy)?, c1 + c2 + 1)
        }
        Strategy::Omega => {
            let w = crate::bernoulli::omega_form(n)?;
            // omega(m + 1) = (2m + 1)^2: one multiplication to square.
            let omega = rat(2 * m as i64 + 1) * rat(2 * m as i64 + 1);
            let (v, mults) = w.evaluate_counted(&omega);
            (expect_integer(v)?, mults + 1)
        }
    };
    Ok(EvalReport { strategy, n, m, value, multiplications })
}

fn expect_integer(v: Rational) -> Result<Int> {
    to_integer(&v)
}

/// Runs the requested strategy, then every other strategy that supports the
/// exponent (skipping `Naive` when `m` exceeds `naive_limit`), and insists
/// that all computed integers are identical.  Returns the reports, requested
/// strategy first.
pub fn eval_cross_checked(
    strategy: Strategy,
    n: u32,
    m: u64,
    naive_limit: u64,
) -> Result<Vec<EvalReport>> {
    let first = eval_power_sum(strategy, n, m)?;
    let mut reports = vec![first];
    for other in Strategy::ALL {
        if other == strategy || !other.supports(n) {
            continue;
        }
        if other == Strategy::Naive && m > naive_limit {
            continue;
        }
        let r = eval_power_sum(other, n, m)?;
        if r.value != reports[0].value {
            return Err(Error::Domain(format!(
                "strategies `{}` and `{}` disagree at n = {n}, m = {m}: {} vs {}",
                reports[0].strategy.name(),
                r.strategy.name(),
                reports[0].value,
                r.value
            )));
        }
        reports.push(r);
    }
    Ok(reports)
}

/// Evaluates the quadratic `x(x-1)/2`, `x(x-1)`, `-x(x-1)` or `(2x-1)^2`
/// at an integer point, exactly.
pub fn quadratic_point(basis: SubstitutionBasis, m: i64) -> Rational {
    basis.quadratic().evaluate(&rat(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::power_sum_eval_brute;

    #[test]
    fn strategies_agree_with_brute_force() {
        for n in 0..=9u32 {
            for m in [0u64, 1, 2, 7, 30] {
                // The exclusive oracle counts an extra 0^0 = 1 term at n = 0.
                let mut want = power_sum_eval_brute(n, m + 1);
                if n == 0 {
                    want -= 1;
                }
                for st in Strategy::ALL {
                    if !st.supports(n) {
                        continue;
                    }
                    let r = eval_power_sum(st, n, m).unwrap();
                    assert_eq!(r.value, want, "{} at n = {n}, m = {m}", st.name());
                }
            }
        }
    }

    #[test]
    fn cross_check_runs_all_applicable() {
        let reports = eval_cross_checked(Strategy::Faulhaber, 9, 100, 1000).unwrap();
        assert_eq!(reports.len(), 4);
        assert_eq!(reports[0].strategy, Strategy::Faulhaber);
        assert!(reports.windows(2).all(|w| w[0].value == w[1].value));
        // Above the naive limit the brute strategy is skipped.
        let reports = eval_cross_checked(Strategy::Faulhaber, 9, 100, 10).unwrap();
        assert_eq!(reports.len(), 3);
        assert!(reports.iter().all(|r| r.strategy != Strategy::Naive));
    }

    #[test]
    fn polynomial_strategies_use_fewer_multiplications() {
        let naive = eval_power_sum(Strategy::Naive, 11, 500).unwrap();
        let fau = eval_power_sum(Strategy::Faulhaber, 11, 500).unwrap();
        let om = eval_power_sum(Strategy::Omega, 11, 500).unwrap();
        assert_eq!(naive.value, fau.value);
        assert!(fau.multiplications < naive.multiplications / 10);
        assert!(om.multiplications <= fau.multiplications);
    }

    #[test]
    fn unsupported_strategies_error() {
        assert!(eval_power_sum(Strategy::Omega, 8, 10).is_err());
        assert!(eval_power_sum(Strategy::Faulhaber, 1, 10).is_err());
        assert!(Strategy::parse("fast").is_err());
        assert_eq!(Strategy::parse("omega").unwrap(), Strategy::Omega);
    }

    #[test]
    fn quadratic_points() {
        assert_eq!(quadratic_point(SubstitutionBasis::Y, 5), rat(10));
        assert_eq!(quadratic_point(SubstitutionBasis::U, 5), rat(20));
        assert_eq!(quadratic_point(SubstitutionBasis::Xi, 5), rat(-20));
        assert_eq!(quadratic_point(SubstitutionBasis::Omega, 5), rat(81));
    }
}
