//! Randomized structural properties of the exact-arithmetic layers.
//!
//! These don't pin specific classical values (the unit tests and the
//! acceptance suite do that); they pin the algebra itself: ring laws under
//! evaluation, division/rebase round trips, operator linearity, and exact
//! serialization, over arbitrary inputs.

use faulhaber::bernoulli::{power_sum_eval_brute, power_sum_poly};
use faulhaber::eval::{eval_power_sum, Strategy as EvalStrategy};
use faulhaber::faulhaber::{cofactor_poly, faulhaber_by_substitution};
use faulhaber::json;
use faulhaber::poly::{palindrome_class, rebase_quadratic, summation_operator};
use faulhaber::rational::{frac, rat, to_integer, Rational};
use faulhaber::series::TruncatedSeries;
use faulhaber::{LaurentPoly, PalindromeClass, Poly};
use num_traits::Zero;
use proptest::collection::vec;
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..60).prop_map(|(p, q)| frac(p, q))
}

fn arb_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    vec(arb_rational(), 0..max_len).prop_map(Poly::from_coeffs)
}

fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..6, vec(arb_rational(), 0..8)).prop_map(|(e, c)| LaurentPoly::new(e, c))
}

proptest! {
    #[test]
    fn rational_string_round_trip(r in arb_rational()) {
        let s = faulhaber::rational::to_string(&r);
        prop_assert_eq!(faulhaber::rational::parse(&s).unwrap(), r);
    }

    #[test]
    fn poly_ring_laws_under_evaluation(
        p in arb_poly(8),
        q in arb_poly(8),
        x in arb_rational(),
    ) {
        let sum = &p + &q;
        let prod = &p * &q;
        prop_assert_eq!(sum.evaluate(&x), p.evaluate(&x) + q.evaluate(&x));
        prop_assert_eq!(prod.evaluate(&x), p.evaluate(&x) * q.evaluate(&x));
        let diff = &p - &q;
        prop_assert_eq!(diff.evaluate(&x), p.evaluate(&x) - q.evaluate(&x));
    }

    #[test]
    fn composition_evaluates_inside_out(
        p in arb_poly(6),
        q in arb_poly(4),
        x in arb_rational(),
    ) {
        prop_assert_eq!(p.compose(&q).evaluate(&x), p.evaluate(&q.evaluate(&x)));
    }

    #[test]
    fn shift_is_composition_with_translation(
        p in arb_poly(7),
        c in arb_rational(),
        x in arb_rational(),
    ) {
        prop_assert_eq!(p.shift(&c).evaluate(&x), p.evaluate(&(&x + &c)));
    }

    #[test]
    fn division_reconstructs_dividend(p in arb_poly(9), d in arb_poly(5)) {
        prop_assume!(!d.is_zero());
        let (q, r) = p.divmod(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, p);
        if let Some(rd) = r.degree() {
            prop_assert!(rd < d.degree().unwrap());
        }
    }

    #[test]
    fn quadratic_rebase_round_trips(
        g in arb_poly(5),
        b in arb_rational(),
        c in arb_rational(),
    ) {
        // q = c + bx + x^2 keeps the leading coefficient nonzero.
        let q = Poly::from_coeffs(vec![c, b, rat(1)]);
        let composed = g.compose(&q);
        prop_assert_eq!(rebase_quadratic(&composed, &q).unwrap(), g);
    }

    #[test]
    fn theta_operator_is_linear(
        p in arb_poly(6),
        q in arb_poly(6),
        alpha in arb_rational(),
        a in arb_rational(),
    ) {
        let lhs = (&p.scale(&a) + &q).theta(&alpha);
        let rhs = &p.theta(&alpha).scale(&a) + &q.theta(&alpha);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn summation_operator_sums_values(p in arb_poly(5), m in 0i64..25) {
        let summed = summation_operator(&p);
        let direct: Rational = (1..=m).map(|nu| p.evaluate(&rat(nu))).sum();
        prop_assert_eq!(summed.evaluate(&rat(m)), direct);
    }

    #[test]
    fn forward_difference_telescopes(p in arb_poly(6), m in 0i64..20) {
        // sum_(nu=0)^(m-1) (p(nu+1) - p(nu)) = p(m) - p(0).
        let d = p.forward_difference();
        let total: Rational = (0..m).map(|nu| d.evaluate(&rat(nu))).sum();
        prop_assert_eq!(total, p.evaluate(&rat(m)) - p.evaluate(&rat(0)));
    }

    #[test]
    fn laurent_product_evaluates(a in arb_laurent(), b in arb_laurent(), x in arb_rational()) {
        prop_assume!(!x.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(
            prod.evaluate(&x).unwrap(),
            a.evaluate(&x).unwrap() * b.evaluate(&x).unwrap()
        );
    }

    #[test]
    fn laurent_reflection_is_involutive(a in arb_laurent()) {
        prop_assert_eq!(a.reflect().reflect(), a);
    }

    #[test]
    fn series_multiplication_truncates_consistently(
        p in arb_poly(6),
        q in arb_poly(6),
    ) {
        let order = 5usize;
        let sp = TruncatedSeries::from_poly(&p, order);
        let sq = TruncatedSeries::from_poly(&q, order);
        let direct = TruncatedSeries::from_poly(&(&p * &q), order);
        prop_assert_eq!(sp.mul(&sq), direct);
    }

    #[test]
    fn binomial_series_inverts(a in 1i64..8) {
        let order = 7usize;
        let pos = TruncatedSeries::binomial_series(a, order);
        let neg = TruncatedSeries::binomial_series(-a, order);
        let one = TruncatedSeries::from_poly(&Poly::one(), order);
        prop_assert_eq!(pos.mul(&neg), one);
    }

    #[test]
    fn palindromes_classify_by_construction(
        half in vec((-50i64..50, 1i64..20), 1..4),
        anti in any::<bool>(),
    ) {
        // p(x) +- x^n p(1/x) built from an arbitrary half.
        let coeffs: Vec<Rational> = half.iter().map(|&(p, q)| frac(p, q)).collect();
        let len = 2 * coeffs.len();
        let n = len - 1;
        let mut full = vec![Rational::zero(); len];
        for (i, c) in coeffs.iter().enumerate() {
            full[i] = c.clone();
            full[n - i] = if anti { -c } else { c.clone() };
        }
        let p = Poly::from_coeffs(full);
        prop_assume!(!p.is_zero());
        let class = palindrome_class(&p, n).unwrap();
        if anti {
            prop_assert_eq!(class, PalindromeClass::AntiPalindromic);
        } else {
            prop_assert_eq!(class, PalindromeClass::Palindromic);
        }
    }

    #[test]
    fn power_sum_polynomial_matches_brute(n in 0u32..14, m in 0u64..40) {
        let s = power_sum_poly(n);
        prop_assert_eq!(
            to_integer(&s.evaluate(&rat(m as i64))).unwrap(),
            power_sum_eval_brute(n, m)
        );
    }

    #[test]
    fn faulhaber_factorization_at_integers(n in 2u32..24, m in 0i64..60) {
        let f = faulhaber_by_substitution(n).unwrap();
        let value = cofactor_poly(n).evaluate(&rat(m))
            * f.evaluate(&frac(m * (m - 1), 2));
        prop_assert_eq!(
            to_integer(&value).unwrap(),
            power_sum_eval_brute(n, m as u64)
        );
    }

    #[test]
    fn strategies_agree(n in 0u32..12, m in 0u64..200) {
        let bern = eval_power_sum(EvalStrategy::Bernoulli, n, m).unwrap();
        let naive = eval_power_sum(EvalStrategy::Naive, n, m).unwrap();
        prop_assert_eq!(&bern.value, &naive.value);
        if EvalStrategy::Faulhaber.supports(n) {
            let f = eval_power_sum(EvalStrategy::Faulhaber, n, m).unwrap();
            prop_assert_eq!(&f.value, &naive.value);
        }
        if EvalStrategy::Omega.supports(n) {
            let o = eval_power_sum(EvalStrategy::Omega, n, m).unwrap();
            prop_assert_eq!(&o.value, &naive.value);
        }
    }

    #[test]
    fn json_round_trips(p in arb_poly(8), l in arb_laurent(), r in arb_rational()) {
        prop_assert_eq!(json::poly_from_json(&json::poly_to_json(&p)).unwrap(), p);
        prop_assert_eq!(json::laurent_from_json(&json::laurent_to_json(&l)).unwrap(), l);
        prop_assert_eq!(json::rational_from_json(&json::rational_to_json(&r)).unwrap(), r);
    }

    #[test]
    fn faulhaber_json_round_trips(n in 2u32..20) {
        let f = faulhaber_by_substitution(n).unwrap();
        prop_assert_eq!(json::faulhaber_from_json(&json::faulhaber_to_json(&f)).unwrap(), f);
    }
}
