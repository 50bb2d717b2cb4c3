//! Command-line interface to the exact Faulhaber/Bernoulli library.
//!
//! Subcommands:
//! - `bernoulli <n>`: the number B_n, or with `--poly` the polynomial B_n(x);
//! - `faulhaber <n>`: the polynomial F_n with S_n(x) = f_n(x) F_n(x(x-1)/2),
//!   by any of the independent construction methods, or the power sum
//!   rewritten over the quadratics x(x-1) / -x(x-1);
//! - `powersum <n> <m>`: the exact integer 1^n + ... + m^n, cross-checked
//!   across every applicable strategy;
//! - `rfold <n> <r>`: the r-fold iterated power sum and its factorization
//!   through x(x+r);
//! - `verify`: run identity suites, exit 0 only if every check holds;
//! - `bench <n> <m>`: wall time and multiplication counts per strategy.
//!
//! All output is exact; rationals print as `p/q`.  The `latex` format
//! factors the common denominator out of a polynomial.  The environment
//! variable `FAULHABER_NAIVE_LIMIT` (default 10^7) caps the term count the
//! naive strategy may attempt.

use clap::{Parser, Subcommand, ValueEnum};
use faulhaber::bernoulli::{
    b_hat, bernoulli_poly, half_expansion, power_sum_eval_brute, power_sum_poly, stern_check,
};
use faulhaber::eval::{eval_cross_checked, eval_power_sum, EvalReport, Strategy};
use faulhaber::faulhaber::{
    faulhaber_by_substitution, faulhaber_chain, faulhaber_gv, faulhaber_step_down,
    faulhaber_triangular, frak_f_pair, jacobi_coeffs, knuth_residuals, rfold, schroeder_coeffs,
    theta_recurrence_check, FaulhaberPoly,
};
use faulhaber::json;
use faulhaber::poly::rebase_in;
use faulhaber::rational::{frac, rat, to_string as rational_str, Int, Rational};
use faulhaber::reciprocal::{
    b_frak_numbers, b_small, bridge_to_faulhaber, central_coeffs, recip_reflect_check,
    reciprocity_check, zero_sum_checks,
};
use faulhaber::sequences::bernoulli_number;
use faulhaber::{Poly, SubstitutionBasis};
use num_traits::{Signed, Zero};
use serde_json::json;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "faulhaber",
    version,
    about = "Exact Bernoulli numbers, power sums and Faulhaber polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Bernoulli number B_n (or the polynomial B_n(x))
    Bernoulli {
        n: u32,
        /// Print the polynomial B_n(x) instead of the number B_n
        #[arg(long)]
        poly: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the Faulhaber polynomial F_n, or S_n over another quadratic
    Faulhaber {
        n: u32,
        /// Construction to use; `auto` runs all applicable ones and insists
        /// they agree
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        /// Quadratic to express the result in: `y` prints F_n itself,
        /// `u` / `xi` print the power sum over x(x-1) / -x(x-1)
        #[arg(long, value_enum, default_value = "y")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exact power sum 1^n + 2^n + ... + m^n
    Powersum {
        n: u32,
        m: u64,
        /// Strategy to report; every other applicable strategy still runs
        /// and must produce the same integer
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
    },
    /// r-fold iterated power sum and its factorization through x(x+r)
    Rfold {
        n: u32,
        r: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run identity suites; exits 0 only if every check holds
    Verify {
        /// all, recurrences, symmetry, zero-sums, stern, rfold or historical
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Compare evaluation strategies on one power sum
    Bench { n: u32, m: u64 },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Substitution,
    ClosedForm,
    Triangular,
    Chain,
    Bridge,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Y,
    U,
    Xi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Auto,
    Naive,
    Bernoulli,
    Faulhaber,
    Omega,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Bernoulli { n, poly, format } => {
            cmd_bernoulli(n, poly, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Faulhaber { n, method, basis, format } => {
            cmd_faulhaber(n, method, basis, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Powersum { n, m, strategy } => {
            cmd_powersum(n, m, strategy)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Rfold { n, r, format } => {
            cmd_rfold(n, r, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => cmd_verify(&suite),
        Command::Bench { n, m } => {
            cmd_bench(n, m)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

// ---------------------------------------------------------------- rendering

/// Renders a polynomial with the common denominator factored out:
/// `\frac{1}{105}\left(960y^5 - 2800y^4 + ...\right)`.
fn poly_to_latex(p: &Poly, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut denom = Int::from(1);
    for c in p.coeffs() {
        denom = num_integer::lcm(denom, c.denom().clone());
    }
    let scaled: Vec<Int> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(denom.clone())).to_integer())
        .collect();
    let mut body = String::new();
    for (k, c) in scaled.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if body.is_empty() {
            if c.is_negative() {
                body.push('-');
            }
        } else if c.is_negative() {
            body.push_str(" - ");
        } else {
            body.push_str(" + ");
        }
        let coeff_part = if mag == Int::from(1) && k > 0 {
            String::new()
        } else {
            mag.to_string()
        };
        let var_part = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{{{k}}}"),
        };
        body.push_str(&coeff_part);
        body.push_str(&var_part);
    }
    if denom == Int::from(1) {
        body
    } else {
        format!("\\frac{{1}}{{{denom}}}\\left({body}\\right)")
    }
}

fn rational_to_latex(r: &Rational) -> String {
    if r.denom() == &Int::from(1) {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

fn poly_to_csv(p: &Poly) -> String {
    let mut out = String::from("power,coefficient\n");
    for (k, c) in p.coeffs().iter().enumerate() {
        out.push_str(&format!("{k},{}\n", rational_str(c)));
    }
    out
}

// ------------------------------------------------------------- subcommands

fn cmd_bernoulli(n: u32, poly: bool, format: Format) {
    if poly {
        let b = bernoulli_poly(n);
        match format {
            Format::Json => println!(
                "{}",
                json!({ "n": n, "variable": "x", "coeffs": json::poly_to_json(&b) })
            ),
            Format::Csv => print!("{}", poly_to_csv(&b)),
            Format::Latex => println!("B_{{{n}}}(x) = {}", poly_to_latex(&b, "x")),
        }
    } else {
        let b = bernoulli_number(n);
        match format {
            Format::Json => println!("{}", json!({ "n": n, "value": rational_str(&b) })),
            Format::Csv => println!("n,value\n{n},{}", rational_str(&b)),
            Format::Latex => println!("B_{{{n}}} = {}", rational_to_latex(&b)),
        }
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Auto => "auto",
        Method::Substitution => "substitution",
        Method::ClosedForm => "closed-form",
        Method::Triangular => "triangular",
        Method::Chain => "chain",
        Method::Bridge => "bridge",
    }
}

fn build_faulhaber(n: u32, method: Method) -> Result<FaulhaberPoly, String> {
    let build = |m: Method| -> faulhaber::Result<FaulhaberPoly> {
        match m {
            Method::Auto => unreachable!("auto is expanded by the caller"),
            Method::Substitution => faulhaber_by_substitution(n),
            Method::ClosedForm => faulhaber_gv(n),
            Method::Triangular => faulhaber_triangular(n),
            Method::Chain => faulhaber_chain(n),
            Method::Bridge => bridge_to_faulhaber(n),
        }
    };
    if method != Method::Auto {
        return build(method).map_err(|e| e.to_string());
    }
    // Auto: run everything that applies to this index and insist on one
    // answer.
    let reference = faulhaber_by_substitution(n).map_err(|e| e.to_string())?;
    if n % 2 == 1 {
        for m in [Method::ClosedForm, Method::Triangular, Method::Chain, Method::Bridge] {
            let other = build(m).map_err(|e| e.to_string())?;
            if other != reference {
                return Err(format!(
                    "construction `{}` disagrees with `substitution` at n = {n}",
                    method_name(m)
                ));
            }
        }
    } else {
        // Even indices have a second route: step down from n + 1.
        let above = faulhaber_by_substitution(n + 1).map_err(|e| e.to_string())?;
        let stepped = faulhaber_step_down(&above).map_err(|e| e.to_string())?;
        if stepped != reference {
            return Err(format!(
                "step-down from n = {} disagrees with `substitution` at n = {n}",
                n + 1
            ));
        }
    }
    Ok(reference)
}

fn cmd_faulhaber(n: u32, method: Method, basis: BasisArg, format: Format) -> Result<(), String> {
    match basis {
        BasisArg::Y => {
            let f = build_faulhaber(n, method)?;
            f.check_invariants().map_err(|e| e.to_string())?;
            let poly = f.as_poly();
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "n": n,
                        "variable": "y",
                        "quadratic": "x(x-1)/2",
                        "cofactor": if n % 2 == 0 { "S_2(x)" } else { "S_1(x)^2" },
                        "method": method_name(method),
                        "coeffs": json::poly_to_json(&poly),
                    })
                ),
                Format::Csv => print!("{}", poly_to_csv(&poly)),
                Format::Latex => {
                    println!("F_{{{n}}}(y) = {}", poly_to_latex(&poly, "y"));
                }
            }
        }
        BasisArg::U | BasisArg::Xi => {
            if method != Method::Auto {
                return Err("basis forms are method-independent; drop --method".into());
            }
            let (basis_enum, var, quadratic) = match basis {
                BasisArg::U => (SubstitutionBasis::U, "u", "x(x-1)"),
                BasisArg::Xi => (SubstitutionBasis::Xi, "\\xi", "-x(x-1)"),
                BasisArg::Y => unreachable!(),
            };
            let s = power_sum_poly(n);
            // Even exponents carry the odd factor (x - 1/2); take it out
            // before rewriting in the quadratic.
            let (reduced, envelope) = if n % 2 == 0 && n >= 2 {
                let env = Poly::from_coeffs(vec![frac(-1, 2), rat(1)]);
                (
                    s.exact_divide(&env).map_err(|e| e.to_string())?,
                    Some("x - 1/2"),
                )
            } else {
                (s, None)
            };
            let p = rebase_in(&reduced, basis_enum).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "n": n,
                        "variable": if basis == BasisArg::U { "u" } else { "xi" },
                        "quadratic": quadratic,
                        "envelope": envelope,
                        "coeffs": json::poly_to_json(&p),
                    })
                ),
                Format::Csv => print!("{}", poly_to_csv(&p)),
                Format::Latex => {
                    let env = envelope.map(|_| "\\left(x - \\tfrac{1}{2}\\right)").unwrap_or("");
                    println!("S_{{{n}}}(x) = {env}{}", poly_to_latex(&p, var));
                }
            }
        }
    }
    Ok(())
}

fn naive_limit() -> u64 {
    std::env::var("FAULHABER_NAIVE_LIMIT")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(10_000_000)
}

fn cmd_powersum(n: u32, m: u64, strategy: StrategyArg) -> Result<(), String> {
    let limit = naive_limit();
    let requested = match strategy {
        StrategyArg::Auto => {
            if Strategy::Faulhaber.supports(n) {
                Strategy::Faulhaber
            } else {
                Strategy::Bernoulli
            }
        }
        StrategyArg::Naive => Strategy::Naive,
        StrategyArg::Bernoulli => Strategy::Bernoulli,
        StrategyArg::Faulhaber => Strategy::Faulhaber,
        StrategyArg::Omega => Strategy::Omega,
    };
    if requested == Strategy::Naive && m > limit {
        return Err(format!(
            "naive summation of {m} terms exceeds FAULHABER_NAIVE_LIMIT = {limit}"
        ));
    }
    let reports = eval_cross_checked(requested, n, m, limit).map_err(|e| e.to_string())?;
    let checked: Vec<&str> = reports.iter().map(|r| r.strategy.name()).collect();
    println!(
        "{}",
        json!({
            "n": n,
            "m": m,
            "value": reports[0].value.to_string(),
            "strategy": reports[0].strategy.name(),
            "cross_checked": checked,
        })
    );
    Ok(())
}

fn cmd_rfold(n: u32, r: u32, format: Format) -> Result<(), String> {
    let rf = rfold(n, r).map_err(|e| e.to_string())?;
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "n": n,
                "r": r,
                "reduced_exponent": rf.d,
                "poly": json::poly_to_json(&rf.poly),
                "quotient": json::poly_to_json(&rf.g),
                "quotient_variable": format!("x(x+{r})"),
            })
        ),
        Format::Csv => print!("{}", poly_to_csv(&rf.poly)),
        Format::Latex => println!(
            "S^{{({r})}}_{{{n}}}(x) = {}", poly_to_latex(&rf.poly, "x")
        ),
    }
    Ok(())
}

fn cmd_bench(n: u32, m: u64) -> Result<(), String> {
    let limit = naive_limit();
    let mut reports: Vec<(EvalReport, f64)> = Vec::new();
    for st in Strategy::ALL {
        if !st.supports(n) {
            continue;
        }
        if st == Strategy::Naive && m > limit {
            println!(
                "{:<10} skipped ({m} terms exceed FAULHABER_NAIVE_LIMIT = {limit})",
                st.name()
            );
            continue;
        }
        let start = Instant::now();
        let r = eval_power_sum(st, n, m).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        reports.push((r, elapsed));
    }
    let first = reports
        .first()
        .ok_or_else(|| "no strategy applies".to_string())?
        .0
        .value
        .clone();
    for (r, ms) in &reports {
        if r.value != first {
            return Err(format!(
                "strategy `{}` disagrees at n = {n}, m = {m}",
                r.strategy.name()
            ));
        }
        println!(
            "{:<10} {:>10.3} ms {:>8} multiplications",
            r.strategy.name(),
            ms,
            r.multiplications
        );
    }
    let digits = first.to_string().len();
    println!("all values identical ({digits} decimal digits)");
    Ok(())
}

// ------------------------------------------------------------------ verify

struct SuiteResult {
    checks: usize,
    failure: Option<String>,
}

fn run_suite(f: impl Fn() -> Result<usize, String>) -> SuiteResult {
    match f() {
        Ok(checks) => SuiteResult { checks, failure: None },
        Err(e) => SuiteResult { checks: 0, failure: Some(e) },
    }
}

fn ensure(cond: bool, msg: impl Fn() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite_recurrences() -> Result<usize, String> {
    let mut checks = 0;
    for n in (3..=31u32).step_by(2) {
        let a = faulhaber_by_substitution(n).map_err(|e| e.to_string())?;
        for (other, f) in [
            ("closed-form", faulhaber_gv(n)),
            ("triangular", faulhaber_triangular(n)),
            ("chain", faulhaber_chain(n)),
            ("bridge", bridge_to_faulhaber(n)),
        ] {
            let f = f.map_err(|e| e.to_string())?;
            ensure(f == a, || format!("{other} disagrees at n = {n}"))?;
            checks += 1;
        }
        let even = faulhaber_step_down(&a).map_err(|e| e.to_string())?;
        ensure(
            even == faulhaber_by_substitution(n - 1).map_err(|e| e.to_string())?,
            || format!("step-down disagrees at n = {n}"),
        )?;
        checks += 1;
    }
    for n in 3..=20u32 {
        let residual = theta_recurrence_check(n).map_err(|e| e.to_string())?;
        ensure(residual.is_zero(), || format!("theta residual nonzero at n = {n}"))?;
        checks += 1;
    }
    for m in 2..=8u32 {
        jacobi_coeffs(m).map_err(|e| e.to_string())?;
        schroeder_coeffs(m).map_err(|e| e.to_string())?;
        checks += 2;
    }
    Ok(checks)
}

fn suite_symmetry() -> Result<usize, String> {
    let mut checks = 0;
    for n in 0..=16u32 {
        b_frak_numbers(n).map_err(|e| e.to_string())?; // all row checks inside
        checks += 1;
        let h = half_expansion(n);
        ensure(h.reconstruct() == bernoulli_poly(n), || {
            format!("half-shift expansion fails at n = {n}")
        })?;
        checks += 1;
        for k in 1..=4u32 {
            b_hat(n, k).map_err(|e| e.to_string())?; // multiplication theorem
            checks += 1;
        }
    }
    for n in 1..=10u32 {
        for k in -3..=8i64 {
            ensure(recip_reflect_check(n, k).is_zero(), || {
                format!("reciprocal reflection fails at n = {n}, k = {k}")
            })?;
            checks += 1;
        }
    }
    for r in 0..=8u32 {
        for s in 0..=8u32 {
            ensure(reciprocity_check(r, s).is_zero(), || {
                format!("reciprocity fails at r = {r}, s = {s}")
            })?;
            checks += 1;
        }
    }
    for n in (3..=13u32).step_by(2) {
        frak_f_pair(n).map_err(|e| e.to_string())?; // derivative pair rule
        checks += 1;
    }
    Ok(checks)
}

fn suite_zero_sums() -> Result<usize, String> {
    let mut checks = 0;
    for n in (1..=19u32).step_by(2) {
        for (i, (a, b)) in zero_sum_checks(n)
            .map_err(|e| e.to_string())?
            .iter()
            .enumerate()
        {
            ensure(a.is_zero() && b.is_zero(), || {
                format!("upper-half sum nonzero at n = {n}, offset {i}")
            })?;
            checks += 1;
        }
    }
    for n in (5..=17u32).step_by(2) {
        for (l, r) in knuth_residuals(n)
            .map_err(|e| e.to_string())?
            .iter()
            .enumerate()
        {
            ensure(r.is_zero(), || {
                format!("coefficient relation nonzero at n = {n}, l = {l}")
            })?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn suite_stern() -> Result<usize, String> {
    let mut checks = 0;
    for l in 1..=10u32 {
        ensure(stern_check(l).is_zero(), || {
            format!("triangular-power reduction fails at l = {l}")
        })?;
        checks += 1;
    }
    Ok(checks)
}

fn suite_rfold() -> Result<usize, String> {
    fn brute(n: u32, r: u32, m: i64) -> Rational {
        if r == 0 {
            return faulhaber::rational::int_pow(m, n as i32);
        }
        (1..=m).map(|nu| brute(n, r - 1, nu)).sum()
    }
    let mut checks = 0;
    for n in 1..=8u32 {
        for r in 1..=3u32 {
            let rf = rfold(n, r).map_err(|e| e.to_string())?;
            for m in 0..=5i64 {
                ensure(rf.poly.evaluate(&rat(m)) == brute(n, r, m), || {
                    format!("iterated sum value differs at n = {n}, r = {r}, m = {m}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(checks)
}

fn suite_historical() -> Result<usize, String> {
    let mut checks = 0;
    // Spot values from the classical tables.
    let fixtures: &[(u32, usize, i64, i64)] = &[
        // (n, k, numer, denom) of F_n coefficient k
        (12, 0, -691, 455),
        (12, 5, 3360, 455),
        (13, 2, -4720, 105),
        (9, 3, 16, 5),
        (17, 7, 512, 18),
    ];
    for &(n, k, p, q) in fixtures {
        let f = faulhaber_by_substitution(n).map_err(|e| e.to_string())?;
        ensure(f.coeff(k) == frac(p, q), || {
            format!("F_{n} coefficient {k} is not {p}/{q}")
        })?;
        checks += 1;
    }
    ensure(bernoulli_number(12) == frac(-691, 2730), || {
        "B_12 is not -691/2730".to_string()
    })?;
    checks += 1;
    ensure(
        b_small(6, 6).map_err(|e| e.to_string())? == rat(-23760),
        || "the (6,6) derivative number is not -23760".to_string(),
    )?;
    checks += 1;
    ensure(
        central_coeffs(13).map_err(|e| e.to_string())?.values[5] == frac(5, 2),
        || "the (13,5) central coefficient is not 5/2".to_string(),
    )?;
    checks += 1;
    // Sums of powers: 1^5 + ... + 10^5 = 220825 and friends.
    for (n, m, want) in [(5u32, 10u64, 220_825i64), (2, 100, 338_350), (3, 10, 3_025)] {
        let r = eval_power_sum(Strategy::Faulhaber, n, m).map_err(|e| e.to_string())?;
        ensure(r.value == Int::from(want), || {
            format!("power sum value differs at n = {n}, m = {m}")
        })?;
        checks += 1;
    }
    // The brute oracle agrees with the closed forms on a diagonal stripe.
    for n in 2..=16u32 {
        let m = 2 * n as u64 + 3;
        let value = eval_power_sum(Strategy::Faulhaber, n, m).map_err(|e| e.to_string())?;
        let brute = power_sum_eval_brute(n, m + 1);
        ensure(value.value == brute, || {
            format!("oracle mismatch at n = {n}, m = {m}")
        })?;
        checks += 1;
    }
    Ok(checks)
}

fn cmd_verify(suite: &str) -> Result<ExitCode, String> {
    type SuiteFn = fn() -> Result<usize, String>;
    let all: &[(&'static str, SuiteFn)] = &[
        ("recurrences", suite_recurrences as SuiteFn),
        ("symmetry", suite_symmetry as SuiteFn),
        ("zero-sums", suite_zero_sums as SuiteFn),
        ("stern", suite_stern as SuiteFn),
        ("rfold", suite_rfold as SuiteFn),
        ("historical", suite_historical as SuiteFn),
    ];
    let selected: Vec<(&'static str, SuiteFn)> = if suite == "all" {
        all.to_vec()
    } else {
        let found: Vec<_> = all
            .iter()
            .copied()
            .filter(|(name, _)| *name == suite)
            .collect();
        if found.is_empty() {
            return Err(format!(
                "unknown suite `{suite}` (expected all, recurrences, symmetry, zero-sums, stern, rfold or historical)"
            ));
        }
        found
    };
    let mut failed = false;
    for (name, f) in selected {
        let result = run_suite(f);
        match result.failure {
            None => println!("verify {name}: ok ({} checks)", result.checks),
            Some(e) => {
                failed = true;
                println!("verify {name}: FAILED: {e}");
            }
        }
    }
    Ok(if failed { ExitCode::from(2) } else { ExitCode::SUCCESS })
}
