//! Error type shared by every module of the crate.
//!
//! Most variants correspond to a classical identity that the library checks
//! while it computes.  Those identities are theorems, so in a correct build
//! the "violation" variants never fire; they exist so that any regression in
//! the arithmetic surfaces as a typed error instead of a silently wrong
//! polynomial.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument was outside the domain of the requested operation.
    Domain(String),
    /// A string could not be parsed as an exact rational or polynomial.
    Parse(String),
    /// Polynomial division was requested but the divisor does not divide
    /// the dividend exactly.
    NonzeroRemainder,
    /// A polynomial could not be rewritten as a polynomial in the requested
    /// quadratic (its monomial expansion left a residue).
    NotInBasis,
    /// The multiplication-theorem cross-check `B_n(kx) = k^(n-1) * sum of
    /// B_n(x + nu/k)` failed.
    RaabeViolation { n: u32, k: u32 },
    /// The coefficient chain linking consecutive odd-index Faulhaber
    /// polynomials produced a polynomial that fails its boundary checks.
    ChainInconsistency { n: u32 },
    /// The three-term recurrence between Jacobi coefficient rows failed.
    JacobiRecurrenceViolation { m: u32, k: u32 },
    /// One of the internal consistency checks on Schroeder's beta/gamma
    /// coefficients failed (recurrence, proportionality, positivity,
    /// special values, or the link to the Jacobi row).
    SchroederIdentityViolation { m: u32, check: &'static str },
    /// The even part of a Bernoulli polynomial disagreed with its expansion
    /// in the quadratic x(x-1).
    BnFpViolation { n: u32 },
    /// The derivative relation between the lifted Faulhaber pair failed.
    AppellViolation { n: u32 },
    /// The generalized chain rule for an n-th derivative of a composition
    /// disagreed with direct differentiation.
    HoppeMismatch { n: u32 },
    /// The closed form for derivatives of a reciprocal Bernoulli polynomial
    /// disagreed with direct differentiation.
    ClosedFormMismatch { n: u32, k: i64, l: u32 },
    /// The two independent routes to a central derivative number (closed
    /// binomial sum versus three-term recurrence) disagreed.
    RecurrenceMismatch { n: u32, k: u32 },
    /// The differential recurrence satisfied by the auxiliary polynomials
    /// Lambda_{n,k} failed.
    LambdaRecurrenceViolation { n: u32, k: u32 },
    /// A symmetry or endpoint identity of the shifted reciprocal Bernoulli
    /// numbers failed.
    SymmetryViolation { n: u32, check: &'static str },
    /// The independent routes to a central coefficient disagreed.
    RouteMismatch { n: u32, k: u32 },
    /// The reciprocal-polynomial route to a Faulhaber polynomial disagreed
    /// with the power-sum route.
    BridgeMismatch { n: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::NonzeroRemainder => write!(f, "polynomial division left a nonzero remainder"),
            Error::NotInBasis => {
                write!(f, "polynomial is not expressible in the requested quadratic")
            }
            Error::RaabeViolation { n, k } => {
                write!(f, "multiplication theorem failed for n = {n}, k = {k}")
            }
            Error::ChainInconsistency { n } => {
                write!(f, "coefficient chain produced an inconsistent polynomial at n = {n}")
            }
            Error::JacobiRecurrenceViolation { m, k } => {
                write!(f, "Jacobi coefficient recurrence failed at m = {m}, k = {k}")
            }
            Error::SchroederIdentityViolation { m, check } => {
                write!(f, "Schroeder coefficient check `{check}` failed at m = {m}")
            }
            Error::BnFpViolation { n } => {
                write!(f, "Bernoulli/Faulhaber bridge polynomial check failed at n = {n}")
            }
            Error::AppellViolation { n } => {
                write!(f, "derivative relation of the lifted Faulhaber pair failed at n = {n}")
            }
            Error::HoppeMismatch { n } => {
                write!(f, "chain-rule expansion disagreed with direct order-{n} differentiation")
            }
            Error::ClosedFormMismatch { n, k, l } => write!(
                f,
                "closed derivative form disagreed with direct differentiation \
                 (n = {n}, k = {k}, l = {l})"
            ),
            Error::RecurrenceMismatch { n, k } => {
                write!(f, "central derivative number routes disagree at n = {n}, k = {k}")
            }
            Error::LambdaRecurrenceViolation { n, k } => {
                write!(f, "auxiliary polynomial recurrence failed at n = {n}, k = {k}")
            }
            Error::SymmetryViolation { n, check } => {
                write!(f, "symmetry check `{check}` failed at n = {n}")
            }
            Error::RouteMismatch { n, k } => {
                write!(f, "central coefficient routes disagree at n = {n}, k = {k}")
            }
            Error::BridgeMismatch { n } => {
                write!(f, "reciprocal-polynomial route disagreed with power-sum route at n = {n}")
            }
        }
    }
}

impl std::error::Error for Error {}
