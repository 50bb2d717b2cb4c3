//! Exact construction and cross-verification of Faulhaber polynomials.
//!
//! The sum of the first `m` n-th powers is a polynomial in `m`; for odd `n`
//! it is even a polynomial in the triangular number `m(m-1)/2`.  This crate
//! computes those polynomials -- and a web of classical identities around
//! them -- entirely over arbitrary-precision rationals, with zero tolerance:
//! every equality is structural equality of reduced fractions.
//!
//! Layout:
//! - [`rational`]: canonical big-rational scalars and their `p/q` strings.
//! - [`sequences`]: binomials, Lah numbers, Bernoulli and Genocchi numbers.
//! - [`poly`], [`laurent`], [`series`]: the three polynomial carriers.
//! - [`bernoulli`]: Bernoulli polynomials, power sums, and their symmetry
//!   apparatus (multiplication theorem, half-shift expansion, omega forms,
//!   triangular-power reduction).
//! - [`faulhaber`]: the Faulhaber polynomials by four independent
//!   constructions, their coefficient identities, and iterated (r-fold)
//!   power sums.
//! - [`reciprocal`]: reciprocal Bernoulli polynomials `x^k B_n(1/x)`, their
//!   derivative calculus, and the bridge back to Faulhaber coefficients.
//! - [`eval`]: big-integer power-sum evaluation strategies with
//!   multiplication counting and cross-strategy agreement checks.
//! - [`json`]: exact `p/q` JSON encoding of every public carrier type.

pub mod bernoulli;
pub mod error;
pub mod eval;
pub mod faulhaber;
pub mod json;
pub mod laurent;
pub mod poly;
pub mod rational;
pub mod reciprocal;
pub mod sequences;
pub mod series;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use poly::{PalindromeClass, Poly, SubstitutionBasis};
pub use rational::{Int, Rational};
pub use series::TruncatedSeries;
