//! Exact construction of Gelfand-Tsetlin type bases for the rank-two
//! orthogonal/symplectic pair o5 ~ sp4.
//!
//! Irreducible finite-dimensional representations are realized inside the
//! polynomial functions on Sp4 written in matrix minors.  Basis vectors
//! adapted to the restriction o5 -> o3 are built as finite lattice
//! gamma-series in minor symbols, generator matrices are computed in that
//! basis, and everything is cross-checked against a brute-force model of the
//! representation.  All arithmetic is exact rational.
//!
//! Module map:
//! * [`scalar`] - rationals, half-integers, multi-indices, `1/n!` conventions
//! * [`symbol`], [`poly`] - the minor-symbol alphabet and sparse polynomials
//! * [`ideal`] - Pluecker relations and normal forms
//! * [`operator`] - substitution actions of the Lie algebra generators
//! * [`covering`] - the 2:1 map Sp4 -> SO5, exact sampling, minor transfer
//! * [`gamma`] - lattice gamma-series, finite supports, GKZ checks
//! * [`principal`] - expansion of (minor x series) into shifted series
//! * [`labels`] - highest-vector families for the subalgebra chain
//! * [`gt`] - diagrams and the Gelfand-Tsetlin type basis itself
//! * [`oracle`] - brute-force representation spaces
//! * [`action`] - generator matrices and the Lie-algebraic verification suite
//! * [`verify`] - named check suites shared by tests and the CLI

pub mod action;
pub mod covering;
pub mod error;
pub mod gamma;
pub mod gt;
pub mod ideal;
pub mod labels;
pub mod linalg;
pub mod operator;
pub mod oracle;
pub mod poly;
pub mod principal;
pub mod scalar;
pub mod symbol;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{HalfInt, MultiIndex, Rat};
