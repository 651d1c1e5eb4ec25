//! Exact construction and verification of integer solutions to the quartic
//! sum equations
//!
//! ```text
//! a⁴ + b⁴ + c⁴ + d⁴ + e⁴ + k·f⁴ = g⁴        (k = 1..9)
//! a⁴ + b⁴ + c⁴ + k·d⁴ = e⁴                  (k = 2, 3, 7, 8, 9)
//! ```
//!
//! Each built-in family rides on a polynomial identity that collapses
//! `G⁴ − A⁴ − B⁴` to a content times a perfect square, which turns the
//! equation into a cubic model `d·r² = a₃x³ + a₁x + a₀` and hence into an
//! elliptic curve `Y² = X³ + AX + B` over ℚ. A rational point of infinite
//! order on that curve back-substitutes to an unbounded stream of primitive
//! integer solutions. Everything is computed over exact big integers and
//! rationals; there is no floating point anywhere.
//!
//! ```
//! use quartics::{families, pipeline};
//!
//! let cfg = families::lookup(families::Variant::FivePlus, 7).unwrap();
//! let gen = pipeline::Generator::new(cfg).unwrap();
//! let run = gen.generate(1, 120).unwrap();
//! assert_eq!(run[0].0.to_string(), "6^4 + 9^4 + 20^4 + 12^4 + 8^4 + 7*4^4 = 21^4");
//! ```
//!
//! The `quartics` binary exposes the same machinery as subcommands
//! (`tables`, `solve`, `check`, `search`, `verify`, `families`, `registry`);
//! see the book under `book/` for a guided tour.

pub mod arith;
pub mod cli;
pub mod corpus;
pub mod curve;
pub mod families;
pub mod identities;
pub mod model;
pub mod pipeline;
pub mod poly;

use thiserror::Error;

/// Crate-wide error type. Most operations are total on valid inputs; these
/// variants mark the contract violations and genuine failure modes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial does not factor as a content times an exact square")]
    NotASquareForm,
    #[error("singular curve: 4A^3 + 27B^2 = 0")]
    SingularCurve,
    #[error("point is not on the curve")]
    InputOffCurve,
    #[error("the point at infinity has no affine image")]
    PointAtInfinity,
    #[error("(x, r) does not satisfy the cubic model relation")]
    ModelRelationViolated,
    #[error("multiplier sum over content is not an exact square")]
    NotASquare,
    #[error("substitution produced a zero entry")]
    DegenerateSolution,
    #[error("digit budget exhausted before any solution appeared")]
    DigitBudgetExhausted,
    #[error("invalid cubic model: {0}")]
    InvalidModel(String),
    #[error("unknown configuration: {0}")]
    UnknownConfig(String),
}

// Book chapters double as doctests so the guide can never drift from the
// library. `cargo test --doc` runs every fenced rust block below.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/models.md")]
    mod models {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/pipeline.md")]
    mod pipeline {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
