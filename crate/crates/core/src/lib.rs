//! Exact decision procedures for ordered divisible abelian groups with
//! ℚ-scalar multiplication, expanded by a predicate for a convex downward
//! closed cut.
//!
//! The crate is organized around finitely presented ordered ℚ-vector spaces
//! ([`model::PresentedModel`]): ranked basis symbols with computable leading
//! values stand in for elements of a dense ordered group. On top of that sit
//! a first-order syntax layer ([`logic`]), a quantifier elimination engine
//! with an independent substitution oracle ([`qe`]), decision procedures for
//! Morley sequences, dividing, and elementary extensions ([`lab`]), and a
//! harness that checks power-tower inequalities after compiling them into
//! the linear layer ([`logscale`]).

pub mod lab;
pub mod logic;
pub mod logscale;
pub mod model;
pub mod qe;
pub mod report;

pub use model::{
    AdjoinOutcome, AdjoinSpec, BasisSymbol, CutSide, CutSpec, LeadingValue, ModelElement,
    ModelError, MorleySequence, PresentedModel, Rank, TypeSide, TypeSpec,
};

/// Exact rational scalar used throughout the crate.
pub type Rat = num::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for the rational `p/q`. Panics when `q == 0`.
pub fn ratq(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}
