//! Error types shared by every module of the crate.
//!
//! [`Error`] covers domain rejections (invalid rank, undefined quantities,
//! mixed root systems). [`ParseError`] covers malformed textual input such as
//! fraction strings or weight coordinate lists; the CLI maps the two to
//! different exit codes.

use thiserror::Error;

/// Domain errors: the input is well-formed but the requested quantity is
/// undefined or the operands are incompatible.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is not admissible for family {family} (A: >=1, B/C: >=2, D: >=3, E: 6-8, F: 4, G: 2)")]
    InvalidRank { family: char, rank: usize },

    #[error("operands belong to different root systems")]
    MixedRootSystems,

    #[error("node {node} is out of range for rank {rank}")]
    InvalidNode { node: usize, rank: usize },

    #[error("spectral point must have positive magnitude")]
    InvalidPoint,

    #[error("multiplicities must be strictly positive")]
    InvalidMultiplicity,

    #[error("m(1) is unbounded: the unit element lies in C[u^r] for every r")]
    PeriodOfUnit,

    #[error("L(C) is an infinite direct sum of one-dimensional modules, not a finite sum of l-highest-weight summands")]
    SummandsOfUnit,

    #[error("r_lambda is undefined for the zero weight")]
    ZeroWeight,

    #[error("weight {0} is not dominant")]
    NonDominant(String),

    #[error("residue coordinates do not match the invariant factors of Gamma")]
    InvalidResidue,

    #[error("graded multiplicities of a single summand are undefined for m(pi) = {m} > 1; only the aggregate over all m summands is determined by the character data")]
    PeriodGreaterThanOne { m: u64 },

    #[error("dimension formula implemented for type A only (got family {family})")]
    NotTypeA { family: char },

    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { expected: usize, got: usize },
}

/// Malformed textual input: fractions, weights, type names, JSON field values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {0}")]
pub struct ParseError(pub String);

impl ParseError {
    pub fn new(msg: impl Into<String>) -> Self {
        ParseError(msg.into())
    }
}
