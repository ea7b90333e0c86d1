//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("gcd of generators is {gcd}, not 1; the input does not define a numerical semigroup")]
    GcdNotOne { gcd: u64 },

    #[error("{value} is not a member of the semigroup")]
    NotAMember { value: u64 },

    #[error("enumeration bound too large: requested {requested}, cap is {cap}")]
    BoundTooLarge { requested: u64, cap: u64 },

    #[error("operation requires a nonzero ideal")]
    ZeroDivisorIdeal,

    #[error("ideals belong to different semigroups")]
    MixedSemigroups,

    #[error("exponent {exponent} lies outside the semigroup; the ideal is not integral")]
    NotIntegral { exponent: i64 },

    #[error("degree bound {used} too small to certify syzygy stabilization; retry with at least {suggested}")]
    DegreeBoundTooSmall { used: i64, suggested: i64 },

    #[error("shifted canonical ideal is not inside R; smallest workable shift is {shift_needed}")]
    NotInsideR { shift_needed: i64 },

    #[error("truncated rings have infinite resolutions; a step bound is required")]
    StepBoundRequired,
}

pub type Result<T> = std::result::Result<T, Error>;
