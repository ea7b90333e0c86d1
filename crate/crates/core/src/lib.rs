//! Numerical semigroup rings `k[S]`, their monomial fractional ideals, graded
//! minimal free resolutions, and an executable harness that checks
//! trace-ideal order bounds on concrete instances.
//!
//! The crate is organized around four layers:
//!
//! * [`semigroup`] -- exact combinatorics of S: membership, Apery sets,
//!   Frobenius number, factorization lengths, Loewy length surrogates, and a
//!   genus-tree enumerator;
//! * [`ideal`] -- monomial fractional ideal arithmetic: colon, product,
//!   trace, conductor, canonical ideal, m-adic order;
//! * [`graded`] -- degree-by-degree linear algebra over `k[S]` and its
//!   Artinian truncations: syzygies, resolutions, entry ideals, Hom/Ext/Tor,
//!   Auslander transpose;
//! * [`harness`] -- one executable check per supported statement, emitting
//!   reproducible reports.

pub mod error;
pub mod graded;
pub mod harness;
pub mod ideal;
pub mod linalg;
pub mod semigroup;

pub use error::{Error, Result};
pub use graded::{GradedRing, Presentation, Resolution};
pub use ideal::{MonomialFractionalIdeal, Order};
pub use semigroup::{EnumerationFilter, NumericalSemigroup};
