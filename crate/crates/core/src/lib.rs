//! Exact computation of degenerate special polynomials.
//!
//! The crate works over exact rationals throughout: [`Rational`] scalars,
//! [`BivarPoly`] polynomials in the formal variables λ and x, and
//! [`TruncSeries`] power series in t with polynomial coefficients. On top of
//! that it provides generalized falling factorials, degenerate Bernoulli
//! polynomials, Mersenne and dimorphic Mersenne numbers, Stirling numbers of
//! the second kind, incomplete and complete Bell polynomials, and an engine
//! ([`identities`]) that checks the identities tying them together as exact
//! polynomial equalities.

pub mod bell;
pub mod combinat;
pub mod degenerate;
pub mod error;
pub mod exec;
pub mod identities;
pub mod poly;
pub mod primality;
pub mod rational;
pub mod series;
pub mod table;

pub use bell::{BellArgs, PartitionProfile};
pub use error::{Error, Result};
pub use exec::Execution;
pub use identities::{IdentityCheck, IdentityId, VerificationReport};
pub use poly::BivarPoly;
pub use rational::Rational;
pub use series::TruncSeries;
pub use table::{DegenSequenceTable, Family};

/// Default truncation order for series-based checks.
pub const DEFAULT_ORDER: usize = 24;
