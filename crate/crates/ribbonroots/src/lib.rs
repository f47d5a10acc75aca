//! Exact combinatorics of ribbon shapes and their counting polynomials.
//!
//! The crate is organised bottom-up:
//!
//! * [`shapes`] — partitions, cells, skew shapes, descent sets, hook lengths.
//! * [`excited`] — excited diagrams of a skew shape and hook-product counting
//!   of standard fillings, with an independent brute-force oracle.
//! * [`sqci`] — weighted circle/square diagrams, slicing and pushing
//!   operators, and the weight inequalities they satisfy.
//! * [`poly`] — dense polynomial arithmetic over exact rationals.
//! * [`descent`] — descent polynomials of ribbon shapes in Newton and
//!   monomial form, coefficient monotonicity checks, and a factorial-scan
//!   oracle.
//! * [`roots`] — a complex root solver with symbolic integer deflation,
//!   plus the root-location bound checks the polynomial families satisfy.
//! * [`families`] — deterministic exhaustive and seeded random instance
//!   generators shared by the test suite and the CLI sweeps.
//!
//! All counting is exact (big integers and big rationals); floating point
//! appears only in the root solver and is certified by scaled residuals.

pub mod descent;
pub mod excited;
pub mod families;
pub mod poly;
pub mod roots;
pub mod shapes;
pub mod sqci;

use thiserror::Error;

/// Default seed for every randomized sweep; reports echo the seed in use.
pub const DEFAULT_SEED: u64 = 0x5249_4242;

/// Default cell budget for the brute-force standard-filling oracle.
pub const DEFAULT_BRUTE_FORCE_BUDGET: usize = 20;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside a function's domain (bad partition, foreign cell, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// An exact computation was refused because it exceeds a size budget.
    #[error("budget exceeded: {what} needs {needed}, limit {limit}")]
    Budget {
        what: &'static str,
        needed: usize,
        limit: usize,
    },
    /// Two routes that must agree disagreed; always a bug if it fires.
    #[error("internal consistency error: {0}")]
    Inconsistency(String),
    /// The numeric root solver failed to converge or certify.
    #[error("numerical error: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
