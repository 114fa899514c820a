//! Exact symbolic kernel for twist-deformation experiments on the `ax+b` double.
//!
//! The crate is organized around an exact rational-function engine
//! ([`scalar`]), structure-constant Lie algebra data ([`liealg`]), a PBW
//! enveloping-algebra layer with truncated `hbar`-series and Drinfel'd twists
//! ([`uea`]), single-chart tensor calculus ([`geom`]), the complete double
//! group of `ax+b` ([`axb`]), universal-deformation-formula star products and
//! their 2-cocycle duals ([`quantize`]), and momentum-map certification
//! ([`momentum`]). [`suites`] exposes every verification bundle to the CLI and
//! to the acceptance tests.
//!
//! All arithmetic is exact (arbitrary-precision rationals); every claimed
//! identity is checked coefficientwise, never numerically.

pub mod axb;
pub mod convention;
pub mod error;
pub mod geom;
pub mod liealg;
pub mod momentum;
pub mod quantize;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod suites;
pub mod uea;

pub use error::{Error, Result};
pub use report::{CheckResult, VerificationReport};

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for integers viewed as rationals.
pub fn int(n: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::from(BigInt::from(n))
}
