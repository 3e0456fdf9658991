//! Periods of one-parameter Calabi-Yau families from their Picard-Fuchs
//! operators, at arbitrary precision.
//!
//! The crate computes the canonical Frobenius basis of solutions at the
//! large-complex-structure point, analytically continues the period vector
//! and its derivatives anywhere in the regular locus, and uses the result to
//!
//! * certify rank-2 attractor points by fitting the attractor equation over
//!   integral charges,
//! * rediscover the rational split of the algebraic de Rham cohomology,
//! * evaluate modular-form L-series by a smoothed functional equation, and
//! * compare Deligne periods against critical L-values, recognizing the
//!   rational ratios predicted by Deligne's conjecture.
//!
//! The `rank2` binary drives the whole pipeline from JSON configuration;
//! see the README for the shipped family data.

pub mod attractor;
pub mod deligne;
pub mod elliptic;
pub mod hodge;
pub mod mirror;
pub mod modular;
pub mod numerics;
pub mod picard_fuchs;
pub mod pipeline;
