//! Arbitrary-precision arithmetic, special constants, truncated series,
//! and number-recognition primitives.
//!
//! Everything here is a pure value: fixed inputs and a fixed
//! `PrecisionContext` give bit-identical outputs, and nothing holds interior
//! mutability beyond the (deterministic) constant cache.

pub mod complex;
pub mod constants;
mod context;
pub mod real;
pub mod recognize;
pub mod relation;
pub mod series;

pub use complex::{BigComplex, Jet4};
pub use constants::{constant_pi, constant_zeta3};
pub use context::PrecisionContext;
pub use real::BigReal;
pub use recognize::recognize_rational;
pub use relation::integer_relation;
pub use series::{RationalSeries, TruncatedSeries};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Parses "p/q" or "p" into an exact rational (bit-exact; no float parsing).
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().ok()?;
            let d: BigInt = den.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

/// Canonical "p/q" (or "p" for integers) rendering of a rational.
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_string_round_trip() {
        for s in ["-1/7", "3", "15337/64", "-1029/2"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(rational_to_string(&r), s);
        }
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("a/b").is_none());
    }
}
