//! Working-precision policy shared by every numerical routine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Decimal working precision plus guard digits, and the tolerance used by
/// verification predicates. Cheap value object; clone freely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecisionContext {
    working_digits: u32,
    guard_digits: u32,
    verify_tolerance_exp: u32,
}

/// log2(10), slightly rounded up so bit budgets never undershoot.
const LOG2_10: f64 = 3.321928094887363;

impl PrecisionContext {
    /// Context with the given working precision and 20 guard digits.
    ///
    /// Panics if `working_digits < 50`: printed reference values in this
    /// domain carry ~50 digits, so anything below that cannot be verified.
    pub fn new(working_digits: u32) -> Self {
        Self::with_guard(working_digits, 20)
    }

    pub fn with_guard(working_digits: u32, guard_digits: u32) -> Self {
        assert!(working_digits >= 50, "working_digits must be >= 50");
        assert!(guard_digits >= 10, "guard_digits must be >= 10");
        PrecisionContext {
            working_digits,
            guard_digits,
            verify_tolerance_exp: working_digits / 2,
        }
    }

    /// Overrides the verification tolerance to `10^(-exp)`.
    /// `exp` must stay strictly below `working_digits`.
    pub fn with_verify_tolerance_exp(mut self, exp: u32) -> Self {
        assert!(
            exp < self.working_digits,
            "verify tolerance must exceed 10^(-working_digits)"
        );
        self.verify_tolerance_exp = exp;
        self
    }

    pub fn working_digits(&self) -> u32 {
        self.working_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    /// Binary precision of every mantissa created under this context.
    pub fn bits(&self) -> u32 {
        ((self.working_digits + self.guard_digits) as f64 * LOG2_10).ceil() as u32 + 32
    }

    /// `10^(-(working_digits + guard_digits))` as an exact rational:
    /// the round-off floor of the context.
    pub fn epsilon(&self) -> BigRational {
        pow10_inv(self.working_digits + self.guard_digits)
    }

    /// Verification tolerance, `10^(-working_digits/2)` unless overridden.
    pub fn verify_tolerance(&self) -> BigRational {
        pow10_inv(self.verify_tolerance_exp)
    }

    pub fn verify_tolerance_exp(&self) -> u32 {
        self.verify_tolerance_exp
    }

    /// `10^(-exp)` as an exact rational, for ad-hoc thresholds.
    pub fn pow10_neg(exp: u32) -> BigRational {
        pow10_inv(exp)
    }
}

fn pow10_inv(exp: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u32).pow(exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_tolerance_is_half_the_digits() {
        let ctx = PrecisionContext::new(200);
        assert_eq!(ctx.verify_tolerance(), PrecisionContext::pow10_neg(100));
        assert!(ctx.bits() > 700);
    }

    #[test]
    #[should_panic]
    fn rejects_tiny_precision() {
        let _ = PrecisionContext::new(20);
    }

    #[test]
    #[should_panic]
    fn rejects_tolerance_below_roundoff() {
        let _ = PrecisionContext::new(50).with_verify_tolerance_exp(50);
    }
}
