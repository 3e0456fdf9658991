//! Special constants evaluated by integer series with a shared cache.
//!
//! Each series is summed in scaled-integer arithmetic at `bits + 32` guard
//! bits, then rounded once to the requested scale, so a given (constant,
//! bits) pair always yields the same mantissa.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::real::BigReal;
use super::PrecisionContext;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Pi,
    Ln2,
    Zeta3,
}

fn cache() -> &'static Mutex<HashMap<(Kind, u32), BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<(Kind, u32), BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(kind: Kind, bits: u32, compute: impl FnOnce(u32) -> BigInt) -> BigReal {
    let mut guard = cache().lock().expect("constant cache poisoned");
    let mant = guard
        .entry((kind, bits))
        .or_insert_with(|| compute(bits))
        .clone();
    drop(guard);
    // the cached integer is the value scaled by 2^(bits + 32)
    BigReal::from_ratio(&mant, &(BigInt::from(1) << (bits + 32)), bits)
}

/// pi at the given scale (Machin: pi = 16 atan(1/5) - 4 atan(1/239)).
pub fn pi(bits: u32) -> BigReal {
    cached(Kind::Pi, bits, |b| {
        let guard = b + 32;
        let v = atan_inv_int(5, guard) * 16 - atan_inv_int(239, guard) * 4;
        v
    })
}

/// pi under a `PrecisionContext` (working + guard digits honored via bits).
pub fn constant_pi(ctx: &PrecisionContext) -> BigReal {
    pi(ctx.bits())
}

/// ln 2 = 2 atanh(1/3).
pub fn ln2(bits: u32) -> BigReal {
    cached(Kind::Ln2, bits, |b| atanh_inv_int(3, b + 32) * 2)
}

/// Apery's constant zeta(3), by the Amdeberhan-Zeilberger series
/// zeta(3) = sum_{n>=0} (-1)^n (205 n^2 + 250 n + 77)/64 * (n!)^10 / ((2n+1)!)^5,
/// which gains ~10 bits per term.
pub fn zeta3(bits: u32) -> BigReal {
    cached(Kind::Zeta3, bits, |b| {
        let guard = b + 32;
        let mut t = BigInt::from(1) << guard; // (n!)^10/((2n+1)!)^5 scaled
        let mut sum = BigInt::zero();
        let mut n: i64 = 0;
        loop {
            let poly = BigInt::from(205 * n * n + 250 * n + 77);
            let term = &t * poly / 64;
            if term.is_zero() {
                break;
            }
            if n % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            n += 1;
            // ratio t_n / t_{n-1} = n^5 / (32 (2n+1)^5)
            let num = BigInt::from(n).pow(5);
            let den = BigInt::from(32) * BigInt::from(2 * n + 1).pow(5);
            t = t * num / den;
        }
        sum
    })
}

pub fn constant_zeta3(ctx: &PrecisionContext) -> BigReal {
    zeta3(ctx.bits())
}

/// atan(1/x) * 2^guard for integer x >= 2, floor-rounded per term.
fn atan_inv_int(x: i64, guard: u32) -> BigInt {
    let x2 = BigInt::from(x) * x;
    let mut t = (BigInt::from(1) << guard) / x;
    let mut sum = t.clone();
    let mut k: i64 = 1;
    loop {
        t = t / &x2;
        if t.is_zero() {
            break;
        }
        k += 2;
        let term = &t / k;
        if k % 4 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// atanh(1/x) * 2^guard for integer x >= 2.
fn atanh_inv_int(x: i64, guard: u32) -> BigInt {
    let x2 = BigInt::from(x) * x;
    let mut t = (BigInt::from(1) << guard) / x;
    let mut sum = t.clone();
    let mut k: i64 = 1;
    loop {
        t = t / &x2;
        if t.is_zero() {
            break;
        }
        k += 2;
        sum += &t / k;
    }
    sum
}

/// Independent check series used by the test oracles (Stormer's formula and
/// the Apery-accelerated zeta(3) series). Exposed for tests only.
pub mod oracle {
    use super::*;

    /// pi = 24 atan(1/8) + 8 atan(1/57) + 4 atan(1/239).
    pub fn pi_stormer(bits: u32) -> BigReal {
        let guard = bits + 32;
        let v = atan_inv_int(8, guard) * 24
            + atan_inv_int(57, guard) * 8
            + atan_inv_int(239, guard) * 4;
        BigReal::from_ratio(&v, &(BigInt::from(1) << guard), bits)
    }

    /// zeta(3) = (5/2) sum_{n>=1} (-1)^(n-1) / (n^3 binom(2n,n)).
    pub fn zeta3_apery(bits: u32) -> BigReal {
        let guard = bits + 32;
        // t_n = 2^guard * (n!)^2/(2n)!;  t_n/t_{n-1} = n / (2(2n-1))
        let mut t = BigInt::from(1) << guard;
        let mut sum = BigInt::zero();
        let mut n: i64 = 0;
        loop {
            n += 1;
            t = t * n / (2 * (2 * n - 1));
            let term = &t / (n * n * n);
            if term.is_zero() {
                break;
            }
            if n % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        sum = sum * 5 / 2;
        BigReal::from_ratio(&sum, &(BigInt::from(1) << guard), bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_two_formulas_agree() {
        let ctx = PrecisionContext::new(100);
        let a = constant_pi(&ctx);
        let b = oracle::pi_stormer(ctx.bits());
        let diff = (&a - &b).abs();
        assert!(diff < BigReal::from_rational(&ctx.epsilon(), ctx.bits()));
        assert!(a.to_decimal(20).starts_with("3.14159265358979323846"));
    }

    #[test]
    fn pi_floor_times_ten_thousand() {
        let ctx = PrecisionContext::new(50);
        let p = constant_pi(&ctx);
        let scaled = p.mul_i64(10_000).floor_to_bigint();
        assert_eq!(scaled, BigInt::from(31415));
    }

    #[test]
    fn sin_pi_vanishes() {
        let ctx = PrecisionContext::new(80);
        let p = constant_pi(&ctx);
        let s = p.sin().abs();
        let bound = BigReal::from_rational(
            &PrecisionContext::pow10_neg(ctx.working_digits()),
            ctx.bits(),
        );
        assert!(s < bound);
    }

    #[test]
    fn zeta3_two_series_agree() {
        let ctx = PrecisionContext::new(100);
        let a = constant_zeta3(&ctx);
        let b = oracle::zeta3_apery(ctx.bits());
        assert!((&a - &b).abs() < BigReal::from_rational(&ctx.epsilon(), ctx.bits()));
        assert!(a.to_decimal(20).starts_with("1.20205690315959428539"));
    }

    #[test]
    fn zeta3_bracketed_by_partial_sums() {
        // coarse bracket: sum_{n<=K} n^-3 + [1/(2(K+1)^2), 1/(2K^2)]
        let ctx = PrecisionContext::new(60);
        let b = ctx.bits();
        let z = constant_zeta3(&ctx);
        let k = 200i64;
        let mut partial = BigReal::zero(b);
        for n in 1..=k {
            partial += &BigReal::from_i64(1, b).div_i64(n * n * n);
        }
        let lo = &partial + &BigReal::from_i64(1, b).div_i64(2 * (k + 1) * (k + 1));
        let hi = &partial + &BigReal::from_i64(1, b).div_i64(2 * k * k);
        assert!(lo < z && z < hi);
        // and strictly above the 10-term partial sum
        let mut ten = BigReal::zero(b);
        for n in 1..=10 {
            ten += &BigReal::from_i64(1, b).div_i64(n * n * n);
        }
        assert!(z > ten);
        // coarse interval from the spec of the constant
        let low = BigReal::from_decimal_str("1.202", b).unwrap();
        let high = BigReal::from_decimal_str("1.2021", b).unwrap();
        assert!(low < z && z < high);
    }
}
