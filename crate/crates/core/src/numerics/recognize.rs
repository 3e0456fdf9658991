//! Rational recognition by the simplest-fraction-in-interval walk.
//!
//! Given x and a tolerance, the continued-fraction descent over the interval
//! [x - tol, x + tol] produces the unique fraction of smallest denominator
//! inside it, which is exactly the tie-breaking rule the callers rely on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::real::BigReal;

/// Smallest-denominator p/q with q <= max_denominator and |x - p/q| <= tol;
/// `None` when no such fraction exists.
pub fn recognize_rational(x: &BigReal, max_denominator: &BigInt, tol: &BigRational) -> Option<BigRational> {
    assert!(tol.is_positive(), "tolerance must be positive");
    assert!(max_denominator.is_positive());
    let xr = x.to_rational();
    let lo = &xr - tol;
    let hi = &xr + tol;
    let best = simplest_in_interval(&lo, &hi);
    if best.denom() <= max_denominator {
        Some(best)
    } else {
        None
    }
}

/// The unique rational with smallest denominator in the closed interval
/// [lo, hi] (lo <= hi), by the Stern-Brocot / continued-fraction descent.
pub fn simplest_in_interval(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo <= hi);
    if lo.is_negative() && !hi.is_negative() {
        // interval straddles or touches zero
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_in_interval(&-hi.clone(), &-lo.clone());
    }
    simplest_nonneg(lo.clone(), hi.clone())
}

fn simplest_nonneg(lo: BigRational, hi: BigRational) -> BigRational {
    // walk the shared continued-fraction prefix of lo and hi
    let mut lo = lo;
    let mut hi = hi;
    // convergent state: returned value = (p_prev + a * p) / (q_prev + a * q) style
    // simpler recursive formulation, iterative here:
    let mut h: Vec<BigInt> = Vec::new();
    loop {
        let fl = lo.floor().to_integer();
        let fh = hi.floor().to_integer();
        if fl != fh {
            // smallest integer in (lo, hi]: ceil(lo) unless lo is integral
            let cand = if lo.is_integer() { lo.to_integer() } else { fl + BigInt::one() };
            h.push(cand);
            break;
        }
        h.push(fl.clone());
        let lo_frac = &lo - BigRational::from_integer(fl.clone());
        let hi_frac = &hi - BigRational::from_integer(fl);
        if lo_frac.is_zero() {
            break;
        }
        // recurse on reciprocals, interval flips
        let new_lo = hi_frac.recip();
        let new_hi = lo_frac.recip();
        lo = new_lo;
        hi = new_hi;
    }
    // rebuild the fraction from the partial quotients
    let mut num = h.pop().expect("nonempty quotients");
    let mut den = BigInt::one();
    while let Some(a) = h.pop() {
        // value = a + 1/(num/den) = (a*num + den)/num
        let new_num = &a * &num + &den;
        den = std::mem::replace(&mut num, new_num);
    }
    BigRational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::PrecisionContext;

    fn ctx_bits() -> u32 {
        PrecisionContext::new(60).bits()
    }

    fn tol(exp: u32) -> BigRational {
        PrecisionContext::pow10_neg(exp)
    }

    #[test]
    fn recognizes_exact_half() {
        let b = ctx_bits();
        let x = BigReal::from_ratio(&BigInt::from(1), &BigInt::from(2), b);
        let r = recognize_rational(&x, &BigInt::from(1_000_000), &tol(30)).unwrap();
        assert_eq!(r, BigRational::new(BigInt::from(1), BigInt::from(2)));
    }

    #[test]
    fn recognizes_negative_integers() {
        let b = ctx_bits();
        let x = BigReal::from_i64(-392, b);
        let r = recognize_rational(&x, &BigInt::from(1_000_000), &tol(30)).unwrap();
        assert_eq!(r, BigRational::from_integer(BigInt::from(-392)));
    }

    #[test]
    fn recognizes_minus_1029_over_2() {
        let b = ctx_bits();
        let x = BigReal::from_decimal_str("-514.5", b).unwrap();
        let r = recognize_rational(&x, &BigInt::from(1_000_000), &tol(30)).unwrap();
        assert_eq!(r, BigRational::new(BigInt::from(-1029), BigInt::from(2)));
    }

    #[test]
    fn smallest_denominator_wins() {
        // 0.333 +/- 0.01 contains 1/3 but also 333/1000; the simplest is 1/3
        let b = ctx_bits();
        let x = BigReal::from_decimal_str("0.333", b).unwrap();
        let r = recognize_rational(&x, &BigInt::from(1000), &tol(2)).unwrap();
        assert_eq!(r, BigRational::new(BigInt::from(1), BigInt::from(3)));
    }

    #[test]
    fn rejects_when_denominator_exceeds_bound() {
        let b = ctx_bits();
        // pi is far from any fraction with denominator <= 10 at 1e-6
        let x = crate::numerics::constants::pi(b);
        assert!(recognize_rational(&x, &BigInt::from(10), &tol(6)).is_none());
    }

    #[test]
    fn round_trip_small_fractions() {
        let b = ctx_bits();
        for (p, q) in [(22i64, 7i64), (-355, 113), (1141, 32), (15337, 64), (5, 14)] {
            let x = BigReal::from_ratio(&BigInt::from(p), &BigInt::from(q), b);
            // perturb by 1e-40
            let eps = BigReal::from_rational(&tol(40), b);
            let xp = &x + &eps;
            let r = recognize_rational(&xp, &BigInt::from(10_000), &tol(30)).unwrap();
            assert_eq!(r, BigRational::new(BigInt::from(p), BigInt::from(q)));
        }
    }
}
