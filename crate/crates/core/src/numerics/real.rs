//! Fixed-point arbitrary-precision reals.
//!
//! A `BigReal` is `mantissa / 2^bits` with the binary scale `bits` fixed by
//! the `PrecisionContext` that created it. Keeping one global scale (instead
//! of a floating exponent) makes every operation a plain integer operation
//! with a single deterministic rounding, so results are bit-identical across
//! runs and platforms. Magnitudes in this crate stay within a few hundred
//! orders of unity, well inside what the scale absorbs.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct BigReal {
    mant: BigInt,
    bits: u32,
}

impl BigReal {
    pub fn zero(bits: u32) -> Self {
        BigReal { mant: BigInt::zero(), bits }
    }

    pub fn one(bits: u32) -> Self {
        BigReal { mant: BigInt::from(1) << bits, bits }
    }

    pub fn from_i64(v: i64, bits: u32) -> Self {
        BigReal { mant: BigInt::from(v) << bits, bits }
    }

    pub fn from_bigint(v: &BigInt, bits: u32) -> Self {
        BigReal { mant: v.clone() << bits, bits }
    }

    pub fn from_ratio(num: &BigInt, den: &BigInt, bits: u32) -> Self {
        assert!(!den.is_zero(), "denominator must be nonzero");
        BigReal { mant: div_round(&(num.clone() << bits), den), bits }
    }

    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        Self::from_ratio(r.numer(), r.denom(), bits)
    }

    /// Parses a plain decimal string: optional sign, digits, optional
    /// fractional part (`-12.345`). No exponent notation.
    pub fn from_decimal_str(s: &str, bits: u32) -> Option<Self> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return None;
        }
        let digits: String = format!("{int_part}{frac_part}");
        let num: BigInt = digits.parse().ok()?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        let v = BigReal::from_ratio(&num, &den, bits);
        Some(if neg { -v } else { v })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigReal { mant: self.mant.abs(), bits: self.bits }
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Exact conversion to a rational: `mantissa / 2^bits`.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::from(1) << self.bits)
    }

    /// Nearest integer (ties toward +inf).
    pub fn round_to_bigint(&self) -> BigInt {
        shr_round(&self.mant, self.bits)
    }

    pub fn floor_to_bigint(&self) -> BigInt {
        self.mant.clone() >> self.bits
    }

    /// Approximate value for step-size heuristics and log-scale estimates;
    /// never used in verified arithmetic.
    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let nbits = self.mant.bits();
        if nbits <= 1000 {
            return self.mant.to_f64().unwrap_or(0.0) / 2f64.powi(self.bits as i32);
        }
        let shift = nbits - 64;
        let top = (self.mant.clone() >> shift).to_f64().unwrap_or(0.0);
        top * 2f64.powi(shift as i32 - self.bits as i32)
    }

    /// log2 of |x| (f64 estimate); `None` for zero.
    pub fn log2_abs(&self) -> Option<f64> {
        if self.mant.is_zero() {
            return None;
        }
        let nbits = self.mant.bits();
        let shift = nbits.saturating_sub(64);
        let top = (self.mant.abs() >> shift).to_f64().unwrap_or(1.0);
        Some(top.log2() + shift as f64 - self.bits as f64)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        BigReal { mant: &self.mant * k, bits: self.bits }
    }

    pub fn div_i64(&self, k: i64) -> Self {
        assert!(k != 0);
        BigReal { mant: div_round(&self.mant, &BigInt::from(k)), bits: self.bits }
    }

    pub fn mul_rational(&self, r: &BigRational) -> Self {
        BigReal {
            mant: div_round(&(&self.mant * r.numer()), r.denom()),
            bits: self.bits,
        }
    }

    /// Multiplies by 2^k (k may be negative).
    pub fn mul_pow2(&self, k: i32) -> Self {
        let mant = if k >= 0 {
            self.mant.clone() << k as u32
        } else {
            shr_round(&self.mant, (-k) as u32)
        };
        BigReal { mant, bits: self.bits }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let num = BigInt::from(1) << (2 * self.bits as u64);
        BigReal { mant: div_round(&num, &self.mant), bits: self.bits }
    }

    /// Square root (floor rounding in the last bit). Panics on negatives.
    pub fn sqrt(&self) -> Self {
        assert!(!self.mant.is_negative(), "sqrt of negative value");
        let shifted = self.mant.clone() << self.bits;
        BigReal { mant: shifted.sqrt(), bits: self.bits }
    }

    /// `1 ulp` at this scale: 2^-bits.
    pub fn ulp(bits: u32) -> Self {
        BigReal { mant: BigInt::from(1), bits }
    }

    /// Fixed-point decimal rendering with `digits` fractional digits,
    /// round-to-nearest. Canonical output for reports.
    pub fn to_decimal(&self, digits: u32) -> String {
        let pow = BigInt::from(10u32).pow(digits);
        let scaled = shr_round(&(&self.mant * &pow), self.bits);
        let neg = scaled.is_negative();
        let digits_str = scaled.abs().to_string();
        let s = if digits_str.len() <= digits as usize {
            format!("0.{:0>width$}", digits_str, width = digits as usize)
        } else {
            let (int_part, frac_part) = digits_str.split_at(digits_str.len() - digits as usize);
            format!("{int_part}.{frac_part}")
        };
        if neg && s.trim_matches(|c| c == '0' || c == '.').is_empty() {
            s // avoid "-0.000...0"
        } else if neg {
            format!("-{s}")
        } else {
            s
        }
    }

    fn check_bits(&self, other: &Self) {
        assert_eq!(self.bits, other.bits, "mixed-precision arithmetic");
    }
}

/// round(x / 2^k), ties toward +inf. Deterministic.
fn shr_round(x: &BigInt, k: u32) -> BigInt {
    if k == 0 {
        return x.clone();
    }
    (x + (BigInt::from(1) << (k - 1))) >> k
}

/// round(n / d) to nearest, ties away from zero. Deterministic.
pub(crate) fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    let r2: BigInt = r.abs() << 1;
    if r2 >= d.abs() {
        if (n.is_negative()) ^ (d.is_negative()) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl Add for &BigReal {
    type Output = BigReal;
    fn add(self, rhs: &BigReal) -> BigReal {
        self.check_bits(rhs);
        BigReal { mant: &self.mant + &rhs.mant, bits: self.bits }
    }
}

impl Sub for &BigReal {
    type Output = BigReal;
    fn sub(self, rhs: &BigReal) -> BigReal {
        self.check_bits(rhs);
        BigReal { mant: &self.mant - &rhs.mant, bits: self.bits }
    }
}

impl Mul for &BigReal {
    type Output = BigReal;
    fn mul(self, rhs: &BigReal) -> BigReal {
        self.check_bits(rhs);
        BigReal { mant: shr_round(&(&self.mant * &rhs.mant), self.bits), bits: self.bits }
    }
}

impl Div for &BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        self.check_bits(rhs);
        assert!(!rhs.is_zero(), "division by zero");
        BigReal {
            mant: div_round(&(self.mant.clone() << self.bits), &rhs.mant),
            bits: self.bits,
        }
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal { mant: -&self.mant, bits: self.bits }
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal { mant: -self.mant, bits: self.bits }
    }
}

impl AddAssign<&BigReal> for BigReal {
    fn add_assign(&mut self, rhs: &BigReal) {
        self.check_bits(rhs);
        self.mant += &rhs.mant;
    }
}

impl SubAssign<&BigReal> for BigReal {
    fn sub_assign(&mut self, rhs: &BigReal) {
        self.check_bits(rhs);
        self.mant -= &rhs.mant;
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.check_bits(other);
        self.mant.cmp(&other.mant)
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({:.6e} @{} bits)", self.to_f64(), self.bits)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(40))
    }
}

// ---------------------------------------------------------------------------
// Elementary functions. Each reduces its argument into a regime where a
// plain Taylor/atanh series converges geometrically at the working scale.
// ---------------------------------------------------------------------------

impl BigReal {
    /// Natural log. Panics unless `self > 0`.
    pub fn ln(&self) -> Self {
        assert!(self.signum() > 0, "ln of non-positive value");
        let bits = self.bits;
        // reduce to x' in [2/3, 4/3]: x = x' * 2^m
        let nbits = self.mant.bits() as i64;
        let mut m = nbits - 1 - bits as i64;
        let mut x = self.mul_pow2(-m as i32);
        // x in [1, 2)
        let four_thirds = BigReal::from_ratio(&BigInt::from(4), &BigInt::from(3), bits);
        if x > four_thirds {
            x = x.mul_pow2(-1);
            m += 1;
        }
        // atanh series: ln x = 2 atanh((x-1)/(x+1)), |t| <= 1/5
        let one = BigReal::one(bits);
        let t = &(&x - &one) / &(&x + &one);
        let t2 = &t * &t;
        let mut sum = t.clone();
        let mut pow = t.clone();
        let mut k: i64 = 1;
        loop {
            pow = &pow * &t2;
            k += 2;
            let term = pow.div_i64(k);
            if term.is_zero() {
                break;
            }
            sum += &term;
        }
        let ln2 = super::constants::ln2(bits);
        &sum.mul_pow2(1) + &ln2.mul_i64(m)
    }

    /// Exponential. Argument reduction by ln 2, then Taylor.
    pub fn exp(&self) -> Self {
        let bits = self.bits;
        let ln2 = super::constants::ln2(bits);
        let k = (self / &ln2).round_to_bigint();
        let k_i64 = k.to_i64().expect("exp argument out of range");
        let r = self - &ln2.mul_rational(&BigRational::from(k));
        // |r| <= ln2/2; Taylor
        let mut sum = BigReal::one(bits);
        let mut term = BigReal::one(bits);
        let mut n: i64 = 0;
        loop {
            n += 1;
            term = (&term * &r).div_i64(n);
            if term.is_zero() {
                break;
            }
            sum += &term;
        }
        sum.mul_pow2(k_i64 as i32)
    }

    /// Sine and cosine together (shared argument reduction mod pi/2).
    pub fn sin_cos(&self) -> (Self, Self) {
        let bits = self.bits;
        let pi = super::constants::pi(bits);
        let half_pi = pi.mul_pow2(-1);
        // x = q * (pi/2) + r, |r| <= pi/4
        let q = (self / &half_pi).round_to_bigint();
        let r = self - &half_pi.mul_rational(&BigRational::from(q.clone()));
        let (s, c) = sin_cos_taylor(&r);
        let quadrant = q.mod_floor(&BigInt::from(4)).to_i64().unwrap();
        match quadrant {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sin(&self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Self {
        self.sin_cos().1
    }

    /// Arctangent via halving reductions and the alternating series.
    pub fn atan(&self) -> Self {
        let bits = self.bits;
        if self.is_zero() {
            return BigReal::zero(bits);
        }
        if self.is_negative() {
            return -self.abs().atan();
        }
        let one = BigReal::one(bits);
        if *self > one {
            let half_pi = super::constants::pi(bits).mul_pow2(-1);
            return &half_pi - &self.recip().atan();
        }
        // halve until |x| < 1/8: atan x = 2 atan(x / (1 + sqrt(1 + x^2)))
        let mut x = self.clone();
        let mut doublings = 0u32;
        let eighth = BigReal::from_ratio(&BigInt::from(1), &BigInt::from(8), bits);
        while x > eighth {
            let denom = &one + &(&one + &(&x * &x)).sqrt();
            x = &x / &denom;
            doublings += 1;
        }
        let x2 = &x * &x;
        let mut sum = x.clone();
        let mut pow = x.clone();
        let mut k: i64 = 1;
        let mut sign = -1i64;
        loop {
            pow = &pow * &x2;
            k += 2;
            let term = pow.div_i64(sign * k);
            if term.is_zero() {
                break;
            }
            sum += &term;
            sign = -sign;
        }
        sum.mul_pow2(doublings as i32)
    }

    /// Two-argument arctangent with the branch arg in (-pi, pi]; on the
    /// negative real axis (y = 0, x < 0) it returns +pi, matching the
    /// convention log(-1) = +pi*i.
    pub fn atan2(y: &Self, x: &Self) -> Self {
        let bits = y.bits;
        let pi = super::constants::pi(bits);
        match (x.signum(), y.signum()) {
            (0, 0) => BigReal::zero(bits),
            (1, 0) => BigReal::zero(bits),
            (-1, 0) => pi,
            (0, s) => {
                let hp = pi.mul_pow2(-1);
                if s > 0 { hp } else { -hp }
            }
            (1, _) => (y / x).atan(),
            (-1, s) => {
                let base = (y / x).atan();
                if s >= 0 { &base + &pi } else { &base - &pi }
            }
            _ => unreachable!(),
        }
    }
}

fn sin_cos_taylor(r: &BigReal) -> (BigReal, BigReal) {
    let bits = r.bits;
    let r2 = r * r;
    let mut s = r.clone();
    let mut term = r.clone();
    let mut n: i64 = 1;
    loop {
        term = (&term * &r2).div_i64(-(n + 1) * (n + 2));
        n += 2;
        if term.is_zero() {
            break;
        }
        s += &term;
    }
    let mut c = BigReal::one(bits);
    let mut term = BigReal::one(bits);
    let mut n: i64 = 0;
    loop {
        term = (&term * &r2).div_i64(-(n + 1) * (n + 2));
        n += 2;
        if term.is_zero() {
            break;
        }
        c += &term;
    }
    (s, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::PrecisionContext;

    fn bits() -> u32 {
        PrecisionContext::new(60).bits()
    }

    fn assert_close(a: &BigReal, b: &BigReal, ulps: i64) {
        let diff = (a - b).abs();
        assert!(
            diff <= BigReal::ulp(a.bits()).mul_i64(ulps),
            "difference {} exceeds {} ulps",
            diff.to_f64(),
            ulps
        );
    }

    #[test]
    fn decimal_round_trip() {
        let b = bits();
        let x = BigReal::from_ratio(&BigInt::from(-355), &BigInt::from(113), b);
        let s = x.to_decimal(50);
        let y = BigReal::from_decimal_str(&s, b).unwrap();
        assert_close(&x, &y, 1 << 10);
        assert!(s.starts_with("-3.14159292"));
    }

    #[test]
    fn ln_exp_round_trip() {
        let b = bits();
        for v in [3i64, 10, 1, 7000] {
            let x = BigReal::from_i64(v, b);
            let y = x.ln().exp();
            assert_close(&x, &y, 1 << 16);
        }
        let tiny = BigReal::from_ratio(&BigInt::from(1), &BigInt::from(100_000), b);
        assert_close(&tiny.ln().exp(), &tiny, 1 << 16);
    }

    #[test]
    fn sin_cos_pythagoras() {
        let b = bits();
        for v in [1i64, 2, 3, -5, 13] {
            let x = BigReal::from_ratio(&BigInt::from(v), &BigInt::from(3), b);
            let (s, c) = x.sin_cos();
            let unit = &(&s * &s) + &(&c * &c);
            assert_close(&unit, &BigReal::one(b), 1 << 16);
        }
    }

    #[test]
    fn atan_tan_identity() {
        let b = bits();
        let x = BigReal::from_ratio(&BigInt::from(7), &BigInt::from(9), b);
        let a = x.atan();
        let (s, c) = a.sin_cos();
        assert_close(&(&s / &c), &x, 1 << 16);
    }

    #[test]
    fn atan2_negative_axis_is_plus_pi() {
        let b = bits();
        let y = BigReal::zero(b);
        let x = BigReal::from_i64(-3, b);
        let a = BigReal::atan2(&y, &x);
        assert_close(&a, &crate::numerics::constants::pi(b), 4);
    }

    #[test]
    fn sqrt_squares_back() {
        let b = bits();
        let x = BigReal::from_i64(14, b);
        let r = x.sqrt();
        assert_close(&(&r * &r), &x, 1 << 8);
    }

    #[test]
    fn division_rounding_is_symmetric() {
        assert_eq!(div_round(&BigInt::from(7), &BigInt::from(2)), BigInt::from(4));
        assert_eq!(div_round(&BigInt::from(-7), &BigInt::from(2)), BigInt::from(-4));
        assert_eq!(div_round(&BigInt::from(6), &BigInt::from(4)), BigInt::from(2));
    }
}
