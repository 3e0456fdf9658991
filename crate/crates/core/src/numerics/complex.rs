//! Complex arithmetic over `BigReal`, plus order-4 Taylor jets.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::constants;
use super::real::BigReal;

#[derive(Clone, PartialEq, Eq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        assert_eq!(re.bits(), im.bits(), "mixed-precision complex");
        BigComplex { re, im }
    }

    pub fn zero(bits: u32) -> Self {
        BigComplex { re: BigReal::zero(bits), im: BigReal::zero(bits) }
    }

    pub fn one(bits: u32) -> Self {
        BigComplex { re: BigReal::one(bits), im: BigReal::zero(bits) }
    }

    pub fn i(bits: u32) -> Self {
        BigComplex { re: BigReal::zero(bits), im: BigReal::one(bits) }
    }

    pub fn from_real(re: BigReal) -> Self {
        let bits = re.bits();
        BigComplex { re, im: BigReal::zero(bits) }
    }

    pub fn from_i64(v: i64, bits: u32) -> Self {
        BigComplex::from_real(BigReal::from_i64(v, bits))
    }

    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        BigComplex::from_real(BigReal::from_rational(r, bits))
    }

    pub fn bits(&self) -> u32 {
        self.re.bits()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> BigReal {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> BigReal {
        self.norm_sqr().sqrt()
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        BigComplex { re: self.re.mul_i64(k), im: self.im.mul_i64(k) }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        BigComplex { re: self.re.mul_rational(r), im: self.im.mul_rational(r) }
    }

    pub fn scale_real(&self, r: &BigReal) -> Self {
        BigComplex { re: &self.re * r, im: &self.im * r }
    }

    /// Multiplication by i.
    pub fn mul_i(&self) -> Self {
        BigComplex { re: -&self.im, im: self.re.clone() }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by complex zero");
        BigComplex { re: &self.re / &n, im: &(-&self.im) / &n }
    }

    pub fn powi(&self, k: i32) -> Self {
        let bits = self.bits();
        if k == 0 {
            return BigComplex::one(bits);
        }
        let base = if k < 0 { self.recip() } else { self.clone() };
        let mut acc = BigComplex::one(bits);
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Principal logarithm, arg in (-pi, pi]; log(-1) = +pi*i.
    pub fn ln(&self) -> Self {
        assert!(!self.is_zero(), "log of zero");
        let half_ln_norm = self.norm_sqr().ln().mul_pow2(-1);
        let arg = BigReal::atan2(&self.im, &self.re);
        BigComplex { re: half_ln_norm, im: arg }
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        BigComplex { re: &m * &c, im: &m * &s }
    }

    /// (2 pi i)^k at this precision.
    pub fn two_pi_i_pow(k: i32, bits: u32) -> Self {
        let two_pi = constants::pi(bits).mul_pow2(1);
        BigComplex { re: BigReal::zero(bits), im: two_pi }.powi(k)
    }

    /// Decimal rendering "re + im*i" as a pair of fixed-point strings.
    pub fn to_decimal_pair(&self, digits: u32) -> (String, String) {
        (self.re.to_decimal(digits), self.im.to_decimal(digits))
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Div for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        self * &rhs.recip()
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -&self.re, im: -&self.im }
    }
}

impl AddAssign<&BigComplex> for BigComplex {
    fn add_assign(&mut self, rhs: &BigComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?} i)", self.re, self.im)
    }
}

/// Order-4 truncated Taylor jet: value and first three derivatives divided
/// by factorials, i.e. coefficients of 1, eps, eps^2, eps^3.
#[derive(Clone)]
pub struct Jet4(pub [BigComplex; 4]);

impl Jet4 {
    pub fn constant(c: BigComplex) -> Self {
        let bits = c.bits();
        Jet4([c, BigComplex::zero(bits), BigComplex::zero(bits), BigComplex::zero(bits)])
    }

    /// The variable itself: value `at`, derivative 1.
    pub fn variable(at: BigComplex) -> Self {
        let bits = at.bits();
        Jet4([at, BigComplex::one(bits), BigComplex::zero(bits), BigComplex::zero(bits)])
    }

    pub fn zero(bits: u32) -> Self {
        Jet4([
            BigComplex::zero(bits),
            BigComplex::zero(bits),
            BigComplex::zero(bits),
            BigComplex::zero(bits),
        ])
    }

    pub fn add(&self, rhs: &Jet4) -> Jet4 {
        Jet4([
            &self.0[0] + &rhs.0[0],
            &self.0[1] + &rhs.0[1],
            &self.0[2] + &rhs.0[2],
            &self.0[3] + &rhs.0[3],
        ])
    }

    pub fn mul(&self, rhs: &Jet4) -> Jet4 {
        let mut out = Jet4::zero(self.0[0].bits());
        for k in 0..4 {
            let mut acc = BigComplex::zero(self.0[0].bits());
            for i in 0..=k {
                acc += &(&self.0[i] * &rhs.0[k - i]);
            }
            out.0[k] = acc;
        }
        out
    }

    pub fn scale(&self, c: &BigComplex) -> Jet4 {
        Jet4([
            &self.0[0] * c,
            &self.0[1] * c,
            &self.0[2] * c,
            &self.0[3] * c,
        ])
    }

    pub fn add_assign(&mut self, rhs: &Jet4) {
        for k in 0..4 {
            self.0[k] += &rhs.0[k];
        }
    }

    /// d^j/d eps^j at eps = 0 (Taylor coefficient times j!).
    pub fn derivative(&self, j: usize) -> BigComplex {
        const FACT: [i64; 4] = [1, 1, 2, 6];
        self.0[j].scale_i64(FACT[j])
    }

    /// Jet of log(x0 + eps) given log(x0): log x0 + eps/x0 - eps^2/(2 x0^2) + eps^3/(3 x0^3).
    pub fn log_from(value: BigComplex, x0: &BigComplex) -> Jet4 {
        let inv = x0.recip();
        let inv2 = &inv * &inv;
        let inv3 = &inv2 * &inv;
        Jet4([
            value,
            inv,
            inv2.scale_rational(&BigRational::new(BigInt::from(-1), BigInt::from(2))),
            inv3.scale_rational(&BigRational::new(BigInt::from(1), BigInt::from(3))),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::PrecisionContext;

    fn bits() -> u32 {
        PrecisionContext::new(60).bits()
    }

    #[test]
    fn complex_log_branch() {
        let b = bits();
        let minus_one = BigComplex::from_i64(-1, b);
        let l = minus_one.ln();
        assert!(l.re.abs() < BigReal::ulp(b).mul_i64(1 << 8));
        let pi = constants::pi(b);
        assert!((&l.im - &pi).abs() < BigReal::ulp(b).mul_i64(1 << 8));
    }

    #[test]
    fn exp_ln_round_trip() {
        let b = bits();
        let z = BigComplex::new(
            BigReal::from_i64(2, b),
            BigReal::from_i64(-3, b),
        );
        let w = z.ln().exp();
        assert!((&w - &z).abs() < BigReal::ulp(b).mul_i64(1 << 20));
    }

    #[test]
    fn two_pi_i_cubed_is_negative_imaginary() {
        let b = bits();
        let c = BigComplex::two_pi_i_pow(3, b);
        assert!(c.re.abs() < BigReal::ulp(b).mul_i64(1 << 10));
        assert!(c.im.is_negative()); // (2 pi i)^3 = -8 pi^3 i
    }

    #[test]
    fn jet_tracks_derivatives_of_square() {
        // f(x) = x^2 at x = 3: f=9, f'=6, f''=2, f'''=0
        let b = bits();
        let x = Jet4::variable(BigComplex::from_i64(3, b));
        let f = x.mul(&x);
        assert_eq!(f.derivative(0), BigComplex::from_i64(9, b));
        assert_eq!(f.derivative(1), BigComplex::from_i64(6, b));
        assert_eq!(f.derivative(2), BigComplex::from_i64(2, b));
        assert!(f.derivative(3).is_zero());
    }
}
