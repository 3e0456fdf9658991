//! Truncated power series with exact rational or big-complex coefficients.
//!
//! Exact rational series carry the Frobenius solutions; conversion to
//! big-float coefficients is explicit and happens once, at evaluation time.

use num_rational::BigRational;
use num_traits::Zero;

use super::complex::{BigComplex, Jet4};

/// Power series truncated at `order`: coefficients c_0 ... c_order.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T> TruncatedSeries<T> {
    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> &T {
        &self.coeffs[n]
    }
}

pub type RationalSeries = TruncatedSeries<BigRational>;

impl TruncatedSeries<BigRational> {
    pub fn from_coefficients(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.truncation_order().min(rhs.truncation_order());
        let coeffs = (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect();
        TruncatedSeries { coeffs }
    }

    /// Product truncated at the shorter order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.truncation_order().min(rhs.truncation_order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if !rhs.coeffs[j].is_zero() {
                    coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Termwise d/dx (order drops by one).
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return TruncatedSeries::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * BigRational::from_integer(n.into()))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Horner evaluation at a complex point, converting coefficients once.
    pub fn eval_complex(&self, x: &BigComplex) -> BigComplex {
        let bits = x.bits();
        let mut acc = BigComplex::zero(bits);
        for c in self.coeffs.iter().rev() {
            acc = &acc * x;
            acc += &BigComplex::from_rational(c, bits);
        }
        acc
    }

    /// Horner evaluation in the order-4 jet ring at `x0 + eps`.
    pub fn eval_jet(&self, x: &Jet4) -> Jet4 {
        let bits = x.0[0].bits();
        let mut acc = Jet4::zero(bits);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x);
            acc.0[0] += &BigComplex::from_rational(c, bits);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}
