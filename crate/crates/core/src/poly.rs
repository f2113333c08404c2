//! One-variable polynomials with integer coefficients.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::interval::RatInterval;
use crate::rational::Rational;

/// A nonzero polynomial `c_0 + c_1 X + … + c_d X^d` with integer
/// coefficients stored in ascending order; the last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("the zero polynomial is rejected")]
    Zero,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros. The zero polynomial is rejected.
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self, PolyError> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(PolyError::Zero);
        }
        Ok(Self { coeffs })
    }

    /// The identity polynomial `X`.
    pub fn identity() -> Self {
        Self {
            coeffs: alloc::vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.len() == 2 && self.coeffs[0].is_zero() && self.coeffs[1].is_one()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn leading_coefficient(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from(c.clone());
        }
        acc
    }

    /// Interval evaluation by Horner's rule with four-corner products.
    pub fn eval_interval(&self, x: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add_scalar(&Rational::from(c.clone()));
        }
        acc
    }

    /// Formal derivative; `None` for constants.
    pub fn derivative(&self) -> Option<Polynomial> {
        if self.degree() == 0 {
            return None;
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Some(Self { coeffs })
    }

    /// Upper bound for `|P'(z)|` over `|z| ≤ radius`, by the triangle
    /// inequality: `Σ_{i≥1} |i·c_i| · radius^{i-1}`.
    pub fn derivative_abs_bound(&self, radius: &Rational) -> Rational {
        let mut power = Rational::one();
        let mut total = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let term = Rational::from((c * BigInt::from(i)).abs());
            total += term * &power;
            power *= radius;
        }
        total
    }

    /// Coefficients of `P(center + Y)` in `Y`, ascending. The constant term
    /// is `P(center)`.
    pub fn taylor_shift(&self, center: &Rational) -> Vec<Rational> {
        let mut shifted: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| Rational::from(c.clone()))
            .collect();
        // Repeated synthetic division by (Y - center) accumulates the shifted
        // coefficients in place.
        let n = shifted.len();
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let add = &shifted[j + 1] * center;
                shifted[j] += add;
            }
        }
        shifted
    }
}
