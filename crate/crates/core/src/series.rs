//! Truncated formal power series in `x` whose coefficients are Laurent
//! polynomials in `t`.
//!
//! A series stores the dense coefficient list of `x^0 .. x^trunc`. All
//! operations are exact on the retained coefficients; a product truncates to
//! the smaller of the two operands' orders, since higher coefficients of the
//! result would need discarded terms of the inputs.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// A power series in `x` over [`LaurentPoly`], truncated after `x^trunc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesX {
    coeffs: Vec<LaurentPoly>,
}

impl SeriesX {
    /// Builds a series from the coefficients of `x^0 .. x^n`. The list fixes
    /// the truncation order, so it must be non-empty.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the x^0 coefficient"
        );
        SeriesX { coeffs }
    }

    /// The zero series at the given truncation order.
    pub fn zero(trunc: usize) -> Self {
        SeriesX {
            coeffs: vec![LaurentPoly::zero(); trunc + 1],
        }
    }

    /// The constant series 1.
    pub fn one(trunc: usize) -> Self {
        Self::constant(&LaurentPoly::one(), trunc)
    }

    /// A constant series with the given `x^0` coefficient.
    pub fn constant(p: &LaurentPoly, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = p.clone();
        s
    }

    /// Expansion of `1 / (1 - ratio * x)` up to `x^trunc`.
    pub fn geometric(ratio: &LaurentPoly, trunc: usize) -> Self {
        let mut coeffs = Vec::with_capacity(trunc + 1);
        coeffs.push(LaurentPoly::one());
        for k in 1..=trunc {
            let next = &coeffs[k - 1] * ratio;
            coeffs.push(next);
        }
        SeriesX { coeffs }
    }

    /// Expansion of `(1 + inner * x)^n` up to `x^trunc`.
    pub fn binom_power(inner: &LaurentPoly, n: u64, trunc: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); trunc + 1];
        let mut binom = BigInt::one();
        let mut inner_pow = LaurentPoly::one();
        coeffs[0] = LaurentPoly::one();
        let top = trunc.min(n as usize);
        for (k, coeff) in coeffs.iter_mut().enumerate().take(top + 1).skip(1) {
            binom = binom * BigInt::from(n - k as u64 + 1) / BigInt::from(k as u64);
            inner_pow = &inner_pow * inner;
            *coeff = &LaurentPoly::constant(binom.clone()) * &inner_pow;
        }
        SeriesX { coeffs }
    }

    /// The truncation order: coefficients of `x^0 .. x^trunc` are stored.
    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of `x^i`, or [`Error::TruncationExceeded`] when `i`
    /// lies beyond the stored order.
    pub fn coeff_x(&self, i: usize) -> Result<&LaurentPoly> {
        self.coeffs.get(i).ok_or(Error::TruncationExceeded {
            requested: i,
            trunc: self.trunc(),
        })
    }

    /// All stored coefficients, ascending in the power of `x`.
    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn scale(&self, p: &LaurentPoly) -> Self {
        SeriesX {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }
}

impl Add for &SeriesX {
    type Output = SeriesX;

    fn add(self, rhs: &SeriesX) -> SeriesX {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        SeriesX {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &SeriesX {
    type Output = SeriesX;

    fn sub(self, rhs: &SeriesX) -> SeriesX {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        SeriesX {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &SeriesX {
    type Output = SeriesX;

    fn mul(self, rhs: &SeriesX) -> SeriesX {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = vec![LaurentPoly::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        SeriesX { coeffs }
    }
}

impl Neg for &SeriesX {
    type Output = SeriesX;

    fn neg(self) -> SeriesX {
        SeriesX {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
