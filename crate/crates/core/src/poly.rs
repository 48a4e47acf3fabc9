//! Exact Laurent polynomials in one variable `t` over arbitrary-precision
//! integers.
//!
//! Coefficients are stored densely as a `Vec<BigInt>` starting at `min_exp`,
//! which may be negative. Every value is kept in canonical form: the first and
//! last stored coefficients are nonzero, and the zero polynomial is the empty
//! coefficient vector with `min_exp = 0`. Canonical form makes derived
//! equality structural equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Laurent polynomial in `t` with `BigInt` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(1)
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, 0)
    }

    /// The monomial `t^exp`.
    pub fn monomial(exp: i64) -> Self {
        Self::term(1, exp)
    }

    /// The single term `c * t^exp`.
    pub fn term(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c.into()])
    }

    /// Builds a polynomial from a dense coefficient slice starting at
    /// `min_exp`, normalizing to canonical form.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { min_exp, coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        let leading_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
            return;
        }
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.min_exp += leading_zeros as i64;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Exponent of the lowest-order term; 0 for the zero polynomial.
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Exponent of the highest-order term; 0 for the zero polynomial.
    pub fn max_exp(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.min_exp + self.coeffs.len() as i64 - 1
        }
    }

    /// The coefficient of `t^exp`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        if exp < self.min_exp {
            return BigInt::zero();
        }
        let idx = (exp - self.min_exp) as usize;
        self.coeffs.get(idx).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The coefficient of `t^0`.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.min_exp + i as i64, c))
    }

    /// The polynomial multiplied by `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `n`-th power by repeated squaring. `pow(0)` is 1 for every base.
    pub fn pow(&self, n: u64) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluates at the integer `t0`.
    ///
    /// When negative exponents are present, only `t0 = 1` and `t0 = -1` are
    /// meaningful; anything else is rejected with
    /// [`Error::EvalOutsideDomain`].
    pub fn eval_int(&self, t0: i64) -> Result<BigInt> {
        if self.is_zero() {
            return Ok(BigInt::zero());
        }
        if self.min_exp < 0 && t0.abs() != 1 {
            return Err(Error::EvalOutsideDomain { t0 });
        }
        match t0 {
            1 => Ok(self.coeffs.iter().sum()),
            -1 => {
                let mut acc = BigInt::zero();
                for (exp, c) in self.terms() {
                    if exp % 2 == 0 {
                        acc += c;
                    } else {
                        acc -= c;
                    }
                }
                Ok(acc)
            }
            _ => {
                let t0 = BigInt::from(t0);
                let mut acc = BigInt::zero();
                for c in self.coeffs.iter().rev() {
                    acc = acc * &t0 + c;
                }
                Ok(acc * t0.pow(self.min_exp as u32))
            }
        }
    }

    /// Exact long division: returns `q` with `self = q * den`.
    ///
    /// Works over the integers, so each elimination step requires the current
    /// leading coefficient to be divisible by the divisor's leading
    /// coefficient. Any failure of exactness, at a step or as a leftover
    /// remainder, reports [`Error::NonZeroRemainder`] with the exponent where
    /// division got stuck.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.coeffs.len();
        let m = den.coeffs.len();
        if n < m {
            return Err(Error::NonZeroRemainder {
                remainder_degree: self.max_exp(),
            });
        }
        let den_lead = &den.coeffs[m - 1];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let lead = std::mem::take(&mut rem[k + m - 1]);
            if lead.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&lead, den_lead);
            if !r.is_zero() {
                return Err(Error::NonZeroRemainder {
                    remainder_degree: self.min_exp + (k + m - 1) as i64,
                });
            }
            for (i, dc) in den.coeffs.iter().enumerate().take(m - 1) {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        if let Some(top) = rem.iter().rposition(|c| !c.is_zero()) {
            return Err(Error::NonZeroRemainder {
                remainder_degree: self.min_exp + top as i64,
            });
        }
        Ok(Self::from_coeffs(self.min_exp - den.min_exp, quot))
    }

    /// True when the coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// True when some coefficient is negative.
    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.iter().any(|c| c.is_negative())
    }

    /// The lowest-exponent term with a negative coefficient, if any.
    pub fn first_negative_coeff(&self) -> Option<(i64, BigInt)> {
        self.terms()
            .find(|(_, c)| c.is_negative())
            .map(|(e, c)| (e, c.clone()))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.min_exp.min(rhs.min_exp);
        let max = self.max_exp().max(rhs.max_exp());
        let mut coeffs = vec![BigInt::zero(); (max - min + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - min) as usize] += c;
        }
        for (e, c) in rhs.terms() {
            coeffs[(e - min) as usize] += c;
        }
        LaurentPoly::from_coeffs(min, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.min_exp + rhs.min_exp, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, c)) in self.terms().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match exp {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if exp == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{exp}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("LaurentPoly", 2)?;
        st.serialize_field("min_exp", &self.min_exp)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            min_exp: i64,
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| D::Error::custom(format!("invalid integer literal {s:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::from_coeffs(raw.min_exp, coeffs))
    }
}
