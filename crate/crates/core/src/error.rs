//! Error type shared across the crate.
//!
//! Variants split into two classes. Validation errors ([`Error::is_internal_fault`]
//! returns `false`) mean the caller asked for something outside the domain of the
//! theory: genus below two, a degree pair off the coprimality lattice, a Toledo
//! invariant out of range. Internal faults mean an algebraic identity that the
//! implementation relies on failed to hold, which is a bug either here or in the
//! inputs' provenance, never a recoverable condition.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The formulas require a closed oriented surface of genus at least 2.
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(i64),

    /// Smoothness of the moduli space needs gcd(d, 3) = 1 for the total
    /// degree d = d1 + d2.
    #[error("total degree d = {d} is divisible by 3, so the moduli space is not smooth")]
    NotCoprime { d: i64 },

    /// The Toledo invariant bound |d1 - 2*d2| <= 3g - 3 fails, so the
    /// representation space is empty.
    #[error("Toledo bound violated: |d1 - 2*d2| = {toledo} exceeds 3g - 3 = {bound}")]
    ToledoViolated { toledo: i64, bound: i64 },

    /// An operation that assumes normalized invariants (positive Toledo side,
    /// d2 in its allowed window) was handed raw ones.
    #[error("parameters (d, d2) = ({d}, {d2}) are not normalized")]
    NotNormalized { d: i64, d2: i64 },

    /// Polynomial long division left a nonzero remainder where exactness was
    /// promised.
    #[error("exact division left a nonzero remainder of degree {remainder_degree}")]
    NonZeroRemainder { remainder_degree: i64 },

    /// Division of a polynomial by zero.
    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// A series coefficient beyond the stored truncation order was requested.
    #[error("coefficient of x^{requested} requested from a series truncated at x^{trunc}")]
    TruncationExceeded { requested: usize, trunc: usize },

    /// Integer evaluation of a Laurent polynomial with negative exponents is
    /// only defined at t = 1 and t = -1.
    #[error(
        "cannot evaluate at t = {t0}: negative exponents restrict evaluation to t = 1 or t = -1"
    )]
    EvalOutsideDomain { t0: i64 },

    /// A Poincare polynomial came out with a negative coefficient.
    #[error("negative coefficient {coeff} at t^{exp} in a Poincare polynomial")]
    NegativeCoefficient { exp: i64, coeff: BigInt },

    /// The Euler characteristic from polynomial evaluation disagrees with the
    /// closed-form count.
    #[error("Euler characteristic mismatch: evaluation gives {evaluated}, closed form gives {closed_form}")]
    EulerMismatch {
        evaluated: BigInt,
        closed_form: BigInt,
    },
}

impl Error {
    /// Stable machine-readable name, suitable for scripted consumers.
    pub fn name(&self) -> &'static str {
        match self {
            Error::GenusTooSmall(_) => "genus_too_small",
            Error::NotCoprime { .. } => "not_coprime",
            Error::ToledoViolated { .. } => "toledo_violated",
            Error::NotNormalized { .. } => "not_normalized",
            Error::NonZeroRemainder { .. } => "non_zero_remainder",
            Error::DivisionByZero => "division_by_zero",
            Error::TruncationExceeded { .. } => "truncation_exceeded",
            Error::EvalOutsideDomain { .. } => "eval_outside_domain",
            Error::NegativeCoefficient { .. } => "negative_coefficient",
            Error::EulerMismatch { .. } => "euler_mismatch",
        }
    }

    /// True for errors that indicate a broken internal identity rather than
    /// bad input.
    pub fn is_internal_fault(&self) -> bool {
        matches!(
            self,
            Error::NonZeroRemainder { .. }
                | Error::DivisionByZero
                | Error::NegativeCoefficient { .. }
                | Error::EulerMismatch { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_stable() {
        assert_eq!(Error::GenusTooSmall(1).name(), "genus_too_small");
        assert_eq!(Error::DivisionByZero.name(), "division_by_zero");
        assert_eq!(Error::NotCoprime { d: 3 }.name(), "not_coprime");
    }

    #[test]
    fn fault_classification() {
        assert!(Error::DivisionByZero.is_internal_fault());
        assert!(Error::NonZeroRemainder {
            remainder_degree: 0
        }
        .is_internal_fault());
        assert!(!Error::GenusTooSmall(0).is_internal_fault());
        assert!(!Error::EvalOutsideDomain { t0: 2 }.is_internal_fault());
    }

    #[test]
    fn messages_carry_context() {
        let e = Error::ToledoViolated {
            toledo: 7,
            bound: 3,
        };
        assert_eq!(
            e.to_string(),
            "Toledo bound violated: |d1 - 2*d2| = 7 exceeds 3g - 3 = 3"
        );
    }
}
