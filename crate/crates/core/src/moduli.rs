//! Parameter validation, component enumeration, and assembly of component
//! Poincare polynomials and Euler characteristics.
//!
//! A component of the representation space is labeled by the genus `g` and
//! the degree pair `(d1, d2)`. Internally every computation runs on
//! normalized invariants: the pair is replaced by its dual when the Toledo
//! side is negative, then tensored by a line bundle so that the total degree
//! lands in `{1, 2}`. Both moves are isomorphisms of moduli spaces and are
//! recorded in the report, so callers keep their original labels.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::critical::{
    enumerate_length3, morse_index_length3, n2_poincare, n3_poincare, ChainType, Length3Invariants,
};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::symprod::binom;

/// Input invariants of a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuliParams {
    /// Genus of the surface, at least 2.
    pub g: i64,
    /// Degree of the rank-2 part.
    pub d1: i64,
    /// Degree of the line part.
    pub d2: i64,
    /// Fixed-determinant (SU(2,1)) variant instead of U(2,1).
    pub fixed_det: bool,
}

/// Normalized invariants together with the recorded transformation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizedParams {
    pub g: i64,
    /// Total degree after normalization, always 1 or 2.
    pub d: i64,
    pub d2: i64,
    /// Whether the dual `(E, phi) -> (E*, phi^t)` was taken.
    pub dualized: bool,
    /// Degree of the tensoring line bundle, sending `(d, d2)` to
    /// `(d + 3k, d2 + k)`.
    pub tensor_shift: i64,
}

/// Moduli-of-triples identification of the length-2 critical submanifold,
/// recorded for documentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleModuli {
    pub alpha: i64,
    pub rank_e1: i64,
    pub rank_e2: i64,
    pub deg_e1: i64,
    pub deg_e2: i64,
}

/// Which critical family a report entry describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriticalKind {
    Length2 { triple: TripleModuli },
    Length3 { invariants: Length3Invariants },
}

/// One critical submanifold of a component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalReport {
    pub kind: CriticalKind,
    pub morse_index: i64,
    pub dim_critical: i64,
    pub dim_downflow: i64,
    pub poincare: LaurentPoly,
}

impl CriticalReport {
    /// The `m2` invariant for length-3 entries.
    pub fn m2(&self) -> Option<i64> {
        match &self.kind {
            CriticalKind::Length2 { .. } => None,
            CriticalKind::Length3 { invariants } => Some(invariants.m2),
        }
    }
}

/// A named consistency check, recorded with every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
}

/// Names of the checks recorded in a [`ComponentReport`].
pub mod check_names {
    pub const CONSTANT_TERM_ONE: &str = "constant_term_one";
    pub const COEFFS_NONNEGATIVE: &str = "coeffs_nonnegative";
    pub const POINCARE_RESUMMATION: &str = "poincare_resummation";
    pub const MORSE_INDEX_CLOSED_FORM: &str = "morse_index_closed_form";
    pub const DIM_CRITICAL_PRODUCT: &str = "dim_critical_symmetric_product";
    pub const DOWNFLOW_OFFSET: &str = "downflow_offset";
    pub const EULER_ZERO: &str = "euler_zero";
    pub const EULER_CLOSED_FORM: &str = "euler_closed_form";
}

/// Full description of one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub params: ModuliParams,
    pub normalized: NormalizedParams,
    pub criticals: Vec<CriticalReport>,
    pub poincare: LaurentPoly,
    pub euler: BigInt,
    pub checks: Vec<Check>,
}

/// Validates the parameters and computes the normalized invariants.
///
/// Dualization applies exactly when `3 d2 - d < 0`; a tensor shift then
/// brings the total degree into `{1, 2}` in all cases.
pub fn validate(p: &ModuliParams) -> Result<NormalizedParams> {
    if p.g < 2 {
        return Err(Error::GenusTooSmall(p.g));
    }
    let d = p.d1 + p.d2;
    if d.rem_euclid(3) == 0 {
        return Err(Error::NotCoprime { d });
    }
    let toledo = p.d1 - 2 * p.d2;
    let bound = 3 * p.g - 3;
    if toledo.abs() > bound {
        return Err(Error::ToledoViolated {
            toledo: toledo.abs(),
            bound,
        });
    }

    let dualized = 3 * p.d2 - d < 0;
    let (d, d2) = if dualized { (-d, -p.d2) } else { (d, p.d2) };
    let residue = d.rem_euclid(3);
    let tensor_shift = (residue - d) / 3;
    Ok(NormalizedParams {
        g: p.g,
        d: residue,
        d2: d2 + tensor_shift,
        dualized,
        tensor_shift,
    })
}

/// All `d2` values with a non-empty component for total degree `d`:
/// the integers with `d/3 - (g-1) <= d2 <= d/3 + (g-1)`.
pub fn enumerate_components(g: i64, d: i64) -> Result<Vec<i64>> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    if d.rem_euclid(3) == 0 {
        return Err(Error::NotCoprime { d });
    }
    let lo = (d - 3 * (g - 1)).div_euclid(3) + i64::from((d - 3 * (g - 1)).rem_euclid(3) != 0);
    let hi = (d + 3 * (g - 1)).div_euclid(3);
    Ok((lo..=hi).collect())
}

fn jacobian_factor(g: i64) -> LaurentPoly {
    LaurentPoly::from_ints(0, &[1, 1]).pow(2 * g as u64)
}

fn closed_form_euler(n: &NormalizedParams) -> BigInt {
    let g = n.g;
    let bound = crate::critical::length3_bound(g, n.d, n.d2);
    let mut sum = BigInt::zero();
    for m2 in 0..=bound {
        sum += binom(2 * g - 2, m2 + 3 * n.d2 - n.d) * binom(2 * g - 2, m2);
    }
    let magnitude = BigInt::from(3).pow(2 * g as u32) * sum;
    if (n.d + n.d2) % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

/// Computes the full report for one component: every critical submanifold
/// with its Morse data, the assembled Poincare polynomial, the Euler
/// characteristic, and the recorded consistency checks.
pub fn component_poincare(p: &ModuliParams) -> Result<ComponentReport> {
    let normalized = validate(p)?;
    let g = normalized.g;
    let d = normalized.d;
    let d2 = normalized.d2;

    let length2_chain = ChainType::length2(g, d, d2);
    let mut criticals = vec![CriticalReport {
        kind: CriticalKind::Length2 {
            triple: TripleModuli {
                alpha: 2 * g - 2,
                rank_e1: 2,
                rank_e2: 1,
                deg_e1: 4 * g - 4 + (d - d2),
                deg_e2: d2,
            },
        },
        morse_index: length2_chain.morse_index(),
        dim_critical: length2_chain.dim_critical(),
        dim_downflow: length2_chain.dim_downflow(),
        poincare: n2_poincare(g, d, d2, p.fixed_det)?,
    }];

    let mut morse_closed_form_ok = true;
    let mut dim_product_ok = true;
    for invariants in enumerate_length3(g, d, d2)? {
        let chain = invariants.chain();
        let closed_form = morse_index_length3(g, d, d2, invariants.m2);
        morse_closed_form_ok &= closed_form == chain.morse_index();
        dim_product_ok &= chain.dim_critical() == invariants.m1 + invariants.m2 + g;
        criticals.push(CriticalReport {
            kind: CriticalKind::Length3 { invariants },
            morse_index: closed_form,
            dim_critical: chain.dim_critical(),
            dim_downflow: chain.dim_downflow(),
            poincare: n3_poincare(g, &invariants, p.fixed_det),
        });
    }

    let downflow_ok = criticals
        .iter()
        .all(|c| c.dim_downflow == c.dim_critical + c.morse_index / 2);

    let mut poincare = LaurentPoly::zero();
    for critical in &criticals {
        poincare = &poincare + &critical.poincare.shifted(critical.morse_index);
    }

    if let Some((exp, coeff)) = poincare.first_negative_coeff() {
        return Err(Error::NegativeCoefficient { exp, coeff });
    }
    let resummation = criticals.iter().fold(LaurentPoly::zero(), |acc, c| {
        &acc + &c.poincare.shifted(c.morse_index)
    });

    let euler = poincare
        .eval_int(-1)
        .expect("component polynomials have non-negative exponents");

    let mut checks = vec![
        Check {
            name: check_names::CONSTANT_TERM_ONE,
            pass: poincare.constant_term().is_one(),
        },
        Check {
            name: check_names::COEFFS_NONNEGATIVE,
            pass: !poincare.has_negative_coeff(),
        },
        Check {
            name: check_names::POINCARE_RESUMMATION,
            pass: resummation == poincare,
        },
        Check {
            name: check_names::MORSE_INDEX_CLOSED_FORM,
            pass: morse_closed_form_ok,
        },
        Check {
            name: check_names::DIM_CRITICAL_PRODUCT,
            pass: dim_product_ok,
        },
        Check {
            name: check_names::DOWNFLOW_OFFSET,
            pass: downflow_ok,
        },
    ];

    if p.fixed_det {
        let closed_form = closed_form_euler(&normalized);
        if euler != closed_form {
            return Err(Error::EulerMismatch {
                evaluated: euler,
                closed_form,
            });
        }
        checks.push(Check {
            name: check_names::EULER_CLOSED_FORM,
            pass: true,
        });
    } else {
        checks.push(Check {
            name: check_names::EULER_ZERO,
            pass: euler.is_zero(),
        });
    }

    Ok(ComponentReport {
        params: *p,
        normalized,
        criticals,
        poincare,
        euler,
        checks,
    })
}

/// Euler characteristic of the fixed-determinant component by the closed
/// binomial formula, evaluated on the normalized invariants:
/// `3^{2g} (-1)^{d + d2} sum over m2 of C(2g-2, m2 + 3 d2 - d) C(2g-2, m2)`.
pub fn euler_fixed_closed_form(p: &ModuliParams) -> Result<BigInt> {
    let normalized = validate(p)?;
    Ok(closed_form_euler(&normalized))
}

/// The defect polynomial `P(M) - (1+t)^{2g} P(M~)` comparing the non-fixed
/// component with its fixed-determinant counterpart. A nonzero value
/// witnesses the non-trivial action of the 3-torsion of the Jacobian on the
/// rational cohomology of the fixed-determinant space.
pub fn torsion_action_defect(g: i64, d1: i64, d2: i64) -> Result<LaurentPoly> {
    let non_fixed = component_poincare(&ModuliParams {
        g,
        d1,
        d2,
        fixed_det: false,
    })?;
    let fixed = component_poincare(&ModuliParams {
        g,
        d1,
        d2,
        fixed_det: true,
    })?;
    Ok(&non_fixed.poincare - &(&jacobian_factor(g) * &fixed.poincare))
}

/// The length-2 part of the torsion defect, which is identically zero: the
/// non-fixed length-2 polynomial equals `(1+t)^{2g}` times the fixed one.
pub fn torsion_length2_defect(g: i64, d1: i64, d2: i64) -> Result<LaurentPoly> {
    let normalized = validate(&ModuliParams {
        g,
        d1,
        d2,
        fixed_det: false,
    })?;
    let non_fixed = n2_poincare(normalized.g, normalized.d, normalized.d2, false)?;
    let fixed = n2_poincare(normalized.g, normalized.d, normalized.d2, true)?;
    Ok(&non_fixed - &(&jacobian_factor(g) * &fixed))
}
