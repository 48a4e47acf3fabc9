//! Critical submanifolds of the Higgs-field Morse function.
//!
//! A critical point is a variation of Hodge structure: a chain
//! `E = F_1 + ... + F_m` of bundles with the Higgs field mapping each piece
//! to the next, twisted by the canonical bundle. For total rank 3 only two
//! shapes occur, a length-2 chain (a rank-1 piece mapping to a rank-2 piece)
//! and a length-3 chain of line bundles. This module computes, for each
//! chain, the Morse index, the dimension of the critical submanifold and of
//! its downward flow, and the Poincare polynomials of the two critical
//! families in both the non-fixed (U(2,1)) and fixed (SU(2,1)) determinant
//! variants.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::series::SeriesX;
use crate::symprod::{self, binom, macdonald_poincare, SymProdQuery};

/// A chain `F_1 -> F_2 -> ... -> F_m`, stored as (rank, degree) per piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainType {
    g: i64,
    steps: Vec<(i64, i64)>,
}

impl ChainType {
    /// Requires genus at least 2, length at least 2, and positive ranks.
    pub fn new(g: i64, steps: Vec<(i64, i64)>) -> Self {
        assert!(g >= 2, "genus must be at least 2, got {g}");
        assert!(steps.len() >= 2, "a chain has at least two pieces");
        assert!(
            steps.iter().all(|&(r, _)| r > 0),
            "chain ranks must be positive"
        );
        ChainType { g, steps }
    }

    /// The length-2 chain of the component with normalized invariants
    /// `(d, d2)`: the line piece `E_2` of degree `d2` maps into the rank-2
    /// piece `E_1` of degree `d - d2`.
    pub fn length2(g: i64, d: i64, d2: i64) -> Self {
        Self::new(g, vec![(1, d2), (2, d - d2)])
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn steps(&self) -> &[(i64, i64)] {
        &self.steps
    }

    /// Rank and degree of `U_k`, the sum of `Hom(F_j, F_i)` over `i - j = k`.
    pub fn u_rank_deg(&self, k: i64) -> (i64, i64) {
        let m = self.steps.len() as i64;
        let mut rank = 0;
        let mut degree = 0;
        for j in 1..=m {
            let i = j + k;
            if i < 1 || i > m {
                continue;
            }
            let (rj, dj) = self.steps[(j - 1) as usize];
            let (ri, di) = self.steps[(i - 1) as usize];
            rank += rj * ri;
            degree += rj * di - ri * dj;
        }
        (rank, degree)
    }

    fn signed_u_term(&self, k: i64) -> i64 {
        let (rank, degree) = self.u_rank_deg(k);
        let sign = if k % 2 == 0 { -1 } else { 1 };
        (self.g - 1) * rank + sign * degree
    }

    /// Morse index: twice the sum of `(g-1) rk U_k + (-1)^{k+1} deg U_k`
    /// over `2 <= k <= m-1`. Zero for every length-2 chain.
    pub fn morse_index(&self) -> i64 {
        let m = self.steps.len() as i64;
        2 * (2..m).map(|k| self.signed_u_term(k)).sum::<i64>()
    }

    /// Complex dimension of the critical submanifold:
    /// `1 + (g-1)(rk U_1 + rk U_0) + deg U_1 - deg U_0`.
    pub fn dim_critical(&self) -> i64 {
        let (rank0, degree0) = self.u_rank_deg(0);
        let (rank1, degree1) = self.u_rank_deg(1);
        1 + (self.g - 1) * (rank1 + rank0) + degree1 - degree0
    }

    /// Complex dimension of the downward Morse flow:
    /// `1 + sum over 0 <= k <= m-1 of (g-1) rk U_k + (-1)^{k+1} deg U_k`.
    pub fn dim_downflow(&self) -> i64 {
        let m = self.steps.len() as i64;
        1 + (0..m).map(|k| self.signed_u_term(k)).sum::<i64>()
    }
}

/// Discrete invariants of a length-3 chain of line bundles, determined by
/// the component invariants `(d, d2)` and the divisor degree `m2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Length3Invariants {
    pub delta1: i64,
    pub delta2: i64,
    pub delta3: i64,
    pub m1: i64,
    pub m2: i64,
    pub g: i64,
    pub d: i64,
    pub d2: i64,
}

impl Length3Invariants {
    /// Recovers the line-bundle degrees from `m2`: the divisor degrees are
    /// `m1 = 2g-2 + delta2 - delta1` and `m2 = 2g-2 + delta3 - delta2`, with
    /// `delta2 = d2`.
    pub fn from_m2(g: i64, d: i64, d2: i64, m2: i64) -> Self {
        let m1 = m2 + 3 * d2 - d;
        let delta2 = d2;
        let delta1 = 2 * g - 2 + delta2 - m1;
        let delta3 = m2 - (2 * g - 2) + delta2;
        Length3Invariants {
            delta1,
            delta2,
            delta3,
            m1,
            m2,
            g,
            d,
            d2,
        }
    }

    /// Checks the defining relations and the admissible range of `m2`.
    pub fn is_admissible(&self) -> bool {
        self.m1 == 2 * self.g - 2 + self.delta2 - self.delta1
            && self.m2 == 2 * self.g - 2 + self.delta3 - self.delta2
            && self.m1 == self.m2 + 3 * self.d2 - self.d
            && self.delta2 == self.d2
            && self.delta1 + self.delta2 + self.delta3 == self.d
            && self.m2 >= 0
            && self.m2 <= length3_bound(self.g, self.d, self.d2)
    }

    /// The chain `(1, delta1), (1, delta2), (1, delta3)`.
    pub fn chain(&self) -> ChainType {
        ChainType::new(
            self.g,
            vec![(1, self.delta1), (1, self.delta2), (1, self.delta3)],
        )
    }
}

/// The largest admissible `m2`: `i = floor(2d/3) - 2 d2 + 2g - 2`.
pub fn length3_bound(g: i64, d: i64, d2: i64) -> i64 {
    (2 * d).div_euclid(3) - 2 * d2 + 2 * g - 2
}

fn check_normalized(g: i64, d: i64, d2: i64) -> Result<()> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    if d.rem_euclid(3) == 0 {
        return Err(Error::NotCoprime { d });
    }
    if 3 * d2 - d <= 0 || 3 * d2 > d + 3 * (g - 1) {
        return Err(Error::NotNormalized { d, d2 });
    }
    Ok(())
}

/// Enumerates the length-3 critical submanifolds of the component with
/// normalized invariants `(d, d2)`, one per `m2` in `[0, i]`.
pub fn enumerate_length3(g: i64, d: i64, d2: i64) -> Result<Vec<Length3Invariants>> {
    check_normalized(g, d, d2)?;
    let bound = length3_bound(g, d, d2);
    if bound < 0 {
        return Ok(Vec::new());
    }
    let list: Vec<_> = (0..=bound)
        .map(|m2| Length3Invariants::from_m2(g, d, d2, m2))
        .collect();
    for inv in &list {
        debug_assert!(inv.is_admissible());
        debug_assert!(inv.m1 >= 0);
        debug_assert!(3 * inv.delta3 < d);
    }
    Ok(list)
}

/// Morse index of the length-3 submanifold with divisor degree `m2`:
/// `2 (5g - 5 + d - 3 d2 - 2 m2)`.
pub fn morse_index_length3(g: i64, d: i64, d2: i64, m2: i64) -> i64 {
    2 * (5 * g - 5 + d - 3 * d2 - 2 * m2)
}

/// Poincare polynomial of the length-2 critical submanifold for normalized
/// invariants `(d, d2)`.
///
/// The bracketed rational expression is expanded as a single series in `x`,
/// the coefficient of `x^i` is extracted, multiplied by `(1+t)^{4g}`
/// (non-fixed determinant) or `(1+t)^{2g}` (fixed), and exact-divided by
/// `1 - t^2`.
pub fn n2_poincare(g: i64, d: i64, d2: i64, fixed_det: bool) -> Result<LaurentPoly> {
    check_normalized(g, d, d2)?;
    let i = length3_bound(g, d, d2);
    debug_assert!(i >= 0, "i is non-negative for normalized parameters");
    let i = i.max(0) as usize;
    let e = 10 * g - 10 + 2 * d - 6 * d2 - 4 * i as i64;

    // t^e / (x t^4 - 1) expands to -t^e * sum_k x^k t^{4k}, and
    // -t^{2i+2} / (x - t^2) expands to t^{2i} * sum_k x^k t^{-2k}.
    let from_quartic =
        SeriesX::geometric(&LaurentPoly::monomial(4), i).scale(&LaurentPoly::monomial(e));
    let from_pole = SeriesX::geometric(&LaurentPoly::monomial(-2), i)
        .scale(&LaurentPoly::monomial(2 * i as i64));
    let bracket = &(&from_pole - &from_quartic) * &symprod::generating_series(g, i);

    let exponent = if fixed_det { 2 * g } else { 4 * g };
    let prefactor = LaurentPoly::from_ints(0, &[1, 1]).pow(exponent as u64);
    let numerator = &prefactor * bracket.coeff_x(i)?;
    let result = numerator.exact_div(&LaurentPoly::from_ints(0, &[1, 0, -1]))?;

    if let Some((exp, coeff)) = result.first_negative_coeff() {
        return Err(Error::NegativeCoefficient { exp, coeff });
    }
    Ok(result)
}

/// Poincare polynomial of a length-3 critical submanifold.
///
/// Non-fixed determinant: `(1+t)^{2g} g_{m1} g_{m2}` with `g_m` the
/// symmetric-product polynomial. Fixed determinant: `g_{m1} g_{m2}` plus the
/// covering correction `C(2g-2, m1) C(2g-2, m2) (3^{2g} - 1) t^{m1 + m2}`.
pub fn n3_poincare(g: i64, inv: &Length3Invariants, fixed_det: bool) -> LaurentPoly {
    debug_assert_eq!(g, inv.g);
    debug_assert!(inv.is_admissible());
    let g1 = macdonald_poincare(SymProdQuery::new(inv.m1, g));
    let g2 = macdonald_poincare(SymProdQuery::new(inv.m2, g));
    let product = &g1 * &g2;
    if fixed_det {
        let covering = BigInt::from(3).pow(2 * g as u32) - BigInt::one();
        let coeff = binom(2 * g - 2, inv.m1) * binom(2 * g - 2, inv.m2) * covering;
        &product + &LaurentPoly::term(coeff, inv.m1 + inv.m2)
    } else {
        &LaurentPoly::from_ints(0, &[1, 1]).pow(2 * g as u64) * &product
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn u_bundle_rank_and_degree() {
        let lines = ChainType::new(2, vec![(1, 5), (1, -3), (1, 2)]);
        assert_eq!(lines.u_rank_deg(0), (3, 0));
        let chain = ChainType::new(2, vec![(1, 1), (1, 1), (1, -1)]);
        assert_eq!(chain.u_rank_deg(2), (1, -2));
        let two_step = ChainType::new(2, vec![(1, 1), (2, 4)]);
        assert_eq!(two_step.u_rank_deg(1), (2, 2));
        assert_eq!(two_step.u_rank_deg(-1), (2, -2));
    }

    #[test]
    fn morse_index_examples() {
        assert_eq!(ChainType::length2(2, 1, 1).morse_index(), 0);
        assert_eq!(ChainType::new(3, vec![(1, 7), (2, -2)]).morse_index(), 0);
        let chain = ChainType::new(2, vec![(1, 1), (1, 1), (1, -1)]);
        assert_eq!(chain.morse_index(), 6);
        for (d1, d3) in [(0, 0), (2, -1), (-1, 3)] {
            let g = 3;
            let chain = ChainType::new(g, vec![(1, d1), (1, 0), (1, d3)]);
            assert_eq!(chain.morse_index(), 2 * g - 2 + 2 * d1 - 2 * d3);
        }
    }

    #[test]
    fn dimension_examples() {
        let chain = ChainType::new(2, vec![(1, 1), (1, 1), (1, -1)]);
        assert_eq!(chain.dim_critical(), 4);
        assert_eq!(chain.dim_downflow(), 7);
        assert_eq!(
            chain.dim_downflow(),
            chain.dim_critical() + chain.morse_index() / 2
        );

        let two_step = ChainType::length2(2, 1, 1);
        assert_eq!(two_step.dim_critical(), 6);
        assert_eq!(two_step.dim_downflow(), 6);
    }

    #[test]
    fn distinct_downflow_dimensions_within_a_component() {
        let length2 = ChainType::length2(2, 1, 1);
        let length3 = Length3Invariants::from_m2(2, 1, 1, 0).chain();
        assert_ne!(length2.dim_downflow(), length3.dim_downflow());
    }

    #[test]
    fn enumeration_genus_two() {
        let list = enumerate_length3(2, 1, 1).unwrap();
        assert_eq!(list.len(), 1);
        let inv = list[0];
        assert_eq!(inv.m2, 0);
        assert_eq!(inv.m1, 2);
        assert_eq!((inv.delta1, inv.delta2, inv.delta3), (1, 1, -1));
        assert!(inv.is_admissible());

        let list = enumerate_length3(2, 2, 1).unwrap();
        assert_eq!(list.iter().map(|v| v.m2).collect::<Vec<_>>(), vec![0, 1]);

        let list = enumerate_length3(3, 1, 1).unwrap();
        assert_eq!(list.iter().map(|v| v.m2).collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn enumeration_rejects_unnormalized_input() {
        assert_eq!(
            enumerate_length3(2, 1, 0),
            Err(Error::NotNormalized { d: 1, d2: 0 })
        );
        assert_eq!(
            enumerate_length3(2, 1, 2),
            Err(Error::NotNormalized { d: 1, d2: 2 })
        );
        assert_eq!(enumerate_length3(2, 3, 2), Err(Error::NotCoprime { d: 3 }));
        assert_eq!(enumerate_length3(1, 1, 1), Err(Error::GenusTooSmall(1)));
    }

    #[test]
    fn closed_form_morse_index() {
        assert_eq!(morse_index_length3(2, 1, 1, 0), 6);
        assert_eq!(morse_index_length3(2, 2, 1, 1), 4);
        assert_eq!(morse_index_length3(2, 2, 1, 0), 8);
    }

    #[test]
    fn closed_form_matches_chain_morse_index() {
        for g in 2..=6 {
            for d in 1..=10 {
                if d % 3 == 0 {
                    continue;
                }
                for d2 in 0..=(d / 3 + g) {
                    let Ok(list) = enumerate_length3(g, d, d2) else {
                        continue;
                    };
                    for inv in list {
                        let closed = morse_index_length3(g, d, d2, inv.m2);
                        assert_eq!(closed, inv.chain().morse_index());
                        assert!(closed >= 2);
                        assert_eq!(inv.chain().dim_critical(), inv.m1 + inv.m2 + g);
                    }
                }
            }
        }
    }

    #[test]
    fn n2_genus_two_total_degree_one() {
        let expected =
            LaurentPoly::from_ints(0, &[1, 8, 29, 64, 99, 120, 126, 120, 99, 64, 29, 8, 1]);
        assert_eq!(n2_poincare(2, 1, 1, false).unwrap(), expected);
    }

    #[test]
    fn n2_fixed_has_zero_euler_characteristic() {
        let p = n2_poincare(2, 1, 1, true).unwrap();
        assert_eq!(p.eval_int(-1).unwrap(), BigInt::zero());
        let p = n2_poincare(3, 2, 2, true).unwrap();
        assert_eq!(p.eval_int(-1).unwrap(), BigInt::zero());
    }

    #[test]
    fn n2_constant_term_and_shape() {
        for (g, d, d2) in [(2, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2, 2), (4, 5, 3)] {
            for fixed in [false, true] {
                let p = n2_poincare(g, d, d2, fixed).unwrap();
                assert_eq!(p.min_exp(), 0, "min_exp for {:?}", (g, d, d2, fixed));
                assert_eq!(p.constant_term(), BigInt::one());
                assert!(!p.has_negative_coeff());
            }
        }
    }

    #[test]
    fn n2_relates_families_by_jacobian_factor() {
        for (g, d, d2) in [(2, 1, 1), (2, 2, 1), (3, 4, 2)] {
            let non_fixed = n2_poincare(g, d, d2, false).unwrap();
            let fixed = n2_poincare(g, d, d2, true).unwrap();
            let jacobian = LaurentPoly::from_ints(0, &[1, 1]).pow(2 * g as u64);
            assert_eq!(non_fixed, &jacobian * &fixed);
        }
    }

    #[test]
    fn n2_rejects_unnormalized_input() {
        assert!(matches!(
            n2_poincare(2, 1, 0, false),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn n3_examples() {
        let inv = Length3Invariants::from_m2(2, 1, 1, 0);
        assert_eq!(inv.m1, 2);

        let jacobian = LaurentPoly::from_ints(0, &[1, 4, 6, 4, 1]);
        let sym2 = LaurentPoly::from_ints(0, &[1, 4, 7, 4, 1]);
        assert_eq!(n3_poincare(2, &inv, false), &jacobian * &sym2);

        let fixed = n3_poincare(2, &inv, true);
        assert_eq!(fixed, LaurentPoly::from_ints(0, &[1, 4, 87, 4, 1]));
        assert_eq!(fixed.eval_int(-1).unwrap(), BigInt::from(81));
    }

    #[test]
    fn n3_fixed_euler_closed_form() {
        for g in 2..=4 {
            for d2 in 1..=(g - 1) {
                let d = 1;
                if 3 * d2 - d <= 0 || 3 * d2 > d + 3 * (g - 1) {
                    continue;
                }
                for inv in enumerate_length3(g, d, d2).unwrap() {
                    let value = n3_poincare(g, &inv, true).eval_int(-1).unwrap();
                    let magnitude = BigInt::from(3).pow(2 * g as u32)
                        * binom(2 * g - 2, inv.m1)
                        * binom(2 * g - 2, inv.m2);
                    let expected = if (inv.m1 + inv.m2) % 2 == 0 {
                        magnitude
                    } else {
                        -magnitude
                    };
                    assert_eq!(value, expected);

                    let non_fixed = n3_poincare(g, &inv, false);
                    assert!(non_fixed.is_palindromic());
                    assert_eq!(non_fixed.eval_int(-1).unwrap(), BigInt::zero());
                }
            }
        }
    }
}
