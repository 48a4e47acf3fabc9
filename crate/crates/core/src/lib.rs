//! Exact topology of U(2,1) and SU(2,1) surface-group representation spaces.
//!
//! For a closed oriented surface of genus `g >= 2` and a degree pair
//! `(d1, d2)` with `gcd(d1 + d2, 3) = 1`, the connected component of the
//! representation space is a smooth moduli space of Higgs bundles. Its
//! Poincare polynomial follows from Morse theory of the Higgs-field norm: the
//! critical submanifolds are moduli of holomorphic triples (length-two Hodge
//! bundles) and of chains of three line bundles (length-three Hodge bundles),
//! and each contributes its own Poincare polynomial shifted by its Morse
//! index.
//!
//! Everything here is exact: coefficients are arbitrary-precision integers,
//! rational functions are expanded as truncated series, and the one division
//! in the pipeline is polynomial long division that must terminate with a
//! zero remainder.
//!
//! The crate is organized bottom-up:
//!
//! * [`poly`]: Laurent polynomials in `t` over `BigInt`.
//! * [`series`]: truncated power series in `x` with Laurent coefficients.
//! * [`symprod`]: Poincare polynomials of symmetric products of the surface.
//! * [`critical`]: critical submanifolds, their Morse indices, dimensions,
//!   and Poincare polynomials.
//! * [`moduli`]: parameter validation, component enumeration, and assembly of
//!   full component reports with Euler characteristics.

pub mod critical;
pub mod error;
pub mod moduli;
pub mod poly;
pub mod series;
pub mod symprod;

pub use critical::{
    enumerate_length3, length3_bound, morse_index_length3, n2_poincare, n3_poincare, ChainType,
    Length3Invariants,
};
pub use error::{Error, Result};
pub use moduli::{
    check_names, component_poincare, enumerate_components, euler_fixed_closed_form,
    torsion_action_defect, torsion_length2_defect, validate, Check, ComponentReport, CriticalKind,
    CriticalReport, ModuliParams, NormalizedParams, TripleModuli,
};
pub use poly::LaurentPoly;
pub use series::SeriesX;
pub use symprod::{binom, macdonald_euler_check, macdonald_poincare, SymProdQuery};
