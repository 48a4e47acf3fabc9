//! JSON schema for machine-readable output.
//!
//! The structs here pin the wire format: field names and their order are
//! stable, Euler characteristics are decimal strings so arbitrarily large
//! values survive parsers that read numbers as floats, and polynomials use
//! the `{"min_exp": ..., "coeffs": [...]}` encoding from the library.

use serde::{Deserialize, Serialize};
use u21topo::{ComponentReport, CriticalKind, CriticalReport, LaurentPoly};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ReportJson {
    pub params: ParamsJson,
    pub normalized: NormalizedJson,
    pub criticals: Vec<CriticalJson>,
    pub poincare: LaurentPoly,
    pub euler: String,
    pub checks: Vec<CheckJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ParamsJson {
    pub g: i64,
    pub d1: i64,
    pub d2: i64,
    pub fixed_det: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct NormalizedJson {
    pub g: i64,
    pub d: i64,
    pub d2: i64,
    pub dualized: bool,
    pub tensor_shift: i64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CriticalJson {
    pub kind: String,
    pub m2: Option<i64>,
    pub morse_index: i64,
    pub dim_critical: i64,
    pub dim_downflow: i64,
    pub poincare: LaurentPoly,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckJson {
    pub name: String,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct EulerJson {
    pub params: ParamsJson,
    pub euler: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ComponentsJson {
    pub genus: i64,
    pub degree: i64,
    pub components: Vec<ReportJson>,
}

impl From<&ComponentReport> for ReportJson {
    fn from(report: &ComponentReport) -> Self {
        ReportJson {
            params: ParamsJson {
                g: report.params.g,
                d1: report.params.d1,
                d2: report.params.d2,
                fixed_det: report.params.fixed_det,
            },
            normalized: NormalizedJson {
                g: report.normalized.g,
                d: report.normalized.d,
                d2: report.normalized.d2,
                dualized: report.normalized.dualized,
                tensor_shift: report.normalized.tensor_shift,
            },
            criticals: report.criticals.iter().map(CriticalJson::from).collect(),
            poincare: report.poincare.clone(),
            euler: report.euler.to_string(),
            checks: report
                .checks
                .iter()
                .map(|check| CheckJson {
                    name: check.name.to_string(),
                    pass: check.pass,
                })
                .collect(),
        }
    }
}

impl From<&CriticalReport> for CriticalJson {
    fn from(critical: &CriticalReport) -> Self {
        let kind = match critical.kind {
            CriticalKind::Length2 { .. } => "length2",
            CriticalKind::Length3 { .. } => "length3",
        };
        CriticalJson {
            kind: kind.to_string(),
            m2: critical.m2(),
            morse_index: critical.morse_index,
            dim_critical: critical.dim_critical,
            dim_downflow: critical.dim_downflow,
            poincare: critical.poincare.clone(),
        }
    }
}

/// Pretty-prints a serializable value with a trailing newline.
pub fn pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("schema types always serialize");
    out.push('\n');
    out
}
