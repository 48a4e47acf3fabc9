//! Output rendering for every subcommand and format.
//!
//! Text output reuses the library's `Display` implementation for
//! polynomials.  LaTeX output writes math-mode expressions with ascending
//! exponents in `t^{k}` form.  CSV output quotes through the `csv` crate so
//! polynomial cells survive commas in future schema changes.

use std::fmt::Write as _;

use u21topo::{ComponentReport, CriticalKind, CriticalReport, LaurentPoly};

use crate::json::{self, ComponentsJson, EulerJson, ReportJson};
use crate::verify::VerifySummary;
use crate::Format;

/// Renders a Laurent polynomial as a math-mode LaTeX expression, terms in
/// ascending exponent order.
pub fn poly_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (exp, coeff) in p.terms() {
        let negative = coeff.sign() == num_bigint::Sign::Minus;
        let magnitude = coeff.magnitude();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let power = match exp {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{{{exp}}}"),
        };
        let unit_coeff = magnitude == &num_bigint::BigUint::from(1u8);
        if power.is_empty() {
            write!(out, "{magnitude}").unwrap();
        } else if unit_coeff {
            out.push_str(&power);
        } else {
            write!(out, "{magnitude}\\,{power}").unwrap();
        }
    }
    out
}

fn family(fixed_det: bool) -> &'static str {
    if fixed_det {
        "SU(2,1)"
    } else {
        "U(2,1)"
    }
}

fn critical_label(critical: &CriticalReport) -> String {
    match critical.m2() {
        None => "length2".to_string(),
        Some(m2) => format!("length3 m2={m2}"),
    }
}

fn critical_latex_label(critical: &CriticalReport) -> String {
    match critical.m2() {
        None => "F_{2}".to_string(),
        Some(m2) => format!("F_{{3,{m2}}}"),
    }
}

fn params_line(report: &ComponentReport) -> String {
    format!(
        "g={} d1={} d2={} family={}",
        report.params.g,
        report.params.d1,
        report.params.d2,
        family(report.params.fixed_det)
    )
}

fn report_text(report: &ComponentReport) -> String {
    let mut out = String::new();
    writeln!(out, "component {}", params_line(report)).unwrap();
    writeln!(
        out,
        "normalized: d={} d2={} dualized={} tensor_shift={}",
        report.normalized.d,
        report.normalized.d2,
        report.normalized.dualized,
        report.normalized.tensor_shift
    )
    .unwrap();
    writeln!(out, "criticals: {}", report.criticals.len()).unwrap();
    for critical in &report.criticals {
        writeln!(
            out,
            "  {} morse_index={} dim_critical={} dim_downflow={}",
            critical_label(critical),
            critical.morse_index,
            critical.dim_critical,
            critical.dim_downflow
        )
        .unwrap();
        if let CriticalKind::Length2 { triple } = &critical.kind {
            writeln!(
                out,
                "    triple: alpha={} rank=({},{}) deg=({},{})",
                triple.alpha, triple.rank_e1, triple.rank_e2, triple.deg_e1, triple.deg_e2
            )
            .unwrap();
        }
        writeln!(out, "    poincare: {}", critical.poincare).unwrap();
    }
    writeln!(out, "poincare: {}", report.poincare).unwrap();
    writeln!(out, "euler: {}", report.euler).unwrap();
    writeln!(out, "checks:").unwrap();
    for check in &report.checks {
        let verdict = if check.pass { "pass" } else { "FAIL" };
        writeln!(out, "  {}: {}", check.name, verdict).unwrap();
    }
    out
}

fn report_latex(report: &ComponentReport) -> String {
    let mut out = String::new();
    writeln!(out, "% component {}", params_line(report)).unwrap();
    for critical in &report.criticals {
        writeln!(
            out,
            "P_t({}) = {}",
            critical_latex_label(critical),
            poly_latex(&critical.poincare)
        )
        .unwrap();
    }
    writeln!(out, "P_t(M) = {}", poly_latex(&report.poincare)).unwrap();
    writeln!(out, "\\chi(M) = {}", report.euler).unwrap();
    out
}

fn report_csv(report: &ComponentReport) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "kind",
            "m2",
            "morse_index",
            "dim_critical",
            "dim_downflow",
            "poincare",
        ])
        .unwrap();
    for critical in &report.criticals {
        let kind = match critical.kind {
            CriticalKind::Length2 { .. } => "length2",
            CriticalKind::Length3 { .. } => "length3",
        };
        writer
            .write_record([
                kind.to_string(),
                critical.m2().map_or(String::new(), |m2| m2.to_string()),
                critical.morse_index.to_string(),
                critical.dim_critical.to_string(),
                critical.dim_downflow.to_string(),
                critical.poincare.to_string(),
            ])
            .unwrap();
    }
    writer
        .write_record([
            "total".to_string(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            report.poincare.to_string(),
        ])
        .unwrap();
    finish_csv(writer)
}

fn finish_csv(writer: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(writer.into_inner().expect("csv buffer flush")).expect("csv output is utf-8")
}

/// Renders the full report for the `poincare` subcommand.
pub fn report(report: &ComponentReport, format: Format) -> String {
    match format {
        Format::Text => report_text(report),
        Format::Json => json::pretty(&ReportJson::from(report)),
        Format::Latex => report_latex(report),
        Format::Csv => report_csv(report),
    }
}

/// Renders the component listing for the `components` subcommand.
pub fn components(genus: i64, degree: i64, reports: &[ComponentReport], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "components g={} d={}: {}",
                genus,
                degree,
                reports.len()
            )
            .unwrap();
            for report in reports {
                writeln!(
                    out,
                    "  d2={}: normalized(d={} d2={} dualized={} tensor_shift={}) criticals={} max_degree={} euler={}",
                    report.params.d2,
                    report.normalized.d,
                    report.normalized.d2,
                    report.normalized.dualized,
                    report.normalized.tensor_shift,
                    report.criticals.len(),
                    report.poincare.max_exp(),
                    report.euler
                )
                .unwrap();
            }
            out
        }
        Format::Json => json::pretty(&ComponentsJson {
            genus,
            degree,
            components: reports.iter().map(ReportJson::from).collect(),
        }),
        Format::Latex => {
            let mut out = String::new();
            writeln!(out, "% components g={genus} d={degree}").unwrap();
            for report in reports {
                writeln!(
                    out,
                    "P_t(M_{{{},{}}}) = {}",
                    report.params.d1,
                    report.params.d2,
                    poly_latex(&report.poincare)
                )
                .unwrap();
            }
            out
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record([
                    "g",
                    "d1",
                    "d2",
                    "normalized_d",
                    "normalized_d2",
                    "dualized",
                    "tensor_shift",
                    "criticals",
                    "euler",
                    "poincare",
                ])
                .unwrap();
            for report in reports {
                writer
                    .write_record([
                        report.params.g.to_string(),
                        report.params.d1.to_string(),
                        report.params.d2.to_string(),
                        report.normalized.d.to_string(),
                        report.normalized.d2.to_string(),
                        report.normalized.dualized.to_string(),
                        report.normalized.tensor_shift.to_string(),
                        report.criticals.len().to_string(),
                        report.euler.to_string(),
                        report.poincare.to_string(),
                    ])
                    .unwrap();
            }
            finish_csv(writer)
        }
    }
}

/// Renders the Euler characteristic for the `euler` subcommand.
pub fn euler(report: &ComponentReport, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", report.euler),
        Format::Json => {
            let full = ReportJson::from(report);
            json::pretty(&EulerJson {
                params: full.params,
                euler: full.euler,
            })
        }
        Format::Latex => format!("\\chi(M) = {}\n", report.euler),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["g", "d1", "d2", "fixed_det", "euler"])
                .unwrap();
            writer
                .write_record([
                    report.params.g.to_string(),
                    report.params.d1.to_string(),
                    report.params.d2.to_string(),
                    report.params.fixed_det.to_string(),
                    report.euler.to_string(),
                ])
                .unwrap();
            finish_csv(writer)
        }
    }
}

fn verify_text(summary: &VerifySummary) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "verify genus={} degree={} family={}",
        summary.genus,
        summary.degree,
        family(summary.fixed_det)
    )
    .unwrap();
    writeln!(
        out,
        "components: {} (both determinant families checked)",
        summary.outcomes.len()
    )
    .unwrap();
    if summary.skipped_degrees.is_empty() {
        writeln!(out, "skipped degrees: none").unwrap();
    } else {
        let skipped: Vec<String> = summary.skipped_degrees.iter().map(i64::to_string).collect();
        writeln!(
            out,
            "skipped degrees (divisible by 3): {}",
            skipped.join(", ")
        )
        .unwrap();
    }
    for outcome in &summary.outcomes {
        let passed = outcome.checks.iter().filter(|(_, pass)| *pass).count();
        writeln!(
            out,
            "  g={} d={} d2={} euler={} checks={}/{}",
            outcome.g,
            outcome.d,
            outcome.d2,
            outcome.euler,
            passed,
            outcome.checks.len()
        )
        .unwrap();
    }
    writeln!(out, "checks:").unwrap();
    for (name, pass_count, fail_count) in &summary.counts {
        writeln!(out, "  {name}: {pass_count} pass, {fail_count} fail").unwrap();
    }
    if summary.failures.is_empty() {
        writeln!(out, "failures: none").unwrap();
    } else {
        writeln!(out, "failures:").unwrap();
        for failure in &summary.failures {
            writeln!(
                out,
                "  g={} d={} d2={}: {}",
                failure.g, failure.d, failure.d2, failure.check
            )
            .unwrap();
        }
    }
    writeln!(
        out,
        "result: {}",
        if summary.pass { "PASS" } else { "FAIL" }
    )
    .unwrap();
    out
}

#[derive(serde::Serialize)]
struct VerifyJson<'a> {
    genus: String,
    degree: String,
    fixed_det: bool,
    components: usize,
    skipped_degrees: &'a [i64],
    component_results: Vec<VerifyComponentJson>,
    checks: Vec<VerifyCheckJson<'a>>,
    failures: Vec<VerifyFailureJson<'a>>,
    pass: bool,
}

#[derive(serde::Serialize)]
struct VerifyComponentJson {
    g: i64,
    d: i64,
    d2: i64,
    euler: String,
    pass: bool,
}

#[derive(serde::Serialize)]
struct VerifyCheckJson<'a> {
    name: &'a str,
    pass_count: usize,
    fail_count: usize,
}

#[derive(serde::Serialize)]
struct VerifyFailureJson<'a> {
    g: i64,
    d: i64,
    d2: i64,
    check: &'a str,
}

fn verify_json(summary: &VerifySummary) -> String {
    json::pretty(&VerifyJson {
        genus: summary.genus.to_string(),
        degree: summary.degree.to_string(),
        fixed_det: summary.fixed_det,
        components: summary.outcomes.len(),
        skipped_degrees: &summary.skipped_degrees,
        component_results: summary
            .outcomes
            .iter()
            .map(|outcome| VerifyComponentJson {
                g: outcome.g,
                d: outcome.d,
                d2: outcome.d2,
                euler: outcome.euler.to_string(),
                pass: outcome.pass(),
            })
            .collect(),
        checks: summary
            .counts
            .iter()
            .map(|(name, pass_count, fail_count)| VerifyCheckJson {
                name,
                pass_count: *pass_count,
                fail_count: *fail_count,
            })
            .collect(),
        failures: summary
            .failures
            .iter()
            .map(|failure| VerifyFailureJson {
                g: failure.g,
                d: failure.d,
                d2: failure.d2,
                check: &failure.check,
            })
            .collect(),
        pass: summary.pass,
    })
}

fn verify_latex(summary: &VerifySummary) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "% verify genus={} degree={} family={}",
        summary.genus,
        summary.degree,
        family(summary.fixed_det)
    )
    .unwrap();
    for outcome in &summary.outcomes {
        writeln!(
            out,
            "P_t(M^{{({})}}_{{{},{}}}) = {}",
            outcome.g,
            outcome.d - outcome.d2,
            outcome.d2,
            poly_latex(&outcome.poincare)
        )
        .unwrap();
    }
    writeln!(
        out,
        "% result: {}",
        if summary.pass { "PASS" } else { "FAIL" }
    )
    .unwrap();
    out
}

/// Per-component CSV table for `verify`, shared by `--format csv` and
/// `--export-csv`.
pub fn verify_csv(summary: &VerifySummary) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["g", "d", "d2", "fixed_det", "euler", "pass", "poincare"])
        .unwrap();
    for outcome in &summary.outcomes {
        writer
            .write_record([
                outcome.g.to_string(),
                outcome.d.to_string(),
                outcome.d2.to_string(),
                summary.fixed_det.to_string(),
                outcome.euler.to_string(),
                outcome.pass().to_string(),
                outcome.poincare.to_string(),
            ])
            .unwrap();
    }
    finish_csv(writer)
}

/// Renders the sweep summary for the `verify` subcommand.
pub fn verify(summary: &VerifySummary, format: Format) -> String {
    match format {
        Format::Text => verify_text(summary),
        Format::Json => verify_json(summary),
        Format::Latex => verify_latex(summary),
        Format::Csv => verify_csv(summary),
    }
}
