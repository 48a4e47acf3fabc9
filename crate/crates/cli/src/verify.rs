//! The `verify` sweep: re-derives every component in a genus and degree
//! window and re-runs the library's consistency checks on each one.
//!
//! Components are checked for both determinant families.  On top of the
//! checks recorded in each component report, the sweep adds cross-component
//! checks: Serre duality must leave the Poincaré polynomial unchanged, the
//! torsion action must be trivial on the length-2 stratum, symmetric-product
//! polynomials must be palindromic and satisfy the binomial evaluation
//! identity, and every length-3 Morse index must be positive.
//!
//! The check list per component is a fixed ordered set, the component list
//! is sorted by `(g, d, d2)`, and aggregation walks those orders, so output
//! is byte deterministic regardless of thread count.

use num_bigint::BigInt;
use rayon::prelude::*;
use u21topo::{
    check_names, component_poincare, enumerate_components, macdonald_euler_check,
    macdonald_poincare, torsion_length2_defect, ComponentReport, CriticalKind, LaurentPoly,
    ModuliParams, SymProdQuery,
};

use crate::RangeArg;

pub const COMPONENT_COMPUTES: &str = "component_computes";
pub const DUALITY_INVARIANCE: &str = "duality_invariance";
pub const TORSION_LENGTH2_TRIVIAL: &str = "torsion_length2_trivial";
pub const MACDONALD_PALINDROME: &str = "macdonald_palindrome";
pub const MACDONALD_EULER: &str = "macdonald_euler";
pub const MORSE_INDEX_POSITIVE: &str = "morse_index_positive";

/// Every check name the sweep can emit, in reporting order.
pub const CHECK_ORDER: [&str; 14] = [
    COMPONENT_COMPUTES,
    check_names::CONSTANT_TERM_ONE,
    check_names::COEFFS_NONNEGATIVE,
    check_names::POINCARE_RESUMMATION,
    check_names::MORSE_INDEX_CLOSED_FORM,
    check_names::DIM_CRITICAL_PRODUCT,
    check_names::DOWNFLOW_OFFSET,
    check_names::EULER_ZERO,
    check_names::EULER_CLOSED_FORM,
    DUALITY_INVARIANCE,
    TORSION_LENGTH2_TRIVIAL,
    MACDONALD_PALINDROME,
    MACDONALD_EULER,
    MORSE_INDEX_POSITIVE,
];

#[derive(Debug, Clone, Copy)]
pub struct SweepSpec {
    pub genus: RangeArg,
    pub degree: RangeArg,
    /// Which determinant family supplies the displayed Euler characteristic
    /// and Poincaré polynomial.  Both families are always checked.
    pub fixed_det: bool,
}

#[derive(Debug, Clone)]
pub struct ComponentOutcome {
    pub g: i64,
    pub d: i64,
    pub d2: i64,
    pub euler: BigInt,
    pub poincare: LaurentPoly,
    pub checks: Vec<(String, bool)>,
}

impl ComponentOutcome {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|(_, pass)| *pass)
    }
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub g: i64,
    pub d: i64,
    pub d2: i64,
    pub check: String,
}

#[derive(Debug, Clone)]
pub struct VerifySummary {
    pub genus: RangeArg,
    pub degree: RangeArg,
    pub fixed_det: bool,
    pub outcomes: Vec<ComponentOutcome>,
    pub skipped_degrees: Vec<i64>,
    /// Per check name: `(name, pass_count, fail_count)` in `CHECK_ORDER`.
    pub counts: Vec<(String, usize, usize)>,
    pub failures: Vec<Failure>,
    pub pass: bool,
}

fn dual_matches(params: &ModuliParams, reference: &ComponentReport) -> bool {
    let dual = ModuliParams {
        g: params.g,
        d1: -params.d1,
        d2: -params.d2,
        fixed_det: params.fixed_det,
    };
    match component_poincare(&dual) {
        Ok(report) => report.poincare == reference.poincare && report.euler == reference.euler,
        Err(_) => false,
    }
}

fn check_component(g: i64, d: i64, d2: i64, display_fixed: bool) -> ComponentOutcome {
    let base = ModuliParams {
        g,
        d1: d - d2,
        d2,
        fixed_det: false,
    };
    let fixed = ModuliParams {
        fixed_det: true,
        ..base
    };
    let (plain_report, fixed_report) = match (component_poincare(&base), component_poincare(&fixed))
    {
        (Ok(plain), Ok(fixed)) => (plain, fixed),
        _ => {
            return ComponentOutcome {
                g,
                d,
                d2,
                euler: BigInt::from(0),
                poincare: LaurentPoly::zero(),
                checks: vec![(COMPONENT_COMPUTES.to_string(), false)],
            }
        }
    };

    let mut checks = vec![(COMPONENT_COMPUTES.to_string(), true)];
    for name in CHECK_ORDER {
        let mut pass = true;
        let mut seen = false;
        for check in plain_report.checks.iter().chain(fixed_report.checks.iter()) {
            if check.name == name {
                seen = true;
                pass &= check.pass;
            }
        }
        if seen {
            checks.push((name.to_string(), pass));
        }
    }

    checks.push((
        DUALITY_INVARIANCE.to_string(),
        dual_matches(&base, &plain_report) && dual_matches(&fixed, &fixed_report),
    ));
    checks.push((
        TORSION_LENGTH2_TRIVIAL.to_string(),
        torsion_length2_defect(g, base.d1, d2).is_ok_and(|defect| defect.is_zero()),
    ));

    let mut palindrome_ok = true;
    let mut euler_identity_ok = true;
    let mut morse_positive = true;
    for critical in &plain_report.criticals {
        if let CriticalKind::Length3 { invariants } = &critical.kind {
            for m in [invariants.m1, invariants.m2] {
                let query = SymProdQuery::new(m, g);
                palindrome_ok &= macdonald_poincare(query).is_palindromic();
                euler_identity_ok &= macdonald_euler_check(query);
            }
            morse_positive &= critical.morse_index > 0;
        }
    }
    checks.push((MACDONALD_PALINDROME.to_string(), palindrome_ok));
    checks.push((MACDONALD_EULER.to_string(), euler_identity_ok));
    checks.push((MORSE_INDEX_POSITIVE.to_string(), morse_positive));

    let display = if display_fixed {
        &fixed_report
    } else {
        &plain_report
    };
    ComponentOutcome {
        g,
        d,
        d2,
        euler: display.euler.clone(),
        poincare: display.poincare.clone(),
        checks,
    }
}

/// Runs the sweep, optionally on a dedicated thread pool of the given size.
pub fn run_sweep(spec: &SweepSpec, threads: Option<usize>) -> VerifySummary {
    let mut jobs = Vec::new();
    let mut skipped_degrees = Vec::new();
    for d in spec.degree.iter() {
        if d.rem_euclid(3) == 0 {
            skipped_degrees.push(d);
            continue;
        }
        for g in spec.genus.iter() {
            let labels = enumerate_components(g, d).expect("caller validated genus and degree");
            for d2 in labels {
                jobs.push((g, d, d2));
            }
        }
    }
    jobs.sort_unstable();

    let display_fixed = spec.fixed_det;
    let sweep = || {
        jobs.par_iter()
            .map(|&(g, d, d2)| check_component(g, d, d2, display_fixed))
            .collect::<Vec<_>>()
    };
    let outcomes = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("sweep thread pool")
            .install(sweep),
        None => sweep(),
    };

    let mut counts = Vec::new();
    for name in CHECK_ORDER {
        let mut pass_count = 0;
        let mut fail_count = 0;
        for outcome in &outcomes {
            for (check_name, pass) in &outcome.checks {
                if check_name == name {
                    if *pass {
                        pass_count += 1;
                    } else {
                        fail_count += 1;
                    }
                }
            }
        }
        if pass_count + fail_count > 0 {
            counts.push((name.to_string(), pass_count, fail_count));
        }
    }

    let mut failures = Vec::new();
    for outcome in &outcomes {
        for (check_name, pass) in &outcome.checks {
            if !*pass {
                failures.push(Failure {
                    g: outcome.g,
                    d: outcome.d,
                    d2: outcome.d2,
                    check: check_name.clone(),
                });
            }
        }
    }
    let pass = failures.is_empty();

    VerifySummary {
        genus: spec.genus,
        degree: spec.degree,
        fixed_det: spec.fixed_det,
        outcomes,
        skipped_degrees,
        counts,
        failures,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn range(lo: i64, hi: i64) -> RangeArg {
        RangeArg { lo, hi }
    }

    #[test]
    fn small_sweep_passes_every_check() {
        let summary = run_sweep(
            &SweepSpec {
                genus: range(2, 2),
                degree: range(1, 2),
                fixed_det: false,
            },
            None,
        );
        assert_eq!(summary.outcomes.len(), 4);
        assert!(summary.skipped_degrees.is_empty());
        assert!(summary.pass);
        assert!(summary.failures.is_empty());
        assert_eq!(summary.counts.len(), CHECK_ORDER.len());
        for (name, pass_count, fail_count) in &summary.counts {
            assert_eq!(*fail_count, 0, "check {name} failed");
            assert_eq!(*pass_count, 4);
        }
    }

    #[test]
    fn degrees_divisible_by_three_are_skipped() {
        let summary = run_sweep(
            &SweepSpec {
                genus: range(2, 2),
                degree: range(3, 3),
                fixed_det: false,
            },
            None,
        );
        assert!(summary.outcomes.is_empty());
        assert_eq!(summary.skipped_degrees, vec![3]);
        assert!(summary.pass);
    }

    #[test]
    fn fixed_family_display_shows_the_euler_cross_check() {
        let summary = run_sweep(
            &SweepSpec {
                genus: range(2, 2),
                degree: range(1, 1),
                fixed_det: true,
            },
            None,
        );
        let eulers: Vec<String> = summary
            .outcomes
            .iter()
            .map(|outcome| format!("d2={} euler={}", outcome.d2, outcome.euler))
            .collect();
        assert_eq!(eulers, vec!["d2=0 euler=-324", "d2=1 euler=81"]);
    }

    #[test]
    fn thread_count_does_not_change_the_summary() {
        let spec = SweepSpec {
            genus: range(2, 3),
            degree: range(1, 2),
            fixed_det: false,
        };
        let serial = run_sweep(&spec, Some(1));
        let parallel = run_sweep(&spec, Some(4));
        assert_eq!(serial.outcomes.len(), parallel.outcomes.len());
        for (a, b) in serial.outcomes.iter().zip(parallel.outcomes.iter()) {
            assert_eq!((a.g, a.d, a.d2), (b.g, b.d, b.d2));
            assert_eq!(a.euler, b.euler);
            assert_eq!(a.poincare, b.poincare);
            assert_eq!(a.checks, b.checks);
        }
        assert_eq!(serial.counts, parallel.counts);
    }

    #[test]
    fn outcomes_are_sorted_lexicographically() {
        let summary = run_sweep(
            &SweepSpec {
                genus: range(2, 3),
                degree: range(1, 4),
                fixed_det: false,
            },
            None,
        );
        let keys: Vec<(i64, i64, i64)> = summary
            .outcomes
            .iter()
            .map(|outcome| (outcome.g, outcome.d, outcome.d2))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        assert_eq!(summary.skipped_degrees, vec![3]);
    }
}
