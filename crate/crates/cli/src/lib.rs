//! Command-line interface for the `u21topo` library.
//!
//! The binary exposes four subcommands:
//!
//! * `poincare` computes the full critical-submanifold report for one
//!   component, including the assembled Poincaré polynomial.
//! * `components` enumerates every component of a representation space with
//!   a fixed genus and total degree.
//! * `euler` prints the Euler characteristic of a single component.
//! * `verify` sweeps a range of genera and degrees, re-running the library's
//!   internal consistency checks on every component it finds.
//!
//! Every subcommand accepts `--format text|json|latex|csv`.  Output is byte
//! deterministic: the same invocation always produces the same bytes.
//!
//! Exit codes: `0` success, `1` verification failure, `2` invalid input or
//! usage, `3` internal arithmetic fault.

pub mod json;
pub mod render;
pub mod verify;

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use u21topo::{component_poincare, enumerate_components, Error, ModuliParams};

/// Exact topology of U(2,1) and SU(2,1) surface-group representation spaces.
#[derive(Parser, Debug)]
#[command(name = "u21topo", version, about, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Poincaré polynomial and critical-submanifold data for one component.
    Poincare(ComponentArgs),
    /// List every component for a genus and total degree.
    Components(ComponentsArgs),
    /// Euler characteristic of one component.
    Euler(ComponentArgs),
    /// Re-run the consistency checks over a range of genera and degrees.
    Verify(VerifyArgs),
}

#[derive(clap::Args, Debug)]
pub struct ComponentArgs {
    /// Genus of the surface (at least 2).
    #[arg(long)]
    pub genus: i64,
    /// Degree of the rank-2 summand.
    #[arg(long, allow_hyphen_values = true)]
    pub d1: i64,
    /// Degree of the rank-1 summand.
    #[arg(long, allow_hyphen_values = true)]
    pub d2: i64,
    /// Fix the determinant (SU(2,1) representations instead of U(2,1)).
    #[arg(long)]
    pub fixed_det: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(clap::Args, Debug)]
pub struct ComponentsArgs {
    /// Genus of the surface (at least 2).
    #[arg(long)]
    pub genus: i64,
    /// Total degree of the underlying bundle.
    #[arg(long, allow_hyphen_values = true)]
    pub degree: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Genus or inclusive genus range, e.g. `2` or `2..4`.
    #[arg(long)]
    pub genus: RangeArg,
    /// Total degree or inclusive degree range, e.g. `1` or `1..8`.
    #[arg(long)]
    pub degree: RangeArg,
    /// Report Euler characteristics for the fixed-determinant family.
    #[arg(long)]
    pub fixed_det: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also write the per-component results to a CSV file.
    #[arg(long, value_name = "PATH")]
    pub export_csv: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
    Csv,
}

/// Inclusive integer range written as `lo..hi`, or a single value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RangeArg {
    pub lo: i64,
    pub hi: i64,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |part: &str| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid integer `{part}` in range `{s}`"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        Ok(RangeArg { lo, hi })
    }
}

impl fmt::Display for RangeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl RangeArg {
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

/// Exit code for a library error: invalid input is a usage error, while a
/// broken arithmetic invariant is an internal fault.
pub fn error_exit_code(err: &Error) -> u8 {
    if err.is_internal_fault() {
        3
    } else {
        2
    }
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {}: {err}", err.name());
    ExitCode::from(error_exit_code(err))
}

fn usage(message: &str) -> ExitCode {
    eprintln!("error: usage: {message}");
    ExitCode::from(2)
}

/// Runs one parsed invocation and returns the process exit code.  All normal
/// output goes to stdout; errors go to stderr as `error: <name>: <detail>`.
pub fn run(cli: &Cli) -> ExitCode {
    match &cli.command {
        Command::Poincare(args) => run_poincare(args),
        Command::Components(args) => run_components(args),
        Command::Euler(args) => run_euler(args),
        Command::Verify(args) => run_verify(args),
    }
}

fn run_poincare(args: &ComponentArgs) -> ExitCode {
    let params = ModuliParams {
        g: args.genus,
        d1: args.d1,
        d2: args.d2,
        fixed_det: args.fixed_det,
    };
    match component_poincare(&params) {
        Ok(report) => {
            print!("{}", render::report(&report, args.format));
            ExitCode::SUCCESS
        }
        Err(err) => fail(&err),
    }
}

fn run_components(args: &ComponentsArgs) -> ExitCode {
    let labels = match enumerate_components(args.genus, args.degree) {
        Ok(labels) => labels,
        Err(err) => return fail(&err),
    };
    let mut reports = Vec::with_capacity(labels.len());
    for d2 in labels {
        let params = ModuliParams {
            g: args.genus,
            d1: args.degree - d2,
            d2,
            fixed_det: false,
        };
        match component_poincare(&params) {
            Ok(report) => reports.push(report),
            Err(err) => return fail(&err),
        }
    }
    print!(
        "{}",
        render::components(args.genus, args.degree, &reports, args.format)
    );
    ExitCode::SUCCESS
}

fn run_euler(args: &ComponentArgs) -> ExitCode {
    let params = ModuliParams {
        g: args.genus,
        d1: args.d1,
        d2: args.d2,
        fixed_det: args.fixed_det,
    };
    match component_poincare(&params) {
        Ok(report) => {
            print!("{}", render::euler(&report, args.format));
            ExitCode::SUCCESS
        }
        Err(err) => fail(&err),
    }
}

fn run_verify(args: &VerifyArgs) -> ExitCode {
    if args.genus.is_empty() {
        return usage(&format!("empty genus range `{}`", args.genus));
    }
    if args.degree.is_empty() {
        return usage(&format!("empty degree range `{}`", args.degree));
    }
    if args.genus.lo < 2 {
        return usage(&format!("genus range `{}` starts below 2", args.genus));
    }
    let spec = verify::SweepSpec {
        genus: args.genus,
        degree: args.degree,
        fixed_det: args.fixed_det,
    };
    let threads = std::env::var("U21TOPO_THREADS")
        .ok()
        .and_then(|raw| raw.parse::<usize>().ok())
        .filter(|&n| n > 0);
    let summary = verify::run_sweep(&spec, threads);
    if let Some(path) = &args.export_csv {
        let csv = render::verify_csv(&summary);
        if let Err(io) = std::fs::write(path, csv) {
            eprintln!("error: export_csv: cannot write {}: {io}", path.display());
            return ExitCode::from(2);
        }
    }
    print!("{}", render::verify(&summary, args.format));
    if summary.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_arg_parses_single_values_and_ranges() {
        assert_eq!("3".parse::<RangeArg>().unwrap(), RangeArg { lo: 3, hi: 3 });
        assert_eq!(
            "2..4".parse::<RangeArg>().unwrap(),
            RangeArg { lo: 2, hi: 4 }
        );
        assert!("2..x".parse::<RangeArg>().is_err());
        assert!("".parse::<RangeArg>().is_err());
        assert!("4..2".parse::<RangeArg>().unwrap().is_empty());
    }

    #[test]
    fn exit_codes_separate_usage_from_internal_faults() {
        assert_eq!(error_exit_code(&Error::NotCoprime { d: 3 }), 2);
        assert_eq!(error_exit_code(&Error::GenusTooSmall(1)), 2);
        assert_eq!(error_exit_code(&Error::DivisionByZero), 3);
        assert_eq!(
            error_exit_code(&Error::NonZeroRemainder {
                remainder_degree: 4
            }),
            3
        );
    }

    #[test]
    fn cli_parses_the_documented_surface() {
        let cli = Cli::try_parse_from([
            "u21topo", "poincare", "--genus", "2", "--d1", "0", "--d2", "1", "--format", "json",
        ])
        .unwrap();
        match cli.command {
            Command::Poincare(args) => {
                assert_eq!(args.genus, 2);
                assert_eq!(args.format, Format::Json);
                assert!(!args.fixed_det);
            }
            other => panic!("wrong subcommand: {other:?}"),
        }

        let cli = Cli::try_parse_from([
            "u21topo",
            "verify",
            "--genus",
            "2..4",
            "--degree",
            "1..8",
            "--fixed-det",
        ])
        .unwrap();
        match cli.command {
            Command::Verify(args) => {
                assert_eq!(args.genus, RangeArg { lo: 2, hi: 4 });
                assert_eq!(args.degree, RangeArg { lo: 1, hi: 8 });
                assert!(args.fixed_det);
            }
            other => panic!("wrong subcommand: {other:?}"),
        }
    }

    #[test]
    fn negative_degrees_parse_with_hyphen_values() {
        let cli = Cli::try_parse_from([
            "u21topo", "euler", "--genus", "2", "--d1", "-1", "--d2", "-1",
        ])
        .unwrap();
        match cli.command {
            Command::Euler(args) => assert_eq!((args.d1, args.d2), (-1, -1)),
            other => panic!("wrong subcommand: {other:?}"),
        }
    }
}
