use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use sdpdeg::record::{write_csv, write_json, OutputRecord};
use sdpdeg::table::{check_duality, compute_table, DualityError};
use sdpdeg::verify::{run_suite, Suite, VerifyConfig};
use sdpdeg::{exit, exit_code_for};
use sdpdeg_core::degree::{delta, validate_triple, DeltaOptions, Method, SamplePoints};

/// Algebraic degree δ(m, n, r) of semidefinite programming, computed exactly.
///
/// A triple is valid when 1 <= r <= n-1 and m lies in the Pataki range
/// C(n-r+1,2) <= m <= C(n+1,2) - C(r+1,2). Ranks 0 and n are rejected.
///
/// Exit codes: 0 success, 1 verification failure, 2 invalid input,
/// 3 method disagreement or duality violation.
#[derive(Parser)]
#[command(name = "sdpdeg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute δ for one triple.
    Value {
        m: u32,
        n: u32,
        r: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Confirm the value with an independent second route.
        #[arg(long)]
        check: bool,
        /// Sample points for the residue route, e.g. `--lambda 1,5,-2,7`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compute δ for every valid (m, r) at this n, ordered by (r, m).
    Table {
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Recompute every row and its dual partner by the residue route and compare.
        #[arg(long)]
        check_duality: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Cross-check every row with a second route.
        #[arg(long)]
        check: bool,
    },
    /// Run property suites and report pass/fail counts.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest n for the cross-methods suite.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(2..))]
        max_n: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Theorem1,
    Residue,
    Closed,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Theorem1 => Method::Theorem1,
            MethodArg::Residue => Method::Residue,
            MethodArg::Closed => Method::Closed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Lemma21,
    Prop22,
    Identities,
    CrossMethods,
}

fn emit(records: &[OutputRecord], format: Format) -> Result<()> {
    let mut out = io::stdout().lock();
    match format {
        Format::Csv => write_csv(&mut out, records)?,
        Format::Json => write_json(&mut out, records)?,
    }
    out.flush()?;
    Ok(())
}

fn cmd_value(m: u32, n: u32, r: u32, opts: DeltaOptions, format: Format) -> Result<u8> {
    let t = validate_triple(m, n, r)?;
    let res = delta(&t, &opts)?;
    emit(&[OutputRecord::from(&res)], format)?;
    if let Some(second) = res.cross_checked {
        eprintln!("verified: {} agrees with {}", second, res.method);
    }
    Ok(exit::SUCCESS)
}

fn cmd_table(n: u32, opts: DeltaOptions, duality: bool, format: Format) -> Result<u8> {
    let records = compute_table(n, &opts)?;
    if duality {
        let violations = check_duality(&records)?;
        if !violations.is_empty() {
            return Err(DualityError(violations).into());
        }
        eprintln!("duality holds for all {} rows", records.len());
    }
    emit(&records, format)?;
    Ok(exit::SUCCESS)
}

fn cmd_verify(suite: SuiteArg, cfg: VerifyConfig) -> u8 {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Lemma21 => vec![Suite::Lemma21],
        SuiteArg::Prop22 => vec![Suite::Prop22],
        SuiteArg::Identities => vec![Suite::Identities],
        SuiteArg::CrossMethods => vec![Suite::CrossMethods],
    };
    let mut ok = true;
    for s in suites {
        let rep = run_suite(s, &cfg);
        println!("{rep}");
        ok &= rep.ok();
    }
    if ok {
        exit::SUCCESS
    } else {
        exit::FAILURE
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Value { m, n, r, method, check, lambda, format } => {
            let points = lambda
                .map(|l| {
                    anyhow::ensure!(l.len() == n as usize, "--lambda needs {n} values, got {}", l.len());
                    SamplePoints::from_integers(&l).context("invalid --lambda")
                })
                .transpose()?;
            cmd_value(m, n, r, DeltaOptions { method: method.into(), cross_check: check, points }, format)
        }
        Command::Table { n, format, check_duality, method, check } => {
            cmd_table(n, DeltaOptions { method: method.into(), cross_check: check, points: None }, check_duality, format)
        }
        Command::Verify { suite, seed, max_n } => Ok(cmd_verify(suite, VerifyConfig { seed, max_n })),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
