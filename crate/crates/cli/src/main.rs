//! Batch verification front end for the hook-statistics library: runs
//! identity suites over grids of parameters and emits human-readable
//! tables or machine-readable JSON-lines reports.
//!
//! Exit codes: 0 when nothing failed (confirmed discrepancies in published
//! formulas count as findings, not failures), 1 when an identity check
//! failed, 2 on usage or resource errors.

mod report;
mod stats;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hookstats::{
    detect_degree, exact_is_power_sum, for_each_permutation, longest_increasing,
    monte_carlo_is_moment, okada_rhs, phi, phi_e_generating_lhs, phi_e_generating_rhs, rsk,
    rsk_inverse, rsk_shape, series_equal, DegreeDetection, EjVariant, HookStatistic, Permutation,
    SeriesComparison,
};
use num_traits::ToPrimitive;
use report::{params_of, CheckReport, Runner, Sink, Status};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "hookstats",
    version,
    about = "Exact verification harness for hook-length statistics of integer partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    /// Divisor weights sigma(m)/m from the full logarithm series.
    Corrected,
    /// Divisor-count weights tau(m) as published; diverges from y^2 on.
    #[value(alias = "as_printed")]
    AsPrinted,
}

impl From<VariantArg> for EjVariant {
    fn from(v: VariantArg) -> EjVariant {
        match v {
            VariantArg::Corrected => EjVariant::Corrected,
            VariantArg::AsPrinted => EjVariant::AsPrinted,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the shifted-product averages against the closed product
    /// formula on the full (n, r) grid
    VerifyOkada {
        /// Largest n to check (grid runs over 1..=max-n)
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=20))]
        max_n: u32,
        /// Largest shift r to check (grid runs over 0..=max-r)
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(0..=8))]
        max_r: u32,
        /// Report format (default: human-readable; jsonl for machines)
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Check the generating identity for elementary statistics of squared
    /// hooks against the exponential product expansion
    VerifySeries {
        /// Truncation order in the outer variable
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(0..=12))]
        order: u32,
        /// Which logarithm expansion the product side uses
        #[arg(long, value_enum, default_value_t = VariantArg::Corrected)]
        variant: VariantArg,
        /// Report format (default: human-readable; jsonl for machines)
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Exercise the insertion correspondence on symmetric groups
    VerifyRsk {
        #[command(subcommand)]
        suite: RskSuite,
    },
    /// Detect the polynomial degree of an average by finite differences
    Degree {
        /// Statistic specification: p2, e1, q3, or mu=2,1
        #[arg(long)]
        statistic: String,
        /// First n to sample
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(0..=40))]
        from: u32,
        /// Last n to sample
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(0..=40))]
        to: u32,
        /// Report format (default: human-readable; jsonl for machines)
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Tabulate exact averages of a statistic over a range of n
    Table {
        /// Statistic specification: p2, e1, q3, or mu=2,1
        #[arg(long)]
        statistic: String,
        /// First n to tabulate
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(0..=40))]
        from: u32,
        /// Last n to tabulate
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(0..=40))]
        to: u32,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Write to this path instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum RskSuite {
    /// Recover every permutation of S_n from its tableau pair
    Roundtrip {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(0..=8))]
        n: u32,
        /// Report format (default: human-readable; jsonl streams one
        /// report per permutation)
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Compare first row lengths with longest increasing subsequences
    /// over all of S_n
    Schensted {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(0..=8))]
        n: u32,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Estimate a moment of is(w)/sqrt(n) by seeded sampling
    Moment {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Moment order
        #[arg(long, default_value_t = 1)]
        p: u32,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(2..))]
        samples: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(err) => {
            eprintln!("error: {:#}", err);
            std::process::exit(2);
        }
    }
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::VerifyOkada {
            max_n,
            max_r,
            format,
        } => cmd_verify_okada(max_n as usize, max_r as usize, format),
        Command::VerifySeries {
            order,
            variant,
            format,
        } => cmd_verify_series(order as usize, variant, format),
        Command::VerifyRsk { suite } => match suite {
            RskSuite::Roundtrip { n, format } => cmd_rsk_roundtrip(n as usize, format),
            RskSuite::Schensted { n, format } => cmd_rsk_schensted(n as usize, format),
            RskSuite::Moment {
                n,
                p,
                samples,
                seed,
                format,
            } => cmd_rsk_moment(n as usize, p, samples, seed, format),
        },
        Command::Degree {
            statistic,
            from,
            to,
            format,
        } => cmd_degree(&statistic, from as usize, to as usize, format),
        Command::Table {
            statistic,
            from,
            to,
            format,
            out,
        } => cmd_table(&statistic, from as usize, to as usize, format, out),
    }
}

fn report_sink(format: Option<OutputFormat>) -> Result<Sink> {
    match format {
        None => Ok(Sink::Human),
        Some(OutputFormat::Jsonl) => Ok(Sink::Jsonl),
        Some(OutputFormat::Csv) => {
            bail!("csv applies to the table subcommand; use jsonl for verification reports")
        }
    }
}

fn cmd_verify_okada(max_n: usize, max_r: usize, format: Option<OutputFormat>) -> Result<bool> {
    let mut runner = Runner::new(report_sink(format)?);
    for n in 1..=max_n {
        for r in 0..=max_r {
            let started = Instant::now();
            let lhs = phi(&HookStatistic::QProduct(r), n);
            let rhs = okada_rhs(r, n);
            let status = if lhs == rhs { Status::Pass } else { Status::Fail };
            runner.emit(
                &CheckReport {
                    check_name: "okada-product-formula",
                    params: params_of(&[("n", n), ("r", r)]),
                    status,
                    lhs: Some(lhs.to_string()),
                    rhs: Some(rhs.to_string()),
                    elapsed_ms: started.elapsed().as_millis() as u64,
                },
                true,
            );
        }
    }
    Ok(runner.finish())
}

fn cmd_verify_series(
    order: usize,
    variant: VariantArg,
    format: Option<OutputFormat>,
) -> Result<bool> {
    let mut runner = Runner::new(report_sink(format)?);
    let started = Instant::now();
    let lhs = phi_e_generating_lhs(order);
    let rhs = phi_e_generating_rhs(order, variant.into());
    let outcome = series_equal(&lhs, &rhs);
    let variant_name = match variant {
        VariantArg::Corrected => "corrected",
        VariantArg::AsPrinted => "as-printed",
    };
    let mut params = params_of(&[("order", order.to_string())]);
    params.insert("variant".to_string(), variant_name.to_string());
    let (status, lhs_s, rhs_s) = match outcome {
        SeriesComparison::Equal => (Status::Pass, None, None),
        SeriesComparison::Mismatch {
            outer_degree,
            inner_exponent,
            left,
            right,
        } => {
            params.insert("mismatch_outer".to_string(), outer_degree.to_string());
            params.insert("mismatch_inner".to_string(), inner_exponent.to_string());
            let status = match variant {
                // The published weights are known to diverge here; finding
                // the divergence confirms the erratum instead of failing.
                VariantArg::AsPrinted => Status::ErratumConfirmed,
                VariantArg::Corrected => Status::Fail,
            };
            (status, Some(left.to_string()), Some(right.to_string()))
        }
    };
    runner.emit(
        &CheckReport {
            check_name: "elementary-generating-function",
            params,
            status,
            lhs: lhs_s,
            rhs: rhs_s,
            elapsed_ms: started.elapsed().as_millis() as u64,
        },
        true,
    );
    Ok(runner.finish())
}

fn cmd_rsk_roundtrip(n: usize, format: Option<OutputFormat>) -> Result<bool> {
    let mut runner = Runner::new(report_sink(format)?);
    for_each_permutation(n, |word| {
        let started = Instant::now();
        let w = Permutation::new(word.to_vec());
        let recovered = rsk_inverse(&rsk(&w));
        let status = if recovered == w {
            Status::Pass
        } else {
            Status::Fail
        };
        runner.emit(
            &CheckReport {
                check_name: "rsk-roundtrip",
                params: params_of(&[
                    ("n", n.to_string()),
                    ("recovered", recovered.to_string()),
                    ("word", w.to_string()),
                ]),
                status,
                lhs: None,
                rhs: None,
                elapsed_ms: started.elapsed().as_millis() as u64,
            },
            false,
        );
    });
    Ok(runner.finish())
}

fn cmd_rsk_schensted(n: usize, format: Option<OutputFormat>) -> Result<bool> {
    let mut runner = Runner::new(report_sink(format)?);
    let started = Instant::now();
    let mut permutations = 0u64;
    let mut mismatches = 0u64;
    for_each_permutation(n, |word| {
        permutations += 1;
        let first_row = rsk_shape(&Permutation::new(word.to_vec())).first_part();
        if first_row != longest_increasing(word) {
            mismatches += 1;
        }
    });
    let status = if mismatches == 0 {
        Status::Pass
    } else {
        Status::Fail
    };
    runner.emit(
        &CheckReport {
            check_name: "rsk-schensted",
            params: params_of(&[
                ("mismatches", mismatches),
                ("n", n as u64),
                ("permutations", permutations),
            ]),
            status,
            lhs: None,
            rhs: None,
            elapsed_ms: started.elapsed().as_millis() as u64,
        },
        true,
    );
    Ok(runner.finish())
}

fn cmd_rsk_moment(
    n: usize,
    p: u32,
    samples: u64,
    seed: u64,
    format: Option<OutputFormat>,
) -> Result<bool> {
    let mut runner = Runner::new(report_sink(format)?);
    let started = Instant::now();
    let estimate = monte_carlo_is_moment(n, p, samples, seed);
    let mut params = params_of(&[
        ("mean", estimate.mean.to_string()),
        ("n", n.to_string()),
        ("p", p.to_string()),
        ("samples", samples.to_string()),
        ("seed", seed.to_string()),
        ("std_error", estimate.std_error.to_string()),
    ]);
    // Small n admits an exhaustive reference; n = 100 with p = 1 has a
    // documented bracket for the mean; anything else is an estimate with
    // nothing to check against.
    let status = if n <= 8 {
        let total = exact_is_power_sum(p, n)
            .to_f64()
            .expect("moment sums over S_8 fit in f64");
        let order = (1..=n as u64).product::<u64>() as f64;
        let exact = total / order / (n as f64).powf(p as f64 / 2.0);
        params.insert("exact_mean".to_string(), exact.to_string());
        if (estimate.mean - exact).abs() <= 3.0 * estimate.std_error {
            Status::Pass
        } else {
            Status::Fail
        }
    } else if n == 100 && p == 1 {
        params.insert("bracket".to_string(), "[1.5, 1.9]".to_string());
        if (1.5..=1.9).contains(&estimate.mean) {
            Status::Pass
        } else {
            Status::Fail
        }
    } else {
        Status::Inconclusive
    };
    runner.emit(
        &CheckReport {
            check_name: "rsk-moment",
            params,
            status,
            lhs: None,
            rhs: None,
            elapsed_ms: started.elapsed().as_millis() as u64,
        },
        true,
    );
    Ok(runner.finish())
}

fn cmd_degree(
    statistic: &str,
    from: usize,
    to: usize,
    format: Option<OutputFormat>,
) -> Result<bool> {
    let mut runner = Runner::new(report_sink(format)?);
    let stat = stats::parse_statistic(statistic).map_err(anyhow::Error::msg)?;
    if from > to {
        bail!("--from {} exceeds --to {}", from, to);
    }
    let started = Instant::now();
    let values: Vec<_> = (from..=to).map(|n| phi(&stat, n)).collect();
    let detection = detect_degree(&values);
    let expected = stats::expected_degree(&stat);
    let status = match (&detection, &expected) {
        (DegreeDetection::Inconclusive, _) => Status::Inconclusive,
        (DegreeDetection::Degree(d), stats::ExpectedDegree::Exactly(e)) => {
            if d == e {
                Status::Pass
            } else {
                Status::Fail
            }
        }
        (DegreeDetection::Degree(d), stats::ExpectedDegree::AtMost(b)) => {
            if d <= b {
                Status::Pass
            } else {
                Status::Fail
            }
        }
        (DegreeDetection::Degree(_), stats::ExpectedDegree::Unspecified) => Status::Pass,
    };
    runner.emit(
        &CheckReport {
            check_name: "degree-detection",
            params: params_of(&[
                ("detected", detection.to_string()),
                ("expected", expected.describe()),
                ("from", from.to_string()),
                ("statistic", stat.to_string()),
                ("to", to.to_string()),
            ]),
            status,
            lhs: None,
            rhs: None,
            elapsed_ms: started.elapsed().as_millis() as u64,
        },
        true,
    );
    Ok(runner.finish())
}

#[derive(Serialize)]
struct TableRow<'a> {
    statistic: &'a str,
    n: usize,
    value: String,
}

fn cmd_table(
    statistic: &str,
    from: usize,
    to: usize,
    format: OutputFormat,
    out: Option<PathBuf>,
) -> Result<bool> {
    let stat = stats::parse_statistic(statistic).map_err(anyhow::Error::msg)?;
    if from > to {
        bail!("--from {} exceeds --to {}", from, to);
    }
    let name = stat.to_string();
    let mut buffer = String::new();
    match format {
        OutputFormat::Csv => {
            buffer.push_str("n,value\n");
            for n in from..=to {
                writeln!(buffer, "{},{}", n, phi(&stat, n)).expect("string writes");
            }
        }
        OutputFormat::Jsonl => {
            for n in from..=to {
                let row = TableRow {
                    statistic: &name,
                    n,
                    value: phi(&stat, n).to_string(),
                };
                writeln!(buffer, "{}", serde_json::to_string(&row).expect("rows serialize"))
                    .expect("string writes");
            }
        }
    }
    match out {
        Some(path) => std::fs::write(&path, buffer)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{}", buffer),
    }
    Ok(true)
}
