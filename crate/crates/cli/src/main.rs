//! `lefschetz` decides the weak Lefschetz property for the monomial ideals
//! `(x^{α+t}, y^{β+t}, z^{γ+t}, x^α y^β z^γ)` by exact determinant and rank
//! computations, and reports Hilbert functions, prime factorizations of the
//! criterion determinant, lozenge-tiling counts, and batch scans.

mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lefschetz_core::{is_prime, Characteristic, Error, MaciParams, ScanBox};
use output::{Format, Report};

#[derive(Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "Weak Lefschetz property of monomial almost complete intersections in three variables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamArgs {
    /// Exponent α (0 ≤ α ≤ β ≤ γ)
    #[arg(long)]
    alpha: u32,
    /// Exponent β
    #[arg(long)]
    beta: u32,
    /// Exponent γ
    #[arg(long)]
    gamma: u32,
    /// Shift t ≥ 1
    #[arg(long)]
    t: u32,
}

impl ParamArgs {
    fn parse(&self) -> Result<MaciParams, Error> {
        MaciParams::new(self.alpha, self.beta, self.gamma, self.t)
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write output to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Text => Format::Text,
        }
    }
}

fn parse_characteristic(s: &str) -> Result<u64, String> {
    let c: u64 = s
        .parse()
        .map_err(|_| format!("'{s}' is not a non-negative integer"))?;
    if c != 0 && !is_prime(c) {
        return Err(format!("characteristic must be 0 or a prime, got {c}"));
    }
    Ok(c)
}

/// Four inclusive ranges `A..B,C..D,E..F,G..H`; a bare `K` means `K..K`.
fn parse_box(s: &str) -> Result<ScanBox, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!(
            "expected four comma-separated ranges for α, β, γ, t; got '{s}'"
        ));
    }
    let mut ranges = Vec::with_capacity(4);
    for part in &parts {
        let (lo, hi) = match part.split_once("..") {
            Some((lo, hi)) => (lo, hi),
            None => (*part, *part),
        };
        let lo: u32 = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad range bound '{lo}' in '{part}'"))?;
        let hi: u32 = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad range bound '{hi}' in '{part}'"))?;
        ranges.push((lo, hi));
    }
    ScanBox::new(ranges[0], ranges[1], ranges[2], ranges[3]).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of R/I with its peak classification
    Hilbert {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// The integer matrix of the determinant criterion
    Matrix {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact determinant of the criterion matrix
    Det {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Weak Lefschetz property by determinant and by direct rank computation
    Wlp {
        #[command(flatten)]
        params: ParamArgs,
        /// Field characteristic, 0 or a prime (repeatable)
        #[arg(long = "char", value_parser = parse_characteristic)]
        characteristics: Vec<u64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Characteristics in which the property fails: bounded factorization of det M
    Primes {
        #[command(flatten)]
        params: ParamArgs,
        /// Trial-division bound for prime extraction
        #[arg(long, default_value_t = 10_000)]
        bound: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Lozenge tilings of the (a, b, c)-hexagon
    Tilings {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Conjectured verdict (characteristic zero) with its proof status
    Predict {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Batch comparison of prediction, determinant, and direct verdicts
    Scan {
        /// Inclusive ranges "α_lo..α_hi,β_lo..β_hi,γ_lo..γ_hi,t_lo..t_hi"
        #[arg(long = "box", value_parser = parse_box)]
        box_: ScanBox,
        /// Field characteristic, 0 or a prime (repeatable)
        #[arg(long = "char", value_parser = parse_characteristic)]
        characteristics: Vec<u64>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn characteristics_or_default(raw: &[u64]) -> Vec<Characteristic> {
    if raw.is_empty() {
        vec![Characteristic::ZERO]
    } else {
        raw.iter()
            .map(|&c| Characteristic::new(c).expect("validated by the argument parser"))
            .collect()
    }
}

fn run(cli: Cli) -> Result<(Report, CommonArgsOwned), Error> {
    let (report, common) = match cli.command {
        Command::Hilbert { params, common } => {
            (commands::hilbert(params.parse()?)?, common.into())
        }
        Command::Matrix { params, common } => (commands::matrix(params.parse()?)?, common.into()),
        Command::Det { params, common } => (commands::det(params.parse()?)?, common.into()),
        Command::Wlp {
            params,
            characteristics,
            common,
        } => (
            commands::wlp(params.parse()?, &characteristics_or_default(&characteristics))?,
            common.into(),
        ),
        Command::Primes {
            params,
            bound,
            common,
        } => (commands::primes(params.parse()?, bound)?, common.into()),
        Command::Tilings { a, b, c, common } => (commands::tilings(a, b, c)?, common.into()),
        Command::Predict { params, common } => {
            (commands::predict_cmd(params.parse()?)?, common.into())
        }
        Command::Scan {
            box_,
            characteristics,
            common,
        } => (
            commands::scan_cmd(box_, &characteristics_or_default(&characteristics))?,
            common.into(),
        ),
    };
    Ok((report, common))
}

struct CommonArgsOwned {
    format: Format,
    out: Option<PathBuf>,
}

impl From<CommonArgs> for CommonArgsOwned {
    fn from(c: CommonArgs) -> Self {
        CommonArgsOwned {
            format: c.format.into(),
            out: c.out,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");

    // Optional cap on scan parallelism.
    let pool = match std::env::var("LEFSCHETZ_THREADS") {
        Ok(v) => match v.parse::<usize>() {
            Ok(n) if n >= 1 => Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .expect("thread pool"),
            ),
            _ => {
                eprintln!("invalid parameters: LEFSCHETZ_THREADS must be a positive integer, got '{v}'");
                return ExitCode::from(2);
            }
        },
        Err(_) => None,
    };

    let started = Instant::now();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(move || match &pool {
        Some(pool) => pool.install(|| run(cli)),
        None => run(cli),
    }));
    let timing_ms = started.elapsed().as_millis();

    let (report, common) = match outcome {
        Ok(Ok(pair)) => pair,
        Ok(Err(e)) => {
            eprintln!("{e}");
            return ExitCode::from(match e {
                Error::InvalidParameters(_) => 2,
                Error::Inapplicable(_) => 3,
                Error::Internal(_) => 1,
            });
        }
        Err(_) => {
            eprintln!("internal error: assertion failure");
            return ExitCode::from(1);
        }
    };

    let rendered = report.render(common.format, &command_echo, timing_ms);
    let write_result = match &common.out {
        Some(path) => std::fs::write(path, rendered.as_bytes()),
        None => std::io::stdout().write_all(rendered.as_bytes()),
    };
    if let Err(e) = write_result {
        eprintln!("internal error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
