use std::process::ExitCode;

use bp_atlas::render::{figure_markdown, render_atlas, render_orbit, OutputFormat};
use bp_atlas::{build_atlas, make_level, sf_orbit, verify, AffineWeight, Error, FlowAmount};
use clap::{Args, Parser, Subcommand};

const EXIT_VERIFY: u8 = 1;
const EXIT_LEVEL: u8 = 2;
const EXIT_WEIGHT: u8 = 3;
const EXIT_USAGE: u8 = 64;

/// Classification tables for the Bershadsky-Polyakov minimal models BP(u, v).
#[derive(Parser)]
#[command(name = "bp-atlas", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LevelArgs {
    #[arg(long, allow_hyphen_values = true)]
    u: i64,
    #[arg(long, allow_hyphen_values = true)]
    v: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Print every simple module, relaxed family and nonsemisimple extension.
    Atlas {
        #[command(flatten)]
        level: LevelArgs,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
    },
    /// Print the untwisted and twisted highest-weight tables as markdown.
    Figure {
        #[command(flatten)]
        level: LevelArgs,
    },
    /// Spectral flow orbit of the untwisted module of a surviving weight.
    Orbit {
        #[command(flatten)]
        level: LevelArgs,
        #[arg(long = "lambdaI", value_parser = parse_triple)]
        lambda_i: [u32; 3],
        #[arg(long = "lambdaF", value_parser = parse_triple)]
        lambda_f: [u32; 3],
        /// Half-integer range `lo..hi`, for example `-3/2..2`.
        #[arg(long, default_value = "-2..2", allow_hyphen_values = true, value_parser = parse_range)]
        range: (FlowAmount, FlowAmount),
        #[arg(long, default_value = "md")]
        format: OutputFormat,
    },
    /// Run the verification suite.
    Verify {
        #[command(flatten)]
        level: LevelArgs,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
    },
}

fn parse_triple(s: &str) -> Result<[u32; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let nums: Vec<u32> = parts
        .iter()
        .map(|p| p.parse::<u32>().map_err(|_| format!("{p:?} is not a natural number")))
        .collect::<Result<_, _>>()?;
    nums.try_into().map_err(|_| format!("expected three comma-separated labels, got {s:?}"))
}

fn parse_range(s: &str) -> Result<(FlowAmount, FlowAmount), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let lo: FlowAmount = lo.parse().map_err(|e| format!("{e}"))?;
    let hi: FlowAmount = hi.parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {}", e.name());
    eprintln!("{e}");
    let code = if e.is_level_error() {
        EXIT_LEVEL
    } else if matches!(e, Error::NotSurviving(_)) {
        EXIT_WEIGHT
    } else {
        EXIT_VERIFY
    };
    ExitCode::from(code)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Atlas { level, format } => {
            let p = make_level(level.u, level.v)?;
            print!("{}", render_atlas(&build_atlas(&p)?, format));
        }
        Command::Figure { level } => {
            let p = make_level(level.u, level.v)?;
            print!("{}", figure_markdown(&p));
        }
        Command::Orbit { level, lambda_i, lambda_f, range, format } => {
            let p = make_level(level.u, level.v)?;
            let w = AffineWeight::new(p, lambda_i, lambda_f)?;
            print!("{}", render_orbit(&sf_orbit(&w, range.0, range.1), format));
        }
        Command::Verify { level, depth } => {
            let p = make_level(level.u, level.v)?;
            let report = verify(&p, depth);
            print!("{}", report.to_text());
            if !report.passed() {
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => fail(&e),
    }
}
