//! Command-line front end: constructs weight-class cyclic codes,
//! reproduces the certified parameter tables for length 127, and runs
//! the verification suites.
//!
//! Exit codes: 0 = everything matched, 2 = a computed value disagrees
//! with the reference tables, 3 = a certification stopped on budget
//! (partial), 64 = usage error.

mod codeinfo;
mod output;
mod tables;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_PARTIAL: u8 = 3;
pub const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "duadic", version, about = "Binary duadic codes from base-2 weight classes: construction, bounds, certified distances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct one weight-class code and print parameters, bounds,
    /// and dual/extended properties.
    CodeInfo(codeinfo::CodeInfoArgs),
    /// Certify the six length-127 weight-class codes (r = 6) and
    /// their duals against the reference parameters.
    Table1(tables::TableArgs),
    /// Certify the length-127 comparison codes (r = 2, r = 4, and the
    /// order-3 punctured Reed-Muller code) and their duals.
    Table2(tables::TableArgs),
    /// Run the containment-lemma suite, the duadic splitting scan,
    /// and the dual/extended property checks.
    Verify(verify::VerifyArgs),
}

#[derive(Args, Clone)]
pub struct CommonOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, env = "DUADIC_FORMAT")]
    pub format: Format,

    /// Write the report to this file instead of stdout.
    #[arg(long, env = "DUADIC_OUT")]
    pub out: Option<std::path::PathBuf>,

    /// Worker threads for the parallel engines (0 = all cores).
    #[arg(long, default_value_t = 0, env = "DUADIC_THREADS")]
    pub threads: usize,

    /// Seed for the randomized information-set search.
    #[arg(long, default_value_t = 1, env = "DUADIC_SEED")]
    pub seed: u64,

    /// Distance engine for certifications.
    #[arg(long, value_enum, default_value_t = Engine::Bz, env = "DUADIC_ENGINE")]
    pub engine: Engine,

    /// Work budget per certification, in codeword evaluations.
    #[arg(long, default_value_t = 100_000_000_000, env = "DUADIC_BUDGET")]
    pub budget: u64,

    /// Primitive polynomial override, as a hex coefficient mask
    /// (lowest bit = constant term). Default: lexicographically
    /// smallest primitive polynomial of degree m.
    #[arg(long, env = "DUADIC_PRIM_POLY")]
    pub prim_poly: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// Certified information-set enumeration.
    Bz,
    /// Exhaustive 2^k scan (small dimensions only).
    Exhaustive,
}

impl CommonOpts {
    pub fn field(&self, m: u32) -> anyhow::Result<std::sync::Arc<duadic::gf2poly::FieldContext>> {
        use duadic::gf2poly::{BinaryPolynomial, FieldContext};
        let ctx = match &self.prim_poly {
            None => FieldContext::new(m)?,
            Some(hex) => {
                let poly = BinaryPolynomial::from_hex(hex)
                    .ok_or_else(|| anyhow::anyhow!("--prim-poly is not valid hex: {hex}"))?;
                FieldContext::with_modulus(m, poly)?
            }
        };
        Ok(std::sync::Arc::new(ctx))
    }

    pub fn certify(
        &self,
        code: &duadic::cyclic::CyclicCode,
    ) -> anyhow::Result<duadic::distance::DistanceCertificate> {
        use duadic::distance::*;
        let cert = match self.engine {
            Engine::Bz => brouwer_zimmermann_with(
                code,
                &BzOptions {
                    budget: self.budget,
                    seed: self.seed,
                    ..Default::default()
                },
            )?,
            Engine::Exhaustive => exhaustive_min_weight(code, ParityFilter::All)?,
        };
        Ok(cert)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(EXIT_USAGE)
                }
            };
        }
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();

    let threads = match &cli.command {
        Command::CodeInfo(a) => a.common.threads,
        Command::Table1(a) | Command::Table2(a) => a.common.threads,
        Command::Verify(a) => a.common.threads,
    };
    if threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            log::warn!("thread pool already initialized: {e}");
        }
    }

    let outcome = match cli.command {
        Command::CodeInfo(args) => codeinfo::run(args),
        Command::Table1(args) => tables::run(tables::Which::Table1, args),
        Command::Table2(args) => tables::run(tables::Which::Table2, args),
        Command::Verify(args) => verify::run(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
