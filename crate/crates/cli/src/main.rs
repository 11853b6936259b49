//! `homres`: batch front end. Exit codes: 0 success, 1 a check failed,
//! 2 unreadable or invalid input, 3 budget or stage limit reached.

mod adjcheck;
mod complete;
mod factor;
mod report;
mod resolve;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homres::scomplex::DEFAULT_BUDGET;
use homres::soa::Side;

use crate::complete::CompleteConfig;
use crate::factor::SoaConfig;
use crate::report::{write_atomic, Failure, Report, EXIT_PARSE};
use crate::resolve::ResolveConfig;

/// Overrides the enumeration budget of every command.
const BUDGET_VAR: &str = "HOMRES_BUDGET";

#[derive(Parser)]
#[command(name = "homres", version, about = "Resolutions from deformable adjunctions, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here (atomically) instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct SoaArgs {
    /// boundary, horn, inner-horn or custom:<file>.
    #[arg(long)]
    generators: Option<String>,
    #[arg(long, default_value_t = 8)]
    max_stages: usize,
    #[arg(long, default_value_t = 3)]
    dim_bound: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Factor a map by the small object argument.
    Factor {
        #[arg(long)]
        map: PathBuf,
        #[command(flatten)]
        soa: SoaArgs,
    },
    /// Fibrant replacement `X -> RX` (horns by default).
    Fibrant {
        #[arg(long)]
        object: PathBuf,
        #[command(flatten)]
        soa: SoaArgs,
    },
    /// Cofibrant replacement `QX -> X` (boundaries by default).
    Cofibrant {
        #[arg(long)]
        object: PathBuf,
        #[command(flatten)]
        soa: SoaArgs,
    },
    /// Build the resolutions of a shipped instance and check their identities.
    Resolve {
        /// a (free/forget over F₂), b (identity on sSet), c (cylinder/path).
        #[arg(long)]
        instance: String,
        #[arg(long)]
        object: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        levels: usize,
        #[arg(long, default_value_t = 8)]
        max_stages: usize,
        /// Include every face and degeneracy map in the report.
        #[arg(long)]
        maps: bool,
        /// Negative control: tamper with the multiplication of R.
        #[arg(long, hide = true)]
        corrupt_mu: bool,
    },
    /// Compare two 2-cells of the free adjunction.
    Adjcheck { w1: String, w2: String },
    /// Cohomology and spectral sequence pages of a cosimplicial module.
    Complete {
        /// a (free/forget resolution) or amitsur.
        #[arg(long)]
        instance: String,
        /// Size of the set resolved (instance a).
        #[arg(long, default_value_t = 2)]
        x: usize,
        /// Characteristic of F_p[t]/t^k (amitsur).
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Structure constants replacing F_p[t]/t^k.
        #[arg(long)]
        algebra: Option<PathBuf>,
        /// residue (the ground field) or free (the algebra itself).
        #[arg(long, default_value = "residue")]
        module: String,
        #[arg(long, default_value_t = 3)]
        levels: usize,
    },
}

fn budget() -> Result<u64, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::parse(format!("{BUDGET_VAR} must be a non-negative integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn soa_config(args: SoaArgs, default: &str) -> Result<SoaConfig, Failure> {
    Ok(SoaConfig {
        generators: args.generators.unwrap_or_else(|| default.to_string()),
        max_stages: args.max_stages,
        dim_bound: args.dim_bound,
        budget: budget()?,
    })
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Factor { map, soa } => factor::factor(&map, &soa_config(soa, "boundary")?),
        Command::Fibrant { object, soa } => factor::replace(&object, Side::Fibrant, &soa_config(soa, "horn")?),
        Command::Cofibrant { object, soa } => factor::replace(&object, Side::Cofibrant, &soa_config(soa, "boundary")?),
        Command::Resolve { instance, object, levels, max_stages, maps, corrupt_mu } => {
            resolve::resolve(&ResolveConfig { instance, object, levels, max_stages, budget: budget()?, maps, corrupt_mu })
        }
        Command::Adjcheck { w1, w2 } => adjcheck::adjcheck(&w1, &w2),
        Command::Complete { instance, x, p, k, algebra, module, levels } => {
            complete::complete(&CompleteConfig { instance, x, p, k, algebra, module, levels })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE } else { 0 });
        }
    };
    let report = match run(cli.command) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("homres: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("reports serialize") + "\n",
        Format::Text => report.text,
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = write_atomic(path, body.as_bytes()) {
                eprintln!("homres: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_PARSE);
            }
        }
        None => print!("{body}"),
    }
    ExitCode::from(report.code)
}
