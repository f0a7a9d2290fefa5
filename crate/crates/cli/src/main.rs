//! `qrm`: build, verify and measure quantum Reed-Muller codes.
//!
//! Exit codes: 0 success, 1 a checked claim does not hold, 2 usage error.

mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qrm", version, about = "Quantum Reed-Muller code toolkit")]
struct Cli {
    /// Worker threads for enumeration and simulation (overrides QRM_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print [[n,k,d]] for one (r, t).
    Params(RtArgs),
    /// Print the parameter grid for 2 <= r <= r_max, 1 <= t <= t_max.
    Table {
        #[arg(long, default_value_t = 10)]
        r_max: usize,
        #[arg(long, default_value_t = 5)]
        t_max: usize,
    },
    /// Write the generator and stabilizer of (r, t).
    Build {
        #[command(flatten)]
        rt: RtArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Rotation::HalfBlock)]
        rotation: Rotation,
        /// Output file; stdout when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check the duality and self-dual conditions and the direct stabilizer.
    Verify(RtArgs),
    /// Exact minimum distance.
    Distance {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Rowspace)]
        method: MethodArg,
        /// Largest weight scanned by the low-weight method.
        #[arg(long, default_value_t = 6)]
        max_weight: usize,
        #[arg(long, default_value_t = qrm_core::distance::DEFAULT_ROW_CAP)]
        row_cap: usize,
        /// Low-weight hits: any commuting vector, or only non-stabilizer ones.
        #[arg(long, value_enum, default_value_t = TargetArg::Normalizer)]
        target: TargetArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Seeded table-decoding simulation with errors of a fixed weight.
    DecodeSim {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        errors: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Delete one qubit from a fixture code.
    Puncture {
        #[arg(long, value_enum, default_value_t = Fixture::Six04)]
        code: Fixture,
        #[arg(long)]
        position: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct RtArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    t: usize,
}

#[derive(Args, Debug, Clone)]
#[group(skip)]
#[command(group = ArgGroup::new("src").required(true).args(["rt", "r", "input", "code"]))]
struct SourceArgs {
    /// Family member as "R,T" (same as --r R --t T).
    #[arg(long, value_parser = parse_rt)]
    rt: Option<(usize, usize)>,
    #[arg(long, requires = "t")]
    r: Option<usize>,
    #[arg(long, requires = "r")]
    t: Option<usize>,
    /// Text file with `x | z` rows (generator, or generator `--` stabilizer).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    code: Option<Fixture>,
}

fn parse_rt(s: &str) -> Result<(usize, usize), String> {
    let (r, t) = s.split_once(',').ok_or("expected R,T")?;
    Ok((
        r.trim().parse().map_err(|e| format!("{e}"))?,
        t.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Rotation {
    /// 2^(t-1) places.
    HalfBlock,
    /// t places.
    ShiftByT,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum MethodArg {
    Rowspace,
    Lowweight,
    Both,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum TargetArg {
    Normalizer,
    Logical,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Fixture {
    /// The literal [[6,0,4]] code.
    Six04,
    /// six04 punctured at position 0.
    Five13,
}

/// Failure classes mapped onto exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Claim(String),
}

impl From<qrm_core::Error> for Failure {
    fn from(e: qrm_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn configure_threads(flag: Option<usize>) -> Result<(), Failure> {
    let from_env = std::env::var("QRM_THREADS")
        .ok()
        .map(|v| v.parse::<usize>().map_err(|_| Failure::Usage(format!("bad QRM_THREADS value {v:?}"))))
        .transpose()?;
    if let Some(threads) = flag.or(from_env) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads(cli.threads)?;
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Params(rt) => commands::params(&mut out, rt.r, rt.t),
        Command::Table { r_max, t_max } => commands::table(&mut out, r_max, t_max),
        Command::Build {
            rt,
            format,
            rotation,
            output,
        } => commands::build(&mut out, rt.r, rt.t, format, rotation, output.as_deref()),
        Command::Verify(rt) => commands::verify(&mut out, rt.r, rt.t),
        Command::Distance {
            source,
            method,
            max_weight,
            row_cap,
            target,
            format,
        } => commands::distance(&mut out, &source, method, max_weight, row_cap, target, format),
        Command::DecodeSim {
            source,
            errors,
            trials,
            seed,
            format,
        } => commands::decode_sim(&mut out, &source, errors, trials, seed, format),
        Command::Puncture {
            code,
            position,
            format,
        } => commands::puncture(&mut out, code, position, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Claim(msg)) => {
            eprintln!("claim violated: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
