use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ghnf_cli::bench::BenchParams;
use ghnf_cli::commands::{self, ComputeArgs, Failure, GenerateArgs, OracleKind};
use ghnf_core::Strategy;

/// Generalized Hermite normal forms of Z[x]-modules.
///
/// Exit codes: 0 ok, 1 not a GHNF, 2 oracle mismatch, 3 degenerate input,
/// 4 malformed input or arguments, 5 other failure.
#[derive(Parser)]
#[command(name = "ghnf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Partial,
    Full,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Partial => Strategy::Partial,
            StrategyArg::Full => Strategy::Full,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    Lattice,
    Pairs,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the GHNF of the columns of a polynomial matrix.
    Compute {
        #[arg(long)]
        input: PathBuf,
        /// Output matrix file; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "partial")]
        strategy: StrategyArg,
        /// Cross-check against an independent reference computation.
        #[arg(long)]
        oracle: bool,
        /// Reference used by --oracle.
        #[arg(long, value_enum, default_value = "lattice", requires = "oracle")]
        oracle_method: OracleArg,
        /// Write run statistics and bounds as JSON.
        #[arg(long)]
        stats: Option<PathBuf>,
        /// Write syzygy generators of the columns (one-row input only).
        #[arg(long)]
        syzygy: Option<PathBuf>,
    },
    /// Check whether a matrix is in GHNF.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Column Hermite normal form of an integer matrix, with transform.
    Hnf {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Generators of the syzygy module of a one-row matrix.
    Syzygy {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time both strategies on random fixed-degree instances; writes CSV.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 100)]
        coeff_range: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Worker threads; all cores when omitted.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Write a random instance with entries of degree exactly d.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 100)]
        coeff_range: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn dispatch(command: Command) -> commands::Outcome {
    match command {
        Command::Compute { input, output, strategy, oracle, oracle_method, stats, syzygy } => {
            let oracle = oracle.then_some(match oracle_method {
                OracleArg::Lattice => OracleKind::Lattice,
                OracleArg::Pairs => OracleKind::Pairs,
            });
            commands::compute(&ComputeArgs {
                input,
                output,
                strategy: strategy.into(),
                oracle,
                stats,
                syzygy,
            })
        }
        Command::Verify { input } => commands::verify(&input),
        Command::Hnf { input, output } => commands::hnf(&input, output.as_deref()),
        Command::Syzygy { input, output } => commands::syzygy(&input, output.as_deref()),
        Command::Bench { n, m, d, count, coeff_range, seed, output, threads } => {
            if let Some(t) = threads {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build_global()
                    .map_err(|e| Failure::Runtime(e.to_string()))?;
            }
            let params = BenchParams { n, m, d, count, coeff_range, seed };
            commands::bench(&params, output.as_deref())
        }
        Command::Generate { n, m, d, coeff_range, seed, output } => {
            commands::generate(&GenerateArgs { n, m, d, coeff_range, seed }, output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
