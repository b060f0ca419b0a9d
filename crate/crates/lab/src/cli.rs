use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::error::{LabError, LabResult};
use crate::experiments::{self, all_passed, Algo, Verdict};
use crate::output::{print_summary, write_table_to_path, Format};

#[derive(Debug, Parser)]
#[command(name = "idbb", version, about = "Experiments on identity black-box cyclic groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Prime modulus, or a comma-separated list.
    #[arg(long, global = true, value_delimiter = ',')]
    pub p: Vec<u64>,
    /// Group level (dimension of the hidden vector minus one).
    #[arg(long, global = true, default_value_t = 1)]
    pub t: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub trials: Option<u64>,
    /// Write the result table here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output format; defaults to the extension of --out, else csv.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Lift the size guards on exhaustive computations.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recover the secret from a generated oracle.
    Secret {
        #[arg(long, value_enum, default_value_t = Algo::Cdh)]
        algo: Algo,
        #[arg(long)]
        secret: Option<u64>,
    },
    /// Decide a level-1 DDH instance given as coordinate pairs.
    Ddh {
        #[arg(long, value_delimiter = ',', default_values_t = [1, 0])]
        g: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        l: Vec<u64>,
        #[arg(long)]
        secret: Option<u64>,
    },
    /// Check DDH answers and round trips under lifting to level 2.
    Lift,
    /// DDH in the order-p subgroup mod 2p+1 through the embedding.
    Embed,
    /// Exhaustive adversary-bound quantities at level 2.
    Adversary,
    /// Simulated Grover search.
    Grover {
        #[arg(long)]
        iterations: Option<u64>,
    },
    /// Query counts of random-order brute force.
    Scaling,
    /// Success rates of the random-instance reductions.
    Reductions,
    /// Solution counts of random level-2 instances on lines.
    Level2Counts,
}

impl Cli {
    fn primes(&self, default: &[u64]) -> Vec<u64> {
        if self.p.is_empty() {
            default.to_vec()
        } else {
            self.p.clone()
        }
    }

    fn output_format(&self) -> Format {
        let from_ext = self.out.as_ref().and_then(|p| p.extension()).and_then(|e| e.to_str()).and_then(|e| match e {
            "json" => Some(Format::Json),
            "jsonl" => Some(Format::Jsonl),
            _ => None,
        });
        self.format.or(from_ext).unwrap_or(Format::Csv)
    }

    fn emit<T: Serialize + Verdict>(&self, rows: &[T]) -> LabResult<bool> {
        if let Some(path) = &self.out {
            write_table_to_path(rows, self.output_format(), path)?;
        }
        print_summary(rows)?;
        Ok(all_passed(rows))
    }
}

/// Runs the parsed command. `Ok(false)` means an experiment check failed.
pub fn execute(cli: &Cli) -> LabResult<bool> {
    let seed = cli.seed;
    let trials = |default: u64| cli.trials.unwrap_or(default);
    match &cli.command {
        Command::Secret { algo, secret } => {
            let rows = cli
                .primes(&[101])
                .into_iter()
                .map(|p| experiments::recover_secret(p, cli.t, *algo, *secret, seed))
                .collect::<LabResult<Vec<_>>>()?;
            for r in &rows {
                println!("recovered {} (hidden {})", r.recovered, r.hidden);
            }
            cli.emit(&rows)
        }
        Command::Ddh { g, h, k, l, secret } => {
            if cli.t != 1 {
                return Err(LabError::Input("ddh decides level-1 instances only".into()));
            }
            let rows = cli
                .primes(&[5])
                .into_iter()
                .map(|p| experiments::decide_ddh(p, [g, h, k, l], *secret, seed))
                .collect::<LabResult<Vec<_>>>()?;
            for r in &rows {
                println!("DH-quadruple: {}", if r.dh_quadruple { "yes" } else { "no" });
            }
            cli.emit(&rows)
        }
        Command::Lift => {
            let rows = cli
                .primes(&[7])
                .into_iter()
                .map(|p| experiments::run_lift(p, trials(1000), seed))
                .collect::<LabResult<Vec<_>>>()?;
            cli.emit(&rows)
        }
        Command::Embed => {
            let rows = cli
                .primes(&[11])
                .into_iter()
                .map(|p| experiments::run_embedding(p, cli.force))
                .collect::<LabResult<Vec<_>>>()?;
            cli.emit(&rows)
        }
        Command::Adversary => cli.emit(&experiments::run_adversary(&cli.primes(&[5]), cli.force)?),
        Command::Grover { iterations } => cli.emit(&experiments::run_grover(&cli.primes(&[101]), *iterations, seed)?),
        Command::Scaling => cli.emit(&experiments::run_scaling(&cli.primes(&[101, 211, 401]), trials(10_000), seed)?),
        Command::Reductions => {
            let mut rows = Vec::new();
            for p in cli.primes(&[101]) {
                rows.extend(experiments::run_reduction_success(p, trials(10_000), seed)?);
            }
            cli.emit(&rows)
        }
        Command::Level2Counts => {
            let rows = cli
                .primes(&[31])
                .into_iter()
                .map(|p| experiments::run_level2_solution_counts(p, trials(1000), seed, cli.force))
                .collect::<LabResult<Vec<_>>>()?;
            cli.emit(&rows)
        }
    }
}

/// Parses `args` and runs. Returns the process exit code: 0 on success,
/// 1 on bad input or usage, 2 when a check fails.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(true) => 0,
        Ok(false) => {
            eprintln!("error: experiment check failed");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
