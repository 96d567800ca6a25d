use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use configforge::cli::{self, CommandOutcome};
use configforge::realize::DEFAULT_SAMPLES;

#[derive(Parser)]
#[command(
    name = "configforge",
    version,
    about = "Realize and verify subgroup intersection configurations in powers of Z wr Z"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a certificate realizing a configuration file.
    Realize {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recompute every intersection of a certificate and compare.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Realize and verify every n-configuration.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decompose a subgroup spec into components.
    Analyze {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Produce an element refuting finite generation by given candidates.
    Witness {
        #[arg(long)]
        cert: PathBuf,
        /// Comma-separated elements, e.g. 1,3
        #[arg(long)]
        subset: String,
        #[arg(long)]
        gens: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                cli::EXIT_MALFORMED as u8
            } else {
                0
            });
        }
    };
    let outcome: CommandOutcome = match args.command {
        Command::Realize { config, out } => cli::cmd_realize(&config, &out),
        Command::Verify {
            cert,
            samples,
            seed,
        } => cli::cmd_verify(&cert, samples, seed),
        Command::Enumerate { n, samples, seed } => {
            cli::cmd_enumerate(n, samples, seed, cli::threads_from_env())
        }
        Command::Analyze { spec } => cli::cmd_analyze(&spec),
        Command::Witness { cert, subset, gens } => {
            cli::cmd_witness(&cert, &subset, gens.as_deref())
        }
    };
    if outcome.exit_code == cli::EXIT_MALFORMED {
        eprint!("{}", outcome.report);
    } else {
        print!("{}", outcome.report);
    }
    ExitCode::from(outcome.exit_code as u8)
}
