mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qborel", version, about = "Verifiers and constructors for triangular coideal subalgebras of U_q(sl_n)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for exhaustive searches (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    pub threads: usize,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 1, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enlarge a pair of Weyl group elements to a pair with a prescribed common tail.
    WeylSupplement {
        cartan: String,
        rank: usize,
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
    },
    /// Check the simple-root count condition on every pair with orthogonal common inversions.
    VerifyKinb { cartan: String, rank: usize },
    /// Run the supplement construction on every valid pair.
    VerifySupplement { cartan: String, rank: usize },
    /// q-commutators of the shifted generators of a tabulated coideal.
    CommutatorTable {
        algebra: String,
        #[arg(long)]
        case: Option<String>,
        /// Render with LaTeX names.
        #[arg(long)]
        latex: bool,
        /// Compare every cell with the reference table.
        #[arg(long)]
        verify: bool,
    },
    /// Enumerate Borel candidates up to symmetry.
    Classify {
        algebra: String,
        /// Fail unless the classes are exactly the listed families.
        #[arg(long)]
        check: bool,
    },
    /// Run the necessary-condition battery on an rcs given as JSON.
    EdeCheck { spec: PathBuf },
    /// Graded dimensions of the induced module of a non-degenerate Borel.
    Hilbert {
        spec: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Run every invariant suite.
    Selftest {
        /// Random instances per randomized suite.
        #[arg(long, default_value_t = 200)]
        instances: usize,
    },
}

/// Environment variable naming a directory that receives a copy of each report.
pub const OUT_DIR_VAR: &str = "QBOREL_OUT_DIR";

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json { Format::Json } else { cli.format };
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match commands::dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let body = match format {
        Format::Text => outcome.text.clone(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&outcome.json).expect("json value")),
    };
    print!("{body}");
    if let Some(dir) = std::env::var_os(OUT_DIR_VAR) {
        let ext = if format == Format::Json { "json" } else { "txt" };
        let path = PathBuf::from(dir).join(format!("{}.{ext}", outcome.name));
        if let Err(e) = std::fs::create_dir_all(path.parent().expect("joined path")).and_then(|_| std::fs::write(&path, &body)) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
