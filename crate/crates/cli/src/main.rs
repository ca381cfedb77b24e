mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "orbitkit",
    version,
    about = "Exact coadjoint-orbit computations over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Common {
    /// `catalog:<name>` or a path to a JSON algebra definition
    pub algebra: String,
    /// Covector as comma-separated rationals in basis order; repeatable.
    /// Defaults to the documented samples of the algebra.
    #[arg(long = "point", short = 'p')]
    pub points: Vec<String>,
    /// Worker threads for independent points (results keep input order)
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Write the report here instead of standard output
    #[arg(long, short = 'o')]
    pub output: Option<String>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check antisymmetry and Jacobi, and probe the structure
    Validate {
        algebra: String,
        #[arg(long, short = 'o')]
        output: Option<String>,
    },
    /// Orbit dimension, stabilizer, and affine hull at each point
    Orbit {
        #[command(flatten)]
        common: Common,
    },
    /// Coisotropy, polarization, and Pukanszky conditions for a subalgebra
    Conditions {
        #[command(flatten)]
        common: Common,
        /// Subalgebra: indices `0,2`, `@name`, `span:<rows>`, or a generator file
        #[arg(long)]
        sub: String,
    },
    /// Little group, induction-step relations, and the obstruction for an ideal
    Mackey {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        /// Extension covector used for the extension cocycle
        #[arg(long)]
        extension: Option<String>,
        /// Candidate complement for the semidirect test; repeatable.
        /// Defaults to the declared complements.
        #[arg(long = "complement")]
        complements: Vec<String>,
    },
    /// Construct a Pukanszky polarization and verify the monomial property
    Polarize {
        #[command(flatten)]
        common: Common,
        /// `auto` or `chain:<file>`
        #[arg(long, default_value = "auto")]
        strategy: String,
        /// Proceed even when the exponential precheck fails
        #[arg(long)]
        override_precheck: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random elements tested by the exponential precheck
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
    /// Jordan decomposition, grading, and parabolic induction data
    Parabolic {
        #[command(flatten)]
        common: Common,
        /// Matrix as rows `a,b;c,d`; repeatable. Points are converted with the trace form.
        #[arg(long = "matrix", short = 'm')]
        matrices: Vec<String>,
    },
    /// Little algebra type and the abelian induction step
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
    },
    /// Induced-space record for a chain of subalgebras, outermost first
    Record {
        #[command(flatten)]
        common: Common,
        #[arg(long = "sub", required = true)]
        subs: Vec<String>,
        /// Orbit tested against the record; defaults to the point itself
        #[arg(long)]
        orbit: Option<String>,
    },
    /// List the catalog, or show one entry
    Catalog {
        name: Option<String>,
        #[arg(long, short = 'o')]
        output: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok((out, report)) => {
            let text = commands::render(&report.body);
            let written = match out {
                Some(path) => std::fs::write(&path, &text).map_err(|e| format!("{path}: {e}")),
                None => std::io::stdout()
                    .lock()
                    .write_all(text.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
