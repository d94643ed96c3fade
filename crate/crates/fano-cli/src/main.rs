//! `fano` — singularity content of lattice cones and Fano polygons,
//! r-modular sequence analysis, and exhaustive classification censuses.
//!
//! Exit codes: 0 success, 1 validation or usage error, 2 verification
//! mismatch (a census or coverage run that contradicts the closed-form
//! conditions). Output is plain text with no color, so `NO_COLOR` is
//! honored trivially.

mod commands;
mod doc;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "fano", version, about = "Exact lattice geometry of Fano polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ContentFormat {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum MachineFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Singularity content, per-cone classes and l-reflexivity of a polygon
    Content {
        /// JSON polygon document {"vertices": [[x, y], ...], "name"?: ...}
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ContentFormat::Table)]
        format: ContentFormat,
    },
    /// Signs, coefficients, winding numbers and the twelve-point residual of
    /// an r-modular sequence
    Winding {
        /// JSON sequence document {"vectors": [[x, y], ...], "name"?: ...}
        file: PathBuf,
    },
    /// Emit a model family polygon as a JSON polygon document
    Family {
        /// Family id: k3f1, k4f1..k4f4, k5f1..k5f3, k6f1
        id: String,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
    },
    /// Existence of a polygon with singularity content (0, {k x 1/r(1,s)})
    /// according to the closed-form arithmetic conditions
    Predicate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
    },
    /// Homogeneous-basket census over r in [3, r-max], checked against the
    /// existence predicate (exit 2 on any disagreement)
    Census {
        #[arg(long = "r-max")]
        r_max: i64,
        /// Worker threads; output is identical for every value
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = MachineFormat::Json)]
        format: MachineFormat,
    },
    /// Match every enumerated determinant-r polygon against the model
    /// families (exit 2 if any polygon is unmatched)
    Verify {
        #[arg(long)]
        r: i64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let result = match cli.command {
        Command::Content { file, format } => commands::content(&file, format),
        Command::Winding { file } => commands::winding(&file),
        Command::Family { id, r, s } => commands::family(&id, r, s),
        Command::Predicate { k, r, s } => commands::predicate(k, r, s),
        Command::Census { r_max, jobs, format } => commands::census(r_max, jobs, format),
        Command::Verify { r } => commands::verify(r),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
