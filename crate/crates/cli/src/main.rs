//! `platsurf`: validate plat diagrams, list allowable paths, emit
//! certificates and export drawings.
//!
//! Exit status is 0 for a positive verdict, 1 for a refusal (whose payload
//! is still printed) and 2 for malformed input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "platsurf", version, about = "Closed essential surfaces in plat closures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the box conditions.
    Validate {
        file: PathBuf,
        /// Require only denominator 2 at odd-row ends.
        #[arg(long)]
        relaxed: bool,
        #[arg(long)]
        json: bool,
    },
    /// Count or list allowable paths.
    Paths {
        file: PathBuf,
        #[command(flatten)]
        what: PathsOutput,
    },
    /// Certify the surfaces of one allowable sphere.
    Certify {
        file: PathBuf,
        /// Entries a_1,…,a_m; defaults to the leftmost path.
        #[arg(long)]
        path: Option<String>,
        #[arg(long, value_enum, default_value_t = Mode::Theorem1)]
        mode: Mode,
        /// Write the certificate here instead of standard output.
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
    },
    /// Certify that Dehn surgery along the given slopes is Haken.
    Surgery {
        file: PathBuf,
        /// One slope p/q per component, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        slopes: String,
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
    },
    /// Print a braid word, PD code or normalized diagram JSON.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: ExportFormat,
    },
    /// Draw the diagram, optionally with an allowable path.
    Render {
        file: PathBuf,
        #[arg(long)]
        path: Option<String>,
        #[arg(long, value_enum, default_value_t = DrawFormat::Svg)]
        format: DrawFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a diagram meeting the strict box conditions.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        max_twist: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        require_parity: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summarize a diagram.
    Info {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PathsOutput {
    #[arg(long)]
    count: bool,
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Theorem1,
    Relaxed,
    Composite,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Braid,
    Pd,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DrawFormat {
    Svg,
    Ascii,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
