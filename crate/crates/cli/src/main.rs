//! Batch-oriented command-line front end.
//!
//! Every command prints one machine-readable report (JSON by default, flat
//! CSV on request) with the resolved input configuration embedded, and
//! uses three exit codes: 0 for success, 1 for unusable input, 2 when a
//! certified computation fails its own invariant.

mod commands;
mod error;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use error::CliError;
use report::OutputFormat;

#[derive(Parser)]
#[command(
    name = "ktors",
    version,
    about = "Exact torsion thresholds for the K-theory of imaginary quadratic integer rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for the report on standard output.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form of an integer matrix read from a JSON file.
    Snf {
        /// Matrix file: {"rows": r, "cols": c, "entries": [["-4", ...], ...]}.
        #[arg(long)]
        input: PathBuf,
    },
    /// Integral homology, with torsion, of a simplicial complex.
    Homology {
        /// Complex file: {"vertices": v, "top_simplices": [[0, 1, 2], ...]}.
        #[arg(long)]
        input: PathBuf,
        /// Single degree to compute; every degree up to the dimension when
        /// omitted.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Fuzz the torsion-size and simplex-count bounds on random complexes.
    #[command(name = "gabber-verify")]
    GabberVerify {
        /// Maximum 1-skeleton degree of the generated complexes.
        #[arg(long = "delta-max")]
        delta_max: usize,
        /// Number of available vertices.
        #[arg(long)]
        v: usize,
        /// Dimension of the attempted top simplices.
        #[arg(long)]
        dim: usize,
        /// Number of random complexes to generate.
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Seed for the deterministic generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Zeta values with certified error radii.
    Zeta {
        /// Field parameter m (negative, squarefree); Riemann zeta when
        /// omitted.
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        /// Integer argument, at least 2.
        #[arg(long)]
        s: u32,
        /// Target absolute error of the enclosure.
        #[arg(long, default_value_t = 1e-10)]
        precision: f64,
    },
    /// Log of the covolume expression for one field and rank.
    Volume {
        /// Field parameter m (negative, squarefree).
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        /// Rank parameter N, at least 2.
        #[arg(long = "N")]
        big_n: u32,
        /// Target absolute error of the enclosure.
        #[arg(long, default_value_t = 1e-10)]
        precision: f64,
    },
    /// Exact order of GL_{2N}(F_3) and its log.
    Gamma {
        /// Rank parameter N, at least 2.
        #[arg(long = "N")]
        big_n: u32,
    },
    /// Full torsion-threshold report for one field and degree.
    Bound {
        /// Field parameter m (negative, squarefree).
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        /// K-theory degree, at least 2.
        #[arg(long)]
        n: u32,
        /// Vertex-count constant of the finiteness theorem (placeholder).
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        /// Degree constant of the finiteness theorem (placeholder).
        #[arg(long, default_value_t = 1.0)]
        delta: f64,
        /// Target absolute error of the enclosures.
        #[arg(long, default_value_t = 1e-10)]
        precision: f64,
    },
    /// Threshold-versus-classical-bound table over a parameter grid.
    Compare {
        /// Comma-separated degrees, each at least 2.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u32>,
        /// Comma-separated field parameters m.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        m: Vec<i64>,
        /// Vertex-count constant of the finiteness theorem (placeholder).
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        /// Degree constant of the finiteness theorem (placeholder).
        #[arg(long, default_value_t = 1.0)]
        delta: f64,
        /// Target absolute error of the enclosures.
        #[arg(long, default_value_t = 1e-9)]
        precision: f64,
        /// Accepted for provenance; the table itself is deterministic.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests land here too; keep their exit at
            // 0 and route genuine usage errors to 1.
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let format = cli.format;
    let mut report = match cli.command {
        Command::Snf { input } => commands::snf(&input)?,
        Command::Homology { input, n } => commands::homology_cmd(&input, n)?,
        Command::GabberVerify { delta_max, v, dim, trials, seed } => {
            commands::gabber_verify(delta_max, v, dim, trials, seed)?
        }
        Command::Zeta { m, s, precision } => commands::zeta(m, s, precision)?,
        Command::Volume { m, big_n, precision } => {
            commands::volume(m, big_n, precision)?
        }
        Command::Gamma { big_n } => commands::gamma(big_n)?,
        Command::Bound { m, n, alpha, delta, precision } => {
            commands::bound(m, n, alpha, delta, precision)?
        }
        Command::Compare { n, m, alpha, delta, precision, seed } => {
            commands::compare(&n, &m, alpha, delta, precision, seed)?
        }
    };
    report
        .config
        .insert("format".to_string(), serde_json::json!(format.as_str()));
    Ok(report.render(format))
}
