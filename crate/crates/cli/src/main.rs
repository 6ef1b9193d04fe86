use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kekule_cli::commands::{self, Format, GfKind, Model};
use kekule_cli::verify::{self, Mutation, Profile};
use kekule_cli::CliError;

#[derive(Parser)]
#[command(name = "kekule", version, about = "Kekulé structures of zigzag strips: tables, generating functions, oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print T(n, m) for 0 <= n <= max-n, 0 <= m <= max-m.
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_m: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
    /// Print a generating function as JSON.
    Gf {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        index: usize,
    },
    /// Print the M array.
    MArray {
        #[arg(long)]
        max_i: usize,
        #[arg(long)]
        max_j: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
    /// Count by brute force. For the cycle model, --n is the cycle length.
    Oracle {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Run every check and print a summary; --out writes the JSON report.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        profile: ProfileArg,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Replace a matrix by a wrong one to confirm the checks notice.
        #[arg(long, value_enum, default_value = "none", hide = true)]
        mutation: MutationArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Row,
    Col,
    MRow,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Path,
    Lattice,
    Magic,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum MutationArg {
    None,
    ExchangeIsIdentity,
    FlippedUnitPrimitive,
}

fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Tsv => Format::Tsv,
        FormatArg::Json => Format::Json,
    }
}

/// Stdout text on success, or a verify failure carrying its summary.
enum Outcome {
    Data(String),
    VerifyFailed(String),
}

fn execute(command: Command) -> Result<Outcome, CliError> {
    let text = match command {
        Command::Table { max_n, max_m, format: f } => commands::table(max_n, max_m, format(f))?,
        Command::MArray { max_i, max_j, format: f } => commands::m_array(max_i, max_j, format(f))?,
        Command::Gf { kind, index } => {
            let kind = match kind {
                KindArg::Row => GfKind::Row,
                KindArg::Col => GfKind::Col,
                KindArg::MRow => GfKind::MRow,
                KindArg::Cycle => GfKind::Cycle,
            };
            commands::gf(kind, index)?
        }
        Command::Oracle { model, n, m } => {
            let model = match model {
                ModelArg::Path => Model::Path,
                ModelArg::Lattice => Model::Lattice,
                ModelArg::Magic => Model::Magic,
                ModelArg::Cycle => Model::Cycle,
            };
            commands::oracle(model, n, m)?
        }
        Command::Verify { profile, out, mutation } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            let mutation = match mutation {
                MutationArg::None => Mutation::None,
                MutationArg::ExchangeIsIdentity => Mutation::ExchangeIsIdentity,
                MutationArg::FlippedUnitPrimitive => Mutation::FlippedUnitPrimitive,
            };
            let report = verify::run(profile, mutation);
            if let Some(path) = out {
                let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
                json.push('\n');
                std::fs::write(&path, json)?;
            }
            let summary = report.summary();
            return Ok(if report.passed() { Outcome::Data(summary) } else { Outcome::VerifyFailed(summary) });
        }
    };
    Ok(Outcome::Data(text))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match execute(cli.command) {
        Ok(Outcome::Data(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Ok(Outcome::VerifyFailed(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            eprintln!("kekule: verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("kekule: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
