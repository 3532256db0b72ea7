use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use minspan::commands::{self, TrellisFormat, TrellisKind};
use minspan::lti::{self, LtiCommand};
use minspan::{exit, CliError, Output};

/// Minimum-span bases, dimension profiles, minimal trellises and minimal
/// polynomial bases over GF(p).
#[derive(Parser)]
#[command(name = "minspan", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a code file to a shortest basis.
    Reduce { input: PathBuf },
    /// State, transition, in and out dimension profiles.
    Profile {
        input: PathBuf,
        /// Also compute the profiles from subcode ranks and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Build a minimal trellis realization.
    Trellis {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Controller)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Refuse realizations with more than p^D states at any time.
        #[arg(long, value_name = "D")]
        max_state_dim: Option<u32>,
    },
    /// Shortest basis of the dual code.
    Dual { input: PathBuf },
    /// Check the duality identities between C and its dual.
    Verify { input: PathBuf },
    /// Polynomial generator matrices of time-invariant systems.
    Lti {
        #[command(subcommand)]
        command: LtiArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Controller,
    Observer,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Dot,
}

#[derive(Subcommand)]
enum LtiArg {
    /// Clear denominators and common numerator factors column by column.
    Clear { input: PathBuf },
    /// All k x k minors.
    Minors { input: PathBuf },
    /// Delay, degree and common-factor tests.
    Report { input: PathBuf },
    /// Repair to a minimal basis, logging each replacement.
    Reduce { input: PathBuf },
    /// Controllability indices and state dimensions of a minimal matrix.
    Indices { input: PathBuf },
    /// Minimal basis of the orthogonal system.
    Dual { input: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError { code: exit::PARSE, message: format!("{}: {e}", path.display()) })
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Reduce { input } => commands::reduce(&read(input)?),
        Command::Profile { input, oracle } => commands::profile(&read(input)?, *oracle),
        Command::Trellis { input, kind, format, max_state_dim } => {
            let kind = match kind {
                KindArg::Controller => TrellisKind::Controller,
                KindArg::Observer => TrellisKind::Observer,
            };
            let format = match format {
                FormatArg::Text => TrellisFormat::Text,
                FormatArg::Dot => TrellisFormat::Dot,
            };
            commands::trellis(&read(input)?, kind, format, *max_state_dim)
        }
        Command::Dual { input } => commands::dual(&read(input)?),
        Command::Verify { input } => commands::verify(&read(input)?),
        Command::Lti { command } => {
            let (cmd, input) = match command {
                LtiArg::Clear { input } => (LtiCommand::Clear, input),
                LtiArg::Minors { input } => (LtiCommand::Minors, input),
                LtiArg::Report { input } => (LtiCommand::Report, input),
                LtiArg::Reduce { input } => (LtiCommand::Reduce, input),
                LtiArg::Indices { input } => (LtiCommand::Indices, input),
                LtiArg::Dual { input } => (LtiCommand::Dual, input),
            };
            lti::run(cmd, &read(input)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("JSON values serialize") + "\n"
            } else {
                out.text
            };
            // A closed pipe (e.g. `| head`) is not an error worth a panic.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
