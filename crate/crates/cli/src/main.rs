use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use nagata_cli::{run, Action, CliError, Command, Format, Options, EXIT_INVALID};

/// Hilbert functions, annihilators and Lefschetz checks for CW-Nagata
/// polynomials `f = sum_r x_r^d1 g_r`.
#[derive(Debug, Parser)]
#[command(name = "nagata", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Input file, or `-` for stdin. Expression text or a JSON document.
    #[arg(short, long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Overrides the action given in a JSON document.
    #[arg(long, value_enum)]
    action: Option<Action>,
    /// Drop redundant generators (`ann`).
    #[arg(long)]
    minimal: bool,
    /// Also write the Hasse diagram to this file.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Random linear forms tried for the strong Lefschetz check.
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn read_input(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                EXIT_INVALID as u8
            } else {
                0
            });
        }
    };
    let opts = Options {
        format: cli.format,
        action: cli.action.map(Into::into),
        minimal: cli.minimal,
        dot: cli.dot,
        trials: cli.trials,
        seed: cli.seed,
    };
    let result = read_input(&cli.input).and_then(|text| run(cli.command, &text, &opts));
    match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.exit as u8)
        }
        Err(e) => {
            match opts.format {
                Format::Json => eprintln!("{}", e.to_json()),
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(EXIT_INVALID as u8)
        }
    }
}
