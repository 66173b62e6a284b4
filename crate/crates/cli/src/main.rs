use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rsk_toggle::verify::{RunConfig, Suite};
use rsk_toggle_cli::{
    cmd_arrays, cmd_gf, cmd_gk_check, cmd_hlf, cmd_invert, cmd_rsk, cmd_toggle, cmd_verify,
    parse_matrix, parse_order, parse_partition, parse_tableau, parse_weights, render_tableau,
    rows_json, CliError, CliResult, EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS,
};
use serde_json::Value;

/// Toggle RSK on ℕ-tableaux, with classical RSK, octahedron arrays and
/// hook-length checks. Reads JSON from stdin or --in and writes JSON.
#[derive(Parser)]
#[command(name = "rsk-toggle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Read input from FILE instead of standard input.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write output to FILE instead of standard output.
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,
    /// Human-readable tables instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classical RSK of a square matrix: P, Q, their GT patterns and Â.
    Rsk(Io),
    /// Toggle RSK of an ℕ-tableau.
    Toggle {
        #[command(flatten)]
        io: Io,
        /// Insertion order as a JSON box list, e.g. [[1,1],[2,1],[1,2]].
        #[arg(long)]
        order: Option<String>,
    },
    /// Inverse toggle RSK of a reverse plane partition.
    Invert(Io),
    /// The arrays U, Ubar, Utilde and the octahedron check.
    Arrays(Io),
    /// Compare noncrossing path maxima with Ubar.
    GkCheck {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 20)]
        max_boxes: usize,
    },
    /// Hook product versus RPP enumeration for a partition.
    Gf {
        #[command(flatten)]
        io: Io,
        /// Content weights as JSON, e.g. {"-1":1,"0":2,"1":1}.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        #[arg(long, default_value_t = 6)]
        max_boxes: usize,
    },
    /// Content-weighted hook-length formula for a partition.
    Hlf {
        #[command(flatten)]
        io: Io,
        /// Content weights as JSON; values may be "num/den" strings.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_boxes: usize,
    },
    /// Run a seeded verification suite.
    Verify {
        /// welldefined, bijection, diagrect, transpose, oracle, octahedron, gk, gf, whlf or all.
        suite: Suite,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 9)]
        max_boxes: usize,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
}

fn read_input(io: &Io) -> CliResult<String> {
    match &io.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> CliResult<()> {
    let result = match path {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    };
    result.map_err(|e| CliError::Usage(format!("write failed: {e}")))
}

fn json_text(value: &Value, pretty: bool) -> String {
    let mut text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("JSON values serialize");
    text.push('\n');
    text
}

fn run(cli: Cli) -> CliResult<i32> {
    let mut status = EXIT_OK;
    let (text, out) = match cli.command {
        Command::Rsk(io) => {
            let value = cmd_rsk(&parse_matrix(&read_input(&io)?)?)?;
            (json_text(&value, io.pretty), io.output)
        }
        Command::Toggle { io, order } => {
            let t = parse_tableau(&read_input(&io)?)?;
            let order = order.as_deref().map(parse_order).transpose()?;
            let hat = cmd_toggle(&t, order.as_deref())?;
            let text = if io.pretty {
                render_tableau(&hat)
            } else {
                json_text(&rows_json(&hat), false)
            };
            (text, io.output)
        }
        Command::Invert(io) => {
            let t = cmd_invert(&parse_tableau(&read_input(&io)?)?)?;
            let text = if io.pretty {
                render_tableau(&t)
            } else {
                json_text(&rows_json(&t), false)
            };
            (text, io.output)
        }
        Command::Arrays(io) => {
            let arrays = cmd_arrays(&parse_tableau(&read_input(&io)?)?)?;
            if !arrays.octahedron_ok {
                status = EXIT_VIOLATIONS;
            }
            let text = if io.pretty {
                arrays.render()
            } else {
                json_text(&arrays.to_json(), false)
            };
            (text, io.output)
        }
        Command::GkCheck { io, max_boxes } => {
            let (value, ok) = cmd_gk_check(&parse_tableau(&read_input(&io)?)?, max_boxes)?;
            if !ok {
                status = EXIT_VIOLATIONS;
            }
            (json_text(&value, io.pretty), io.output)
        }
        Command::Gf {
            io,
            weights,
            max_degree,
            max_boxes,
        } => {
            let shape = parse_partition(&read_input(&io)?)?;
            let weights = weights
                .as_deref()
                .map(|w| parse_weights(w, &shape))
                .transpose()?;
            let (value, ok) = cmd_gf(&shape, weights.as_ref(), max_degree, max_boxes)?;
            if !ok {
                status = EXIT_VIOLATIONS;
            }
            (json_text(&value, io.pretty), io.output)
        }
        Command::Hlf {
            io,
            weights,
            max_boxes,
        } => {
            let shape = parse_partition(&read_input(&io)?)?;
            let weights = weights
                .as_deref()
                .map(|w| parse_weights(w, &shape))
                .transpose()?;
            let (value, ok) = cmd_hlf(&shape, weights.as_ref(), max_boxes)?;
            if !ok {
                status = EXIT_VIOLATIONS;
            }
            (json_text(&value, io.pretty), io.output)
        }
        Command::Verify {
            suite,
            seed,
            trials,
            max_boxes,
            max_degree,
            output,
            pretty,
        } => {
            let config = RunConfig {
                seed,
                trials,
                max_boxes,
                max_degree,
            };
            let report = cmd_verify(suite, &config)?;
            if !report.passed() {
                status = EXIT_VIOLATIONS;
            }
            let value = serde_json::to_value(&report).expect("reports serialize");
            (json_text(&value, pretty), output)
        }
    };
    write_output(out.as_ref(), &text)?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
