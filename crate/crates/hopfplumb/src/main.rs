use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hopfplumb::commands::{self, Command, Failure, Options, Source, EXIT_INTERNAL};
use serde_json::Value;

/// Fibre surfaces of positive braids: trefoil deplumbing, Hopf plumbing
/// chains and Alexander polynomial bounds.
#[derive(Parser)]
#[command(name = "hopfplumb", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Clone)]
struct Input {
    /// Positive braid word, e.g. "1 2 1 2" (generators are 1-based)
    word: Option<String>,
    /// Use the torus braid (σ1…σ(P-1))^Q instead of a word
    #[arg(long, num_args = 2, value_names = ["P", "Q"], conflicts_with = "word")]
    torus: Option<Vec<usize>>,
    /// Number of strands (defaults to max generator + 1)
    #[arg(long)]
    strands: Option<usize>,
    /// Read one word per line and process them in parallel
    #[arg(long, conflicts_with_all = ["word", "torus"])]
    batch: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct Output {
    /// Also write the JSON result to this file
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write an SVG brick diagram to this file
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariants, surface data, monodromy and Alexander polynomial
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Split off trefoil plumbing summands until none is left
    Decompose {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        /// Node budget for the normal-form search
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Build the longest monodromy chain from a rectangle seed
    Chain {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        /// Index of the seed rectangle
        #[arg(long, default_value_t = 0)]
        seed: usize,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Coefficient-matching bound on Hopf plumbing summands
    Bound {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Chain detector against the polynomial bound for T(P,Q)
    Torus {
        p: usize,
        q: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Orbit of a rectangle curve under the monodromy
    Orbit {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        #[arg(long, default_value_t = 0)]
        seed: usize,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Re-check a certificate written by `decompose` or `chain`
    Verify { file: PathBuf },
    /// Run the acceptance criteria
    Selftest {
        /// Crossing cap for the exhaustive decomposition check
        #[arg(long)]
        max_crossings: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn fail(e: &Failure) -> ExitCode {
    let v = e.to_json();
    eprintln!(
        "{}",
        serde_json::to_string_pretty(&v).unwrap_or_else(|_| e.to_string())
    );
    ExitCode::from(e.exit_code() as u8)
}

fn finish(result: Result<Value, Failure>, json: Option<&Path>) -> ExitCode {
    match result.and_then(|v| commands::emit(&v, json)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}

fn run_input(cmd: Command, input: &Input, out: &Output, mut opts: Options) -> ExitCode {
    opts.svg = out.svg.clone();
    if let Some(path) = &input.batch {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return fail(&Failure::Io(e)),
        };
        let (v, code) = commands::batch(cmd, &text, input.strands, &opts);
        return match commands::emit(&v, out.json.as_deref()) {
            Ok(()) => ExitCode::from(code as u8),
            Err(e) => fail(&e),
        };
    }
    let src = match (&input.word, &input.torus) {
        (Some(text), None) => Source::Word {
            text,
            strands: input.strands,
        },
        (None, Some(pq)) => Source::Torus { p: pq[0], q: pq[1] },
        _ => {
            return fail(&Failure::Usage(
                "give a braid word, --torus P Q or --batch FILE".into(),
            ))
        }
    };
    finish(commands::run(cmd, src, &opts), out.json.as_deref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Cmd::Analyze { input, out } => {
            run_input(Command::Analyze, &input, &out, Options::default())
        }
        Cmd::Decompose { input, out, budget } => run_input(
            Command::Decompose,
            &input,
            &out,
            Options {
                budget,
                ..Options::default()
            },
        ),
        Cmd::Chain {
            input,
            out,
            seed,
            max_n,
        } => run_input(
            Command::Chain,
            &input,
            &out,
            Options {
                seed: Some(seed),
                max_n,
                ..Options::default()
            },
        ),
        Cmd::Bound { input, out } => run_input(Command::Bound, &input, &out, Options::default()),
        Cmd::Orbit {
            input,
            out,
            seed,
            power,
        } => run_input(
            Command::Orbit,
            &input,
            &out,
            Options {
                seed: Some(seed),
                power: Some(power),
                ..Options::default()
            },
        ),
        Cmd::Torus { p, q, out } => {
            let opts = Options {
                svg: out.svg.clone(),
                ..Options::default()
            };
            finish(commands::torus(p, q, &opts), out.json.as_deref())
        }
        Cmd::Verify { file } => finish(commands::verify_file(&file), None),
        Cmd::Selftest {
            max_crossings,
            json,
        } => {
            let (v, ok) = commands::selftest(max_crossings, true);
            match commands::emit(&v, json.as_deref()) {
                Ok(()) if ok => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(EXIT_INTERNAL as u8),
                Err(e) => fail(&e),
            }
        }
    }
}
