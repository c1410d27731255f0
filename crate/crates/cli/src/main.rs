//! `moveable`: replay pointer traces against the demo scenes, fuzz them, or
//! serve the JSON boundary protocol over stdin/stdout.
//!
//! Exit codes: 0 success, 1 assertion failure (or fuzz violation),
//! 2 golden mismatch, 3 usage, parse or I/O error.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use moveable_core::boundary::Session;
use moveable_core::replay::{format_trace, fuzz, parse_trace, run_trace, SCENES};
use similar::TextDiff;

const ASSERTION_FAILED: u8 = 1;
const GOLDEN_MISMATCH: u8 = 2;
const USAGE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "moveable", version, about = "Deterministic replay and fuzzing for the moveable engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Replay a trace file on a catalog scene.
    Replay {
        #[arg(long)]
        scene: String,
        #[arg(long)]
        trace: PathBuf,
        /// Write the final layout document here.
        #[arg(long)]
        save_layout: Option<PathBuf>,
        /// Compare the final layout byte-for-byte with this file.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// List the catalog scenes.
    Scenes,
    /// Run a seeded random drag sequence, auditing after every event.
    Fuzz {
        #[arg(long)]
        scene: String,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the generated trace here.
        #[arg(long)]
        save_trace: Option<PathBuf>,
    },
    /// Serve JSON requests, one per line, on stdin/stdout.
    Boundary,
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn replay(scene: &str, trace: &Path, save_layout: Option<&Path>, golden: Option<&Path>) -> Result<u8, String> {
    let text = read(trace)?;
    let lines = parse_trace(&text).map_err(|e| format!("{}: {e}", trace.display()))?;
    let expected = golden.map(read).transpose()?;
    let report = run_trace(scene, &lines).map_err(|e| e.to_string())?;
    print!("{}", report.summary());
    if let Some(path) = save_layout {
        write(path, &report.layout)?;
    }
    let mut code = 0;
    if let (Some(expected), Some(path)) = (expected, golden) {
        if expected == report.layout {
            println!("golden {} matches", path.display());
        } else {
            println!("golden {} differs", path.display());
            let diff = TextDiff::from_lines(&expected, &report.layout);
            print!("{}", diff.unified_diff().header(&path.display().to_string(), "actual"));
            code = GOLDEN_MISMATCH;
        }
    }
    if !report.all_passed() {
        code = ASSERTION_FAILED;
    }
    Ok(code)
}

fn boundary() -> Result<u8, String> {
    let mut session = Session::new();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for line in io::stdin().lock().lines() {
        let line = line.map_err(|e| e.to_string())?;
        if line.trim().is_empty() {
            continue;
        }
        writeln!(out, "{}", session.handle_json(&line)).and_then(|()| out.flush()).map_err(|e| e.to_string())?;
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Replay { scene, trace, save_layout, golden } => {
            replay(&scene, &trace, save_layout.as_deref(), golden.as_deref())
        }
        Command::Scenes => {
            for name in SCENES {
                println!("{name}");
            }
            Ok(0)
        }
        Command::Fuzz { scene, steps, seed, save_trace } => {
            let report = fuzz(&scene, steps, seed).map_err(|e| e.to_string())?;
            print!("{}", report.to_text());
            if let Some(path) = save_trace {
                write(&path, &format_trace(&report.trace))?;
            }
            Ok(if report.ok() { 0 } else { ASSERTION_FAILED })
        }
        Command::Boundary => boundary(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(USAGE)
        }
    }
}
