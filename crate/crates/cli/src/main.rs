//! `bipyr` — bipyramid volume bounds for multicrossing link diagrams.
//!
//! Exit codes: 0 on success, 1 when an internal self-check fails, 2 when the
//! input is unusable (bad file, bad sequence, bad arguments).

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bipyr::builtin::builtin_examples;
use bipyr::decomposition::crossing_signature;
use bipyr::diagram::{parse_diagram, to_json};
use bipyr::enumeration::enumerate_crossings;
use bipyr::realization::{realize_capped, RealizeError, SizeSequence, DEFAULT_MAX_SUM};
use bipyr::report::AnalyzeError;
use bipyr::volume::{lobachevsky, maxvol, table1};
use clap::{Args, Parser, Subcommand};

const MAX_SUM_VAR: &str = "BIPYR_MAX_SUM";

#[derive(Parser)]
#[command(name = "bipyr", version, about = "Bipyramid volume bounds for multicrossing link diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a diagram file and report signatures, face sizes and volume bounds.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build a crossing whose signature is the given comma-separated sequence.
    Realize {
        /// e.g. 4,8,8,4
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// Census of all n-crossings grouped by signature.
    Enumerate {
        n: usize,
        /// Count a crossing and its reflection once.
        #[arg(long)]
        fold_reflections: bool,
        #[command(flatten)]
        format: MachineFormat,
    },
    /// Best-case, worst-case and octahedral bounds for single n-crossings, as CSV.
    Table {
        #[arg(long = "n", value_delimiter = ',', default_values_t = [3usize, 4, 5, 10, 100])]
        ns: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// The Lobachevsky function at theta (radians).
    Lob {
        #[arg(allow_negative_numbers = true)]
        theta: f64,
    },
    /// Volume of the maximal ideal bipyramid with m side vertices.
    Maxvol { m: u32 },
    /// List the built-in diagrams, or write them as JSON files.
    Examples {
        #[arg(long)]
        write_dir: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct MachineFormat {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    csv: bool,
}

/// Why a command failed, which decides the exit code.
enum Failure {
    Input(String),
    Internal(String),
}

impl Failure {
    fn input(e: impl std::fmt::Display) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Analyze { file, json } => cmd_analyze(&file, json),
        Command::Realize { sequence, json } => cmd_realize(&sequence, json),
        Command::Enumerate { n, fold_reflections, format } => cmd_enumerate(n, fold_reflections, &format),
        Command::Table { ns, json } => cmd_table(&ns, json),
        Command::Lob { theta } => {
            let v = lobachevsky(theta).map_err(Failure::input)?;
            Ok(format!("{v}\n"))
        }
        Command::Maxvol { m } => Ok(format!("{}\n", maxvol(m))),
        Command::Examples { write_dir } => cmd_examples(write_dir.as_deref()),
    }
}

fn to_pretty_json<T: serde::Serialize>(value: &T) -> CmdResult {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Internal(e.to_string()))
}

fn cmd_analyze(path: &Path, json: bool) -> CmdResult {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let diagram = parse_diagram(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let report = bipyr::analyze(&diagram).map_err(|e| match e {
        AnalyzeError::Diagram(e) => Failure::Input(format!("{}: {e}", path.display())),
        AnalyzeError::Internal(e) => Failure::Internal(e.to_string()),
    })?;
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    if json {
        to_pretty_json(&report)
    } else {
        Ok(render::analyze(&report))
    }
}

fn max_sum() -> Result<u64, Failure> {
    match std::env::var(MAX_SUM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{MAX_SUM_VAR}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_MAX_SUM),
    }
}

#[derive(serde::Serialize)]
struct RealizeOutput {
    sequence: Vec<u32>,
    strands: usize,
    levels: Vec<u32>,
    signature: Vec<u32>,
    verified: bool,
}

fn cmd_realize(text: &str, json: bool) -> CmdResult {
    let seq: SizeSequence = text.parse().map_err(Failure::input)?;
    let crossing = realize_capped(seq.entries(), max_sum()?).map_err(|e| match e {
        RealizeError::Inadmissible(e) => Failure::input(e),
        RealizeError::Internal(e) => Failure::Internal(e.to_string()),
    })?;
    let signature = crossing_signature(&crossing).sizes;
    if signature != seq.entries() {
        return Err(Failure::Internal(format!(
            "realized levels {:?} have signature {signature:?}",
            crossing.levels()
        )));
    }
    let out = RealizeOutput {
        sequence: seq.0.clone(),
        strands: crossing.size(),
        levels: crossing.levels().to_vec(),
        verified: true,
        signature,
    };
    if json {
        to_pretty_json(&out)
    } else {
        Ok(format!(
            "levels    {}\nsignature {} (verified)\n",
            render::list(&out.levels),
            render::list(&out.signature)
        ))
    }
}

fn cmd_enumerate(n: usize, fold: bool, format: &MachineFormat) -> CmdResult {
    if n < 2 {
        return Err(Failure::Input(format!("a crossing needs at least 2 strands, got {n}")));
    }
    let census = enumerate_crossings(n, fold).map_err(Failure::input)?;
    if format.json {
        to_pretty_json(&census)
    } else if format.csv {
        Ok(render::census_csv(&census))
    } else {
        Ok(render::census_summary(&census))
    }
}

fn cmd_table(ns: &[usize], json: bool) -> CmdResult {
    let rows = table1(ns).map_err(Failure::input)?;
    if json {
        to_pretty_json(&rows)
    } else {
        Ok(render::table_csv(&rows))
    }
}

fn cmd_examples(dir: Option<&Path>) -> CmdResult {
    let diagrams = builtin_examples();
    let Some(dir) = dir else {
        return Ok(render::examples(&diagrams));
    };
    fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    let mut out = String::new();
    for d in &diagrams {
        let path = dir.join(format!("{}.json", d.name()));
        fs::write(&path, to_json(d)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        out.push_str(&format!("{}\n", path.display()));
    }
    Ok(out)
}
