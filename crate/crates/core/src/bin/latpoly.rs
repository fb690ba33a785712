use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use latpoly::cli::{self, CliError, Outcome, EXIT_PARSE};
use latpoly::document::PolytopeDocument;

#[derive(Parser)]
#[command(name = "latpoly", version, about = "Small lattice polytopes in dimension three: invariants, width, equivalence and classification")]
struct Args {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the enumerations.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Size, volumes, five-point vector, signature, width and dps flag.
    Invariants { input: PathBuf },
    /// Row of the size-5 classification.
    Classify { input: PathBuf },
    /// Unimodular equivalence of two polytopes.
    Equiv { a: PathBuf, b: PathBuf },
    /// White normal form of an empty tetrahedron.
    EmptyTetra { input: PathBuf },
    /// Lattice width and a witness functional.
    Width { input: PathBuf },
    /// JSON atlas of the classification.
    Atlas {
        #[arg(long, default_value_t = 5)]
        size: usize,
        #[arg(long)]
        widths_only: bool,
    },
    /// Minimal / quasi-minimal verdict.
    Minimality { input: PathBuf },
    /// Lattice polygons up to a number of lattice points.
    Polygons {
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        /// Only minimal and quasi-minimal ones.
        #[arg(long)]
        minimal: bool,
    },
}

enum Failure {
    Input(String),
    Command(CliError),
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        Failure::Command(e)
    }
}

fn load(path: &PathBuf) -> Result<PolytopeDocument, Failure> {
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    PolytopeDocument::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(args: &Args) -> Result<Outcome, Failure> {
    let j = args.json;
    Ok(match &args.cmd {
        Cmd::Invariants { input } => cli::cmd_invariants(&load(input)?, j)?,
        Cmd::Classify { input } => cli::cmd_classify(&load(input)?, j)?,
        Cmd::Equiv { a, b } => cli::cmd_equiv(&load(a)?, &load(b)?, j)?,
        Cmd::EmptyTetra { input } => cli::cmd_empty_tetra(&load(input)?, j)?,
        Cmd::Width { input } => cli::cmd_width(&load(input)?, j)?,
        Cmd::Atlas { size, widths_only } => cli::cmd_atlas(*size, *widths_only)?,
        Cmd::Minimality { input } => cli::cmd_minimality(&load(input)?, j)?,
        Cmd::Polygons { max_size, minimal } => cli::cmd_polygons(*max_size, *minimal, j)?,
    })
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(n) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("latpoly: {e}");
        }
    }
    match run(&args) {
        Ok(o) => {
            print!("{}", o.stdout);
            ExitCode::from(o.code as u8)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("latpoly: {msg}");
            ExitCode::from(EXIT_PARSE as u8)
        }
        Err(Failure::Command(e)) => {
            eprintln!("latpoly: {e}");
            ExitCode::from(e.code() as u8)
        }
    }
}
