use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use hfcalc::cobordism::{class_ranks, cobordism_rank, CobordismConfig};
use hfcalc::corpus;
use hfcalc::floer::FloerComplex;
use hfcalc::moves::MoveScript;
use hfcalc::report;
use hfcalc::surface::{parse_diagram, Diagram};
use hfcalc::triangles::{enumerate_triangles, TriangleMap};
use hfcalc::HfError;

/// Hat Heegaard Floer homology and 2-handle map ranks from nice Heegaard diagrams.
///
/// Set HFCALC_THREADS to cap the number of worker threads.
#[derive(Parser)]
#[command(name = "hfcalc", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check niceness, weak admissibility and punctured regions beside every curve.
    Validate { file: PathBuf },
    /// Summarise the cell structure.
    Info { file: PathBuf },
    /// Hat homology of a double diagram, per Spin^c class and grading.
    Hf {
        file: PathBuf,
        #[arg(long)]
        tsv: bool,
    },
    /// Embedded triangles of a triple diagram.
    Triangles {
        file: PathBuf,
        #[arg(long)]
        tsv: bool,
    },
    /// The triangle map F(. ⊗ Θ) of a triple diagram, per class.
    Map {
        file: PathBuf,
        /// Also print the matrices.
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        tsv: bool,
        #[arg(long)]
        class: Option<usize>,
    },
    /// Rank of the cobordism map under the surjectivity hypotheses.
    Rank {
        file: PathBuf,
        /// Number of basepoints.
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 0)]
        one_handles: u32,
        #[arg(long, default_value_t = 0)]
        three_handles: u32,
        /// Assert that j1 is surjective.
        #[arg(long)]
        assert_j1: bool,
        /// Assert that j2 is surjective.
        #[arg(long)]
        assert_j2: bool,
        #[arg(long)]
        class: Option<usize>,
        #[arg(long)]
        tsv: bool,
    },
    /// Apply a move script and print the resulting diagram.
    Apply {
        file: PathBuf,
        /// Moves separated by `;` or newlines, e.g. `stabilize(0, 0); finger(3, [0, 2])`.
        script: String,
        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a corpus manifest.
    Corpus { manifest: PathBuf },
}

fn load(path: &Path) -> Result<Diagram> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_diagram(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Validate { file } => {
            let d = load(&file)?;
            let (text, ok) = report::validate(&d);
            print!("{text}");
            return Ok(if ok { 0 } else { 1 });
        }
        Cmd::Info { file } => print!("{}", report::info(&load(&file)?)),
        Cmd::Hf { file, tsv } => {
            let cx = FloerComplex::new(&load(&file)?)?;
            print!("{}", report::hf(&cx, tsv));
        }
        Cmd::Triangles { file, tsv } => {
            let d = load(&file)?;
            let tris = enumerate_triangles(&d)?;
            print!("{}", report::triangles(&d, &tris, tsv));
        }
        Cmd::Map { file, raw, tsv, class } => {
            let d = load(&file)?;
            let map = TriangleMap::new(&d)?;
            let classes = class_ranks(&map, d.k() + 1, class)?;
            print!("{}", report::map(&map, &classes, raw, tsv));
        }
        Cmd::Rank { file, l, one_handles, three_handles, assert_j1, assert_j2, class, tsv } => {
            let cfg = CobordismConfig { l, one_handles, three_handles, assert_j1, assert_j2, class };
            let r = cobordism_rank(&load(&file)?, &cfg)?;
            print!("{}", report::rank(&r, tsv));
        }
        Cmd::Apply { file, script, output } => {
            let d = MoveScript::parse(&script)?.apply(&load(&file)?)?;
            match output {
                Some(out) => std::fs::write(&out, d.to_string()).with_context(|| format!("writing {}", out.display()))?,
                None => print!("{d}"),
            }
        }
        Cmd::Corpus { manifest } => {
            let r = corpus::run_manifest_file(&manifest).with_context(|| format!("loading {}", manifest.display()))?;
            print!("{}", r.render());
            return Ok(r.exit_code() as u8);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("HFCALC_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // Fails only if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = match err.downcast_ref::<HfError>() {
                Some(HfError::Consistency(_)) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
