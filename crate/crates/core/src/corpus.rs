//! Regression corpus: a TOML manifest of diagram files with expected properties.
//!
//! ```toml
//! [[entry]]
//! name = "s1xs2"
//! file = "s1xs2.hd"
//! nice = true
//! generators = 2
//! ranks = [2]
//! gradings = [[[0, 1], [1, 1]]]
//!
//! [[entry]]
//! name = "toy"
//! file = "toy.hd"
//! script = "stabilize(0, 0)"
//! map_ranks = [1, 1]
//! ```
//!
//! Entries run in parallel; their reports are emitted in manifest order.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Deserialize;

use crate::cobordism::class_ranks;
use crate::error::HfError;
use crate::floer::FloerComplex;
use crate::moves::MoveScript;
use crate::report;
use crate::surface::{parse_diagram, Diagram};
use crate::triangles::TriangleMap;

#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub entry: Vec<Entry>,
}

/// One diagram and what it should satisfy. Absent fields are not checked.
#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub name: String,
    /// Relative to the manifest's directory.
    pub file: PathBuf,
    /// Moves applied after loading.
    pub script: Option<String>,
    pub nice: Option<bool>,
    pub admissible: Option<bool>,
    /// Number of generators of a double diagram.
    pub generators: Option<usize>,
    /// Homology rank per Spin^c class, in class order.
    pub ranks: Option<Vec<usize>>,
    /// Per class, (grading, rank) pairs.
    pub gradings: Option<Vec<Vec<[i64; 2]>>>,
    /// Number of embedded triangles of a triple diagram.
    pub triangles: Option<usize>,
    /// 2-handle rank per class of the triangle map.
    pub map_ranks: Option<Vec<usize>>,
    /// The entry must fail to load; the error message must contain this text.
    pub error: Option<String>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest, toml::de::Error> {
        toml::from_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Expectation mismatches.
    Fail(Vec<String>),
    /// The computation itself failed.
    Error(HfError),
    /// The file could not be read.
    Missing(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryResult {
    pub name: String,
    pub text: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusReport {
    pub entries: Vec<EntryResult>,
}

impl CorpusReport {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.outcome == Outcome::Pass).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.entries.len()
    }

    /// 0 if everything passed, 3 on a consistency error, 2 on unreadable input, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        let outcomes = || self.entries.iter().map(|e| &e.outcome);
        if outcomes().any(|o| matches!(o, Outcome::Error(HfError::Consistency(_)))) {
            3
        } else if outcomes().any(|o| matches!(o, Outcome::Missing(_))) {
            2
        } else if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        if self.entries.is_empty() {
            s.push_str("warning: empty manifest\n");
        }
        for e in &self.entries {
            writeln!(s, "== {}", e.name).unwrap();
            s.push_str(&e.text);
            match &e.outcome {
                Outcome::Pass => writeln!(s, "result pass").unwrap(),
                Outcome::Fail(why) => writeln!(s, "result FAIL: {}", why.join("; ")).unwrap(),
                Outcome::Error(err) => writeln!(s, "result ERROR: {err}").unwrap(),
                Outcome::Missing(msg) => writeln!(s, "result MISSING: {msg}").unwrap(),
            }
        }
        writeln!(s, "corpus: {} entries, {} passed, {} failed", self.entries.len(), self.passed(), self.entries.len() - self.passed())
            .unwrap();
        s
    }
}

/// Load a manifest file and run every entry, resolving paths against its directory.
pub fn run_manifest_file(path: &Path) -> std::io::Result<CorpusReport> {
    let text = std::fs::read_to_string(path)?;
    let manifest = Manifest::parse(&text).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
    let base = path.parent().unwrap_or(Path::new("."));
    Ok(run_corpus(&manifest, base))
}

pub fn run_corpus(manifest: &Manifest, base: &Path) -> CorpusReport {
    let entries = manifest.entry.par_iter().map(|e| run_entry(e, base)).collect();
    CorpusReport { entries }
}

fn load(entry: &Entry, text: &str) -> Result<Diagram, HfError> {
    let d = parse_diagram(text)?;
    match &entry.script {
        Some(script) => MoveScript::parse(script)?.apply(&d),
        None => Ok(d),
    }
}

pub fn run_entry(entry: &Entry, base: &Path) -> EntryResult {
    let name = entry.name.clone();
    let path = base.join(&entry.file);
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => return EntryResult { name, text: String::new(), outcome: Outcome::Missing(format!("{}: {e}", path.display())) },
    };
    let mut out = String::new();
    let mut fails = Vec::new();
    let d = match load(entry, &text) {
        Ok(d) => d,
        Err(err) => {
            let outcome = match &entry.error {
                Some(want) if err.to_string().contains(want.as_str()) => {
                    writeln!(out, "error as expected: {err}").unwrap();
                    Outcome::Pass
                }
                Some(want) => Outcome::Fail(vec![format!("expected error containing `{want}`, got `{err}`")]),
                None => Outcome::Error(err),
            };
            return EntryResult { name, text: out, outcome };
        }
    };
    if let Some(want) = &entry.error {
        fails.push(format!("expected error containing `{want}`, but the diagram loaded"));
    }
    if let Some(script) = &entry.script {
        writeln!(out, "script {script}").unwrap();
    }
    out.push_str(&report::info(&d));
    let (checks, _) = report::validate(&d);
    out.push_str(&checks);
    let nice = d.is_nice();
    if entry.nice.is_some_and(|n| n != nice) {
        fails.push(format!("nice: expected {}, got {nice}", !nice));
    }
    if let Some(want) = entry.admissible {
        let got = d.is_weakly_admissible();
        if got != want {
            fails.push(format!("admissible: expected {want}, got {got}"));
        }
    }
    let computed = if d.is_triple() { check_triple(entry, &d, &mut out, &mut fails) } else { check_double(entry, &d, &mut out, &mut fails) };
    let outcome = match computed {
        Err(err) => Outcome::Error(err),
        Ok(()) if fails.is_empty() => Outcome::Pass,
        Ok(()) => Outcome::Fail(fails),
    };
    EntryResult { name, text: out, outcome }
}

fn check_double(entry: &Entry, d: &Diagram, out: &mut String, fails: &mut Vec<String>) -> Result<(), HfError> {
    if entry.generators.is_none() && entry.ranks.is_none() && entry.gradings.is_none() {
        return Ok(());
    }
    let cx = FloerComplex::new(d)?;
    out.push_str(&report::hf(&cx, false));
    if let Some(want) = entry.generators {
        if cx.len() != want {
            fails.push(format!("generators: expected {want}, got {}", cx.len()));
        }
    }
    let ranks: Vec<usize> = (0..cx.classes.len()).map(|c| cx.class_rank(c)).collect();
    if let Some(want) = &entry.ranks {
        if &ranks != want {
            fails.push(format!("ranks: expected {want:?}, got {ranks:?}"));
        }
    }
    if let Some(want) = &entry.gradings {
        let got: Vec<Vec<[i64; 2]>> = (0..cx.classes.len())
            .map(|c| cx.class_rank_by_grading(c).unwrap_or_default().into_iter().map(|(g, r)| [g, r as i64]).collect())
            .collect();
        if &got != want {
            fails.push(format!("gradings: expected {want:?}, got {got:?}"));
        }
    }
    Ok(())
}

fn check_triple(entry: &Entry, d: &Diagram, out: &mut String, fails: &mut Vec<String>) -> Result<(), HfError> {
    if entry.triangles.is_none() && entry.map_ranks.is_none() {
        return Ok(());
    }
    let map = TriangleMap::new(d)?;
    let classes = class_ranks(&map, d.k() + 1, None)?;
    out.push_str(&report::map(&map, &classes, false, false));
    if let Some(want) = entry.triangles {
        if map.triangles.len() != want {
            fails.push(format!("triangles: expected {want}, got {}", map.triangles.len()));
        }
    }
    if let Some(want) = &entry.map_ranks {
        let got: Vec<usize> = classes.iter().map(|c| c.rank).collect();
        if &got != want {
            fails.push(format!("map ranks: expected {want:?}, got {got:?}"));
        }
    }
    Ok(())
}
