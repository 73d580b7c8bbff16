#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use hfcalc::corpus::Manifest;
use hfcalc::floer::FloerComplex;
use hfcalc::moves::MoveScript;
use hfcalc::surface::{parse_diagram, CurveClass, Diagram, Domain};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn manifest() -> Manifest {
    let text = std::fs::read_to_string(corpus_dir().join("manifest.toml")).unwrap();
    Manifest::parse(&text).unwrap()
}

/// Every loadable corpus entry, with its script applied.
pub fn corpus_diagrams() -> Vec<(String, Diagram)> {
    manifest()
        .entry
        .iter()
        .filter(|e| e.error.is_none())
        .map(|e| {
            let text = std::fs::read_to_string(corpus_dir().join(&e.file)).unwrap();
            let mut d = parse_diagram(&text).unwrap();
            if let Some(s) = &e.script {
                d = MoveScript::parse(s).unwrap().apply(&d).unwrap();
            }
            (e.name.clone(), d)
        })
        .collect()
}

/// The double diagrams reachable from the corpus: the double entries and the three pairs of each triple.
pub fn corpus_doubles() -> Vec<(String, Diagram)> {
    use CurveClass::*;
    let mut out = Vec::new();
    for (name, d) in corpus_diagrams() {
        if d.is_triple() {
            for (a, b) in [(Alpha, Beta), (Beta, Gamma), (Alpha, Gamma)] {
                out.push((format!("{name}/{a}{b}"), d.pair(a, b).unwrap().0));
            }
        } else {
            out.push((name, d));
        }
    }
    out
}

/// Dense GF(2) rank by plain row reduction.
pub fn dense_rank(rows: usize, cols: usize, get: impl Fn(usize, usize) -> bool) -> usize {
    let mut m: Vec<Vec<bool>> = (0..rows).map(|i| (0..cols).map(|j| get(i, j)).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c]) else { continue };
        m.swap(rank, p);
        for r in 0..rows {
            if r != rank && m[r][c] {
                let pivot = m[rank].clone();
                for (a, b) in m[r].iter_mut().zip(pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Differential of the hat complex found by scanning every 0/1 combination of
/// unpunctured regions for empty embedded bigons and rectangles.
///
/// Returns `(y, x) -> count` over generator indices of `cx`.
pub fn disk_oracle(d: &Diagram, cx: &FloerComplex) -> BTreeMap<(usize, usize), usize> {
    let free: Vec<usize> = (0..d.regions().len()).filter(|&r| !d.regions()[r].is_punctured()).collect();
    assert!(free.len() <= 20, "oracle is exponential in the number of regions");
    let index: BTreeMap<&Vec<usize>, usize> = cx.generators.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut counts = BTreeMap::new();
    for mask in 1u32..(1 << free.len()) {
        let mut dom = Domain::zero(d.regions().len());
        for (i, &r) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                dom.coeffs[r] = 1;
            }
        }
        let Some(shape) = d.shape(&dom) else { continue };
        if !shape.is_embedded_disk() || !(shape.convex.len() == 2 || shape.convex.len() == 4) {
            continue;
        }
        // Leaving a corner along alpha makes it a starting corner.
        let (mut xs, mut ys) = (Vec::new(), Vec::new());
        for &(v, q) in &shape.convex {
            let ray = d.rays(v)[q];
            match d.edges()[ray.edge].curve.class {
                CurveClass::Alpha => xs.push(v),
                _ => ys.push(v),
            }
        }
        if xs.len() != ys.len() {
            continue;
        }
        for (xi, x) in cx.generators.iter().enumerate() {
            if !xs.iter().all(|v| x.contains(v)) {
                continue;
            }
            let empty = x.iter().filter(|v| !xs.contains(v)).all(|&v| dom.corner_data(d, v).quadrants == [0; 4]);
            if !empty {
                continue;
            }
            let y: Option<Vec<usize>> = x
                .iter()
                .map(|&p| {
                    if !xs.contains(&p) {
                        return Some(p);
                    }
                    let a = d.vertex_curve_of(p, CurveClass::Alpha);
                    ys.iter().copied().find(|&w| d.vertex_curve_of(w, CurveClass::Alpha) == a)
                })
                .collect();
            if let Some(&yi) = y.as_ref().and_then(|y| index.get(y)) {
                *counts.entry((yi, xi)).or_insert(0) += 1;
            }
        }
    }
    counts
}
