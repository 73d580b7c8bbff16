//! Library results checked against independent brute-force computations.

mod common;

use std::collections::BTreeSet;

use hfcalc::floer::FloerComplex;
use hfcalc::standard::{lens_space, toy_triple};
use hfcalc::triangles::{brute_force_triangles, enumerate_triangles, TriangleMap};

use common::{corpus_diagrams, corpus_doubles, dense_rank, disk_oracle};

#[test]
fn differential_matches_region_scan() {
    let mut checked = 0;
    let mut disks = 0;
    for (name, d) in corpus_doubles() {
        if !d.is_nice() || d.regions().iter().filter(|r| !r.is_punctured()).count() > 16 {
            continue;
        }
        let cx = FloerComplex::new(&d).unwrap();
        let oracle = disk_oracle(&d, &cx);
        for y in 0..cx.len() {
            for x in 0..cx.len() {
                let n = oracle.get(&(y, x)).copied().unwrap_or(0);
                assert_eq!(cx.differential.get(y, x), n % 2 == 1, "{name}: entry ({y}, {x})");
            }
        }
        // Each disk is found exactly once by the library.
        let total: usize = oracle.values().sum();
        assert_eq!(cx.disks.len(), total, "{name}: disk count");
        eprintln!("{name}: {} generators, {total} disks", cx.len());
        checked += 1;
        disks += total;
    }
    assert!(checked >= 20 && disks > 0, "oracle ran on {checked} diagrams with {disks} disks");
}

#[test]
fn homology_rank_matches_dense_elimination() {
    for (name, d) in corpus_doubles() {
        if !d.is_nice() {
            continue;
        }
        let cx = FloerComplex::new(&d).unwrap();
        let r = dense_rank(cx.len(), cx.len(), |i, j| cx.differential.get(i, j));
        assert_eq!(cx.total_rank(), cx.len() - 2 * r, "{name}");
        let per_class: usize = (0..cx.classes.len()).map(|c| cx.class_rank(c)).sum();
        assert_eq!(per_class, cx.total_rank(), "{name}");
    }
}

#[test]
fn lens_space_ranks() {
    // L(p,1) on the standard diagram: p generators in p classes and no disks.
    for p in 1..=7 {
        let cx = FloerComplex::new(&lens_space(p).unwrap()).unwrap();
        assert_eq!(cx.len(), p);
        assert_eq!(cx.classes.len(), p);
        assert!(cx.differential.is_zero());
        assert_eq!(cx.total_rank(), p);
    }
}

#[test]
fn triangles_match_exhaustive_search() {
    for (name, d) in corpus_diagrams() {
        if !d.is_triple() || d.regions().len() > 16 {
            continue;
        }
        let fast: BTreeSet<Vec<i64>> = enumerate_triangles(&d).unwrap().into_iter().map(|t| t.domain.coeffs).collect();
        let slow: BTreeSet<Vec<i64>> = brute_force_triangles(&d).into_iter().map(|t| t.domain.coeffs).collect();
        assert_eq!(fast, slow, "{name}");
    }
}

#[test]
fn toy_map_by_hand() {
    // One generator in each pair diagram; each of the two triangles is a
    // collection on its own, and they land in different classes.
    let d = toy_triple().unwrap();
    let map = TriangleMap::new(&d).unwrap();
    assert_eq!(map.ab.generators.len(), 1);
    assert_eq!(map.bg.generators.len(), 1);
    assert_eq!(map.ag.generators.len(), 1);
    assert_eq!(map.triangles.len(), 2);
    assert!(map.triangles.iter().all(|t| t.positive));
    assert_eq!(map.collections, 2);
    assert_eq!(map.labels.len(), 2);
    for c in 0..2 {
        assert!(map.matrices[c].get(0, 0));
        assert_eq!(map.rank(c), 1);
    }
}
