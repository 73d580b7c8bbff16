//! Heegaard moves preserve validity, admissibility of nice results, and homology.

mod common;

use proptest::prelude::*;

use hfcalc::floer::FloerComplex;
use hfcalc::moves::{add_point, finger_move, handleslide, mirror, stabilize, twist, MoveScript};
use hfcalc::standard::{lens_space, s1_cross_s2, sphere, toy_triple};
use hfcalc::surface::{parse_diagram, CurveClass, CurveId, Diagram};
use hfcalc::triangles::TriangleMap;

use common::corpus_diagrams;

/// Nonzero ranks per class, sorted. Moves may add acyclic classes.
fn ranks(d: &Diagram) -> Vec<usize> {
    if d.is_triple() {
        let m = TriangleMap::new(d).unwrap();
        let mut r: Vec<usize> = (0..m.labels.len()).map(|c| m.rank(c)).collect();
        r.sort_unstable();
        r.retain(|&x| x > 0);
        r
    } else {
        let cx = FloerComplex::new(d).unwrap();
        let mut r: Vec<usize> = (0..cx.classes.len()).map(|c| cx.class_rank(c)).collect();
        r.sort_unstable();
        r.retain(|&x| x > 0);
        r
    }
}

fn bases() -> Vec<Diagram> {
    vec![sphere().unwrap(), s1_cross_s2().unwrap(), lens_space(2).unwrap(), lens_space(3).unwrap(), toy_triple().unwrap()]
}

/// Stabilized in the basepoint region, so that finger moves there stay nice.
fn stabilized_bases() -> Vec<Diagram> {
    bases()
        .into_iter()
        .map(|d| {
            let z = d.basepoint_regions()[0];
            stabilize(&d, z, z).unwrap()
        })
        .collect()
}

#[test]
fn stabilization_keeps_ranks() {
    for d in bases() {
        let z = d.basepoint_regions()[0];
        let s = stabilize(&d, z, z).unwrap();
        assert!(s.is_nice());
        assert_eq!(s.genus(), d.genus() + 1);
        assert_eq!(ranks(&s), ranks(&d));
    }
}

#[test]
fn stabilize_needs_one_region() {
    let d = s1_cross_s2().unwrap();
    assert!(stabilize(&d, 0, 1).is_err());
}

#[test]
fn add_point_doubles_ranks() {
    for d in bases() {
        let z = d.basepoint_regions()[0];
        let two = add_point(&d, z).unwrap();
        assert_eq!(two.k(), d.k() + 1);
        assert!(two.is_nice() && two.is_weakly_admissible());
        if d.is_triple() {
            let m = TriangleMap::new(&two).unwrap();
            let mut raw: Vec<usize> = (0..m.labels.len()).map(|c| m.rank(c)).collect();
            raw.sort_unstable();
            assert_eq!(raw, ranks(&d).iter().map(|r| 2 * r).collect::<Vec<_>>());
        } else {
            let total: usize = ranks(&two).iter().sum();
            assert_eq!(total, 2 * ranks(&d).iter().sum::<usize>());
        }
    }
}

#[test]
fn short_finger_is_identity() {
    let d = s1_cross_s2().unwrap();
    let same = finger_move(&d, 0, &[d.edges()[0].left]).unwrap();
    assert_eq!(same.to_string(), d.to_string());
}

#[test]
fn nice_handleslides_keep_ranks() {
    let mut nice = 0;
    for d in stabilized_bases() {
        let before = ranks(&d);
        let curves: Vec<CurveId> = d.curves().collect();
        for &c in &curves {
            for &over in &curves {
                if c == over || c.class != over.class {
                    continue;
                }
                for r in 0..d.regions().len() {
                    if let Ok(s) = handleslide(&d, c, over, &[r]) {
                        if s.is_nice() {
                            assert_eq!(ranks(&s), before);
                            nice += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(nice > 0, "no nice handleslide found");
}

#[test]
fn twists_keep_ranks() {
    for d in stabilized_bases().into_iter().filter(|d| !d.is_triple()) {
        let a = CurveId::new(CurveClass::Alpha, 1);
        let b = CurveId::new(CurveClass::Beta, 1);
        for count in [-2, -1, 1, 2] {
            let t = twist(&d, a, b, count).unwrap();
            assert!(t.is_nice());
            assert_eq!(ranks(&t), ranks(&d), "twist by {count}");
        }
    }
}

#[test]
fn mirror_ranks() {
    for d in bases() {
        let m = mirror(&d).unwrap();
        assert_eq!(mirror(&m).unwrap().to_string(), d.to_string());
        if d.is_triple() {
            // The toy is a negative-definite blow-up; its mirror is positive definite,
            // has no positive triangles, and its hat map vanishes.
            let map = TriangleMap::new(&m).unwrap();
            assert!(map.triangles.iter().all(|t| !t.positive));
            assert!(map.labels.is_empty());
        } else {
            assert_eq!(ranks(&m), ranks(&d));
        }
    }
}

#[test]
fn scripts_round_trip() {
    let text = "stabilize(0, 0)\nfinger(3, [0, 2])\nhandleslide(a1, a0, [2])\ntwist(g1, b1, -1)\nadd_point(0)\n";
    let s = MoveScript::parse(text).unwrap();
    assert_eq!(s.to_string(), text);
    assert_eq!(MoveScript::parse("stabilize(0, 0); finger(3, [0, 2])").unwrap().moves.len(), 2);
    assert!(MoveScript::parse("wiggle(1)").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Random finger moves on corpus diagrams: the result is a valid diagram that
    /// survives a serialization round trip; when nice it is weakly admissible,
    /// has a punctured region beside every curve, and has the same homology.
    #[test]
    fn random_fingers(which in 0usize..64, edge in 0usize..64, left in any::<bool>(), r2 in 0usize..64, r3 in proptest::option::of(0usize..64)) {
        let diagrams: Vec<Diagram> = corpus_diagrams().into_iter().map(|(_, d)| d).chain(stabilized_bases()).collect();
        let d = &diagrams[which % diagrams.len()];
        let e = edge % d.edges().len();
        let r1 = if left { d.edges()[e].left } else { d.edges()[e].right };
        let mut path = vec![r1, r2 % d.regions().len()];
        if let Some(r3) = r3 {
            path.push(r3 % d.regions().len());
        }
        let Ok(f) = finger_move(d, e, &path) else { return Ok(()) };
        let again = parse_diagram(&f.to_string()).unwrap();
        prop_assert_eq!(again.to_string(), f.to_string());
        prop_assert_eq!(f.genus(), d.genus());
        if f.is_nice() {
            prop_assert!(f.is_weakly_admissible());
            for c in f.curves() {
                for side in [true, false] {
                    prop_assert_ne!(f.left_adjacency_check(c, side), hfcalc::surface::AdjacencyCheck::HypothesisViolated);
                }
            }
            if d.is_nice() {
                prop_assert_eq!(ranks(&f), ranks(d));
            }
        }
    }
}
