mod common;

use num_rational::BigRational;

use hfcalc::floer::{enumerate_generators, Connections};
use hfcalc::surface::{domain_boundary, euler_measure, parse_diagram, CurveClass, Diagram, Domain};

fn load(name: &str) -> Diagram {
    parse_diagram(&std::fs::read_to_string(common::corpus_dir().join(name)).unwrap()).unwrap()
}

fn text(name: &str) -> String {
    std::fs::read_to_string(common::corpus_dir().join(name)).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn round_trip_through_text() {
    for name in ["s3.hd", "s1xs2.hd", "l3.hd", "toy.hd", "s3-2pt.hd"] {
        let d = load(name);
        assert_eq!(parse_diagram(&d.to_string()).unwrap(), d, "{name}");
    }
}

#[test]
fn malformed_files_are_rejected() {
    let s3 = text("s3.hd");
    let err = |t: String| parse_diagram(&t).unwrap_err().to_string();
    assert!(err(s3.replace("corners=4", "corners=3")).contains("corner count mismatch"));
    assert!(err(s3.replace("basepoint z1 region=0\n", "")).contains("basepoints"));
    assert!(err(s3.replace("edge 1 b0", "edge 1 a1")).contains("same-class"));
    let short = err(s3.replace("vertex 0 0:s 1:s 0:t 1:t", "vertex 0 0:s 1:s 0:t"));
    assert!(short.contains("line 2") && short.contains("non-4-valent"), "{short}");
    assert!(err(text("toy.hd").replace("triple=1", "triple=0")).contains("gamma"));
}

#[test]
fn euler_measures_of_small_regions() {
    let s1 = load("s1xs2.hd");
    // Regions 1 and 2 are bigons, region 0 an annulus with two corners per side.
    assert_eq!(euler_measure(&s1, &Domain::region(3, 1)), q(1, 2));
    assert_eq!(euler_measure(&s1, &Domain::region(3, 0)), q(-1, 1));
    assert_eq!(euler_measure(&s1, &Domain::whole(3)), BigRational::from_integer(0.into()));
    let toy = load("toy.hd");
    assert_eq!(euler_measure(&toy, &Domain::region(3, 1)), q(1, 4));
    let l2 = load("l2.hd");
    assert_eq!(euler_measure(&l2, &Domain::region(2, 0)), q(0, 1));
    assert_eq!(euler_measure(&l2, &Domain::zero(2)), q(0, 1));
}

#[test]
fn boundary_of_whole_surface_vanishes() {
    for (name, d) in common::corpus_diagrams() {
        let b = domain_boundary(&d, &Domain::whole(d.regions().len()));
        assert!(b.iter().all(|&c| c == 0), "{name}");
    }
    let s1 = load("s1xs2.hd");
    let b = domain_boundary(&s1, &Domain::region(3, 1));
    assert_eq!(b.iter().filter(|&&c| c != 0).count(), 2);
}

#[test]
fn components_and_niceness() {
    use CurveClass::*;
    let s1 = load("s1xs2.hd");
    assert_eq!(s1.components_without(Alpha).len(), 1);
    assert_eq!(s1.components_without(Beta).len(), 1);
    assert!(s1.is_nice());
    let two = load("s3-2pt.hd");
    let comps = two.components_without(Alpha);
    assert_eq!(comps.len(), 2);
    let zs = two.basepoint_regions();
    for c in comps {
        assert_eq!(zs.iter().filter(|z| c.contains(z)).count(), 1);
    }
    assert!(load("l3.hd").is_nice());
}

#[test]
fn forgetting_a_class_of_the_toy_triple() {
    let toy = load("toy.hd");
    let ab = toy.forget_class(CurveClass::Gamma).unwrap();
    assert!(!ab.is_triple());
    assert_eq!(ab.vertices().len(), 1);
    assert!(ab.is_nice());
    assert!(ab.forget_class(CurveClass::Gamma).is_err());
}

#[test]
fn periodic_domains_of_standard_diagrams() {
    use CurveClass::*;
    assert!(load("s3.hd").periodic_domain_basis(&[Alpha, Beta]).is_empty());
    assert!(load("l5.hd").periodic_domain_basis(&[Alpha, Beta]).is_empty());
    let s1 = load("s1xs2.hd");
    let basis = s1.periodic_domain_basis(&[Alpha, Beta]);
    assert_eq!(basis.len(), 1);
    let p = &basis[0];
    assert_eq!(p.coeffs[0], 0.into());
    assert_eq!(p.coeffs[1] + p.coeffs[2], 0.into());
    assert!(s1.is_weakly_admissible());
    assert!(load("s3.hd").is_weakly_admissible());
}

#[test]
fn generators_and_connecting_domains() {
    assert_eq!(enumerate_generators(&load("s3.hd")).len(), 1);
    for p in [2, 3, 5] {
        assert_eq!(enumerate_generators(&load(&format!("l{p}.hd"))).len(), p);
    }
    let s1 = load("s1xs2.hd");
    let gens = enumerate_generators(&s1);
    assert_eq!(gens.len(), 2);
    let conn = Connections::new(&s1);
    let x: Vec<usize> = gens[0].to_vec();
    let y: Vec<usize> = gens[1].to_vec();
    assert!(conn.connecting_domain(&x, &x).unwrap().is_zero());
    let d = conn.connecting_domain(&x, &y).unwrap();
    assert!(d.avoids_basepoints(&s1));
    assert_eq!(d.support().len(), 1);
    let l3 = load("l3.hd");
    let gens = enumerate_generators(&l3);
    let conn = Connections::new(&l3);
    let x: Vec<usize> = gens[0].to_vec();
    let y: Vec<usize> = gens[1].to_vec();
    assert!(conn.connecting_domain(&x, &y).is_none());
}

#[test]
fn toy_with_basepoint_in_a_triangle() {
    use hfcalc::triangles::{enumerate_triangles, overlap_type, Overlap};
    let toy = load("toy.hd");
    let tris = enumerate_triangles(&toy).unwrap();
    assert_eq!(overlap_type(&toy, &tris[0], &tris[1]), Overlap::Disjoint);
    assert_eq!(overlap_type(&toy, &tris[0], &tris[0]), Overlap::Forbidden);
    let moved = parse_diagram(&text("toy.hd").replace("basepoint z1 region=0", "basepoint z1 region=1")).unwrap();
    assert_eq!(enumerate_triangles(&moved).unwrap().len(), 1);
}

#[test]
fn theta_of_the_toy_is_its_only_generator() {
    use hfcalc::floer::FloerComplex;
    let (bg, _) = load("toy.hd").pair(CurveClass::Beta, CurveClass::Gamma).unwrap();
    let cx = FloerComplex::new(&bg).unwrap();
    assert_eq!(cx.theta_top().unwrap(), vec![0]);
    let cx = FloerComplex::new(&load("s1xs2.hd")).unwrap();
    let theta = cx.theta_top().unwrap();
    assert_eq!(theta.len(), 1);
    assert_eq!(cx.gradings[theta[0]], Some(1));
}
