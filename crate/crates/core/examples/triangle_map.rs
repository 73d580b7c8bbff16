//! Embedded triangles of the genus-one toy triple diagram and the triangle map
//! they define, checked against the exhaustive search.

use hfcalc::standard::toy_triple;
use hfcalc::triangles::{brute_force_triangles, enumerate_triangles, TriangleMap};

fn main() -> hfcalc::Result<()> {
    let d = toy_triple()?;
    let tris = enumerate_triangles(&d)?;
    for t in &tris {
        println!(
            "triangle corners {:?} regions {:?} positive {} e = {} index {}",
            t.corners,
            t.domain.support(),
            t.positive,
            t.euler_measure(&d),
            t.index(&d)
        );
    }
    assert_eq!(tris.len(), brute_force_triangles(&d).len());

    let map = TriangleMap::new(&d)?;
    println!("theta = {:?}", map.theta_generators());
    for c in 0..map.labels.len() {
        println!("class {c}: corner classes {:?}, rank {}", map.labels[c].corner_classes, map.rank(c));
    }
    Ok(())
}
