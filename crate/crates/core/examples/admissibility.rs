//! Weak admissibility and the punctured-region check on a few diagrams,
//! including one that fails admissibility.

use hfcalc::standard::{lens_space, parallel_curves, s1_cross_s2, toy_triple};
use hfcalc::surface::{AdjacencyCheck, Diagram};

fn report(name: &str, d: &Diagram) {
    println!("{name}: nice {} weakly admissible {}", d.is_nice(), d.is_weakly_admissible());
    if let Some(p) = d.admissibility_witness() {
        println!("  nonnegative periodic domain avoiding the basepoints: {:?}", p.coeffs);
    }
    for c in d.curves() {
        for left in [true, false] {
            if let AdjacencyCheck::Found { region, edge } = d.left_adjacency_check(c, left) {
                let side = if left { "left" } else { "right" };
                println!("  {c} {side}: punctured region {region} along edge {edge}");
            }
        }
    }
}

fn main() -> hfcalc::Result<()> {
    report("S^1 x S^2", &s1_cross_s2()?);
    report("L(3,1)", &lens_space(3)?);
    report("toy triple", &toy_triple()?);
    report("parallel curves", &parallel_curves()?);
    Ok(())
}
