//! Hat homology of the standard genus-one diagrams, or of a `.hd` file given
//! on the command line.
//!
//! ```text
//! cargo run --example hat_homology
//! cargo run --example hat_homology -- crates/core/corpus/l3.hd
//! ```

use hfcalc::floer::FloerComplex;
use hfcalc::standard::{lens_space, s1_cross_s2, sphere};
use hfcalc::surface::{parse_diagram, Diagram};

fn show(name: &str, d: &Diagram) -> hfcalc::Result<()> {
    let cx = FloerComplex::new(d)?;
    println!("{name}: {} generators, rank {}", cx.len(), cx.total_rank());
    for c in 0..cx.classes.len() {
        let gradings = cx.class_rank_by_grading(c).unwrap_or_default();
        println!("  class {c}: rank {} by grading {gradings:?}", cx.class_rank(c));
    }
    Ok(())
}

fn main() -> hfcalc::Result<()> {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable diagram file");
        return show(&path, &parse_diagram(&text)?);
    }
    show("S^3", &sphere()?)?;
    show("S^1 x S^2", &s1_cross_s2()?)?;
    for p in [2, 3, 5] {
        show(&format!("L({p},1)"), &lens_space(p)?)?;
    }
    Ok(())
}
