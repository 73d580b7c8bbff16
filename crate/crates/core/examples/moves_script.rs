//! Apply a scripted sequence of Heegaard moves and compare homology before and after.
//!
//! ```text
//! cargo run --example moves_script
//! cargo run --example moves_script -- crates/core/corpus/l3.hd "stabilize(1, 1); finger(0, [0, 1])"
//! ```

use hfcalc::floer::FloerComplex;
use hfcalc::moves::MoveScript;
use hfcalc::standard::s1_cross_s2;
use hfcalc::surface::{parse_diagram, Diagram};

fn ranks(d: &Diagram) -> hfcalc::Result<Vec<usize>> {
    let cx = FloerComplex::new(d)?;
    Ok((0..cx.classes.len()).map(|c| cx.class_rank(c)).collect())
}

fn main() -> hfcalc::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (d, script) = match args.as_slice() {
        [file, script] => (parse_diagram(&std::fs::read_to_string(file).expect("readable diagram file"))?, script.clone()),
        _ => (s1_cross_s2()?, "stabilize(0, 0)\nfinger(0, [1, 0])\nfinger(0, [3, 0])\nfinger(0, [5, 0])".to_string()),
    };
    let script = MoveScript::parse(&script)?;
    let moved = script.apply(&d)?;
    println!("script:\n{script}");
    println!("before: {} vertices, ranks {:?}", d.vertices().len(), ranks(&d)?);
    println!("after:  {} vertices, nice {}", moved.vertices().len(), moved.is_nice());
    if moved.is_nice() {
        println!("after:  ranks {:?}", ranks(&moved)?);
    }
    Ok(())
}
