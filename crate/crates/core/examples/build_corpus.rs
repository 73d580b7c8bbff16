//! Regenerate the bundled corpus diagrams from the built-in constructions.
//!
//! ```text
//! cargo run --example build_corpus -- crates/core/corpus
//! ```

use std::path::PathBuf;

use hfcalc::moves::{add_point, stabilize};
use hfcalc::standard::{lens_space, s1_cross_s2, sphere, toy_triple};
use hfcalc::surface::Diagram;

fn main() -> hfcalc::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "corpus".into()));
    std::fs::create_dir_all(&dir).expect("create output directory");

    let toy = toy_triple()?;
    let mut files: Vec<(&str, Diagram)> = vec![
        ("s3.hd", sphere()?),
        ("s1xs2.hd", s1_cross_s2()?),
        ("l2.hd", lens_space(2)?),
        ("l3.hd", lens_space(3)?),
        ("l5.hd", lens_space(5)?),
        ("toy.hd", toy.clone()),
        ("toy-stab.hd", stabilize(&toy, 0, 0)?),
        ("toy-2pt.hd", add_point(&toy, 0)?),
    ];
    files.push(("s3-2pt.hd", add_point(&files[0].1, 0)?));

    for (name, d) in &files {
        let path = dir.join(name);
        std::fs::write(&path, d.to_string()).expect("write diagram");
        println!("{} ({} vertices, {} regions)", path.display(), d.vertices().len(), d.regions().len());
    }
    Ok(())
}
