//! Rank of a 2-handle cobordism map from a triple diagram, with one and two basepoints.

use hfcalc::cobordism::{cobordism_rank, one_handle_map, three_handle_map, CobordismConfig};
use hfcalc::moves::add_point;
use hfcalc::standard::toy_triple;

fn main() -> hfcalc::Result<()> {
    let toy = toy_triple()?;
    let cfg = CobordismConfig { l: 1, assert_j1: true, assert_j2: true, ..Default::default() };
    let one = cobordism_rank(&toy, &cfg)?;
    println!("l = 1: total rank {}", one.total());

    // A second basepoint doubles the raw rank; the correction divides it back out.
    let two_pointed = add_point(&toy, 0)?;
    let cfg = CobordismConfig { l: 2, one_handles: 1, ..cfg };
    let two = cobordism_rank(&two_pointed, &cfg)?;
    for c in &two.classes {
        println!("l = 2: class {} raw {} corrected {}", c.class, c.raw, c.rank);
    }
    println!("hypotheses: {}", two.hypotheses);

    let refused = cobordism_rank(&toy, &CobordismConfig { l: 1, ..Default::default() });
    println!("without the hypotheses: {}", refused.unwrap_err());

    println!("one-handle map x -> x ⊗ θ on rank 3: rank {}", one_handle_map(2, 3).rank());
    println!("three-handle map on rank 3 ⊗ H(T^2): rank {}", three_handle_map(2, 3).rank());
    Ok(())
}
