// Local complementation on a small graph, one step at a time.

use lcomp::{Graph, MixedOp, MixedSequence, QueryMode};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The path 0 - 1 - 2 - 3.
    let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])?;
    println!("start: {:?}", g.edges());

    let mut h = g.clone();
    for v in [1, 2, 1] {
        h.local_complement_in_place(v)?;
        println!("*{v}: {:?}", h.edges());
    }
    assert_eq!(h, g.apply_sequence(&[1, 2, 1])?);
    // Local complementation is an involution.
    assert_eq!(h.apply_sequence(&[1, 2, 1])?, g);

    // Vertex deletion interleaved with complementation.
    let seq = MixedSequence::new(vec![(1, MixedOp::Complement), (1, MixedOp::Delete)])?;
    let m = g.apply_mixed_sequence(&seq)?;
    println!("*1 then delete 1: {:?}", m.edges());
    println!(
        "0~2 adjacent: {}, 0~3 connected: {}",
        m.query(0, 2, QueryMode::Adjacent)?,
        m.query(0, 3, QueryMode::PathConnected)?
    );
    Ok(())
}
