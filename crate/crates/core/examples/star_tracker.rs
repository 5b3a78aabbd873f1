// Following a long sequence on a complete graph without storing the graph.

use lcomp::{StarCompleteState, StarShape};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 1_000_000;
    let mut state = StarCompleteState::complete(n)?;
    let mut x: u64 = 0x9E37_79B9_7F4A_7C15;
    for _ in 0..100_000 {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        state = state.step((x % n as u64) as usize)?;
    }
    match state.shape() {
        StarShape::Complete => println!("after 100000 steps on K_{n}: complete"),
        StarShape::Star { center } => {
            println!("after 100000 steps on K_{n}: star centered at {center}")
        }
    }

    // Small enough to check against the explicit graph.
    let small = StarCompleteState::complete(6)?;
    let seq = [2, 4, 4, 1, 3, 3, 0];
    assert_eq!(
        small.track(&seq)?.to_graph(),
        small.to_graph().apply_sequence(&seq)?
    );
    Ok(())
}
