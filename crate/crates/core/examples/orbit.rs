// Orbit sizes of a few small graphs.

use lcomp::graph::{orbit, orbit_with_threads};
use lcomp::Graph;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let named = [
        ("K4", Graph::complete(4)),
        ("P4", Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])?),
        (
            "C5",
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])?,
        ),
        ("K2 + K1", Graph::from_edges(3, &[(0, 1)])?),
    ];
    for (name, g) in &named {
        let o = orbit(g, 10_000)?;
        assert_eq!(o, orbit_with_threads(g, 10_000, 4)?);
        println!("{name}: {} labeled graphs", o.len());
    }
    Ok(())
}
