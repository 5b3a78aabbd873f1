// Deciding local equivalence, with a witness that can be checked on its own.

use lcomp::graph::orbit;
use lcomp::lep::{solve_lep, verify_witness};
use lcomp::Graph;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k5 = Graph::complete(5);
    let star = Graph::star(5, 1)?;
    let verdict = solve_lep(&k5, &star)?;
    let witness = verdict
        .witness
        .as_ref()
        .expect("K5 and a star are equivalent");
    println!("K5 ~ star(1): yes, witness {witness}");
    assert!(verify_witness(witness, &k5, &star)?);

    let k2 = Graph::complete(2);
    let empty = Graph::empty(2);
    println!("K2 ~ edgeless: {}", solve_lep(&k2, &empty)?.equivalent());

    // The brute-force view of the same question.
    let class = orbit(&k5, 100)?;
    println!(
        "orbit of K5 has {} graphs, star(1) among them: {}",
        class.len(),
        class.contains(&star)
    );

    // A scrambled copy of a random-looking graph is still recognized.
    let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])?;
    let scrambled = c6.apply_sequence(&[0, 3, 5, 1, 0, 2])?;
    println!(
        "C6 ~ C6 * 035102: {}",
        solve_lep(&c6, &scrambled)?.equivalent()
    );
    Ok(())
}
