//! The equivalence decision checked against brute-force orbits and against a
//! full enumeration of the linear solution space.

mod common;

use std::collections::HashSet;

use common::{all_graphs, random_graph};
use lcomp::gf2::BitVector;
use lcomp::graph::orbit;
use lcomp::lep::{build_system, satisfies_nonlinear, solve_lep, verify_witness};
use lcomp::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every combination of the nullspace basis, tested against the per-vertex
/// equations. Independent of the solver's short-sum search.
fn exhaustive_solution(g1: &Graph, g2: &Graph) -> (usize, bool) {
    let basis = build_system(g1, g2).unwrap().coeffs().nullspace_basis();
    let d = basis.len();
    assert!(d <= 20, "dimension {d} too large to enumerate");
    let found = (1u32..1 << d).any(|mask| {
        let mut acc = BitVector::zeros(4 * g1.n());
        for (i, b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acc.xor_assign(b).unwrap();
            }
        }
        satisfies_nonlinear(&acc, g1.n()).unwrap()
    });
    (d, found)
}

#[test]
fn all_pairs_on_four_vertices_match_orbits() {
    let graphs = all_graphs(4);
    assert_eq!(graphs.len(), 64);
    let mut decisions = 0;
    for a in &graphs {
        let o: HashSet<Graph> = orbit(a, 1000).unwrap().into_iter().collect();
        for b in &graphs {
            let verdict = solve_lep(a, b).unwrap();
            assert_eq!(verdict.equivalent(), o.contains(b), "{a:?} vs {b:?}");
            if let Some(w) = &verdict.witness {
                assert!(verify_witness(w, a, b).unwrap());
            }
            decisions += 1;
        }
    }
    assert_eq!(decisions, 4096);
}

#[test]
fn five_vertex_graphs_match_orbits() {
    let graphs = all_graphs(5);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for a in &graphs {
        let o: HashSet<Graph> = orbit(a, 10_000).unwrap().into_iter().collect();
        for b in &o {
            assert!(solve_lep(a, b).unwrap().equivalent(), "{a:?} vs {b:?}");
        }
        for _ in 0..20 {
            let b = &graphs[rng.gen_range(0..graphs.len())];
            assert_eq!(solve_lep(a, b).unwrap().equivalent(), o.contains(b));
        }
    }
}

#[test]
fn short_sum_search_agrees_with_full_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut checked = 0;
    for a in all_graphs(4) {
        for b in all_graphs(4) {
            let (d, found) = exhaustive_solution(&a, &b);
            if d <= 10 {
                assert_eq!(
                    solve_lep(&a, &b).unwrap().equivalent(),
                    found,
                    "{a:?} vs {b:?}"
                );
                checked += 1;
            }
        }
    }
    for _ in 0..2000 {
        let n = rng.gen_range(1..=5);
        let a = random_graph(&mut rng, n, 0.5);
        let b = if rng.gen_bool(0.5) {
            let s: Vec<usize> = (0..rng.gen_range(0..8))
                .map(|_| rng.gen_range(0..n))
                .collect();
            a.apply_sequence(&s).unwrap()
        } else {
            random_graph(&mut rng, n, 0.5)
        };
        let (d, found) = exhaustive_solution(&a, &b);
        if d <= 10 {
            assert_eq!(
                solve_lep(&a, &b).unwrap().equivalent(),
                found,
                "{a:?} vs {b:?}"
            );
            checked += 1;
        }
    }
    assert!(checked > 3000);
}

#[test]
fn random_positive_pairs_and_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let n = rng.gen_range(1..=32);
        let p = rng.gen_range(0.05..0.6);
        let g = random_graph(&mut rng, n, p);
        let s: Vec<usize> = (0..rng.gen_range(0..=50))
            .map(|_| rng.gen_range(0..n))
            .collect();
        let h = g.apply_sequence(&s).unwrap();
        let forward = solve_lep(&g, &h).unwrap();
        let backward = solve_lep(&h, &g).unwrap();
        assert!(forward.equivalent() && backward.equivalent());
        assert!(verify_witness(forward.witness.as_ref().unwrap(), &g, &h).unwrap());
        assert!(verify_witness(backward.witness.as_ref().unwrap(), &h, &g).unwrap());

        let other = random_graph(&mut rng, n, 0.3);
        assert_eq!(
            solve_lep(&g, &other).unwrap().equivalent(),
            solve_lep(&other, &g).unwrap().equivalent()
        );
    }
}

#[test]
fn witnesses_are_reproducible() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = random_graph(&mut rng, 20, 0.3);
    let h = g.apply_sequence(&[1, 5, 7, 2, 19]).unwrap();
    assert_eq!(solve_lep(&g, &h).unwrap(), solve_lep(&g, &h).unwrap());
}
