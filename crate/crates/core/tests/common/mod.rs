#![allow(dead_code)]

use lcomp::circuit::{Circuit, CircuitBuilder};
use lcomp::Graph;
use rand::Rng;

/// Random AND/OR/NOT circuit with `inputs` inputs and `gates` gates, output
/// on the last gate, dead gates removed. Operands favor unread and recent
/// gates so that most gates stay live and depth grows.
pub fn random_circuit(rng: &mut impl Rng, inputs: usize, gates: usize) -> Circuit {
    let mut b = CircuitBuilder::new();
    for i in 0..inputs {
        b.input(format!("x{i}"));
    }
    let mut unread: Vec<usize> = (0..inputs).collect();
    for k in 0..gates {
        let len = b.len();
        let (p, q) = (pick(rng, len, &mut unread), pick(rng, len, &mut unread));
        unread.push(len);
        match rng.gen_range(0..3) {
            0 => b.and(format!("g{k}"), p, q),
            1 => b.or(format!("g{k}"), p, q),
            _ => b.not(format!("g{k}"), p),
        };
    }
    let out = b.len() - 1;
    b.build(out).unwrap().prune()
}

fn pick(rng: &mut impl Rng, len: usize, unread: &mut Vec<usize>) -> usize {
    if !unread.is_empty() && rng.gen_bool(0.5) {
        unread.swap_remove(rng.gen_range(0..unread.len()))
    } else if rng.gen_bool(0.6) {
        len - 1 - rng.gen_range(0..len.min(4))
    } else {
        rng.gen_range(0..len)
    }
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}
