//! Brute-force local-equivalence classes.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("orbit exceeds the limit of {0} graphs")]
    LimitExceeded(usize),
    #[error("failed to start worker pool: {0}")]
    ThreadPool(String),
}

/// Every graph reachable from `g` by local complementations, in breadth-first
/// discovery order. Graphs are compared as labeled adjacency, not up to
/// isomorphism.
pub fn orbit(g: &Graph, node_limit: usize) -> Result<Vec<Graph>, OrbitError> {
    orbit_with_threads(g, node_limit, 1)
}

/// Same as [`orbit`], expanding each frontier on `threads` workers. Children
/// are merged in frontier order, so the output is identical for any thread
/// count.
pub fn orbit_with_threads(
    g: &Graph,
    node_limit: usize,
    threads: usize,
) -> Result<Vec<Graph>, OrbitError> {
    if threads <= 1 {
        return bfs(g, node_limit, false);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| OrbitError::ThreadPool(e.to_string()))?
        .install(|| bfs(g, node_limit, true))
}

fn children(g: &Graph) -> Vec<Graph> {
    g.vertices()
        .filter(|&v| g.degree(v) > 1)
        .map(|v| g.local_complement(v).expect("present vertex"))
        .collect()
}

fn bfs(start: &Graph, limit: usize, parallel: bool) -> Result<Vec<Graph>, OrbitError> {
    if limit == 0 {
        return Err(OrbitError::LimitExceeded(limit));
    }
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut order = vec![start.clone()];
    seen.insert(start.clone());
    let mut frontier = vec![start.clone()];

    while !frontier.is_empty() {
        let expanded: Vec<Vec<Graph>> = if parallel {
            frontier.par_iter().map(children).collect()
        } else {
            frontier.iter().map(children).collect()
        };
        let mut next = Vec::new();
        for child in expanded.into_iter().flatten() {
            if seen.insert(child.clone()) {
                if order.len() == limit {
                    return Err(OrbitError::LimitExceeded(limit));
                }
                order.push(child.clone());
                next.push(child);
            }
        }
        frontier = next;
    }
    Ok(order)
}
