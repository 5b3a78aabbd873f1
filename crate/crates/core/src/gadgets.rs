//! The four fixed gadgets and a brute-force circle-graph checker.
//!
//! A Boolean value lives on a pair of vertices: edge present means TRUE.
//! Running a gadget's sequence turns its output pairs on or off according
//! to its inputs, and never complements an output vertex.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("gadget takes {expected} input bit(s), got {got}")]
    Arity { expected: usize, got: usize },
    #[error("invalid ports: {0}")]
    InvalidPorts(String),
    #[error("sequence complements output vertex {0}")]
    SequenceTouchesOutput(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("circle search is limited to {max} vertices, graph has {n}")]
    CircleBudget { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetKind {
    Copy,
    Not,
    And,
    Dup,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 4] = [
        GadgetKind::Copy,
        GadgetKind::Not,
        GadgetKind::And,
        GadgetKind::Dup,
    ];

    pub fn gadget(self) -> Gadget {
        match self {
            GadgetKind::Copy => copy_gadget(),
            GadgetKind::Not => not_gadget(),
            GadgetKind::And => and_gadget(),
            GadgetKind::Dup => dup_gadget(),
        }
    }

    /// The Boolean function the gadget computes.
    pub fn truth(self, bits: &[bool]) -> Vec<bool> {
        match self {
            GadgetKind::Copy => vec![bits[0]],
            GadgetKind::Not => vec![!bits[0]],
            GadgetKind::And => vec![bits[0] && bits[1]],
            GadgetKind::Dup => vec![bits[0], bits[0]],
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetKind::Copy => "copy",
            GadgetKind::Not => "not",
            GadgetKind::And => "and",
            GadgetKind::Dup => "dup",
        })
    }
}

impl FromStr for GadgetKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "copy" => Ok(GadgetKind::Copy),
            "not" => Ok(GadgetKind::Not),
            "and" => Ok(GadgetKind::And),
            "dup" => Ok(GadgetKind::Dup),
            other => Err(format!("unknown gadget {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    graph: Graph,
    sequence: VertexSequence,
    inputs: Vec<(usize, usize)>,
    outputs: Vec<(usize, usize)>,
}

/// Outcome of one simulation, with the graphs before and after the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetRun {
    pub initial: Graph,
    pub result: Graph,
    pub outputs: Vec<bool>,
}

impl Gadget {
    pub fn new(
        graph: Graph,
        sequence: VertexSequence,
        inputs: Vec<(usize, usize)>,
        outputs: Vec<(usize, usize)>,
    ) -> Result<Self, GadgetError> {
        let n = graph.n();
        let mut seen = vec![false; n];
        for &(u, v) in inputs.iter().chain(&outputs) {
            for w in [u, v] {
                if w >= n {
                    return Err(GadgetError::InvalidPorts(format!(
                        "vertex {w} out of range"
                    )));
                }
                if std::mem::replace(&mut seen[w], true) {
                    return Err(GadgetError::InvalidPorts(format!("vertex {w} used twice")));
                }
            }
        }
        for &v in sequence.iter() {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n }.into());
            }
            if outputs.iter().any(|&(a, b)| v == a || v == b) {
                return Err(GadgetError::SequenceTouchesOutput(v));
            }
        }
        Ok(Self {
            graph,
            sequence,
            inputs,
            outputs,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn sequence(&self) -> &VertexSequence {
        &self.sequence
    }

    pub fn inputs(&self) -> &[(usize, usize)] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[(usize, usize)] {
        &self.outputs
    }

    /// The gadget graph with each input pair's edge added iff its bit is set.
    pub fn initialize(&self, bits: &[bool]) -> Result<Graph, GadgetError> {
        if bits.len() != self.inputs.len() {
            return Err(GadgetError::Arity {
                expected: self.inputs.len(),
                got: bits.len(),
            });
        }
        let mut g = self.graph.clone();
        for (&(u, v), &b) in self.inputs.iter().zip(bits) {
            if b {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn simulate(&self, bits: &[bool]) -> Result<GadgetRun, GadgetError> {
        let initial = self.initialize(bits)?;
        let result = initial.apply_sequence(&self.sequence)?;
        let outputs = self
            .outputs
            .iter()
            .map(|&(u, v)| result.has_edge(u, v))
            .collect();
        Ok(GadgetRun {
            initial,
            result,
            outputs,
        })
    }

    pub fn run(&self, bits: &[bool]) -> Result<Vec<bool>, GadgetError> {
        Ok(self.simulate(bits)?.outputs)
    }
}

fn fixed(
    n: usize,
    edges: &[(usize, usize)],
    seq: &[usize],
    ins: &[(usize, usize)],
    outs: &[(usize, usize)],
) -> Gadget {
    Gadget::new(
        Graph::from_edges(n, edges).expect("fixed gadget graph"),
        seq.to_vec().into(),
        ins.to_vec(),
        outs.to_vec(),
    )
    .expect("fixed gadget data")
}

pub fn copy_gadget() -> Gadget {
    fixed(4, &[(0, 2), (1, 3)], &[0, 1, 0], &[(0, 1)], &[(2, 3)])
}

pub fn not_gadget() -> Gadget {
    fixed(
        5,
        &[(0, 2), (1, 3), (2, 4), (3, 4)],
        &[0, 1, 0, 4],
        &[(0, 1)],
        &[(2, 3)],
    )
}

pub fn and_gadget() -> Gadget {
    fixed(
        7,
        &[(0, 4), (1, 5), (2, 6), (3, 4)],
        &[1, 2, 0, 3, 4],
        &[(0, 1), (2, 3)],
        &[(5, 6)],
    )
}

pub fn dup_gadget() -> Gadget {
    fixed(
        8,
        &[
            (0, 2),
            (0, 4),
            (1, 3),
            (1, 5),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 7),
        ],
        &[0, 1, 0, 2, 3, 2, 0, 3, 0],
        &[(0, 1)],
        &[(4, 5), (6, 7)],
    )
}

pub const CIRCLE_MAX_VERTICES: usize = 10;

/// A double occurrence word: every vertex appears exactly twice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordWord(Vec<usize>);

impl ChordWord {
    pub fn new(word: Vec<usize>) -> Self {
        Self(word)
    }

    pub fn symbols(&self) -> &[usize] {
        &self.0
    }

    /// Graph on `n` vertices where two symbols are adjacent iff they
    /// interleave (`u..v..u..v`). `None` if a symbol in range does not
    /// occur exactly twice.
    pub fn interleaving_graph(&self, n: usize) -> Option<Graph> {
        let mut pos = vec![Vec::new(); n];
        for (i, &s) in self.0.iter().enumerate() {
            pos.get_mut(s)?.push(i);
        }
        if pos.iter().any(|p| p.len() != 2) {
            return None;
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (pos[u][0], pos[u][1]);
                let inside = |i: usize| a < i && i < b;
                if inside(pos[v][0]) != inside(pos[v][1]) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).ok()
    }
}

impl fmt::Display for ChordWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.iter().any(|&s| s >= 10);
        for (i, s) in self.0.iter().enumerate() {
            if wide && i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Searches for a chord diagram of `g`.
///
/// Backtracking over double occurrence words that start with the smallest
/// vertex. At each position, closing an open chord is tried before opening a
/// new one, both in ascending vertex order. A chord is accepted on closing
/// only if the chords crossing it are exactly its neighbors, so a complete
/// word realizes `g`. `Ok(None)` means no word exists.
pub fn is_circle_graph(g: &Graph) -> Result<Option<ChordWord>, GadgetError> {
    let verts: Vec<usize> = g.vertices().collect();
    if verts.len() > CIRCLE_MAX_VERTICES {
        return Err(GadgetError::CircleBudget {
            n: verts.len(),
            max: CIRCLE_MAX_VERTICES,
        });
    }
    let k = verts.len();
    if k == 0 {
        return Ok(Some(ChordWord(Vec::new())));
    }
    // Work on local indices 0..k, with neighbor masks.
    let nbr: Vec<u16> = verts
        .iter()
        .map(|&u| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &w)| g.has_edge(u, w))
                .fold(0u16, |m, (j, _)| m | 1 << j)
        })
        .collect();

    let mut search = Circle {
        nbr,
        first: vec![None; k],
        closed: 0,
        word: Vec::with_capacity(2 * k),
    };
    search.open(0);
    Ok(search
        .extend()
        .then(|| ChordWord(search.word.iter().map(|&j| verts[j]).collect())))
}

struct Circle {
    nbr: Vec<u16>,
    first: Vec<Option<usize>>,
    closed: u16,
    word: Vec<usize>,
}

impl Circle {
    fn open(&mut self, j: usize) {
        self.first[j] = Some(self.word.len());
        self.word.push(j);
    }

    fn crossing(&self, j: usize) -> u16 {
        let start = self.first[j].expect("open chord");
        self.word[start + 1..].iter().fold(0u16, |m, &s| m ^ 1 << s)
    }

    fn extend(&mut self) -> bool {
        let k = self.nbr.len();
        if self.word.len() == 2 * k {
            return true;
        }
        let opened: Vec<usize> = (0..k)
            .filter(|&j| self.first[j].is_some() && self.closed >> j & 1 == 0)
            .collect();
        for j in opened {
            if self.crossing(j) != self.nbr[j] {
                continue;
            }
            self.word.push(j);
            self.closed |= 1 << j;
            if self.extend() {
                return true;
            }
            self.closed &= !(1 << j);
            self.word.pop();
        }
        for j in 0..k {
            if self.first[j].is_some() {
                continue;
            }
            self.open(j);
            if self.extend() {
                return true;
            }
            self.word.pop();
            self.first[j] = None;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gadget_data() {
        assert_eq!(&copy_gadget().sequence()[..], &[0, 1, 0]);
        assert_eq!(and_gadget().outputs(), &[(5, 6)]);
        assert_eq!(dup_gadget().graph().edge_count(), 8);
        assert_eq!(
            not_gadget().graph().edges(),
            vec![(0, 2), (1, 3), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn truth_tables() {
        for kind in GadgetKind::ALL {
            let g = kind.gadget();
            let arity = g.inputs().len();
            for mask in 0..1u32 << arity {
                let bits: Vec<bool> = (0..arity).map(|i| mask >> i & 1 == 1).collect();
                assert_eq!(g.run(&bits).unwrap(), kind.truth(&bits), "{kind} {bits:?}");
            }
        }
    }

    #[test]
    fn copy_false_leaves_graph_invariant() {
        let run = copy_gadget().simulate(&[false]).unwrap();
        assert_eq!(run.outputs, vec![false]);
        assert_eq!(run.initial, run.result);
    }

    #[test]
    fn copy_true_turns_on_output() {
        let run = copy_gadget().simulate(&[true]).unwrap();
        assert!(run.result.has_edge(2, 3));
    }

    #[test]
    fn and_false_false_adds_only_edge_0_3() {
        let run = and_gadget().simulate(&[false, false]).unwrap();
        assert_eq!(run.outputs, vec![false]);
        let before: std::collections::BTreeSet<_> = run.initial.edges().into_iter().collect();
        let after: std::collections::BTreeSet<_> = run.result.edges().into_iter().collect();
        assert!(before.is_subset(&after));
        assert_eq!(
            after.difference(&before).copied().collect::<Vec<_>>(),
            vec![(0, 3)]
        );
    }

    #[test]
    fn dup_outputs_are_separated() {
        for b in [false, true] {
            let run = dup_gadget().simulate(&[b]).unwrap();
            assert_eq!(run.outputs, vec![b, b]);
            for u in [4, 5] {
                for v in [6, 7] {
                    assert!(!run.result.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn stored_graph_is_not_mutated() {
        let g = dup_gadget();
        let before = g.graph().clone();
        g.run(&[true]).unwrap();
        assert_eq!(g.graph(), &before);
    }

    #[test]
    fn invalid_gadgets() {
        let g = Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        assert_eq!(
            Gadget::new(g.clone(), vec![0, 2].into(), vec![(0, 1)], vec![(2, 3)]),
            Err(GadgetError::SequenceTouchesOutput(2))
        );
        assert!(matches!(
            Gadget::new(g.clone(), vec![0].into(), vec![(0, 1)], vec![(1, 3)]),
            Err(GadgetError::InvalidPorts(_))
        ));
        assert_eq!(
            copy_gadget().run(&[true, false]),
            Err(GadgetError::Arity {
                expected: 1,
                got: 2
            })
        );
    }

    #[test]
    fn circle_examples() {
        let edgeless = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(
            is_circle_graph(&edgeless).unwrap().unwrap().to_string(),
            "001122"
        );
        let k3 = Graph::complete(3);
        assert_eq!(is_circle_graph(&k3).unwrap().unwrap().to_string(), "012012");

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let w = is_circle_graph(&c5).unwrap().unwrap();
        assert_eq!(w.interleaving_graph(5).unwrap(), c5);
    }

    #[test]
    fn gadget_graphs_are_circle_graphs() {
        for kind in GadgetKind::ALL {
            let g = kind.gadget();
            let w = is_circle_graph(g.graph()).unwrap().expect("circle");
            assert_eq!(
                &w.interleaving_graph(g.graph().n()).unwrap(),
                g.graph(),
                "{kind}"
            );
        }
    }

    /// W5 (a 5-cycle plus a hub) is the smallest non-circle graph.
    #[test]
    fn wheel_is_not_a_circle_graph() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let w5 = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(is_circle_graph(&w5).unwrap(), None);
    }

    #[test]
    fn search_agrees_with_word_enumeration() {
        // Every 4-vertex graph is a circle graph, and each word re-verifies.
        for mask in 0u32..64 {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges: Vec<_> = (0..6)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::from_edges(4, &edges).unwrap();
            let w = is_circle_graph(&g).unwrap().unwrap();
            assert_eq!(w.interleaving_graph(4).unwrap(), g);
        }
    }

    #[test]
    fn budget() {
        let g = Graph::from_edges(11, &[]).unwrap();
        assert_eq!(
            is_circle_graph(&g),
            Err(GadgetError::CircleBudget { n: 11, max: 10 })
        );
    }
}
