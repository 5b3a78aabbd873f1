//! Graph-sequence structures: lowering a circuit evaluation to a single
//! local-complementation query.
//!
//! Each input becomes a vertex pair, joined iff the input is TRUE. Layers
//! of the levelized circuit alternate between a duplication layer (DUP for
//! values read twice, COPY for values read once) and a logic layer (AND,
//! NOT, and COPY for PASS nodes). Gadgets are glued by identifying their
//! input vertices with the pair carrying the value, and their sequences are
//! concatenated in ascending node order. Applying the whole sequence leaves
//! the output pair joined iff the circuit outputs TRUE.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::ops::Range;

use thiserror::Error;

use crate::circuit::{
    levelize, Circuit, CircuitError, InputAssignment, LayeredCircuit, LayeredKind,
};
use crate::gadgets::{and_gadget, copy_gadget, dup_gadget, not_gadget, Gadget};
use crate::graph::io::{content, parse_index};
use crate::graph::{FormatError, Graph, GraphError, VertexSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GssError {
    #[error("gadget takes {expected} input pair(s), got {got}")]
    Arity { expected: usize, got: usize },
    #[error("vertex {0} is already consumed by another gadget")]
    Consumed(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("pair ({0}, {1}) does not name two distinct vertices")]
    InvalidPair(usize, usize),
    #[error("output vertex {0} occurs in the sequence")]
    OutputInSequence(usize),
    #[error("gate {0:?} is never used and is not the output")]
    DanglingWire(String),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// A graph, a complementation sequence and the pair whose adjacency is the
/// answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gss {
    graph: Graph,
    sequence: VertexSequence,
    output: (usize, usize),
}

impl Gss {
    pub fn new(
        graph: Graph,
        sequence: VertexSequence,
        output: (usize, usize),
    ) -> Result<Self, GssError> {
        let n = graph.n();
        let (u, v) = output;
        if u == v {
            return Err(GssError::InvalidPair(u, v));
        }
        for &w in [u, v].iter().chain(sequence.iter()) {
            if w >= n {
                return Err(GssError::VertexOutOfRange { vertex: w, n });
            }
        }
        if let Some(&w) = sequence.iter().find(|&&w| w == u || w == v) {
            return Err(GssError::OutputInSequence(w));
        }
        Ok(Self {
            graph,
            sequence,
            output,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn sequence(&self) -> &VertexSequence {
        &self.sequence
    }

    pub fn output(&self) -> (usize, usize) {
        self.output
    }

    pub fn simulate(&self) -> Result<bool, GssError> {
        lcp_decide(&self.graph, &self.sequence, self.output.0, self.output.1)
    }
}

pub fn simulate_gss(g: &Gss) -> Result<bool, GssError> {
    g.simulate()
}

/// Whether `(u, v)` is an edge of `G * s`.
pub fn lcp_decide(g: &Graph, s: &[usize], u: usize, v: usize) -> Result<bool, GssError> {
    let n = g.n();
    if u == v {
        return Err(GssError::InvalidPair(u, v));
    }
    if let Some(&w) = [u, v].iter().find(|&&w| w >= n) {
        return Err(GssError::VertexOutOfRange { vertex: w, n });
    }
    Ok(g.apply_sequence(s)?.has_edge(u, v))
}

/// Ports of one glued gadget, in the combined numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Glued {
    pub inputs: Vec<(usize, usize)>,
    pub outputs: Vec<(usize, usize)>,
    /// Where the gadget's sequence landed in the combined sequence.
    pub sequence: Range<usize>,
}

/// A structure under construction.
#[derive(Debug, Clone, Default)]
pub struct GssBuilder {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    sequence: Vec<usize>,
    consumed: Vec<bool>,
}

impl GssBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    fn fresh(&mut self) -> usize {
        self.consumed.push(false);
        self.n += 1;
        self.n - 1
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.edges.insert((u.min(v), u.max(v)));
    }

    /// Two new vertices, joined iff `value`.
    pub fn input_pair(&mut self, value: bool) -> (usize, usize) {
        let p = (self.fresh(), self.fresh());
        if value {
            self.add_edge(p.0, p.1);
        }
        p
    }

    /// Adds a copy of `g` with every vertex fresh.
    pub fn embed(&mut self, g: &Gadget) -> Glued {
        self.attach(g, &[]).expect("embedding cannot fail")
    }

    /// Adds a copy of `g` whose input pairs are the given existing pairs.
    ///
    /// The other gadget vertices are numbered from the current vertex count
    /// in ascending gadget order. Wired vertices are consumed and cannot be
    /// wired again.
    pub fn glue(&mut self, g: &Gadget, wiring: &[(usize, usize)]) -> Result<Glued, GssError> {
        if wiring.len() != g.inputs().len() {
            return Err(GssError::Arity {
                expected: g.inputs().len(),
                got: wiring.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in wiring {
            if a == b {
                return Err(GssError::InvalidPair(a, b));
            }
            for w in [a, b] {
                if w >= self.n {
                    return Err(GssError::VertexOutOfRange {
                        vertex: w,
                        n: self.n,
                    });
                }
                if self.consumed[w] || !seen.insert(w) {
                    return Err(GssError::Consumed(w));
                }
            }
        }
        self.attach(g, wiring)
    }

    fn attach(&mut self, g: &Gadget, wiring: &[(usize, usize)]) -> Result<Glued, GssError> {
        let mut map = vec![None; g.graph().n()];
        for (&(lu, lv), &(u, v)) in g.inputs().iter().zip(wiring) {
            map[lu] = Some(u);
            map[lv] = Some(v);
            self.consumed[u] = true;
            self.consumed[v] = true;
        }
        let map: Vec<usize> = map
            .into_iter()
            .map(|m| m.unwrap_or_else(|| self.fresh()))
            .collect();
        for (a, b) in g.graph().edges() {
            self.add_edge(map[a], map[b]);
        }
        let start = self.sequence.len();
        self.sequence.extend(g.sequence().iter().map(|&v| map[v]));
        let pairs = |ps: &[(usize, usize)]| ps.iter().map(|&(a, b)| (map[a], map[b])).collect();
        Ok(Glued {
            inputs: pairs(g.inputs()),
            outputs: pairs(g.outputs()),
            sequence: start..self.sequence.len(),
        })
    }

    pub fn graph(&self) -> Graph {
        let edges: Vec<_> = self.edges.iter().copied().collect();
        Graph::from_edges(self.n, &edges).expect("builder edges are valid")
    }

    pub fn finish(self, output: (usize, usize)) -> Result<Gss, GssError> {
        let graph = self.graph();
        Gss::new(graph, self.sequence.into(), output)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayerKind {
    Input,
    Duplication,
    Logic,
}

/// One layer of a compiled structure: which pairs it produced, the
/// layered-circuit node whose value each pair carries, and the end of its
/// sequence segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerTrace {
    pub kind: LayerKind,
    pub seq_end: usize,
    /// Vertex count once the layer is glued.
    pub n_end: usize,
    pub ports: Vec<(usize, (usize, usize))>,
}

/// Compiles a normalized circuit and one assignment into a structure whose
/// simulation equals the circuit's output.
pub fn compile(c: &Circuit, x: &InputAssignment) -> Result<Gss, GssError> {
    Ok(compile_traced(c, x)?.0)
}

/// [`compile`], also returning the layered circuit and per-layer traces.
pub fn compile_traced(
    c: &Circuit,
    x: &InputAssignment,
) -> Result<(Gss, LayeredCircuit, Vec<LayerTrace>), GssError> {
    if let Some(&g) = c.dead_gates().first() {
        return Err(GssError::DanglingWire(c.gates()[g].name.clone()));
    }
    let layered = levelize(c)?;
    if x.len() != layered.inputs().len() {
        return Err(CircuitError::AssignmentLength {
            expected: layered.inputs().len(),
            got: x.len(),
        }
        .into());
    }
    let (gss, traces) = lower(&layered, x)?;
    Ok((gss, layered, traces))
}

/// Lowers an already layered circuit.
pub fn lower(l: &LayeredCircuit, x: &InputAssignment) -> Result<(Gss, Vec<LayerTrace>), GssError> {
    let nodes = l.nodes();
    let uses = l.uses();
    let (copy, not, and, dup) = (copy_gadget(), not_gadget(), and_gadget(), dup_gadget());

    let mut b = GssBuilder::new();
    let mut port: Vec<Option<(usize, usize)>> = vec![None; nodes.len()];
    let mut traces = Vec::new();

    let mut ports = Vec::new();
    for (&node, &bit) in l.inputs().iter().zip(x.bits()) {
        let p = b.input_pair(bit);
        port[node] = Some(p);
        ports.push((node, p));
    }
    traces.push(LayerTrace {
        kind: LayerKind::Input,
        seq_end: 0,
        n_end: b.n(),
        ports,
    });

    let layers = l.layers();
    for layer in 1..layers.len() {
        // (user, operand position) -> pair carrying the operand's value.
        let mut slot = std::collections::HashMap::new();
        let mut ports = Vec::new();
        for &w in &layers[layer - 1] {
            let gadget = match uses[w].len() {
                0 => continue,
                1 => &copy,
                _ => &dup,
            };
            let src = port[w].expect("previous layer is lowered");
            let glued = b.glue(gadget, &[src])?;
            for (&u, &p) in uses[w].iter().zip(&glued.outputs) {
                slot.insert(u, p);
                ports.push((w, p));
            }
        }
        traces.push(LayerTrace {
            kind: LayerKind::Duplication,
            seq_end: b.sequence().len(),
            n_end: b.n(),
            ports,
        });

        let mut ports = Vec::new();
        for &v in &layers[layer] {
            let operand = |pos: usize| slot[&(v, pos)];
            let glued = match nodes[v].kind {
                LayeredKind::And(..) => b.glue(&and, &[operand(0), operand(1)])?,
                LayeredKind::Not(_) => b.glue(&not, &[operand(0)])?,
                LayeredKind::Pass(_) => b.glue(&copy, &[operand(0)])?,
                LayeredKind::Input => unreachable!("inputs sit at layer 0"),
            };
            port[v] = Some(glued.outputs[0]);
            ports.push((v, glued.outputs[0]));
        }
        traces.push(LayerTrace {
            kind: LayerKind::Logic,
            seq_end: b.sequence().len(),
            n_end: b.n(),
            ports,
        });
    }

    let out = port[l.output()].expect("output is lowered");
    Ok((b.finish(out)?, traces))
}

/// `gss 1` header, then `n`, `e` lines, one `s` line and one `out` line.
pub fn write_gss(g: &Gss) -> String {
    let mut out = String::from("gss 1\n");
    let _ = writeln!(out, "n {}", g.graph.n());
    for (u, v) in g.graph.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out.push('s');
    for v in g.sequence.iter() {
        let _ = write!(out, " {v}");
    }
    let _ = writeln!(out, "\nout {} {}", g.output.0, g.output.1);
    out
}

pub fn parse_gss(text: &str) -> Result<Gss, GssError> {
    let mut header = false;
    let mut n = None;
    let mut edges = Vec::new();
    let mut seq: Option<Vec<usize>> = None;
    let mut out = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let body = content(raw);
        if body.is_empty() {
            continue;
        }
        let mut toks = body.split_whitespace();
        let key = toks.next().unwrap_or_default();
        if !header {
            if key != "gss" || toks.next() != Some("1") || toks.next().is_some() {
                return Err(FormatError::new(line, "expected `gss 1` header").into());
            }
            header = true;
            continue;
        }
        match key {
            "n" if n.is_none() => n = Some(parse_index(toks.next(), line, "vertex count")?),
            "e" => {
                if n.is_none() {
                    return Err(FormatError::new(line, "`e` before `n`").into());
                }
                let u = parse_index(toks.next(), line, "vertex")?;
                let v = parse_index(toks.next(), line, "vertex")?;
                edges.push((line, u, v));
            }
            "s" if seq.is_none() => {
                seq = Some(
                    toks.by_ref()
                        .map(|t| parse_index(Some(t), line, "sequence vertex"))
                        .collect::<Result<_, _>>()?,
                );
            }
            "out" if out.is_none() => {
                out = Some((
                    parse_index(toks.next(), line, "vertex")?,
                    parse_index(toks.next(), line, "vertex")?,
                ));
            }
            "n" | "s" | "out" => {
                return Err(FormatError::new(line, format!("duplicate `{key}` line")).into())
            }
            other => return Err(FormatError::new(line, format!("unknown record {other:?}")).into()),
        }
        if toks.next().is_some() {
            return Err(FormatError::new(line, "trailing tokens").into());
        }
    }
    if !header {
        return Err(FormatError::new(last.max(1), "missing `gss 1` header").into());
    }
    let n = n.ok_or_else(|| FormatError::new(last, "missing `n` line"))?;
    let mut g = Graph::empty(n);
    for (line, u, v) in edges {
        g.add_edge(u, v)
            .map_err(|e| FormatError::new(line, e.to_string()))?;
    }
    let seq = seq.ok_or_else(|| FormatError::new(last, "missing `s` line"))?;
    let out = out.ok_or_else(|| FormatError::new(last, "missing `out` line"))?;
    Gss::new(g, seq.into(), out)
}
