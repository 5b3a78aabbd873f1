use super::{Circuit, CircuitError, GateKind, InputAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LayeredKind {
    Input,
    And(usize, usize),
    Not(usize),
    /// Carries a value one layer forward unchanged.
    Pass(usize),
}

impl LayeredKind {
    pub fn operands(&self) -> Vec<usize> {
        match *self {
            LayeredKind::Input => vec![],
            LayeredKind::And(a, b) => vec![a, b],
            LayeredKind::Not(a) | LayeredKind::Pass(a) => vec![a],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredNode {
    pub kind: LayeredKind,
    pub layer: usize,
    /// Gate of the source circuit this node computes; `None` for PASS.
    pub source: Option<usize>,
}

/// A normalized circuit in which every non-input node at layer `l` reads only
/// nodes at layer `l - 1`. Nodes are stored in topological order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredCircuit {
    nodes: Vec<LayeredNode>,
    inputs: Vec<usize>,
    output: usize,
}

/// Layers a normalized circuit.
///
/// Gates that cannot reach the output are dropped; inputs are always kept
/// (at layer 0) so assignments keep their meaning. A gate sits at the length
/// of its longest path from an input, and operands produced earlier travel
/// through one shared chain of PASS nodes per value. Fan-out stays at most
/// two. An output that is itself an input gets one PASS so that depth is at
/// least one.
pub fn levelize(c: &Circuit) -> Result<LayeredCircuit, CircuitError> {
    if let Some(problem) = c.normalization_problem() {
        return Err(CircuitError::NotNormalized(problem));
    }
    let gates = c.gates();
    let mut live = vec![false; gates.len()];
    live[c.output()] = true;
    for i in (0..gates.len()).rev() {
        if live[i] {
            for o in gates[i].kind.operands() {
                live[o] = true;
            }
        }
    }

    let mut level = vec![0usize; gates.len()];
    for (i, g) in gates.iter().enumerate() {
        level[i] = g
            .kind
            .operands()
            .iter()
            .map(|&o| level[o] + 1)
            .max()
            .unwrap_or(0);
    }

    let mut nodes: Vec<LayeredNode> = Vec::new();
    // chain[g][k]: node carrying gate g's value at layer level[g] + k.
    let mut chain: Vec<Vec<usize>> = vec![Vec::new(); gates.len()];
    let at = |nodes: &mut Vec<LayeredNode>, chain: &mut Vec<Vec<usize>>, g: usize, layer: usize| {
        let c = &mut chain[g];
        while level[g] + c.len() <= layer {
            let prev = *c.last().expect("chain starts with the gate itself");
            nodes.push(LayeredNode {
                kind: LayeredKind::Pass(prev),
                layer: level[g] + c.len(),
                source: None,
            });
            c.push(nodes.len() - 1);
        }
        c[layer - level[g]]
    };

    let mut inputs = Vec::new();
    for (i, g) in gates.iter().enumerate() {
        if !(live[i] || g.kind == GateKind::Input) {
            continue;
        }
        let below = level[i].saturating_sub(1);
        let kind = match g.kind {
            GateKind::Input => LayeredKind::Input,
            GateKind::And(a, b) => {
                let a = at(&mut nodes, &mut chain, a, below);
                LayeredKind::And(a, at(&mut nodes, &mut chain, b, below))
            }
            GateKind::Not(a) => LayeredKind::Not(at(&mut nodes, &mut chain, a, below)),
            GateKind::Or(..) => unreachable!("rejected above"),
        };
        nodes.push(LayeredNode {
            kind,
            layer: level[i],
            source: Some(i),
        });
        chain[i].push(nodes.len() - 1);
        if g.kind == GateKind::Input {
            inputs.push(nodes.len() - 1);
        }
    }

    let output = if level[c.output()] == 0 {
        at(&mut nodes, &mut chain, c.output(), 1)
    } else {
        chain[c.output()][0]
    };
    Ok(LayeredCircuit {
        nodes,
        inputs,
        output,
    })
}

impl LayeredCircuit {
    pub fn nodes(&self) -> &[LayeredNode] {
        &self.nodes
    }

    /// Input nodes, in the source circuit's input order.
    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn output(&self) -> usize {
        self.output
    }

    /// Layer of the output, which is the deepest layer.
    pub fn depth(&self) -> usize {
        self.nodes[self.output].layer
    }

    /// Node indices of each layer, ascending.
    pub fn layers(&self) -> Vec<Vec<usize>> {
        let mut layers = vec![Vec::new(); self.depth() + 1];
        for (i, n) in self.nodes.iter().enumerate() {
            layers[n.layer].push(i);
        }
        layers
    }

    /// For each node, the `(user, operand position)` slots reading it,
    /// ascending.
    pub fn uses(&self) -> Vec<Vec<(usize, usize)>> {
        let mut uses = vec![Vec::new(); self.nodes.len()];
        for (i, n) in self.nodes.iter().enumerate() {
            for (pos, o) in n.kind.operands().into_iter().enumerate() {
                uses[o].push((i, pos));
            }
        }
        uses
    }

    pub fn pass_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n.kind, LayeredKind::Pass(_)))
            .count()
    }

    pub fn node_values(&self, x: &InputAssignment) -> Result<Vec<bool>, CircuitError> {
        if x.len() != self.inputs.len() {
            return Err(CircuitError::AssignmentLength {
                expected: self.inputs.len(),
                got: x.len(),
            });
        }
        let mut values = vec![false; self.nodes.len()];
        for (k, &i) in self.inputs.iter().enumerate() {
            values[i] = x.bits()[k];
        }
        for (i, n) in self.nodes.iter().enumerate() {
            values[i] = match n.kind {
                LayeredKind::Input => values[i],
                LayeredKind::And(a, b) => values[a] && values[b],
                LayeredKind::Not(a) => !values[a],
                LayeredKind::Pass(a) => values[a],
            };
        }
        Ok(values)
    }

    pub fn evaluate(&self, x: &InputAssignment) -> Result<bool, CircuitError> {
        Ok(self.node_values(x)?[self.output])
    }
}
