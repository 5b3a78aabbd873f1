//! Boolean circuits over INPUT/AND/OR/NOT gates.
//!
//! A [`Circuit`] keeps its gates in topological order: every operand index is
//! smaller than the index of the gate using it. OR is accepted so that
//! netlists can be written naturally; [`normalize`] rewrites to AND/NOT with
//! fan-out at most two, and [`levelize`] cuts the result into layers that
//! only read the previous layer.

mod layered;
mod netlist;
mod normalize;

use std::collections::HashSet;

use thiserror::Error;

pub use layered::{levelize, LayeredCircuit, LayeredKind, LayeredNode};
pub use netlist::{parse_netlist, to_netlist, NetlistErrorKind};
pub use normalize::normalize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("line {line}: {kind}")]
    Netlist { line: usize, kind: NetlistErrorKind },
    #[error("gate {gate} refers to operand {operand}, which does not precede it")]
    NotTopological { gate: usize, operand: usize },
    #[error("duplicate gate name {0:?}")]
    DuplicateName(String),
    #[error("invalid identifier {0:?}")]
    InvalidIdentifier(String),
    #[error("output gate {0} does not exist")]
    BadOutput(usize),
    #[error("assignment has {got} values but the circuit has {expected} inputs")]
    AssignmentLength { expected: usize, got: usize },
    #[error("circuit is not normalized: {0}")]
    NotNormalized(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    Input,
    And(usize, usize),
    Or(usize, usize),
    Not(usize),
}

impl GateKind {
    pub fn operands(&self) -> Vec<usize> {
        match *self {
            GateKind::Input => vec![],
            GateKind::And(a, b) | GateKind::Or(a, b) => vec![a, b],
            GateKind::Not(a) => vec![a],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gate {
    pub name: String,
    pub kind: GateKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    gates: Vec<Gate>,
    output: usize,
    inputs: Vec<usize>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Circuit {
    pub fn new(gates: Vec<Gate>, output: usize) -> Result<Self, CircuitError> {
        let mut names = HashSet::new();
        for (i, g) in gates.iter().enumerate() {
            if !is_identifier(&g.name) {
                return Err(CircuitError::InvalidIdentifier(g.name.clone()));
            }
            if !names.insert(g.name.as_str()) {
                return Err(CircuitError::DuplicateName(g.name.clone()));
            }
            if let Some(&bad) = g.kind.operands().iter().find(|&&o| o >= i) {
                return Err(CircuitError::NotTopological {
                    gate: i,
                    operand: bad,
                });
            }
        }
        if output >= gates.len() {
            return Err(CircuitError::BadOutput(output));
        }
        let inputs = gates
            .iter()
            .enumerate()
            .filter(|(_, g)| g.kind == GateKind::Input)
            .map(|(i, _)| i)
            .collect();
        Ok(Self {
            gates,
            output,
            inputs,
        })
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    /// Gate indices of the inputs, in declaration order.
    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gates.iter().position(|g| g.name == name)
    }

    /// Number of operand slots each gate feeds. A gate used twice by the
    /// same AND counts twice.
    pub fn use_counts(&self) -> Vec<usize> {
        let mut uses = vec![0; self.gates.len()];
        for g in &self.gates {
            for o in g.kind.operands() {
                uses[o] += 1;
            }
        }
        uses
    }

    /// AND/NOT only, fan-out at most two.
    pub fn is_normalized(&self) -> bool {
        self.normalization_problem().is_none()
    }

    pub(crate) fn normalization_problem(&self) -> Option<String> {
        if let Some(g) = self
            .gates
            .iter()
            .find(|g| matches!(g.kind, GateKind::Or(..)))
        {
            return Some(format!("OR gate {:?}", g.name));
        }
        self.use_counts().iter().position(|&u| u > 2).map(|i| {
            format!(
                "gate {:?} has fan-out {}",
                self.gates[i].name,
                self.use_counts()[i]
            )
        })
    }

    /// Non-input gates whose value is never read, other than the output.
    pub fn dead_gates(&self) -> Vec<usize> {
        self.use_counts()
            .iter()
            .enumerate()
            .filter(|&(i, &u)| u == 0 && i != self.output && self.gates[i].kind != GateKind::Input)
            .map(|(i, _)| i)
            .collect()
    }

    /// Drops every non-input gate the output does not depend on.
    pub fn prune(&self) -> Circuit {
        let mut live = vec![false; self.gates.len()];
        live[self.output] = true;
        for i in (0..self.gates.len()).rev() {
            if live[i] {
                for o in self.gates[i].kind.operands() {
                    live[o] = true;
                }
            }
        }
        let mut map = vec![usize::MAX; self.gates.len()];
        let mut gates = Vec::new();
        for (i, g) in self.gates.iter().enumerate() {
            if live[i] || g.kind == GateKind::Input {
                let kind = match g.kind {
                    GateKind::Input => GateKind::Input,
                    GateKind::And(a, b) => GateKind::And(map[a], map[b]),
                    GateKind::Or(a, b) => GateKind::Or(map[a], map[b]),
                    GateKind::Not(a) => GateKind::Not(map[a]),
                };
                map[i] = gates.len();
                gates.push(Gate {
                    name: g.name.clone(),
                    kind,
                });
            }
        }
        Circuit::new(gates, map[self.output]).expect("pruning preserves validity")
    }

    /// Value of every gate, in gate order.
    pub fn evaluate_all(&self, x: &InputAssignment) -> Result<Vec<bool>, CircuitError> {
        if x.len() != self.inputs.len() {
            return Err(CircuitError::AssignmentLength {
                expected: self.inputs.len(),
                got: x.len(),
            });
        }
        let mut values = Vec::with_capacity(self.gates.len());
        let mut next_input = 0;
        for g in &self.gates {
            let v = match g.kind {
                GateKind::Input => {
                    next_input += 1;
                    x.bits()[next_input - 1]
                }
                GateKind::And(a, b) => values[a] && values[b],
                GateKind::Or(a, b) => values[a] || values[b],
                GateKind::Not(a) => !values[a],
            };
            values.push(v);
        }
        Ok(values)
    }

    /// Value of the designated output.
    pub fn evaluate(&self, x: &InputAssignment) -> Result<bool, CircuitError> {
        Ok(self.evaluate_all(x)?[self.output])
    }
}

/// One Boolean value per circuit input, in input declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InputAssignment(Vec<bool>);

impl InputAssignment {
    pub fn new(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    /// From a string of `0`/`1` characters.
    pub fn from_bits(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    /// Bit `i` of `mask` becomes input `i`.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        Self((0..len).map(|i| mask >> i & 1 == 1).collect())
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every assignment of `len` inputs.
    pub fn all(len: usize) -> impl Iterator<Item = InputAssignment> {
        assert!(len < 64);
        (0u64..1 << len).map(move |m| Self::from_mask(m, len))
    }
}

/// Incremental construction in topological order.
#[derive(Debug, Default, Clone)]
pub struct CircuitBuilder {
    gates: Vec<Gate>,
}

impl CircuitBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, name: impl Into<String>, kind: GateKind) -> usize {
        self.gates.push(Gate {
            name: name.into(),
            kind,
        });
        self.gates.len() - 1
    }

    pub fn input(&mut self, name: impl Into<String>) -> usize {
        self.push(name, GateKind::Input)
    }

    pub fn and(&mut self, name: impl Into<String>, a: usize, b: usize) -> usize {
        self.push(name, GateKind::And(a, b))
    }

    pub fn or(&mut self, name: impl Into<String>, a: usize, b: usize) -> usize {
        self.push(name, GateKind::Or(a, b))
    }

    pub fn not(&mut self, name: impl Into<String>, a: usize) -> usize {
        self.push(name, GateKind::Not(a))
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn build(self, output: usize) -> Result<Circuit, CircuitError> {
        Circuit::new(self.gates, output)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> InputAssignment {
        InputAssignment::from_bits(s).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let mut b = CircuitBuilder::new();
        let x = b.input("a");
        let y = b.input("b");
        let g = b.and("g", x, y);
        let n = b.not("n", g);
        let and_only = b.clone().build(g).unwrap();
        assert!(and_only.evaluate(&bits("11")).unwrap());
        assert!(!and_only.evaluate(&bits("10")).unwrap());
        let nand = b.build(n).unwrap();
        assert!(!nand.evaluate(&bits("11")).unwrap());

        // NOT(AND(NOT a, b)) on a=0, b=1
        let mut b = CircuitBuilder::new();
        let x = b.input("a");
        let y = b.input("b");
        let na = b.not("na", x);
        let g = b.and("g", na, y);
        let out = b.not("out", g);
        let c = b.build(out).unwrap();
        assert!(!c.evaluate(&bits("01")).unwrap());
        assert_eq!(
            c.evaluate(&bits("0")),
            Err(CircuitError::AssignmentLength {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn construction_is_validated() {
        let gates = vec![
            Gate {
                name: "g".into(),
                kind: GateKind::Not(1),
            },
            Gate {
                name: "a".into(),
                kind: GateKind::Input,
            },
        ];
        assert!(matches!(
            Circuit::new(gates, 0),
            Err(CircuitError::NotTopological {
                gate: 0,
                operand: 1
            })
        ));

        let mut b = CircuitBuilder::new();
        b.input("a");
        b.input("a");
        assert_eq!(b.build(0), Err(CircuitError::DuplicateName("a".into())));

        let mut b = CircuitBuilder::new();
        b.input("9a");
        assert!(matches!(
            b.build(0),
            Err(CircuitError::InvalidIdentifier(_))
        ));

        let mut b = CircuitBuilder::new();
        b.input("a");
        assert_eq!(b.build(3), Err(CircuitError::BadOutput(3)));
    }

    #[test]
    fn use_counts_count_operand_slots() {
        let mut b = CircuitBuilder::new();
        let a = b.input("a");
        let g = b.and("g", a, a);
        let n = b.not("n", a);
        b.or("o", g, n);
        let c = b.build(3).unwrap();
        assert_eq!(c.use_counts(), vec![3, 1, 1, 0]);
        assert!(!c.is_normalized());
    }

    #[test]
    fn prune_keeps_inputs_and_function() {
        let mut b = CircuitBuilder::new();
        let a = b.input("a");
        let x = b.input("x");
        b.not("dead", x);
        let n = b.not("n", a);
        let c = b.build(n).unwrap();
        assert_eq!(c.dead_gates(), vec![2]);
        let p = c.prune();
        assert_eq!(p.gates().len(), 3);
        assert!(p.dead_gates().is_empty());
        for x in InputAssignment::all(2) {
            assert_eq!(p.evaluate(&x), c.evaluate(&x));
        }
    }
}
