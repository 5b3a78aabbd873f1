//! Netlist text: one statement per line, already in topological order.
//!
//! ```text
//! input a
//! input b
//! and g a b      # also: or <name> <a> <b>, not <name> <a>
//! output g
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{is_identifier, Circuit, CircuitError, Gate, GateKind};
use crate::graph::io::content;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetlistErrorKind {
    #[error("unknown statement {0:?}")]
    UnknownStatement(String),
    #[error("invalid identifier {0:?}")]
    InvalidIdentifier(String),
    #[error("`{op}` takes {expected} operand(s), got {got}")]
    WrongArity {
        op: String,
        expected: usize,
        got: usize,
    },
    #[error("{0:?} is already defined")]
    DuplicateDefinition(String),
    #[error("unknown identifier {0:?}")]
    UnknownIdentifier(String),
    #[error("{0:?} is used before its definition")]
    ForwardReference(String),
    #[error("no `output` statement")]
    NoOutput,
    #[error("more than one `output` statement")]
    MultipleOutputs,
}

fn err(line: usize, kind: NetlistErrorKind) -> CircuitError {
    CircuitError::Netlist { line, kind }
}

pub fn parse_netlist(text: &str) -> Result<Circuit, CircuitError> {
    let statements: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, content(raw).split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty())
        .collect();

    // All definitions up front, to tell forward references from unknown names.
    let mut defined_anywhere = HashMap::new();
    for (line, toks) in &statements {
        if toks[0] != "output" && toks.len() > 1 {
            defined_anywhere.entry(toks[1]).or_insert(*line);
        }
    }

    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut gates = Vec::new();
    let mut output: Option<(usize, &str)> = None;

    for (line, toks) in &statements {
        let line = *line;
        let (op, args) = (toks[0], &toks[1..]);
        let arity = match op {
            "input" => 0,
            "not" => 1,
            "and" | "or" => 2,
            "output" => {
                if args.len() != 1 {
                    return Err(err(
                        line,
                        NetlistErrorKind::WrongArity {
                            op: op.into(),
                            expected: 1,
                            got: args.len(),
                        },
                    ));
                }
                if output.is_some() {
                    return Err(err(line, NetlistErrorKind::MultipleOutputs));
                }
                output = Some((line, args[0]));
                continue;
            }
            other => return Err(err(line, NetlistErrorKind::UnknownStatement(other.into()))),
        };
        if args.len() != arity + 1 {
            return Err(err(
                line,
                NetlistErrorKind::WrongArity {
                    op: op.into(),
                    expected: arity,
                    got: args.len().saturating_sub(1),
                },
            ));
        }
        let name = args[0];
        if !is_identifier(name) {
            return Err(err(line, NetlistErrorKind::InvalidIdentifier(name.into())));
        }
        if index.contains_key(name) {
            return Err(err(
                line,
                NetlistErrorKind::DuplicateDefinition(name.into()),
            ));
        }
        let resolve = |r: &str| -> Result<usize, CircuitError> {
            match index.get(r) {
                Some(&i) => Ok(i),
                None if defined_anywhere.contains_key(r) => {
                    Err(err(line, NetlistErrorKind::ForwardReference(r.into())))
                }
                None => Err(err(line, NetlistErrorKind::UnknownIdentifier(r.into()))),
            }
        };
        let kind = match op {
            "input" => GateKind::Input,
            "not" => GateKind::Not(resolve(args[1])?),
            "and" => GateKind::And(resolve(args[1])?, resolve(args[2])?),
            _ => GateKind::Or(resolve(args[1])?, resolve(args[2])?),
        };
        index.insert(name, gates.len());
        gates.push(Gate {
            name: name.into(),
            kind,
        });
    }

    let (line, out_name) = output.ok_or_else(|| err(0, NetlistErrorKind::NoOutput))?;
    let out = *index
        .get(out_name)
        .ok_or_else(|| err(line, NetlistErrorKind::UnknownIdentifier(out_name.into())))?;
    Circuit::new(gates, out)
}

/// Inverse of [`parse_netlist`]: one statement per gate, then `output`.
pub fn to_netlist(c: &Circuit) -> String {
    let name = |i: usize| c.gates()[i].name.as_str();
    let mut out = String::new();
    for g in c.gates() {
        let _ = match g.kind {
            GateKind::Input => writeln!(out, "input {}", g.name),
            GateKind::And(a, b) => writeln!(out, "and {} {} {}", g.name, name(a), name(b)),
            GateKind::Or(a, b) => writeln!(out, "or {} {} {}", g.name, name(a), name(b)),
            GateKind::Not(a) => writeln!(out, "not {} {}", g.name, name(a)),
        };
    }
    let _ = writeln!(out, "output {}", name(c.output()));
    out
}
