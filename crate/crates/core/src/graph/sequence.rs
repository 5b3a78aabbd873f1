use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use super::GraphError;

/// An ordered list of vertices to complement at.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSequence(Vec<usize>);

impl VertexSequence {
    pub fn new(items: Vec<usize>) -> Self {
        Self(items)
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    pub fn push(&mut self, v: usize) {
        self.0.push(v);
    }

    pub fn extend_from_slice(&mut self, other: &[usize]) {
        self.0.extend_from_slice(other);
    }
}

impl Deref for VertexSequence {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for VertexSequence {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

impl FromIterator<usize> for VertexSequence {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// Accepts vertices separated by commas and/or whitespace. The empty string
/// is the empty sequence.
impl FromStr for VertexSequence {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| format!("invalid vertex index {t:?}"))
            })
            .collect()
    }
}

impl fmt::Display for VertexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MixedOp {
    Complement,
    Delete,
}

/// Local complementations interleaved with vertex deletions. A deleted vertex
/// never reappears later in the sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MixedSequence(Vec<(usize, MixedOp)>);

impl MixedSequence {
    pub fn new(items: Vec<(usize, MixedOp)>) -> Result<Self, GraphError> {
        let mut deleted = std::collections::HashSet::new();
        for (position, &(v, op)) in items.iter().enumerate() {
            if deleted.contains(&v) {
                return Err(GraphError::AtPosition {
                    position,
                    source: Box::new(GraphError::VertexDeleted(v)),
                });
            }
            if op == MixedOp::Delete {
                deleted.insert(v);
            }
        }
        Ok(Self(items))
    }

    /// Skips the reappearance check; application still rejects it.
    pub fn unchecked(items: Vec<(usize, MixedOp)>) -> Self {
        Self(items)
    }

    pub fn complements(seq: &[usize]) -> Self {
        Self(seq.iter().map(|&v| (v, MixedOp::Complement)).collect())
    }
}

impl Deref for MixedSequence {
    type Target = [(usize, MixedOp)];

    fn deref(&self) -> &Self::Target {
        &self.0
    }
}
