//! Constant-space tracking of sequences applied to complete and star graphs.
//!
//! The local-equivalence class of `K_n` is `K_n` plus the `n` stars, so the
//! current graph is determined by one tag and one vertex index.

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StarShape {
    Complete,
    Star { center: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarCompleteState {
    shape: StarShape,
    n: usize,
}

impl StarCompleteState {
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::new(StarShape::Complete, n)
    }

    pub fn star(n: usize, center: usize) -> Result<Self, GraphError> {
        Self::new(StarShape::Star { center }, n)
    }

    pub fn new(shape: StarShape, n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::VertexOutOfRange { vertex: 0, n: 0 });
        }
        if let StarShape::Star { center } = shape {
            if center >= n {
                return Err(GraphError::VertexOutOfRange { vertex: center, n });
            }
        }
        Ok(Self { shape, n })
    }

    pub fn shape(&self) -> StarShape {
        self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// One local complementation at `v`.
    pub fn step(self, v: usize) -> Result<Self, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if self.n == 1 {
            return Ok(self);
        }
        let shape = match self.shape {
            StarShape::Complete => StarShape::Star { center: v },
            StarShape::Star { center } if center == v => StarShape::Complete,
            leaf @ StarShape::Star { .. } => leaf,
        };
        Ok(Self { shape, ..self })
    }

    pub fn track(self, seq: &[usize]) -> Result<Self, GraphError> {
        seq.iter()
            .enumerate()
            .try_fold(self, |state, (position, &v)| {
                state.step(v).map_err(|e| GraphError::AtPosition {
                    position,
                    source: Box::new(e),
                })
            })
    }

    /// The explicit graph this state stands for.
    pub fn to_graph(&self) -> Graph {
        match self.shape {
            StarShape::Complete => Graph::complete(self.n),
            StarShape::Star { center } => Graph::star(self.n, center).expect("center in range"),
        }
    }
}
