//! Local complementation on simple graphs.
//!
//! - [`graph`]: bit-packed labeled graphs, local complementation, deletions,
//!   subgraph complementation, orbit enumeration and the star/complete tracker.
//! - [`gf2`]: dense F₂ linear algebra.
//! - [`lep`]: local-equivalence decision with a checkable witness.
//! - [`circuit`]: AND/OR/NOT netlists, evaluation, normalization, layering.
//! - [`gadgets`]: the COPY/NOT/AND/DUP gadgets and a circle-graph checker.
//! - [`gss`]: lowering of circuits to graph-sequence structures.
//! - [`cli`]: the `lcomp` command line.

pub mod circuit;
pub mod cli;
pub mod gadgets;
pub mod gf2;
pub mod graph;
pub mod gss;
pub mod lep;

pub use circuit::{Circuit, CircuitError, InputAssignment};
pub use gadgets::{Gadget, GadgetKind};
pub use gf2::{BitMatrix, BitVector};
pub use graph::{
    Graph, GraphError, MixedOp, MixedSequence, QueryMode, StarCompleteState, StarShape,
    VertexSequence,
};
pub use gss::{compile, Gss};
pub use lep::{solve_lep, LepVerdict};
