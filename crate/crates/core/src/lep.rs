//! Local equivalence of two labeled graphs via Bouchet's F₂ system.
//!
//! For graphs `G1`, `G2` on the same vertices `0..n`, local equivalence holds
//! iff there are bits `X_i, Y_i, Z_i, T_i` with
//!
//! ```text
//! Σ_i α_i^{vw} X_i + β_i^{vw} Y_i + γ_i^{vw} Z_i + δ_i^{vw} T_i = 0   for all v, w
//! X_i T_i + Y_i Z_i = 1                                              for all i
//! ```
//!
//! where `α_i^{vw} = [(i,v) ∈ E(G1) ∧ (i,w) ∈ E(G2)]`,
//! `β_i^{vw} = [(i,v) ∈ E(G1) ∧ i = w]`, `γ_i^{vw} = [i = v ∧ (i,w) ∈ E(G2)]`
//! and `δ_i^{vw} = [i = v = w]`.
//!
//! The solver first compares the connected components of both graphs; they
//! must coincide as vertex sets. Each component is then solved separately:
//! take a nullspace basis `B` of its linear part, and when `dim ≤ 4` try
//! every nonzero combination, otherwise every single basis vector and every
//! sum of two. On a connected graph a short sum exists whenever any solution
//! does.
//!
//! Unknowns are laid out in blocks of four per vertex, `(X_i, Y_i, Z_i, T_i)`
//! at columns `4i..4i+4`.

use rayon::prelude::*;
use thiserror::Error;

use crate::gf2::{BitMatrix, BitVector};
use crate::graph::Graph;

/// Exhaustive combination search is used up to this nullspace dimension.
pub const EXHAUSTIVE_DIM: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LepError {
    #[error("graphs have different vertex counts ({left} vs {right})")]
    VertexCountMismatch { left: usize, right: usize },
    #[error("vector length {len} does not match 4 x {n} unknowns")]
    LengthMismatch { len: usize, n: usize },
    #[error("failed to start worker pool: {0}")]
    ThreadPool(String),
}

/// One of the four unknowns attached to every vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unknown {
    X = 0,
    Y = 1,
    Z = 2,
    T = 3,
}

/// Column of unknown `var` of vertex `i`.
#[inline]
pub fn column(i: usize, var: Unknown) -> usize {
    4 * i + var as usize
}

/// The linear part: `n²` rows indexed `v·n + w`, `4n` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BouchetSystem {
    n: usize,
    coeffs: BitMatrix,
}

impl BouchetSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BitMatrix {
        &self.coeffs
    }

    #[inline]
    pub fn row_index(&self, v: usize, w: usize) -> usize {
        v * self.n + w
    }
}

pub fn build_system(g1: &Graph, g2: &Graph) -> Result<BouchetSystem, LepError> {
    let n = same_size(g1, g2)?;
    let mut coeffs = BitMatrix::zeros(n * n, 4 * n);
    for v in 0..n {
        for w in 0..n {
            let row = v * n + w;
            // α: i adjacent to v in G1 and to w in G2.
            for i in g1.neighbors(v).filter(|&i| g2.has_edge(i, w)) {
                coeffs.set(row, column(i, Unknown::X), true);
            }
            // β: i = w adjacent to v in G1.
            if g1.has_edge(w, v) {
                coeffs.set(row, column(w, Unknown::Y), true);
            }
            // γ: i = v adjacent to w in G2.
            if g2.has_edge(v, w) {
                coeffs.set(row, column(v, Unknown::Z), true);
            }
            // δ: i = v = w.
            if v == w {
                coeffs.set(row, column(v, Unknown::T), true);
            }
        }
    }
    Ok(BouchetSystem { n, coeffs })
}

fn same_size(g1: &Graph, g2: &Graph) -> Result<usize, LepError> {
    if g1.n() == g2.n() {
        Ok(g1.n())
    } else {
        Err(LepError::VertexCountMismatch {
            left: g1.n(),
            right: g2.n(),
        })
    }
}

const X_BITS: u64 = 0x1111_1111_1111_1111;

/// `X·T + Y·Z = 1` for each of the first `n` four-bit blocks.
fn blocks_ok(words: &[u64], n: usize) -> bool {
    let full_words = n / 16;
    let tail_blocks = n % 16;
    let check = |w: u64| (w & (w >> 3)) ^ ((w >> 1) & (w >> 2));
    words[..full_words]
        .iter()
        .all(|&w| check(w) & X_BITS == X_BITS)
        && (tail_blocks == 0 || {
            let mask = X_BITS & ((1u64 << (4 * tail_blocks)) - 1);
            check(words[full_words]) & mask == mask
        })
}

/// Does every block `(X, Y, Z, T)` of `b` satisfy `X·T + Y·Z = 1`?
pub fn satisfies_nonlinear(b: &BitVector, n: usize) -> Result<bool, LepError> {
    if b.len() != 4 * n {
        return Err(LepError::LengthMismatch { len: b.len(), n });
    }
    Ok(blocks_ok(b.words(), n))
}

/// Outcome of [`solve_lep`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LepVerdict {
    /// A solution of both the linear and the per-vertex equations, present
    /// exactly when the graphs are locally equivalent.
    pub witness: Option<BitVector>,
}

impl LepVerdict {
    pub fn equivalent(&self) -> bool {
        self.witness.is_some()
    }
}

pub fn solve_lep(g1: &Graph, g2: &Graph) -> Result<LepVerdict, LepError> {
    solve_lep_with_threads(g1, g2, 1)
}

/// [`solve_lep`] with the candidate scan spread over `threads` workers. The
/// witness is the first valid candidate in the sequential order regardless
/// of the thread count.
pub fn solve_lep_with_threads(
    g1: &Graph,
    g2: &Graph,
    threads: usize,
) -> Result<LepVerdict, LepError> {
    same_size(g1, g2)?;
    if threads <= 1 {
        return Ok(solve_by_components(g1, g2, false));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| LepError::ThreadPool(e.to_string()))?;
    Ok(pool.install(|| solve_by_components(g1, g2, true)))
}

// Local complementation never changes the vertex sets of the connected
// components, and the linear system has no coefficients linking two
// components that both graphs share. The short-sum search is only complete
// on a connected graph, so each component is solved on its own.
fn solve_by_components(g1: &Graph, g2: &Graph, parallel: bool) -> LepVerdict {
    let parts = g1.components();
    if parts != g2.components() {
        return LepVerdict { witness: None };
    }
    let mut witness = BitVector::zeros(4 * g1.n());
    for part in &parts {
        let h1 = g1
            .induced_subgraph(part)
            .expect("component vertices are valid");
        let h2 = g2
            .induced_subgraph(part)
            .expect("component vertices are valid");
        let system = build_system(&h1, &h2).expect("same component size");
        let basis = system.coeffs().nullspace_basis();
        let Some(local) = search(&basis, part.len(), parallel) else {
            return LepVerdict { witness: None };
        };
        for (k, &v) in part.iter().enumerate() {
            for var in 0..4 {
                if local.get(4 * k + var) {
                    witness.set(4 * v + var, true);
                }
            }
        }
    }
    LepVerdict {
        witness: Some(witness),
    }
}

fn combine(basis: &[BitVector], indices: impl IntoIterator<Item = usize>, len: usize) -> BitVector {
    let mut acc = BitVector::zeros(len);
    for i in indices {
        acc.xor_assign(&basis[i])
            .expect("basis vectors share a length");
    }
    acc
}

/// First vector of `span(basis)` satisfying the per-vertex equations, in
/// a fixed order: every nonzero combination by increasing mask when the
/// basis has at most [`EXHAUSTIVE_DIM`] vectors, otherwise single vectors
/// in basis order and then pairs `(i, j)`, `i < j`, lexicographically.
pub fn search(basis: &[BitVector], n: usize, parallel: bool) -> Option<BitVector> {
    let d = basis.len();
    let len = 4 * n;

    if d <= EXHAUSTIVE_DIM {
        // Nonzero masks only: the zero vector fails every block.
        return (1u32..1 << d)
            .map(|mask| combine(basis, (0..d).filter(|i| mask >> i & 1 == 1), len))
            .find(|c| blocks_ok(c.words(), n));
    }

    let single = |i: &usize| blocks_ok(basis[*i].words(), n);
    let found = if parallel {
        (0..d).into_par_iter().find_first(single)
    } else {
        (0..d).find(single)
    };
    if let Some(i) = found {
        return Some(basis[i].clone());
    }

    let words = basis[0].words().len();
    let pair_with = |i: usize| {
        let mut scratch = vec![0u64; words];
        (i + 1..d).find(|&j| {
            for (s, (a, b)) in scratch
                .iter_mut()
                .zip(basis[i].words().iter().zip(basis[j].words()))
            {
                *s = a ^ b;
            }
            blocks_ok(&scratch, n)
        })
    };
    let pair = if parallel {
        (0..d)
            .into_par_iter()
            .find_map_first(|i| pair_with(i).map(|j| (i, j)))
    } else {
        (0..d).find_map(|i| pair_with(i).map(|j| (i, j)))
    };
    pair.map(|(i, j)| combine(basis, [i, j], len))
}

/// Checks that `b` solves both the linear system for `(g1, g2)` and the
/// per-vertex equations.
pub fn verify_witness(b: &BitVector, g1: &Graph, g2: &Graph) -> Result<bool, LepError> {
    let system = build_system(g1, g2)?;
    if b.len() != 4 * system.n() {
        return Err(LepError::LengthMismatch {
            len: b.len(),
            n: system.n(),
        });
    }
    let residual = system.coeffs().matvec(b).expect("length checked above");
    Ok(residual.is_zero() && satisfies_nonlinear(b, system.n())?)
}
