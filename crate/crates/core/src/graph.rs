//! The non-diagonalizable graph and the reduction from graphs back to Pauli
//! sets.
//!
//! Vertices are operator indices in input order. Two vertices are adjacent
//! when the pair cannot be diagonalized together by the chosen gate set, so a
//! proper coloring is exactly a partition into simultaneously diagonalizable
//! parts.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitMatrix;
use crate::field::PrimeDimension;
use crate::pauli::{PauliOperator, PauliSet};
use crate::{Error, Result};

/// Which gates may be used to diagonalize a part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateSetMode {
    /// The generalized Clifford group: any commuting set is diagonalizable.
    FullClifford,
    /// Single-qudit Clifford gates only: parts must commute qudit by qudit.
    SingleQuditClifford,
}

impl GateSetMode {
    /// Whether `a` and `b` may share a part under this gate set.
    pub fn compatible(self, a: &PauliOperator, b: &PauliOperator) -> Result<bool> {
        match self {
            GateSetMode::FullClifford => a.commutes(b),
            GateSetMode::SingleQuditClifford => a.quditwise_commutes(b),
        }
    }
}

/// A simple undirected graph on `0..vertex_count`, optionally labeled with the
/// operators it was built from.
#[derive(Debug, Clone)]
pub struct CommutationGraph {
    adjacency: BitMatrix,
    labels: Option<Vec<PauliOperator>>,
}

impl CommutationGraph {
    pub fn new(vertex_count: usize) -> Self {
        CommutationGraph { adjacency: BitMatrix::new(vertex_count), labels: None }
    }

    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = CommutationGraph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.size()
    }

    /// Adds the undirected edge `{u, v}`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adjacency.set(u, v);
        self.adjacency.set(v, u);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u, v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.ones(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency.row_count(v)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Edge-set equality under the identity vertex map. Labels are ignored.
    pub fn same_edges(&self, other: &CommutationGraph) -> bool {
        self.adjacency == other.adjacency
    }

    /// Edge set of `self` is contained in that of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &CommutationGraph) -> bool {
        self.vertex_count() == other.vertex_count() && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    pub fn labels(&self) -> Option<&[PauliOperator]> {
        self.labels.as_deref()
    }

    /// The graph with vertex `i` renamed to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(Error::InvalidArgument("permutation length differs from vertex count".into()));
        }
        let mut g = CommutationGraph::new(n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = CommutationGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.adjacency.set(u, v);
                g.adjacency.set(v, u);
            }
        }
        g
    }

    /// The cycle `0 – 1 – … – (n-1) – 0`; needs `n ≥ 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument("a cycle needs at least 3 vertices".into()));
        }
        CommutationGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes
    /// `i – i+5`.
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        CommutationGraph::from_edges(10, outer.chain(inner).chain(spokes)).expect("valid edges")
    }

    /// Crown graph on `2k` vertices: `K_{k,k}` minus a perfect matching.
    /// Vertex `2i` is `a_i` and `2i+1` is `b_i`, the interleaving that drives
    /// first-fit in natural order to `k` colors.
    pub fn crown(k: usize) -> Self {
        let mut g = CommutationGraph::new(2 * k);
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    g.adjacency.set(2 * i, 2 * j + 1);
                    g.adjacency.set(2 * j + 1, 2 * i);
                }
            }
        }
        g
    }

    /// Erdős–Rényi `G(n, p)`, deterministic in `seed`.
    pub fn random(n: usize, p: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = CommutationGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.adjacency.set(u, v);
                    g.adjacency.set(v, u);
                }
            }
        }
        g
    }
}

/// Builds the non-diagonalizable graph of `set` under `mode`.
pub fn build_graph(set: &PauliSet, mode: GateSetMode) -> CommutationGraph {
    let ops = set.operators();
    let mut g = CommutationGraph::new(ops.len());
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            // Operators of one set always share q and length.
            if !mode.compatible(&ops[i], &ops[j]).expect("homogeneous set") {
                g.adjacency.set(i, j);
                g.adjacency.set(j, i);
            }
        }
    }
    g.labels = Some(ops.to_vec());
    g
}

/// Realizes any graph as a Pauli set whose (full Clifford) non-diagonalizable
/// graph is the input graph.
///
/// Operator `i` has `x = e_i` and `z` equal to row `i` of the strictly lower
/// triangular part of the adjacency matrix, so for `u < v` the symplectic
/// product is `-A[v][u]`, nonzero exactly on edges.
pub fn pauli_set_from_graph(g: &CommutationGraph, q: PrimeDimension) -> Result<PauliSet> {
    let n = g.vertex_count();
    if n == 0 {
        return PauliSet::from_operators(q, Vec::new());
    }
    let operators = (0..n)
        .map(|i| {
            let mut x = vec![0; n];
            x[i] = 1;
            let z = (0..n).map(|j| u32::from(j < i && g.has_edge(i, j))).collect();
            PauliOperator::new(q, x, z)
        })
        .collect::<Result<Vec<_>>>()?;
    PauliSet::new(q, n, operators)
}

/// True iff reducing `g` to a Pauli set and rebuilding the full Clifford graph
/// returns exactly the edges of `g`.
pub fn graph_roundtrip_check(g: &CommutationGraph, q: PrimeDimension) -> Result<bool> {
    let set = pauli_set_from_graph(g, q)?;
    if set.is_empty() {
        return Ok(g.vertex_count() == 0);
    }
    Ok(build_graph(&set, GateSetMode::FullClifford).same_edges(g))
}
