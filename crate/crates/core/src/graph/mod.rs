//! Undirected simple graphs on at most 64 vertices.
//!
//! Each vertex keeps its neighborhood as a single `u64` bitset, so adjacency
//! tests, degrees and common-neighbor counts are one or two machine
//! instructions.

mod families;
mod graph6;
mod invariants;

pub use families::{Gadget, ParseGadgetError};
pub use invariants::Girth;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount { n, min: 1, max: MAX_VERTICES });
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbor bitsets, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let g = Self::empty(adj.len())?;
        let n = g.n;
        let mask = g.vertex_mask();
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 || row >> u & 1 == 1 {
                return Err(Error::InvalidArgument(format!("bad adjacency row {u}")));
            }
            for v in bits(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::InvalidArgument(format!("asymmetric adjacency at ({u}, {v})")));
                }
            }
        }
        Ok(Self { n, adj })
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::InvalidArgument(format!("invalid edge ({u}, {v}) for n = {}", self.n)));
        }
        self.add_edge(u, v);
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Copy of the graph with the edge `uv` deleted.
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// Induced subgraph on `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut g = Self::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, &row) in self.adj.iter().enumerate() {
            for v in bits(row) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Self { n: self.n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `u` as a bitset.
    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn neighbor_iter(&self, u: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[u])
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u].checked_shr(u as u32 + 1).unwrap_or(0)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub(crate) fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", self.to_graph6())
    }
}

/// Iterates the set bit positions of `word`, lowest first.
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}
