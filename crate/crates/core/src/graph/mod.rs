//! Simple undirected graphs on at most 32 vertices, stored as one neighbor
//! bitmask per vertex, plus the structural predicates used by the
//! classification pipeline.

mod cograph;
mod graph6;
mod independence;
mod paths;
mod twins;

use std::fmt;

use thiserror::Error;

pub use cograph::{induced_p4s, is_cograph, p4_witness};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use independence::independence_number;
pub use paths::{diameter, distances, is_connected, neighborhood_trace, PathWitness, TraceMap};
pub use twins::{clique_twin_classes, twin_classes};

/// Largest supported vertex count; one neighborhood fits in a `u32`.
pub const MAX_ORDER: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} outside supported range 1..={MAX_ORDER}")]
    UnsupportedOrder(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency rows disagree on pair ({0},{1})")]
    Asymmetric(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertices {0:?} do not form an induced path")]
    NotInducedPath(Vec<usize>),
}

/// Iterates over the set bits of `mask`, lowest first.
pub fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) const fn bit(v: usize) -> u32 {
    1u32 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// An undirected simple graph with vertices `0..n`.
///
/// Row `u` of the adjacency has bit `v` set iff `u ~ v`. Rows are kept
/// symmetric and loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::UnsupportedOrder(n));
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: &[u32]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Self::empty(n)?;
        let mask = low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, order: n });
            }
            if row & bit(u) != 0 {
                return Err(GraphError::SelfLoop(u));
            }
            for v in bits(row) {
                g.add_edge(u, v);
            }
        }
        if let Some(u) = (0..n).find(|&u| g.adj[u] != rows[u]) {
            let v = (g.adj[u] ^ rows[u]).trailing_zeros() as usize;
            return Err(GraphError::Asymmetric(u, v));
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let all = low_mask(n);
        for u in 0..n {
            g.adj[u] = all & !bit(u);
        }
        Ok(g)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Self::from_edges(n, &edges)
    }

    /// Star `K_{1,leaves}` with center `0`.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges)
    }

    /// Adds the edge `{u, v}`.
    ///
    /// # Panics
    /// If `u == v` or either endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert_ne!(u, v, "self-loop at {u}");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighborhood of `u` as a bitmask.
    #[inline]
    pub fn neighbors(&self, u: usize) -> u32 {
        self.adj[u]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        low_mask(self.n)
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|u| all & !self.adj[u] & !bit(u)).collect();
        Graph { n: self.n, adj }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u32; self.n];
        for (u, &pu) in perm.iter().enumerate() {
            adj[pu] = bits(self.adj[u]).fold(0, |acc, v| acc | bit(perm[v]));
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Adds a new vertex adjacent to `mask`, returning the larger graph.
    pub fn with_vertex(&self, mask: u32) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        if n > MAX_ORDER {
            return Err(GraphError::UnsupportedOrder(n));
        }
        let mask = mask & self.vertex_mask();
        let mut adj = self.adj.clone();
        for v in bits(mask) {
            adj[v] |= bit(self.n);
        }
        adj.push(mask);
        Ok(Graph { n, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", write_graph6(self), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_have_expected_sizes() {
        assert_eq!(Graph::complete(5).unwrap().edge_count(), 10);
        assert_eq!(Graph::path(4).unwrap().edge_count(), 3);
        assert_eq!(Graph::cycle(5).unwrap().degrees(), vec![2; 5]);
        assert_eq!(Graph::star(4).unwrap().degrees(), vec![4, 1, 1, 1, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::empty(0), Err(GraphError::UnsupportedOrder(0)));
        assert_eq!(Graph::empty(33), Err(GraphError::UnsupportedOrder(33)));
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(Graph::from_edges(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })));
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b01, 0b00]).is_err());
    }

    #[test]
    fn complement_and_relabel() {
        let p4 = Graph::path(4).unwrap();
        let c = p4.complement();
        assert_eq!(c.edge_count(), 3);
        // P4 is self-complementary: 1-3-0-2 is the complement path
        let perm = [2, 0, 3, 1];
        assert_eq!(p4.relabel(&perm), c);
        let edges: Vec<_> = p4.edges().collect();
        assert_eq!(edges, vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn with_vertex_extends() {
        let g = Graph::path(3).unwrap().with_vertex(0b101).unwrap();
        assert_eq!(g, Graph::cycle(4).unwrap());
    }
}
