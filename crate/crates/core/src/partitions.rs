//! Vertex partitions, equitable refinement and quotient matrices of the
//! random-walk Laplacian.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::graph::Graph;
use crate::poly::{squarefree_part, PolyError, Rational, RationalMatrix};
use crate::spectral::{random_walk_laplacian, SpectralError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("cell {0} is empty")]
    EmptyCell(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex {0} appears in more than one cell")]
    Overlap(usize),
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("partition has order {partition} but the graph has order {graph}")]
    OrderMismatch { partition: usize, graph: usize },
    #[error("cells {row} -> {col} do not have constant row sums")]
    NotEquitable { row: usize, col: usize },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Ordered sequence of disjoint nonempty cells covering `0..order`.
/// Vertices inside a cell are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    order: usize,
    cells: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(order: usize, cells: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; order];
        let mut cells = cells;
        for (i, cell) in cells.iter_mut().enumerate() {
            if cell.is_empty() {
                return Err(PartitionError::EmptyCell(i));
            }
            cell.sort_unstable();
            for &v in cell.iter() {
                if v >= order {
                    return Err(PartitionError::VertexOutOfRange { vertex: v, order });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(PartitionError::Overlap(v));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(PartitionError::Uncovered(v));
        }
        Ok(Self { order, cells })
    }

    /// The single-cell partition.
    pub fn unit(order: usize) -> Self {
        let cells = if order == 0 { vec![] } else { vec![(0..order).collect()] };
        Self { order, cells }
    }

    pub fn discrete(order: usize) -> Self {
        Self { order, cells: (0..order).map(|v| vec![v]).collect() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// `cell_of()[v]` is the index of the cell holding `v`.
    pub fn cell_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.order];
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                out[v] = i;
            }
        }
        out
    }

    /// Whether every cell of `self` lies inside a cell of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.order != coarser.order {
            return false;
        }
        let owner = coarser.cell_of();
        self.cells.iter().all(|c| c.iter().all(|&v| owner[v] == owner[c[0]]))
    }

    fn sorted_by_min(mut self) -> Self {
        self.cells.sort_unstable_by_key(|c| c[0]);
        self
    }

    fn check_order(&self, g: &Graph) -> Result<(), PartitionError> {
        if self.order != g.order() {
            return Err(PartitionError::OrderMismatch { partition: self.order, graph: g.order() });
        }
        Ok(())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self
            .cells
            .iter()
            .map(|c| format!("{{{}}}", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", cells.join(" "))
    }
}

fn cell_masks(p: &Partition) -> Vec<u32> {
    p.cells.iter().map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v)).collect()
}

/// Whether every vertex of cell `i` has the same number of neighbours in
/// cell `j`, for every ordered pair `(i, j)`.
pub fn is_equitable(g: &Graph, p: &Partition) -> bool {
    if p.order != g.order() {
        return false;
    }
    let masks = cell_masks(p);
    p.cells.iter().all(|cell| {
        masks.iter().all(|&m| {
            let first = (g.neighbors(cell[0]) & m).count_ones();
            cell.iter().all(|&v| (g.neighbors(v) & m).count_ones() == first)
        })
    })
}

/// Coarsest equitable partition refining `p`, cells ordered by their
/// smallest vertex.
pub fn coarsest_equitable_refinement(g: &Graph, p: &Partition) -> Result<Partition, PartitionError> {
    p.check_order(g)?;
    let mut current = p.clone();
    loop {
        let masks = cell_masks(&current);
        let mut next = Vec::with_capacity(current.len());
        for cell in &current.cells {
            let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let sig = masks.iter().map(|&m| (g.neighbors(v) & m).count_ones()).collect();
                groups.entry(sig).or_default().push(v);
            }
            next.extend(groups.into_values());
        }
        let done = next.len() == current.len();
        current = Partition { order: current.order, cells: next };
        if done {
            return Ok(current.sorted_by_min());
        }
    }
}

/// Block row sums of `I - D^{-1} A` with respect to `p`. Every block must
/// have an exactly constant row sum.
pub fn quotient_matrix(g: &Graph, p: &Partition) -> Result<RationalMatrix, PartitionError> {
    p.check_order(g)?;
    let h = random_walk_laplacian(g)?;
    let t = p.len();
    let mut q = RationalMatrix::zeros(t);
    for (i, cell_i) in p.cells.iter().enumerate() {
        for (j, cell_j) in p.cells.iter().enumerate() {
            let row_sum =
                |u: usize| -> Rational { cell_j.iter().map(|&v| &h[(u, v)]).fold(Rational::zero(), |acc, x| acc + x) };
            let first = row_sum(cell_i[0]);
            if cell_i[1..].iter().any(|&u| row_sum(u) != first) {
                return Err(PartitionError::NotEquitable { row: i, col: j });
            }
            q[(i, j)] = first;
        }
    }
    Ok(q)
}

/// Whether every eigenvalue of the quotient is an eigenvalue of the graph:
/// the square-free part of the quotient's characteristic polynomial must
/// divide the graph's exactly.
pub fn verify_quotient_embedding(g: &Graph, p: &Partition) -> Result<bool, PartitionError> {
    let q = quotient_matrix(g, p)?;
    let quotient_roots = squarefree_part(&q.char_poly())?;
    let full = random_walk_laplacian(g)?.char_poly();
    Ok(quotient_roots.divides(&full))
}

/// Row sums of a quotient are all zero, like the Laplacian it came from.
pub fn has_zero_row_sums(q: &RationalMatrix) -> bool {
    (0..q.order()).all(|i| q.row(i).iter().fold(Rational::zero(), |a, x| a + x).is_zero())
}

/// Whether `vol_i * q[i][j] == vol_j * q[j][i]`, where `vol` is the degree
/// sum of a cell. Holds for every quotient of an undirected graph.
pub fn volume_weighted_symmetric(g: &Graph, p: &Partition, q: &RationalMatrix) -> bool {
    let vol: Vec<Rational> =
        p.cells.iter().map(|c| Rational::from_integer(c.iter().map(|&v| g.degree(v)).sum::<usize>().into())).collect();
    (0..q.order()).all(|i| (0..q.order()).all(|j| &q[(i, j)] * &vol[i] == &q[(j, i)] * &vol[j]))
}
