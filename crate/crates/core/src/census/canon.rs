//! Canonical labeling by ordered equitable refinement plus search.
//!
//! The search individualizes each vertex of the first non-singleton cell in
//! turn, refines, and recurses; every discrete leaf yields a relabeled graph
//! and the smallest one wins. Vertices of the target cell that are twins of
//! an already explored vertex are skipped, since swapping two twins is an
//! automorphism that fixes everything individualized so far.

use crate::graph::{bits, write_graph6, Graph};

type Cells = Vec<u32>;

fn signature(g: &Graph, v: usize, cells: &Cells) -> Vec<u32> {
    cells.iter().map(|&c| (g.neighbors(v) & c).count_ones()).collect()
}

/// Splits cells until every vertex of a cell has the same neighbour count
/// in every cell. Subcells are ordered by signature, so the result depends
/// only on the isomorphism type of `(g, cells)`.
fn refine(g: &Graph, cells: &mut Cells) {
    let mut i = 0;
    while i < cells.len() {
        let cell = cells[i];
        if cell.count_ones() > 1 {
            let mut groups: Vec<(Vec<u32>, u32)> = Vec::new();
            for v in bits(cell) {
                let sig = signature(g, v, cells);
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, m)) => *m |= 1 << v,
                    None => groups.push((sig, 1 << v)),
                }
            }
            if groups.len() > 1 {
                groups.sort();
                cells.splice(i..=i, groups.into_iter().map(|(_, m)| m));
                i = 0;
                continue;
            }
        }
        i += 1;
    }
}

fn is_twin(g: &Graph, u: usize, v: usize) -> bool {
    let (nu, nv) = (g.neighbors(u), g.neighbors(v));
    let both = (1u32 << u) | (1 << v);
    nu & !both == nv & !both
}

fn search(g: &Graph, cells: Cells, best: &mut Option<(Graph, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let mut perm = vec![0; g.order()];
        for (label, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = label;
        }
        let candidate = g.relabel(&perm);
        if best.as_ref().is_none_or(|(b, _)| candidate < *b) {
            *best = Some((candidate, perm));
        }
        return;
    };
    let cell = cells[target];
    let mut explored: Vec<usize> = Vec::new();
    for v in bits(cell) {
        if explored.iter().any(|&u| is_twin(g, u, v)) {
            continue;
        }
        explored.push(v);
        let mut next = cells.clone();
        next.splice(target..=target, [1 << v, cell & !(1 << v)]);
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// Permutation taking `g` to its canonical form: `perm[old] = new`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    if g.order() == 0 {
        return Vec::new();
    }
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells);
    let mut best = None;
    search(g, cells, &mut best);
    best.expect("search reaches a leaf").1
}

/// Representative shared by exactly the graphs isomorphic to `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

pub fn canonical_graph6(g: &Graph) -> String {
    write_graph6(&canonical_form(g))
}
