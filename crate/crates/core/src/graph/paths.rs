use std::collections::BTreeMap;

use super::{bit, bits, Graph, GraphError};

/// Unreachable marker in distance rows.
pub const UNREACHABLE: usize = usize::MAX;

/// An induced path of `g`, listed from one end to the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWitness {
    vertices: Vec<usize>,
}

impl PathWitness {
    /// Checks that `vertices` are distinct, consecutive ones adjacent and
    /// all other pairs non-adjacent.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        if !is_induced_path(g, &vertices) {
            return Err(GraphError::NotInducedPath(vertices));
        }
        Ok(Self { vertices })
    }

    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn mask(&self) -> u32 {
        self.vertices.iter().fold(0, |m, &v| m | bit(v))
    }
}

fn is_induced_path(g: &Graph, vertices: &[usize]) -> bool {
    let n = g.order();
    if vertices.is_empty() || vertices.iter().any(|&v| v >= n) {
        return false;
    }
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
            if u == v || g.has_edge(u, v) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

/// Breadth-first distances from `source`; unreachable vertices get [`UNREACHABLE`].
fn bfs(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.order()];
    dist[source] = 0;
    let mut seen = bit(source);
    let mut frontier = bit(source);
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let next = bits(frontier).fold(0, |m, u| m | g.neighbors(u)) & !seen;
        for v in bits(next) {
            dist[v] = d;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

/// All-pairs shortest path lengths.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|s| bfs(g, s)).collect()
}

pub fn is_connected(g: &Graph) -> bool {
    let all = g.vertex_mask();
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let next = bits(frontier).fold(0, |m, u| m | g.neighbors(u)) & !seen;
        seen |= next;
        frontier = next;
    }
    seen == all
}

/// Diameter of a connected graph together with the lexicographically
/// smallest geodesic that realizes it.
pub fn diameter(g: &Graph) -> Result<(usize, PathWitness), GraphError> {
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    let dist = distances(g);
    let diam = dist.iter().flat_map(|row| row.iter().copied()).max().unwrap_or(0);

    // smallest start vertex with eccentricity `diam`, then greedily the
    // smallest next vertex that can still reach a far endpoint
    let start = (0..g.order()).find(|&u| dist[u].contains(&diam)).expect("some vertex attains the diameter");
    let targets: Vec<usize> = (0..g.order()).filter(|&t| dist[start][t] == diam).collect();
    let mut path = vec![start];
    let mut cur = start;
    for k in 0..diam {
        let next = bits(g.neighbors(cur))
            .find(|&y| dist[start][y] == k + 1 && targets.iter().any(|&t| dist[y][t] == diam - k - 1))
            .expect("geodesic continues");
        path.push(next);
        cur = next;
    }
    Ok((diam, PathWitness::new_unchecked(path)))
}

/// Partition of the vertices off an induced path by their trace on it.
///
/// Keys are bitmasks over path *positions* (bit `i` is the `i`-th path
/// vertex), so `{v1, v2}` on a path `v1 v2 v3 v4` is key `0b0011`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceMap {
    path: Vec<usize>,
    cells: BTreeMap<u32, Vec<usize>>,
}

impl TraceMap {
    pub fn path(&self) -> &[usize] {
        &self.path
    }

    /// Vertices whose neighbors on the path are exactly the given positions.
    pub fn cell(&self, positions: &[usize]) -> &[usize] {
        let key = positions.iter().fold(0, |m, &p| m | bit(p));
        self.cells.get(&key).map_or(&[], Vec::as_slice)
    }

    /// Nonempty cells as `(position mask, vertices)`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &[usize])> {
        self.cells.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    pub fn positions(key: u32) -> Vec<usize> {
        bits(key).collect()
    }
}

/// Groups the vertices outside `path` by which path vertices they see.
pub fn neighborhood_trace(g: &Graph, path: &PathWitness) -> Result<TraceMap, GraphError> {
    if !is_induced_path(g, path.vertices()) {
        return Err(GraphError::NotInducedPath(path.vertices().to_vec()));
    }
    let on_path = path.mask();
    let mut cells: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for u in bits(g.vertex_mask() & !on_path) {
        let key =
            path.vertices().iter().enumerate().filter(|&(_, &p)| g.has_edge(u, p)).fold(0, |m, (i, _)| m | bit(i));
        cells.entry(key).or_default().push(u);
    }
    Ok(TraceMap { path: path.vertices().to_vec(), cells })
}
