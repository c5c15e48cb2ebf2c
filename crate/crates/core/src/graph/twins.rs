use std::collections::BTreeMap;

use super::{bit, Graph};

/// Classes of vertices with identical open neighborhoods, ordered by their
/// smallest member. Singletons are included, so the result partitions `V`.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    group_by_key(g, |v| g.neighbors(v))
}

/// Maximal cliques `K` whose members share the same neighbors outside `K`,
/// restricted to sets with at least two vertices.
///
/// Such sets are exactly the classes of equal closed neighborhoods
/// `N(v) ∪ {v}`.
pub fn clique_twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    group_by_key(g, |v| g.neighbors(v) | bit(v)).into_iter().filter(|c| c.len() >= 2).collect()
}

fn group_by_key(g: &Graph, key: impl Fn(usize) -> u32) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for v in 0..g.order() {
        groups.entry(key(v)).or_default().push(v);
    }
    let mut classes: Vec<_> = groups.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    classes
}
