use std::collections::BTreeSet;

use super::canon::canonical_form;
use super::{parallel_map, CensusError};
use crate::graph::{write_graph6, Graph};

/// Largest order the built-in enumeration accepts.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// One representative per isomorphism class of connected graphs of order
/// `n`, each in canonical form, sorted by graph6 encoding.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, CensusError> {
    enumerate_connected_with(n, 1)
}

/// [`enumerate_connected`] spreading each extension round over `workers`
/// threads. The output does not depend on `workers`.
///
/// Every connected graph has a vertex whose removal leaves it connected,
/// so adding one vertex with every nonempty neighbourhood to every
/// connected graph of order `k - 1` reaches every connected graph of
/// order `k`.
pub fn enumerate_connected_with(n: usize, workers: usize) -> Result<Vec<Graph>, CensusError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(CensusError::EnumerationOrder(n));
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let extended = parallel_map(&level, workers, |parent| {
            (1u32..1 << (k - 1))
                .map(|mask| canonical_form(&parent.with_vertex(mask).expect("order within range")))
                .collect::<BTreeSet<Graph>>()
        });
        let all: BTreeSet<Graph> = extended.into_iter().flatten().collect();
        level = all.into_iter().collect();
    }
    let mut keyed: Vec<(String, Graph)> = level.into_iter().map(|g| (write_graph6(&g), g)).collect();
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}
