mod common;

use nlspec_core::census::enumerate_connected;
use nlspec_core::families::{make_family, FamilySpec};
use nlspec_core::graph::Graph;
use nlspec_core::partitions::{
    coarsest_equitable_refinement, has_zero_row_sums, is_equitable, quotient_matrix, verify_quotient_embedding,
    volume_weighted_symmetric, Partition,
};
use proptest::prelude::*;
use rand::Rng;

/// Colour refinement that recolours every vertex each round from its own
/// colour and its neighbour counts per colour, until no class splits.
fn refine_oracle(g: &Graph, p: &Partition) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut color: Vec<usize> = p.cell_of();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0; n];
                for u in 0..n {
                    if g.has_edge(u, v) {
                        counts[color[u]] += 1;
                    }
                }
                (color[v], counts)
            })
            .collect();
        let mut distinct = sig.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sig.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let classes = |c: &[usize]| {
            let mut k = c.to_vec();
            k.sort_unstable();
            k.dedup();
            k.len()
        };
        if classes(&next) == classes(&color) {
            break;
        }
        color = next;
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        match cells.iter_mut().find(|c| color[c[0]] == color[v]) {
            Some(c) => c.push(v),
            None => cells.push(vec![v]),
        }
    }
    cells
}

#[test]
fn spec_examples() {
    let star = Graph::star(4).unwrap();
    let r = coarsest_equitable_refinement(&star, &Partition::unit(5)).unwrap();
    assert_eq!(r.cells(), &[vec![0], vec![1, 2, 3, 4]]);
    let g1 = make_family(&FamilySpec::G1 { a: 1, b: 1 }).unwrap();
    let r = coarsest_equitable_refinement(&g1, &Partition::unit(6)).unwrap();
    assert_eq!(r.cells(), &[vec![0, 5], vec![1, 2, 3, 4]]);
}

#[test]
fn refinement_properties_on_small_graphs() {
    for n in 2..=7 {
        for g in enumerate_connected(n).unwrap() {
            let unit = Partition::unit(n);
            let r = coarsest_equitable_refinement(&g, &unit).unwrap();
            assert!(r.refines(&unit));
            assert!(is_equitable(&g, &r), "{g}");
            assert_eq!(coarsest_equitable_refinement(&g, &r).unwrap(), r, "{g}: not idempotent");
            assert_eq!(r.cells(), refine_oracle(&g, &unit).as_slice(), "{g}");
            let q = quotient_matrix(&g, &r).unwrap();
            assert!(has_zero_row_sums(&q));
            assert!(volume_weighted_symmetric(&g, &r, &q));
            assert!(verify_quotient_embedding(&g, &r).unwrap(), "{g}");
            let discrete = Partition::discrete(n);
            assert_eq!(coarsest_equitable_refinement(&g, &discrete).unwrap(), discrete);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn refining_arbitrary_partitions(n in 2usize..=10, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, n, 0.4);
        let k = rng.random_range(1..=n);
        let color: Vec<usize> = (0..n).map(|v| if v < k { v } else { rng.random_range(0..k) }).collect();
        let cells: Vec<Vec<usize>> = (0..k).map(|c| (0..n).filter(|&v| color[v] == c).collect()).collect();
        let p = Partition::new(n, cells).unwrap();
        let r = coarsest_equitable_refinement(&g, &p).unwrap();
        prop_assert!(r.refines(&p));
        prop_assert!(is_equitable(&g, &r));
        prop_assert_eq!(coarsest_equitable_refinement(&g, &r).unwrap(), r.clone());
        let mut oracle = refine_oracle(&g, &p);
        oracle.sort();
        let mut got = r.cells().to_vec();
        got.sort();
        prop_assert_eq!(got, oracle);
    }
}
