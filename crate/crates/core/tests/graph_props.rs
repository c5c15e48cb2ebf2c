mod common;

use nlspec_core::census::enumerate_connected;
use nlspec_core::graph::{
    diameter, independence_number, is_cograph, is_connected, neighborhood_trace, p4_witness, parse_graph6,
    write_graph6, Graph, PathWitness,
};
use proptest::prelude::*;

#[test]
fn graph6_round_trip_random() {
    let mut rng = common::rng(6);
    for n in 1..=10 {
        for _ in 0..1000 {
            let g = common::random_graph(&mut rng, n, 0.5);
            let text = write_graph6(&g);
            assert_eq!(parse_graph6(&text).unwrap(), g, "{text}");
            assert_eq!(text.len(), 1 + (n * (n - 1) / 2).div_ceil(6));
        }
    }
}

#[test]
fn graph6_known_strings() {
    assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4).unwrap());
    assert_eq!(parse_graph6("Ch").unwrap(), Graph::path(4).unwrap());
    assert_eq!(parse_graph6("D~{").unwrap(), Graph::complete(5).unwrap());
    assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
}

fn small_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = (2..=7).flat_map(|n| enumerate_connected(n).unwrap()).collect();
    let mut rng = common::rng(61);
    for _ in 0..300 {
        let n = 2 + out.len() % 10;
        out.push(common::random_connected(&mut rng, n));
    }
    out
}

#[test]
fn diameter_matches_floyd_warshall() {
    for g in small_graphs() {
        let (d, witness) = diameter(&g).unwrap();
        let dist = common::floyd_warshall(&g);
        assert_eq!(d, common::brute_diameter(&g), "{g}");
        let w = witness.vertices();
        assert_eq!(w.len(), d + 1, "{g}");
        assert_eq!(dist[w[0]][w[d]], d, "{g}");
        assert!(PathWitness::new(&g, w.to_vec()).is_ok(), "{g}: witness not induced");
    }
}

#[test]
fn independence_matches_subset_scan() {
    for g in small_graphs() {
        assert_eq!(independence_number(&g), common::brute_independence(&g), "{g}");
    }
    let mut rng = common::rng(62);
    for _ in 0..200 {
        let g = common::random_graph(&mut rng, 12, 0.3);
        assert_eq!(independence_number(&g), common::brute_independence(&g), "{g}");
    }
}

#[test]
fn cograph_matches_subset_scan() {
    let mut rng = common::rng(63);
    let mut graphs = small_graphs();
    graphs.extend((0..300).map(|i| common::random_graph(&mut rng, 1 + i % 9, 0.5)));
    for g in graphs {
        let has_p4 = common::brute_has_p4(&g);
        assert_eq!(is_cograph(&g), !has_p4, "{g}");
        match p4_witness(&g) {
            Some(w) => {
                assert_eq!(w.len(), 4);
                assert!(PathWitness::new(&g, w.vertices().to_vec()).is_ok());
            }
            None => assert!(!has_p4, "{g}"),
        }
    }
}

#[test]
fn traces_split_off_path_vertices_by_path_neighbours() {
    for g in small_graphs() {
        let Some(w) = p4_witness(&g) else { continue };
        let trace = neighborhood_trace(&g, &w).unwrap();
        let mut seen = 0;
        for (key, cell) in trace.iter() {
            for &u in cell {
                assert!(!w.vertices().contains(&u));
                let expected: u32 =
                    w.vertices().iter().enumerate().filter(|(_, &p)| g.has_edge(u, p)).fold(0, |m, (i, _)| m | 1 << i);
                assert_eq!(key, expected);
                seen += 1;
            }
        }
        assert_eq!(seen, g.order() - 4);
    }
}

#[test]
fn connectivity_matches_bfs() {
    let mut rng = common::rng(64);
    for i in 0..2000 {
        let g = common::random_graph(&mut rng, 1 + i % 12, 0.25);
        assert_eq!(is_connected(&g), common::bfs_connected(&g), "{g}");
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(n in 1usize..=32, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, n, 0.5);
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn relabeling_preserves_structure(n in 1usize..=12, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, n, 0.4);
        let h = g.relabel(&common::random_perm(&mut rng, n));
        prop_assert_eq!(g.edge_count(), h.edge_count());
        prop_assert_eq!(independence_number(&g), independence_number(&h));
        prop_assert_eq!(is_cograph(&g), is_cograph(&h));
        let mut dg = g.degrees();
        let mut dh = h.degrees();
        dg.sort_unstable();
        dh.sort_unstable();
        prop_assert_eq!(dg, dh);
    }

    #[test]
    fn complement_is_involutive(n in 1usize..=16, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, n, 0.5);
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
        // cographs are closed under complement
        prop_assert_eq!(is_cograph(&g), is_cograph(&g.complement()));
    }
}
