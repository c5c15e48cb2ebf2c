//! Independent reference implementations shared by the integration suites.
//! Everything here is deliberately naive.

#![allow(dead_code)]

use std::collections::BTreeSet;

use nlspec_core::graph::Graph;
use nlspec_core::poly::{int, rat, Polynomial, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random spanning tree plus random extra edges, so always connected.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        let u = rng.random_range(0..v);
        g.add_edge(u, v);
    }
    let p = rng.random_range(0.0..0.8);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    let perm = random_perm(rng, n);
    g.relabel(&perm)
}

pub fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    perm
}

pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest adjacency over all relabelings.
pub fn brute_iso_key(g: &Graph, perms: &[Vec<usize>]) -> Vec<u32> {
    perms.iter().map(|p| g.relabel(p).rows().to_vec()).min().unwrap()
}

#[allow(clippy::needless_range_loop)]
pub fn bfs_connected(g: &Graph) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if g.has_edge(u, v) && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Number of isomorphism classes of connected graphs of order `n`, by
/// brute force over every labeled graph.
pub fn brute_connected_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = all_perms(n);
    let mut classes = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if bfs_connected(&g) {
            classes.insert(brute_iso_key(&g, &perms));
        }
    }
    classes.len()
}

pub fn brute_independence(g: &Graph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|u| s >> u & 1 == 0 || (0..n).all(|v| s >> v & 1 == 0 || !g.has_edge(u, v))))
        .map(u32::count_ones)
        .max()
        .unwrap() as usize
}

#[allow(clippy::needless_range_loop)]
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let inf = usize::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

pub fn brute_diameter(g: &Graph) -> usize {
    floyd_warshall(g).into_iter().flatten().max().unwrap()
}

/// Induced P4 by checking every 4-subset's degree pattern.
pub fn brute_has_p4(g: &Graph) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = [a, b, c, d];
                    let mut deg: Vec<usize> =
                        s.iter().map(|&u| s.iter().filter(|&&v| g.has_edge(u, v)).count()).collect();
                    deg.sort_unstable();
                    if deg == [1, 1, 2, 2] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Determinant by cofactor expansion, for tiny matrices only.
pub fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return int(1);
    }
    let mut total = int(0);
    for j in 0..n {
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// The two-family closed form written out directly:
/// `x (x - (n-1)/(n-2))^(n-3) (x^2 - (2n-3)/(n-2) x + c)`.
pub fn closed_form_by_formula(n: i64, constant: Rational) -> Polynomial {
    let theta = rat(n - 1, n - 2);
    let quad = Polynomial::new(vec![constant, -rat(2 * n - 3, n - 2), int(1)]);
    let mut p = Polynomial::new(vec![int(0), int(1)]);
    for _ in 0..n - 3 {
        p = p * Polynomial::new(vec![-theta.clone(), int(1)]);
    }
    p * quad
}

/// Open-neighbourhood twin classes of size at least 2, by pairwise comparison.
pub fn brute_open_twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut used = vec![false; n];
    for u in 0..n {
        if used[u] {
            continue;
        }
        let class: Vec<usize> = (u..n).filter(|&v| (0..n).all(|w| g.has_edge(u, w) == g.has_edge(v, w))).collect();
        for &v in &class {
            used[v] = true;
        }
        if class.len() >= 2 {
            out.push(class);
        }
    }
    out
}

/// Closed-neighbourhood twin classes of size at least 2.
pub fn brute_closed_twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let closed = |u: usize, w: usize| u == w || g.has_edge(u, w);
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut used = vec![false; n];
    for u in 0..n {
        if used[u] {
            continue;
        }
        let class: Vec<usize> = (u..n).filter(|&v| (0..n).all(|w| closed(u, w) == closed(v, w))).collect();
        for &v in &class {
            used[v] = true;
        }
        if class.len() >= 2 {
            out.push(class);
        }
    }
    out
}
