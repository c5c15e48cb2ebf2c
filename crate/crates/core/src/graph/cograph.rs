//! Cograph recognition by recursive component / co-component splitting.
//!
//! A graph on two or more vertices without an induced P4 is either
//! disconnected or has a disconnected complement, so the recursion either
//! bottoms out in single vertices or stops at a vertex set that is
//! connected in both the graph and its complement. Such a set contains an
//! induced P4, which is returned as the witness.

use super::{bit, bits, Graph, PathWitness};

pub fn is_cograph(g: &Graph) -> bool {
    p4_witness(g).is_none()
}

/// Some induced P4 of `g`, or `None` when `g` is a cograph.
pub fn p4_witness(g: &Graph) -> Option<PathWitness> {
    let prime = find_prime(g, g.vertex_mask())?;
    let p = first_p4_within(g, prime).expect("prime set of a non-cograph contains an induced P4");
    Some(PathWitness::new_unchecked(p.to_vec()))
}

/// A vertex subset that is connected and co-connected, if one is reached.
fn find_prime(g: &Graph, set: u32) -> Option<u32> {
    if set.count_ones() <= 1 {
        return None;
    }
    let parts = components(set, |v| g.neighbors(v));
    if parts.len() > 1 {
        return parts.into_iter().find_map(|c| find_prime(g, c));
    }
    let all = g.vertex_mask();
    let coparts = components(set, |v| all & !g.neighbors(v) & !bit(v));
    if coparts.len() > 1 {
        return coparts.into_iter().find_map(|c| find_prime(g, c));
    }
    Some(set)
}

fn components(set: u32, nbrs: impl Fn(usize) -> u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut left = set;
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |m, u| m | nbrs(u)) & set & !comp;
            comp |= next;
            frontier = next;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

/// Lexicographically first `(a, b, c, d)` with `a < d` inducing a P4 inside `set`.
fn first_p4_within(g: &Graph, set: u32) -> Option<[usize; 4]> {
    for a in bits(set) {
        for b in bits(g.neighbors(a) & set) {
            let cs = g.neighbors(b) & set & !g.neighbors(a) & !bit(a);
            for c in bits(cs) {
                let ds = g.neighbors(c) & set & !g.neighbors(a) & !g.neighbors(b) & !bit(a) & !bit(b);
                if let Some(d) = bits(ds).find(|&d| d > a) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Every induced P4 of `g`, in both orientations.
pub fn induced_p4s(g: &Graph) -> Vec<[usize; 4]> {
    let all = g.vertex_mask();
    let mut out = Vec::new();
    for a in bits(all) {
        for b in bits(g.neighbors(a)) {
            for c in bits(g.neighbors(b) & !g.neighbors(a) & !bit(a)) {
                for d in bits(g.neighbors(c) & !g.neighbors(a) & !g.neighbors(b) & !bit(a) & !bit(b)) {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_is_its_own_witness() {
        let p4 = Graph::path(4).unwrap();
        assert!(!is_cograph(&p4));
        assert_eq!(p4_witness(&p4).unwrap().vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn cographs() {
        assert!(is_cograph(&Graph::cycle(4).unwrap()));
        assert!(is_cograph(&Graph::complete(6).unwrap()));
        assert!(is_cograph(&Graph::star(5).unwrap()));
        assert!(is_cograph(&Graph::empty(3).unwrap()));
        assert!(!is_cograph(&Graph::cycle(5).unwrap()));
    }

    #[test]
    fn witness_is_induced_p4() {
        let c6 = Graph::cycle(6).unwrap();
        let w = p4_witness(&c6).unwrap();
        assert!(PathWitness::new(&c6, w.vertices().to_vec()).is_ok());
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn p4_enumeration_counts_orientations() {
        assert_eq!(induced_p4s(&Graph::path(4).unwrap()).len(), 2);
        assert_eq!(induced_p4s(&Graph::cycle(5).unwrap()).len(), 10);
        assert!(induced_p4s(&Graph::cycle(4).unwrap()).is_empty());
    }
}
