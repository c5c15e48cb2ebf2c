use super::{bit, bits, Graph};

/// Size of a maximum independent set, by branch and bound on bitsets.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    search(g, g.vertex_mask(), 0, &mut best);
    best
}

fn search(g: &Graph, cand: u32, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // vertices with no neighbor among the candidates are always taken
    let mut cand = cand;
    let mut size = size;
    let free = bits(cand).filter(|&v| g.neighbors(v) & cand == 0).fold(0, |m, v| m | bit(v));
    if free != 0 {
        size += free.count_ones() as usize;
        cand &= !free;
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
    }
    // branch on a candidate of maximum degree within the candidates
    let v = bits(cand)
        .max_by_key(|&v| ((g.neighbors(v) & cand).count_ones(), std::cmp::Reverse(v)))
        .expect("cand nonempty");
    search(g, cand & !g.neighbors(v) & !bit(v), size + 1, best);
    search(g, cand & !bit(v), size, best);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        for n in 1..8 {
            assert_eq!(independence_number(&Graph::complete(n).unwrap()), 1);
            assert_eq!(independence_number(&Graph::empty(n).unwrap()), n);
        }
        assert_eq!(independence_number(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(independence_number(&Graph::star(4).unwrap()), 4);
        assert_eq!(independence_number(&Graph::path(7).unwrap()), 4);
    }
}
