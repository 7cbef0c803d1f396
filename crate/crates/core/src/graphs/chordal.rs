use super::covers::bits;
use super::Graph;

/// Maximum cardinality search: repeatedly visit the unvisited vertex with the
/// most visited neighbours, breaking ties by the smallest index.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut visited = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| visited >> v & 1 == 0)
            .max_by_key(|&v| ((g.neighbors(v) & visited).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        visited |= 1 << v;
        order.push(v);
    }
    order
}

/// Whether every `order[j]` is simplicial in the subgraph induced on `order[..=j]`,
/// i.e. its earlier neighbours form a clique.
pub fn is_peo(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut earlier = 0u64;
    for &v in order {
        if earlier >> v & 1 == 1 {
            return false;
        }
        let back = g.neighbors(v) & earlier;
        if bits(back).any(|u| back & !(1 << u) & !g.neighbors(u) != 0) {
            return false;
        }
        earlier |= 1 << v;
    }
    true
}

/// A perfect elimination ordering from maximum cardinality search, or `None`
/// when the graph is not chordal.
pub fn peo(g: &Graph) -> Option<Vec<usize>> {
    let order = maximum_cardinality_search(g);
    is_peo(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    peo(g).is_some()
}

/// Exhaustive search for an induced cycle of length at least 4.
pub fn has_chordless_cycle(g: &Graph) -> bool {
    assert!(g.n() <= 16, "exhaustive cycle search is limited to 16 vertices");
    (0..=g.all_mask()).any(|s| {
        s.count_ones() >= 4 && bits(s).all(|v| (g.neighbors(v) & s).count_ones() == 2) && g.components_in(s) == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{all_connected_graphs, path};

    #[test]
    fn small_cases() {
        assert!(peo(&path(6).unwrap()).is_some());
        let c4 = Graph::numbered(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(peo(&c4).is_none());
        assert!(has_chordless_cycle(&c4));
        let k4 = Graph::numbered(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(peo(&k4).is_some());
        assert!(!is_peo(&c4, &[0, 1, 2, 3]));
        assert!(!is_peo(&k4, &[0, 1, 2]));
    }

    #[test]
    fn peo_iff_no_chordless_cycle() {
        for n in 1..=5 {
            for g in all_connected_graphs(n) {
                assert_eq!(is_chordal(&g), !has_chordless_cycle(&g), "{:?}", g.edges());
            }
        }
    }
}
