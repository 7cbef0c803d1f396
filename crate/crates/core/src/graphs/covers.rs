use std::cmp::Ordering;

use super::Graph;
use crate::groebner::MonomialIdeal;
use crate::ring::Monomial;

/// Minimal vertex covers as bitmasks, sorted descending in the graph's
/// variable order (lex on squarefree monomials).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSet {
    pub covers: Vec<u64>,
}

impl CoverSet {
    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn vertices(&self, k: usize) -> Vec<usize> {
        bits(self.covers[k]).collect()
    }
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Maximal independent sets, as maximal cliques of the complement found by
/// Bron–Kerbosch with pivoting. Deterministic: vertices are visited in index order.
pub fn maximal_independent_sets(g: &Graph) -> Vec<u64> {
    let all = g.all_mask();
    let comp: Vec<u64> = (0..g.n()).map(|v| all & !g.neighbors(v) & !(1 << v)).collect();
    let mut out = Vec::new();
    bron_kerbosch(&comp, 0, all, 0, &mut out);
    out
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x).max_by_key(|&u| (adj[u] & p).count_ones()).unwrap();
    for v in bits(p & !adj[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// Compare two vertex sets as squarefree monomials under lex with `rank`
/// listing vertices from largest to smallest.
pub(crate) fn lex_cmp(a: u64, b: u64, rank: &[usize]) -> Ordering {
    for &v in rank {
        let (x, y) = (a >> v & 1, b >> v & 1);
        if x != y {
            return x.cmp(&y);
        }
    }
    Ordering::Equal
}

pub fn minimal_vertex_covers(g: &Graph) -> CoverSet {
    let all = g.all_mask();
    let mut covers: Vec<u64> = maximal_independent_sets(g).into_iter().map(|s| all & !s).collect();
    covers.sort_by(|&a, &b| lex_cmp(b, a, g.var_order()));
    debug_assert!(covers.iter().all(|&c| is_minimal_cover(g, c)));
    CoverSet { covers }
}

pub(crate) fn is_cover(g: &Graph, c: u64) -> bool {
    g.edges().iter().all(|&(a, b)| c >> a & 1 == 1 || c >> b & 1 == 1)
}

pub(crate) fn is_minimal_cover(g: &Graph, c: u64) -> bool {
    is_cover(g, c) && bits(c).all(|v| !is_cover(g, c & !(1 << v)))
}

/// The squarefree monomials `x_C` in the graph's vertex variables, in cover order.
pub fn cover_monomials(g: &Graph, covers: &CoverSet) -> Vec<Monomial> {
    covers.covers.iter().map(|&c| Monomial::squarefree(g.n(), bits(c))).collect()
}

pub fn cover_ideal(g: &Graph) -> MonomialIdeal {
    MonomialIdeal::new(g.n(), cover_monomials(g, &minimal_vertex_covers(g)))
}
