//! Cameron–Walker graphs with complete bipartite part `K_{n,m}`. Covers
//! `u_1 > ... > u_s` in lex with the vertex order of the graph; `T` compares
//! y-parts first by degree reverse lex with `y_1 > ... > y_s`, then x-parts by lex.
//!
//! A construction whose target is not a minimal cover produces no binomial.

use super::{ClaimedBasis, FamilyError};
use crate::graphs::{bits, minimal_vertex_covers, Family, Graph};
use crate::rees::{default_y_names, X_BLOCK, Y_BLOCK};
use crate::ring::OrderSpec;

/// Vertex masks of a Cameron–Walker graph, indexed from 0.
struct Parts {
    a: Vec<u64>,
    b: Vec<Vec<u64>>,
    c: Vec<Vec<u64>>,
    zeta: Vec<u64>,
    xi: Vec<u64>,
    /// `prod_{q_j = 0} ζ_j`.
    lonely_zeta: u64,
}

impl Parts {
    fn of(g: &Graph, p: &[usize], q: &[usize]) -> Self {
        let v = |name: String| 1u64 << g.index_of(&name).expect("Cameron–Walker vertex name");
        let a = (0..p.len()).map(|i| (1..=p[i]).fold(0, |m, k| m | v(format!("a{}_{k}", i + 1)))).collect();
        let b = (0..q.len()).map(|j| (1..=q[j]).map(|k| v(format!("b{}_{k}", j + 1))).collect()).collect();
        let c = (0..q.len()).map(|j| (1..=q[j]).map(|k| v(format!("c{}_{k}", j + 1))).collect()).collect();
        let zeta: Vec<u64> = (1..=q.len()).map(|j| v(format!("zeta{j}"))).collect();
        let xi = (1..=p.len()).map(|i| v(format!("xi{i}"))).collect();
        let lonely_zeta = (0..q.len()).filter(|&j| q[j] == 0).fold(0, |m, j| m | zeta[j]);
        Self { a, b, c, zeta, xi, lonely_zeta }
    }

    /// `w_0` for adding `ξ_i` to `u`.
    fn w0(&self, u: u64, i: usize) -> u64 {
        let others = self.xi.iter().enumerate().all(|(i2, &x)| i2 == i || u & x != 0);
        if others {
            self.lonely_zeta
        } else {
            0
        }
    }

    fn all_xi(&self, u: u64) -> bool {
        self.xi.iter().all(|&x| u & x != 0)
    }

    /// `w_r(j)`: the `b_j^(k)` and `c_j^(k)` dividing `u`.
    fn w(&self, u: u64, j: usize) -> u64 {
        let bc = self.b[j].iter().chain(&self.c[j]).fold(0, |m, &x| m | x);
        u & bc
    }
}

/// `u / d * e` when `d | u` and the result stays squarefree.
fn swap(u: u64, d: u64, e: u64) -> Option<u64> {
    let rest = u & !d;
    (u & d == d && rest & e == 0).then_some(rest | e)
}

pub fn cw_claimed(g: &Graph) -> Result<ClaimedBasis, FamilyError> {
    let Family::CameronWalker { p, q } = g.family().clone() else {
        return Err(FamilyError::WrongFamily("cameron_walker"));
    };
    let parts = Parts::of(g, &p, &q);
    let u = minimal_vertex_covers(g).covers;
    let s = u.len();
    let y = default_y_names(s);
    let base_order: Vec<String> = g.var_order().iter().map(|&v| g.name(v).to_string()).collect();
    let spec = OrderSpec::Block(vec![
        (Y_BLOCK.to_string(), OrderSpec::RevLex(y.clone())),
        (X_BLOCK.to_string(), OrderSpec::Lex(base_order)),
    ]);
    let mut claim = ClaimedBasis::setup(g, &u, y, spec)?;
    let find = |m: Option<u64>| m.and_then(|m| claim.lookup(m));
    let bad = |tag: &'static str, what: String| FamilyError::IndexInequality { tag, detail: what };
    let mut pending = Vec::new();

    for r in 0..s {
        let ur = u[r];
        // (i)
        for (i, &x) in parts.xi.iter().enumerate() {
            if ur & x != 0 {
                continue;
            }
            let w0 = parts.w0(ur, i);
            if let Some(r2) = find(swap(ur, parts.a[i] | w0, x)) {
                if r >= r2 {
                    return Err(bad("cw-(i)", format!("r={} r'={}", r + 1, r2 + 1)));
                }
                pending.push(("cw-(i)", (x, vec![r]), (parts.a[i] | w0, vec![r2])));
            }
        }
        // (ii)
        for (j, &z) in parts.zeta.iter().enumerate() {
            if q[j] == 0 || ur & z != 0 {
                continue;
            }
            let bj = parts.b[j].iter().fold(0, |m, &b| m | b);
            if let Some(r2) = find(swap(ur, bj, z)) {
                if r >= r2 {
                    return Err(bad("cw-(ii)", format!("r={} r'={}", r + 1, r2 + 1)));
                }
                pending.push(("cw-(ii)", (z, vec![r]), (bj, vec![r2])));
            }
        }
        // (iii)
        for j in 0..q.len() {
            for k in 0..q[j] {
                let (b, c) = (parts.b[j][k], parts.c[j][k]);
                if ur & c != 0 {
                    continue;
                }
                if let Some(r2) = find(swap(ur, b, c)) {
                    if r >= r2 {
                        return Err(bad("cw-(iii)", format!("r={} r'={}", r + 1, r2 + 1)));
                    }
                    pending.push(("cw-(iii)", (c, vec![r]), (b, vec![r2])));
                }
            }
        }
    }

    for r0 in 0..s {
        for r1 in 0..r0 {
            let (u0, u1) = (u[r0], u[r1]);
            let order_ok = |a0: usize, a1: usize| a0 > r0 && r1 > a1;
            // (iv)
            for (i, &x) in parts.xi.iter().enumerate() {
                if u0 & x != 0 || u1 & x == 0 {
                    continue;
                }
                let w0 = parts.w0(u0, i);
                let t0 = find(swap(u0, parts.a[i] | w0, x));
                let t1 = find(swap(u1, x, parts.a[i]));
                if let (Some(a0), Some(a1)) = (t0, t1) {
                    if !order_ok(a0, a1) {
                        return Err(bad("cw-(iv)", format!("r0={} r1={} r'0={} r'1={}", r0 + 1, r1 + 1, a0 + 1, a1 + 1)));
                    }
                    pending.push(("cw-(iv)", (0, vec![r0, r1]), (w0, vec![a0, a1])));
                }
            }
            // (v)
            for (j, &z) in parts.zeta.iter().enumerate() {
                if u0 & z == 0 || u1 & z == 0 {
                    continue;
                }
                for k in 0..q[j] {
                    let (b, c) = (parts.b[j][k], parts.c[j][k]);
                    if u0 & b == 0 || u1 & c == 0 {
                        continue;
                    }
                    let t0 = find(swap(u0, b, c));
                    let t1 = find(swap(u1, c, b));
                    if let (Some(a0), Some(a1)) = (t0, t1) {
                        if !order_ok(a0, a1) {
                            return Err(bad("cw-(v)", format!("r0={} r1={} r'0={} r'1={}", r0 + 1, r1 + 1, a0 + 1, a1 + 1)));
                        }
                        pending.push(("cw-(v)", (0, vec![r0, r1]), (0, vec![a0, a1])));
                    }
                }
            }
            // (vi)
            if !(parts.all_xi(u0) && parts.all_xi(u1)) {
                continue;
            }
            for (j, &z) in parts.zeta.iter().enumerate() {
                if u0 & z != 0 || u1 & z == 0 {
                    continue;
                }
                let (w0, w1) = (parts.w(u0, j), parts.w(u1, j));
                let t0 = find(swap(u0, w0, z | w1));
                let t1 = find(swap(u1, z | w1, w0));
                if let (Some(a0), Some(a1)) = (t0, t1) {
                    if !order_ok(a0, a1) {
                        return Err(bad("cw-(vi)", format!("r0={} r1={} r'0={} r'1={}", r0 + 1, r1 + 1, a0 + 1, a1 + 1)));
                    }
                    pending.push(("cw-(vi)", (0, vec![r0, r1]), (0, vec![a0, a1])));
                }
            }
        }
    }

    let mut initials = Vec::new();
    for (tag, (lx, ly), (ox, oy)) in pending {
        let lead = claim.mono(lx, &ly);
        initials.push(lead.clone());
        claim.push(tag, lead, claim.mono(ox, &oy))?;
    }
    claim.set_initials(initials);
    Ok(claim)
}

/// Position (0-based) of the cover with the given vertex names, if it is a minimal cover.
pub fn cover_index(g: &Graph, claim: &ClaimedBasis, names: &[&str]) -> Option<usize> {
    let mut mask = 0u64;
    for v in names {
        mask |= 1 << g.index_of(v)?;
    }
    debug_assert!(bits(mask).count() == names.len());
    claim.lookup(mask)
}
