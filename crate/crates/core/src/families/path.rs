//! The path `P_n`. Covers `u_1 > ... > u_s` in lex with `x_1 > ... > x_n`;
//! `T` is ordered by lex with `y_1 > ... > y_s > x_1 > ... > x_n`.
//!
//! Vertices are 1-based here: `x_i` is bit `i - 1`. The boundary symbols
//! `x_0` and `x_{n+1}` only occur in "divides `x_0 u_j`" and "divides
//! `x_0 u_j x_{n+1}`", where they always divide.

use super::{ClaimedBasis, FamilyError};
use crate::graphs::{minimal_vertex_covers, path, Graph};
use crate::rees::{default_order, default_y_names};
use crate::ring::{Monomial, VarContext};

struct Covers {
    n: usize,
    u: Vec<u64>,
}

impl Covers {
    fn bit(&self, i: usize) -> u64 {
        debug_assert!(1 <= i && i <= self.n);
        1 << (i - 1)
    }

    /// `x_i | u` for `1 <= i <= n`; out-of-range indices never divide.
    fn has(&self, u: u64, i: isize) -> bool {
        i >= 1 && i as usize <= self.n && u >> (i - 1) & 1 == 1
    }

    /// `x_i | x_0 u x_{n+1}`.
    fn has_padded(&self, u: u64, i: isize) -> bool {
        i == 0 || i as usize == self.n + 1 || self.has(u, i)
    }

    /// `u` restricted to `x_1..x_a`.
    fn low(&self, u: u64, a: isize) -> u64 {
        if a <= 0 {
            0
        } else {
            u & ((1u64 << a.min(self.n as isize)) - 1)
        }
    }

    /// `u` restricted to `x_b..x_n`.
    fn high(&self, u: u64, b: isize) -> u64 {
        if b <= 1 {
            u
        } else if b as usize > self.n {
            0
        } else {
            u & !((1u64 << (b - 1)) - 1)
        }
    }

    fn index(&self, mask: u64, tag: &'static str) -> Result<usize, FamilyError> {
        self.u.iter().position(|&c| c == mask).ok_or_else(|| FamilyError::MissingCover {
            tag,
            detail: format!("{{{}}}", crate::graphs::bits(mask).map(|v| format!("x{}", v + 1)).collect::<Vec<_>>().join(", ")),
        })
    }
}

fn covers_of(g: &Graph) -> Covers {
    Covers { n: g.n(), u: minimal_vertex_covers(g).covers }
}

fn check(ok: bool, tag: &'static str, detail: impl FnOnce() -> String) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::IndexInequality { tag, detail: detail() })
    }
}

/// The binomials of types (i)–(v) for `P_n`, with claimed initials `A_n ∪ B_n`.
pub fn path_claimed(n: usize) -> Result<ClaimedBasis, FamilyError> {
    if n < 3 {
        return Err(crate::graphs::GraphError::InvalidParameters("path claims need n >= 3".into()).into());
    }
    let g = path(n)?;
    let cv = covers_of(&g);
    let s = cv.u.len();
    let base = VarContext::new(g.names())?;
    let y = default_y_names(s);
    let spec = default_order(&base, &y);
    let mut claim = ClaimedBasis::setup(&g, &cv.u, y, spec)?;
    let ni = n as isize;
    let xi = |i: isize| cv.bit(i as usize);

    // (i)
    for j in 0..s {
        let uj = cv.u[j];
        for i in 1..=ni - 3 {
            if cv.has_padded(uj, i - 1) && cv.has(uj, i) && !cv.has(uj, i + 3) {
                let k = cv.index(uj & !xi(i) | xi(i + 1), "path-(i)")?;
                check(j < k, "path-(i)", || format!("j={} k={}", j + 1, k + 1))?;
                claim.push("path-(i)", claim.mono(xi(i + 1), &[j]), claim.mono(xi(i), &[k]))?;
            }
        }
        if cv.has(uj, ni - 2) && cv.has(uj, ni - 1) {
            let k = cv.index(uj & !xi(ni - 1) | xi(ni), "path-(i)")?;
            check(j < k, "path-(i)", || format!("j={} k={}", j + 1, k + 1))?;
            claim.push("path-(i)", claim.mono(xi(ni), &[j]), claim.mono(xi(ni - 1), &[k]))?;
        }
    }
    // (ii)
    for j in 0..s {
        let uj = cv.u[j];
        for i in 1..=ni - 2 {
            let first = cv.has_padded(uj, i - 1) && cv.has_padded(uj, i);
            let second = cv.has_padded(uj, i + 2) && cv.has_padded(uj, i + 3);
            if first && second {
                let k = cv.index(uj & !xi(i) & !xi(i + 2) | xi(i + 1), "path-(ii)")?;
                check(j < k, "path-(ii)", || format!("j={} k={}", j + 1, k + 1))?;
                claim.push("path-(ii)", claim.mono(xi(i + 1), &[j]), claim.mono(xi(i) | xi(i + 2), &[k]))?;
            }
        }
    }
    for j in 0..s {
        for k in j + 1..s {
            let (uj, uk) = (cv.u[j], cv.u[k]);
            for i in 2..=ni {
                // (iii)
                if cv.has(uj, i - 1) && cv.has(uj, i) && !cv.has(uk, i - 2) && !cv.has(uk, i) {
                    let (vj, wj) = (cv.low(uj, i - 3), cv.high(uj, i + 2));
                    let (vk, wk) = (cv.low(uk, i - 3), cv.high(uk, i + 1));
                    debug_assert_eq!(uj, vj | xi(i - 1) | xi(i) | wj);
                    debug_assert_eq!(uk, vk | xi(i - 1) | wk);
                    if vj != vk {
                        let a = cv.index(vj | xi(i - 1) | wk, "path-(iii)")?;
                        let b = cv.index(vk | xi(i - 1) | xi(i) | wj, "path-(iii)")?;
                        check(j < a && j < b, "path-(iii)", || format!("j={} a={} b={}", j + 1, a + 1, b + 1))?;
                        claim.push("path-(iii)", claim.mono(0, &[j, k]), claim.mono(0, &[a, b]))?;
                    }
                }
                if i + 1 > ni {
                    continue;
                }
                // (iv)
                if cv.has(uj, i) && cv.has(uj, i + 1) && cv.has(uk, i - 1) && cv.has(uk, i) {
                    let (vj, wj) = (cv.low(uj, i - 2), cv.high(uj, i + 3));
                    let (vk, wk) = (cv.low(uk, i - 3), cv.high(uk, i + 2));
                    debug_assert_eq!(uj, vj | xi(i) | xi(i + 1) | wj);
                    debug_assert_eq!(uk, vk | xi(i - 1) | xi(i) | wk);
                    let a = cv.index(vj | xi(i) | wk, "path-(iv)")?;
                    let b = cv.index(vk | xi(i - 1) | xi(i + 1) | wj, "path-(iv)")?;
                    check(j < a && j < b, "path-(iv)", || format!("j={} a={} b={}", j + 1, a + 1, b + 1))?;
                    claim.push("path-(iv)", claim.mono(0, &[j, k]), claim.mono(xi(i), &[a, b]))?;
                }
                // (v)
                if cv.has(uj, i - 1) && cv.has(uj, i) && cv.has(uk, i) && cv.has(uk, i + 1) {
                    let (vj, wj) = (cv.low(uj, i - 3), cv.high(uj, i + 2));
                    let (vk, wk) = (cv.low(uk, i - 2), cv.high(uk, i + 3));
                    debug_assert_eq!(uj, vj | xi(i - 1) | xi(i) | wj);
                    debug_assert_eq!(uk, vk | xi(i) | xi(i + 1) | wk);
                    let a = cv.index(vj | xi(i - 1) | xi(i + 1) | wk, "path-(v)")?;
                    let b = cv.index(vk | xi(i) | wj, "path-(v)")?;
                    check(j < a && j < b, "path-(v)", || format!("j={} a={} b={}", j + 1, a + 1, b + 1))?;
                    claim.push("path-(v)", claim.mono(0, &[j, k]), claim.mono(xi(i), &[a, b]))?;
                }
            }
        }
    }

    let mut initials = path_a_n_masks(&cv);
    initials.extend(path_b_n_pairs(&cv).into_iter().map(|(j, k)| (0, vec![j, k])));
    let initials: Vec<Monomial> = initials.iter().map(|(x, ys)| claim.mono(*x, ys)).collect();
    claim.set_initials(initials);
    Ok(claim)
}

/// `A_n` as (x-part, y indices).
fn path_a_n_masks(cv: &Covers) -> Vec<(u64, Vec<usize>)> {
    let mut out = Vec::new();
    for (j, &uj) in cv.u.iter().enumerate() {
        for i in 1..cv.n as isize {
            if cv.has_padded(uj, i - 1) && cv.has(uj, i) {
                out.push((cv.bit(i as usize + 1), vec![j]));
            }
        }
    }
    out
}

/// Pairs `(j, k)`, `j < k`, with `y_j y_k ∈ B_n`.
fn path_b_n_pairs(cv: &Covers) -> Vec<(usize, usize)> {
    let n = cv.n as isize;
    let mut out = Vec::new();
    for j in 0..cv.u.len() {
        for k in j + 1..cv.u.len() {
            let (uj, uk) = (cv.u[j], cv.u[k]);
            let first = (3..=n - 1).any(|i| {
                cv.has(uj, i - 1)
                    && cv.has(uj, i)
                    && !cv.has(uk, i - 2)
                    && !cv.has(uk, i)
                    && cv.low(uj, i - 3) != cv.low(uk, i - 3)
            });
            let second = (3..=n - 2).any(|i| cv.has(uj, i) && cv.has(uj, i + 1) && cv.has(uk, i - 1) && cv.has(uk, i));
            let third = (3..=n - 2).any(|i| cv.has(uj, i - 1) && cv.has(uj, i) && cv.has(uk, i) && cv.has(uk, i + 1));
            if first || second || third {
                out.push((j, k));
            }
        }
    }
    out
}

/// `A_n` rendered as `x_{i+1} y_j` strings, e.g. `"x2*y1"`.
pub fn path_a_n(n: usize) -> Result<Vec<String>, FamilyError> {
    let cv = covers_of(&path(n)?);
    Ok(path_a_n_masks(&cv).into_iter().map(|(x, ys)| format!("x{}*y{}", x.trailing_zeros() + 1, ys[0] + 1)).collect())
}

/// `B_n` as 1-based pairs `(j, k)`.
pub fn path_b_n(n: usize) -> Result<Vec<(usize, usize)>, FamilyError> {
    let cv = covers_of(&path(n)?);
    Ok(path_b_n_pairs(&cv).into_iter().map(|(j, k)| (j + 1, k + 1)).collect())
}
