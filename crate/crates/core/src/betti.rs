//! Brute-force homological oracle for monomial ideals.
//!
//! Multigraded Betti numbers come from the upper Koszul simplicial complexes
//! `K^b(I) = {F ⊆ supp(b) : x^(b - F) ∈ I}`, with `β_{i,b}(I) = dim H̃_{i-1}(K^b(I); Q)`.
//! Only multidegrees in the lcm lattice of the generators can contribute.

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};

use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::{Serialize, SerializeMap, SerializeStruct, Serializer};

use crate::groebner::MonomialIdeal;
use crate::ring::Monomial;

pub const DEFAULT_GENERATOR_CAP: usize = 16;

static EULER_CHECKS: AtomicUsize = AtomicUsize::new(0);

/// Number of Euler-characteristic checks performed by this process so far.
pub fn euler_checks_performed() -> usize {
    EULER_CHECKS.load(Ordering::Relaxed)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BettiError {
    #[error("{count} minimal generators exceed the oracle cap of {cap}")]
    GeneratorCap { count: usize, cap: usize },
    #[error("generators are not all of degree {0}")]
    MixedDegree(u32),
    #[error("Betti table disagrees with the Hilbert numerator")]
    EulerMismatch,
}

/// Graded Betti numbers `β_{i,j}` of an ideal (so `β_{0,j}` counts minimal generators of degree `j`).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    /// Table from `(i, j) -> β` entries; zero entries are dropped.
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, u32), u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in entries {
            if v > 0 {
                *map.entry(k).or_insert(0) += v;
            }
        }
        Self { entries: map }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u32), u64> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest `i` with a nonzero `β_{i,·}`; 0 for the zero ideal.
    pub fn projdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Largest `j - i` with `β_{i,j} ≠ 0`; 0 for the zero ideal.
    pub fn reg(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap_or(0)
    }

    /// Total Betti numbers `β_i`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0; if self.entries.is_empty() { 0 } else { self.projdim() + 1 }];
        for (&(i, _), &v) in &self.entries {
            out[i] += v;
        }
        out
    }

    /// Numerator `1 - Σ_i (-1)^i β_{i,j} t^j` of the Hilbert series of `S/I`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j as usize).max().unwrap_or(0);
        let mut out = vec![0i64; top + 1];
        out[0] = 1;
        for (&(i, j), &v) in &self.entries {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            out[j as usize] += sign * v as i64;
        }
        trim(out)
    }

    /// Rows `i = 0..=projdim`, columns `j - i = min..=reg`, in the usual layout.
    pub fn render(&self) -> String {
        if self.entries.is_empty() {
            return "zero ideal\n".into();
        }
        let lo = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap();
        let hi = self.reg();
        let pd = self.projdim();
        let mut s = String::from("      ");
        for i in 0..=pd {
            s.push_str(&format!("{i:>6}"));
        }
        s.push('\n');
        for r in lo..=hi {
            s.push_str(&format!("{r:>4}: "));
            for i in 0..=pd {
                let v = self.get(i, (r + i as i64) as u32);
                if v == 0 {
                    s.push_str("     .");
                } else {
                    s.push_str(&format!("{v:>6}"));
                }
            }
            s.push('\n');
        }
        s
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Entries<'a>(&'a BTreeMap<(usize, u32), u64>);
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut m = serializer.serialize_map(Some(self.0.len()))?;
                for (&(i, j), v) in self.0 {
                    m.serialize_entry(&format!("({i},{j})"), v)?;
                }
                m.end()
            }
        }
        let mut st = serializer.serialize_struct("BettiTable", 3)?;
        st.serialize_field("betti", &Entries(&self.entries))?;
        st.serialize_field("projdim", &self.projdim())?;
        st.serialize_field("reg", &self.reg())?;
        st.end()
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

fn check_cap(i: &MonomialIdeal, cap: usize) -> Result<(), BettiError> {
    if i.len() > cap {
        return Err(BettiError::GeneratorCap { count: i.len(), cap });
    }
    Ok(())
}

/// Graded Betti numbers of `I` with the default generator cap, checked
/// against the inclusion–exclusion Hilbert numerator.
pub fn betti_numbers(i: &MonomialIdeal) -> Result<BettiTable, BettiError> {
    betti_numbers_capped(i, DEFAULT_GENERATOR_CAP)
}

pub fn betti_numbers_capped(ideal: &MonomialIdeal, cap: usize) -> Result<BettiTable, BettiError> {
    check_cap(ideal, cap)?;
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    if ideal.is_unit() {
        entries.insert((0, 0), 1);
    }
    for b in lcm_lattice(ideal).into_iter().filter(|b| !b.is_one()) {
        for (i, v) in multigraded_betti(ideal, &b).into_iter().enumerate() {
            if v > 0 {
                *entries.entry((i, b.degree())).or_insert(0) += v;
            }
        }
    }
    let table = BettiTable { entries };
    EULER_CHECKS.fetch_add(1, Ordering::Relaxed);
    if table.hilbert_numerator() != hilbert_numerator_capped(ideal, cap)? {
        return Err(BettiError::EulerMismatch);
    }
    Ok(table)
}

/// All lcms of nonempty subsets of the minimal generators.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut seen: HashSet<Monomial> = ideal.gens().iter().cloned().collect();
    let mut frontier: Vec<Monomial> = ideal.gens().to_vec();
    while let Some(a) = frontier.pop() {
        for g in ideal.gens() {
            let l = a.lcm(g);
            if seen.insert(l.clone()) {
                frontier.push(l);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    out
}

/// `β_{i,b}(I)` for `i = 0, 1, ...` (trailing zeros trimmed).
pub fn multigraded_betti(ideal: &MonomialIdeal, b: &Monomial) -> Vec<u64> {
    if !ideal.contains(b) {
        return Vec::new();
    }
    let supp: Vec<usize> = b.support().collect();
    let s = supp.len();
    // Faces as bitmasks over `supp`; the complex is closed under taking subsets.
    let in_complex = |mask: u32| {
        let mut e = b.exps().to_vec();
        for (k, &v) in supp.iter().enumerate() {
            if mask >> k & 1 == 1 {
                e[v] -= 1;
            }
        }
        ideal.contains(&Monomial::from_exps(e))
    };
    let full: u32 = if s == 32 { u32::MAX } else { (1u32 << s) - 1 };
    if in_complex(full) {
        // A full simplex (or a cone) is acyclic.
        return Vec::new();
    }
    // faces_by_dim[d + 1] holds faces of dimension d (so index 0 is the empty face).
    let mut faces_by_dim: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0..=full {
        if in_complex(mask) {
            faces_by_dim[mask.count_ones() as usize].push(mask);
        }
    }
    // dim H̃_d = |faces_d| - rank ∂_d - rank ∂_{d+1}, with ∂ from faces of size k to size k-1.
    let ranks: Vec<usize> = (0..=s + 1)
        .map(|k| {
            if k == 0 || k > s {
                0
            } else {
                boundary_rank(&faces_by_dim[k], &faces_by_dim[k - 1])
            }
        })
        .collect();
    let mut out: Vec<u64> = (0..=s)
        .map(|k| (faces_by_dim[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Rank over Q of the simplicial boundary map from `upper` (faces with `k`
/// vertices) to `lower` (faces with `k - 1` vertices).
fn boundary_rank(upper: &[u32], lower: &[u32]) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: std::collections::HashMap<u32, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(upper.len());
    for &f in upper {
        let mut row = vec![BigRational::zero(); lower.len()];
        let mut sign = 1i64;
        for bit in 0..32 {
            if f >> bit & 1 == 1 {
                let g = f & !(1 << bit);
                if let Some(&c) = index.get(&g) {
                    row[c] = BigRational::from_integer(sign.into());
                }
                sign = -sign;
            }
        }
        rows.push(row);
    }
    rank(rows)
}

/// Rank of a dense rational matrix by Gaussian elimination.
pub(crate) fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for k in c..ncols {
            let v = &rows[r][k] * &inv;
            rows[r][k] = v;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for k in c..ncols {
                    let v = &rows[r][k] * &factor;
                    rows[i][k] -= v;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Numerator `Σ_{S ⊆ G(I)} (-1)^{|S|} t^{deg lcm(S)}` of the Hilbert series of `S/I`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Result<Vec<i64>, BettiError> {
    hilbert_numerator_capped(ideal, DEFAULT_GENERATOR_CAP)
}

fn hilbert_numerator_capped(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<i64>, BettiError> {
    check_cap(ideal, cap)?;
    let gens = ideal.gens();
    let mut out = vec![0i64; 1];
    fn walk(gens: &[Monomial], start: usize, cur: &Monomial, size: usize, out: &mut Vec<i64>) {
        let d = cur.degree() as usize;
        if out.len() <= d {
            out.resize(d + 1, 0);
        }
        out[d] += if size % 2 == 0 { 1 } else { -1 };
        for k in start..gens.len() {
            walk(gens, k + 1, &cur.lcm(&gens[k]), size + 1, out);
        }
    }
    walk(gens, 0, &Monomial::one(ideal.nvars()), 0, &mut out);
    Ok(trim(out))
}

/// Whether `I`, generated in degree `d`, has a `d`-linear resolution.
pub fn has_linear_resolution(ideal: &MonomialIdeal, d: u32) -> Result<bool, BettiError> {
    if ideal.gens().iter().any(|g| g.degree() != d) {
        return Err(BettiError::MixedDegree(d));
    }
    let t = betti_numbers(ideal)?;
    Ok(t.entries.keys().all(|&(i, j)| j as i64 == i as i64 + d as i64))
}

/// The ideal generated by the degree-`d` monomials of `I`.
pub fn degree_component(ideal: &MonomialIdeal, d: u32) -> MonomialIdeal {
    let n = ideal.nvars();
    let mut out = Vec::new();
    for g in ideal.gens().iter().filter(|g| g.degree() <= d) {
        for m in monomials_of_degree(n, d - g.degree()) {
            out.push(g.mul(&m).expect("small exponents"));
        }
    }
    MonomialIdeal::new(n, out)
}

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    fn rec(k: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == e.len() {
            e[k] = left;
            out.push(Monomial::from_exps(e.clone()));
            e[k] = 0;
            return;
        }
        for a in (0..=left).rev() {
            e[k] = a;
            rec(k + 1, left - a, e, out);
        }
        e[k] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut e, &mut out);
    out
}

/// Componentwise linearity: `I_<d>` has a linear resolution for every `d`
/// from the least generator degree up to `reg(I)`. Beyond `reg(I)` the
/// components are `m^(k-d) I_<d>` and linear automatically.
pub fn is_componentwise_linear(ideal: &MonomialIdeal) -> Result<bool, BettiError> {
    if ideal.is_zero() {
        return Ok(true);
    }
    let reg = betti_numbers(ideal)?.reg().max(ideal.max_degree() as i64) as u32;
    for d in ideal.min_degree()..=reg {
        let comp = degree_component(ideal, d);
        if !has_linear_resolution(&comp, d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
