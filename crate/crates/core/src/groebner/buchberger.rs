use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use num_rational::BigRational;

use super::{GroebnerError, MonomialIdeal};
use crate::ring::{Monomial, MonomialOrder, Polynomial, RingError, Term};

pub const DEFAULT_PAIR_CAP: usize = 200_000;
pub const DEFAULT_MAX_DEGREE: u32 = 40;
pub const PAIR_CAP_ENV: &str = "XCOND_PAIR_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerConfig {
    /// Maximum number of S-pairs taken from the queue.
    pub pair_cap: usize,
    /// Maximum total degree of an S-pair's lcm.
    pub max_degree: u32,
    /// Skip pairs whose leading monomials are coprime.
    pub coprime_criterion: bool,
    /// Skip pairs `(i, j)` when some `k` has `lm(k) | lcm(i, j)` and both `(i, k)`, `(j, k)` are done.
    pub chain_criterion: bool,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        Self {
            pair_cap: DEFAULT_PAIR_CAP,
            max_degree: DEFAULT_MAX_DEGREE,
            coprime_criterion: true,
            chain_criterion: true,
        }
    }
}

impl BuchbergerConfig {
    /// Defaults, with the pair cap taken from `XCOND_PAIR_CAP` when it is a positive integer.
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        if let Some(cap) = std::env::var(PAIR_CAP_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            if cap > 0 {
                cfg.pair_cap = cap;
            }
        }
        cfg
    }

    pub fn without_criteria(mut self) -> Self {
        self.coprime_criterion = false;
        self.chain_criterion = false;
        self
    }
}

/// A Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wrap elements that are already known to form a Gröbner basis.
    pub fn from_parts(elements: Vec<Polynomial>, order: MonomialOrder, reduced: bool) -> Self {
        Self { elements, order, reduced }
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        initial_ideal(self)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, GroebnerError> {
        normal_form(f, &self.elements, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, GroebnerError> {
        membership(f, self)
    }
}

/// Leading data of a list of divisors, used to find reducers quickly.
struct Divisors {
    lms: Vec<Monomial>,
    masks: Vec<u64>,
}

impl Divisors {
    fn new(gs: &[Polynomial]) -> Self {
        let lms: Vec<Monomial> = gs.iter().map(|g| g.leading_monomial().expect("nonzero divisor").clone()).collect();
        let masks = lms.iter().map(|m| m.mask()).collect();
        Self { lms, masks }
    }

    fn push(&mut self, g: &Polynomial) {
        let lm = g.leading_monomial().expect("nonzero divisor").clone();
        self.masks.push(lm.mask());
        self.lms.push(lm);
    }

    /// First divisor (in list order) whose leading monomial divides `m`.
    fn find(&self, m: &Monomial) -> Option<usize> {
        let mm = m.mask();
        (0..self.lms.len()).find(|&i| self.masks[i] & !mm == 0 && self.lms[i].divides(m))
    }
}

fn check_nvars(f: &Polynomial, order: &MonomialOrder) -> Result<(), GroebnerError> {
    match f.leading_monomial() {
        Some(m) if m.nvars() != order.nvars() => Err(RingError::ContextMismatch.into()),
        _ => Ok(()),
    }
}

/// Fully reduce `f` by `gs`: the leading term is reduced first and divisors
/// are tried in list order, so the result is deterministic.
pub fn normal_form(f: &Polynomial, gs: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial, GroebnerError> {
    check_nvars(f, order)?;
    let nonzero: Vec<Polynomial> = gs.iter().filter(|g| !g.is_zero()).cloned().collect();
    let div = Divisors::new(&nonzero);
    reduce_with(f, &nonzero, &div, order, None)
}

/// Division with remainder: `f = sum q_i g_i + r` with no term of `r`
/// divisible by a leading monomial of `gs`.
pub fn normal_form_with_quotients(
    f: &Polynomial,
    gs: &[Polynomial],
    order: &MonomialOrder,
) -> Result<(Vec<Polynomial>, Polynomial), GroebnerError> {
    check_nvars(f, order)?;
    let idx: Vec<usize> = (0..gs.len()).filter(|&i| !gs[i].is_zero()).collect();
    let nonzero: Vec<Polynomial> = idx.iter().map(|&i| gs[i].clone()).collect();
    let div = Divisors::new(&nonzero);
    let mut trace = Vec::new();
    let r = reduce_with(f, &nonzero, &div, order, Some(&mut trace))?;
    let mut quotients = vec![Vec::new(); gs.len()];
    for (k, c, m) in trace {
        quotients[idx[k]].push((c, m));
    }
    let quotients = quotients.into_iter().map(|t| Polynomial::from_terms(t, order)).collect();
    Ok((quotients, r))
}

type Trace = Vec<(usize, BigRational, Monomial)>;

fn reduce_with(
    f: &Polynomial,
    gs: &[Polynomial],
    div: &Divisors,
    order: &MonomialOrder,
    mut trace: Option<&mut Trace>,
) -> Result<Polynomial, GroebnerError> {
    let mut p = f.clone();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(lt) = p.leading_term().cloned() {
        match div.find(&lt.mono) {
            Some(k) => {
                let g = &gs[k];
                let c = &lt.coeff / g.leading_coeff().expect("nonzero");
                let m = lt.mono.quotient(g.leading_monomial().expect("nonzero"))?;
                p = p.sub_mul_term(&c, &m, g, order)?;
                if let Some(t) = trace.as_deref_mut() {
                    t.push((k, c, m));
                }
            }
            None => {
                rem.push(lt);
                let mut rest = p.into_terms();
                rest.remove(0);
                p = Polynomial::from_sorted_terms(rest);
            }
        }
    }
    Ok(Polynomial::from_sorted_terms(rem))
}

/// `(L / lt(f)) f - (L / lt(g)) g` with `L` the lcm of the leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial, GroebnerError> {
    let (Some(lf), Some(lg)) = (f.leading_term(), g.leading_term()) else {
        return Ok(Polynomial::zero());
    };
    let l = lf.mono.lcm(&lg.mono);
    let a = f.mul_term(&lf.coeff.recip(), &l.quotient(&lf.mono)?)?;
    Ok(a.sub_mul_term(&lg.coeff.recip(), &l.quotient(&lg.mono)?, g, order)?)
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    key: Vec<i64>,
    i: usize,
    j: usize,
}

/// Buchberger's algorithm with the normal selection strategy.
pub fn buchberger(
    gens: &[Polynomial],
    order: &MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_observed(gens, order, config, &mut |_| {})
}

/// As [`buchberger`], calling `observer` on every element as it enters the basis.
pub fn buchberger_observed(
    gens: &[Polynomial],
    order: &MonomialOrder,
    config: &BuchbergerConfig,
    observer: &mut dyn FnMut(&Polynomial),
) -> Result<GroebnerBasis, GroebnerError> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut div = Divisors { lms: Vec::new(), masks: Vec::new() };
    for g in gens {
        check_nvars(g, order)?;
        if g.is_zero() {
            continue;
        }
        let g = g.clone().resort(order).make_monic();
        observer(&g);
        div.push(&g);
        basis.push(g);
    }

    // `alive[k]` is false once some later leading monomial divides `lms[k]`;
    // no new pairs are formed with such elements. `treated` holds every pair
    // that was reduced or discarded by a criterion.
    let mut alive = vec![true; basis.len()];
    let mut queue: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();
    let mut treated: HashSet<(usize, usize)> = HashSet::new();
    let push_pair = |queue: &mut BinaryHeap<Reverse<Pair>>, lms: &[Monomial], i: usize, j: usize| {
        let key = order.key(&lms[i].lcm(&lms[j]));
        queue.push(Reverse(Pair { key, i, j }));
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut queue, &div.lms, i, j);
        }
    }

    let mut reduced = 0usize;
    while let Some(Reverse(Pair { i, j, .. })) = queue.pop() {
        treated.insert((i, j));
        let (li, lj) = (&div.lms[i], &div.lms[j]);
        if config.coprime_criterion && li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        if config.chain_criterion {
            let lmask = l.mask();
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && div.masks[k] & !lmask == 0
                    && div.lms[k].divides(&l)
                    && treated.contains(&(i.min(k), i.max(k)))
                    && treated.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
        }
        if l.degree() > config.max_degree {
            return Err(GroebnerError::DegreeCap { degree: l.degree(), cap: config.max_degree });
        }
        reduced += 1;
        if reduced > config.pair_cap {
            return Err(GroebnerError::PairCap { cap: config.pair_cap });
        }
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let r = reduce_with(&s, &basis, &div, order, None)?;
        if r.is_zero() {
            continue;
        }
        let r = r.make_monic();
        observer(&r);
        div.push(&r);
        basis.push(r);
        let n = basis.len() - 1;
        if config.chain_criterion {
            let lm = &div.lms[n];
            for k in 0..n {
                if alive[k] && lm.divides(&div.lms[k]) {
                    alive[k] = false;
                }
            }
        }
        alive.push(true);
        for k in 0..n {
            if alive[k] {
                push_pair(&mut queue, &div.lms, k, n);
            }
        }
    }
    Ok(GroebnerBasis { elements: basis, order: order.clone(), reduced: false })
}

/// The reduced Gröbner basis generated by a Gröbner basis: minimal leading
/// monomials, monic, fully tail-reduced, sorted by leading monomial descending.
pub fn reduce_basis(gb: &GroebnerBasis) -> Result<GroebnerBasis, GroebnerError> {
    let order = &gb.order;
    let mut els: Vec<Polynomial> = gb.elements.iter().filter(|g| !g.is_zero()).map(|g| g.make_monic()).collect();
    // Sort ascending so that among equal leading monomials the first one is kept.
    els.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut kept: Vec<Polynomial> = Vec::with_capacity(els.len());
    for g in els {
        let lm = g.leading_monomial().unwrap();
        if kept.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            continue;
        }
        kept.push(g);
    }
    let mut out = Vec::with_capacity(kept.len());
    for (idx, g) in kept.iter().enumerate() {
        let others: Vec<Polynomial> =
            kept.iter().enumerate().filter(|&(k, _)| k != idx).map(|(_, h)| h.clone()).collect();
        let mut terms = g.terms().to_vec();
        let lt = terms.remove(0);
        let tail = Polynomial::from_sorted_terms(terms);
        let tail = if others.is_empty() { tail } else { normal_form(&tail, &others, order)? };
        out.push(Polynomial::monomial(lt.mono).add(&tail, order));
    }
    out.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    Ok(GroebnerBasis { elements: out, order: order.clone(), reduced: true })
}

/// The reduced Gröbner basis of the ideal generated by `gens`.
pub fn reduced_groebner_basis(
    gens: &[Polynomial],
    order: &MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    reduce_basis(&buchberger(gens, order, config)?)
}

/// Generators of `(gens) ∩ K[other variables]`: the reduced Gröbner basis
/// elements free of `block`. `order` must eliminate `block`.
pub fn eliminate(
    gens: &[Polynomial],
    block: &[usize],
    order: &MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<Vec<Polynomial>, GroebnerError> {
    if !order.is_elimination_for(block) {
        return Err(GroebnerError::NotElimination);
    }
    let gb = reduced_groebner_basis(gens, order, config)?;
    Ok(gb
        .into_elements()
        .into_iter()
        .filter(|g| g.terms().iter().all(|t| block.iter().all(|&v| t.mono.exp(v) == 0)))
        .collect())
}

pub fn membership(f: &Polynomial, gb: &GroebnerBasis) -> Result<bool, GroebnerError> {
    if f.is_zero() {
        return Ok(true);
    }
    if gb.elements.is_empty() {
        return Ok(false);
    }
    Ok(normal_form(f, &gb.elements, &gb.order)?.is_zero())
}

pub fn initial_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(gb.order.nvars(), gb.leading_monomials())
}

/// Buchberger's criterion: every S-pair of `gs` reduces to zero modulo `gs`.
pub fn is_spair_closed(gs: &[Polynomial], order: &MonomialOrder) -> Result<bool, GroebnerError> {
    let gs: Vec<Polynomial> = gs.iter().filter(|g| !g.is_zero()).cloned().collect();
    let div = Divisors::new(&gs);
    for j in 0..gs.len() {
        for i in 0..j {
            if div.lms[i].is_coprime(&div.lms[j]) {
                continue;
            }
            let s = s_polynomial(&gs[i], &gs[j], order)?;
            if !reduce_with(&s, &gs, &div, order, None)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `sum q_i g_i`, used to re-evaluate a division trace.
pub fn combine(quotients: &[Polynomial], gs: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial, GroebnerError> {
    let mut acc = Polynomial::zero();
    for (q, g) in quotients.iter().zip(gs) {
        acc = acc.add(&q.mul(g, order)?, order);
    }
    Ok(acc)
}

/// Compare two reduced bases as sets of polynomials.
pub fn same_elements(a: &[Polynomial], b: &[Polynomial], order: &MonomialOrder) -> bool {
    let key = |p: &Polynomial| p.leading_monomial().map(|m| order.key(m));
    let mut a: Vec<&Polynomial> = a.iter().collect();
    let mut b: Vec<&Polynomial> = b.iter().collect();
    a.sort_by_key(|p| key(p));
    b.sort_by_key(|p| key(p));
    a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| x == y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_polynomial, OrderSpec, VarContext};

    fn setup(names: &[&str], spec: &str) -> (VarContext, MonomialOrder) {
        let ctx = VarContext::new(names).unwrap();
        let o = OrderSpec::parse(spec).unwrap().compile(&ctx).unwrap();
        (ctx, o)
    }

    fn polys(ctx: &VarContext, o: &MonomialOrder, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, ctx, o).unwrap()).collect()
    }

    #[test]
    fn normal_form_examples() {
        let (ctx, o) = setup(&["x1", "x2"], "lex[x1>x2]");
        let g = polys(&ctx, &o, &["x1^2 - x2"]);
        let f = parse_polynomial("x1^2*x2^2", &ctx, &o).unwrap();
        let r = normal_form(&f, &g, &o).unwrap();
        assert_eq!(r.render(&ctx), "x2^3");
        let (q, r2) = normal_form_with_quotients(&f, &g, &o).unwrap();
        assert_eq!(r2, r);
        assert_eq!(combine(&q, &g, &o).unwrap().add(&r, &o), f);
    }

    #[test]
    fn spoly_self_is_zero() {
        let (ctx, o) = setup(&["x1", "x2", "y1", "y2"], "lex[x1>x2>y1>y2]");
        let f = parse_polynomial("x1*y2 - x2*y1", &ctx, &o).unwrap();
        assert!(s_polynomial(&f, &f, &o).unwrap().is_zero());
        let a = parse_polynomial("x1*y1", &ctx, &o).unwrap();
        let b = parse_polynomial("x2*y1^2", &ctx, &o).unwrap();
        assert!(s_polynomial(&a, &b, &o).unwrap().is_zero());
    }

    #[test]
    fn binomial_edge_ideal_of_a_path() {
        let (ctx, o) = setup(&["x1", "x2", "x3", "y1", "y2", "y3"], "lex[x1>x2>x3>y1>y2>y3]");
        let gens = polys(&ctx, &o, &["x2*y3 - x3*y2", "x1*y2 - x2*y1"]);
        let gb = reduced_groebner_basis(&gens, &o, &BuchbergerConfig::default()).unwrap();
        let rendered: Vec<String> = gb.elements().iter().map(|g| g.render(&ctx)).collect();
        assert_eq!(rendered, vec!["x1*y2 - x2*y1", "x2*y3 - x3*y2"]);
    }

    #[test]
    fn elimination_of_t() {
        // y1 -> x2 t, y2 -> x1 x3 t
        let names: Vec<String> = ["t", "y1", "y2", "x1", "x2", "x3"].iter().map(|s| s.to_string()).collect();
        let ctx = VarContext::with_blocks(
            names,
            vec![
                ("t".into(), vec!["t".into()]),
                ("rest".into(), vec!["y1".into(), "y2".into(), "x1".into(), "x2".into(), "x3".into()]),
            ],
        )
        .unwrap();
        let o = OrderSpec::parse("block(t:lex[t]; rest:lex[y1>y2>x1>x2>x3])").unwrap().compile(&ctx).unwrap();
        let gens = polys(&ctx, &o, &["y1 - x2*t", "y2 - x1*x3*t"]);
        let out = eliminate(&gens, &[0], &o, &BuchbergerConfig::default()).unwrap();
        let rendered: Vec<String> = out.iter().map(|g| g.render(&ctx)).collect();
        assert_eq!(rendered, vec!["y1*x1*x3 - y2*x2"]);
        assert_eq!(eliminate(&gens, &[3], &o, &BuchbergerConfig::default()), Err(GroebnerError::NotElimination));
    }

    #[test]
    fn criteria_do_not_change_the_result() {
        let (ctx, o) = setup(&["x", "y", "z"], "revlex[x>y>z]");
        let gens = polys(&ctx, &o, &["x^2 - y*z", "x*y - z^2", "y^3 - x*z^2 + 1/2*z"]);
        let a = reduced_groebner_basis(&gens, &o, &BuchbergerConfig::default()).unwrap();
        let b = reduced_groebner_basis(&gens, &o, &BuchbergerConfig::default().without_criteria()).unwrap();
        assert_eq!(a, b);
        assert!(is_spair_closed(a.elements(), &o).unwrap());
    }

    #[test]
    fn caps_are_reported() {
        let (ctx, o) = setup(&["x", "y", "z"], "lex[x>y>z]");
        let gens = polys(&ctx, &o, &["x^2 - y*z", "x*y - z^2", "y^3 - x*z^2"]);
        let cfg = BuchbergerConfig { pair_cap: 1, ..Default::default() };
        assert!(matches!(buchberger(&gens, &o, &cfg), Err(GroebnerError::PairCap { cap: 1 })));
        let cfg = BuchbergerConfig { max_degree: 2, ..Default::default() };
        assert!(matches!(buchberger(&gens, &o, &cfg), Err(GroebnerError::DegreeCap { .. })));
    }

    #[test]
    fn membership_and_unit() {
        let (ctx, o) = setup(&["x1", "x2"], "lex[x1>x2]");
        let gb = reduced_groebner_basis(&polys(&ctx, &o, &["x1^2 - x2"]), &o, &BuchbergerConfig::default()).unwrap();
        assert!(gb.contains(&parse_polynomial("x1^3 - x1*x2", &ctx, &o).unwrap()).unwrap());
        assert!(!gb.contains(&parse_polynomial("1", &ctx, &o).unwrap()).unwrap());
    }
}
