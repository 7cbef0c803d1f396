//! Rees algebra presentations of monomial ideals and the linear-quotients
//! pipeline for their powers.
//!
//! For `I = (u_1, ..., u_s) ⊂ S = K[x]`, the Rees algebra is presented by
//! `T = K[x, y_1, ..., y_s] -> S[t]`, `y_j -> u_j t`, with kernel `J`.
//! `J` is computed by eliminating `t` from `(y_j - u_j t)`.

use serde::Serialize;

use crate::betti::{self, binomial, BettiError, BettiTable};
use crate::groebner::{
    eliminate, membership, reduced_groebner_basis, BuchbergerConfig, GroebnerBasis, GroebnerError, MonomialIdeal,
};
use crate::ring::{Monomial, MonomialOrder, OrderSpec, Polynomial, RingError, VarContext};

pub const X_BLOCK: &str = "x";
pub const Y_BLOCK: &str = "y";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReesError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Betti(#[from] BettiError),
    #[error("generators are not minimal: u{0} divides u{1}")]
    NotMinimal(usize, usize),
    #[error("generator {0} does not live in the base ring")]
    BadGenerator(usize),
    #[error("closed-form Betti numbers need nondecreasing degrees or a minimal generating sequence")]
    Hypothesis,
}

impl ReesError {
    /// True for the resource-cap errors.
    pub fn is_cap(&self) -> bool {
        matches!(self, ReesError::Groebner(e) if e.is_cap())
    }
}

/// The ring `T`, the generators `u_j`, the order on `T` and the reduced
/// Gröbner basis of `J = ker(y_j -> u_j t)`.
///
/// Variable layout of `T`: the base variables `x` first, then `y_1..y_s`.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    base: VarContext,
    gens: Vec<Monomial>,
    ctx: VarContext,
    spec: OrderSpec,
    order: MonomialOrder,
    gb: GroebnerBasis,
}

/// The ring `T` for `base` and generators `gens`, with blocks `x` and `y`
/// and bidegrees `deg x_i = (1, 0)`, `deg y_j = (deg u_j, 1)`.
pub fn rees_context(base: &VarContext, gens: &[Monomial], y_names: &[String]) -> Result<VarContext, RingError> {
    if y_names.len() != gens.len() {
        return Err(RingError::InvalidContext("one y variable per generator is required".into()));
    }
    let mut names: Vec<String> = base.names().to_vec();
    names.extend(y_names.iter().cloned());
    let blocks = vec![(X_BLOCK.to_string(), base.names().to_vec()), (Y_BLOCK.to_string(), y_names.to_vec())];
    let mut bidegrees = vec![(1, 0); base.len()];
    bidegrees.extend(gens.iter().map(|u| (u.degree(), 1)));
    VarContext::with_blocks(names, blocks)?.with_bidegrees(bidegrees)
}

/// `y1, ..., ys`.
pub fn default_y_names(s: usize) -> Vec<String> {
    (1..=s).map(|j| format!("y{j}")).collect()
}

/// `default_y_names(s)` unless one clashes with `base`; then the first of
/// `t1..ts`, `w1..ws`, `Y1..Ys`, `y_1..y_s` free of clashes.
pub fn fresh_y_names(base: &VarContext, s: usize) -> Vec<String> {
    ["y", "t", "w", "Y", "y_"]
        .iter()
        .map(|p| (1..=s).map(|j| format!("{p}{j}")).collect::<Vec<_>>())
        .find(|names| names.iter().all(|n| base.index_of(n).is_none()))
        .unwrap_or_else(|| (1..=s).map(|j| format!("y__{j}")).collect())
}

/// The block order comparing y-parts first (lex `y_1 > ... > y_s`), then x-parts (lex in base order).
pub fn default_order(base: &VarContext, y_names: &[String]) -> OrderSpec {
    OrderSpec::Block(vec![
        (Y_BLOCK.to_string(), OrderSpec::lex(y_names)),
        (X_BLOCK.to_string(), OrderSpec::lex(base.names())),
    ])
}

/// Weight-first order on the y-part: `w = (deg u_1, ..., deg u_s)`, ties broken
/// by lex with `y_1 < ... < y_s`; x-parts by lex in base order.
/// The generators must be listed with nondecreasing degrees.
pub fn weighted_order(base: &VarContext, gens: &[Monomial], y_names: &[String]) -> OrderSpec {
    let weights = gens.iter().map(|u| u.degree() as i64).collect();
    let tie: Vec<String> = y_names.iter().rev().cloned().collect();
    OrderSpec::Block(vec![
        (Y_BLOCK.to_string(), OrderSpec::Weighted { weights, tie: Box::new(OrderSpec::Lex(tie)) }),
        (X_BLOCK.to_string(), OrderSpec::lex(base.names())),
    ])
}

impl ReesPresentation {
    /// Compute `J` under `spec`, an order on the context returned by [`rees_context`].
    pub fn new(
        base: &VarContext,
        gens: Vec<Monomial>,
        y_names: Vec<String>,
        spec: OrderSpec,
        config: &BuchbergerConfig,
    ) -> Result<Self, ReesError> {
        for (j, u) in gens.iter().enumerate() {
            if u.nvars() != base.len() {
                return Err(ReesError::BadGenerator(j));
            }
        }
        for (a, ua) in gens.iter().enumerate() {
            for (b, ub) in gens.iter().enumerate() {
                if a != b && ua.divides(ub) {
                    return Err(ReesError::NotMinimal(a + 1, b + 1));
                }
            }
        }
        let ctx = rees_context(base, &gens, &y_names)?;
        let order = spec.compile(&ctx)?;
        let gb = kernel_basis(base.len(), &gens, &order, config)?;
        Ok(Self { base: base.clone(), gens, ctx, spec, order, gb })
    }

    /// Presentation under [`default_order`], with y-names from [`fresh_y_names`].
    pub fn with_default_order(base: &VarContext, gens: Vec<Monomial>, config: &BuchbergerConfig) -> Result<Self, ReesError> {
        let y = fresh_y_names(base, gens.len());
        let spec = default_order(base, &y);
        Self::new(base, gens, y, spec, config)
    }

    /// Presentation under [`weighted_order`], after a stable sort of the generators by degree.
    pub fn with_weighted_order(
        base: &VarContext,
        mut gens: Vec<Monomial>,
        config: &BuchbergerConfig,
    ) -> Result<Self, ReesError> {
        gens.sort_by_key(|u| u.degree());
        let y = fresh_y_names(base, gens.len());
        let spec = weighted_order(base, &gens, &y);
        Self::new(base, gens, y, spec, config)
    }

    pub fn base(&self) -> &VarContext {
        &self.base
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn spec(&self) -> &OrderSpec {
        &self.spec
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn nx(&self) -> usize {
        self.base.len()
    }

    pub fn ny(&self) -> usize {
        self.gens.len()
    }

    pub fn x_vars(&self) -> Vec<usize> {
        (0..self.nx()).collect()
    }

    pub fn y_var(&self, j: usize) -> usize {
        self.nx() + j
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        self.gb.initial_ideal()
    }

    /// Whether the y-part of the order is weight-first.
    pub fn is_weighted(&self) -> bool {
        matches!(self.spec.block_part(Y_BLOCK), Some(OrderSpec::Weighted { .. }))
    }

    /// The monomial `y^a` of `T`.
    pub fn y_monomial(&self, a: &[u32]) -> Monomial {
        let mut e = vec![0; self.ctx.len()];
        e[self.nx()..].copy_from_slice(a);
        Monomial::from_exps(e)
    }

    /// The y-exponent of a monomial of `T`.
    pub fn y_part(&self, m: &Monomial) -> Vec<u32> {
        m.exps()[self.nx()..].to_vec()
    }

    pub fn x_part(&self, m: &Monomial) -> Monomial {
        Monomial::from_exps(m.exps()[..self.nx()].to_vec())
    }

    /// Embed a base monomial into `T`.
    pub fn embed_x(&self, m: &Monomial) -> Monomial {
        let mut e = m.exps().to_vec();
        e.resize(self.ctx.len(), 0);
        Monomial::from_exps(e)
    }

    /// `π(y^a) / t^k = ∏ u_j^{a_j}`.
    pub fn image_of_y(&self, a: &[u32]) -> Result<Monomial, RingError> {
        let mut h = Monomial::one(self.nx());
        for (j, &e) in a.iter().enumerate() {
            if e > 0 {
                h = h.mul(&self.gens[j].pow(e)?)?;
            }
        }
        Ok(h)
    }

    /// `π(f)` in `K[x, t]` (t is the last variable).
    pub fn pi(&self, f: &Polynomial) -> Result<Polynomial, RingError> {
        let n = self.nx();
        let mut images: Vec<Monomial> = (0..n).map(|i| Monomial::var(n + 1, i)).collect();
        for u in &self.gens {
            let mut e = u.exps().to_vec();
            e.push(1);
            images.push(Monomial::from_exps(e));
        }
        let target = MonomialOrder::lex_by_index(&(0..=n).collect::<Vec<_>>());
        f.substitute_monomials(&images, &target)
    }

    /// Every element of the Gröbner basis maps to zero under `π`.
    pub fn pi_sound(&self) -> Result<bool, RingError> {
        for g in self.gb.elements() {
            if !self.pi(g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimal generators of `ini(J)` with x-degree above one.
    pub fn x_condition(&self) -> XCondition {
        let xs = self.x_vars();
        let violations: Vec<Monomial> =
            self.initial_ideal().gens().iter().filter(|m| m.degree_in(&xs) > 1).cloned().collect();
        XCondition { holds: violations.is_empty(), violations }
    }

    /// Every minimal generator of `ini(J)` has total degree 2.
    pub fn is_quadratic(&self) -> bool {
        self.initial_ideal().gens().iter().all(|m| m.degree() == 2)
    }

    /// Minimal generators of `ini(J)` involving only y variables.
    pub fn pure_y_initials(&self) -> Vec<Monomial> {
        let xs = self.x_vars();
        self.initial_ideal().gens().iter().filter(|m| m.degree_in(&xs) == 0).cloned().collect()
    }

    /// Degree-`k` y-monomials outside `ini(J)`, sorted ascending, with their images.
    pub fn standard_monomials(&self, k: u32) -> Result<StandardBasisK, RingError> {
        let pure = self.pure_y_initials();
        let mut entries = Vec::new();
        for a in betti::monomials_of_degree(self.ny(), k) {
            let w = self.y_monomial(a.exps());
            if pure.iter().any(|g| g.divides(&w)) {
                continue;
            }
            let h = self.image_of_y(a.exps())?;
            entries.push(StandardEntry { w, h });
        }
        entries.sort_by(|p, q| self.order.cmp(&p.w, &q.w));
        Ok(StandardBasisK { k, entries })
    }

    /// For every degree-`k` y-monomial that is not standard, its normal form
    /// modulo `J`: a combination of `x^a y^b` with `y^b` standard.
    pub fn standard_rewrites(&self, k: u32) -> Result<Vec<StandardRewrite>, ReesError> {
        let pure = self.pure_y_initials();
        let mut out = Vec::new();
        for a in betti::monomials_of_degree(self.ny(), k) {
            let w = self.y_monomial(a.exps());
            if !pure.iter().any(|g| g.divides(&w)) {
                continue;
            }
            let f = Polynomial::monomial(w.clone());
            let nf = self.gb.normal_form(&f)?;
            out.push(StandardRewrite { w, rhs: nf });
        }
        Ok(out)
    }

    /// Check a rewrite: `w - rhs ∈ J`, every `y`-part of `rhs` is standard,
    /// of degree `k` and smaller than `w`.
    pub fn verify_rewrite(&self, r: &StandardRewrite, k: u32) -> Result<bool, ReesError> {
        let pure = self.pure_y_initials();
        let diff = Polynomial::monomial(r.w.clone()).sub(&r.rhs, &self.order);
        if !membership(&diff, &self.gb)? || !self.pi(&diff)?.is_zero() {
            return Ok(false);
        }
        for t in r.rhs.terms() {
            let y = self.y_monomial(&self.y_part(&t.mono));
            let ok = y.degree() == k
                && !pure.iter().any(|g| g.divides(&y))
                && self.order.cmp(&y, &r.w) == std::cmp::Ordering::Less;
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Colon ideals `I_j = (h_1, ..., h_{j-1}) : h_j` along the standard basis.
    pub fn linear_quotients(&self, k: u32) -> Result<LinearQuotients, RingError> {
        let basis = self.standard_monomials(k)?;
        Ok(linear_quotients_of(self.nx(), &basis.images()))
    }

    /// For every step, the variables of `I_j` are exactly the `x_i` with `x_i h_j* ∈ ini(J)`.
    pub fn colon_cross_check(&self, k: u32) -> Result<bool, RingError> {
        let basis = self.standard_monomials(k)?;
        let lq = linear_quotients_of(self.nx(), &basis.images());
        let ini = self.initial_ideal();
        for (entry, step) in basis.entries.iter().zip(&lq.steps) {
            if step.colon.is_unit() {
                continue;
            }
            let mut predicted = Vec::new();
            for i in 0..self.nx() {
                let xw = entry.w.mul(&Monomial::var(self.ctx.len(), i))?;
                if ini.contains(&xw) {
                    predicted.push(Monomial::var(self.nx(), i));
                }
            }
            if MonomialIdeal::new(self.nx(), predicted) != step.colon {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// No image `h_i` divides another.
    pub fn minimality_check(&self, k: u32) -> Result<bool, RingError> {
        Ok(is_minimal_sequence(&self.standard_monomials(k)?.images()))
    }

    /// Everything known about the `k`-th power: flags, closed-form Betti
    /// table, and the oracle verdicts when the power is small enough.
    pub fn componentwise_certificate(&self, k: u32) -> Result<Certificate, ReesError> {
        let basis = self.standard_monomials(k)?;
        let images = basis.images();
        let lq = linear_quotients_of(self.nx(), &images);
        let minimal = is_minimal_sequence(&images);
        let nondecreasing = images.windows(2).all(|w| w[0].degree() <= w[1].degree());
        let quadratic = self.is_quadratic();
        let weighted = self.is_weighted();
        let colon_ok = lq.ok && self.colon_cross_check(k)?;
        let certified = if quadratic && minimal && lq.ok {
            Some(Route::Monomialcase)
        } else if weighted && lq.ok && nondecreasing {
            Some(Route::Weighted)
        } else {
            None
        };
        let betti = if lq.ok && (minimal || nondecreasing) { Some(betti_from_quotients(&lq.steps, minimal)?) } else { None };
        let power = MonomialIdeal::new(self.nx(), images.iter().cloned());
        let (oracle_match, oracle_componentwise) = if power.len() <= betti::DEFAULT_GENERATOR_CAP {
            let table = betti::betti_numbers(&power)?;
            let cl = match betti::is_componentwise_linear(&power) {
                Ok(v) => Some(v),
                Err(BettiError::GeneratorCap { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            (betti.as_ref().map(|b| *b == table), cl)
        } else {
            (None, None)
        };
        Ok(Certificate {
            k,
            generators: images.len(),
            x_condition: self.x_condition().holds,
            quadratic,
            minimal,
            linear_quotients: lq.ok,
            nondecreasing_degrees: nondecreasing,
            weighted_order: weighted,
            colon_cross_check: colon_ok,
            betti,
            oracle_match,
            oracle_componentwise,
            certified,
        })
    }
}

/// Reduced Gröbner basis of `ker(y_j -> u_j t)` under `order`, by eliminating `t`.
fn kernel_basis(
    nx: usize,
    gens: &[Monomial],
    order: &MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<GroebnerBasis, ReesError> {
    let nt = nx + gens.len();
    let t = nt;
    let identity: Vec<usize> = (0..nt).collect();
    let elim = order.with_leading_lex(nt + 1, &[t], &identity);
    let mut polys = Vec::with_capacity(gens.len());
    for (j, u) in gens.iter().enumerate() {
        let y = Monomial::var(nt + 1, nx + j);
        let mut e = u.exps().to_vec();
        e.resize(nt + 1, 0);
        e[t] = 1;
        polys.push(Polynomial::binomial(y, Monomial::from_exps(e), &elim));
    }
    let kept = eliminate(&polys, &[t], &elim, config)?;
    let mut map = identity;
    map.push(0);
    let contracted: Vec<Polynomial> = kept.iter().map(|g| g.embed(nt, &map, order)).collect();
    Ok(reduced_groebner_basis(&contracted, order, config)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XCondition {
    pub holds: bool,
    #[serde(skip)]
    pub violations: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardEntry {
    /// Standard y-monomial `h*` of `T`.
    pub w: Monomial,
    /// Its image `h = π(w) / t^k` in the base ring.
    pub h: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasisK {
    pub k: u32,
    pub entries: Vec<StandardEntry>,
}

impl StandardBasisK {
    pub fn images(&self) -> Vec<Monomial> {
        self.entries.iter().map(|e| e.h.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardRewrite {
    pub w: Monomial,
    pub rhs: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientStep {
    /// 1-based position in the sequence.
    pub j: usize,
    pub colon: MonomialIdeal,
    pub mu: usize,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotients {
    pub steps: Vec<QuotientStep>,
    pub ok: bool,
}

/// Colon ideals of a sequence of monomials; `ok` when each one after the first is generated by variables.
pub fn linear_quotients_of(nvars: usize, seq: &[Monomial]) -> LinearQuotients {
    let mut steps = Vec::with_capacity(seq.len());
    let mut ok = true;
    for (idx, h) in seq.iter().enumerate() {
        let prev = MonomialIdeal::new(nvars, seq[..idx].iter().cloned());
        let colon = prev.colon(h);
        if colon.is_unit() || !colon.is_variable_generated() {
            ok = false;
        }
        steps.push(QuotientStep { j: idx + 1, mu: colon.len(), degree: h.degree(), colon });
    }
    LinearQuotients { steps, ok }
}

pub fn is_minimal_sequence(seq: &[Monomial]) -> bool {
    seq.iter().enumerate().all(|(a, ua)| seq.iter().enumerate().all(|(b, ub)| a == b || !ua.divides(ub)))
}

/// `β_{i,i+j} = Σ_{deg h_k = j} C(μ_k, i)`, `projdim = max μ_k`, `reg = deg` of the last
/// generator (the largest degree when degrees are nondecreasing).
pub fn betti_from_quotients(steps: &[QuotientStep], minimal: bool) -> Result<BettiTable, ReesError> {
    let nondecreasing = steps.windows(2).all(|w| w[0].degree <= w[1].degree);
    if !(nondecreasing || minimal) {
        return Err(ReesError::Hypothesis);
    }
    let mut entries = Vec::new();
    for s in steps {
        for i in 0..=s.mu {
            entries.push(((i, i as u32 + s.degree), binomial(s.mu as u64, i as u64)));
        }
    }
    Ok(BettiTable::from_entries(entries))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Quadratic initial ideal, minimal generators and linear quotients.
    Monomialcase,
    /// Weight-first order, linear quotients and nondecreasing degrees.
    Weighted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub k: u32,
    pub generators: usize,
    pub x_condition: bool,
    pub quadratic: bool,
    pub minimal: bool,
    pub linear_quotients: bool,
    pub nondecreasing_degrees: bool,
    pub weighted_order: bool,
    pub colon_cross_check: bool,
    pub betti: Option<BettiTable>,
    /// Closed-form table equals the oracle table; absent beyond oracle scale.
    pub oracle_match: Option<bool>,
    pub oracle_componentwise: Option<bool>,
    pub certified: Option<Route>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::betti_numbers;

    fn base(n: usize) -> VarContext {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        VarContext::new(&names).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn y_names_avoid_base() {
        assert_eq!(fresh_y_names(&base(2), 2), ["y1", "y2"]);
        let ctx = VarContext::new(&["x1", "y1", "t2"]).unwrap();
        assert_eq!(fresh_y_names(&ctx, 2), ["w1", "w2"]);
    }

    #[test]
    fn path_three() {
        // covers of P_3 in descending lex: x1*x3 > x2
        let ctx = base(3);
        let p = ReesPresentation::with_default_order(&ctx, vec![m(&[1, 0, 1]), m(&[0, 1, 0])], &Default::default())
            .unwrap();
        let rendered: Vec<String> = p.gb().elements().iter().map(|g| g.render(p.ctx())).collect();
        assert_eq!(rendered, vec!["x2*y1 - x1*x3*y2"]);
        assert!(p.pi_sound().unwrap());
        assert!(p.x_condition().holds);
        let sb = p.standard_monomials(2).unwrap();
        assert_eq!(sb.len(), 3);
        let lq = p.linear_quotients(1).unwrap();
        assert!(lq.ok);
        assert_eq!(lq.steps[0].mu, 0);
        assert_eq!(lq.steps[1].colon, MonomialIdeal::new(3, [m(&[0, 1, 0])]));
        assert!(p.colon_cross_check(1).unwrap());
    }

    #[test]
    fn single_generator_has_zero_kernel() {
        let p = ReesPresentation::with_default_order(&base(1), vec![m(&[1])], &Default::default()).unwrap();
        assert!(p.gb().is_empty());
        assert!(p.x_condition().holds);
    }

    #[test]
    fn non_minimal_input_rejected() {
        let r = ReesPresentation::with_default_order(&base(2), vec![m(&[1, 0]), m(&[1, 1])], &Default::default());
        assert_eq!(r.unwrap_err(), ReesError::NotMinimal(1, 2));
    }

    #[test]
    fn introduction_sequence() {
        let seq = [m(&[2, 0]), m(&[1, 2]), m(&[0, 2])];
        let lq = linear_quotients_of(2, &seq);
        assert!(lq.ok);
        assert_eq!(lq.steps[1].colon, MonomialIdeal::new(2, [m(&[1, 0])]));
        assert_eq!(lq.steps[2].colon, MonomialIdeal::new(2, [m(&[1, 0])]));
    }

    #[test]
    fn closed_form_matches_oracle_on_path_three() {
        let steps = linear_quotients_of(3, &[m(&[0, 1, 0]), m(&[1, 0, 1])]).steps;
        let t = betti_from_quotients(&steps, true).unwrap();
        assert_eq!(t, BettiTable::from_entries([((0, 1), 1), ((0, 2), 1), ((1, 3), 1)]));
        assert_eq!(t.projdim(), 1);
        assert_eq!(t.reg(), 2);
        let i = MonomialIdeal::new(3, [m(&[0, 1, 0]), m(&[1, 0, 1])]);
        assert_eq!(betti_numbers(&i).unwrap(), t);
        let single = linear_quotients_of(2, &[m(&[1, 1])]).steps;
        assert_eq!(betti_from_quotients(&single, true).unwrap(), BettiTable::from_entries([((0, 2), 1)]));
    }
}
