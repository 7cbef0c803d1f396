//! Explicit Gröbner bases and initial ideals claimed for the Rees algebras of
//! vertex cover ideals of paths, bicliques and Cameron–Walker graphs, and a
//! harness that checks a claim against Buchberger's algorithm.

mod biclique;
mod cw;
mod path;
mod verify;

pub use biclique::biclique_claimed;
pub use cw::{cover_index, cw_claimed};
pub use path::{path_a_n, path_b_n, path_claimed};
pub use verify::{verify_claim, VerificationReport};

use serde::Serialize;

use crate::graphs::{bits, Family, Graph, GraphError};
use crate::groebner::{BuchbergerConfig, GroebnerError, MonomialIdeal};
use crate::rees::{rees_context, ReesError, ReesPresentation};
use crate::ring::{Monomial, MonomialOrder, OrderSpec, Polynomial, RingError, VarContext};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Rees(#[from] ReesError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("the graph is not tagged as {0}")]
    WrongFamily(&'static str),
    #[error("{tag}: {detail} is not a minimal vertex cover")]
    MissingCover { tag: &'static str, detail: String },
    #[error("{tag}: index inequality fails for {detail}")]
    IndexInequality { tag: &'static str, detail: String },
    #[error("{tag}: the designated leading term of {binomial} is not its maximum")]
    LeadMismatch { tag: &'static str, binomial: String },
    #[error("claim and presentation use different rings or orders")]
    ContextMismatch,
}

impl FamilyError {
    /// True for the resource-cap errors.
    pub fn is_cap(&self) -> bool {
        match self {
            FamilyError::Groebner(e) => e.is_cap(),
            FamilyError::Rees(e) => e.is_cap(),
            _ => false,
        }
    }
}

/// A binomial `lead - other` with the type of construction that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimedBinomial {
    pub poly: Polynomial,
    pub lead: Monomial,
    pub tag: &'static str,
}

/// A family's claimed Gröbner basis together with the ring it lives in.
/// `binomials` keeps duplicates produced by different construction types.
#[derive(Clone, Debug)]
pub struct ClaimedBasis {
    pub family: Family,
    base: VarContext,
    gens: Vec<Monomial>,
    y_names: Vec<String>,
    spec: OrderSpec,
    ctx: VarContext,
    order: MonomialOrder,
    pub binomials: Vec<ClaimedBinomial>,
    pub claimed_initials: Vec<Monomial>,
}

impl ClaimedBasis {
    /// Ring data for generators `gens` of the vertex cover ideal of `g`.
    fn setup(g: &Graph, covers: &[u64], y_names: Vec<String>, spec: OrderSpec) -> Result<Self, FamilyError> {
        let base = VarContext::new(g.names())?;
        let gens: Vec<Monomial> = covers.iter().map(|&c| Monomial::squarefree(g.n(), bits(c))).collect();
        let ctx = rees_context(&base, &gens, &y_names)?;
        let order = spec.compile(&ctx)?;
        Ok(Self {
            family: g.family().clone(),
            base,
            gens,
            y_names,
            spec,
            ctx,
            order,
            binomials: Vec::new(),
            claimed_initials: Vec::new(),
        })
    }

    pub fn base(&self) -> &VarContext {
        &self.base
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn y_names(&self) -> &[String] {
        &self.y_names
    }

    pub fn spec(&self) -> &OrderSpec {
        &self.spec
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    fn nx(&self) -> usize {
        self.base.len()
    }

    /// `x_C * prod y_r` in `T` for a vertex set `x` and y indices `ys` (0-based).
    fn mono(&self, x: u64, ys: &[usize]) -> Monomial {
        let mut e = vec![0u32; self.ctx.len()];
        for v in bits(x) {
            e[v] += 1;
        }
        for &r in ys {
            e[self.nx() + r] += 1;
        }
        Monomial::from_exps(e)
    }

    /// Record `lead - other`, skipping an identical binomial of the same type.
    fn push(&mut self, tag: &'static str, lead: Monomial, other: Monomial) -> Result<(), FamilyError> {
        let poly = Polynomial::binomial(lead.clone(), other, &self.order);
        if poly.leading_monomial() != Some(&lead) {
            return Err(FamilyError::LeadMismatch { tag, binomial: poly.render(&self.ctx) });
        }
        if !self.binomials.iter().any(|b| b.tag == tag && b.poly == poly) {
            self.binomials.push(ClaimedBinomial { poly, lead, tag });
        }
        Ok(())
    }

    fn set_initials(&mut self, mut initials: Vec<Monomial>) {
        initials.sort_by(|a, b| self.order.cmp(b, a));
        initials.dedup();
        self.claimed_initials = initials;
    }

    /// Index of the generator with support `mask`.
    fn lookup(&self, mask: u64) -> Option<usize> {
        self.gens.iter().position(|u| u.mask() == mask)
    }

    /// The claimed binomials with duplicates removed, in construction order.
    pub fn distinct_binomials(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        for b in &self.binomials {
            if !out.contains(&b.poly) {
                out.push(b.poly.clone());
            }
        }
        out
    }

    /// Drop every binomial in `remove` and add `add`, each with type `tag`.
    pub fn replace(&mut self, remove: &[Polynomial], add: Vec<Polynomial>, tag: &'static str) {
        self.binomials.retain(|b| !remove.contains(&b.poly));
        for poly in add {
            let lead = poly.leading_monomial().cloned().unwrap_or_else(|| Monomial::one(self.ctx.len()));
            self.binomials.push(ClaimedBinomial { poly, lead, tag });
        }
    }

    pub fn claimed_initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ctx.len(), self.claimed_initials.iter().cloned())
    }

    /// Every claimed initial is quadratic.
    pub fn initials_quadratic(&self) -> bool {
        self.claimed_initials.iter().all(|m| m.degree() == 2)
    }

    /// Every claimed binomial has two terms with equal image under `y_r -> u_r t`.
    pub fn binomials_balanced(&self) -> bool {
        let image = |m: &Monomial| {
            let mut e = m.exps()[..self.nx()].to_vec();
            let mut t = 0;
            for (r, &a) in m.exps()[self.nx()..].iter().enumerate() {
                t += a;
                for (x, &b) in self.gens[r].exps().iter().enumerate() {
                    e[x] += a * b;
                }
            }
            (e, t)
        };
        self.binomials.iter().all(|b| {
            let terms = b.poly.terms();
            terms.len() == 2 && image(&terms[0].mono) == image(&terms[1].mono)
        })
    }

    /// The Rees presentation in the claim's ring, computed by elimination.
    pub fn presentation(&self, config: &BuchbergerConfig) -> Result<ReesPresentation, ReesError> {
        ReesPresentation::new(&self.base, self.gens.clone(), self.y_names.clone(), self.spec.clone(), config)
    }

    /// Render the binomials as `tag: poly` lines.
    pub fn render(&self) -> Vec<String> {
        self.binomials.iter().map(|b| format!("{}: {}", b.tag, b.poly.render(&self.ctx))).collect()
    }
}

/// JSON view of a claim.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimSummary {
    pub family: Family,
    pub covers: Vec<String>,
    pub binomials: Vec<TaggedBinomial>,
    pub claimed_initials: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TaggedBinomial {
    pub tag: &'static str,
    pub binomial: String,
}

impl ClaimedBasis {
    pub fn summary(&self) -> ClaimSummary {
        ClaimSummary {
            family: self.family.clone(),
            covers: self.gens.iter().map(|u| u.render(&self.base)).collect(),
            binomials: self
                .binomials
                .iter()
                .map(|b| TaggedBinomial { tag: b.tag, binomial: b.poly.render(&self.ctx) })
                .collect(),
            claimed_initials: self.claimed_initials.iter().map(|m| m.render(&self.ctx)).collect(),
        }
    }
}
