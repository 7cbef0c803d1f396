//! Edge modules `M_G = F / (x_i e_j - x_j e_i : {i,j} ∈ E(G))`, their
//! symmetric algebras `T / J_G` with `J_G` the binomial edge ideal, the
//! admissible-path Gröbner basis of `J_G`, and the cycle complex of `M_{C_r}`.
//!
//! Vertex `v` (0-based index) carries the variables `x{v+1}` and `y{v+1}`;
//! `T` is ordered lex `x_1 > ... > x_n > y_1 > ... > y_n`.

mod cycle;

pub use cycle::{cycle_complex, cycle_complex_checks, CycleComplex, CycleComplexReport};

use serde::Serialize;

use crate::betti::{betti_numbers, BettiError};
use crate::graphs::{bits, connectivity_profile, depth_bound_a, is_peo, peo, ConnectivityProfile, Graph, GraphError};
use crate::groebner::{
    reduced_groebner_basis, same_elements, BuchbergerConfig, GroebnerBasis, GroebnerError, MonomialIdeal,
};
use crate::ring::{Monomial, MonomialOrder, OrderSpec, Polynomial, RingError, VarContext};

/// Largest graph handled by the exhaustive path search.
pub const MAX_PATH_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymalgError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Betti(#[from] BettiError),
    #[error("{n} vertices exceed the limit of {limit} for this computation")]
    TooLarge { n: usize, limit: usize },
    #[error("cycle length {0} is outside 4..=7")]
    CycleLength(usize),
    #[error("the graph is not chordal")]
    NotChordal,
}

impl SymalgError {
    /// True for the resource-cap errors.
    pub fn is_cap(&self) -> bool {
        matches!(self, SymalgError::Groebner(e) if e.is_cap())
    }
}

/// The presentation of `M_G` and of `Sym(M_G) = T / J_G`.
#[derive(Clone, Debug)]
pub struct EdgeModulePresentation {
    pub n: usize,
    pub ctx: VarContext,
    pub order: MonomialOrder,
    /// Edges `(i, j)`, `i < j`, one relation `x_i e_j - x_j e_i` each.
    pub relations: Vec<(usize, usize)>,
    /// `x_i y_j - x_j y_i`, in the order of `relations`.
    pub sym_ideal: Vec<Polynomial>,
}

impl EdgeModulePresentation {
    pub fn x(&self, v: usize) -> usize {
        v
    }

    pub fn y(&self, v: usize) -> usize {
        self.n + v
    }

    pub fn x_vars(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    /// `f_ij = x_i y_j - x_j y_i`.
    pub fn f(&self, i: usize, j: usize) -> Polynomial {
        let m = |a: usize, b: usize| Monomial::squarefree(2 * self.n, [a, b]);
        Polynomial::binomial(m(self.x(i), self.y(j)), m(self.x(j), self.y(i)), &self.order)
    }

    /// Render the module relations as `x1*e2 - x2*e1`.
    pub fn render_relations(&self) -> Vec<String> {
        self.relations.iter().map(|&(i, j)| format!("x{}*e{} - x{}*e{}", i + 1, j + 1, j + 1, i + 1)).collect()
    }
}

pub fn edge_module(g: &Graph) -> Result<EdgeModulePresentation, SymalgError> {
    let n = g.n();
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|i| format!("y{i}")));
    let ctx = VarContext::new(&names)?;
    let order = OrderSpec::lex(&names).compile(&ctx)?;
    let relations = g.edges();
    let mut p = EdgeModulePresentation { n, ctx, order, relations, sym_ideal: Vec::new() };
    p.sym_ideal = p.relations.iter().map(|&(i, j)| p.f(i, j)).collect();
    Ok(p)
}

/// Generators `x_i y_j - x_j y_i` of `J_G`, one per edge.
pub fn binomial_edge_ideal(g: &Graph) -> Result<Vec<Polynomial>, SymalgError> {
    Ok(edge_module(g)?.sym_ideal)
}

/// A path `i = i_0, ..., i_r = j` with `i < j` satisfying the admissibility conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissiblePath {
    pub i: usize,
    pub j: usize,
    pub interior: Vec<usize>,
}

impl AdmissiblePath {
    /// `u_π = prod_{i_k > j} x_{i_k} * prod_{i_l < i} y_{i_l}` in the ring of [`edge_module`].
    pub fn u_pi(&self, n: usize) -> Monomial {
        let mut e = vec![0u32; 2 * n];
        for &v in &self.interior {
            if v > self.j {
                e[v] += 1;
            } else {
                e[n + v] += 1;
            }
        }
        Monomial::from_exps(e)
    }

    /// 1-based vertex sequence.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = vec![self.i + 1];
        out.extend(self.interior.iter().map(|v| v + 1));
        out.push(self.j + 1);
        out
    }
}

/// All admissible paths, by depth-first search over simple paths whose interior
/// vertices avoid `[i, j]`. Condition (c) ranges over all proper subsets of the
/// interior, the empty one included, so it says exactly that `π` is an induced path.
pub fn admissible_paths(g: &Graph) -> Result<Vec<AdmissiblePath>, SymalgError> {
    let n = g.n();
    if n > MAX_PATH_VERTICES {
        return Err(SymalgError::TooLarge { n, limit: MAX_PATH_VERTICES });
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let outside = (0..n).filter(|&v| v < i || v > j).fold(0u64, |m, v| m | 1 << v);
            let mut stack = vec![i];
            search(g, j, outside, &mut stack, &mut out);
        }
    }
    Ok(out)
}

/// `stack` is an induced path from `i`; every extension keeps it induced.
fn search(g: &Graph, j: usize, outside: u64, stack: &mut Vec<usize>, out: &mut Vec<AdmissiblePath>) {
    let last = *stack.last().unwrap();
    let used = stack.iter().fold(0u64, |m, &v| m | 1 << v);
    let before_last = used & !(1 << last);
    let ends = g.has_edge(last, j) && g.neighbors(j) & before_last == 0;
    if ends {
        out.push(AdmissiblePath { i: stack[0], j, interior: stack[1..].to_vec() });
    }
    for v in bits(g.neighbors(last) & outside & !used) {
        if g.neighbors(v) & before_last != 0 {
            continue;
        }
        stack.push(v);
        search(g, j, outside, stack, out);
        stack.pop();
    }
}

/// `{u_π f_ij : π admissible}`, sorted by leading monomial descending.
pub fn hhhkr_basis(g: &Graph) -> Result<GroebnerBasis, SymalgError> {
    let p = edge_module(g)?;
    let mut els = Vec::new();
    for path in admissible_paths(g)? {
        let f = p.f(path.i, path.j).mul_term(&num_rational::BigRational::from_integer(1.into()), &path.u_pi(p.n))?;
        els.push(f);
    }
    els.sort_by(|a, b| p.order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    Ok(GroebnerBasis::from_parts(els, p.order, true))
}

/// Buchberger's reduced Gröbner basis of `J_G`.
pub fn binomial_edge_gb(g: &Graph, config: &BuchbergerConfig) -> Result<GroebnerBasis, SymalgError> {
    let p = edge_module(g)?;
    Ok(reduced_groebner_basis(&p.sym_ideal, &p.order, config)?)
}

/// Minimal generators of `ini(J_G)` of x-degree at least 2.
fn x_violations(ini: &MonomialIdeal, n: usize) -> Vec<Monomial> {
    let xs: Vec<usize> = (0..n).collect();
    ini.gens().iter().filter(|m| m.degree_in(&xs) > 1).cloned().collect()
}

/// The chordality / x-condition comparison for one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MgReport {
    pub n: usize,
    pub chordal: bool,
    /// `labeling[k]` is the original vertex (0-based) that receives label `k + 1`.
    pub labeling: Vec<usize>,
    pub relabeled: bool,
    /// The x-condition of `ini(J_G)` computed by Buchberger, under `labeling`.
    pub x_condition: bool,
    /// The same verdict read off the admissible-path basis.
    pub x_condition_from_paths: bool,
    pub violations: Vec<String>,
    /// The admissible-path basis equals Buchberger's reduced basis, for the
    /// input labeling and for `labeling`.
    pub hhhkr_matches: bool,
    /// The degree-(1,1) initial monomials are exactly `x_i y_j`, `i < j` an edge.
    pub mixed_initials_are_edges: bool,
    /// Every admissible path under `labeling` has all interior vertices below `i`.
    pub interiors_below: bool,
    /// `x_condition == chordal`.
    pub equivalence_holds: bool,
}

pub fn mg_equivalence_check(g: &Graph, config: &BuchbergerConfig) -> Result<MgReport, SymalgError> {
    let n = g.n();
    if n > 8 {
        return Err(SymalgError::TooLarge { n, limit: 8 });
    }
    let order = peo(g);
    let chordal = order.is_some();
    let labeling = order.unwrap_or_else(|| (0..n).collect());
    let relabeled = labeling.iter().enumerate().any(|(k, &v)| k != v);
    let h = g.relabel(&labeling);

    let mut hhhkr_matches = true;
    let mut check_basis = |graph: &Graph| -> Result<GroebnerBasis, SymalgError> {
        let gb = binomial_edge_gb(graph, config)?;
        let paths = hhhkr_basis(graph)?;
        hhhkr_matches &= same_elements(paths.elements(), gb.elements(), gb.order());
        Ok(gb)
    };
    if relabeled {
        check_basis(g)?;
    }
    let gb = check_basis(&h)?;
    let ini = gb.initial_ideal();
    let violations = x_violations(&ini, n);
    let x_condition = violations.is_empty();

    let paths = admissible_paths(&h)?;
    let x_condition_from_paths = paths.iter().all(|p| p.interior.iter().all(|&v| v < p.j));
    let interiors_below = paths.iter().all(|p| p.interior.iter().all(|&v| v < p.i));

    let xs: Vec<usize> = (0..n).collect();
    let mixed: Vec<&Monomial> = ini.gens().iter().filter(|m| m.degree() == 2 && m.degree_in(&xs) == 1).collect();
    let expected: Vec<Monomial> = h.edges().iter().map(|&(i, j)| Monomial::squarefree(2 * n, [i, n + j])).collect();
    let mixed_initials_are_edges = mixed.len() == expected.len() && expected.iter().all(|m| mixed.contains(&m));

    let p = edge_module(&h)?;
    Ok(MgReport {
        n,
        chordal,
        labeling,
        relabeled,
        x_condition,
        x_condition_from_paths,
        violations: violations.iter().map(|m| m.render(&p.ctx)).collect(),
        hhhkr_matches,
        mixed_initials_are_edges,
        interiors_below,
        equivalence_holds: x_condition == chordal,
    })
}

/// Depth data for a chordal graph under a perfect elimination ordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    /// `labeling[k]` is the original vertex receiving label `k + 1`; the
    /// identity when the input labeling is already a perfect elimination ordering.
    pub labeling: Vec<usize>,
    pub back_neighbourhoods: Vec<usize>,
    /// `n - max_j |N_{G_[j]}(j)|`.
    pub depth_bound: usize,
    /// `projdim F / ini(C_G)` from the Betti numbers of `I_j = (x_i : i ∈ N_{G_[j]}(j))`.
    pub initial_module_projdim: usize,
    pub profile: ConnectivityProfile,
}

pub fn depth_bound_report(g: &Graph) -> Result<DepthReport, SymalgError> {
    let n = g.n();
    let identity: Vec<usize> = (0..n).collect();
    let labeling = if is_peo(g, &identity) { identity } else { peo(g).ok_or(SymalgError::NotChordal)? };
    let h = g.relabel(&labeling);
    let natural: Vec<usize> = (0..n).collect();
    let depth_bound = depth_bound_a(&h, &natural)?;
    let back: Vec<usize> = (0..n).map(|j| crate::graphs::back_degree(&h, &natural, j)).collect();
    let mut projdim = 0;
    for j in 0..n {
        let ij = MonomialIdeal::new(n, bits(h.neighbors(j) & ((1u64 << j) - 1)).map(|i| Monomial::var(n, i)));
        if !ij.is_zero() {
            projdim = projdim.max(betti_numbers(&ij)?.projdim() + 1);
        }
    }
    Ok(DepthReport {
        labeling,
        back_neighbourhoods: back,
        depth_bound,
        initial_module_projdim: projdim,
        profile: connectivity_profile(g)?,
    })
}
