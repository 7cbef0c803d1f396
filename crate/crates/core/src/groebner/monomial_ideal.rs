use std::fmt;

use crate::ring::{Monomial, VarContext};

/// A monomial ideal given by its minimal generators.
///
/// Generators are pairwise non-dividing and kept sorted (by exponent vector)
/// so that equal ideals compare equal. No generators means the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        Self { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// Ideal generated by `gens`; non-minimal and repeated generators are dropped.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        debug_assert!(all.iter().all(|m| m.nvars() == nvars));
        // Low-degree monomials first so that a divisor is always seen before its multiples.
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
        let mut masks: Vec<u64> = Vec::with_capacity(all.len());
        for m in all {
            let mm = m.mask();
            if gens.iter().zip(&masks).any(|(g, &gm)| gm & !mm == 0 && g.divides(&m)) {
                continue;
            }
            gens.push(m);
            masks.push(mm);
        }
        gens.sort();
        Self { nvars, gens }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// True when every minimal generator is a single variable. The zero ideal qualifies.
    pub fn is_variable_generated(&self) -> bool {
        self.gens.iter().all(|g| g.degree() == 1)
    }

    /// Indices of the variables among the minimal generators.
    pub fn variables(&self) -> Vec<usize> {
        self.gens.iter().filter(|g| g.degree() == 1).map(|g| g.support().next().unwrap()).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).min().unwrap_or(0)
    }

    /// `I : m`, generated by `lcm(u, m) / m` for `u` in `I`.
    pub fn colon(&self, m: &Monomial) -> Self {
        let gens = self.gens.iter().map(|u| u.lcm(m).quotient(m).expect("m divides lcm(u, m)"));
        Self::new(self.nvars, gens)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Self {
        Self::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Self {
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.mul(b).expect("exponent overflow in monomial ideal product"));
            }
        }
        Self::new(self.nvars, out)
    }

    pub fn render(&self, ctx: &VarContext) -> Vec<String> {
        self.gens.iter().map(|g| g.render(ctx)).collect()
    }

    pub fn display<'a>(&'a self, ctx: &'a VarContext) -> DisplayMonomialIdeal<'a> {
        DisplayMonomialIdeal { ideal: self, ctx }
    }
}

pub struct DisplayMonomialIdeal<'a> {
    ideal: &'a MonomialIdeal,
    ctx: &'a VarContext,
}

impl fmt::Display for DisplayMonomialIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(self.ctx))?;
        }
        f.write_str(")")
    }
}
