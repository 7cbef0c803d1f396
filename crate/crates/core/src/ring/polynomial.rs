use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, RingError, VarContext};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: BigRational,
    pub mono: Monomial,
}

/// A polynomial with exact rational coefficients. Terms have nonzero
/// coefficients, pairwise distinct monomials, and are stored strictly
/// descending under the order they were built with.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![Term { coeff: c, mono: m }] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(BigRational::one(), m)
    }

    /// `a - b` for two monomials.
    pub fn binomial(a: Monomial, b: Monomial, order: &MonomialOrder) -> Self {
        Self::from_terms(vec![(BigRational::one(), a), (-BigRational::one(), b)], order)
    }

    /// Sort, merge equal monomials and drop zero coefficients.
    pub fn from_terms(mut terms: Vec<(BigRational, Monomial)>, order: &MonomialOrder) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.mono == m => last.coeff += c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff.is_zero() {
                            out.pop();
                        }
                    }
                    out.push(Term { coeff: c, mono: m });
                }
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Self { terms: out }
    }

    pub(crate) fn from_sorted_terms(terms: Vec<Term>) -> Self {
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Two terms with coefficients in `{1, -1}`.
    pub fn is_unit_binomial(&self) -> bool {
        self.terms.len() == 2 && self.terms.iter().all(|t| t.coeff.abs().is_one())
    }

    pub fn is_sorted_by(&self, order: &MonomialOrder) -> bool {
        self.terms.windows(2).all(|w| order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    pub fn resort(self, order: &MonomialOrder) -> Self {
        let terms = self.terms.into_iter().map(|t| (t.coeff, t.mono)).collect();
        Self::from_terms(terms, order)
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|t| Term { coeff: &t.coeff * c, mono: t.mono.clone() }).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|t| Term { coeff: -t.coeff.clone(), mono: t.mono.clone() }).collect() }
    }

    pub fn add(&self, other: &Polynomial, order: &MonomialOrder) -> Self {
        merge(&self.terms, other.terms.iter().cloned(), order)
    }

    pub fn sub(&self, other: &Polynomial, order: &MonomialOrder) -> Self {
        merge(&self.terms, other.terms.iter().map(|t| Term { coeff: -t.coeff.clone(), mono: t.mono.clone() }), order)
    }

    /// `c * m * self`. Multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> Result<Self, RingError> {
        if c.is_zero() {
            return Ok(Self::zero());
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(Term { coeff: &t.coeff * c, mono: t.mono.mul(m)? }))
            .collect::<Result<Vec<_>, RingError>>()?;
        Ok(Self { terms })
    }

    /// `self - c * m * g`, computed by a single merge.
    pub fn sub_mul_term(
        &self,
        c: &BigRational,
        m: &Monomial,
        g: &Polynomial,
        order: &MonomialOrder,
    ) -> Result<Self, RingError> {
        let shifted = g
            .terms
            .iter()
            .map(|t| Ok(Term { coeff: -(&t.coeff * c), mono: t.mono.mul(m)? }))
            .collect::<Result<Vec<_>, RingError>>()?;
        Ok(merge(&self.terms, shifted.into_iter(), order))
    }

    pub fn mul(&self, other: &Polynomial, order: &MonomialOrder) -> Result<Self, RingError> {
        let mut acc = Self::zero();
        for t in &other.terms {
            let part = self.mul_term(&t.coeff, &t.mono)?;
            acc = acc.add(&part, order);
        }
        Ok(acc)
    }

    /// Substitute variable `i` by the monomial `images[i]` of a ring with
    /// `nvars` variables. Used to evaluate presentation maps like `y_j -> u_j t`.
    pub fn substitute_monomials(
        &self,
        images: &[Monomial],
        target: &MonomialOrder,
    ) -> Result<Self, RingError> {
        let nvars = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.mono.nvars() != images.len() {
                return Err(RingError::ContextMismatch);
            }
            let mut img = Monomial::one(nvars);
            for (v, &e) in t.mono.exps().iter().enumerate() {
                if e > 0 {
                    img = img.mul(&images[v].pow(e)?)?;
                }
            }
            terms.push((t.coeff.clone(), img));
        }
        Ok(Self::from_terms(terms, target))
    }

    /// Rename variables into a ring with `nvars` variables (`i -> map[i]`) and re-sort.
    pub fn embed(&self, nvars: usize, map: &[usize], order: &MonomialOrder) -> Self {
        let terms = self.terms.iter().map(|t| (t.coeff.clone(), t.mono.embed(nvars, map))).collect();
        Self::from_terms(terms, order)
    }

    pub fn render(&self, ctx: &VarContext) -> String {
        self.display(ctx).to_string()
    }

    pub fn display<'a>(&'a self, ctx: &'a VarContext) -> DisplayPolynomial<'a> {
        DisplayPolynomial { poly: self, ctx }
    }
}

fn merge(a: &[Term], b: impl Iterator<Item = Term>, order: &MonomialOrder) -> Polynomial {
    let mut out = Vec::with_capacity(a.len() + 2);
    let mut ai = a.iter().peekable();
    let mut bi = b.peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(ai.next().unwrap().clone()),
            (None, Some(_)) => out.push(bi.next().unwrap()),
            (Some(x), Some(y)) => match order.cmp(&x.mono, &y.mono) {
                Ordering::Greater => out.push(ai.next().unwrap().clone()),
                Ordering::Less => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    let x = ai.next().unwrap();
                    let y = bi.next().unwrap();
                    let c = &x.coeff + y.coeff;
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: y.mono });
                    }
                }
            },
        }
    }
    Polynomial { terms: out }
}

pub struct DisplayPolynomial<'a> {
    poly: &'a Polynomial,
    ctx: &'a VarContext,
}

impl fmt::Display for DisplayPolynomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.poly.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let c = t.coeff.abs();
            if t.mono.is_one() {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    write!(f, "{c}*")?;
                }
                write!(f, "{}", t.mono.display(self.ctx))?;
            }
        }
        Ok(())
    }
}
