use std::fmt;

use super::{RingError, VarContext};

/// A monomial as an exponent vector over a fixed [`VarContext`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// Squarefree monomial on the given variable indices.
    pub fn squarefree(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; nvars];
        for v in vars {
            exps[v] = 1;
        }
        Self { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Total degree in the listed variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&v| self.exps[v]).sum()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Bit `i % 64` set for every variable `i` in the support. Divisibility
    /// `a | b` implies `mask(a) & !mask(b) == 0`.
    pub fn mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i % 64);
            }
        }
        m
    }

    /// `self | other`
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, RingError> {
        check_len(self, other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(RingError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial { exps })
    }

    /// `self / divisor`, defined only when `divisor | self`.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial, RingError> {
        check_len(self, divisor)?;
        if !divisor.divides(self) {
            return Err(RingError::NotDivisible);
        }
        Ok(Monomial { exps: self.exps.iter().zip(&divisor.exps).map(|(a, b)| a - b).collect() })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect() }
    }

    pub fn pow(&self, k: u32) -> Result<Monomial, RingError> {
        let exps = self
            .exps
            .iter()
            .map(|e| e.checked_mul(k).ok_or(RingError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial { exps })
    }

    /// Re-embed into a context with `nvars` variables; variable `i` goes to `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut exps = vec![0; nvars];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[map[i]] += e;
        }
        Monomial { exps }
    }

    pub fn render(&self, ctx: &VarContext) -> String {
        DisplayMonomial { mono: self, ctx }.to_string()
    }

    pub fn display<'a>(&'a self, ctx: &'a VarContext) -> DisplayMonomial<'a> {
        DisplayMonomial { mono: self, ctx }
    }
}

fn check_len(a: &Monomial, b: &Monomial) -> Result<(), RingError> {
    if a.exps.len() != b.exps.len() {
        return Err(RingError::ContextMismatch);
    }
    Ok(())
}

pub struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    ctx: &'a VarContext,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
