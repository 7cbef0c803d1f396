use std::cmp::Ordering;
use std::fmt;

use super::parse::Cursor;
use super::{Monomial, RingError, VarContext};

/// Declarative description of a monomial order, resolved against a
/// [`VarContext`] by [`OrderSpec::compile`].
///
/// DSL: `lex[v1>v2>...]`, `revlex[v1>...]`, `block(B1:spec; B2:spec)`,
/// `weighted(w=[d1,...]; tie=spec)`. Weight vectors are aligned with the
/// variables of the enclosing scope (the block, or the whole context) in
/// declaration order. `revlex` is the degree reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    Lex(Vec<String>),
    RevLex(Vec<String>),
    Block(Vec<(String, OrderSpec)>),
    Weighted { weights: Vec<i64>, tie: Box<OrderSpec> },
}

impl OrderSpec {
    pub fn lex<S: AsRef<str>>(vars: &[S]) -> Self {
        OrderSpec::Lex(vars.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn revlex<S: AsRef<str>>(vars: &[S]) -> Self {
        OrderSpec::RevLex(vars.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn parse(text: &str) -> Result<Self, RingError> {
        let mut cur = Cursor::new(text);
        let spec = parse_spec(&mut cur)?;
        cur.skip_ws();
        if !cur.at_end() {
            return Err(cur.error("trailing input after order spec"));
        }
        Ok(spec)
    }

    pub fn compile(&self, ctx: &VarContext) -> Result<MonomialOrder, RingError> {
        let scope: Vec<usize> = (0..ctx.len()).collect();
        let mut rows = Vec::new();
        compile_into(self, ctx, &scope, &mut rows)?;
        Ok(MonomialOrder::from_rows(ctx.len(), rows))
    }

    /// The sub-order a block order assigns to `block`, if this is a block order.
    pub fn block_part(&self, block: &str) -> Option<&OrderSpec> {
        match self {
            OrderSpec::Block(parts) => parts.iter().find(|(b, _)| b == block).map(|(_, s)| s),
            _ => None,
        }
    }
}

fn compile_into(
    spec: &OrderSpec,
    ctx: &VarContext,
    scope: &[usize],
    rows: &mut Vec<Vec<(usize, i64)>>,
) -> Result<(), RingError> {
    match spec {
        OrderSpec::Lex(names) => {
            let perm = resolve_permutation(names, ctx, scope)?;
            rows.extend(perm.into_iter().map(|v| vec![(v, 1)]));
        }
        OrderSpec::RevLex(names) => {
            let perm = resolve_permutation(names, ctx, scope)?;
            rows.push(perm.iter().map(|&v| (v, 1)).collect());
            rows.extend(perm.iter().skip(1).rev().map(|&v| vec![(v, -1)]));
        }
        OrderSpec::Block(parts) => {
            let mut covered = Vec::new();
            for (bname, sub) in parts {
                let block = ctx
                    .block(bname)
                    .ok_or_else(|| RingError::InvalidOrder(format!("unknown block `{bname}`")))?;
                if let Some(&v) = block.vars.iter().find(|v| !scope.contains(v)) {
                    return Err(RingError::InvalidOrder(format!(
                        "block `{bname}` contains `{}` outside the enclosing scope",
                        ctx.name(v)
                    )));
                }
                if block.vars.iter().any(|v| covered.contains(v)) {
                    return Err(RingError::InvalidOrder(format!("block `{bname}` listed twice")));
                }
                covered.extend_from_slice(&block.vars);
                compile_into(sub, ctx, &block.vars, rows)?;
            }
            if covered.len() != scope.len() {
                return Err(RingError::InvalidOrder("block list does not cover every variable".into()));
            }
        }
        OrderSpec::Weighted { weights, tie } => {
            if weights.len() != scope.len() {
                return Err(RingError::InvalidOrder(format!(
                    "weight vector has length {} but the scope has {} variables",
                    weights.len(),
                    scope.len()
                )));
            }
            if weights.iter().any(|&w| w < 0) {
                return Err(RingError::InvalidOrder("weights must be nonnegative".into()));
            }
            rows.push(scope.iter().zip(weights).filter(|(_, &w)| w != 0).map(|(&v, &w)| (v, w)).collect());
            compile_into(tie, ctx, scope, rows)?;
        }
    }
    Ok(())
}

fn resolve_permutation(names: &[String], ctx: &VarContext, scope: &[usize]) -> Result<Vec<usize>, RingError> {
    let mut out = Vec::with_capacity(names.len());
    for n in names {
        let v = ctx.var(n)?;
        if !scope.contains(&v) {
            return Err(RingError::InvalidOrder(format!("`{n}` is not in the block this order applies to")));
        }
        if out.contains(&v) {
            return Err(RingError::InvalidOrder(format!("`{n}` listed twice")));
        }
        out.push(v);
    }
    if out.len() != scope.len() {
        return Err(RingError::InvalidOrder("variable list is not a permutation of its block".into()));
    }
    Ok(out)
}

/// A compiled monomial order: a weight matrix whose rows are compared
/// lexicographically. Pure lexicographic orders take a faster path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    nvars: usize,
    rows: Vec<Vec<(usize, i64)>>,
    lex_perm: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub(crate) fn from_rows(nvars: usize, rows: Vec<Vec<(usize, i64)>>) -> Self {
        let lex_perm = if rows.len() == nvars && rows.iter().all(|r| r.len() == 1 && r[0].1 == 1) {
            let perm: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
            let mut seen = vec![false; nvars];
            perm.iter().for_each(|&v| seen[v] = true);
            seen.iter().all(|&s| s).then_some(perm)
        } else {
            None
        };
        Self { nvars, rows, lex_perm }
    }

    /// Lexicographic order with variables ranked as listed (first is largest).
    pub fn lex_by_index(order: &[usize]) -> Self {
        Self::from_rows(order.len(), order.iter().map(|&v| vec![(v, 1)]).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> &[Vec<(usize, i64)>] {
        &self.rows
    }

    pub fn is_lex(&self) -> bool {
        self.lex_perm.is_some()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.nvars);
        debug_assert_eq!(b.nvars(), self.nvars);
        let (ea, eb) = (a.exps(), b.exps());
        if let Some(perm) = &self.lex_perm {
            for &v in perm {
                match ea[v].cmp(&eb[v]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            return Ordering::Equal;
        }
        for row in &self.rows {
            let d: i64 = row.iter().map(|&(v, w)| w * (ea[v] as i64 - eb[v] as i64)).sum();
            match d.cmp(&0) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, RingError> {
        if a.nvars() != self.nvars || b.nvars() != self.nvars {
            return Err(RingError::ContextMismatch);
        }
        Ok(self.cmp(a, b))
    }

    /// Sort key whose lexicographic comparison agrees with [`Self::cmp`].
    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        let e = m.exps();
        self.rows.iter().map(|row| row.iter().map(|&(v, w)| w * e[v] as i64).sum()).collect()
    }

    /// Order on `nvars` variables whose leading rows are lex on `first` and whose
    /// remaining rows are `self` with variable `i` moved to `map[i]`.
    pub fn with_leading_lex(&self, nvars: usize, first: &[usize], map: &[usize]) -> Self {
        let mut rows: Vec<Vec<(usize, i64)>> = first.iter().map(|&v| vec![(v, 1)]).collect();
        rows.extend(self.rows.iter().map(|r| r.iter().map(|&(v, w)| (map[v], w)).collect()));
        Self::from_rows(nvars, rows)
    }

    /// Same order with the variables renamed by `map` into a ring with `nvars` variables.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        let rows = self.rows.iter().map(|r| r.iter().map(|&(v, w)| (map[v], w)).collect()).collect();
        Self::from_rows(nvars, rows)
    }

    /// Sufficient test for being an elimination order for `vars`: a prefix of
    /// rows supported on `vars` with nonnegative weights that touches every
    /// variable of `vars`.
    pub fn is_elimination_for(&self, vars: &[usize]) -> bool {
        let mut touched = vec![false; self.nvars];
        for row in &self.rows {
            if row.iter().any(|&(v, w)| w != 0 && (!vars.contains(&v) || w < 0)) {
                break;
            }
            for &(v, w) in row {
                if w > 0 {
                    touched[v] = true;
                }
            }
            if vars.iter().all(|&v| touched[v]) {
                return true;
            }
        }
        vars.is_empty()
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSpec::Lex(v) => write!(f, "lex[{}]", v.join(">")),
            OrderSpec::RevLex(v) => write!(f, "revlex[{}]", v.join(">")),
            OrderSpec::Block(parts) => {
                f.write_str("block(")?;
                for (i, (b, s)) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("; ")?;
                    }
                    write!(f, "{b}:{s}")?;
                }
                f.write_str(")")
            }
            OrderSpec::Weighted { weights, tie } => {
                let w: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
                write!(f, "weighted(w=[{}]; tie={tie})", w.join(","))
            }
        }
    }
}

fn parse_spec(cur: &mut Cursor) -> Result<OrderSpec, RingError> {
    cur.skip_ws();
    let start = cur.pos();
    let word = cur.identifier().ok_or_else(|| cur.error("expected an order kind"))?;
    match word {
        "lex" | "revlex" => {
            cur.expect('[')?;
            let mut names = Vec::new();
            loop {
                cur.skip_ws();
                let n = cur.identifier().ok_or_else(|| cur.error("expected a variable name"))?;
                names.push(n.to_string());
                cur.skip_ws();
                if cur.eat('>') {
                    continue;
                }
                cur.expect(']')?;
                break;
            }
            Ok(if word == "lex" { OrderSpec::Lex(names) } else { OrderSpec::RevLex(names) })
        }
        "block" => {
            cur.expect('(')?;
            let mut parts = Vec::new();
            loop {
                cur.skip_ws();
                let b = cur.identifier().ok_or_else(|| cur.error("expected a block name"))?.to_string();
                cur.expect(':')?;
                parts.push((b, parse_spec(cur)?));
                cur.skip_ws();
                if cur.eat(';') {
                    continue;
                }
                cur.expect(')')?;
                break;
            }
            Ok(OrderSpec::Block(parts))
        }
        "weighted" => {
            cur.expect('(')?;
            cur.skip_ws();
            cur.keyword("w")?;
            cur.expect('=')?;
            cur.expect('[')?;
            let mut weights = Vec::new();
            loop {
                cur.skip_ws();
                let w = cur.integer().ok_or_else(|| cur.error("expected an integer weight"))?;
                weights.push(w);
                cur.skip_ws();
                if cur.eat(',') {
                    continue;
                }
                cur.expect(']')?;
                break;
            }
            cur.expect(';')?;
            cur.skip_ws();
            cur.keyword("tie")?;
            cur.expect('=')?;
            let tie = parse_spec(cur)?;
            cur.expect(')')?;
            Ok(OrderSpec::Weighted { weights, tie: Box::new(tie) })
        }
        _ => Err(RingError::Syntax { pos: start, msg: format!("unknown order kind `{word}`") }),
    }
}
