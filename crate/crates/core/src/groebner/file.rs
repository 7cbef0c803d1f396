use crate::ring::{parse_polynomial, MonomialOrder, OrderSpec, Polynomial, RingError, VarContext};

/// An ideal read from the text format
///
/// ```text
/// vars: x1, x2, y1, y2
/// blocks: y: y1, y2; x: x1, x2     # optional
/// order: block(y:lex[y1>y2]; x:lex[x1>x2])   # optional, default lex in declaration order
/// x1*y2 - x2*y1
/// ```
///
/// `#` starts a comment; blank lines are skipped.
#[derive(Clone, Debug)]
pub struct IdealFile {
    pub ctx: VarContext,
    pub spec: OrderSpec,
    pub order: MonomialOrder,
    pub gens: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealFileError {
    #[error("line {line}: {source}")]
    Ring { line: usize, source: RingError },
    #[error("line {line}: {msg}")]
    Header { line: usize, msg: String },
    #[error("missing `vars:` header")]
    MissingVars,
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile, IdealFileError> {
    let mut names: Option<Vec<String>> = None;
    let mut blocks: Option<Vec<(String, Vec<String>)>> = None;
    let mut spec: Option<OrderSpec> = None;
    let mut ctx: Option<(VarContext, OrderSpec, MonomialOrder)> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let header = |key: &str| content.strip_prefix(key).map(str::trim);
        if ctx.is_none() {
            if let Some(rest) = header("vars:") {
                names = Some(split_list(rest, ','));
                continue;
            }
            if let Some(rest) = header("blocks:") {
                let mut out = Vec::new();
                for part in rest.split(';') {
                    let (b, vs) = part
                        .split_once(':')
                        .ok_or_else(|| IdealFileError::Header { line, msg: "expected `name: vars` in blocks".into() })?;
                    out.push((b.trim().to_string(), split_list(vs, ',')));
                }
                blocks = Some(out);
                continue;
            }
            if let Some(rest) = header("order:") {
                spec = Some(OrderSpec::parse(rest).map_err(|source| IdealFileError::Ring { line, source })?);
                continue;
            }
            ctx = Some(build(names.clone(), blocks.clone(), spec.clone(), line)?);
        }
        let (c, _, o) = ctx.as_ref().unwrap();
        gens.push(parse_polynomial(content, c, o).map_err(|source| IdealFileError::Ring { line, source })?);
    }
    let (ctx, spec, order) = match ctx {
        Some(t) => t,
        None => build(names, blocks, spec, 0)?,
    };
    Ok(IdealFile { ctx, spec, order, gens })
}

fn build(
    names: Option<Vec<String>>,
    blocks: Option<Vec<(String, Vec<String>)>>,
    spec: Option<OrderSpec>,
    line: usize,
) -> Result<(VarContext, OrderSpec, MonomialOrder), IdealFileError> {
    let names = names.ok_or(IdealFileError::MissingVars)?;
    let ring = |source| IdealFileError::Ring { line, source };
    let ctx = match blocks {
        Some(b) => VarContext::with_blocks(names.clone(), b),
        None => VarContext::new(&names),
    }
    .map_err(ring)?;
    let spec = spec.unwrap_or_else(|| OrderSpec::lex(&names));
    let order = spec.compile(&ctx).map_err(ring)?;
    Ok((ctx, spec, order))
}

fn split_list(s: &str, sep: char) -> Vec<String> {
    s.split(sep).map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect()
}
