use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use xcond::graphs::{biclique, cameron_walker, path, Graph};

/// Exactly one graph source.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct FamilyArgs {
    /// The path P_N.
    #[arg(long, value_name = "N")]
    pub path: Option<usize>,
    /// The complete tripartite-like graph Γ_{P,Q,R}.
    #[arg(long, num_args = 3, value_names = ["P", "Q", "R"])]
    pub biclique: Option<Vec<usize>>,
    /// A Cameron–Walker graph, e.g. `--cw p=2,1 q=1,0`.
    #[arg(long, num_args = 2, value_names = ["p=..", "q=.."])]
    pub cw: Option<Vec<String>>,
    /// An edge list file, one `u v` per line.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
}

impl FamilyArgs {
    pub fn build(&self) -> Result<Graph> {
        if let Some(n) = self.path {
            return Ok(path(n)?);
        }
        if let Some(v) = &self.biclique {
            return Ok(biclique(v[0], v[1], v[2])?);
        }
        if let Some(v) = &self.cw {
            let (p, q) = parse_cw(v)?;
            return Ok(cameron_walker(&p, &q)?);
        }
        if let Some(file) = &self.graph {
            return read_graph(file);
        }
        unreachable!("clap requires one family flag")
    }
}

pub fn read_graph(file: &PathBuf) -> Result<Graph> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    Ok(Graph::parse_edge_list(&text)?)
}

fn parse_cw(values: &[String]) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut p = None;
    let mut q = None;
    for v in values {
        let (key, list) = v.split_once('=').with_context(|| format!("expected `p=..` or `q=..`, got `{v}`"))?;
        let nums = list
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<usize>().with_context(|| format!("bad count `{s}` in `{v}`")))
            .collect::<Result<Vec<_>>>()?;
        match key.trim() {
            "p" => p = Some(nums),
            "q" => q = Some(nums),
            other => bail!("unknown Cameron–Walker key `{other}`"),
        }
    }
    match (p, q) {
        (Some(p), Some(q)) => Ok((p, q)),
        _ => bail!("--cw needs both p=.. and q=.."),
    }
}
