mod family;
mod pretty;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use xcond::families::{biclique_claimed, cw_claimed, path_claimed, verify_claim, ClaimedBasis, FamilyError};
use xcond::graphs::{connectivity_profile, cover_monomials, minimal_vertex_covers, peo, Family, Graph};
use xcond::groebner::{parse_ideal_file, reduced_groebner_basis, BuchbergerConfig, GroebnerError};
use xcond::rees::{ReesError, ReesPresentation};
use xcond::ring::{OrderSpec, VarContext};
use xcond::symalg::{
    admissible_paths, cycle_complex_checks, depth_bound_report, edge_module, hhhkr_basis, mg_equivalence_check,
    SymalgError,
};

use family::FamilyArgs;

/// Full Gröbner comparison for Cameron–Walker graphs stops at this many vertices.
const CW_FULL_VERIFY_VERTICES: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "xcond", version, about = "Rees algebras, the x-condition and vertex cover ideals")]
struct Cli {
    /// Render aligned `key  value` lines instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the report to FILE instead of stdout.
    #[arg(long, short, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis of an ideal file.
    Gb {
        file: PathBuf,
        /// Order spec overriding the file's `order:` line.
        #[arg(long)]
        order: Option<String>,
    },
    /// Defining ideal of the Rees algebra of a cover ideal.
    Rees {
        #[command(flatten)]
        family: FamilyArgs,
        /// Use the weight-first order instead of the family's order.
        #[arg(long)]
        weighted: bool,
    },
    /// The x-condition for the Rees ideal of a cover ideal.
    Xcond {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        weighted: bool,
    },
    /// Componentwise-linearity certificates for the powers I^1..I^kmax.
    Powers {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
        #[arg(long)]
        weighted: bool,
    },
    /// Compare a family's claimed Gröbner basis with the computed one.
    #[command(alias = "verify")]
    VerifyFamily {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Edge module, binomial edge ideal and admissible-path basis of a graph.
    BinomialEdge {
        #[command(flatten)]
        family: FamilyArgs,
        /// `mg`: compare chordality with the x-condition.
        #[arg(long, value_parser = ["mg"])]
        check: Option<String>,
    },
    /// Checks on the two-step complex of the cycle C_r.
    CycleComplex {
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..=7))]
        r: u64,
    },
    /// Covers, chordality and connectivity data of a graph.
    GraphStats {
        #[command(flatten)]
        family: FamilyArgs,
    },
}

/// Outcome of a command: the report and whether every check passed.
struct Outcome {
    report: Value,
    ok: bool,
}

impl Outcome {
    fn new(report: impl Serialize, ok: bool) -> Result<Self> {
        Ok(Self { report: serde_json::to_value(report)?, ok })
    }
}

/// Failure classes mapped to exit codes.
enum Failure {
    Input(anyhow::Error),
    Cap(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let e = e.into();
        if is_cap(&e) {
            Failure::Cap(e)
        } else {
            Failure::Input(e)
        }
    }
}

fn is_cap(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<GroebnerError>().is_some_and(GroebnerError::is_cap)
            || c.downcast_ref::<ReesError>().is_some_and(ReesError::is_cap)
            || c.downcast_ref::<FamilyError>().is_some_and(FamilyError::is_cap)
            || c.downcast_ref::<SymalgError>().is_some_and(SymalgError::is_cap)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = BuchbergerConfig::from_env();
    match run(&cli.command, &config) {
        Ok(outcome) => {
            let text = if cli.pretty {
                pretty::render(&outcome.report)
            } else {
                serde_json::to_string_pretty(&outcome.report).expect("report serializes") + "\n"
            };
            if let Err(e) = emit(cli.output.as_ref(), &text) {
                eprintln!("error: {}", describe(&e));
                return ExitCode::from(2);
            }
            ExitCode::from(if outcome.ok { 0 } else { 1 })
        }
        Err(Failure::Cap(e)) => {
            eprintln!("error: {}", describe(&e));
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {}", describe(&e));
            ExitCode::from(2)
        }
    }
}

/// The error chain joined by `: `, skipping causes already spelled out by their parent.
fn describe(e: &anyhow::Error) -> String {
    let mut out = String::new();
    let mut last = String::new();
    for cause in e.chain() {
        let msg = cause.to_string();
        if !last.contains(&msg) {
            if !out.is_empty() {
                out.push_str(": ");
            }
            out.push_str(&msg);
        }
        last = msg;
    }
    out
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: &Command, config: &BuchbergerConfig) -> Result<Outcome, Failure> {
    Ok(match command {
        Command::Gb { file, order } => cmd_gb(file, order.as_deref(), config)?,
        Command::Rees { family, weighted } => cmd_rees(&family.build()?, *weighted, config)?,
        Command::Xcond { family, weighted } => cmd_xcond(&family.build()?, *weighted, config)?,
        Command::Powers { family, kmax, weighted } => cmd_powers(&family.build()?, *kmax, *weighted, config)?,
        Command::VerifyFamily { family } => cmd_verify(&family.build()?, config)?,
        Command::BinomialEdge { family, check } => cmd_binomial_edge(&family.build()?, check.is_some(), config)?,
        Command::CycleComplex { r } => {
            let report = cycle_complex_checks(*r as usize)?;
            let ok = report.product_zero
                && report.minor_is_x1_to_xr1
                && report.gcd_is_one
                && report.rank_phi1 == report.r - 1
                && report.rank_phi2 == 1;
            Outcome::new(report, ok)?
        }
        Command::GraphStats { family } => cmd_graph_stats(&family.build()?)?,
    })
}

fn cmd_gb(file: &PathBuf, order: Option<&str>, config: &BuchbergerConfig) -> Result<Outcome, Failure> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let mut ideal = parse_ideal_file(&text)?;
    if let Some(spec) = order {
        ideal.spec = OrderSpec::parse(spec)?;
        ideal.order = ideal.spec.compile(&ideal.ctx)?;
        ideal.gens = ideal.gens.into_iter().map(|g| g.resort(&ideal.order)).collect();
    }
    let gens: Vec<_> = ideal.gens.into_iter().filter(|g| !g.is_zero()).collect();
    let gb = reduced_groebner_basis(&gens, &ideal.order, config)?;
    let report = json!({
        "vars": ideal.ctx.names(),
        "order": ideal.spec.to_string(),
        "size": gb.len(),
        "gb": gb.elements().iter().map(|g| g.render(&ideal.ctx)).collect::<Vec<_>>(),
        "initial_ideal": gb.initial_ideal().render(&ideal.ctx),
    });
    Ok(Outcome { report, ok: true })
}

/// The family's own claim, when the graph carries a family tag.
fn claim_of(g: &Graph) -> Result<Option<ClaimedBasis>, FamilyError> {
    Ok(match g.family() {
        Family::Path { n } => Some(path_claimed(*n)?),
        Family::Biclique { p, q, r } => Some(biclique_claimed(*p, *q, *r)?),
        Family::CameronWalker { .. } => Some(cw_claimed(g)?),
        Family::Custom => None,
    })
}

/// Rees presentation of the cover ideal: the family's order for tagged graphs,
/// the default block order for custom ones, or the weight-first order.
fn rees_of(g: &Graph, weighted: bool, config: &BuchbergerConfig) -> Result<ReesPresentation, Failure> {
    let claim = claim_of(g)?;
    if let (Some(c), false) = (&claim, weighted) {
        return Ok(c.presentation(config)?);
    }
    let (base, gens) = match &claim {
        Some(c) => (c.base().clone(), c.gens().to_vec()),
        None => (VarContext::new(&vertex_vars(g))?, cover_monomials(g, &minimal_vertex_covers(g))),
    };
    Ok(if weighted {
        ReesPresentation::with_weighted_order(&base, gens, config)?
    } else {
        ReesPresentation::with_default_order(&base, gens, config)?
    })
}

/// Ring variable names for a graph's vertices: numeric vertex `k` becomes `xk`.
fn vertex_vars(g: &Graph) -> Vec<String> {
    g.names()
        .iter()
        .map(|v| if v.chars().all(|c| c.is_ascii_digit()) { format!("x{v}") } else { v.clone() })
        .collect()
}

fn cmd_rees(g: &Graph, weighted: bool, config: &BuchbergerConfig) -> Result<Outcome, Failure> {
    let pres = rees_of(g, weighted, config)?;
    let pi_sound = pres.pi_sound()?;
    let x = pres.x_condition();
    let ctx = pres.ctx();
    let report = json!({
        "family": g.family(),
        "generators": pres.gens().iter().map(|u| u.render(pres.base())).collect::<Vec<_>>(),
        "order": pres.spec().to_string(),
        "size": pres.gb().len(),
        "gb": pres.gb().elements().iter().map(|f| f.render(ctx)).collect::<Vec<_>>(),
        "initial_ideal": pres.initial_ideal().render(ctx),
        "pi_sound": pi_sound,
        "quadratic": pres.is_quadratic(),
        "x_condition": x.holds,
    });
    Ok(Outcome { report, ok: pi_sound })
}

fn cmd_xcond(g: &Graph, weighted: bool, config: &BuchbergerConfig) -> Result<Outcome, Failure> {
    let pres = rees_of(g, weighted, config)?;
    let x = pres.x_condition();
    let report = json!({
        "family": g.family(),
        "order": pres.spec().to_string(),
        "x_condition": x.holds,
        "violations": x.violations.iter().map(|m| m.render(pres.ctx())).collect::<Vec<_>>(),
        "pure_y_initials": pres.pure_y_initials().iter().map(|m| m.render(pres.ctx())).collect::<Vec<_>>(),
        "quadratic": pres.is_quadratic(),
    });
    Ok(Outcome { report, ok: x.holds })
}

fn cmd_powers(g: &Graph, kmax: u32, weighted: bool, config: &BuchbergerConfig) -> Result<Outcome, Failure> {
    if kmax == 0 {
        return Ok(Outcome { report: json!({ "family": g.family(), "powers": [] }), ok: true });
    }
    let pres = rees_of(g, weighted, config)?;
    let mut certs = Vec::new();
    for k in 1..=kmax {
        certs.push(pres.componentwise_certificate(k)?);
    }
    let ok = certs.iter().all(|c| c.certified.is_some() && c.oracle_match != Some(false));
    let report = json!({
        "family": g.family(),
        "order": pres.spec().to_string(),
        "powers": certs,
    });
    Ok(Outcome { report, ok })
}

fn cmd_verify(g: &Graph, config: &BuchbergerConfig) -> Result<Outcome, Failure> {
    let claim = claim_of(g)?.ok_or_else(|| anyhow!("verify-family needs --path, --biclique or --cw"))?;
    if matches!(g.family(), Family::CameronWalker { .. }) && g.n() > CW_FULL_VERIFY_VERTICES {
        let quadratic = claim.initials_quadratic();
        let balanced = claim.binomials_balanced();
        let report = json!({
            "family": g.family(),
            "mode": "combinatorial",
            "vertices": g.n(),
            "covers": claim.gens().len(),
            "claimed_initials": claim.claimed_initial_ideal().len(),
            "initials_quadratic": quadratic,
            "binomials_balanced": balanced,
        });
        return Ok(Outcome { report, ok: quadratic && balanced });
    }
    let pres = claim.presentation(config)?;
    let report = verify_claim(&claim, &pres)?;
    let ok = report.initial_match && report.membership_ok;
    Outcome::new(report, ok).map_err(Failure::from)
}

fn cmd_binomial_edge(g: &Graph, check_mg: bool, config: &BuchbergerConfig) -> Result<Outcome, Failure> {
    let module = edge_module(g)?;
    let paths = admissible_paths(g)?;
    let basis = hhhkr_basis(g)?;
    let chordal = peo(g).is_some();
    let mut report = json!({
        "vertices": g.names(),
        "edges": g.edge_count(),
        "relations": module.render_relations(),
        "chordal": chordal,
        "admissible_paths": paths.iter().map(|p| p.vertices()).collect::<Vec<_>>(),
        "admissible_basis": basis.elements().iter().map(|f| f.render(&module.ctx)).collect::<Vec<_>>(),
    });
    if chordal {
        report["depth"] = serde_json::to_value(depth_bound_report(g)?)?;
    }
    let mut ok = true;
    if check_mg {
        let mg = mg_equivalence_check(g, config)?;
        ok = mg.equivalence_holds && mg.hhhkr_matches;
        report["mg"] = serde_json::to_value(mg)?;
    }
    Ok(Outcome { report, ok })
}

fn cmd_graph_stats(g: &Graph) -> Result<Outcome, Failure> {
    let covers = minimal_vertex_covers(g);
    let cover_names: Vec<Vec<&str>> =
        (0..covers.len()).map(|k| covers.vertices(k).into_iter().map(|v| g.name(v)).collect()).collect();
    let order = peo(g);
    let report = json!({
        "family": g.family(),
        "vertices": g.n(),
        "edges": g.edge_count(),
        "minimal_vertex_covers": cover_names,
        "chordal": order.is_some(),
        "perfect_elimination_order": order.map(|o| o.into_iter().map(|v| g.name(v).to_string()).collect::<Vec<_>>()),
        "connectivity": connectivity_profile(g)?,
    });
    Ok(Outcome { report, ok: true })
}
