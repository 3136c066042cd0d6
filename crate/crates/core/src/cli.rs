//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 input error, 3 resource guard (search budget or size limit).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::engine::bounds::{cover_chi_containment_suite, summarize_chi_suite};
use crate::engine::checks::tech3_containment_check;
use crate::engine::{
    check_containment, exact_cover_resurgence, exact_edge_resurgence, ideal_resurgence, sweep, ReportConfig,
    ResurgenceReport, SweepConfig,
};
use crate::error::Error;
use crate::graph::format::{parse_graph, parse_hypergraph};
use crate::graph::{builtin_graph, classify, invariants, Graph, Hypergraph};
use crate::ideal::format::parse_ideal;
use crate::ideal::MonomialIdeal;
use crate::rational;
use crate::symbolic::{symbolic_power, symbolic_power_cross_checked};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "resurgence", version, about = "Symbolic powers, containments and resurgence of graph ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON on standard output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for sweeps; defaults to the available parallelism.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graph or hypergraph invariants and class recognition.
    Invariants(Target),
    /// Generators, initial degree, big height and minimal primes.
    Ideal(Target),
    /// Minimal generators of the symbolic power I^(s).
    Symbolic {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        s: u32,
        /// Compute with both engines and fail on disagreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// Decide I^(s) ⊆ I^t, or run a containment family.
    Containment {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        t: Option<u32>,
        /// Emit a factorisation for every generator when the containment holds.
        #[arg(long)]
        certify: bool,
        /// Chromatic family J^(2r-2c) ⊆ J^r and J^(2r-2c-1) ⊆ J^r (cover ideals).
        #[arg(long)]
        c: Option<u32>,
        /// Values of r for the chromatic family; default chi and chi + 1.
        #[arg(long, value_delimiter = ',')]
        r: Vec<u32>,
        /// J_n(G)^b ⊆ I(G)^(bn + ceil((b - k_n)/2)) (edge ideals).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        b: Option<u32>,
    },
    /// Evaluate every containment I^(s) ⊆ I^t in a box.
    Sweep {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 10)]
        s_max: u32,
        #[arg(long, default_value_t = 8)]
        t_max: u32,
    },
    /// Resurgence and asymptotic resurgence with provenance.
    Resurgence {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 6)]
        s_max: u32,
        #[arg(long, default_value_t = 5)]
        t_max: u32,
        /// Skip the witness sweep.
        #[arg(long)]
        no_sweep: bool,
    },
    /// Run the acceptance suite, then check every corpus file in DIR.
    VerifySuite {
        dir: Option<PathBuf>,
        /// Only run the corpus checks.
        #[arg(long)]
        corpus_only: bool,
    },
}

#[derive(Debug, Args)]
pub struct Target {
    /// `graph:NAME` for a builtin graph, or a file: `*.ideal` for an ideal,
    /// `*.hg` for a hypergraph, anything else for a graph.
    pub input: String,
    /// Use the cover ideal J(G).
    #[arg(long, conflicts_with = "edge")]
    pub cover: bool,
    /// Use the edge ideal I(G).
    #[arg(long)]
    pub edge: bool,
    /// Read the file as a hypergraph regardless of extension.
    #[arg(long)]
    pub hypergraph: bool,
}

/// Failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e.is_resource_guard() { EXIT_RESOURCE } else { EXIT_INPUT };
        CliError { code, message: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError { code: EXIT_INPUT, message: msg.into() }
}

enum Input {
    Graph(Graph),
    Hypergraph(Hypergraph),
    Ideal(MonomialIdeal),
}

fn load(target: &Target) -> Result<Input, CliError> {
    if let Some(name) = target.input.strip_prefix("graph:") {
        return Ok(Input::Graph(builtin_graph(name)?));
    }
    let path = Path::new(&target.input);
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    Ok(if ext == "ideal" {
        Input::Ideal(parse_ideal(&text)?)
    } else if ext == "hg" || target.hypergraph {
        Input::Hypergraph(parse_hypergraph(&text)?)
    } else {
        Input::Graph(parse_graph(&text)?)
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Cover,
    Edge,
    Plain,
}

/// The ideal a verb works on, after checking the `--cover/--edge` flags
/// against the input type.
fn select(target: &Target, input: &Input) -> Result<(MonomialIdeal, Kind), CliError> {
    match input {
        Input::Graph(g) => match (target.cover, target.edge) {
            (true, _) => Ok((g.cover_ideal()?, Kind::Cover)),
            (_, true) => Ok((g.edge_ideal()?, Kind::Edge)),
            _ => Err(usage("graph input needs --cover or --edge")),
        },
        Input::Hypergraph(h) => {
            if target.edge {
                return Err(usage("hypergraph input supports the cover ideal only"));
            }
            Ok((h.cover_ideal()?, Kind::Cover))
        }
        Input::Ideal(i) => {
            if target.cover || target.edge {
                return Err(usage("--cover/--edge apply to graph inputs only"));
            }
            Ok((i.clone(), Kind::Plain))
        }
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Result<(), CliError> {
    if json {
        println!("{}", serde_json::to_string_pretty(value).map_err(|e| usage(e.to_string()))?);
    } else {
        print!("{}", text());
    }
    Ok(())
}

/// Parse arguments, run, and return the exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

pub fn run(cli: &Cli) -> Result<i32, CliError> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(usage("--threads must be positive"));
        }
        // a second initialisation in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match &cli.command {
        Command::Invariants(target) => invariants_verb(cli.json, target),
        Command::Ideal(target) => ideal_verb(cli.json, target),
        Command::Symbolic { target, s, cross_check } => symbolic_verb(cli.json, target, *s, *cross_check),
        Command::Containment { target, s, t, certify, c, r, n, b } => {
            containment_verb(cli.json, target, (*s, *t, *certify), (*c, r), (*n, *b))
        }
        Command::Sweep { target, s_max, t_max } => sweep_verb(cli.json, target, *s_max, *t_max),
        Command::Resurgence { target, s_max, t_max, no_sweep } => {
            resurgence_verb(cli.json, target, *s_max, *t_max, *no_sweep)
        }
        Command::VerifySuite { dir, corpus_only } => verify_verb(cli.json, dir.as_deref(), *corpus_only),
    }
}

fn invariants_verb(json: bool, target: &Target) -> Result<i32, CliError> {
    if target.cover || target.edge {
        return Err(usage("invariants takes no --cover/--edge"));
    }
    match load(target)? {
        Input::Graph(g) => {
            let components = g.components();
            let value = if components.len() == 1 {
                serde_json::to_value(classify(&g)?).map_err(Error::from)?
            } else {
                let parts = components
                    .iter()
                    .map(|c| {
                        let h = g.induced_subgraph(c)?;
                        let names: Vec<&str> = c.iter().map(|&v| g.name(v)).collect();
                        Ok(json!({ "vertices": names, "classification": classify(&h)? }))
                    })
                    .collect::<crate::Result<Vec<_>>>()?;
                json!({ "components": parts, "bipartite": invariants::is_bipartite(&g) })
            };
            emit(json, &value, || graph_text(&g, &value))?;
        }
        Input::Hypergraph(h) => {
            let j = h.cover_ideal()?;
            let value = json!({
                "vertices": h.num_vertices(),
                "edges": h.edges().len(),
                "chi": h.chromatic_number()?,
                "max_edge_size": h.max_edge_size(),
                "big_height": j.big_height()?,
            });
            emit(json, &value, || {
                format!(
                    "hypergraph: {} vertices, {} edges\nchi = {}\nbig height of J(H) = {}\n",
                    value["vertices"], value["edges"], value["chi"], value["big_height"]
                )
            })?;
        }
        Input::Ideal(_) => return Err(usage("invariants needs a graph or hypergraph")),
    }
    Ok(EXIT_OK)
}

fn graph_text(g: &Graph, value: &serde_json::Value) -> String {
    let mut out = format!("graph: {} vertices, {} edges\n", g.num_vertices(), g.num_edges());
    let field = |v: &serde_json::Value, k: &str| v.get(k).map(|x| x.to_string()).unwrap_or_default();
    let show = |out: &mut String, v: &serde_json::Value| {
        for k in ["kind", "chi", "omega", "independence", "bipartite", "cactus", "smallest_odd_cycle", "edge_class"] {
            if let Some(x) = v.get(k).filter(|x| !x.is_null()) {
                out.push_str(&format!("  {k}: {x}\n"));
            }
        }
    };
    match value.get("components").and_then(|c| c.as_array()) {
        Some(parts) => {
            for p in parts {
                out.push_str(&format!("component {}\n", field(p, "vertices")));
                show(&mut out, &p["classification"]);
            }
        }
        None => show(&mut out, value),
    }
    out
}

fn ideal_json(i: &MonomialIdeal) -> crate::Result<serde_json::Value> {
    let vars = i.ambient();
    let primes: Vec<Vec<&str>> =
        i.minimal_primes()?.iter().map(|p| p.iter().map(|&v| vars.name(v)).collect()).collect();
    Ok(json!({
        "variables": vars.names(),
        "generators": i.display_generators(),
        "alpha": i.alpha()?,
        "big_height": i.big_height()?,
        "minimal_primes": primes,
    }))
}

fn ideal_verb(json: bool, target: &Target) -> Result<i32, CliError> {
    let input = load(target)?;
    let (i, _) = select(target, &input)?;
    i.require_squarefree_proper()?;
    let value = ideal_json(&i)?;
    emit(json, &value, || {
        format!(
            "{} generators: {}\nalpha = {}, big height = {}\nminimal primes: {}\n",
            i.num_generators(),
            i.display_generators().join(", "),
            value["alpha"],
            value["big_height"],
            value["minimal_primes"]
        )
    })?;
    Ok(EXIT_OK)
}

fn symbolic_verb(json: bool, target: &Target, s: u32, cross_check: bool) -> Result<i32, CliError> {
    if s == 0 {
        return Err(usage("--s must be positive"));
    }
    let input = load(target)?;
    let (i, _) = select(target, &input)?;
    let sym = if cross_check { symbolic_power_cross_checked(&i, s)? } else { symbolic_power(&i, s)? };
    let value = json!({
        "s": s,
        "generators": sym.display_generators(),
        "alpha": sym.alpha()?,
        "equals_ordinary": sym.equals(&i.power(s)?)?,
        "cross_checked": cross_check,
    });
    emit(json, &value, || {
        let mut out = format!("I^({s}): {} generators, alpha = {}\n", sym.num_generators(), value["alpha"]);
        for g in sym.display_generators() {
            out.push_str(&format!("  {g}\n"));
        }
        out.push_str(&format!("equals I^{s}: {}\n", value["equals_ordinary"]));
        out
    })?;
    Ok(EXIT_OK)
}

type Pair = (Option<u32>, Option<u32>, bool);

fn containment_verb(
    json: bool,
    target: &Target,
    (s, t, certify): Pair,
    (c, rs): (Option<u32>, &Vec<u32>),
    (n, b): (Option<usize>, Option<u32>),
) -> Result<i32, CliError> {
    let modes = [s.is_some() || t.is_some(), c.is_some(), n.is_some() || b.is_some()];
    if modes.iter().filter(|&&m| m).count() != 1 {
        return Err(usage("give exactly one of --s/--t, --c, or --n/--b"));
    }
    if !rs.is_empty() && c.is_none() {
        return Err(usage("--r needs --c"));
    }
    if certify && s.is_none() {
        return Err(usage("--certify applies to --s/--t"));
    }
    let input = load(target)?;
    if let Some(c) = c {
        let Input::Graph(g) = &input else { return Err(usage("--c needs a graph with --cover")) };
        if !target.cover {
            return Err(usage("--c needs --cover"));
        }
        let chi = invariants::chromatic_number(g)? as u32;
        let rs = if rs.is_empty() { vec![chi, chi + 1] } else { rs.clone() };
        let suite = cover_chi_containment_suite(g, c, rs)?;
        let vars = g.vertices();
        let rows: Vec<serde_json::Value> = suite
            .iter()
            .map(|e| {
                json!({
                    "family": e.family, "r": e.r, "in_hypothesis": e.in_hypothesis,
                    "result": e.result.view(vars),
                })
            })
            .collect();
        let summary = summarize_chi_suite(&suite);
        let value = json!({ "chi": chi, "c": c, "entries": rows, "summary": summary });
        emit(json, &value, || {
            let mut out = format!("chi = {chi}, c = {c}\n");
            for e in &suite {
                out.push_str(&format!(
                    "  family {} r = {}: J^({}) ⊆ J^{} {}{}\n",
                    e.family,
                    e.r,
                    e.result.s,
                    e.result.t,
                    if e.result.holds { "holds" } else { "fails" },
                    if e.in_hypothesis { "" } else { " (outside hypothesis)" }
                ));
            }
            out
        })?;
        return Ok(EXIT_OK);
    }
    if let (Some(n), Some(b)) = (n, b) {
        let Input::Graph(g) = &input else { return Err(usage("--n/--b need a graph with --edge")) };
        if !target.edge {
            return Err(usage("--n/--b need --edge"));
        }
        let v = tech3_containment_check(g, n, b)?;
        let value = json!({
            "n": v.n, "k": v.k, "b": v.b, "t": v.t, "holds": v.holds,
            "witness": v.witness.as_ref().map(|w| w.display(g.vertices()).to_string()),
        });
        emit(json, &value, || {
            format!("J_{n}^{b} ⊆ I^{} (k = {}): {}\n", v.t, v.k, if v.holds { "holds" } else { "fails" })
        })?;
        return Ok(EXIT_OK);
    }
    let (Some(s), Some(t)) = (s, t) else { return Err(usage("--s and --t go together")) };
    let (i, _) = select(target, &input)?;
    let r = check_containment(&i, s, t, certify)?;
    let view = r.view(i.ambient());
    emit(json, &view, || {
        let mut out = format!("I^({s}) ⊆ I^{t}: {}\n", if r.holds { "holds" } else { "fails" });
        if let Some(w) = &view.witness {
            out.push_str(&format!("witness: {w}\n"));
        }
        if let Some(cert) = &view.certificate {
            for (g, f) in cert {
                out.push_str(&format!("  {g} <- {}\n", f.join(" * ")));
            }
        }
        out
    })?;
    Ok(EXIT_OK)
}

fn sweep_verb(json: bool, target: &Target, s_max: u32, t_max: u32) -> Result<i32, CliError> {
    if s_max == 0 || t_max == 0 {
        return Err(usage("--s-max and --t-max must be positive"));
    }
    let input = load(target)?;
    let (i, _) = select(target, &input)?;
    let result = sweep(&i, SweepConfig::new(s_max, t_max))?;
    let vars = i.ambient();
    let cells: Vec<serde_json::Value> = result
        .cells
        .iter()
        .map(|c| {
            json!({
                "s": c.s, "t": c.t, "holds": c.holds, "inferred": c.inferred,
                "witness": c.witness.as_ref().map(|w| w.display(vars).to_string()),
            })
        })
        .collect();
    let truncated = result.truncated();
    let value = json!({
        "s_max": s_max, "t_max": t_max,
        "lower_bound": rational::format(&result.lower_bound()),
        "cells": cells, "truncated": truncated,
    });
    emit(json, &value, || {
        let mut out = format!("sweep s ≤ {s_max}, t ≤ {t_max}\n");
        for c in result.failures() {
            out.push_str(&format!("  fails ({}, {})\n", c.s, c.t));
        }
        out.push_str(&format!("lower bound from failures: {}\n", rational::format(&result.lower_bound())));
        if !truncated.is_empty() {
            out.push_str(&format!("truncated cells: {truncated:?}\n"));
        }
        out
    })?;
    Ok(if truncated.is_empty() { EXIT_OK } else { EXIT_RESOURCE })
}

fn resurgence_verb(json: bool, target: &Target, s_max: u32, t_max: u32, no_sweep: bool) -> Result<i32, CliError> {
    let cfg = if no_sweep {
        ReportConfig::without_sweep()
    } else {
        if s_max == 0 || t_max == 0 {
            return Err(usage("--s-max and --t-max must be positive"));
        }
        ReportConfig::with_sweep(SweepConfig::new(s_max, t_max))
    };
    let input = load(target)?;
    let (i, kind) = select(target, &input)?;
    let report = match (&input, kind) {
        (Input::Graph(g), Kind::Cover) => exact_cover_resurgence(g, &cfg)?,
        (Input::Graph(g), Kind::Edge) => exact_edge_resurgence(g, &cfg)?,
        (Input::Hypergraph(h), _) => ideal_resurgence(&i, Some(h), &cfg)?,
        _ => ideal_resurgence(&i, None, &cfg)?,
    };
    if !report.verify()? {
        return Err(CliError { code: EXIT_VERIFICATION, message: "report failed re-verification".into() });
    }
    emit(json, &report, || report_text(&report))?;
    Ok(if report.is_truncated() { EXIT_RESOURCE } else { EXIT_OK })
}

fn report_text(r: &ResurgenceReport) -> String {
    let mut out = format!("{}\n", r.ideal);
    for (name, v) in [("rho", &r.rho), ("rho_a", &r.rho_a)] {
        out.push_str(&format!("{name} = {}\n", v.summary()));
        for p in &v.provenance {
            out.push_str(&format!(
                "  {:?} {} [{}] {}\n",
                p.role,
                rational::format(&p.value),
                p.tag,
                p.inputs
            ));
        }
    }
    for w in &r.witnesses {
        out.push_str(&format!("witness ({}, {}): {}\n", w.s, w.t, w.monomial));
    }
    for f in &r.flags {
        out.push_str(&format!("flag: {f}\n"));
    }
    out
}

fn verify_verb(json: bool, dir: Option<&Path>, corpus_only: bool) -> Result<i32, CliError> {
    if corpus_only && dir.is_none() {
        return Err(usage("--corpus-only needs a directory"));
    }
    let criteria = if corpus_only { Vec::new() } else { verify::run_all() };
    let corpus = match dir {
        Some(d) => verify::check_corpus(d, SweepConfig::new(5, 4))?,
        None => Vec::new(),
    };
    let passed = criteria.iter().all(|o| o.passed) && corpus.iter().all(|o| o.passed);
    let value = json!({ "criteria": criteria, "corpus": corpus, "passed": passed });
    emit(json, &value, || {
        let mut out = String::new();
        for o in &criteria {
            out.push_str(&format!("{o}\n"));
        }
        for o in &corpus {
            out.push_str(&format!("{o}\n"));
        }
        out.push_str(if passed { "all checks passed\n" } else { "some checks failed\n" });
        out
    })?;
    Ok(if passed { EXIT_OK } else { EXIT_VERIFICATION })
}
