use crate::{CmdResult, Command, SearchFlags};
use anyhow::Context;
use arrowkit_core::arrowing::{
    arrows, ramsey_number, to_cnf, ArrowOptions, EdgeColouring, Outcome, RamseyOutcome, SatResult,
    TargetPattern,
};
use arrowkit_core::focusing::{iterated_focus, verify_focus_report, FocusOutcome};
use arrowkit_core::gadgets::{
    build_g0, build_pendant_gadget, build_product, canonical_colouring, check_canonical_colouring,
    gen_hypergraph, plant_copies, schedule_params, schedule_params_computed, BlockGraph,
    ColouringKind, ProductMode,
};
use arrowkit_core::graph::{encode_graph6, parse_graph_text, Graph, Hypergraph};
use arrowkit_core::minimal::{
    degree_survey, degree_survey_from, distinguish, is_minimal, minimalize,
};
use arrowkit_core::Error;
use clap::Subcommand;
use num_rational::Ratio;
use serde_json::{json, Value};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const UNDECIDED: u8 = 10;
pub const INFEASIBLE: u8 = 11;
pub const BAD_INPUT: u8 = 3;

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn with_code(v: Value, code: u8) -> Self {
        Self {
            stdout: format!("{v}\n"),
            code,
        }
    }
}

pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Undecided { .. }) => UNDECIDED,
        Some(Error::Infeasible(_)) => INFEASIBLE,
        _ => BAD_INPUT,
    }
}

#[derive(Subcommand)]
pub enum GadgetCommand {
    /// Clique H = K_k joined to k-2 copies of a block.
    G0 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        f: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// k-1 copies of the g0 gadget on block f, tied together with a pendant vertex.
    Pendant {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        f: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Clique V_H joined to blocks laid out along a base graph.
    Product {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        /// R(k, k-t+1); computed when absent.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        g0: String,
        /// One block per base vertex, or a single block used for all.
        #[arg(long = "block", required = true)]
        blocks: Vec<String>,
        /// Certify every block's eps-arrowing before building.
        #[arg(long)]
        strict: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Random uniform hypergraph with large girth and small independence number.
    Hypergraph {
        #[arg(long)]
        u: usize,
        #[arg(long)]
        girth: usize,
        /// A fraction such as `4/5` or `0.8`.
        #[arg(long)]
        eps: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        retries: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// One copy of f0 inside each hyperedge.
    Plant {
        #[arg(long)]
        f0: String,
        #[arg(long)]
        hypergraph: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn builtin(name: &str) -> Option<Graph> {
    if name == "petersen" {
        return Some(Graph::petersen());
    }
    let (family, rest) = name.split_at(name.char_indices().nth(1)?.0);
    let n: usize = rest.parse().ok()?;
    match family {
        "K" => Some(Graph::complete(n)),
        "C" if n >= 3 => Some(Graph::cycle(n)),
        "P" => Some(Graph::path(n)),
        "E" => Some(Graph::empty(n)),
        _ => None,
    }
}

/// A graph file (graph6, edge list, or the graph under a colouring file),
/// or a built-in name such as `K6`,
/// `C5`, `P4`, `E3` or `petersen` when no such file exists.
fn load_graph(source: &str) -> anyhow::Result<Graph> {
    let path = Path::new(source);
    if !path.exists() {
        if let Some(g) = builtin(source) {
            return Ok(g);
        }
    }
    let text = read(path)?;
    match parse_graph_text(&text) {
        Ok(g) => Ok(g),
        Err(e) => match EdgeColouring::from_text(&text) {
            Ok(c) => Ok(c.graph().clone()),
            Err(_) => Err(anyhow::Error::from(e).context(format!("parsing {source}"))),
        },
    }
}

fn pattern(s: &str) -> anyhow::Result<TargetPattern> {
    Ok(TargetPattern::parse(s)?)
}

fn load_gadget(path: &Path) -> anyhow::Result<BlockGraph> {
    BlockGraph::from_json(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_colouring(path: &Path) -> anyhow::Result<EdgeColouring> {
    EdgeColouring::from_text(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn parse_eps(s: &str) -> anyhow::Result<Ratio<u64>> {
    let bad = || Error::InvalidInput(format!("cannot read `{s}` as a fraction"));
    if let Some((a, b)) = s.split_once('/') {
        let (a, b): (u64, u64) = (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        );
        if b == 0 {
            return Err(bad().into());
        }
        return Ok(Ratio::new(a, b));
    }
    let (whole, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad().into());
    }
    let digits: u64 = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    Ok(Ratio::new(digits, 10u64.pow(frac.len() as u32)))
}

struct Clock {
    start: Instant,
    enabled: bool,
}

impl Clock {
    fn start(flags: &SearchFlags) -> Self {
        Self {
            start: Instant::now(),
            enabled: !flags.no_timing,
        }
    }

    fn stamp(&self, v: &mut Value) {
        if self.enabled {
            v["elapsed_ms"] = json!(self.start.elapsed().as_secs_f64() * 1000.0);
        }
    }
}

pub fn run(cmd: &Command, flags: &SearchFlags) -> CmdResult {
    let opts = flags.options();
    let clock = Clock::start(flags);
    let mut out = match cmd {
        Command::Arrow {
            graph,
            red,
            blue,
            witness,
        } => arrow(
            &load_graph(graph)?,
            &pattern(red)?,
            &pattern(blue)?,
            witness.as_deref(),
            &opts,
        )?,
        Command::Ramsey { red, blue } => {
            match ramsey_number(&pattern(red)?, &pattern(blue)?, &opts) {
                RamseyOutcome::Determined(n) => (json!({ "n": n }), 0),
                RamseyOutcome::Undecided { resolved } => (
                    json!({ "result": "undecided", "resolved": resolved }),
                    UNDECIDED,
                ),
            }
        }
        Command::Minimal {
            graph,
            pattern: p,
            minimalize: shrink,
            output,
        } => {
            let g = load_graph(graph)?;
            let p = pattern(p)?;
            if *shrink {
                let h = minimalize(&g, &p, &opts)?;
                let g6 = encode_graph6(&h);
                if let Some(path) = output {
                    write(path, &format!("{g6}\n"))?;
                }
                (json!({ "graph6": g6, "n": h.n(), "m": h.edge_count() }), 0)
            } else {
                (serde_json::to_value(is_minimal(&g, &p, &opts)?)?, 0)
            }
        }
        Command::Survey {
            pattern: p,
            nmax,
            input,
        } => {
            let p = pattern(p)?;
            let survey = match input {
                Some(path) => {
                    let graphs = read(path)?
                        .lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty())
                        .map(parse_graph_text)
                        .collect::<Result<Vec<_>, _>>()?;
                    degree_survey_from(&p, graphs.into_iter().filter(|g| g.n() <= *nmax), &opts)
                }
                None => degree_survey(&p, *nmax, &opts)?,
            };
            let code = if survey.summary.complete {
                0
            } else {
                UNDECIDED
            };
            return Ok(Output {
                stdout: survey.to_json_lines(),
                code,
            });
        }
        Command::Distinguish { h1, h2, nmax } => {
            let d = distinguish(&pattern(h1)?, &pattern(h2)?, *nmax, &opts)?;
            let code = if d.graph.is_none() && !d.complete {
                UNDECIDED
            } else {
                0
            };
            let v = json!({
                "graph6": d.graph.as_ref().map(encode_graph6),
                "examined": d.examined,
                "complete": d.complete,
            });
            (v, code)
        }
        Command::Gadget { kind } => (gadget(kind, &opts)?, 0),
        Command::Colour {
            kind,
            gadget,
            output,
            verify,
        } => {
            let kind: ColouringKind = kind.parse()?;
            let bg = load_gadget(gadget)?;
            let c = match verify {
                Some(path) => load_colouring(path)?,
                None => canonical_colouring(kind, &bg)?,
            };
            if verify.is_none() {
                if let Some(path) = output {
                    write(path, &c.to_text())?;
                }
            }
            let checks = check_canonical_colouring(kind, &bg, &c)?;
            let clean = checks.iter().all(|r| r.passed);
            (
                json!({
                    "kind": kind.to_string(),
                    "edges": c.edges().len(),
                    "clean": clean,
                    "checks": checks,
                }),
                0,
            )
        }
        Command::Focus {
            gadget,
            colouring,
            output,
        } => {
            let bg = load_gadget(gadget)?;
            let chi = load_colouring(colouring)?;
            match iterated_focus(&bg, &chi)? {
                FocusOutcome::Report(r) => {
                    let violations = verify_focus_report(&bg, &chi, &r)?;
                    if let Some(path) = output {
                        write(path, &serde_json::to_string_pretty(&r)?)?;
                    }
                    (
                        json!({ "result": "report", "report": r, "violations": violations }),
                        0,
                    )
                }
                FocusOutcome::Failed(f) => (
                    json!({ "result": "failed", "block": f.block, "size": f.size }),
                    0,
                ),
            }
        }
        Command::Cnf {
            graph,
            red,
            blue,
            output,
            solve,
            witness,
        } => {
            let cnf = to_cnf(&load_graph(graph)?, &pattern(red)?, &pattern(blue)?)?;
            write(output, &cnf.to_dimacs())?;
            let mut v = json!({
                "variables": cnf.variable_count(),
                "clauses": cnf.clauses().len(),
            });
            if *solve {
                match cnf.solve() {
                    SatResult::Sat(model) => {
                        v["sat"] = json!(true);
                        if let Some(path) = witness {
                            let a: Vec<Option<bool>> = model.into_iter().map(Some).collect();
                            let w = arrowkit_core::arrowing::decode_model(&cnf, &a)?;
                            write(path, &w.to_text())?;
                        }
                    }
                    SatResult::Unsat => v["sat"] = json!(false),
                }
            }
            (v, 0)
        }
    };
    clock.stamp(&mut out.0);
    Ok(Output::with_code(out.0, out.1))
}

fn arrow(
    g: &Graph,
    red: &TargetPattern,
    blue: &TargetPattern,
    witness: Option<&Path>,
    opts: &ArrowOptions,
) -> anyhow::Result<(Value, u8)> {
    let v = arrows(g, red, blue, opts);
    let (result, code) = match &v.outcome {
        Outcome::Arrow => ("arrow", 0),
        Outcome::NotArrow(w) => {
            if let Some(path) = witness {
                write(path, &w.to_text())?;
            }
            ("not-arrow", 0)
        }
        Outcome::Undecided => ("undecided", UNDECIDED),
    };
    Ok((json!({ "result": result, "nodes": v.stats.nodes }), code))
}

fn summary(bg: &BlockGraph, output: &Path) -> anyhow::Result<Value> {
    write(output, &bg.to_json())?;
    Ok(json!({
        "n": bg.graph.n(),
        "m": bg.graph.edge_count(),
        "graph6": encode_graph6(&bg.graph),
        "blocks": bg.blocks.len(),
    }))
}

fn gadget(cmd: &GadgetCommand, opts: &ArrowOptions) -> anyhow::Result<Value> {
    match cmd {
        GadgetCommand::G0 { k, f, output } => summary(&build_g0(*k, &load_graph(f)?)?, output),
        GadgetCommand::Pendant { k, f, output } => {
            let part = build_g0(*k, &load_graph(f)?)?;
            let parts = vec![part; k.saturating_sub(1)];
            let bg = build_pendant_gadget(*k, &parts)?;
            let mut v = summary(&bg, output)?;
            v["degree_v"] = json!(bg.graph.degree(bg.graph.n() - 1));
            Ok(v)
        }
        GadgetCommand::Product {
            k,
            t,
            r,
            g0,
            blocks,
            strict,
            output,
        } => {
            let g0 = load_graph(g0)?;
            let mut fs = blocks
                .iter()
                .map(|b| load_graph(b))
                .collect::<anyhow::Result<Vec<_>>>()?;
            if fs.len() == 1 {
                fs = vec![fs[0].clone(); g0.n()];
            }
            let sizes: Vec<usize> = fs.iter().map(Graph::n).collect();
            let params = match r {
                Some(r) => schedule_params(*k, *t, *r, &sizes)?,
                None => schedule_params_computed(*k, *t, &sizes, opts)?,
            };
            let mode = if *strict {
                ProductMode::Strict
            } else {
                ProductMode::Relaxed
            };
            let bg = build_product(&params, &g0, &fs, mode, opts)?;
            let mut v = summary(&bg, output)?;
            v["params"] = serde_json::to_value(&params)?;
            Ok(v)
        }
        GadgetCommand::Hypergraph {
            u,
            girth,
            eps,
            n,
            seed,
            retries,
            output,
        } => {
            let hg = gen_hypergraph(*u, *girth, parse_eps(eps)?, *n, *seed, *retries)?;
            write(output, &hg.to_text())?;
            Ok(json!({
                "n": hg.n(),
                "u": hg.uniformity(),
                "edges": hg.edge_count(),
                "girth": hg.girth().to_string(),
                "independence_number": hg.independence_number(),
            }))
        }
        GadgetCommand::Plant {
            f0,
            hypergraph,
            output,
        } => {
            let hg = Hypergraph::from_text(&read(hypergraph)?)?;
            let g = plant_copies(&load_graph(f0)?, &hg)?;
            let g6 = encode_graph6(&g);
            write(output, &format!("{g6}\n"))?;
            Ok(json!({ "n": g.n(), "m": g.edge_count(), "graph6": g6 }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_forms() {
        assert_eq!(parse_eps("4/5").unwrap(), Ratio::new(4, 5));
        assert_eq!(parse_eps("0.8").unwrap(), Ratio::new(4, 5));
        assert_eq!(parse_eps("1").unwrap(), Ratio::new(1, 1));
        assert!(parse_eps("1/0").is_err());
        assert!(parse_eps("x").is_err());
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("K6"), Some(Graph::complete(6)));
        assert_eq!(builtin("C5"), Some(Graph::cycle(5)));
        assert_eq!(builtin("C2"), None);
        assert_eq!(builtin("Q3"), None);
        assert_eq!(builtin("K"), None);
    }
}
