//! Ramsey-minimal graphs: membership checks, minimalization, minimum-degree
//! surveys over small orders, and searches for graphs separating two patterns.

mod enumerate;

pub use enumerate::{canonical_form, for_each_graph, MAX_ORDER};

use crate::arrowing::{Allowance, ArrowOptions, Outcome, TargetPattern};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Edge, Graph};
use serde::Serialize;
use std::collections::HashSet;
use std::ops::ControlFlow;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub graph: Graph,
    pub pattern: String,
    pub is_ramsey: bool,
    pub is_minimal: bool,
    /// First edge in canonical order whose deletion keeps the arrowing.
    pub failing_edge: Option<Edge>,
    /// Isolated vertex whose deletion keeps the arrowing.
    pub isolated_vertex: Option<usize>,
}

fn decided(outcome: Outcome, allowance: &Allowance) -> Result<bool> {
    match outcome {
        Outcome::Arrow => Ok(true),
        Outcome::NotArrow(_) => Ok(false),
        Outcome::Undecided => Err(Error::Undecided {
            nodes: allowance.used(),
        }),
    }
}

fn arrows_sym(g: &Graph, p: &TargetPattern, allowance: &mut Allowance) -> Result<bool> {
    let outcome = allowance.arrows(g, p, p);
    decided(outcome, allowance)
}

/// `g` arrows `p` and no proper subgraph does. Edge deletions cover every
/// proper subgraph except those obtained by dropping isolated vertices,
/// which are checked one by one.
pub fn is_minimal(g: &Graph, p: &TargetPattern, opts: &ArrowOptions) -> Result<MinimalityReport> {
    check_minimal(g, p, &mut Allowance::new(opts))
}

fn check_minimal(
    g: &Graph,
    p: &TargetPattern,
    allowance: &mut Allowance,
) -> Result<MinimalityReport> {
    let mut report = MinimalityReport {
        graph: g.clone(),
        pattern: p.to_string(),
        is_ramsey: arrows_sym(g, p, allowance)?,
        is_minimal: false,
        failing_edge: None,
        isolated_vertex: None,
    };
    if !report.is_ramsey {
        return Ok(report);
    }
    for (u, v) in g.edges() {
        if arrows_sym(&g.without_edge(u, v), p, allowance)? {
            report.failing_edge = Some((u, v));
            return Ok(report);
        }
    }
    for v in g.isolated_vertices() {
        if arrows_sym(&g.without_vertex(v), p, allowance)? {
            report.isolated_vertex = Some(v);
            return Ok(report);
        }
    }
    report.is_minimal = true;
    Ok(report)
}

/// Deletes edges in canonical order whenever the rest still arrows `p`,
/// then drops isolated vertices (highest label first) under the same rule.
/// One pass suffices: a kept edge stays necessary in every subgraph.
pub fn minimalize(g: &Graph, p: &TargetPattern, opts: &ArrowOptions) -> Result<Graph> {
    let mut allowance = Allowance::new(opts);
    if !arrows_sym(g, p, &mut allowance)? {
        return Err(Error::input(format!("graph does not arrow {p}")));
    }
    let mut h = g.clone();
    for (u, v) in g.edges() {
        let smaller = h.without_edge(u, v);
        if arrows_sym(&smaller, p, &mut allowance)? {
            h = smaller;
        }
    }
    for v in h.isolated_vertices().into_iter().rev() {
        let smaller = h.without_vertex(v);
        if arrows_sym(&smaller, p, &mut allowance)? {
            h = smaller;
        }
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveySummary {
    pub pattern: String,
    pub n_max: usize,
    pub candidates: usize,
    pub minimal_found: usize,
    /// Candidates skipped because a search ran out of budget.
    pub undecided: usize,
    pub min_delta: Option<usize>,
    /// `2δ(H) − 1`.
    pub lower_bound: Option<usize>,
    /// `r(H) − 1`, when the diagonal Ramsey number was settled in budget.
    pub upper_bound: Option<usize>,
    pub lower_bound_respected: bool,
    pub complete: bool,
    pub caveat: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSurvey {
    pub records: Vec<SurveyRecord>,
    pub summary: SurveySummary,
}

impl DegreeSurvey {
    /// One JSON object per minimal graph, then the summary.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("plain record"));
            out.push('\n');
        }
        out.push_str(
            &serde_json::to_string(&serde_json::json!({ "summary": self.summary }))
                .expect("plain record"),
        );
        out.push('\n');
        out
    }
}

const CAVEAT: &str = "min_delta is the smallest minimum degree among minimal graphs \
with at most n_max vertices: an upper estimate for s(H), not its exact value";

/// Surveys every unlabelled graph on `1..=n_max` vertices from the built-in
/// generator.
pub fn degree_survey(p: &TargetPattern, n_max: usize, opts: &ArrowOptions) -> Result<DegreeSurvey> {
    if n_max > MAX_ORDER {
        return Err(Error::input(format!(
            "built-in enumeration stops at {MAX_ORDER} vertices"
        )));
    }
    let mut survey = Survey::new(p, n_max, opts);
    for n in 1..=n_max {
        if for_each_graph(n, &mut |g| survey.consider(g)).is_break() {
            break;
        }
    }
    Ok(survey.finish())
}

/// Surveys externally supplied candidates; isomorphic duplicates are
/// skipped.
pub fn degree_survey_from<I>(p: &TargetPattern, graphs: I, opts: &ArrowOptions) -> DegreeSurvey
where
    I: IntoIterator<Item = Graph>,
{
    let graphs: Vec<Graph> = graphs.into_iter().collect();
    let n_max = graphs.iter().map(Graph::n).max().unwrap_or(0);
    let mut survey = Survey::new(p, n_max, opts);
    let mut seen = HashSet::new();
    for g in graphs {
        let key = if g.n() <= MAX_ORDER {
            canonical_form(&g)
        } else {
            g.clone()
        };
        if !seen.insert(encode_graph6(&key)) {
            continue;
        }
        if survey.consider(g).is_break() {
            break;
        }
    }
    survey.finish()
}

struct Survey<'a> {
    p: &'a TargetPattern,
    n_max: usize,
    allowance: Allowance,
    records: Vec<SurveyRecord>,
    candidates: usize,
    undecided: usize,
    exhausted: bool,
}

impl<'a> Survey<'a> {
    fn new(p: &'a TargetPattern, n_max: usize, opts: &ArrowOptions) -> Self {
        Self {
            p,
            n_max,
            allowance: Allowance::new(opts),
            records: Vec::new(),
            candidates: 0,
            undecided: 0,
            exhausted: false,
        }
    }

    fn consider(&mut self, g: Graph) -> ControlFlow<()> {
        // Isolated vertices can only matter for patterns that have them.
        if !self.p.has_isolated_vertex() && g.min_degree() == Some(0) {
            return ControlFlow::Continue(());
        }
        self.candidates += 1;
        if self.allowance.next().is_none() {
            self.exhausted = true;
            self.undecided += 1;
            return ControlFlow::Break(());
        }
        match check_minimal(&g, self.p, &mut self.allowance) {
            Ok(report) => {
                if report.is_minimal {
                    self.records.push(SurveyRecord {
                        graph6: encode_graph6(&g),
                        n: g.n(),
                        m: g.edge_count(),
                        delta: g.min_degree().unwrap_or(0),
                    });
                }
            }
            Err(_) => self.undecided += 1,
        }
        ControlFlow::Continue(())
    }

    fn finish(mut self) -> DegreeSurvey {
        let min_delta = self.records.iter().map(|r| r.delta).min();
        let delta_h = self.p.min_degree();
        let lower_bound = (delta_h >= 1).then(|| 2 * delta_h - 1);
        let upper_bound =
            self.allowance.next().and_then(|opts| {
                match crate::arrowing::ramsey_number(self.p, self.p, &opts) {
                    crate::arrowing::RamseyOutcome::Determined(r) => Some(r - 1),
                    crate::arrowing::RamseyOutcome::Undecided { .. } => None,
                }
            });
        let lower_bound_respected = match (min_delta, lower_bound) {
            (Some(d), Some(b)) => d >= b,
            _ => true,
        };
        self.records
            .sort_by(|a, b| (a.n, a.m, &a.graph6).cmp(&(b.n, b.m, &b.graph6)));
        DegreeSurvey {
            summary: SurveySummary {
                pattern: self.p.to_string(),
                n_max: self.n_max,
                candidates: self.candidates,
                minimal_found: self.records.len(),
                undecided: self.undecided,
                min_delta,
                lower_bound,
                upper_bound,
                lower_bound_respected,
                complete: !self.exhausted && self.undecided == 0,
                caveat: CAVEAT.to_string(),
            },
            records: self.records,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Distinction {
    /// A graph arrowing `h1` but not `h2`, checked twice.
    pub graph: Option<Graph>,
    pub examined: usize,
    /// False when some candidate was left undecided by the budget.
    pub complete: bool,
}

/// Looks for a graph on at most `n_max` vertices that arrows `h1` but not
/// `h2`, by increasing order. Finding nothing proves nothing beyond `n_max`.
pub fn distinguish(
    h1: &TargetPattern,
    h2: &TargetPattern,
    n_max: usize,
    opts: &ArrowOptions,
) -> Result<Distinction> {
    if n_max > MAX_ORDER {
        return Err(Error::input(format!(
            "built-in enumeration stops at {MAX_ORDER} vertices"
        )));
    }
    let mut result = Distinction {
        graph: None,
        examined: 0,
        complete: true,
    };
    if h1 == h2 {
        return Ok(result);
    }
    let skip_isolated = !h1.has_isolated_vertex() && !h2.has_isolated_vertex();
    let mut allowance = Allowance::new(opts);
    for n in 1..=n_max {
        let flow = for_each_graph(n, &mut |g| {
            if skip_isolated && g.min_degree() == Some(0) {
                return ControlFlow::Continue(());
            }
            result.examined += 1;
            let first = allowance.arrows(&g, h1, h1);
            if !matches!(first, Outcome::Arrow) {
                if matches!(first, Outcome::Undecided) {
                    result.complete = false;
                }
                return ControlFlow::Continue(());
            }
            match allowance.arrows(&g, h2, h2) {
                Outcome::NotArrow(_) => {
                    let again = (
                        crate::arrowing::arrows(&g, h1, h1, opts).outcome,
                        crate::arrowing::arrows(&g, h2, h2, opts).outcome,
                    );
                    if matches!(again, (Outcome::Arrow, Outcome::NotArrow(_))) {
                        result.graph = Some(g);
                        return ControlFlow::Break(());
                    }
                    result.complete = false;
                }
                Outcome::Undecided => result.complete = false,
                Outcome::Arrow => {}
            }
            ControlFlow::Continue(())
        });
        if flow.is_break() {
            break;
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> TargetPattern {
        TargetPattern::Clique(n)
    }

    #[test]
    fn minimality_examples() {
        let opts = ArrowOptions::default();
        let r = is_minimal(&Graph::complete(6), &k(3), &opts).unwrap();
        assert!(r.is_ramsey && r.is_minimal);
        let r = is_minimal(&Graph::complete(7), &k(3), &opts).unwrap();
        assert!(r.is_ramsey && !r.is_minimal);
        assert_eq!(r.failing_edge, Some((0, 1)));
        let r = is_minimal(&Graph::complete(5), &k(3), &opts).unwrap();
        assert!(!r.is_ramsey && !r.is_minimal && r.failing_edge.is_none());
        let padded = Graph::complete(2).disjoint_union(&Graph::empty(1));
        let r = is_minimal(&padded, &k(2), &opts).unwrap();
        assert!(r.is_ramsey && !r.is_minimal);
        assert_eq!((r.failing_edge, r.isolated_vertex), (None, Some(2)));
    }

    #[test]
    fn isolated_vertex_can_be_needed() {
        // K_2 + K_1 needs a third vertex besides the edge.
        let p = TargetPattern::CliquePlusCliques { k: 2, f: 1, t: 1 };
        let g = Graph::complete(2).disjoint_union(&Graph::empty(1));
        let r = is_minimal(&g, &p, &ArrowOptions::default()).unwrap();
        assert!(r.is_minimal);
    }

    #[test]
    fn minimalize_examples() {
        let opts = ArrowOptions::default();
        assert_eq!(
            minimalize(&Graph::complete(6), &k(3), &opts).unwrap(),
            Graph::complete(6)
        );
        assert_eq!(
            minimalize(&Graph::complete(2), &k(2), &opts).unwrap(),
            Graph::complete(2)
        );
        let m = minimalize(&Graph::complete(7), &k(3), &opts).unwrap();
        assert!(is_minimal(&m, &k(3), &opts).unwrap().is_minimal);
        assert!(minimalize(&Graph::complete(5), &k(3), &opts).is_err());
    }

    #[test]
    fn undecided_propagates() {
        let opts = ArrowOptions {
            node_budget: Some(5),
            ..Default::default()
        };
        assert!(matches!(
            is_minimal(&Graph::complete(8), &k(4), &opts),
            Err(Error::Undecided { .. })
        ));
    }

    #[test]
    fn k2_survey_and_distinction() {
        let opts = ArrowOptions::default();
        let s = degree_survey(&k(2), 4, &opts).unwrap();
        assert_eq!(s.records.len(), 1);
        assert_eq!(s.records[0].graph6, "A_");
        assert_eq!(s.summary.min_delta, Some(1));
        assert!(s.summary.complete);
        assert_eq!(s.summary.upper_bound, Some(1));
        let lines = s.to_json_lines();
        assert_eq!(lines.lines().count(), 2);
        assert!(lines.starts_with(r#"{"graph6":"A_","n":2,"m":1,"delta":1}"#));

        let d = distinguish(&k(2), &k(3), 2, &opts).unwrap();
        assert_eq!(d.graph, Some(Graph::complete(2)));
        assert_eq!(distinguish(&k(3), &k(3), 6, &opts).unwrap().graph, None);
    }

    #[test]
    fn stream_survey_deduplicates() {
        let opts = ArrowOptions::default();
        let graphs = vec![
            Graph::complete(2),
            Graph::from_edges(3, [(1, 2)]).unwrap(),
            Graph::path(3),
            Graph::path(3).permuted(&[2, 0, 1]),
        ];
        let s = degree_survey_from(&k(2), graphs, &opts);
        assert_eq!(s.summary.candidates, 2);
        assert_eq!(s.summary.minimal_found, 1);
    }
}
