//! CNF encoding of "there is a good colouring", DIMACS I/O and a small
//! DPLL solver for desk-sized instances.

use super::colouring::{Colour, EdgeColouring};
use super::pattern::{for_each_clique, TargetPattern};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use std::collections::HashSet;
use std::fmt::Write as _;

/// Variable `i + 1` is the `i`-th edge in canonical order; true means red.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfInstance {
    graph: Graph,
    edges: Vec<Edge>,
    clauses: Vec<Vec<i32>>,
}

impl CnfInstance {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn variable_count(&self) -> usize {
        self.edges.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// The edge behind a 1-based variable.
    pub fn edge_of(&self, var: usize) -> Option<Edge> {
        var.checked_sub(1).and_then(|i| self.edges.get(i).copied())
    }

    pub fn var_of(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&edge(u, v)).ok().map(|i| i + 1)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count(), self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }

    pub fn solve(&self) -> SatResult {
        solve(self.variable_count(), &self.clauses)
    }
}

/// Copies of `p` in `g` as sorted lists of edge indices, duplicates removed,
/// in order of first appearance.
fn copies(g: &Graph, edges: &[Edge], p: &TargetPattern) -> Result<Vec<Vec<usize>>> {
    let index = |u: usize, v: usize| edges.binary_search(&edge(u, v)).expect("edge of g");
    let clique_edges = |c: &[usize]| {
        let mut out = Vec::new();
        for (i, &u) in c.iter().enumerate() {
            for &v in &c[i + 1..] {
                out.push(index(u, v));
            }
        }
        out
    };
    let all = VertexSet::full(g.n());
    let mut found = Vec::new();
    match p {
        TargetPattern::Clique(k) => {
            for_each_clique(g.adjacency(), &all, *k, &mut |c| {
                found.push(clique_edges(c));
                false
            });
        }
        TargetPattern::CliquePendant(k) => {
            for_each_clique(g.adjacency(), &all, *k, &mut |c| {
                let members = VertexSet::from_members(g.n(), c.iter().copied());
                for &a in c {
                    for leaf in g.neighbours(a).difference(&members).iter() {
                        let mut es = clique_edges(c);
                        es.push(index(a, leaf));
                        found.push(es);
                    }
                }
                false
            });
        }
        other => {
            return Err(Error::input(format!(
                "CNF export supports K_k and K_k.K2 patterns, not {other}"
            )))
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mut es in found {
        es.sort_unstable();
        if seen.insert(es.clone()) {
            out.push(es);
        }
    }
    Ok(out)
}

/// One clause per copy: red copies forbid all-true, then blue copies forbid
/// all-false. Satisfiable exactly when `g` does not arrow `(red, blue)`.
pub fn to_cnf(g: &Graph, red: &TargetPattern, blue: &TargetPattern) -> Result<CnfInstance> {
    let edges = g.edges();
    let mut clauses = Vec::new();
    for es in copies(g, &edges, red)? {
        clauses.push(es.iter().map(|&i| -(i as i32 + 1)).collect());
    }
    for es in copies(g, &edges, blue)? {
        clauses.push(es.iter().map(|&i| i as i32 + 1).collect());
    }
    Ok(CnfInstance {
        graph: g.clone(),
        edges,
        clauses,
    })
}

/// Turns a total assignment (index `i` is variable `i + 1`) into a colouring.
pub fn decode_model(cnf: &CnfInstance, assignment: &[Option<bool>]) -> Result<EdgeColouring> {
    if assignment.len() != cnf.variable_count() {
        return Err(Error::input(format!(
            "assignment covers {} variables, instance has {}",
            assignment.len(),
            cnf.variable_count()
        )));
    }
    let colours = assignment
        .iter()
        .enumerate()
        .map(|(i, a)| match a {
            Some(true) => Ok(Colour::Red),
            Some(false) => Ok(Colour::Blue),
            None => Err(Error::input(format!("variable {} is unassigned", i + 1))),
        })
        .collect::<Result<Vec<_>>>()?;
    EdgeColouring::new(cnf.graph.clone(), colours)
}

/// Parsed DIMACS file: variable count and clauses.
pub fn parse_dimacs(text: &str) -> Result<(usize, Vec<Vec<i32>>)> {
    let mut header = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let here = offset;
        offset += line.len();
        let content = line.trim();
        if content.is_empty() || content.starts_with('c') {
            continue;
        }
        if let Some(rest) = content.strip_prefix("p cnf") {
            let nums: Vec<usize> = rest
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(here, "bad problem line"))?;
            match nums.as_slice() {
                [v, c] if header.is_none() => header = Some((*v, *c)),
                _ => return Err(Error::parse(here, "bad problem line")),
            }
            continue;
        }
        let Some((vars, _)) = header else {
            return Err(Error::parse(here, "clause before problem line"));
        };
        for tok in content.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| Error::parse(here, format!("bad literal {tok:?}")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > vars {
                return Err(Error::parse(here, format!("literal {lit} out of range")));
            } else {
                current.push(lit);
            }
        }
    }
    let (vars, count) = header.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    if !current.is_empty() {
        return Err(Error::parse(offset, "unterminated clause"));
    }
    if clauses.len() != count {
        return Err(Error::parse(
            offset,
            format!("header announces {count} clauses, found {}", clauses.len()),
        ));
    }
    Ok((vars, clauses))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SatResult {
    /// Model as a total assignment, index `i` for variable `i + 1`.
    Sat(Vec<bool>),
    Unsat,
}

/// Recursive DPLL with unit propagation. Branches on the lowest unassigned
/// variable, true first, so the model returned is deterministic.
pub fn solve(vars: usize, clauses: &[Vec<i32>]) -> SatResult {
    let mut occurs = vec![Vec::new(); vars + 1];
    for (ci, c) in clauses.iter().enumerate() {
        for &lit in c {
            occurs[lit.unsigned_abs() as usize].push(ci);
        }
    }
    let mut s = Dpll {
        clauses,
        occurs,
        value: vec![None; vars + 1],
        trail: Vec::new(),
    };
    if clauses.iter().any(Vec::is_empty) || !s.propagate_all() {
        return SatResult::Unsat;
    }
    if s.search() {
        SatResult::Sat(s.value[1..].iter().map(|v| v.unwrap_or(false)).collect())
    } else {
        SatResult::Unsat
    }
}

struct Dpll<'a> {
    clauses: &'a [Vec<i32>],
    occurs: Vec<Vec<usize>>,
    value: Vec<Option<bool>>,
    trail: Vec<usize>,
}

enum ClauseState {
    Satisfied,
    Conflict,
    Unit(i32),
    Open,
}

impl Dpll<'_> {
    fn lit_value(&self, lit: i32) -> Option<bool> {
        self.value[lit.unsigned_abs() as usize].map(|v| v == (lit > 0))
    }

    fn state(&self, ci: usize) -> ClauseState {
        let mut unassigned = None;
        let mut free = 0;
        for &lit in &self.clauses[ci] {
            match self.lit_value(lit) {
                Some(true) => return ClauseState::Satisfied,
                Some(false) => {}
                None => {
                    free += 1;
                    unassigned = Some(lit);
                }
            }
        }
        match (free, unassigned) {
            (0, _) => ClauseState::Conflict,
            (1, Some(lit)) => ClauseState::Unit(lit),
            _ => ClauseState::Open,
        }
    }

    fn set(&mut self, lit: i32) {
        let var = lit.unsigned_abs() as usize;
        self.value[var] = Some(lit > 0);
        self.trail.push(var);
    }

    /// Unit propagation from the given trail position onward.
    fn propagate_from(&mut self, mut head: usize) -> bool {
        while head < self.trail.len() {
            let var = self.trail[head];
            head += 1;
            for k in 0..self.occurs[var].len() {
                let ci = self.occurs[var][k];
                match self.state(ci) {
                    ClauseState::Conflict => return false,
                    ClauseState::Unit(lit) => self.set(lit),
                    _ => {}
                }
            }
        }
        true
    }

    fn propagate_all(&mut self) -> bool {
        for ci in 0..self.clauses.len() {
            match self.state(ci) {
                ClauseState::Conflict => return false,
                ClauseState::Unit(lit) => {
                    let head = self.trail.len();
                    self.set(lit);
                    if !self.propagate_from(head) {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn search(&mut self) -> bool {
        let Some(var) = (1..self.value.len()).find(|&v| self.value[v].is_none()) else {
            return true;
        };
        for choice in [true, false] {
            let mark = self.trail.len();
            self.set(if choice { var as i32 } else { -(var as i32) });
            if self.propagate_from(mark) && self.search() {
                return true;
            }
            for v in self.trail.drain(mark..) {
                self.value[v] = None;
            }
        }
        false
    }
}
