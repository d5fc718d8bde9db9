//! Exhaustive arrowing search.
//!
//! Edges are coloured depth-first in canonical order, red before blue, so the
//! first complete colouring reached is the lexicographically least good one.
//! A branch dies as soon as a colour class contains its target. Forced-colour
//! propagation only removes subtrees without good colourings, which keeps the
//! first witness unchanged.

use super::colouring::{Colour, EdgeColouring};
use super::pattern::TargetPattern;
use crate::bitset::VertexSet;
use crate::graph::{Edge, Graph};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

#[derive(Clone, Debug)]
pub struct ArrowOptions {
    /// Maximum number of search nodes; `None` is unlimited.
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Worker threads; 0 and 1 both mean sequential.
    pub workers: usize,
    /// Restrict colourings of twin-class edges at the first vertex.
    pub orbit_pruning: bool,
    /// Forced-colour propagation.
    pub propagation: bool,
}

impl Default for ArrowOptions {
    fn default() -> Self {
        Self {
            node_budget: None,
            time_budget: None,
            workers: 1,
            orbit_pruning: false,
            propagation: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Arrow,
    NotArrow(EdgeColouring),
    /// The budget ran out before the question was settled.
    Undecided,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowingVerdict {
    pub outcome: Outcome,
    pub stats: SearchStats,
}

impl ArrowingVerdict {
    pub fn is_arrow(&self) -> bool {
        matches!(self.outcome, Outcome::Arrow)
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self.outcome, Outcome::Undecided)
    }

    pub fn witness(&self) -> Option<&EdgeColouring> {
        match &self.outcome {
            Outcome::NotArrow(w) => Some(w),
            _ => None,
        }
    }
}

/// Decides whether every red/blue colouring of `g` has a red copy of `red`
/// or a blue copy of `blue`.
pub fn arrows(
    g: &Graph,
    red: &TargetPattern,
    blue: &TargetPattern,
    opts: &ArrowOptions,
) -> ArrowingVerdict {
    let start = Instant::now();
    let inst = Instance::new(g, red, blue, opts);
    let budget = Budget {
        nodes: AtomicU64::new(0),
        max_nodes: opts.node_budget,
        deadline: opts.time_budget.map(|d| start + d),
        stop: AtomicBool::new(false),
    };
    let colours = if opts.workers <= 1 {
        sequential(&inst, &budget)
    } else {
        parallel(&inst, &budget, opts.workers)
    };
    let outcome = match colours {
        Flow::Found(c) => {
            Outcome::NotArrow(EdgeColouring::new(g.clone(), c).expect("one colour per edge"))
        }
        Flow::Exhausted => Outcome::Arrow,
        Flow::Aborted => Outcome::Undecided,
    };
    ArrowingVerdict {
        outcome,
        stats: SearchStats {
            nodes: budget.nodes.load(Ordering::Relaxed),
            elapsed: start.elapsed(),
        },
    }
}

struct Instance<'a> {
    n: usize,
    edges: Vec<Edge>,
    patterns: [&'a TargetPattern; 2],
    swap_symmetric: bool,
    /// `below[e]`: edges that may not be red while `e` is blue.
    below: Vec<Vec<usize>>,
    /// `above[e]`: edges that may not be blue while `e` is red.
    above: Vec<Vec<usize>>,
    propagation: bool,
}

impl<'a> Instance<'a> {
    fn new(
        g: &Graph,
        red: &'a TargetPattern,
        blue: &'a TargetPattern,
        opts: &ArrowOptions,
    ) -> Self {
        let edges = g.edges();
        let m = edges.len();
        let mut below = vec![Vec::new(); m];
        let mut above = vec![Vec::new(); m];
        if opts.orbit_pruning {
            for (a, b) in twin_order_pairs(g, &edges) {
                below[a].push(b);
                above[b].push(a);
            }
        }
        Self {
            n: g.n(),
            edges,
            patterns: [red, blue],
            swap_symmetric: red == blue,
            below,
            above,
            propagation: opts.propagation,
        }
    }
}

/// Pairs `(a, b)` of edge indices with `colour(a) <= colour(b)` imposed.
///
/// Let `r` be the first vertex of the first edge. Swapping two twins (equal
/// neighbourhoods apart from each other) is an automorphism, so inside each
/// class of pairwise twins not containing `r`, the edges from `r` can be
/// sorted red-first. Every edge from `r` goes to a larger label, so the
/// sorted order is the canonical edge order.
fn twin_order_pairs(g: &Graph, edges: &[Edge]) -> Vec<(usize, usize)> {
    let Some(&(r, _)) = edges.first() else {
        return Vec::new();
    };
    let n = g.n();
    let twins = |u: usize, w: usize| {
        let mut a = g.neighbours(u).clone();
        a.remove(w);
        let mut b = g.neighbours(w).clone();
        b.remove(u);
        a == b
    };
    let mut assigned = VertexSet::new(n);
    let mut pairs = Vec::new();
    for u in g.neighbours(r).iter() {
        if assigned.contains(u) {
            continue;
        }
        let mut class = vec![u];
        for w in g
            .neighbours(r)
            .iter()
            .filter(|&w| w > u && !assigned.contains(w))
        {
            if class.iter().all(|&x| twins(x, w)) {
                class.push(w);
            }
        }
        for &w in &class {
            assigned.insert(w);
        }
        let index = |w: usize| edges.binary_search(&(r, w)).expect("edge at r");
        for win in class.windows(2) {
            pairs.push((index(win[0]), index(win[1])));
        }
    }
    pairs
}

struct Budget {
    nodes: AtomicU64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    stop: AtomicBool,
}

enum Flow {
    Found(Vec<Colour>),
    Exhausted,
    Aborted,
}

struct Searcher<'a> {
    inst: &'a Instance<'a>,
    budget: &'a Budget,
    colours: Vec<Option<Colour>>,
    class: [Vec<VertexSet>; 2],
    trail: Vec<usize>,
    ticks: u64,
    /// Give up once a witness with a smaller task index is known.
    cutoff: Option<(&'a AtomicUsize, usize)>,
    /// When set, record decision paths of this length instead of descending.
    split: Option<(usize, Vec<Vec<Colour>>)>,
    path: Vec<Colour>,
}

impl<'a> Searcher<'a> {
    fn new(inst: &'a Instance<'a>, budget: &'a Budget) -> Self {
        let n = inst.n;
        Self {
            inst,
            budget,
            colours: vec![None; inst.edges.len()],
            class: [vec![VertexSet::new(n); n], vec![VertexSet::new(n); n]],
            trail: Vec::new(),
            ticks: 0,
            cutoff: None,
            split: None,
            path: Vec::new(),
        }
    }

    /// Checks that hold before any edge is coloured. `false` means every
    /// colouring fails.
    fn root(&mut self) -> bool {
        for c in 0..2 {
            if self.inst.patterns[c].find_in(&self.class[c]).is_some() {
                return false;
            }
        }
        !self.inst.propagation || self.propagate()
    }

    fn tick(&mut self) -> bool {
        let b = self.budget;
        if b.stop.load(Ordering::Relaxed) {
            return false;
        }
        let total = b.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        self.ticks += 1;
        let over = b.max_nodes.is_some_and(|cap| total > cap)
            || (self.ticks % 512 == 1 && b.deadline.is_some_and(|d| Instant::now() >= d));
        if over {
            b.stop.store(true, Ordering::Relaxed);
            return false;
        }
        if let Some((best, mine)) = self.cutoff {
            if best.load(Ordering::Relaxed) < mine {
                return false;
            }
        }
        true
    }

    fn allowed(&self, e: usize, c: Colour) -> bool {
        match c {
            Colour::Red => self.inst.above[e]
                .iter()
                .all(|&a| self.colours[a] != Some(Colour::Blue)),
            Colour::Blue => {
                !(self.inst.swap_symmetric && e == 0)
                    && self.inst.below[e]
                        .iter()
                        .all(|&b| self.colours[b] != Some(Colour::Red))
            }
        }
    }

    fn assign(&mut self, e: usize, c: Colour) {
        let (u, v) = self.inst.edges[e];
        self.colours[e] = Some(c);
        self.class[c.index()][u].insert(v);
        self.class[c.index()][v].insert(u);
        self.trail.push(e);
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("trail entry");
            let (u, v) = self.inst.edges[e];
            let c = self.colours[e].take().expect("coloured").index();
            self.class[c][u].remove(v);
            self.class[c][v].remove(u);
        }
    }

    fn completes_copy(&self, e: usize, c: Colour) -> bool {
        let (u, v) = self.inst.edges[e];
        self.inst.patterns[c.index()].has_copy_through(&self.class[c.index()], u, v)
    }

    fn would_complete(&mut self, e: usize, c: Colour) -> bool {
        let (u, v) = self.inst.edges[e];
        let k = c.index();
        self.class[k][u].insert(v);
        self.class[k][v].insert(u);
        let hit = self.inst.patterns[k].has_copy_through(&self.class[k], u, v);
        self.class[k][u].remove(v);
        self.class[k][v].remove(u);
        hit
    }

    fn propagate(&mut self) -> bool {
        loop {
            let mut changed = false;
            for e in 0..self.colours.len() {
                if self.colours[e].is_some() {
                    continue;
                }
                let red = self.allowed(e, Colour::Red) && !self.would_complete(e, Colour::Red);
                let blue = self.allowed(e, Colour::Blue) && !self.would_complete(e, Colour::Blue);
                match (red, blue) {
                    (false, false) => return false,
                    (true, false) => self.assign(e, Colour::Red),
                    (false, true) => self.assign(e, Colour::Blue),
                    (true, true) => continue,
                }
                changed = true;
            }
            if !changed {
                return true;
            }
        }
    }

    /// Colours `e` and runs the dead-branch checks. The caller undoes.
    fn try_assign(&mut self, e: usize, c: Colour) -> bool {
        self.assign(e, c);
        !self.completes_copy(e, c) && (!self.inst.propagation || self.propagate())
    }

    fn dfs(&mut self, from: usize) -> Flow {
        if !self.tick() {
            return Flow::Aborted;
        }
        let next = (from..self.colours.len()).find(|&e| self.colours[e].is_none());
        if let Some((depth, paths)) = &mut self.split {
            if next.is_none() || self.path.len() == *depth {
                paths.push(self.path.clone());
                return Flow::Exhausted;
            }
        }
        let Some(e) = next else {
            return Flow::Found(self.colours.iter().map(|c| c.expect("total")).collect());
        };
        for c in [Colour::Red, Colour::Blue] {
            if !self.allowed(e, c) {
                continue;
            }
            let mark = self.trail.len();
            if self.try_assign(e, c) {
                self.path.push(c);
                let flow = self.dfs(e + 1);
                self.path.pop();
                if !matches!(flow, Flow::Exhausted) {
                    return flow;
                }
            }
            self.undo(mark);
        }
        Flow::Exhausted
    }

    /// Re-applies recorded branching decisions from the root.
    fn replay(&mut self, path: &[Colour]) {
        let mut from = 0;
        for &c in path {
            let e = (from..self.colours.len())
                .find(|&e| self.colours[e].is_none())
                .expect("recorded path fits");
            let ok = self.try_assign(e, c);
            debug_assert!(ok, "recorded path was feasible");
            from = e + 1;
        }
    }
}

fn sequential(inst: &Instance<'_>, budget: &Budget) -> Flow {
    let mut s = Searcher::new(inst, budget);
    if !s.root() {
        return Flow::Exhausted;
    }
    s.dfs(0)
}

/// Splits the tree at a fixed number of branching decisions and hands the
/// subtrees out in canonical order. The smallest subtree index holding a
/// witness wins, so the answer matches the sequential one.
fn parallel(inst: &Instance<'_>, budget: &Budget, workers: usize) -> Flow {
    let mut s = Searcher::new(inst, budget);
    if !s.root() {
        return Flow::Exhausted;
    }
    let depth = (usize::BITS - (workers * 8 - 1).leading_zeros()) as usize;
    s.split = Some((depth, Vec::new()));
    if let Flow::Aborted = s.dfs(0) {
        return Flow::Aborted;
    }
    let tasks = s.split.take().map(|(_, p)| p).unwrap_or_default();

    let next = AtomicUsize::new(0);
    let best = AtomicUsize::new(usize::MAX);
    let found = Mutex::new(None::<(usize, Vec<Colour>)>);
    let aborted = AtomicBool::new(false);
    std::thread::scope(|scope| {
        for _ in 0..workers.min(tasks.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= tasks.len() {
                    break;
                }
                if i > best.load(Ordering::Relaxed) {
                    continue;
                }
                let mut s = Searcher::new(inst, budget);
                s.cutoff = Some((&best, i));
                s.root();
                s.replay(&tasks[i]);
                match s.dfs(0) {
                    Flow::Found(c) => {
                        best.fetch_min(i, Ordering::Relaxed);
                        let mut slot = found.lock().expect("result lock");
                        if slot.as_ref().is_none_or(|(j, _)| i < *j) {
                            *slot = Some((i, c));
                        }
                    }
                    Flow::Aborted => {
                        if best.load(Ordering::Relaxed) > i {
                            aborted.store(true, Ordering::Relaxed);
                        }
                    }
                    Flow::Exhausted => {}
                }
            });
        }
    });
    match found.into_inner().expect("result lock") {
        Some((_, c)) => Flow::Found(c),
        None if aborted.load(Ordering::Relaxed) => Flow::Aborted,
        None => Flow::Exhausted,
    }
}
