//! Orderly generation of unlabelled graphs and canonical labelling.
//!
//! A labelled graph is read as its upper-triangle bit string in graph6
//! order: `(0,1), (0,2), (1,2), (0,3), ...`. The canonical member of an
//! isomorphism class is the one with the lexicographically largest string.
//! Dropping the last set bit of a canonical string leaves a canonical
//! string, so every class is reached exactly once by only setting bits past
//! the last one and keeping canonical children.

use crate::graph::Graph;
use std::ops::ControlFlow;

/// Largest order handled here (rows are 16-bit masks).
pub const MAX_ORDER: usize = 16;

#[derive(Clone, Copy)]
struct Labelled {
    n: usize,
    rows: [u16; MAX_ORDER],
}

impl Labelled {
    fn from_graph(g: &Graph) -> Self {
        assert!(g.n() <= MAX_ORDER, "order {} above {MAX_ORDER}", g.n());
        let mut rows = [0u16; MAX_ORDER];
        for (u, v) in g.edges() {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Self { n: g.n(), rows }
    }

    fn has(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    fn to_graph(self) -> Graph {
        let mut edges = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                if self.has(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(self.n, edges).expect("labels in range")
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Stop at the first relabelling with a larger string.
    Check,
    /// Find the relabelling with the largest string.
    Maximize,
}

struct Relabel<'a> {
    g: &'a Labelled,
    mode: Mode,
    order: Vec<usize>,
    used: u16,
    /// Best column bits found so far, one entry per column.
    best: Vec<u16>,
    best_order: Vec<usize>,
    beaten: bool,
}

impl Relabel<'_> {
    /// Column `k` of the relabelled graph: bit `i` set iff new labels `i`
    /// and `k` are adjacent. Bits are compared from `i = 0` upwards.
    fn column(&self, k: usize, x: usize) -> u16 {
        let mut col = 0u16;
        for i in 0..k {
            if self.g.has(self.order[i], x) {
                col |= 1 << i;
            }
        }
        col
    }

    /// Orders columns as strings read from bit 0 upwards.
    fn cmp_column(a: u16, b: u16, k: usize) -> std::cmp::Ordering {
        for i in 0..k {
            let (x, y) = (a >> i & 1, b >> i & 1);
            if x != y {
                return x.cmp(&y);
            }
        }
        std::cmp::Ordering::Equal
    }

    /// Invariant: columns `0..k` of the current relabelling equal `best[0..k]`.
    fn go(&mut self, k: usize) {
        use std::cmp::Ordering::*;
        let n = self.g.n;
        if k == n {
            if self.mode == Mode::Maximize {
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        for x in 0..n {
            if self.used >> x & 1 == 1 {
                continue;
            }
            let col = self.column(k, x);
            match Self::cmp_column(col, self.best[k], k) {
                Less => continue,
                Equal => {}
                Greater => {
                    if self.mode == Mode::Check {
                        self.beaten = true;
                        return;
                    }
                    // Any completion of this prefix beats the old best.
                    self.best[k] = col;
                    self.best[k + 1..].fill(0);
                }
            }
            self.order.push(x);
            self.used |= 1 << x;
            self.go(k + 1);
            self.used &= !(1 << x);
            self.order.pop();
            if self.beaten {
                return;
            }
        }
    }
}

fn columns(g: &Labelled) -> Vec<u16> {
    (0..g.n)
        .map(|k| {
            let mut col = 0u16;
            for i in 0..k {
                if g.has(i, k) {
                    col |= 1 << i;
                }
            }
            col
        })
        .collect()
}

fn is_canonical(g: &Labelled) -> bool {
    let mut r = Relabel {
        g,
        mode: Mode::Check,
        order: Vec::with_capacity(g.n),
        used: 0,
        best: columns(g),
        best_order: Vec::new(),
        beaten: false,
    };
    r.go(0);
    !r.beaten
}

/// Canonical relabelling of a graph with at most [`MAX_ORDER`] vertices:
/// two graphs are isomorphic iff their canonical forms are equal.
pub fn canonical_form(g: &Graph) -> Graph {
    let lab = Labelled::from_graph(g);
    let mut r = Relabel {
        g: &lab,
        mode: Mode::Maximize,
        order: Vec::with_capacity(lab.n),
        used: 0,
        best: columns(&lab),
        best_order: (0..lab.n).collect(),
        beaten: false,
    };
    r.go(0);
    // best_order[new] = old
    let mut perm = vec![0; lab.n];
    for (new, &old) in r.best_order.iter().enumerate() {
        perm[old] = new;
    }
    g.permuted(&perm)
}

/// Visits one representative of every isomorphism class of graphs on `n`
/// vertices, each in canonical form, in a fixed order. Stops early when
/// `visit` breaks.
pub fn for_each_graph(
    n: usize,
    visit: &mut dyn FnMut(Graph) -> ControlFlow<()>,
) -> ControlFlow<()> {
    assert!(n <= MAX_ORDER, "order {n} above {MAX_ORDER}");
    fn grow(
        g: Labelled,
        next: usize,
        pairs: &[(usize, usize)],
        visit: &mut dyn FnMut(Graph) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        visit(g.to_graph())?;
        for (p, &(i, j)) in pairs.iter().enumerate().skip(next) {
            let mut child = g;
            child.rows[i] |= 1 << j;
            child.rows[j] |= 1 << i;
            if is_canonical(&child) {
                grow(child, p + 1, pairs, visit)?;
            }
        }
        ControlFlow::Continue(())
    }
    let mut pairs = Vec::new();
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let empty = Labelled {
        n,
        rows: [0; MAX_ORDER],
    };
    grow(empty, 0, &pairs, visit)
}
