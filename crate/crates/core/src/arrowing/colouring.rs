//! Red/blue edge colourings and their text format.

use super::pattern::{Embedding, TargetPattern};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn other(self) -> Self {
        match self {
            Self::Red => Self::Blue,
            Self::Blue => Self::Red,
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Self::Red => 'r',
            Self::Blue => 'b',
        }
    }
}

/// A colour for every edge of a graph, listed in the graph's canonical edge
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring {
    graph: Graph,
    edges: Vec<Edge>,
    colours: Vec<Colour>,
}

impl EdgeColouring {
    pub fn new(graph: Graph, colours: Vec<Colour>) -> Result<Self> {
        let edges = graph.edges();
        if edges.len() != colours.len() {
            return Err(Error::input(format!(
                "{} colours given for {} edges",
                colours.len(),
                edges.len()
            )));
        }
        Ok(Self {
            graph,
            edges,
            colours,
        })
    }

    /// Colours each edge with `f(u, v)`.
    pub fn from_fn(graph: Graph, mut f: impl FnMut(usize, usize) -> Colour) -> Self {
        let edges = graph.edges();
        let colours = edges.iter().map(|&(u, v)| f(u, v)).collect();
        Self {
            graph,
            edges,
            colours,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    /// Colour of `{u, v}`, or `None` when it is not an edge.
    pub fn colour(&self, u: usize, v: usize) -> Option<Colour> {
        let e = crate::graph::edge(u, v);
        self.edges.binary_search(&e).ok().map(|i| self.colours[i])
    }

    /// Spanning subgraph formed by the edges of one colour.
    pub fn class(&self, c: Colour) -> Graph {
        let n = self.graph.n();
        let mut adj = vec![VertexSet::new(n); n];
        for (&(u, v), &col) in self.edges.iter().zip(&self.colours) {
            if col == c {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Graph::from_adjacency(adj)
    }

    /// `n <count>` then one `u v r|b` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.graph.n());
        for (&(u, v), c) in self.edges.iter().zip(&self.colours) {
            let _ = writeln!(out, "{u} {v} {}", c.letter());
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut n = None;
        let mut items = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let here = offset;
            offset += line.len();
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            match (n, fields.as_slice()) {
                (None, ["n", count]) => {
                    n =
                        Some(count.parse::<usize>().map_err(|_| {
                            Error::parse(here, format!("bad vertex count {count:?}"))
                        })?)
                }
                (None, _) => return Err(Error::parse(here, "expected header `n <count>`")),
                (Some(_), [u, v, c]) => {
                    let num = |s: &str| {
                        s.parse::<usize>()
                            .map_err(|_| Error::parse(here, format!("bad vertex {s:?}")))
                    };
                    let colour = match *c {
                        "r" => Colour::Red,
                        "b" => Colour::Blue,
                        other => return Err(Error::parse(here, format!("bad colour {other:?}"))),
                    };
                    items.push((here, num(u)?, num(v)?, colour));
                }
                (Some(_), _) => return Err(Error::parse(here, "expected `u v r|b`")),
            }
        }
        let n = n.ok_or_else(|| Error::parse(0, "missing header `n <count>`"))?;
        let mut coloured = std::collections::BTreeMap::new();
        for (at, u, v, c) in items {
            if u >= n || v >= n || u == v {
                return Err(Error::parse(at, format!("invalid edge {u} {v} for n={n}")));
            }
            if coloured.insert(crate::graph::edge(u, v), c).is_some() {
                return Err(Error::parse(at, format!("edge {u} {v} listed twice")));
            }
        }
        let graph = Graph::from_edges(n, coloured.keys().copied())?;
        Self::new(graph, coloured.into_values().collect())
    }
}

/// Finds a copy of `p` in colour class `c`, if there is one.
pub fn find_mono(colouring: &EdgeColouring, p: &TargetPattern, c: Colour) -> Option<Embedding> {
    p.find_in(colouring.class(c).adjacency())
}
