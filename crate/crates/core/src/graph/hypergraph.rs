//! Uniform hypergraphs with circuit girth and independence number.
//!
//! A circuit of length `s` is a cyclic sequence of `s` distinct edges and `s`
//! distinct vertices where consecutive edges share the vertex between them.
//! Two edges meeting in two or more vertices form a circuit of length 2.
//! Circuits of length `s` are exactly the cycles of length `2s` in the
//! bipartite vertex/edge incidence graph, which is how girth is computed.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

/// Circuit girth; `Infinite` when the hypergraph has no circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    /// `self >= m` for a finite threshold.
    pub fn at_least(self, m: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= m,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

/// A `u`-uniform hypergraph on vertices `0..n-1`. Edges are stored sorted,
/// each as an ascending vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    u: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new<I, E>(n: usize, u: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = usize>,
    {
        if u < 2 {
            return Err(Error::input(format!(
                "uniformity must be at least 2, got {u}"
            )));
        }
        let mut set = BTreeSet::new();
        for e in edges {
            let mut e: Vec<usize> = e.into_iter().collect();
            e.sort_unstable();
            let before = e.len();
            e.dedup();
            if e.len() != before || e.len() != u {
                return Err(Error::input(format!(
                    "edge {e:?} does not have {u} distinct vertices"
                )));
            }
            if let Some(&bad) = e.iter().find(|&&v| v >= n) {
                return Err(Error::input(format!("vertex {bad} out of range for n={n}")));
            }
            if !set.insert(e.clone()) {
                return Err(Error::input(format!("duplicate edge {e:?}")));
            }
        }
        Ok(Self {
            n,
            u,
            edges: set.into_iter().collect(),
        })
    }

    /// The Fano plane: 7 points, 7 lines of size 3.
    pub fn fano() -> Self {
        Self::new(
            7,
            3,
            [
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 5],
                [1, 4, 6],
                [2, 3, 6],
                [2, 4, 5],
            ],
        )
        .expect("valid Fano plane")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.u
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Copy without the edge at position `idx` in the sorted edge list.
    pub fn without_edge(&self, idx: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Self {
            n: self.n,
            u: self.u,
            edges,
        }
    }

    /// Incidence graph adjacency: vertices `0..n`, then edge nodes `n..n+m`.
    fn incidence(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + self.edges.len()];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                adj[v].push(self.n + i);
                adj[self.n + i].push(v);
            }
        }
        adj
    }

    /// Length of the shortest circuit, or `Infinite`.
    pub fn girth(&self) -> Girth {
        match self.shortest_circuit() {
            Some(c) => Girth::Finite(c.len()),
            None => Girth::Infinite,
        }
    }

    /// Indices (into [`edges`](Self::edges)) of the edges of a shortest circuit,
    /// in circuit order.
    pub fn shortest_circuit(&self) -> Option<Vec<usize>> {
        let adj = self.incidence();
        let total = adj.len();
        let mut best: Option<(usize, usize, usize, usize, Vec<usize>)> = None;
        let mut dist = vec![usize::MAX; total];
        let mut parent = vec![usize::MAX; total];
        for root in self.n..total {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            let mut found: Option<(usize, usize, usize)> = None;
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y && parent[y] != x {
                        let len = dist[x] + dist[y] + 1;
                        if found.is_none_or(|(l, _, _)| len < l) {
                            found = Some((len, x, y));
                        }
                    }
                }
            }
            if let Some((len, x, y)) = found {
                if best.as_ref().is_none_or(|b| len < b.0) {
                    best = Some((len, root, x, y, parent.clone()));
                }
            }
        }
        let (_, root, x, y, parent) = best?;
        // Walk both branches back to the root; at the global minimum they
        // only meet at the root, so the closed walk is a simple cycle.
        let climb = |mut v: usize| {
            let mut path = vec![v];
            while v != root {
                v = parent[v];
                path.push(v);
            }
            path
        };
        let mut cycle = climb(x);
        cycle.reverse();
        let mut back = climb(y);
        back.pop();
        cycle.extend(back);
        let circuit: Vec<usize> = cycle
            .into_iter()
            .filter(|&node| node >= self.n)
            .map(|node| node - self.n)
            .collect();
        debug_assert!(circuit.len() >= 2);
        Some(circuit)
    }

    /// Size of the largest vertex set containing no edge entirely.
    ///
    /// Computed as `n - τ` where τ is a minimum transversal, found by
    /// branching on the vertices of an edge that is not yet hit.
    pub fn independence_number(&self) -> usize {
        self.n - self.min_transversal().len()
    }

    /// A maximum independent vertex set, ascending.
    pub fn max_independent_set(&self) -> Vec<usize> {
        let cover = VertexSet::from_members(self.n, self.min_transversal());
        (0..self.n).filter(|&v| !cover.contains(v)).collect()
    }

    fn min_transversal(&self) -> Vec<usize> {
        let edges: Vec<VertexSet> = self
            .edges
            .iter()
            .map(|e| VertexSet::from_members(self.n, e.iter().copied()))
            .collect();
        let mut best: Vec<usize> = (0..self.n).collect();
        let mut chosen = Vec::new();
        transversal_branch(
            &edges,
            &VertexSet::new(self.n),
            &VertexSet::new(self.n),
            &mut chosen,
            &mut best,
        );
        best.sort_unstable();
        best
    }

    /// Text form: header `n u m`, then one edge per line as sorted labels.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.u, self.edges.len());
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let here = offset;
            offset += line.len();
            let content = line.split('#').next().unwrap_or("").trim();
            if !content.is_empty() {
                lines.push((here, content));
            }
        }
        let mut it = lines.into_iter();
        let (at, header) = it
            .next()
            .ok_or_else(|| Error::parse(0, "missing header `n u m`"))?;
        let nums = parse_numbers(header, at)?;
        let [n, u, m] = nums[..] else {
            return Err(Error::parse(at, "header must be `n u m`"));
        };
        let mut edges = Vec::with_capacity(m);
        for (at, line) in it.by_ref().take(m) {
            let e = parse_numbers(line, at)?;
            if e.len() != u {
                return Err(Error::parse(at, format!("expected {u} vertices")));
            }
            if e.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::parse(at, "edge labels must be strictly ascending"));
            }
            edges.push(e);
        }
        if edges.len() != m {
            return Err(Error::parse(
                text.len(),
                format!("expected {m} edges, found {}", edges.len()),
            ));
        }
        if let Some((at, _)) = it.next() {
            return Err(Error::parse(at, "trailing content after edges"));
        }
        Self::new(n, u, edges)
    }
}

fn parse_numbers(line: &str, at: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(at, format!("bad integer {t:?}")))
        })
        .collect()
}

fn transversal_branch(
    edges: &[VertexSet],
    chosen_set: &VertexSet,
    forbidden: &VertexSet,
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if chosen.len() >= best.len() {
        return;
    }
    let unhit: Vec<&VertexSet> = edges.iter().filter(|e| e.is_disjoint(chosen_set)).collect();
    let Some(&pivot) = unhit.iter().min_by_key(|e| e.difference(forbidden).len()) else {
        best.clone_from(chosen);
        return;
    };
    // Disjoint unhit edges each need their own transversal vertex.
    let mut packed = VertexSet::new(chosen_set.capacity());
    let mut lower = 0;
    for e in &unhit {
        if e.is_disjoint(&packed) {
            packed.union_with(e);
            lower += 1;
        }
    }
    if chosen.len() + lower >= best.len() {
        return;
    }
    // Branch on which allowed vertex of `pivot` joins the transversal;
    // earlier choices are forbidden in later branches to avoid repeats.
    let mut forbid = forbidden.clone();
    for v in pivot.difference(forbidden).iter() {
        let mut next = chosen_set.clone();
        next.insert(v);
        chosen.push(v);
        transversal_branch(edges, &next, &forbid, chosen, best);
        chosen.pop();
        forbid.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn brute_alpha(h: &Hypergraph) -> usize {
        (0u32..1 << h.n())
            .filter(|mask| {
                h.edges()
                    .iter()
                    .all(|e| e.iter().any(|&v| mask >> v & 1 == 0))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    /// Enumerates circuits literally (distinct edges, distinct vertices,
    /// consecutive edges sharing the chosen vertex) up to length `max`.
    fn brute_girth(h: &Hypergraph, max: usize) -> Girth {
        fn dfs(
            h: &Hypergraph,
            path_e: &mut Vec<usize>,
            path_v: &mut Vec<usize>,
            max: usize,
        ) -> Option<usize> {
            let s = path_e.len();
            let last = *path_e.last().unwrap();
            let first = path_e[0];
            let mut best = None;
            if s >= 2 {
                for &v in &h.edges()[last] {
                    if h.edges()[first].contains(&v) && !path_v.contains(&v) {
                        return Some(s);
                    }
                }
            }
            if s == max {
                return None;
            }
            for &v in &h.edges()[last] {
                if path_v.contains(&v) {
                    continue;
                }
                for (j, e) in h.edges().iter().enumerate() {
                    if path_e.contains(&j) || !e.contains(&v) {
                        continue;
                    }
                    path_e.push(j);
                    path_v.push(v);
                    if let Some(l) = dfs(h, path_e, path_v, max) {
                        best = Some(best.map_or(l, |b: usize| b.min(l)));
                    }
                    path_e.pop();
                    path_v.pop();
                }
            }
            best
        }
        let mut best = None;
        for i in 0..h.edge_count() {
            if let Some(l) = dfs(h, &mut vec![i], &mut Vec::new(), max) {
                best = Some(best.map_or(l, |b: usize| b.min(l)));
            }
        }
        best.map_or(Girth::Infinite, Girth::Finite)
    }

    /// Classic graph girth by BFS from every vertex.
    fn bfs_graph_girth(g: &Graph) -> Girth {
        let mut best = usize::MAX;
        for r in 0..g.n() {
            let mut dist = vec![usize::MAX; g.n()];
            let mut par = vec![usize::MAX; g.n()];
            dist[r] = 0;
            let mut q = VecDeque::from([r]);
            while let Some(x) = q.pop_front() {
                for y in g.neighbours(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        par[y] = x;
                        q.push_back(y);
                    } else if par[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    #[test]
    fn girth_examples() {
        let two = Hypergraph::new(4, 3, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(two.girth(), Girth::Finite(2));
        assert_eq!(Hypergraph::fano().girth(), Girth::Finite(3));
        let disjoint = Hypergraph::new(6, 3, [[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(disjoint.girth(), Girth::Infinite);
        let empty = Hypergraph::new(3, 2, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(empty.girth(), Girth::Infinite);
    }

    #[test]
    fn alpha_examples() {
        let single = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(single.independence_number(), 2);
        let none = Hypergraph::new(6, 3, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(none.independence_number(), 6);
        assert_eq!(Hypergraph::fano().independence_number(), 4);
        assert_eq!(brute_alpha(&Hypergraph::fano()), 4);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Hypergraph::new(4, 3, [vec![0, 1]]).is_err());
        assert!(Hypergraph::new(4, 3, [vec![0, 1, 1]]).is_err());
        assert!(Hypergraph::new(4, 3, [vec![0, 1, 4]]).is_err());
        assert!(Hypergraph::new(4, 3, [vec![0, 1, 2], vec![2, 1, 0]]).is_err());
        assert!(Hypergraph::new(4, 1, Vec::<Vec<usize>>::new()).is_err());
    }

    #[test]
    fn text_round_trip() {
        let f = Hypergraph::fano();
        assert_eq!(Hypergraph::from_text(&f.to_text()).unwrap(), f);
        assert!(Hypergraph::from_text("3 3 1\n0 2 1\n").is_err());
        assert!(Hypergraph::from_text("3 3 2\n0 1 2\n").is_err());
    }

    fn lcg(seed: &mut u64) -> u64 {
        *seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        *seed >> 33
    }

    #[test]
    fn graph_case_matches_bfs_girth() {
        let mut seed = 7u64;
        for _ in 0..300 {
            let n = 3 + (lcg(&mut seed) % 10) as usize;
            let p = lcg(&mut seed) % 60 + 5;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if lcg(&mut seed) % 100 < p {
                        g.add_edge(u, v);
                    }
                }
            }
            let h = Hypergraph::new(n, 2, g.edges().into_iter().map(|(u, v)| [u, v])).unwrap();
            assert_eq!(h.girth(), bfs_graph_girth(&g), "{g:?}");
        }
    }

    #[test]
    fn random_hypergraphs_match_brute_force() {
        let mut seed = 11u64;
        for _ in 0..200 {
            let n = 4 + (lcg(&mut seed) % 6) as usize;
            let u = 2 + (lcg(&mut seed) % 2) as usize;
            let m = (lcg(&mut seed) % 6) as usize;
            let mut edges = BTreeSet::new();
            for _ in 0..m {
                let mut e = BTreeSet::new();
                while e.len() < u {
                    e.insert((lcg(&mut seed) % n as u64) as usize);
                }
                edges.insert(e.into_iter().collect::<Vec<_>>());
            }
            let h = Hypergraph::new(n, u, edges).unwrap();
            assert_eq!(h.independence_number(), brute_alpha(&h));
            assert_eq!(h.girth(), brute_girth(&h, 6), "{h:?}");
            if let Some(c) = h.shortest_circuit() {
                assert_eq!(Girth::Finite(c.len()), h.girth());
                let distinct: BTreeSet<_> = c.iter().collect();
                assert_eq!(distinct.len(), c.len());
                for w in 0..c.len() {
                    let a = &h.edges()[c[w]];
                    let b = &h.edges()[c[(w + 1) % c.len()]];
                    assert!(a.iter().any(|v| b.contains(v)));
                }
            }
            if h.girth().at_least(3) {
                for (i, a) in h.edges().iter().enumerate() {
                    for b in &h.edges()[i + 1..] {
                        assert!(a.iter().filter(|v| b.contains(v)).count() <= 1);
                    }
                }
            }
        }
    }
}
