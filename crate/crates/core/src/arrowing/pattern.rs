//! Target patterns and the search for their copies inside a host graph given
//! as neighbourhood bitsets.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{find_clique_within, parse_graph_text, Graph};
use std::fmt;

/// What a monochromatic copy has to look like.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum TargetPattern {
    /// `K_k`.
    Clique(usize),
    /// `K_k·K_2`: a `K_k` plus one pendant edge.
    CliquePendant(usize),
    /// `K_k + f·K_t`: vertex-disjoint union of a `K_k` and `f` copies of `K_t`.
    CliquePlusCliques { k: usize, f: usize, t: usize },
    /// Any non-empty graph.
    Arbitrary(Graph),
}

/// Image of each pattern vertex, indexed by the pattern's own labelling
/// (see [`TargetPattern::graph`]).
pub type Embedding = Vec<usize>;

impl TargetPattern {
    pub fn clique(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::input("clique order must be at least 1"));
        }
        Ok(Self::Clique(k))
    }

    pub fn clique_pendant(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::input("clique order must be at least 1"));
        }
        Ok(Self::CliquePendant(k))
    }

    pub fn clique_plus_cliques(k: usize, f: usize, t: usize) -> Result<Self> {
        if k == 0 || t == 0 {
            return Err(Error::input("clique orders must be at least 1"));
        }
        Ok(Self::CliquePlusCliques { k, f, t })
    }

    pub fn arbitrary(g: Graph) -> Result<Self> {
        if g.n() == 0 {
            return Err(Error::input("pattern graph must have at least one vertex"));
        }
        Ok(Self::Arbitrary(g))
    }

    /// Parses `K5`, `K5.K2`, `K4+2K3`, `K4+K3` or `file:<path>` (graph6 or
    /// edge list).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(path) = s.strip_prefix("file:") {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::input(format!("cannot read pattern file {path}: {e}")))?;
            return Self::arbitrary(parse_graph_text(&text)?);
        }
        let bad = || Error::input(format!("unrecognised pattern {s:?}"));
        let order = |t: &str| -> Result<usize> {
            t.strip_prefix('K')
                .and_then(|d| d.parse::<usize>().ok())
                .ok_or_else(bad)
        };
        if let Some((head, tail)) = s.split_once('.') {
            if tail != "K2" {
                return Err(bad());
            }
            return Self::clique_pendant(order(head)?);
        }
        if let Some((head, tail)) = s.split_once('+') {
            let k = order(head)?;
            let digits: String = tail.chars().take_while(char::is_ascii_digit).collect();
            let f = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| bad())?
            };
            let t = order(&tail[digits.len()..])?;
            return Self::clique_plus_cliques(k, f, t);
        }
        Self::clique(order(s)?)
    }

    /// The pattern as a graph. Cliques occupy the lowest labels; the pendant
    /// vertex of `K_k·K_2` is `k` and hangs off vertex 0; the `i`-th extra
    /// clique of `K_k + f·K_t` occupies `k + i·t .. k + (i+1)·t`.
    pub fn graph(&self) -> Graph {
        let clique_on = |g: &mut Graph, lo: usize, len: usize| {
            for u in lo..lo + len {
                for v in u + 1..lo + len {
                    g.add_edge(u, v);
                }
            }
        };
        match self {
            Self::Clique(k) => Graph::complete(*k),
            Self::CliquePendant(k) => {
                let mut g = Graph::complete(*k).disjoint_union(&Graph::empty(1));
                g.add_edge(0, *k);
                g
            }
            Self::CliquePlusCliques { k, f, t } => {
                let mut g = Graph::empty(k + f * t);
                clique_on(&mut g, 0, *k);
                for i in 0..*f {
                    clique_on(&mut g, k + i * t, *t);
                }
                g
            }
            Self::Arbitrary(g) => g.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Self::Clique(k) => *k,
            Self::CliquePendant(k) => k + 1,
            Self::CliquePlusCliques { k, f, t } => k + f * t,
            Self::Arbitrary(g) => g.n(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            Self::Clique(k) => k * k.saturating_sub(1) / 2,
            Self::CliquePendant(k) => k * k.saturating_sub(1) / 2 + 1,
            Self::CliquePlusCliques { k, f, t } => {
                k * k.saturating_sub(1) / 2 + f * t * t.saturating_sub(1) / 2
            }
            Self::Arbitrary(g) => g.edge_count(),
        }
    }

    /// δ(H).
    pub fn min_degree(&self) -> usize {
        self.graph().min_degree().unwrap_or(0)
    }

    /// Whether the pattern has a vertex of degree zero.
    pub fn has_isolated_vertex(&self) -> bool {
        self.min_degree() == 0
    }

    /// Finds a copy in the host given by `adj`, deterministically: cliques
    /// are tried in lexicographic order.
    pub fn find_in(&self, adj: &[VertexSet]) -> Option<Embedding> {
        let all = VertexSet::full(adj.len());
        match self {
            Self::Clique(k) => find_clique_within(adj, &all, *k),
            Self::CliquePendant(k) => {
                let mut found = None;
                for_each_clique(adj, &all, *k, &mut |clique| {
                    found = pendant_on(adj, clique);
                    found.is_some()
                });
                found
            }
            Self::CliquePlusCliques { k, f, t } => {
                let mut found = None;
                for_each_clique(adj, &all, *k, &mut |clique| {
                    let mut avail = all.clone();
                    for &v in clique {
                        avail.remove(v);
                    }
                    let mut copies = Vec::new();
                    if pack_cliques(adj, &avail, *f, *t, 0, &mut copies) {
                        let mut emb = clique.to_vec();
                        emb.extend(copies.into_iter().flatten());
                        found = Some(emb);
                        return true;
                    }
                    false
                });
                found
            }
            Self::Arbitrary(h) => embed(h, adj, &[]),
        }
    }

    /// Whether the host contains a copy that uses the edge `{u, v}`, which
    /// must already be present in `adj`.
    pub fn has_copy_through(&self, adj: &[VertexSet], u: usize, v: usize) -> bool {
        debug_assert!(adj[u].contains(v));
        match self {
            Self::Clique(k) => match *k {
                0 | 1 => false,
                2 => true,
                k => find_clique_within(adj, &adj[u].intersection(&adj[v]), k - 2).is_some(),
            },
            Self::CliquePendant(k) => {
                let k = *k;
                if k == 1 {
                    return true;
                }
                // {u,v} as the pendant edge, either end as the anchor.
                for (anchor, leaf) in [(u, v), (v, u)] {
                    let mut cand = adj[anchor].clone();
                    cand.remove(leaf);
                    if find_clique_within(adj, &cand, k - 1).is_some() {
                        return true;
                    }
                }
                // {u,v} inside the clique.
                let common = adj[u].intersection(&adj[v]);
                let mut hit = false;
                for_each_clique(adj, &common, k - 2, &mut |rest| {
                    let mut clique = rest.to_vec();
                    clique.push(u);
                    clique.push(v);
                    hit = pendant_on(adj, &clique).is_some();
                    hit
                });
                hit
            }
            Self::CliquePlusCliques { k, f, t } => {
                let g = self.graph();
                let mut reps = Vec::new();
                if *k >= 2 {
                    reps.push((0, 1));
                }
                if *f >= 1 && *t >= 2 {
                    reps.push((*k, k + 1));
                }
                reps.into_iter()
                    .any(|(a, b)| embed(&g, adj, &[(a, u), (b, v)]).is_some())
            }
            Self::Arbitrary(h) => h.edges().into_iter().any(|(a, b)| {
                embed(h, adj, &[(a, u), (b, v)]).is_some()
                    || embed(h, adj, &[(a, v), (b, u)]).is_some()
            }),
        }
    }
}

/// Embedding of `K_k·K_2` on a given clique: the first clique vertex with a
/// neighbour outside the clique becomes the anchor.
fn pendant_on(adj: &[VertexSet], clique: &[usize]) -> Option<Embedding> {
    let members = VertexSet::from_members(adj.len(), clique.iter().copied());
    let mut sorted = clique.to_vec();
    sorted.sort_unstable();
    for &a in &sorted {
        if let Some(leaf) = adj[a].difference(&members).first() {
            let mut emb = vec![a];
            emb.extend(sorted.iter().copied().filter(|&x| x != a));
            emb.push(leaf);
            return Some(emb);
        }
    }
    None
}

/// Calls `visit` on every `k`-clique inside `cand` in lexicographic order
/// until it returns `true`.
pub(crate) fn for_each_clique(
    adj: &[VertexSet],
    cand: &VertexSet,
    k: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn go(
        adj: &[VertexSet],
        cand: &VertexSet,
        k: usize,
        acc: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if k == 0 {
            return visit(acc);
        }
        let mut rest = cand.clone();
        for v in cand.iter() {
            if rest.len() < k {
                break;
            }
            rest.remove(v);
            let next = rest.intersection(&adj[v]);
            if next.len() + 1 < k {
                continue;
            }
            acc.push(v);
            if go(adj, &next, k - 1, acc, visit) {
                return true;
            }
            acc.pop();
        }
        false
    }
    go(adj, cand, k, &mut Vec::with_capacity(k), visit)
}

/// Packs `f` vertex-disjoint `K_t` copies into `avail`, copies ordered by
/// their smallest vertex (which must be at least `from`).
fn pack_cliques(
    adj: &[VertexSet],
    avail: &VertexSet,
    f: usize,
    t: usize,
    from: usize,
    copies: &mut Vec<Vec<usize>>,
) -> bool {
    if f == 0 {
        return true;
    }
    if avail.len() < f * t {
        return false;
    }
    let mut cand = avail.clone();
    for v in 0..from.min(cand.capacity()) {
        cand.remove(v);
    }
    let mut done = false;
    for_each_clique(adj, &cand, t, &mut |q| {
        let mut rest = avail.clone();
        for &v in q {
            rest.remove(v);
        }
        copies.push(q.to_vec());
        if pack_cliques(adj, &rest, f - 1, t, q[0] + 1, copies) {
            done = true;
            return true;
        }
        copies.pop();
        false
    });
    done
}

/// Subgraph monomorphism of `pattern` into the host, with some pattern
/// vertices pinned to host vertices.
pub(crate) fn embed(
    pattern: &Graph,
    adj: &[VertexSet],
    pinned: &[(usize, usize)],
) -> Option<Embedding> {
    let pn = pattern.n();
    let hn = adj.len();
    if pn > hn {
        return None;
    }
    let mut map = vec![usize::MAX; pn];
    let mut used = VertexSet::new(hn);
    for &(p, h) in pinned {
        if map[p] != usize::MAX && map[p] != h || used.contains(h) && map[p] != h {
            return None;
        }
        map[p] = h;
        used.insert(h);
    }
    for &(p, _) in pinned {
        for q in pattern.neighbours(p) {
            if map[q] != usize::MAX && !adj[map[p]].contains(map[q]) {
                return None;
            }
        }
    }

    // Order the free vertices so each one has as many earlier neighbours as possible.
    let mut placed = VertexSet::from_members(pn, pinned.iter().map(|&(p, _)| p));
    let mut order = Vec::with_capacity(pn);
    while placed.len() < pn {
        let next = (0..pn)
            .filter(|&p| !placed.contains(p))
            .max_by_key(|&p| {
                (
                    pattern.neighbours(p).intersection_len(&placed),
                    pattern.degree(p),
                    std::cmp::Reverse(p),
                )
            })
            .expect("unplaced vertex");
        placed.insert(next);
        order.push(next);
    }

    fn extend(
        pattern: &Graph,
        adj: &[VertexSet],
        order: &[usize],
        map: &mut [usize],
        used: &mut VertexSet,
    ) -> bool {
        let Some((&p, rest)) = order.split_first() else {
            return true;
        };
        let mut cand = VertexSet::full(adj.len());
        for q in pattern.neighbours(p) {
            if map[q] != usize::MAX {
                cand.intersect_with(&adj[map[q]]);
            }
        }
        cand.difference_with(used);
        let need = pattern.degree(p);
        for h in cand.iter() {
            if adj[h].len() < need {
                continue;
            }
            map[p] = h;
            used.insert(h);
            if extend(pattern, adj, rest, map, used) {
                return true;
            }
            used.remove(h);
            map[p] = usize::MAX;
        }
        false
    }

    if extend(pattern, adj, &order, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

impl fmt::Display for TargetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Clique(k) => write!(f, "K{k}"),
            Self::CliquePendant(k) => write!(f, "K{k}.K2"),
            Self::CliquePlusCliques { k, f: c, t } => write!(f, "K{k}+{c}K{t}"),
            Self::Arbitrary(g) => write!(f, "graph6:{}", crate::graph::encode_graph6(g)),
        }
    }
}

impl fmt::Debug for TargetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pattern_language() {
        assert_eq!(
            TargetPattern::parse("K5").unwrap(),
            TargetPattern::Clique(5)
        );
        assert_eq!(
            TargetPattern::parse("K5.K2").unwrap(),
            TargetPattern::CliquePendant(5)
        );
        assert_eq!(
            TargetPattern::parse("K4+2K3").unwrap(),
            TargetPattern::CliquePlusCliques { k: 4, f: 2, t: 3 }
        );
        assert_eq!(
            TargetPattern::parse("K4+K3").unwrap(),
            TargetPattern::CliquePlusCliques { k: 4, f: 1, t: 3 }
        );
        for bad in ["", "K", "K0", "C5", "K3.K3", "K3+2", "K3+xK2"] {
            assert!(TargetPattern::parse(bad).is_err(), "{bad}");
        }
        for s in ["K5", "K3.K2", "K4+2K3"] {
            assert_eq!(TargetPattern::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn pattern_graphs_have_expected_shape() {
        let p = TargetPattern::CliquePendant(3).graph();
        assert_eq!(p.n(), 4);
        assert_eq!(p.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 2)]);
        let c = TargetPattern::CliquePlusCliques { k: 4, f: 2, t: 3 };
        assert_eq!(c.graph().n(), 10);
        assert_eq!(c.graph().edge_count(), c.edge_count());
        assert_eq!(c.edge_count(), 12);
        assert_eq!(TargetPattern::CliquePendant(3).min_degree(), 1);
        assert!(TargetPattern::CliquePlusCliques { k: 2, f: 1, t: 1 }.has_isolated_vertex());
    }

    fn is_embedding(p: &TargetPattern, host: &Graph, emb: &[usize]) -> bool {
        let h = p.graph();
        let distinct: std::collections::BTreeSet<_> = emb.iter().collect();
        emb.len() == h.n()
            && distinct.len() == emb.len()
            && h.edges()
                .iter()
                .all(|&(a, b)| host.has_edge(emb[a], emb[b]))
    }

    #[test]
    fn finds_copies_in_complete_graphs() {
        let k4 = Graph::complete(4);
        let emb = TargetPattern::CliquePendant(3)
            .find_in(k4.adjacency())
            .unwrap();
        assert_eq!(emb, vec![0, 1, 2, 3]);
        assert!(TargetPattern::CliquePendant(4)
            .find_in(k4.adjacency())
            .is_none());
        let k10 = Graph::complete(10);
        let p = TargetPattern::CliquePlusCliques { k: 4, f: 2, t: 3 };
        let emb = p.find_in(k10.adjacency()).unwrap();
        assert!(is_embedding(&p, &k10, &emb));
        assert!(p.find_in(Graph::complete(9).adjacency()).is_none());
    }

    #[test]
    fn disjoint_packing_respects_disjointness() {
        // Two triangles sharing a vertex, plus a K_2 elsewhere.
        let g =
            Graph::from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (5, 6)]).unwrap();
        let two_triangles = TargetPattern::CliquePlusCliques { k: 3, f: 1, t: 3 };
        assert!(two_triangles.find_in(g.adjacency()).is_none());
        let tri_edge = TargetPattern::CliquePlusCliques { k: 3, f: 2, t: 2 };
        let emb = tri_edge.find_in(g.adjacency()).unwrap();
        assert!(is_embedding(&tri_edge, &g, &emb));
    }

    #[test]
    fn arbitrary_patterns_embed() {
        let c4 = TargetPattern::arbitrary(Graph::cycle(4)).unwrap();
        assert!(c4.find_in(Graph::cycle(5).adjacency()).is_none());
        let emb = c4
            .find_in(Graph::petersen().complement().adjacency())
            .unwrap();
        assert!(is_embedding(&c4, &Graph::petersen().complement(), &emb));
        assert!(c4.find_in(Graph::petersen().adjacency()).is_none());
    }

    #[test]
    fn copy_through_edge_agrees_with_difference_of_searches() {
        // For every host on 6 vertices from a fixed pseudo-random stream and
        // every edge e: copy through e exists iff copy in g and none in g - e.
        let patterns = [
            TargetPattern::Clique(3),
            TargetPattern::CliquePendant(3),
            TargetPattern::CliquePendant(2),
            TargetPattern::CliquePlusCliques { k: 3, f: 1, t: 2 },
            TargetPattern::arbitrary(Graph::path(4)).unwrap(),
        ];
        let mut seed = 3u64;
        for _ in 0..150 {
            let mut g = Graph::empty(6);
            for u in 0..6 {
                for v in u + 1..6 {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
                    if seed >> 62 != 0 {
                        g.add_edge(u, v);
                    }
                }
            }
            for p in &patterns {
                for (u, v) in g.edges() {
                    let without = g.without_edge(u, v);
                    if p.find_in(without.adjacency()).is_some() {
                        continue;
                    }
                    assert_eq!(
                        p.has_copy_through(g.adjacency(), u, v),
                        p.find_in(g.adjacency()).is_some(),
                        "{p} {g:?} ({u},{v})"
                    );
                }
                if let Some(emb) = p.find_in(g.adjacency()) {
                    assert!(is_embedding(p, &g, &emb));
                }
            }
        }
    }
}
