//! Exact clique and independent-set search.
//!
//! The clique side is a branch-and-bound over candidate bitsets with a
//! greedy-colouring bound. Independence uses its own include/exclude
//! branching with degree reductions, so the two can cross-check each other
//! through complementation.

use super::Graph;
use crate::bitset::VertexSet;

/// Greedy sequential colouring of `p`. Returns the vertices ordered by colour
/// class together with the colour count seen so far at each position.
fn colour_sort(adj: &[VertexSet], p: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    let mut uncoloured = p.clone();
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(&adj[v]);
            uncoloured.remove(v);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

fn expand(adj: &[VertexSet], current: &mut Vec<usize>, mut p: VertexSet, best: &mut Vec<usize>) {
    let (order, bounds) = colour_sort(adj, &p);
    for idx in (0..order.len()).rev() {
        if current.len() + bounds[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        current.push(v);
        let next = p.intersection(&adj[v]);
        if next.is_empty() {
            if current.len() > best.len() {
                best.clone_from(current);
            }
        } else {
            expand(adj, current, next, best);
        }
        current.pop();
        p.remove(v);
    }
}

/// A maximum clique, sorted ascending. Empty for the graph with no vertices.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    if g.n() > 0 {
        expand(
            g.adjacency(),
            &mut Vec::new(),
            VertexSet::full(g.n()),
            &mut best,
        );
    }
    best.sort_unstable();
    best
}

/// ω(g).
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// The lexicographically first `k`-clique of `g`, if any.
pub fn find_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    find_clique_within(g.adjacency(), &VertexSet::full(g.n()), k)
}

/// The lexicographically first `k`-clique whose vertices all lie in `cand`.
pub fn find_clique_within(adj: &[VertexSet], cand: &VertexSet, k: usize) -> Option<Vec<usize>> {
    let mut acc = Vec::with_capacity(k);
    if extend(adj, cand, k, &mut acc) {
        Some(acc)
    } else {
        None
    }
}

fn extend(adj: &[VertexSet], cand: &VertexSet, k: usize, acc: &mut Vec<usize>) -> bool {
    if k == 0 {
        return true;
    }
    if cand.len() < k {
        return false;
    }
    if k == 1 {
        acc.push(cand.first().expect("non-empty"));
        return true;
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
        if extend(adj, &next, k - 1, acc) {
            return true;
        }
        acc.pop();
    }
    false
}

/// α(g).
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// A maximum independent set, sorted ascending.
pub fn maximum_independent_set(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    mis_branch(
        g.adjacency(),
        VertexSet::full(g.n()),
        &mut Vec::new(),
        &mut best,
    );
    best.sort_unstable();
    best
}

fn mis_branch(
    adj: &[VertexSet],
    mut alive: VertexSet,
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    let mark = chosen.len();
    // Vertices of degree <= 1 in the live graph belong to some maximum
    // independent set, so take them without branching.
    loop {
        let low = alive.iter().find(|&v| adj[v].intersection_len(&alive) <= 1);
        match low {
            Some(v) => {
                chosen.push(v);
                alive.remove(v);
                alive.difference_with(&adj[v]);
            }
            None => break,
        }
    }
    if alive.is_empty() {
        if chosen.len() > best.len() {
            best.clone_from(chosen);
        }
        chosen.truncate(mark);
        return;
    }
    if chosen.len() + alive.len() <= best.len() {
        chosen.truncate(mark);
        return;
    }
    let pivot = alive
        .iter()
        .max_by_key(|&v| (adj[v].intersection_len(&alive), std::cmp::Reverse(v)))
        .expect("non-empty");

    let mut with = alive.clone();
    with.remove(pivot);
    with.difference_with(&adj[pivot]);
    chosen.push(pivot);
    mis_branch(adj, with, chosen, best);
    chosen.pop();

    alive.remove(pivot);
    mis_branch(adj, alive, chosen, best);
    chosen.truncate(mark);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|mask| {
                (0..n).all(|u| {
                    mask & (1 << u) == 0
                        || (u + 1..n).all(|v| mask & (1 << v) == 0 || !g.has_edge(u, v))
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&Graph::complete(5)), 5);
        assert_eq!(clique_number(&Graph::cycle(5)), 2);
        assert_eq!(clique_number(&Graph::petersen()), 2);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        assert_eq!(clique_number(&Graph::empty(3)), 1);
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&Graph::cycle(5)), 2);
        assert_eq!(brute_alpha(&Graph::cycle(5)), 2);
        assert_eq!(independence_number(&Graph::petersen()), 4);
        assert_eq!(brute_alpha(&Graph::petersen()), 4);
        assert_eq!(independence_number(&Graph::empty(7)), 7);
    }

    #[test]
    fn find_clique_is_lexicographically_first() {
        let mut g = Graph::cycle(6);
        g.add_edge(3, 5);
        g.add_edge(0, 2);
        assert_eq!(find_clique(&g, 3), Some(vec![0, 1, 2]));
        assert_eq!(find_clique(&g, 4), None);
        assert_eq!(find_clique(&g, 0), Some(vec![]));
    }

    #[test]
    fn large_clique_in_64_vertices() {
        let mut g = Graph::cycle(64);
        let planted = [3, 9, 17, 30, 41, 55, 63];
        for (i, &u) in planted.iter().enumerate() {
            for &v in &planted[i + 1..] {
                g.add_edge(u, v);
            }
        }
        assert_eq!(max_clique(&g), planted.to_vec());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
                move |bits| {
                    let mut g = Graph::empty(n);
                    let mut it = bits.into_iter();
                    for u in 0..n {
                        for v in u + 1..n {
                            if it.next().unwrap() {
                                g.add_edge(u, v);
                            }
                        }
                    }
                    g
                },
            )
        })
    }

    proptest! {
        #[test]
        fn clique_matches_independence_of_complement(g in arb_graph(8)) {
            prop_assert_eq!(clique_number(&g), independence_number(&g.complement()));
            prop_assert_eq!(independence_number(&g), brute_alpha(&g));
        }

        #[test]
        fn induced_subgraphs_never_grow_cliques(g in arb_graph(10), mask in any::<u16>()) {
            let s: Vec<usize> = (0..g.n()).filter(|v| mask & (1 << v) != 0).collect();
            let sub = g.induced_subgraph(&s).unwrap();
            prop_assert!(clique_number(&sub) <= clique_number(&g));
        }
    }
}
