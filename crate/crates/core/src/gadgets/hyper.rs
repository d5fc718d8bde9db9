//! Random hypergraphs of large girth and small independence number, and
//! graphs planted along their edges.

use crate::error::{Error, Result};
use crate::graph::{Graph, Hypergraph};
use num_rational::Ratio;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// `alpha < eps·n`, exactly.
fn alpha_small(alpha: usize, eps: Ratio<u64>, n: usize) -> bool {
    (alpha as u128) * (*eps.denom() as u128) < (*eps.numer() as u128) * (n as u128)
}

/// A `u`-uniform hypergraph on `n` vertices with girth at least `girth_min`
/// and independence number below `eps·n`, both verified before returning.
///
/// Attempt `a` (from 0) samples `⌈n·(a+2)/2⌉` distinct edges from the
/// ChaCha stream `a` of `seed`, then deletes a random edge of a shortest
/// circuit until no circuit shorter than `girth_min` is left.
pub fn gen_hypergraph(
    u: usize,
    girth_min: usize,
    eps: Ratio<u64>,
    n: usize,
    seed: u64,
    retry_cap: usize,
) -> Result<Hypergraph> {
    if u < 2 {
        return Err(Error::input(format!(
            "uniformity must be at least 2, got {u}"
        )));
    }
    if girth_min < 2 {
        return Err(Error::input(format!(
            "girth bound must be at least 2, got {girth_min}"
        )));
    }
    if *eps.numer() == 0 || eps > Ratio::from_integer(1) {
        return Err(Error::input(format!("eps must lie in (0, 1], got {eps}")));
    }
    // Any u − 1 vertices (or all of them, if fewer) span no edge.
    let floor = n.min(u - 1);
    if !alpha_small(floor, eps, n) {
        return Err(Error::Infeasible(format!(
            "independence number is at least {floor}, not below {eps}·{n}"
        )));
    }
    let possible = binomial(n, u);
    for attempt in 0..retry_cap {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt as u64);
        let m = (n * (attempt + 2)).div_ceil(2).min(possible);
        let mut edges = BTreeSet::new();
        let mut tries = 0;
        while edges.len() < m && tries < 50 * m + 100 {
            tries += 1;
            let mut e = sample(&mut rng, n, u).into_vec();
            e.sort_unstable();
            edges.insert(e);
        }
        let mut hg = Hypergraph::new(n, u, edges)?;
        while let Some(circuit) = hg.shortest_circuit() {
            if circuit.len() >= girth_min {
                break;
            }
            let victim = circuit[rng.random_range(0..circuit.len())];
            hg = hg.without_edge(victim);
        }
        if hg.girth().at_least(girth_min) && alpha_small(hg.independence_number(), eps, n) {
            return Ok(hg);
        }
    }
    Err(Error::Infeasible(format!(
        "no {u}-uniform hypergraph on {n} vertices with girth >= {girth_min} and \
         independence number < {eps}·{n} found in {retry_cap} attempts"
    )))
}

/// Places a copy of `f0` on every hyperedge: the `i`-th smallest vertex of
/// the hyperedge plays vertex `i` of `f0`. Overlapping copies share edges.
pub fn plant_copies(f0: &Graph, hg: &Hypergraph) -> Result<Graph> {
    if f0.n() != hg.uniformity() {
        return Err(Error::input(format!(
            "graph has {} vertices but hyperedges have {}",
            f0.n(),
            hg.uniformity()
        )));
    }
    let mut g = Graph::empty(hg.n());
    for e in hg.edges() {
        for (a, b) in f0.edges() {
            g.add_edge(e[a], e[b]);
        }
    }
    Ok(g)
}
