//! Deterministic constructors. Every constructor documents its labelling.

use super::block::{BlockGraph, NamedSet, Provenance};
use super::params::GadgetParams;
use crate::arrowing::{arrows_on_subsets, ArrowOptions, EpsilonVerdict, TargetPattern};
use crate::error::{Error, Result};
use crate::graph::{clique_number, Graph};

fn join(g: &mut Graph, a: &[usize], b: &[usize]) {
    for &u in a {
        for &v in b {
            g.add_edge(u, v);
        }
    }
}

fn clique_on(g: &mut Graph, vs: &[usize]) {
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            g.add_edge(u, v);
        }
    }
}

fn copy_into(g: &mut Graph, f: &Graph, offset: usize) {
    for (u, v) in f.edges() {
        g.add_edge(u + offset, v + offset);
    }
}

/// `H = K_k` on `0..k`, then `k − 2` copies of `f` in order, every pair of
/// copies completely joined and `H` joined to all of them. For `k = 2` this
/// is a single edge and `f` is not used.
pub fn build_g0(k: usize, f: &Graph) -> Result<BlockGraph> {
    if k < 2 {
        return Err(Error::input(format!("need k >= 2, got {k}")));
    }
    let copies = k - 2;
    if copies > 0 && clique_number(f) >= k {
        return Err(Error::input(format!(
            "block contains K_{k} (clique number {})",
            clique_number(f)
        )));
    }
    let fv = f.n();
    let mut g = Graph::empty(k + copies * fv);
    let h: Vec<usize> = (0..k).collect();
    clique_on(&mut g, &h);
    let mut blocks = vec![NamedSet::new("H", h.clone())];
    for i in 0..copies {
        let offset = k + i * fv;
        copy_into(&mut g, f, offset);
        let members: Vec<usize> = (offset..offset + fv).collect();
        join(&mut g, &h, &members);
        for earlier in &blocks[1..] {
            join(&mut g, &earlier.vertices, &members);
        }
        blocks.push(NamedSet::new(format!("F{}", i + 1), members));
    }
    Ok(BlockGraph {
        graph: g,
        blocks,
        marks: Vec::new(),
        provenance: Provenance::G0 { k },
        params: None,
    })
}

/// Disjoint union of `k − 1` gadgets (list order), a clique on
/// `v_1..v_{k−1}` where `v_i` is the least vertex of the `i`-th `H`, the edge
/// `v_1 v_k` where `v_k` is the least vertex of the second `H` other than
/// `v_2`, and a new last vertex `v` adjacent to `v_1..v_{k−1}`.
pub fn build_pendant_gadget(k: usize, parts: &[BlockGraph]) -> Result<BlockGraph> {
    if k < 3 {
        return Err(Error::input(format!("need k >= 3, got {k}")));
    }
    if parts.len() != k - 1 {
        return Err(Error::input(format!(
            "need {} gadgets for k={k}, got {}",
            k - 1,
            parts.len()
        )));
    }
    let total: usize = parts.iter().map(|p| p.graph.n()).sum();
    let mut g = Graph::empty(total + 1);
    let mut blocks = Vec::new();
    let mut marks = Vec::new();
    let mut tips = Vec::new();
    let mut second_h = Vec::new();
    let mut offset = 0;
    for (i, part) in parts.iter().enumerate() {
        let h = part
            .block("H")
            .ok_or_else(|| Error::input(format!("gadget {} has no H block", i + 1)))?;
        if h.len() != k {
            return Err(Error::input(format!(
                "gadget {} has |H| = {}, expected {k}",
                i + 1,
                h.len()
            )));
        }
        copy_into(&mut g, &part.graph, offset);
        for b in &part.blocks {
            let vs = b.vertices.iter().map(|v| v + offset).collect();
            blocks.push(NamedSet::new(format!("G{}.{}", i + 1, b.name), vs));
        }
        let mut shifted: Vec<usize> = h.iter().map(|v| v + offset).collect();
        shifted.sort_unstable();
        tips.push(shifted[0]);
        if i == 1 {
            second_h = shifted.clone();
        }
        marks.push(NamedSet::new(format!("H{}", i + 1), shifted));
        offset += part.graph.n();
    }
    let vk = *second_h
        .iter()
        .find(|&&x| x != tips[1])
        .expect("|H| = k >= 3");
    clique_on(&mut g, &tips);
    g.add_edge(tips[0], vk);
    let v = total;
    for &tip in &tips {
        g.add_edge(v, tip);
    }
    for (i, &tip) in tips.iter().enumerate() {
        marks.push(NamedSet::new(format!("v{}", i + 1), vec![tip]));
    }
    marks.push(NamedSet::new("vk", vec![vk]));
    marks.push(NamedSet::new("v", vec![v]));
    blocks.push(NamedSet::new("v", vec![v]));
    Ok(BlockGraph {
        graph: g,
        blocks,
        marks,
        provenance: Provenance::Pendant { k },
        params: None,
    })
}

/// `V_H = 0..h` spans a clique joined to every other vertex; block `j`
/// follows in order and induces `fs[j]`; blocks `i` and `j` are completely
/// joined when `ij` is an edge of `g0` and otherwise not at all.
pub fn build_product_raw(h: usize, g0: &Graph, fs: &[Graph]) -> Result<BlockGraph> {
    if fs.len() != g0.n() {
        return Err(Error::input(format!(
            "{} blocks given for a base graph on {} vertices",
            fs.len(),
            g0.n()
        )));
    }
    let total = h + fs.iter().map(Graph::n).sum::<usize>();
    let mut g = Graph::empty(total);
    let vh: Vec<usize> = (0..h).collect();
    clique_on(&mut g, &vh);
    let mut blocks = vec![NamedSet::new("VH", vh.clone())];
    let mut offset = h;
    for (j, f) in fs.iter().enumerate() {
        copy_into(&mut g, f, offset);
        let members: Vec<usize> = (offset..offset + f.n()).collect();
        join(&mut g, &vh, &members);
        blocks.push(NamedSet::new(format!("V{}", j + 1), members));
        offset += f.n();
    }
    for (i, j) in g0.edges() {
        let (a, b) = (
            blocks[i + 1].vertices.clone(),
            blocks[j + 1].vertices.clone(),
        );
        join(&mut g, &a, &b);
    }
    Ok(BlockGraph {
        graph: g,
        blocks,
        marks: Vec::new(),
        provenance: Provenance::Product { g0: g0.clone() },
        params: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMode {
    /// Also certify every block's ε-arrowing with the exact engine.
    Strict,
    /// Clique-freeness checks only.
    Relaxed,
}

/// Validated product construction over a parameter schedule.
pub fn build_product(
    params: &GadgetParams,
    g0: &Graph,
    fs: &[Graph],
    mode: ProductMode,
    opts: &ArrowOptions,
) -> Result<BlockGraph> {
    let sizes: Vec<usize> = fs.iter().map(Graph::n).collect();
    if sizes != params.block_sizes {
        return Err(Error::input(format!(
            "block sizes {sizes:?} differ from the schedule's {:?}",
            params.block_sizes
        )));
    }
    let w = clique_number(g0);
    if w + 1 >= params.k {
        return Err(Error::input(format!(
            "base graph contains K_{} (clique number {w})",
            params.k - 1
        )));
    }
    for (j, f) in fs.iter().enumerate() {
        let w = clique_number(f);
        if w >= params.t {
            return Err(Error::input(format!(
                "block V{} contains K_{} (clique number {w})",
                j + 1,
                params.t
            )));
        }
    }
    if mode == ProductMode::Strict {
        let target = TargetPattern::clique(params.t - 1)?;
        for (j, f) in fs.iter().enumerate() {
            let size = params.eps_schedule[j].ceil_mul(f.n());
            match arrows_on_subsets(f, &target, size, opts)? {
                EpsilonVerdict::Holds => {}
                EpsilonVerdict::Fails { subset, .. } => {
                    return Err(Error::input(format!(
                        "block V{} does not {}-arrow K_{}: subset {subset:?} has a good colouring",
                        j + 1,
                        params.eps_schedule[j],
                        params.t - 1
                    )))
                }
                EpsilonVerdict::Undecided => return Err(Error::Undecided { nodes: 0 }),
            }
        }
    }
    let mut bg = build_product_raw(params.h, g0, fs)?;
    bg.params = Some(params.clone());
    Ok(bg)
}
