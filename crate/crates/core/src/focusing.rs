//! Colour focusing on complete bipartite colourings, and its iterated use
//! on product gadgets.
//!
//! A colour pattern of `b ∈ B` lists the colours of `ab` for `a ∈ A` in
//! ascending order of `a`. Patterns compare as strings with red before
//! blue; ties between equally common patterns go to the least one.

use crate::arrowing::{Colour, EdgeColouring};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::gadgets::{BlockGraph, Provenance};
use crate::graph::{find_clique_within, Graph};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Colours of all pairs between two disjoint vertex sets, both kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteColouring {
    a_side: Vec<usize>,
    b_side: Vec<usize>,
    /// Row-major over `a_side × b_side`.
    colours: Vec<Colour>,
}

impl BipartiteColouring {
    pub fn from_fn(
        a_side: &[usize],
        b_side: &[usize],
        mut f: impl FnMut(usize, usize) -> Colour,
    ) -> Result<Self> {
        let a: Vec<usize> = a_side
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let b: Vec<usize> = b_side
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if a.len() != a_side.len() || b.len() != b_side.len() {
            return Err(Error::input("repeated vertex in a side"));
        }
        if let Some(v) = a.iter().find(|v| b.binary_search(v).is_ok()) {
            return Err(Error::input(format!("vertex {v} lies on both sides")));
        }
        let colours = a
            .iter()
            .flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Ok(Self {
            a_side: a,
            b_side: b,
            colours,
        })
    }

    /// Restricts `chi` to the pairs between `a_side` and `b_side`, all of
    /// which must be edges.
    pub fn from_colouring(chi: &EdgeColouring, a_side: &[usize], b_side: &[usize]) -> Result<Self> {
        let mut missing = None;
        let bc = Self::from_fn(a_side, b_side, |x, y| {
            chi.colour(x, y).unwrap_or_else(|| {
                missing.get_or_insert((x, y));
                Colour::Red
            })
        })?;
        match missing {
            Some((x, y)) => Err(Error::input(format!("{x}{y} is not an edge"))),
            None => Ok(bc),
        }
    }

    pub fn a_side(&self) -> &[usize] {
        &self.a_side
    }

    pub fn b_side(&self) -> &[usize] {
        &self.b_side
    }

    /// Colour between the `i`-th vertex of `A` and the `j`-th of `B`.
    pub fn colour_at(&self, i: usize, j: usize) -> Colour {
        self.colours[i * self.b_side.len() + j]
    }

    fn pattern(&self, j: usize) -> Vec<Colour> {
        (0..self.a_side.len())
            .map(|i| self.colour_at(i, j))
            .collect()
    }

    fn check_nonempty(&self) -> Result<()> {
        if self.a_side.is_empty() || self.b_side.is_empty() {
            return Err(Error::input("both sides must be non-empty"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowFocus {
    pub b_prime: Vec<usize>,
    /// Colour from each `a` (ascending) to all of `b_prime`.
    pub rows: Vec<(usize, Colour)>,
}

/// The `b` vertices sharing the most common colour pattern towards `A`.
pub fn focus_rows(bc: &BipartiteColouring) -> Result<RowFocus> {
    bc.check_nonempty()?;
    let mut groups: BTreeMap<Vec<Colour>, Vec<usize>> = BTreeMap::new();
    for (j, &b) in bc.b_side.iter().enumerate() {
        groups.entry(bc.pattern(j)).or_default().push(b);
    }
    let mut best: Option<(&Vec<Colour>, &Vec<usize>)> = None;
    for (p, members) in &groups {
        if best.is_none_or(|(_, m)| members.len() > m.len()) {
            best = Some((p, members));
        }
    }
    let (pattern, members) = best.expect("B is non-empty");
    Ok(RowFocus {
        b_prime: members.clone(),
        rows: bc
            .a_side
            .iter()
            .copied()
            .zip(pattern.iter().copied())
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockFocus {
    pub a_prime: Vec<usize>,
    pub b_prime: Vec<usize>,
    pub colour: Colour,
}

/// [`focus_rows`], then the rows of the majority colour (red on a tie).
pub fn focus_block(bc: &BipartiteColouring) -> Result<BlockFocus> {
    let rows = focus_rows(bc)?;
    let reds = rows.rows.iter().filter(|(_, c)| *c == Colour::Red).count();
    let colour = if 2 * reds >= rows.rows.len() {
        Colour::Red
    } else {
        Colour::Blue
    };
    Ok(BlockFocus {
        a_prime: rows
            .rows
            .iter()
            .filter(|(_, c)| *c == colour)
            .map(|&(a, _)| a)
            .collect(),
        b_prime: rows.b_prime,
        colour,
    })
}

/// Outcome of iterated focusing. Blocks are numbered from 1 as in their
/// names `V1, V2, ...`; `c_row` is keyed by vertex of `V_H`; `c_pair` by
/// `"i-j"` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FocusReport {
    #[serde(rename = "J")]
    pub j_set: Vec<usize>,
    #[serde(rename = "W")]
    pub w_sets: BTreeMap<usize, Vec<usize>>,
    pub w_colour: BTreeMap<usize, Colour>,
    pub c_row: BTreeMap<usize, Colour>,
    pub c_pair: BTreeMap<String, Colour>,
    /// `|V_j''|` after both stages.
    pub sizes: BTreeMap<usize, usize>,
}

pub fn pair_key(i: usize, j: usize) -> String {
    format!("{i}-{j}")
}

/// The first block (in order) whose focused set holds no monochromatic
/// `K_{t−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FocusFailure {
    pub block: usize,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FocusOutcome {
    Report(FocusReport),
    Failed(FocusFailure),
}

struct Product<'a> {
    g0: &'a Graph,
    vh: &'a [usize],
    blocks: Vec<&'a [usize]>,
    h: usize,
    t: usize,
    eps: Vec<crate::gadgets::Dyadic>,
}

fn product_parts(bg: &BlockGraph) -> Result<Product<'_>> {
    let Provenance::Product { g0 } = &bg.provenance else {
        return Err(Error::input("focusing needs a product gadget"));
    };
    let params = bg
        .params
        .as_ref()
        .ok_or_else(|| Error::input("product gadget has no parameters"))?;
    let vh = bg
        .block("VH")
        .ok_or_else(|| Error::input("missing block VH"))?;
    let blocks = (1..=g0.n())
        .map(|j| {
            bg.block(&format!("V{j}"))
                .ok_or_else(|| Error::input(format!("missing block V{j}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    if vh.len() != params.h || sizes != params.block_sizes {
        return Err(Error::input("block sizes disagree with the parameters"));
    }
    Ok(Product {
        g0,
        vh,
        blocks,
        h: params.h,
        t: params.t,
        eps: params.eps_schedule.clone(),
    })
}

fn ceil_div_pow2(n: usize, e: usize) -> usize {
    if e >= usize::BITS as usize {
        return usize::from(n > 0);
    }
    n.div_ceil(1 << e)
}

/// Stage 1 focuses every block against `V_H` and keeps the blocks `J` whose
/// row colours agree with the most common choice. Stage 2 focuses the pairs
/// `i < j` of `J` adjacent in `g0`, in lexicographic order, with block `i`
/// as `A`. Each surviving set is then searched for a red, then a blue
/// `K_{t−1}`.
pub fn iterated_focus(bg: &BlockGraph, chi: &EdgeColouring) -> Result<FocusOutcome> {
    let p = product_parts(bg)?;
    if chi.graph() != &bg.graph {
        return Err(Error::input("colouring is not on the gadget's graph"));
    }
    let n0 = p.blocks.len();
    let mut focused: Vec<Vec<usize>> = Vec::with_capacity(n0);
    let mut by_rows: BTreeMap<Vec<Colour>, Vec<usize>> = BTreeMap::new();
    for (j, block) in p.blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::input(format!("block V{} is empty", j + 1)));
        }
        let rf = focus_rows(&BipartiteColouring::from_colouring(chi, p.vh, block)?)?;
        by_rows
            .entry(rf.rows.iter().map(|&(_, c)| c).collect())
            .or_default()
            .push(j);
        focused.push(rf.b_prime);
    }
    let mut chosen: Option<(&Vec<Colour>, &Vec<usize>)> = None;
    for (rows, members) in &by_rows {
        if chosen.is_none_or(|(_, m)| members.len() > m.len()) {
            chosen = Some((rows, members));
        }
    }
    let (rows, members) = chosen.expect("at least one block");
    assert!(members.len() >= ceil_div_pow2(n0, p.h));
    let c_row: BTreeMap<usize, Colour> = p.vh.iter().copied().zip(rows.iter().copied()).collect();
    let j_set: Vec<usize> = members.clone();
    let in_j: BTreeSet<usize> = j_set.iter().copied().collect();

    let mut c_pair = BTreeMap::new();
    for (i, j) in p.g0.edges() {
        if !in_j.contains(&i) || !in_j.contains(&j) {
            continue;
        }
        let bf = focus_block(&BipartiteColouring::from_colouring(
            chi,
            &focused[i],
            &focused[j],
        )?)?;
        focused[i] = bf.a_prime;
        focused[j] = bf.b_prime;
        c_pair.insert(pair_key(i + 1, j + 1), bf.colour);
    }

    let mut report = FocusReport {
        j_set: j_set.iter().map(|j| j + 1).collect(),
        w_sets: BTreeMap::new(),
        w_colour: BTreeMap::new(),
        c_row,
        c_pair,
        sizes: BTreeMap::new(),
    };
    let n = bg.graph.n();
    let classes = [Colour::Red, Colour::Blue].map(|c| chi.class(c));
    for &j in &j_set {
        let set = &focused[j];
        assert!(
            set.len() >= p.eps[j].ceil_mul(p.blocks[j].len()),
            "focused block V{} below its schedule bound",
            j + 1
        );
        report.sizes.insert(j + 1, set.len());
        let cand = VertexSet::from_members(n, set.iter().copied());
        let found = [Colour::Red, Colour::Blue]
            .into_iter()
            .zip(&classes)
            .find_map(|(c, g)| find_clique_within(g.adjacency(), &cand, p.t - 1).map(|w| (c, w)));
        match found {
            Some((c, w)) => {
                report.w_sets.insert(j + 1, w);
                report.w_colour.insert(j + 1, c);
            }
            None => {
                return Ok(FocusOutcome::Failed(FocusFailure {
                    block: j + 1,
                    size: set.len(),
                }))
            }
        }
    }
    Ok(FocusOutcome::Report(report))
}

/// One broken report item: `a` size of `J`, `b` the sets `W_j`, `c` pair
/// colours, `d` row colours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub item: char,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<(usize, usize)>,
    pub message: String,
}

impl Violation {
    fn new(
        item: char,
        block: Option<usize>,
        edge: Option<(usize, usize)>,
        message: String,
    ) -> Self {
        Self {
            item,
            block,
            edge,
            message,
        }
    }
}

fn check_edge(
    chi: &EdgeColouring,
    u: usize,
    v: usize,
    want: Colour,
    item: char,
    block: Option<usize>,
    out: &mut Vec<Violation>,
) {
    let e = crate::graph::edge(u, v);
    match chi.colour(u, v) {
        Some(c) if c == want => {}
        Some(c) => out.push(Violation::new(
            item,
            block,
            Some(e),
            format!("{u}{v} is {c:?}, expected {want:?}").to_lowercase(),
        )),
        None => out.push(Violation::new(
            item,
            block,
            Some(e),
            format!("{u}{v} is not an edge"),
        )),
    }
}

/// Re-checks every claim of `report` against `chi`, returning all
/// violations (none means the report is valid).
pub fn verify_focus_report(
    bg: &BlockGraph,
    chi: &EdgeColouring,
    report: &FocusReport,
) -> Result<Vec<Violation>> {
    let p = product_parts(bg)?;
    if chi.graph() != &bg.graph {
        return Err(Error::input("colouring is not on the gadget's graph"));
    }
    let n0 = p.blocks.len();
    let mut out = Vec::new();
    let need = ceil_div_pow2(n0, p.h);
    let distinct: BTreeSet<usize> = report.j_set.iter().copied().collect();
    if distinct.len() < need {
        out.push(Violation::new(
            'a',
            None,
            None,
            format!("|J| = {} below {need}", distinct.len()),
        ));
    }
    if let Some(&j) = distinct.iter().find(|&&j| j == 0 || j > n0) {
        out.push(Violation::new('a', Some(j), None, format!("no block V{j}")));
    }
    let valid: Vec<usize> = distinct
        .iter()
        .copied()
        .filter(|&j| j >= 1 && j <= n0)
        .collect();

    for &j in &valid {
        let Some(w) = report.w_sets.get(&j) else {
            out.push(Violation::new(
                'b',
                Some(j),
                None,
                format!("no W for block V{j}"),
            ));
            continue;
        };
        let Some(&colour) = report.w_colour.get(&j) else {
            out.push(Violation::new(
                'b',
                Some(j),
                None,
                format!("no colour for W{j}"),
            ));
            continue;
        };
        let uniq: BTreeSet<usize> = w.iter().copied().collect();
        if uniq.len() != p.t - 1 || w.len() != p.t - 1 {
            out.push(Violation::new(
                'b',
                Some(j),
                None,
                format!("|W{j}| is not {}", p.t - 1),
            ));
        }
        if let Some(&v) = w.iter().find(|v| !p.blocks[j - 1].contains(v)) {
            out.push(Violation::new(
                'b',
                Some(j),
                None,
                format!("{v} lies outside V{j}"),
            ));
        }
        let w: Vec<usize> = uniq.into_iter().collect();
        for (x, &u) in w.iter().enumerate() {
            for &v in &w[x + 1..] {
                check_edge(chi, u, v, colour, 'b', Some(j), &mut out);
            }
        }
    }

    let in_j: BTreeSet<usize> = valid.iter().copied().collect();
    for (i, j) in p.g0.edges() {
        let (i, j) = (i + 1, j + 1);
        if !in_j.contains(&i) || !in_j.contains(&j) {
            continue;
        }
        let key = pair_key(i, j);
        let Some(&colour) = report.c_pair.get(&key) else {
            out.push(Violation::new(
                'c',
                Some(i),
                None,
                format!("no colour for pair {key}"),
            ));
            continue;
        };
        let (Some(wi), Some(wj)) = (report.w_sets.get(&i), report.w_sets.get(&j)) else {
            continue;
        };
        for &u in wi {
            for &v in wj {
                check_edge(chi, u, v, colour, 'c', Some(i), &mut out);
            }
        }
    }

    for &v in p.vh {
        let Some(&colour) = report.c_row.get(&v) else {
            out.push(Violation::new(
                'd',
                None,
                None,
                format!("no row colour for {v}"),
            ));
            continue;
        };
        for j in &valid {
            for &w in report.w_sets.get(j).into_iter().flatten() {
                check_edge(chi, v, w, colour, 'd', Some(*j), &mut out);
            }
        }
    }
    Ok(out)
}
