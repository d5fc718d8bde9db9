//! The fixed colourings that come with each gadget, and checks of the
//! properties they are built to have.

use super::block::{BlockGraph, Provenance};
use crate::arrowing::{find_mono, Colour, EdgeColouring, TargetPattern};
use crate::error::{Error, Result};
use crate::graph::clique_number;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColouringKind {
    /// On a `G0` gadget: red inside `H` and inside every block, blue elsewhere.
    G0Prop1,
    /// On a product: red inside `V_H` and inside every block, blue elsewhere.
    G2,
    /// On a pendant gadget with `v` removed: each part coloured as
    /// [`ColouringKind::G0Prop1`], the added edges blue.
    PendantMinusV,
}

impl fmt::Display for ColouringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::G0Prop1 => "g0-prop1",
            Self::G2 => "g2",
            Self::PendantMinusV => "lemma7",
        })
    }
}

impl FromStr for ColouringKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g0-prop1" => Ok(Self::G0Prop1),
            "g2" => Ok(Self::G2),
            "lemma7" | "lemma7-minus-v" => Ok(Self::PendantMinusV),
            _ => Err(Error::input(format!("unknown colouring kind `{s}`"))),
        }
    }
}

/// Red exactly on edges whose ends share a block.
fn same_block_red(bg: &BlockGraph, skip: Option<usize>) -> EdgeColouring {
    let owner = bg.block_of();
    let mut graph = bg.graph.clone();
    if let Some(v) = skip {
        graph = graph.without_vertex(v);
    }
    EdgeColouring::from_fn(graph, |u, v| {
        if owner[u] == owner[v] {
            Colour::Red
        } else {
            Colour::Blue
        }
    })
}

fn pendant_k(bg: &BlockGraph) -> Result<usize> {
    match bg.provenance {
        Provenance::Pendant { k } => Ok(k),
        _ => Err(Error::input("expected a pendant gadget")),
    }
}

fn pendant_vertex(bg: &BlockGraph) -> Result<usize> {
    match bg.mark("v") {
        Some(&[v]) if v + 1 == bg.graph.n() => Ok(v),
        _ => Err(Error::input(
            "pendant gadget lacks its last vertex mark `v`",
        )),
    }
}

/// The colouring of `kind` on `bg`. For [`ColouringKind::PendantMinusV`]
/// `bg` is the whole pendant gadget and the result colours `bg − v`.
pub fn canonical_colouring(kind: ColouringKind, bg: &BlockGraph) -> Result<EdgeColouring> {
    bg.validate()?;
    match (kind, &bg.provenance) {
        (ColouringKind::G0Prop1, Provenance::G0 { .. }) => Ok(same_block_red(bg, None)),
        (ColouringKind::G2, Provenance::Product { .. }) => Ok(same_block_red(bg, None)),
        (ColouringKind::PendantMinusV, Provenance::Pendant { .. }) => {
            let v = pendant_vertex(bg)?;
            Ok(same_block_red(bg, Some(v)))
        }
        (kind, p) => Err(Error::input(format!(
            "colouring {kind} does not apply to a {} gadget",
            match p {
                Provenance::G0 { .. } => "g0",
                Provenance::Pendant { .. } => "pendant",
                Provenance::Product { .. } => "product",
            }
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Offending vertices for a failed check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

fn absent(name: String, c: &EdgeColouring, p: &TargetPattern, colour: Colour) -> CheckResult {
    let found = find_mono(c, p, colour);
    CheckResult {
        name,
        passed: found.is_none(),
        witness: found,
    }
}

/// Exact checks of the properties `kind` is meant to have on `bg`.
pub fn check_canonical_colouring(
    kind: ColouringKind,
    bg: &BlockGraph,
    colouring: &EdgeColouring,
) -> Result<Vec<CheckResult>> {
    let expected_graph = match kind {
        ColouringKind::PendantMinusV => bg.graph.without_vertex(pendant_vertex(bg)?),
        _ => bg.graph.clone(),
    };
    if colouring.graph() != &expected_graph {
        return Err(Error::input("colouring is not on the gadget's graph"));
    }
    let mut out = Vec::new();
    match (kind, &bg.provenance) {
        (ColouringKind::G0Prop1, &Provenance::G0 { k }) => {
            let pend = TargetPattern::clique_pendant(k)?;
            let clique = TargetPattern::clique(k)?;
            out.push(absent(
                format!("no red {pend}"),
                colouring,
                &pend,
                Colour::Red,
            ));
            out.push(absent(
                format!("no blue {clique}"),
                colouring,
                &clique,
                Colour::Blue,
            ));
            let w = clique_number(&colouring.class(Colour::Blue));
            out.push(CheckResult {
                name: format!("blue clique number {w} <= {}", k - 1),
                passed: w < k,
                witness: None,
            });
        }
        (ColouringKind::G2, Provenance::Product { .. }) => {
            let params = bg
                .params
                .as_ref()
                .ok_or_else(|| Error::input("product gadget has no parameters"))?;
            let w = clique_number(&colouring.class(Colour::Blue));
            out.push(CheckResult {
                name: format!("blue clique number {w} == {}", params.k - 1),
                passed: w + 1 == params.k,
                witness: None,
            });
            let target = params.target();
            for c in [Colour::Red, Colour::Blue] {
                let name = format!("no {c:?} {target}").to_lowercase();
                out.push(absent(name, colouring, &target, c));
            }
        }
        (ColouringKind::PendantMinusV, Provenance::Pendant { .. }) => {
            let pend = TargetPattern::clique_pendant(pendant_k(bg)?)?;
            for c in [Colour::Red, Colour::Blue] {
                let name = format!("no {c:?} {pend}").to_lowercase();
                out.push(absent(name, colouring, &pend, c));
            }
        }
        _ => {
            return Err(Error::input(format!(
                "colouring {kind} does not apply here"
            )))
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{build_g0, build_pendant_gadget};
    use crate::graph::Graph;

    #[test]
    fn g0_prop1_at_k3() {
        let bg = build_g0(3, &Graph::cycle(5)).unwrap();
        let c = canonical_colouring(ColouringKind::G0Prop1, &bg).unwrap();
        assert_eq!(c.colour(0, 1), Some(Colour::Red));
        assert_eq!(c.colour(3, 4), Some(Colour::Red));
        assert_eq!(c.colour(0, 3), Some(Colour::Blue));
        let checks = check_canonical_colouring(ColouringKind::G0Prop1, &bg, &c).unwrap();
        assert!(checks.iter().all(|r| r.passed), "{checks:?}");
        assert!(canonical_colouring(ColouringKind::G2, &bg).is_err());
    }

    #[test]
    fn pendant_colouring_drops_v() {
        let g0 = build_g0(3, &Graph::cycle(5)).unwrap();
        let bg = build_pendant_gadget(3, &[g0.clone(), g0]).unwrap();
        let c = canonical_colouring(ColouringKind::PendantMinusV, &bg).unwrap();
        assert_eq!(c.graph().n(), 16);
        assert_eq!(c.edges().len(), 48);
        assert_eq!(c.colour(0, 8), Some(Colour::Blue));
        assert_eq!(c.colour(0, 9), Some(Colour::Blue));
        let checks = check_canonical_colouring(ColouringKind::PendantMinusV, &bg, &c).unwrap();
        assert!(checks.iter().all(|r| r.passed), "{checks:?}");
    }

    #[test]
    fn kind_names_round_trip() {
        for k in [
            ColouringKind::G0Prop1,
            ColouringKind::G2,
            ColouringKind::PendantMinusV,
        ] {
            assert_eq!(k.to_string().parse::<ColouringKind>().unwrap(), k);
        }
    }
}
