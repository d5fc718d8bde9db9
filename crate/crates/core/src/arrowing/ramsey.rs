//! Questions answered by repeated arrowing calls.

use super::colouring::EdgeColouring;
use super::pattern::TargetPattern;
use super::search::{arrows, ArrowOptions, Outcome};
use crate::error::{Error, Result};
use crate::graph::Graph;
use itertools::Itertools;
use num_rational::Ratio;
use std::time::Instant;

/// Shares one node and time allowance across several searches.
pub(crate) struct Allowance {
    base: ArrowOptions,
    deadline: Option<Instant>,
    used: u64,
}

impl Allowance {
    pub(crate) fn new(opts: &ArrowOptions) -> Self {
        Self {
            base: opts.clone(),
            deadline: opts.time_budget.map(|d| Instant::now() + d),
            used: 0,
        }
    }

    /// Options for the next search, or `None` when nothing is left.
    pub(crate) fn next(&self) -> Option<ArrowOptions> {
        let mut o = self.base.clone();
        if let Some(cap) = o.node_budget {
            o.node_budget = Some(cap.checked_sub(self.used).filter(|&r| r > 0)?);
        }
        if let Some(d) = self.deadline {
            o.time_budget = Some(d.checked_duration_since(Instant::now())?);
        }
        Some(o)
    }

    pub(crate) fn spend(&mut self, nodes: u64) {
        self.used += nodes;
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }

    /// Runs one arrowing search against the shared allowance.
    pub(crate) fn arrows(
        &mut self,
        g: &Graph,
        red: &TargetPattern,
        blue: &TargetPattern,
    ) -> Outcome {
        let Some(opts) = self.next() else {
            return Outcome::Undecided;
        };
        let v = arrows(g, red, blue, &opts);
        self.spend(v.stats.nodes);
        v.outcome
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EpsilonVerdict {
    Holds,
    /// A vertex set of the tested size whose induced subgraph has a good colouring.
    Fails {
        subset: Vec<usize>,
        witness: EdgeColouring,
    },
    Undecided,
}

/// `⌈eps·n⌉` for a rational `eps`.
pub fn ceil_fraction(eps: Ratio<u64>, n: usize) -> usize {
    let num = *eps.numer() as u128 * n as u128;
    num.div_ceil(*eps.denom() as u128) as usize
}

/// Whether every induced subgraph on at least `⌈eps·v(f)⌉` vertices arrows
/// `p`. Only sets of exactly that size are searched; larger sets contain them.
pub fn epsilon_arrows(
    f: &Graph,
    p: &TargetPattern,
    eps: Ratio<u64>,
    opts: &ArrowOptions,
) -> Result<EpsilonVerdict> {
    if *eps.numer() == 0 || eps > Ratio::from_integer(1) {
        return Err(Error::input(format!("eps must lie in (0, 1], got {eps}")));
    }
    arrows_on_subsets(f, p, ceil_fraction(eps, f.n()), opts)
}

/// Whether `f[S]` arrows `p` for every `S` with `|S| = size`, subsets taken
/// in lexicographic order.
pub fn arrows_on_subsets(
    f: &Graph,
    p: &TargetPattern,
    size: usize,
    opts: &ArrowOptions,
) -> Result<EpsilonVerdict> {
    if size > f.n() {
        return Err(Error::input(format!(
            "subset size {size} exceeds {} vertices",
            f.n()
        )));
    }
    let mut allowance = Allowance::new(opts);
    for subset in (0..f.n()).combinations(size) {
        let sub = f.induced_subgraph(&subset)?;
        match allowance.arrows(&sub, p, p) {
            Outcome::Arrow => {}
            Outcome::NotArrow(witness) => return Ok(EpsilonVerdict::Fails { subset, witness }),
            Outcome::Undecided => return Ok(EpsilonVerdict::Undecided),
        }
    }
    Ok(EpsilonVerdict::Holds)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RamseyOutcome {
    Determined(usize),
    /// Budget ran out; `resolved` is the largest order shown not to arrow.
    Undecided {
        resolved: Option<usize>,
    },
}

/// Smallest `n` with `K_n` arrowing `(red, blue)`, searching upwards from the
/// larger pattern order.
pub fn ramsey_number(
    red: &TargetPattern,
    blue: &TargetPattern,
    opts: &ArrowOptions,
) -> RamseyOutcome {
    let mut allowance = Allowance::new(opts);
    let mut resolved = None;
    let mut n = red.vertex_count().max(blue.vertex_count());
    loop {
        match allowance.arrows(&Graph::complete(n), red, blue) {
            Outcome::Arrow => return RamseyOutcome::Determined(n),
            Outcome::NotArrow(_) => resolved = Some(n),
            Outcome::Undecided => return RamseyOutcome::Undecided { resolved },
        }
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: u64, b: u64) -> Ratio<u64> {
        Ratio::new(a, b)
    }

    #[test]
    fn epsilon_examples() {
        let opts = ArrowOptions::default();
        let c5 = Graph::cycle(5);
        let k2 = TargetPattern::Clique(2);
        assert_eq!(
            epsilon_arrows(&c5, &k2, r(1, 2), &opts).unwrap(),
            EpsilonVerdict::Holds
        );
        match epsilon_arrows(&c5, &k2, r(2, 5), &opts).unwrap() {
            EpsilonVerdict::Fails { subset, .. } => {
                assert_eq!(subset.len(), 2);
                assert!(!c5.has_edge(subset[0], subset[1]));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            epsilon_arrows(
                &Graph::complete(3),
                &TargetPattern::Clique(3),
                r(1, 1),
                &opts
            )
            .unwrap(),
            EpsilonVerdict::Fails { .. }
        ));
        assert!(epsilon_arrows(&c5, &k2, r(0, 1), &opts).is_err());
        assert!(epsilon_arrows(&c5, &k2, r(3, 2), &opts).is_err());
    }

    #[test]
    fn ceil_fraction_is_exact() {
        assert_eq!(ceil_fraction(r(1, 2), 5), 3);
        assert_eq!(ceil_fraction(r(2, 5), 5), 2);
        assert_eq!(ceil_fraction(r(1, 1 << 40), 3), 1);
        assert_eq!(ceil_fraction(r(1, 3), 0), 0);
    }

    #[test]
    fn small_ramsey_numbers() {
        let opts = ArrowOptions::default();
        let k = TargetPattern::Clique;
        assert_eq!(
            ramsey_number(&k(3), &k(3), &opts),
            RamseyOutcome::Determined(6)
        );
        assert_eq!(
            ramsey_number(&k(2), &k(2), &opts),
            RamseyOutcome::Determined(2)
        );
        assert_eq!(
            ramsey_number(&k(2), &k(5), &opts),
            RamseyOutcome::Determined(5)
        );
        let tight = ArrowOptions {
            node_budget: Some(40),
            ..Default::default()
        };
        assert!(matches!(
            ramsey_number(&k(3), &k(4), &tight),
            RamseyOutcome::Undecided { .. }
        ));
    }
}
