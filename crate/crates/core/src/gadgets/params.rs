//! Parameter schedule for the product construction.

use crate::arrowing::{ramsey_number, ArrowOptions, RamseyOutcome, TargetPattern};
use crate::error::{Error, Result};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The number `2^-exponent`, kept exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Dyadic {
    pub exponent: u32,
}

impl Dyadic {
    pub fn new(exponent: u32) -> Self {
        Self { exponent }
    }

    /// `⌈n · 2^-exponent⌉`.
    pub fn ceil_mul(self, n: usize) -> usize {
        if self.exponent >= usize::BITS {
            return usize::from(n > 0);
        }
        let shift = self.exponent;
        (n >> shift) + usize::from(n & ((1usize << shift) - 1) != 0)
    }

    /// As a rational, when the denominator fits in 64 bits.
    pub fn to_ratio(self) -> Option<Ratio<u64>> {
        (self.exponent < 64).then(|| Ratio::new(1, 1u64 << self.exponent))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^-{}", self.exponent)
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.strip_prefix("2^-")
            .and_then(|e| e.parse().ok())
            .map(Self::new)
            .ok_or_else(|| Error::input(format!("expected 2^-<e>, got {s:?}")))
    }
}

impl From<Dyadic> for String {
    fn from(d: Dyadic) -> Self {
        d.to_string()
    }
}

impl TryFrom<String> for Dyadic {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RSource {
    Supplied,
    Computed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetParams {
    pub k: usize,
    pub t: usize,
    /// `R(k, k-t+1)`.
    pub r_value: usize,
    pub r_source: RSource,
    pub h: usize,
    pub f: usize,
    pub eps0: Dyadic,
    /// `eps_schedule[j]` belongs to block `j` (0-based).
    pub eps_schedule: Vec<Dyadic>,
    pub block_sizes: Vec<usize>,
}

impl GadgetParams {
    pub fn n0(&self) -> usize {
        self.block_sizes.len()
    }

    /// The pattern `K_k + f·K_t` this schedule is built against.
    pub fn target(&self) -> TargetPattern {
        TargetPattern::CliquePlusCliques {
            k: self.k,
            f: self.f,
            t: self.t,
        }
    }
}

/// `h = R + k − 1`, `f = ⌊(R − 1)/t⌋ + 1`, `ε0 = 2^-(h+1)` and, for block
/// `j` (1-based), `ε_j = 2^-(h + n0 − j + Σ_{i<j} v(F_i))`.
pub fn schedule_params(
    k: usize,
    t: usize,
    r_value: usize,
    block_sizes: &[usize],
) -> Result<GadgetParams> {
    if k <= t {
        return Err(Error::input(format!("need k > t, got k={k}, t={t}")));
    }
    if t < 3 {
        return Err(Error::input(format!("need t >= 3, got {t}")));
    }
    if r_value < 2 {
        return Err(Error::input(format!(
            "Ramsey value must be at least 2, got {r_value}"
        )));
    }
    let h = r_value + k - 1;
    let n0 = block_sizes.len();
    let exponent =
        |x: usize| u32::try_from(x).map_err(|_| Error::input("schedule exponent overflows u32"));
    let mut eps_schedule = Vec::with_capacity(n0);
    let mut before = 0usize;
    for (idx, &size) in block_sizes.iter().enumerate() {
        let j = idx + 1;
        eps_schedule.push(Dyadic::new(exponent(h + n0 - j + before)?));
        before += size;
    }
    Ok(GadgetParams {
        k,
        t,
        r_value,
        r_source: RSource::Supplied,
        h,
        f: (r_value - 1) / t + 1,
        eps0: Dyadic::new(exponent(h + 1)?),
        eps_schedule,
        block_sizes: block_sizes.to_vec(),
    })
}

/// As [`schedule_params`], computing `R(k, k−t+1)` with the arrowing engine.
pub fn schedule_params_computed(
    k: usize,
    t: usize,
    block_sizes: &[usize],
    opts: &ArrowOptions,
) -> Result<GadgetParams> {
    if k <= t {
        return Err(Error::input(format!("need k > t, got k={k}, t={t}")));
    }
    let r = match ramsey_number(
        &TargetPattern::clique(k)?,
        &TargetPattern::clique(k - t + 1)?,
        opts,
    ) {
        RamseyOutcome::Determined(r) => r,
        RamseyOutcome::Undecided { .. } => return Err(Error::Undecided { nodes: 0 }),
    };
    let mut params = schedule_params(k, t, r, block_sizes)?;
    params.r_source = RSource::Computed;
    Ok(params)
}
