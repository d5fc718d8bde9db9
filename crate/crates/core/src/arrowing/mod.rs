//! Monochromatic copies, exact arrowing decisions and their CNF form.

mod cnf;
mod colouring;
mod pattern;
mod ramsey;
mod search;

pub use cnf::{decode_model, parse_dimacs, solve, to_cnf, CnfInstance, SatResult};
pub use colouring::{find_mono, Colour, EdgeColouring};
pub use pattern::{Embedding, TargetPattern};
pub use ramsey::{
    arrows_on_subsets, ceil_fraction, epsilon_arrows, ramsey_number, EpsilonVerdict, RamseyOutcome,
};
pub use search::{arrows, ArrowOptions, ArrowingVerdict, Outcome, SearchStats};

pub(crate) use ramsey::Allowance;
