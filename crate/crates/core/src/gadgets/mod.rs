//! Gadget constructions, their parameter schedule, random hypergraphs and
//! the colourings that accompany each gadget.

mod block;
mod build;
mod colourings;
mod hyper;
mod params;

pub use block::{BlockGraph, NamedSet, Provenance};
pub use build::{build_g0, build_pendant_gadget, build_product, build_product_raw, ProductMode};
pub use colourings::{canonical_colouring, check_canonical_colouring, CheckResult, ColouringKind};
pub use hyper::{gen_hypergraph, plant_copies};
pub use params::{schedule_params, schedule_params_computed, Dyadic, GadgetParams, RSource};
