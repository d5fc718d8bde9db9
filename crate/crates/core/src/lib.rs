//! Exact toolkit for graph Ramsey arrowing.
//!
//! * [`graph`]: simple graphs, hypergraphs, clique/independence, codecs.
//! * [`arrowing`]: monochromatic pattern search, arrowing decisions, CNF export.
//! * [`minimal`]: Ramsey-minimality, minimalization, degree surveys.
//! * [`focusing`]: colour focusing on complete bipartite colourings.
//! * [`gadgets`]: the gadget graphs and their canonical colourings.

pub mod arrowing;
pub mod bitset;
pub mod error;
pub mod focusing;
pub mod gadgets;
pub mod graph;
pub mod minimal;

pub use arrowing::{
    arrows, find_mono, ArrowOptions, ArrowingVerdict, Colour, EdgeColouring, Outcome, TargetPattern,
};
pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Edge, Girth, Graph, Hypergraph};
