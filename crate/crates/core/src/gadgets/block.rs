//! Graphs that remember how they were assembled.

use super::params::GadgetParams;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedSet {
    pub name: String,
    pub vertices: Vec<usize>,
}

impl NamedSet {
    pub fn new(name: impl Into<String>, vertices: Vec<usize>) -> Self {
        Self {
            name: name.into(),
            vertices,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// Clique `H` on `k` vertices joined to `k − 2` mutually joined copies of a block.
    G0 { k: usize },
    /// `k − 1` copies of a `G0` gadget tied together, plus a pendant vertex.
    Pendant { k: usize },
    /// Clique `V_H` joined to blocks arranged along the edges of `g0`.
    Product { g0: Graph },
}

/// A graph with a named vertex partition (`blocks`), named special vertex
/// sets that may overlap blocks (`marks`), and its construction record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockGraph {
    #[serde(rename = "graph6")]
    pub graph: Graph,
    pub blocks: Vec<NamedSet>,
    #[serde(default)]
    pub marks: Vec<NamedSet>,
    pub provenance: Provenance,
    #[serde(default)]
    pub params: Option<GadgetParams>,
}

impl BlockGraph {
    pub fn block(&self, name: &str) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.name == name)
            .map(|b| b.vertices.as_slice())
    }

    pub fn mark(&self, name: &str) -> Option<&[usize]> {
        self.marks
            .iter()
            .find(|b| b.name == name)
            .map(|b| b.vertices.as_slice())
    }

    /// Index of the block containing each vertex.
    pub fn block_of(&self) -> Vec<usize> {
        let mut owner = vec![usize::MAX; self.graph.n()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in &b.vertices {
                owner[v] = i;
            }
        }
        owner
    }

    /// Blocks partition the vertex set and marks stay in range.
    pub fn validate(&self) -> Result<()> {
        let n = self.graph.n();
        let mut seen = vec![false; n];
        for b in &self.blocks {
            for &v in &b.vertices {
                if v >= n {
                    return Err(Error::input(format!(
                        "block {} has vertex {v} >= {n}",
                        b.name
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::input(format!("vertex {v} lies in two blocks")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::input(format!("vertex {v} lies in no block")));
        }
        for m in &self.marks {
            if let Some(&v) = m.vertices.iter().find(|&&v| v >= n) {
                return Err(Error::input(format!(
                    "mark {} has vertex {v} >= {n}",
                    m.name
                )));
            }
        }
        Ok(())
    }

    /// JSON sidecar carrying the graph (graph6), blocks, marks, provenance
    /// and parameters.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let bg: Self = serde_json::from_str(text)
            .map_err(|e| Error::input(format!("bad gadget sidecar: {e}")))?;
        bg.validate()?;
        Ok(bg)
    }
}
