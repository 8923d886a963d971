//! The graph JSON schema:
//!
//! ```text
//! {"n": 3, "directed": false, "edges": [[0, 1], [1, 2]], "labels": {"0": "a"}}
//! ```
//!
//! Output is canonical: keys in the order above, edges sorted, one space
//! after every `:` and `,`, and `labels` omitted when empty.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

use super::{AcyclicDigraph, Labels, Orientation, UndirectedGraph};
use crate::error::{Error, Result};

/// Either kind of graph the schema can describe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Undirected(UndirectedGraph),
    Directed(AcyclicDigraph),
}

impl ParsedGraph {
    pub fn to_json(&self) -> String {
        match self {
            ParsedGraph::Undirected(g) => g.to_json(),
            ParsedGraph::Directed(d) => d.to_json(),
        }
    }

    /// The undirected graph itself, or the underlying graph of a digraph.
    pub fn into_undirected(self) -> UndirectedGraph {
        match self {
            ParsedGraph::Undirected(g) => g,
            ParsedGraph::Directed(d) => d.underlying(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    n: usize,
    directed: bool,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    labels: Option<BTreeMap<String, String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOrientation {
    edges: Vec<[usize; 2]>,
}

/// Parses and validates a graph document.
pub fn graph_from_json(text: &[u8]) -> Result<ParsedGraph> {
    let raw: RawGraph = serde_json::from_slice(text).map_err(|e| Error::Json(e.to_string()))?;
    let mut labels = Labels::new();
    for (k, v) in raw.labels.unwrap_or_default() {
        let id: usize = k
            .parse()
            .map_err(|_| Error::Json(format!("label key {k:?} is not a vertex id")))?;
        labels.insert(id, v);
    }
    let pairs = raw.edges.into_iter().map(|[u, v]| (u, v));
    if raw.directed {
        Ok(ParsedGraph::Directed(AcyclicDigraph::new(raw.n, pairs)?.with_labels(labels)?))
    } else {
        Ok(ParsedGraph::Undirected(UndirectedGraph::new(raw.n, pairs)?.with_labels(labels)?))
    }
}

fn write_document(n: usize, directed: bool, pairs: &[(usize, usize)], labels: &Labels) -> String {
    let mut s = String::new();
    write!(s, "{{\"n\": {n}, \"directed\": {directed}, \"edges\": [").unwrap();
    write_pairs(&mut s, pairs.iter().copied());
    s.push(']');
    if !labels.is_empty() {
        s.push_str(", \"labels\": {");
        for (i, (id, text)) in labels.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            let quoted = serde_json::to_string(text).expect("strings always serialize");
            write!(s, "\"{id}\": {quoted}").unwrap();
        }
        s.push('}');
    }
    s.push('}');
    s
}

fn write_pairs(s: &mut String, pairs: impl Iterator<Item = (usize, usize)>) {
    for (i, (u, v)) in pairs.enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        write!(s, "[{u}, {v}]").unwrap();
    }
}

impl UndirectedGraph {
    pub fn to_json(&self) -> String {
        write_document(self.n, false, &self.edges, &self.labels)
    }
}

impl AcyclicDigraph {
    pub fn to_json(&self) -> String {
        write_document(self.n, true, &self.arcs, &self.labels)
    }
}

impl Orientation {
    /// `{"edges": [[tail, head], ...]}` in canonical edge order; unset edges omitted.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{\"edges\": [");
        write_pairs(&mut s, self.arcs());
        s.push_str("]}");
        s
    }

    /// Reads the orientation document against a known base graph.
    pub fn from_json(graph: std::sync::Arc<UndirectedGraph>, text: &[u8]) -> Result<Self> {
        let raw: RawOrientation =
            serde_json::from_slice(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_arcs(graph, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}
