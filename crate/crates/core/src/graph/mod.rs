//! Core graph types shared by every other module.
//!
//! Vertices are dense ids `0..n`. Edge and arc lists are kept in canonical
//! sorted order so that equal graphs serialize, print and branch identically.
//! Display labels (e.g. `(2,5)` for a shift-graph tuple) ride along in a
//! side table and never influence structure.

mod dot;
mod json;
mod paths;

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use dot::ToDot;
pub use json::{graph_from_json, ParsedGraph};
pub use paths::{connected_components, topological_order, PathCount, PathCountMatrix, TopologicalOrder};

/// Vertex id to display string.
pub type Labels = BTreeMap<usize, String>;

/// Simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Labels,
}

impl UndirectedGraph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Self {
            n,
            edges: list,
            adj,
            labels: Labels::new(),
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            labels: Labels::new(),
        }
    }

    pub fn with_labels(mut self, labels: Labels) -> Result<Self> {
        check_labels(&labels, self.n)?;
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`edges`](Self::edges).
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// Label if present, otherwise the numeric id.
    pub fn display_label(&self, v: usize) -> String {
        display_label(&self.labels, v)
    }

    /// Subgraph induced on `vertices`; the i-th listed vertex becomes vertex i.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self> {
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::Parameter(format!("vertex {v} not in graph")));
            }
            if new_id[v] != usize::MAX {
                return Err(Error::Parameter(format!("vertex {v} listed twice")));
            }
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]));
        let labels = vertices
            .iter()
            .enumerate()
            .filter_map(|(i, v)| self.labels.get(v).map(|l| (i, l.clone())))
            .collect();
        Self::new(vertices.len(), edges)?.with_labels(labels)
    }

    /// Returns true if the graph has a triangle.
    pub fn has_triangle(&self) -> bool {
        self.edges.iter().any(|&(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return true,
                }
            }
            false
        })
    }
}

/// Oriented simple graph together with a topological order of its vertices.
#[derive(Debug, Clone)]
pub struct AcyclicDigraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    topo: Vec<usize>,
    position: Vec<usize>,
    labels: Labels,
}

impl PartialEq for AcyclicDigraph {
    // The stored topological order is one witness among many and is not part
    // of the graph's identity.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.arcs == other.arcs && self.labels == other.labels
    }
}

impl Eq for AcyclicDigraph {}

impl AcyclicDigraph {
    /// Builds the digraph and computes its smallest-id-first topological order.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let arcs = validate_arcs(n, arcs)?;
        match topological_order(n, &arcs) {
            TopologicalOrder::Order(topo) => Ok(Self::assemble(n, arcs, topo)),
            TopologicalOrder::Cycle(cycle) => Err(Error::DirectedCycle(cycle)),
        }
    }

    /// Builds the digraph with a caller-supplied topological order.
    pub fn with_topo<I>(n: usize, arcs: I, topo: Vec<usize>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let arcs = validate_arcs(n, arcs)?;
        let mut position = vec![usize::MAX; n];
        if topo.len() != n {
            return Err(Error::Parameter(format!(
                "topological order has {} entries for {n} vertices",
                topo.len()
            )));
        }
        for (i, &v) in topo.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::Parameter("topological order is not a permutation".into()));
            }
            position[v] = i;
        }
        if let Some(&(u, v)) = arcs.iter().find(|&&(u, v)| position[u] > position[v]) {
            return Err(Error::Parameter(format!(
                "arc ({u},{v}) runs against the supplied order"
            )));
        }
        Ok(Self::assemble(n, arcs, topo))
    }

    fn assemble(n: usize, arcs: Vec<(usize, usize)>, topo: Vec<usize>) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out[u].push(v);
            inn[v].push(u);
        }
        for row in inn.iter_mut() {
            row.sort_unstable();
        }
        let mut position = vec![0; n];
        for (i, &v) in topo.iter().enumerate() {
            position[v] = i;
        }
        Self {
            n,
            arcs,
            out,
            inn,
            topo,
            position,
            labels: Labels::new(),
        }
    }

    pub fn with_labels(mut self, labels: Labels) -> Result<Self> {
        check_labels(&labels, self.n)?;
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs `(tail, head)` in lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_index(&self, tail: usize, head: usize) -> Option<usize> {
        self.arcs.binary_search(&(tail, head)).ok()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn topo(&self) -> &[usize] {
        &self.topo
    }

    /// Index of `v` in [`topo`](Self::topo).
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn display_label(&self, v: usize) -> String {
        display_label(&self.labels, v)
    }

    /// Underlying undirected graph, labels preserved.
    pub fn underlying(&self) -> UndirectedGraph {
        let g = UndirectedGraph::new(self.n, self.arcs.iter().copied())
            .expect("arcs of an oriented graph form a simple graph");
        UndirectedGraph {
            labels: self.labels.clone(),
            ..g
        }
    }

    /// The digraph's own arcs viewed as an orientation of its underlying graph.
    pub fn natural_orientation(&self) -> Orientation {
        let base = Arc::new(self.underlying());
        let dir = base
            .edges()
            .iter()
            .map(|&(u, v)| {
                if self.arc_index(u, v).is_some() {
                    Direction::Forward
                } else {
                    Direction::Backward
                }
            })
            .collect();
        Orientation { graph: base, dir }
    }
}

/// Direction of one edge `{min, max}` of an orientation's base graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `min -> max`
    Forward,
    /// `max -> min`
    Backward,
    Unset,
}

/// Per-edge direction assignment over a shared base graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    graph: Arc<UndirectedGraph>,
    dir: Vec<Direction>,
}

impl Orientation {
    /// All edges unset.
    pub fn unset(graph: Arc<UndirectedGraph>) -> Self {
        let dir = vec![Direction::Unset; graph.edge_count()];
        Self { graph, dir }
    }

    pub fn from_directions(graph: Arc<UndirectedGraph>, dir: Vec<Direction>) -> Result<Self> {
        if dir.len() != graph.edge_count() {
            return Err(Error::InvalidOrientation(format!(
                "{} directions for {} edges",
                dir.len(),
                graph.edge_count()
            )));
        }
        Ok(Self { graph, dir })
    }

    /// Orientation from a list of arcs; base edges not listed stay unset.
    pub fn from_arcs<I>(graph: Arc<UndirectedGraph>, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut o = Self::unset(graph);
        for (u, v) in arcs {
            let e = o.graph.edge_index(u, v).ok_or_else(|| {
                Error::InvalidOrientation(format!("arc ({u},{v}) is not an edge of the graph"))
            })?;
            if o.dir[e] != Direction::Unset {
                return Err(Error::InvalidOrientation(format!("edge [{u}, {v}] listed twice")));
            }
            o.dir[e] = if u < v {
                Direction::Forward
            } else {
                Direction::Backward
            };
        }
        Ok(o)
    }

    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    pub fn shared_graph(&self) -> Arc<UndirectedGraph> {
        Arc::clone(&self.graph)
    }

    pub fn directions(&self) -> &[Direction] {
        &self.dir
    }

    pub fn direction(&self, edge: usize) -> Direction {
        self.dir[edge]
    }

    pub fn set(&mut self, edge: usize, d: Direction) {
        self.dir[edge] = d;
    }

    pub fn is_total(&self) -> bool {
        !self.dir.contains(&Direction::Unset)
    }

    /// `(tail, head)` of edge `e`, or `None` when unset.
    pub fn arc(&self, e: usize) -> Option<(usize, usize)> {
        let (u, v) = self.graph.edges()[e];
        match self.dir[e] {
            Direction::Forward => Some((u, v)),
            Direction::Backward => Some((v, u)),
            Direction::Unset => None,
        }
    }

    /// Oriented arcs in canonical edge order; unset edges are skipped.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.dir.len()).filter_map(|e| self.arc(e))
    }

    /// First unset edge, if any.
    pub fn first_unset(&self) -> Option<(usize, usize)> {
        self.dir
            .iter()
            .position(|&d| d == Direction::Unset)
            .map(|e| self.graph.edges()[e])
    }

    /// The oriented graph as a digraph; fails if partial or cyclic.
    pub fn to_digraph(&self) -> Result<AcyclicDigraph> {
        if let Some((u, v)) = self.first_unset() {
            return Err(Error::PartialOrientation(u, v));
        }
        AcyclicDigraph::new(self.graph.n(), self.arcs())?.with_labels(self.graph.labels().clone())
    }
}

fn validate_arcs<I>(n: usize, arcs: I) -> Result<Vec<(usize, usize)>>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let mut list = Vec::new();
    for (u, v) in arcs {
        if u >= n || v >= n {
            return Err(Error::EndpointOutOfRange { u, v, n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        list.push((u, v));
    }
    list.sort_unstable();
    if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateEdge(w[0].0, w[0].1));
    }
    for &(u, v) in &list {
        if list.binary_search(&(v, u)).is_ok() {
            return Err(Error::OpposingArcs(u.min(v), u.max(v)));
        }
    }
    Ok(list)
}

fn check_labels(labels: &Labels, n: usize) -> Result<()> {
    match labels.keys().next_back() {
        Some(&v) if v >= n => Err(Error::Parameter(format!("label for vertex {v} outside 0..{n}"))),
        _ => Ok(()),
    }
}

fn display_label(labels: &Labels, v: usize) -> String {
    labels.get(&v).cloned().unwrap_or_else(|| v.to_string())
}
