//! Generators for the graph families: acyclic tournaments, shift graphs,
//! line digraphs and their iterates, Zykov graphs and the non-AOP gadgets.

mod gadgets;
pub mod structure;
mod zykov;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{AcyclicDigraph, Labels, UndirectedGraph};

pub use gadgets::{
    brinkmann_graph, closes_to_five_cycle, girth5_non_aop, odd_girth_gadget, three_edge_paths, Girth5Construction,
};
pub use zykov::{zykov, zykov_order, ZykovGraph};

/// Default cap on the vertex count of iterated line digraphs and Zykov graphs.
pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

/// Partition of line-digraph vertices by the topological position of their
/// arc's tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BagDecomposition {
    bags: Vec<Vec<usize>>,
    index: Vec<usize>,
}

impl BagDecomposition {
    /// `bags()[i]` holds the out-arcs of the parent vertex at topological
    /// position `i`; the bag of the last position is always empty.
    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn bag(&self, i: usize) -> &[usize] {
        &self.bags[i]
    }

    /// Bag position of a line-digraph vertex.
    pub fn index(&self, line_vertex: usize) -> usize {
        self.index[line_vertex]
    }

    pub fn indices(&self) -> &[usize] {
        &self.index
    }
}

/// A line digraph with the bag decomposition induced by its parent's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineDigraph {
    pub digraph: AcyclicDigraph,
    pub bags: BagDecomposition,
}

/// `T_n`: arcs `i -> j` for all `i < j`.
pub fn acyclic_tournament(n: usize) -> Result<AcyclicDigraph> {
    if n == 0 {
        return Err(Error::Parameter("tournament needs at least one vertex".into()));
    }
    let arcs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    AcyclicDigraph::with_topo(n, arcs, (0..n).collect())
}

/// Line digraph: one vertex per arc of `g` (ids follow `g.arcs()`), with an
/// arc from `ab` to `bc` for every pair of consecutive arcs.
///
/// The topological order sorts vertices by bag index, ties by id.
pub fn line_digraph(g: &AcyclicDigraph) -> LineDigraph {
    let arcs = g.arcs();
    let mut line_arcs = Vec::new();
    for (e, &(_, b)) in arcs.iter().enumerate() {
        for &c in g.out_neighbors(b) {
            let f = g.arc_index(b, c).expect("out-neighbor arc exists");
            line_arcs.push((e, f));
        }
    }
    let index: Vec<usize> = arcs.iter().map(|&(a, _)| g.position(a)).collect();
    let mut bags = vec![Vec::new(); g.n()];
    for (e, &i) in index.iter().enumerate() {
        bags[i].push(e);
    }
    let mut topo: Vec<usize> = (0..arcs.len()).collect();
    topo.sort_by_key(|&e| (index[e], e));
    let labels: Labels = arcs
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| (e, format!("({},{})", g.display_label(a), g.display_label(b))))
        .collect();
    let digraph = AcyclicDigraph::with_topo(arcs.len(), line_arcs, topo)
        .and_then(|d| d.with_labels(labels))
        .expect("index order is topological for line digraphs of acyclic digraphs");
    LineDigraph {
        digraph,
        bags: BagDecomposition { bags, index },
    }
}

/// Applies [`line_digraph`] `times` times, refusing to exceed `cap` vertices.
pub fn iterate_line_digraph(g: &AcyclicDigraph, times: usize, cap: usize) -> Result<AcyclicDigraph> {
    let mut cur = g.clone();
    for _ in 0..times {
        if cur.arc_count() > cap {
            return Err(Error::SizeCap {
                what: "iterated line digraph",
                size: cur.arc_count(),
                cap,
            });
        }
        cur = line_digraph(&cur).digraph;
    }
    Ok(cur)
}

/// Shift graph `G_{n,k}` built from increasing `k`-tuples over `1..=n`,
/// labeled by the tuples.
///
/// The result is checked against `L^{k-1}(T_n)` under the relabeling that
/// sends a tuple to the arc sequence it spells.
pub fn shift_graph(n: usize, k: usize) -> Result<UndirectedGraph> {
    if k < 2 {
        return Err(Error::Parameter(format!("shift graph needs k >= 2, got {k}")));
    }
    if k == 2 && n < 3 {
        return Err(Error::Parameter(format!("G(n,2) needs n >= 3, got {n}")));
    }
    if k > 2 && n <= 2 * k {
        return Err(Error::Parameter(format!("G(n,{k}) needs n > {}, got {n}", 2 * k)));
    }
    let tuples = increasing_tuples(n, k);
    let id: HashMap<&[usize], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut edges = Vec::new();
    let mut shifted = vec![0; k];
    for (i, t) in tuples.iter().enumerate() {
        shifted[..k - 1].copy_from_slice(&t[1..]);
        for x in t[k - 1] + 1..=n {
            shifted[k - 1] = x;
            edges.push((i, id[shifted.as_slice()]));
        }
    }
    let labels = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            (i, format!("({})", parts.join(",")))
        })
        .collect();
    let g = UndirectedGraph::new(tuples.len(), edges)?.with_labels(labels)?;

    let (iterate, walks) = line_iterate_with_walks(n, k)?;
    let mut relabel = vec![usize::MAX; iterate.n()];
    for (v, walk) in walks.iter().enumerate() {
        let tuple: Vec<usize> = walk.iter().map(|x| x + 1).collect();
        relabel[v] = *id
            .get(tuple.as_slice())
            .ok_or_else(|| Error::Invariant(format!("arc sequence {walk:?} is not a shift tuple")))?;
    }
    let mut image: Vec<(usize, usize)> = iterate
        .arcs()
        .iter()
        .map(|&(u, v)| (relabel[u].min(relabel[v]), relabel[u].max(relabel[v])))
        .collect();
    image.sort_unstable();
    if iterate.n() != g.n() || image != g.edges() {
        return Err(Error::Invariant(format!(
            "G({n},{k}) differs from the iterated line digraph of T_{n}"
        )));
    }
    Ok(g)
}

/// `L^{k-1}(T_n)` with, for each vertex, the tournament walk it encodes.
fn line_iterate_with_walks(n: usize, k: usize) -> Result<(AcyclicDigraph, Vec<Vec<usize>>)> {
    let mut cur = acyclic_tournament(n)?;
    let mut walks: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for _ in 1..k {
        let next: Vec<Vec<usize>> = cur
            .arcs()
            .iter()
            .map(|&(a, b)| {
                let mut w = walks[a].clone();
                w.push(*walks[b].last().expect("walks are nonempty"));
                w
            })
            .collect();
        cur = line_digraph(&cur).digraph;
        walks = next;
    }
    Ok((cur, walks))
}

fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Id of the pair `(i, j)`, `i < j < n`, among all pairs in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// `L(t_prime)` for a subdigraph of `T_n`, with the injection of its
/// vertices into the vertex ids of `G_{n,2}` / `L(T_n)`.
///
/// The image is checked to be an induced subgraph.
pub fn induced_line_subdigraph(t_prime: &AcyclicDigraph, n: usize) -> Result<(LineDigraph, Vec<usize>)> {
    if t_prime.n() > n {
        return Err(Error::Parameter(format!(
            "digraph has {} vertices, more than T_{n}",
            t_prime.n()
        )));
    }
    if let Some(&(u, v)) = t_prime.arcs().iter().find(|&&(u, v)| u >= v) {
        return Err(Error::Parameter(format!("arc ({u},{v}) is not an arc of T_{n}")));
    }
    let line = line_digraph(t_prime);
    let arcs = t_prime.arcs();
    let injection: Vec<usize> = arcs.iter().map(|&(i, j)| pair_index(n, i, j)).collect();
    let h = line.digraph.underlying();
    for p in 0..arcs.len() {
        for q in p + 1..arcs.len() {
            let ((a, b), (c, d)) = (arcs[p], arcs[q]);
            let in_shift = b == c || d == a;
            if in_shift != h.has_edge(p, q) {
                return Err(Error::Invariant(format!(
                    "line digraph of a subtournament is not induced at ({a},{b}), ({c},{d})"
                )));
            }
        }
    }
    Ok((line, injection))
}
