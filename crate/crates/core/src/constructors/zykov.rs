use std::sync::Arc;

use crate::aop::{verify_aop, AopCheck};
use crate::error::{Error, Result};
use crate::graph::{AcyclicDigraph, Labels, Orientation, UndirectedGraph};

// Above this many vertices the path-count check of the built orientation is
// skipped; its matrix is quadratic in the vertex count.
const VERIFY_LIMIT: usize = 5_000;

/// A Zykov graph with its sink-apex orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZykovGraph {
    pub graph: Arc<UndirectedGraph>,
    pub orientation: Orientation,
}

impl ZykovGraph {
    pub fn digraph(&self) -> AcyclicDigraph {
        self.orientation
            .to_digraph()
            .expect("Zykov orientations are total and acyclic")
            .with_labels(self.graph.labels().clone())
            .expect("labels come from the same vertex set")
    }
}

/// Vertex count of `Z_n`, or `None` on overflow.
pub fn zykov_order(n: usize) -> Option<usize> {
    if n == 0 {
        return Some(0);
    }
    let mut sizes = vec![1usize];
    while sizes.len() < n {
        let copies = sizes.iter().try_fold(0usize, |acc, &z| acc.checked_add(z))?;
        let apexes = sizes.iter().try_fold(1usize, |acc, &z| acc.checked_mul(z))?;
        sizes.push(copies.checked_add(apexes)?);
    }
    sizes.last().copied()
}

struct Level {
    n: usize,
    arcs: Vec<(usize, usize)>,
    labels: Vec<String>,
}

/// `Z_n`: `Z_1` is a single vertex; `Z_{m+1}` is the disjoint union of
/// `Z_1, ..., Z_m` plus one apex per transversal picking a vertex from each
/// copy. Copies keep their orientation and every apex is a sink.
///
/// Labels are `r` for `Z_1`, `i.x` for vertex `x` of the copy of `Z_i`, and
/// `aj` for the `j`-th apex, transversals in lexicographic order.
pub fn zykov(n: usize, cap: usize) -> Result<ZykovGraph> {
    if n == 0 {
        return Err(Error::Parameter("Zykov graphs start at n = 1".into()));
    }
    match zykov_order(n) {
        Some(size) if size <= cap => {}
        size => {
            return Err(Error::SizeCap {
                what: "Zykov graph",
                size: size.unwrap_or(usize::MAX),
                cap,
            })
        }
    }
    let mut levels = vec![Level {
        n: 1,
        arcs: Vec::new(),
        labels: vec!["r".to_string()],
    }];
    while levels.len() < n {
        levels.push(next_level(&levels));
    }
    let top = levels.pop().expect("at least one level");
    let graph = UndirectedGraph::new(top.n, top.arcs.iter().copied())?
        .with_labels(top.labels.into_iter().enumerate().collect::<Labels>())?;
    let graph = Arc::new(graph);
    let orientation = Orientation::from_arcs(Arc::clone(&graph), top.arcs)?;
    if graph.n() <= VERIFY_LIMIT {
        if let AopCheck::Violated(v) = verify_aop(&orientation)? {
            return Err(Error::Invariant(format!("Z_{n} orientation is not AOP: {v}")));
        }
    }
    Ok(ZykovGraph { graph, orientation })
}

fn next_level(levels: &[Level]) -> Level {
    let mut arcs = Vec::new();
    let mut labels = Vec::new();
    let mut offsets = Vec::with_capacity(levels.len());
    for (i, level) in levels.iter().enumerate() {
        let offset = labels.len();
        offsets.push(offset);
        arcs.extend(level.arcs.iter().map(|&(u, v)| (u + offset, v + offset)));
        labels.extend(level.labels.iter().map(|l| format!("{}.{l}", i + 1)));
    }
    let mut pick = vec![0usize; levels.len()];
    let mut apex = 0;
    loop {
        let id = labels.len();
        labels.push(format!("a{apex}"));
        apex += 1;
        arcs.extend(pick.iter().zip(&offsets).map(|(&x, &off)| (x + off, id)));
        // odometer over transversals, last copy fastest
        let mut slot = levels.len();
        loop {
            if slot == 0 {
                return Level {
                    n: labels.len(),
                    arcs,
                    labels,
                };
            }
            slot -= 1;
            pick[slot] += 1;
            if pick[slot] < levels[slot].n {
                break;
            }
            pick[slot] = 0;
        }
    }
}
