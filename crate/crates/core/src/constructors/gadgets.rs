use crate::error::{Error, Result};
use crate::graph::{Labels, UndirectedGraph};
use crate::invariants::{girth, k_colorable, odd_girth, CycleLength};

/// Odd cycle `u1..ug` (ids `0..g`) plus a twin `u'i` (id `g + i`) of every
/// cycle vertex, adjacent to the two cycle neighbors of `ui`.
pub fn odd_girth_gadget(g: usize) -> Result<UndirectedGraph> {
    if g < 5 || g.is_multiple_of(2) {
        return Err(Error::Parameter(format!("gadget length must be odd and at least 5, got {g}")));
    }
    let mut edges = Vec::with_capacity(3 * g);
    for i in 0..g {
        let next = (i + 1) % g;
        let prev = (i + g - 1) % g;
        edges.push((i, next));
        edges.push((g + i, prev));
        edges.push((g + i, next));
    }
    let labels: Labels = (0..g)
        .map(|i| (i, format!("u{}", i + 1)))
        .chain((0..g).map(|i| (g + i, format!("u'{}", i + 1))))
        .collect();
    let gadget = UndirectedGraph::new(2 * g, edges)?.with_labels(labels)?;
    let measured = odd_girth(&gadget);
    if measured != CycleLength::Finite(g) {
        return Err(Error::Invariant(format!("gadget({g}) has odd girth {measured}")));
    }
    Ok(gadget)
}

const BRINKMANN_ADJACENCY: [(usize, &[usize]); 18] = [
    (0, &[2, 5, 7, 13]),
    (1, &[3, 6, 7, 8]),
    (2, &[4, 8, 9]),
    (3, &[5, 9, 10]),
    (4, &[6, 10, 11]),
    (5, &[11, 12]),
    (6, &[12, 13]),
    (7, &[15, 20]),
    (8, &[14, 16]),
    (9, &[15, 17]),
    (10, &[16, 18]),
    (11, &[17, 19]),
    (12, &[18, 20]),
    (13, &[14, 19]),
    (14, &[17, 18]),
    (15, &[18, 19]),
    (16, &[19, 20]),
    (17, &[20]),
];

/// The Brinkmann graph: 21 vertices, 4-regular, girth 5, chromatic number 4.
pub fn brinkmann_graph() -> UndirectedGraph {
    let edges = BRINKMANN_ADJACENCY
        .iter()
        .flat_map(|&(u, vs)| vs.iter().map(move |&v| (u, v)));
    UndirectedGraph::new(21, edges).expect("fixture adjacency is simple")
}

/// Output of [`girth5_non_aop`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Girth5Construction {
    pub graph: UndirectedGraph,
    /// Vertices `0..base_n` are the base graph; each later id is an apex.
    pub base_n: usize,
    /// For each apex in id order, the 3-edge base path whose endpoints it joins.
    pub apex_paths: Vec<[usize; 4]>,
}

/// Every 3-edge path `(a, b, c, d)` of `g` with `a < d`, in lexicographic order.
pub fn three_edge_paths(g: &UndirectedGraph) -> Vec<[usize; 4]> {
    let mut paths = Vec::new();
    for a in 0..g.n() {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(b) {
                if c == a {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d > a && d != b {
                        paths.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    paths
}

/// Whether some vertex outside the path is adjacent to both its endpoints,
/// closing it into a 5-cycle.
pub fn closes_to_five_cycle(g: &UndirectedGraph, path: &[usize; 4]) -> bool {
    let [a, _, _, d] = *path;
    g.neighbors(a)
        .iter()
        .any(|&x| !path.contains(&x) && g.has_edge(x, d))
}

/// Extends a girth-5, non-3-colorable base graph with one degree-2 apex per
/// 3-edge path that no 5-cycle of the current graph contains, visiting paths
/// in [`three_edge_paths`] order.
pub fn girth5_non_aop(base: &UndirectedGraph) -> Result<Girth5Construction> {
    let base_girth = girth(base);
    if base_girth != CycleLength::Finite(5) {
        return Err(Error::Parameter(format!("base graph must have girth 5, got {base_girth}")));
    }
    if k_colorable(base, 3).is_some() {
        return Err(Error::Parameter("base graph must have chromatic number at least 4".into()));
    }
    let paths = three_edge_paths(base);
    let base_n = base.n();
    let mut adj: Vec<Vec<usize>> = (0..base_n).map(|v| base.neighbors(v).to_vec()).collect();
    let mut edges = base.edges().to_vec();
    let mut apex_paths = Vec::new();
    for path in &paths {
        let [a, _, _, d] = *path;
        let closed = adj[a]
            .iter()
            .any(|&x| !path.contains(&x) && adj[x].contains(&d));
        if closed {
            continue;
        }
        let q = adj.len();
        adj.push(vec![a, d]);
        adj[a].push(q);
        adj[d].push(q);
        edges.push((a, q));
        edges.push((d, q));
        apex_paths.push(*path);
    }
    let mut labels = base.labels().clone();
    for k in 0..apex_paths.len() {
        labels.insert(base_n + k, format!("q{}", k + 1));
    }
    let graph = UndirectedGraph::new(adj.len(), edges)?.with_labels(labels)?;
    let out_girth = girth(&graph);
    if out_girth != CycleLength::Finite(5) {
        return Err(Error::Invariant(format!("construction has girth {out_girth}")));
    }
    if let Some(p) = paths.iter().find(|p| !closes_to_five_cycle(&graph, p)) {
        return Err(Error::Invariant(format!("path {p:?} lies on no 5-cycle")));
    }
    Ok(Girth5Construction {
        graph,
        base_n,
        apex_paths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gadget_shapes() {
        let g5 = odd_girth_gadget(5).unwrap();
        assert_eq!((g5.n(), g5.edge_count()), (10, 15));
        assert_eq!(g5.label(5), Some("u'1"));
        let mut twin: Vec<_> = g5.neighbors(5).to_vec();
        twin.sort_unstable();
        assert_eq!(twin, [1, 4]);
        let g7 = odd_girth_gadget(7).unwrap();
        assert_eq!((g7.n(), g7.edge_count()), (14, 21));
        assert_eq!(odd_girth(&g7), CycleLength::Finite(7));
        for bad in [3, 4, 6, 0] {
            assert!(odd_girth_gadget(bad).is_err());
        }
    }

    #[test]
    fn brinkmann_fixture() {
        let b = brinkmann_graph();
        assert_eq!((b.n(), b.edge_count()), (21, 42));
        assert!((0..21).all(|v| b.degree(v) == 4));
        assert_eq!(girth(&b), CycleLength::Finite(5));
    }

    #[test]
    fn three_edge_paths_of_c5() {
        let c5 = UndirectedGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let paths = three_edge_paths(&c5);
        assert_eq!(paths.len(), 5);
        assert_eq!(paths[0], [0, 1, 2, 3]);
        assert!(paths.iter().all(|p| closes_to_five_cycle(&c5, p)));
    }

    #[test]
    fn rejects_bad_bases() {
        let c5 = UndirectedGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(matches!(girth5_non_aop(&c5), Err(Error::Parameter(_))));
        let k4 = UndirectedGraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(girth5_non_aop(&k4), Err(Error::Parameter(_))));
    }
}
