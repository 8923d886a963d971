//! Structural property checkers.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

/// Default vertex cap for [`chromatic_number`].
pub const DEFAULT_CHROMATIC_CAP: usize = 100;

/// Length of a shortest cycle of some kind; `Infinite` when none exists.
///
/// Ordered so that `Infinite` exceeds every finite length, which keeps
/// "at least k" comparisons monotone for forests and bipartite graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CycleLength {
    Finite(usize),
    Infinite,
}

impl CycleLength {
    pub fn finite(self) -> Option<usize> {
        match self {
            CycleLength::Finite(k) => Some(k),
            CycleLength::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, CycleLength::Finite(_))
    }
}

impl fmt::Display for CycleLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleLength::Finite(k) => write!(f, "{k}"),
            CycleLength::Infinite => f.write_str("inf"),
        }
    }
}

/// Shortest cycle length, by a BFS from every vertex.
pub fn girth(g: &UndirectedGraph) -> CycleLength {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        CycleLength::Infinite
    } else {
        CycleLength::Finite(best)
    }
}

/// Shortest odd cycle length.
///
/// BFS in the bipartite double cover: the distance from `(v, even)` to
/// `(v, odd)` is the shortest odd closed walk through `v`, and the overall
/// minimum of those walks is a cycle.
pub fn odd_girth(g: &UndirectedGraph) -> CycleLength {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; 2 * n];
    for s in 0..n {
        if g.degree(s) < 2 {
            continue;
        }
        dist.fill(usize::MAX);
        dist[2 * s] = 0;
        let mut queue = VecDeque::from([2 * s]);
        'bfs: while let Some(state) = queue.pop_front() {
            let (u, parity) = (state / 2, state % 2);
            if dist[state] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                let next = 2 * w + (1 - parity);
                if dist[next] == usize::MAX {
                    dist[next] = dist[state] + 1;
                    if next == 2 * s + 1 {
                        best = best.min(dist[next]);
                        break 'bfs;
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    if best == usize::MAX {
        CycleLength::Infinite
    } else {
        CycleLength::Finite(best)
    }
}

/// Simple odd cycle contained in an odd closed walk.
///
/// `walk` lists the vertices with the start repeated at the end. The walk is
/// split at its first repeated vertex into two closed walks, and the odd one
/// is kept until no vertex repeats. Returns the cycle without the closing
/// repeat.
pub fn extract_odd_cycle(g: &UndirectedGraph, walk: &[usize]) -> Result<Vec<usize>> {
    if walk.len() < 2 || walk.first() != walk.last() {
        return Err(Error::InvalidWalk("walk is not closed".into()));
    }
    if let Some(&v) = walk.iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidWalk(format!("vertex {v} not in graph")));
    }
    if let Some(w) = walk.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::InvalidWalk(format!("[{}, {}] is not an edge", w[0], w[1])));
    }
    let len = walk.len() - 1;
    if len.is_multiple_of(2) {
        return Err(Error::InvalidWalk(format!("walk has even length {len}")));
    }
    let mut cyc = walk[..len].to_vec();
    loop {
        let mut first_seen = std::collections::HashMap::new();
        let mut repeat = None;
        for (j, &v) in cyc.iter().enumerate() {
            if let Some(&i) = first_seen.get(&v) {
                repeat = Some((i, j));
                break;
            }
            first_seen.insert(v, j);
        }
        let Some((i, j)) = repeat else {
            return Ok(cyc);
        };
        cyc = if (j - i) % 2 == 1 {
            cyc[i..j].to_vec()
        } else {
            let mut rest = cyc[j..].to_vec();
            rest.extend_from_slice(&cyc[..i]);
            rest
        };
    }
}

/// Clique number via branch and bound with greedy-coloring bounds.
pub fn clique_number(g: &UndirectedGraph) -> usize {
    let mut verts: Vec<usize> = (0..g.n()).collect();
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = 0;
    expand_clique(g, 0, verts, &mut best);
    best
}

fn expand_clique(g: &UndirectedGraph, size: usize, cand: Vec<usize>, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    // Greedy color classes; a vertex with class k bounds any clique through
    // it and earlier candidates by k.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &cand {
        match classes
            .iter_mut()
            .find(|cls| cls.iter().all(|&u| !g.has_edge(u, v)))
        {
            Some(cls) => cls.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(cand.len());
    let mut bound = Vec::with_capacity(cand.len());
    for (k, cls) in classes.iter().enumerate() {
        for &v in cls {
            order.push(v);
            bound.push(k + 1);
        }
    }
    for i in (0..order.len()).rev() {
        if size + bound[i] <= *best {
            return;
        }
        let v = order[i];
        let next: Vec<usize> = order[..i].iter().copied().filter(|&u| g.has_edge(u, v)).collect();
        expand_clique(g, size + 1, next, best);
    }
}

/// Vertex ordering with per-vertex counts of earlier neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyCertificate {
    pub order: Vec<usize>,
    /// Indexed by vertex id.
    pub back_degrees: Vec<usize>,
    pub degeneracy: usize,
}

/// Degeneracy by repeated minimum-degree removal (ties to the smallest id);
/// the certificate order is the reverse removal order.
pub fn degeneracy(g: &UndirectedGraph) -> DegeneracyCertificate {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    while let Some((_, v)) = queue.pop_first() {
        removed[v] = true;
        removal.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    removal.reverse();
    back_degrees_along(g, removal)
}

/// Back-degrees along a prescribed vertex order.
pub fn back_degree_certificate(g: &UndirectedGraph, order: &[usize]) -> Result<DegeneracyCertificate> {
    let mut seen = vec![false; g.n()];
    if order.len() != g.n() {
        return Err(Error::Parameter("order is not a permutation of the vertices".into()));
    }
    for &v in order {
        if v >= g.n() || seen[v] {
            return Err(Error::Parameter("order is not a permutation of the vertices".into()));
        }
        seen[v] = true;
    }
    Ok(back_degrees_along(g, order.to_vec()))
}

fn back_degrees_along(g: &UndirectedGraph, order: Vec<usize>) -> DegeneracyCertificate {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let back_degrees: Vec<usize> = (0..g.n())
        .map(|v| g.neighbors(v).iter().filter(|&&w| pos[w] < pos[v]).count())
        .collect();
    let degeneracy = back_degrees.iter().copied().max().unwrap_or(0);
    DegeneracyCertificate {
        order,
        back_degrees,
        degeneracy,
    }
}

/// Exact chromatic number with a witness coloring, for at most
/// [`DEFAULT_CHROMATIC_CAP`] vertices.
pub fn chromatic_number(g: &UndirectedGraph) -> Result<(usize, Coloring)> {
    chromatic_number_capped(g, DEFAULT_CHROMATIC_CAP)
}

/// Exact chromatic number by iterative deepening over DSATUR backtracking.
///
/// Starting from the clique number, each palette size `t` is tried with a
/// saturation-ordered search that fixes the first vertex to color 0 and
/// only ever opens the next unused color.
pub fn chromatic_number_capped(g: &UndirectedGraph, cap: usize) -> Result<(usize, Coloring)> {
    if g.n() > cap {
        return Err(Error::SizeCap {
            what: "chromatic number input",
            size: g.n(),
            cap,
        });
    }
    let greedy = dsatur_greedy(g);
    let upper = greedy.used_colors();
    let lower = clique_number(g);
    for t in lower..upper {
        let mut search = Dsatur::new(g, t);
        if search.solve(0, 0) {
            let colors = search.color;
            return Ok((t, Coloring::new(g, colors, t)?));
        }
    }
    Ok((upper, greedy))
}

/// A proper coloring with at most `t` colors, if one exists. Uncapped.
pub fn k_colorable(g: &UndirectedGraph, t: usize) -> Option<Coloring> {
    if g.n() == 0 {
        return Some(Coloring::new(g, Vec::new(), t).expect("empty coloring"));
    }
    let mut search = Dsatur::new(g, t);
    if search.solve(0, 0) {
        Some(Coloring::new(g, search.color, t).expect("search colorings are proper"))
    } else {
        None
    }
}

/// Clique lower bound and DSATUR upper bound, for graphs above the exact cap.
pub fn chromatic_bounds(g: &UndirectedGraph) -> (usize, usize) {
    (clique_number(g), dsatur_greedy(g).used_colors())
}

/// Greedy DSATUR coloring; palette equals the number of colors used.
pub fn dsatur_greedy(g: &UndirectedGraph) -> Coloring {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut nbr_colors: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (nbr_colors[v].len(), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex remains");
        let c = (0..).find(|c| !nbr_colors[v].contains(c)).unwrap();
        color[v] = c;
        used = used.max(c + 1);
        for &w in g.neighbors(v) {
            nbr_colors[w].insert(c);
        }
    }
    Coloring::new(g, color, used).expect("greedy coloring is proper")
}

struct Dsatur<'a> {
    g: &'a UndirectedGraph,
    t: usize,
    color: Vec<usize>,
    // nbr_count[v * t + c]: colored neighbors of v holding color c
    nbr_count: Vec<u32>,
    saturation: Vec<usize>,
    free_degree: Vec<usize>,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a UndirectedGraph, t: usize) -> Self {
        let n = g.n();
        Self {
            g,
            t,
            color: vec![usize::MAX; n],
            nbr_count: vec![0; n * t],
            saturation: vec![0; n],
            free_degree: (0..n).map(|v| g.degree(v)).collect(),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.nbr_count[w * self.t + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
            self.free_degree[w] -= 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = usize::MAX;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.nbr_count[w * self.t + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
            self.free_degree[w] += 1;
        }
    }

    fn solve(&mut self, colored: usize, opened: usize) -> bool {
        let n = self.g.n();
        if colored == n {
            return true;
        }
        let mut pick = usize::MAX;
        for v in 0..n {
            if self.color[v] != usize::MAX {
                continue;
            }
            if self.saturation[v] >= self.t {
                return false;
            }
            if pick == usize::MAX
                || (self.saturation[v], self.free_degree[v]) > (self.saturation[pick], self.free_degree[pick])
            {
                pick = v;
            }
        }
        let v = pick;
        for c in 0..self.t.min(opened + 1) {
            if self.nbr_count[v * self.t + c] == 0 {
                self.assign(v, c);
                if self.solve(colored + 1, opened.max(c + 1)) {
                    return true;
                }
                self.unassign(v);
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> UndirectedGraph {
        UndirectedGraph::new(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
    }

    fn complete(k: usize) -> UndirectedGraph {
        UndirectedGraph::new(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)))).unwrap()
    }

    fn star(leaves: usize) -> UndirectedGraph {
        UndirectedGraph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn girth_basics() {
        assert_eq!(girth(&cycle(5)), CycleLength::Finite(5));
        assert_eq!(girth(&star(3)), CycleLength::Infinite);
        assert_eq!(girth(&complete(4)), CycleLength::Finite(3));
        assert_eq!(girth(&UndirectedGraph::empty(0)), CycleLength::Infinite);
        assert_eq!(CycleLength::Infinite.to_string(), "inf");
        assert!(CycleLength::Finite(1000) < CycleLength::Infinite);
    }

    #[test]
    fn odd_girth_basics() {
        assert_eq!(odd_girth(&cycle(7)), CycleLength::Finite(7));
        assert_eq!(odd_girth(&cycle(8)), CycleLength::Infinite);
        assert_eq!(odd_girth(&complete(5)), CycleLength::Finite(3));
        // C4 glued to C7 along an edge: girth 4, odd girth 7
        let g = UndirectedGraph::new(
            9,
            [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1)],
        )
        .unwrap();
        assert_eq!(girth(&g), CycleLength::Finite(4));
        assert_eq!(odd_girth(&g), CycleLength::Finite(7));
    }

    #[test]
    fn odd_cycle_extraction() {
        let k3 = complete(3);
        assert_eq!(extract_odd_cycle(&k3, &[0, 1, 2, 0]).unwrap(), vec![0, 1, 2]);
        assert_eq!(extract_odd_cycle(&k3, &[0, 1, 0, 1, 2, 0]).unwrap(), vec![0, 1, 2]);
        assert!(matches!(
            extract_odd_cycle(&k3, &[0, 1, 2, 0, 1, 2, 0]),
            Err(Error::InvalidWalk(_))
        ));
        assert!(extract_odd_cycle(&k3, &[0, 1, 2]).is_err());
        assert!(extract_odd_cycle(&cycle(5), &[0, 2, 3, 4, 0]).is_err());
        let c5 = cycle(5);
        let walk = [0, 1, 2, 3, 4, 0, 1, 0];
        let cyc = extract_odd_cycle(&c5, &walk).unwrap();
        assert_eq!(cyc.len(), 5);
    }

    #[test]
    fn cliques() {
        assert_eq!(clique_number(&complete(5)), 5);
        assert_eq!(clique_number(&cycle(5)), 2);
        assert_eq!(clique_number(&UndirectedGraph::empty(3)), 1);
        assert_eq!(clique_number(&UndirectedGraph::empty(0)), 0);
    }

    #[test]
    fn degeneracy_basics() {
        assert_eq!(degeneracy(&star(4)).degeneracy, 1);
        assert_eq!(degeneracy(&cycle(5)).degeneracy, 2);
        assert_eq!(degeneracy(&complete(5)).degeneracy, 4);
        let cert = degeneracy(&cycle(5));
        let again = back_degree_certificate(&cycle(5), &cert.order).unwrap();
        assert_eq!(again, cert);
    }

    #[test]
    fn back_degrees() {
        let s = star(4);
        let cert = back_degree_certificate(&s, &[1, 2, 3, 4, 0]).unwrap();
        assert_eq!(cert.back_degrees[0], 4);
        assert_eq!(cert.degeneracy, 4);
        let e = UndirectedGraph::empty(3);
        assert_eq!(back_degree_certificate(&e, &[2, 0, 1]).unwrap().back_degrees, vec![0, 0, 0]);
        assert!(back_degree_certificate(&e, &[0, 0, 1]).is_err());
    }

    #[test]
    fn chromatic_basics() {
        assert_eq!(chromatic_number(&cycle(5)).unwrap().0, 3);
        assert_eq!(chromatic_number(&cycle(6)).unwrap().0, 2);
        assert_eq!(chromatic_number(&complete(6)).unwrap().0, 6);
        assert_eq!(chromatic_number(&UndirectedGraph::empty(0)).unwrap().0, 0);
        assert_eq!(chromatic_number(&UndirectedGraph::empty(4)).unwrap().0, 1);
        assert!(matches!(
            chromatic_number_capped(&cycle(5), 4),
            Err(Error::SizeCap { .. })
        ));
    }
}
