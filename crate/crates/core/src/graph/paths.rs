use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use super::{AcyclicDigraph, UndirectedGraph};

/// Outcome of [`topological_order`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologicalOrder {
    Order(Vec<usize>),
    /// Closed directed walk `v0 -> v1 -> ... -> v0`, starting at its smallest vertex.
    Cycle(Vec<usize>),
}

/// Kahn's algorithm, always emitting the smallest available source first.
///
/// Arc endpoints must lie in `0..n`.
pub fn topological_order(n: usize, arcs: &[(usize, usize)]) -> TopologicalOrder {
    let mut out = vec![Vec::new(); n];
    let mut inn = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(u, v) in arcs {
        out[u].push(v);
        inn[v].push(u);
        indeg[v] += 1;
    }
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    let mut done = vec![false; n];
    while let Some(Reverse(u)) = heap.pop() {
        order.push(u);
        done[u] = true;
        for &v in &out[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                heap.push(Reverse(v));
            }
        }
    }
    if order.len() == n {
        return TopologicalOrder::Order(order);
    }

    // Every leftover vertex keeps an in-arc from another leftover vertex, so
    // walking backwards must revisit a vertex.
    let start = (0..n).find(|&v| !done[v]).expect("leftover vertex");
    let mut seen_at = vec![usize::MAX; n];
    let mut back = Vec::new();
    let mut v = start;
    while seen_at[v] == usize::MAX {
        seen_at[v] = back.len();
        back.push(v);
        v = *inn[v]
            .iter()
            .filter(|&&w| !done[w])
            .min()
            .expect("leftover vertex has a leftover in-neighbor");
    }
    let mut cycle: Vec<usize> = back[seen_at[v]..].to_vec();
    cycle.reverse();
    let min_at = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(min_at);
    cycle.push(cycle[0]);
    TopologicalOrder::Cycle(cycle)
}

/// BFS components, each sorted, ordered by their smallest vertex.
pub fn connected_components(g: &UndirectedGraph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Number of directed paths between two vertices, saturated at two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathCount {
    Zero,
    One,
    Many,
}

/// Saturating all-pairs path counts of an acyclic digraph.
///
/// `get(u, u)` is always `Zero`: only nontrivial paths are counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountMatrix {
    n: usize,
    counts: Vec<u8>,
}

impl PathCountMatrix {
    /// One DP sweep over the topological order per source vertex.
    pub fn of(d: &AcyclicDigraph) -> Self {
        let n = d.n();
        let mut counts = vec![0u8; n * n];
        for s in 0..n {
            let row = &mut counts[s * n..(s + 1) * n];
            for &v in &d.topo()[d.position(s) + 1..] {
                let mut c = 0u8;
                for &w in d.in_neighbors(v) {
                    c += row[w] + u8::from(w == s);
                    if c >= 2 {
                        c = 2;
                        break;
                    }
                }
                row[v] = c;
            }
        }
        Self { n, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> PathCount {
        match self.counts[u * self.n + v] {
            0 => PathCount::Zero,
            1 => PathCount::One,
            _ => PathCount::Many,
        }
    }

    /// First `(u, v)` in row-major order with at least two paths.
    pub fn first_many(&self) -> Option<(usize, usize)> {
        self.counts
            .iter()
            .position(|&c| c >= 2)
            .map(|i| (i / self.n, i % self.n))
    }

    /// Some directed path from `u` to `v`, if one exists.
    pub fn path(&self, d: &AcyclicDigraph, u: usize, v: usize) -> Option<Vec<usize>> {
        if u == v || self.counts[u * self.n + v] == 0 {
            return None;
        }
        let mut rev = vec![v];
        let mut cur = v;
        while cur != u {
            cur = d
                .in_neighbors(cur)
                .iter()
                .copied()
                .find(|&w| w == u || self.counts[u * self.n + w] > 0)
                .expect("positive count has a contributing in-neighbor");
            rev.push(cur);
        }
        rev.reverse();
        Some(rev)
    }

    /// Two distinct directed paths from `u` to `v` when the count is `Many`.
    pub fn two_paths(&self, d: &AcyclicDigraph, u: usize, v: usize) -> Option<[Vec<usize>; 2]> {
        if self.get(u, v) != PathCount::Many {
            return None;
        }
        let reaches = |w: usize| w == u || self.counts[u * self.n + w] > 0;
        let feeders: Vec<usize> = d.in_neighbors(v).iter().copied().filter(|&w| reaches(w)).take(2).collect();
        let prefix = |w: usize| {
            if w == u {
                vec![u]
            } else {
                self.path(d, u, w).expect("reachable")
            }
        };
        if feeders.len() == 2 {
            let mut p = prefix(feeders[0]);
            let mut q = prefix(feeders[1]);
            p.push(v);
            q.push(v);
            Some([p, q])
        } else {
            // A single in-neighbor carries both paths.
            let w = feeders[0];
            let [mut p, mut q] = self.two_paths(d, u, w)?;
            p.push(v);
            q.push(v);
            Some([p, q])
        }
    }
}
