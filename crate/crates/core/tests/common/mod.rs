//! Seeded fixtures and brute-force oracles shared by the integration tests.
//! Oracles deliberately avoid the library's algorithms.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

use shiftlab::graph::{AcyclicDigraph, Direction, Orientation, UndirectedGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random acyclic digraph on `n` vertices: arcs follow a random vertex
/// permutation, each present with probability `p`.
pub fn random_acyclic(rng: &mut ChaCha8Rng, n: usize, p: f64) -> AcyclicDigraph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                arcs.push((perm[i], perm[j]));
            }
        }
    }
    AcyclicDigraph::new(n, arcs).unwrap()
}

/// Random acyclic digraph with `1..=max_n` vertices and a random density.
pub fn random_small_acyclic(rng: &mut ChaCha8Rng, max_n: usize) -> AcyclicDigraph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.15..0.8);
    random_acyclic(rng, n, p)
}

/// Random subdigraph of `T_n` (arcs `i -> j`, `i < j`).
pub fn random_subtournament(rng: &mut ChaCha8Rng, n: usize) -> AcyclicDigraph {
    let p = rng.gen_range(0.1..0.9);
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    AcyclicDigraph::new(n, arcs).unwrap()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> UndirectedGraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    UndirectedGraph::new(n, edges).unwrap()
}

pub fn cycle(k: usize) -> UndirectedGraph {
    UndirectedGraph::new(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
}

pub fn complete(n: usize) -> UndirectedGraph {
    UndirectedGraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

/// The orientation of `g` given by bit `e` of `mask` (set = forward).
pub fn orientation_from_mask(g: &Arc<UndirectedGraph>, mask: u64) -> Orientation {
    let dir = (0..g.edge_count())
        .map(|e| if mask >> e & 1 == 1 { Direction::Forward } else { Direction::Backward })
        .collect();
    Orientation::from_directions(Arc::clone(g), dir).unwrap()
}

/// Oracle verdict on a total orientation, by exhaustive walk enumeration:
/// `None` if some walk revisits a vertex (a directed cycle), otherwise
/// whether every ordered pair has at most one directed path.
pub fn brute_aop(n: usize, arcs: &[(usize, usize)]) -> Option<bool> {
    let mut out = vec![Vec::new(); n];
    for &(u, v) in arcs {
        out[u].push(v);
    }
    // Err(true): directed cycle; Err(false): a second path to some vertex
    fn walk(out: &[Vec<usize>], v: usize, on_path: &mut [bool], hits: &mut [u32]) -> Result<(), bool> {
        for &w in &out[v] {
            if on_path[w] {
                return Err(true);
            }
            hits[w] += 1;
            if hits[w] > 1 {
                return Err(false);
            }
            on_path[w] = true;
            let r = walk(out, w, on_path, hits);
            on_path[w] = false;
            r?;
        }
        Ok(())
    }
    let mut unique = true;
    for s in 0..n {
        let mut on_path = vec![false; n];
        on_path[s] = true;
        let mut hits = vec![0u32; n];
        match walk(&out, s, &mut on_path, &mut hits) {
            Ok(()) => {}
            Err(true) => return None,
            Err(false) => unique = false,
        }
    }
    if !unique && !brute_is_acyclic_by_search(n, &out) {
        return None;
    }
    Some(unique)
}

// Depth-first search for a vertex revisited on the current path.
fn brute_is_acyclic_by_search(n: usize, out: &[Vec<usize>]) -> bool {
    fn visit(v: usize, out: &[Vec<usize>], state: &mut [u8]) -> bool {
        state[v] = 1;
        for &w in &out[v] {
            if state[w] == 1 || (state[w] == 0 && !visit(w, out, state)) {
                return false;
            }
        }
        state[v] = 2;
        true
    }
    let mut state = vec![0u8; n];
    (0..n).all(|v| state[v] != 0 || visit(v, out, &mut state))
}

/// Whether any of the `2^m` orientations of `g` passes [`brute_aop`].
pub fn brute_has_aop(g: &UndirectedGraph) -> bool {
    let m = g.edge_count();
    assert!(m <= 24, "enumeration too large");
    (0u64..1 << m).any(|mask| {
        let arcs: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| if mask >> e & 1 == 1 { (u, v) } else { (v, u) })
            .collect();
        brute_aop(g.n(), &arcs) == Some(true)
    })
}

/// Smallest `t` with a proper `t`-coloring, trying every assignment.
pub fn brute_chromatic(g: &UndirectedGraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for t in 1..=n {
        let total = (t as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colors: Vec<u64> = (0..n)
                .map(|_| {
                    let x = c % t as u64;
                    c /= t as u64;
                    x
                })
                .collect();
            if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
                return t;
            }
        }
    }
    unreachable!("n colors always suffice")
}

/// Maximum over nonempty vertex subsets of the minimum induced degree.
pub fn brute_degeneracy(g: &UndirectedGraph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let mut best = 0;
    for mask in 1u32..1 << n {
        let min_deg = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| g.neighbors(v).iter().filter(|&&w| mask >> w & 1 == 1).count())
            .min()
            .unwrap();
        best = best.max(min_deg);
    }
    best
}

/// Whether some permutation of `0..n` puts every arc forward.
pub fn brute_is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    fn perms(prefix: &mut Vec<usize>, n: usize, arcs: &[(usize, usize)]) -> bool {
        if prefix.len() == n {
            let pos: Vec<usize> = {
                let mut p = vec![0; n];
                for (i, &v) in prefix.iter().enumerate() {
                    p[v] = i;
                }
                p
            };
            return arcs.iter().all(|&(u, v)| pos[u] < pos[v]);
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                if perms(prefix, n, arcs) {
                    return true;
                }
                prefix.pop();
            }
        }
        false
    }
    perms(&mut Vec::new(), n, arcs)
}

/// Shortest odd cycle length by checking closed walks of each odd length
/// with boolean adjacency powers; `None` when bipartite.
pub fn brute_odd_girth(g: &UndirectedGraph) -> Option<usize> {
    let n = g.n();
    let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let mut power = adj.clone();
    let mut len = 1;
    // the shortest odd closed walk is an odd cycle; none longer than n is needed
    while len <= n {
        if (0..n).any(|v| power[v][v]) {
            return Some(len);
        }
        for _ in 0..2 {
            power = (0..n)
                .map(|u| (0..n).map(|v| (0..n).any(|w| power[u][w] && adj[w][v])).collect())
                .collect();
        }
        len += 2;
    }
    None
}

/// `C(k, ⌊k/2⌋)` from Pascal's triangle, as `f64` for comparison only.
pub fn pascal_central(k: usize) -> f64 {
    let mut row = vec![1f64];
    for _ in 0..k {
        let mut next = vec![1f64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k / 2]
}

pub fn brute_k_star(c: usize) -> usize {
    (1..).find(|&k| pascal_central(k) >= c as f64).unwrap()
}

/// Every induced `K_{a,b}` check by trying all vertex subsets of size `a + b`
/// and all splits. Only for very small graphs.
pub fn brute_has_induced_kab(g: &UndirectedGraph, a: usize, b: usize) -> bool {
    let n = g.n();
    assert!(n <= 14);
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != a + b {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        for split in 0u32..1 << verts.len() {
            if split.count_ones() as usize != a {
                continue;
            }
            let left: Vec<usize> = (0..verts.len()).filter(|i| split >> i & 1 == 1).map(|i| verts[i]).collect();
            let right: Vec<usize> = (0..verts.len()).filter(|i| split >> i & 1 == 0).map(|i| verts[i]).collect();
            let indep = |s: &[usize]| s.iter().all(|&x| s.iter().all(|&y| !g.has_edge(x, y)));
            if indep(&left) && indep(&right) && left.iter().all(|&x| right.iter().all(|&y| g.has_edge(x, y))) {
                return true;
            }
        }
    }
    false
}

/// Longest directed path, in arcs, of an acyclic arc set by memoized DFS.
pub fn longest_path(n: usize, arcs: &[(usize, usize)]) -> usize {
    let mut out = vec![Vec::new(); n];
    for &(u, v) in arcs {
        out[u].push(v);
    }
    fn depth(v: usize, out: &[Vec<usize>], memo: &mut [Option<usize>]) -> usize {
        if let Some(d) = memo[v] {
            return d;
        }
        let d = out[v].iter().map(|&w| depth(w, out, memo) + 1).max().unwrap_or(0);
        memo[v] = Some(d);
        d
    }
    let mut memo = vec![None; n];
    (0..n).map(|v| depth(v, &out, &mut memo)).max().unwrap_or(0)
}

/// `ceil(log2(x))` lower bound test helper: whether `2^t >= x`.
pub fn pow2_at_least(t: usize, x: usize) -> bool {
    t >= usize::BITS as usize || (1usize << t) >= x
}
