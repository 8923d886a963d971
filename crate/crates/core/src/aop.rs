//! Acyclic one-path (AOP) orientations: acyclic orientations with at most one
//! directed path between any ordered pair of vertices.
//!
//! [`verify_aop`] checks a given orientation through saturating path counts.
//! [`decide_aop`] searches for one by backtracking over edge directions in a
//! fixed order. The search keeps, for every vertex, the set of vertices it
//! reaches and the set reaching it. Orienting `u -> v` closes a cycle iff `v`
//! already reaches `u`, and creates a second path iff some vertex reaching
//! `u` (or `u` itself) already reaches `v` or a vertex `v` reaches. Both
//! conditions persist under further orientation, so pruning on them is sound.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use crate::constructors::{iterate_line_digraph, pair_index, zykov};
use crate::error::{Error, Result};
use crate::graph::{Direction, Orientation, PathCountMatrix, UndirectedGraph};
use crate::invariants::{chromatic_number_capped, odd_girth, CycleLength, DEFAULT_CHROMATIC_CAP};

/// Why an orientation fails the AOP property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AopViolation {
    /// Closed walk `v0 -> ... -> v0`.
    Cycle(Vec<usize>),
    /// Two distinct directed paths from `from` to `to`.
    DoublePath {
        from: usize,
        to: usize,
        paths: [Vec<usize>; 2],
    },
}

impl fmt::Display for AopViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows = |p: &[usize]| p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("->");
        match self {
            AopViolation::Cycle(c) => write!(f, "directed cycle {}", arrows(c)),
            AopViolation::DoublePath { from, to, paths } => write!(
                f,
                "two paths from {from} to {to}: {} and {}",
                arrows(&paths[0]),
                arrows(&paths[1])
            ),
        }
    }
}

/// Outcome of [`verify_aop`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AopCheck {
    Holds,
    Violated(AopViolation),
}

impl AopCheck {
    pub fn holds(&self) -> bool {
        matches!(self, AopCheck::Holds)
    }
}

/// Checks a total orientation. Errors only on unset edges.
pub fn verify_aop(o: &Orientation) -> Result<AopCheck> {
    let d = match o.to_digraph() {
        Ok(d) => d,
        Err(Error::DirectedCycle(c)) => return Ok(AopCheck::Violated(AopViolation::Cycle(c))),
        Err(e) => return Err(e),
    };
    let counts = PathCountMatrix::of(&d);
    Ok(match counts.first_many() {
        None => AopCheck::Holds,
        Some((from, to)) => {
            let paths = counts.two_paths(&d, from, to).expect("count is Many");
            AopCheck::Violated(AopViolation::DoublePath { from, to, paths })
        }
    })
}

/// Limits for [`decide_aop`]; exceeding either yields a timeout verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
}

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: DEFAULT_NODE_BUDGET,
            max_time: None,
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes,
            max_time: None,
        }
    }
}

/// Search configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: Budget,
    /// After each decision, force every edge with one blocked direction and
    /// backtrack on edges with two.
    pub propagate: bool,
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: Budget::default(),
            propagate: true,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Edge directions committed, by branching or forcing.
    pub nodes: u64,
    pub cycle_prunes: u64,
    pub double_path_prunes: u64,
    /// Propagation steps that found an edge with both directions blocked.
    pub wipeouts: u64,
    pub forced: u64,
    pub elapsed: Duration,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.cycle_prunes += other.cycle_prunes;
        self.double_path_prunes += other.double_path_prunes;
        self.wipeouts += other.wipeouts;
        self.forced += other.forced;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AopVerdict {
    /// An orientation that passes [`verify_aop`].
    HasAop(Orientation),
    NoAop,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AopDecision {
    pub verdict: AopVerdict,
    pub stats: SearchStats,
}

/// Decides the AOP property with default options and the given budget.
pub fn decide_aop(g: &UndirectedGraph, budget: Budget) -> Result<AopDecision> {
    decide_aop_with(
        g,
        &SearchOptions {
            budget,
            ..SearchOptions::default()
        },
    )
}

/// Edge ids by decreasing endpoint-degree sum, ties in canonical order.
pub fn branching_order(g: &UndirectedGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edges()[e];
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
    });
    order
}

/// Decides the AOP property.
///
/// Triangles refute immediately. Otherwise the first branched edge is tried
/// only forward, since reversing every arc preserves both conditions. With
/// several threads, the search tree is cut into prefixes searched in
/// parallel; the reported witness is the one from the earliest prefix, which
/// is also the witness a single thread finds.
pub fn decide_aop_with(g: &UndirectedGraph, options: &SearchOptions) -> Result<AopDecision> {
    let start = Instant::now();
    let shared = Arc::new(g.clone());
    if g.has_triangle() {
        let stats = SearchStats {
            elapsed: start.elapsed(),
            ..SearchStats::default()
        };
        return Ok(AopDecision {
            verdict: AopVerdict::NoAop,
            stats,
        });
    }
    let order = branching_order(g);
    let limits = Limits::new(&options.budget, start);
    let (verdict, mut stats) = if options.threads <= 1 {
        let mut search = Search::new(g, &order, options.propagate, &limits, usize::MAX);
        let outcome = search.dfs(true);
        let verdict = match outcome {
            Outcome::Found => AopVerdict::HasAop(search.witness(&shared)?),
            Outcome::Exhausted => AopVerdict::NoAop,
            Outcome::Stopped => AopVerdict::Timeout,
        };
        (verdict, search.stats)
    } else {
        parallel(g, &shared, &order, options, &limits)?
    };
    stats.elapsed = start.elapsed();
    if let AopVerdict::HasAop(o) = &verdict {
        if let AopCheck::Violated(v) = verify_aop(o)? {
            return Err(Error::Invariant(format!("search witness fails verification: {v}")));
        }
    }
    Ok(AopDecision { verdict, stats })
}

struct Limits {
    max_nodes: u64,
    deadline: Option<Instant>,
    nodes: AtomicU64,
    stop: AtomicBool,
    // earliest prefix known to hold a witness; later prefixes may quit
    best_prefix: AtomicUsize,
}

impl Limits {
    fn new(budget: &Budget, start: Instant) -> Self {
        Self {
            max_nodes: budget.max_nodes,
            deadline: budget.max_time.map(|t| start + t),
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            best_prefix: AtomicUsize::new(usize::MAX),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Found,
    Exhausted,
    Stopped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Blocked {
    No,
    Cycle,
    DoublePath,
}

struct Search<'a> {
    g: &'a UndirectedGraph,
    order: &'a [usize],
    words: usize,
    // reach[x] / anc[x]: vertices reachable from / reaching x by a nonempty path
    reach: Vec<u64>,
    anc: Vec<u64>,
    dir: Vec<Direction>,
    trail: Vec<usize>,
    scratch_desc: Vec<u64>,
    scratch_anc: Vec<u64>,
    propagate: bool,
    limits: &'a Limits,
    prefix: usize,
    stats: SearchStats,
}

fn has(set: &[u64], v: usize) -> bool {
    set[v / 64] >> (v % 64) & 1 == 1
}

fn members(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(w * 64 + b)
        })
    })
}

impl<'a> Search<'a> {
    fn new(g: &'a UndirectedGraph, order: &'a [usize], propagate: bool, limits: &'a Limits, prefix: usize) -> Self {
        let words = g.n().div_ceil(64).max(1);
        Self {
            g,
            order,
            words,
            reach: vec![0; g.n() * words],
            anc: vec![0; g.n() * words],
            dir: vec![Direction::Unset; g.edge_count()],
            trail: Vec::new(),
            scratch_desc: vec![0; words],
            scratch_anc: vec![0; words],
            propagate,
            limits,
            prefix,
            stats: SearchStats::default(),
        }
    }

    fn arc(&self, e: usize, d: Direction) -> (usize, usize) {
        let (u, v) = self.g.edges()[e];
        match d {
            Direction::Forward => (u, v),
            Direction::Backward => (v, u),
            Direction::Unset => unreachable!("unset edges have no arc"),
        }
    }

    fn blocked(&self, u: usize, v: usize) -> Blocked {
        let w = self.words;
        let reach_v = &self.reach[v * w..(v + 1) * w];
        if has(reach_v, u) {
            return Blocked::Cycle;
        }
        let hits = |x: usize| {
            let rx = &self.reach[x * w..(x + 1) * w];
            has(rx, v) || rx.iter().zip(reach_v).any(|(a, b)| a & b != 0)
        };
        if hits(u) || members(&self.anc[u * w..(u + 1) * w]).any(hits) {
            return Blocked::DoublePath;
        }
        Blocked::No
    }

    // Loads Desc*(v) and Anc*(u) into the scratch rows.
    fn load_closures(&mut self, u: usize, v: usize) {
        let w = self.words;
        self.scratch_desc.copy_from_slice(&self.reach[v * w..(v + 1) * w]);
        self.scratch_desc[v / 64] |= 1 << (v % 64);
        self.scratch_anc.copy_from_slice(&self.anc[u * w..(u + 1) * w]);
        self.scratch_anc[u / 64] |= 1 << (u % 64);
    }

    fn apply(&mut self, e: usize, d: Direction) {
        let (u, v) = self.arc(e, d);
        self.load_closures(u, v);
        let w = self.words;
        for x in members(&self.scratch_anc) {
            for (r, s) in self.reach[x * w..(x + 1) * w].iter_mut().zip(&self.scratch_desc) {
                *r |= s;
            }
        }
        for y in members(&self.scratch_desc) {
            for (a, s) in self.anc[y * w..(y + 1) * w].iter_mut().zip(&self.scratch_anc) {
                *a |= s;
            }
        }
        self.dir[e] = d;
        self.trail.push(e);
        self.stats.nodes += 1;
    }

    // The unions in `apply` were disjoint, so clearing the same bits undoes them.
    fn undo_to(&mut self, mark: usize) {
        let w = self.words;
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("trail above mark");
            let (u, v) = self.arc(e, self.dir[e]);
            self.load_closures(u, v);
            for x in members(&self.scratch_anc) {
                for (r, s) in self.reach[x * w..(x + 1) * w].iter_mut().zip(&self.scratch_desc) {
                    *r &= !s;
                }
            }
            for y in members(&self.scratch_desc) {
                for (a, s) in self.anc[y * w..(y + 1) * w].iter_mut().zip(&self.scratch_anc) {
                    *a &= !s;
                }
            }
            self.dir[e] = Direction::Unset;
        }
    }

    fn count_block(&mut self, b: Blocked) {
        match b {
            Blocked::Cycle => self.stats.cycle_prunes += 1,
            Blocked::DoublePath => self.stats.double_path_prunes += 1,
            Blocked::No => {}
        }
    }

    // Forces edges until a fixpoint; false when some edge has no direction left.
    fn propagate(&mut self) -> bool {
        loop {
            let mut changed = false;
            for &e in self.order {
                if self.dir[e] != Direction::Unset {
                    continue;
                }
                let (u, v) = self.g.edges()[e];
                let forward = self.blocked(u, v);
                let backward = self.blocked(v, u);
                match (forward, backward) {
                    (Blocked::No, Blocked::No) => {}
                    (Blocked::No, _) => {
                        self.apply(e, Direction::Forward);
                        self.stats.forced += 1;
                        changed = true;
                    }
                    (_, Blocked::No) => {
                        self.apply(e, Direction::Backward);
                        self.stats.forced += 1;
                        changed = true;
                    }
                    _ => {
                        self.stats.wipeouts += 1;
                        return false;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn next_unset(&self) -> Option<usize> {
        self.order.iter().copied().find(|&e| self.dir[e] == Direction::Unset)
    }

    fn should_stop(&self) -> bool {
        let l = self.limits;
        if l.stop.load(Ordering::Relaxed) || l.best_prefix.load(Ordering::Relaxed) < self.prefix {
            return true;
        }
        let total = l.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if total > l.max_nodes {
            l.stop.store(true, Ordering::Relaxed);
            return true;
        }
        if total.is_multiple_of(1024) {
            if let Some(deadline) = l.deadline {
                if Instant::now() >= deadline {
                    l.stop.store(true, Ordering::Relaxed);
                    return true;
                }
            }
        }
        false
    }

    /// Tries one direction of `e`; `Some(mark)` when it was committed and
    /// propagation succeeded, leaving the trail to be undone to `mark`.
    fn try_direction(&mut self, e: usize, d: Direction) -> Option<usize> {
        let (u, v) = self.arc(e, d);
        let b = self.blocked(u, v);
        if b != Blocked::No {
            self.count_block(b);
            return None;
        }
        let mark = self.trail.len();
        self.apply(e, d);
        if self.propagate && !self.propagate() {
            self.undo_to(mark);
            return None;
        }
        Some(mark)
    }

    fn directions(first: bool) -> &'static [Direction] {
        if first {
            &[Direction::Forward]
        } else {
            &[Direction::Forward, Direction::Backward]
        }
    }

    fn dfs(&mut self, first: bool) -> Outcome {
        let Some(e) = self.next_unset() else {
            return Outcome::Found;
        };
        for &d in Self::directions(first) {
            if self.should_stop() {
                return Outcome::Stopped;
            }
            let Some(mark) = self.try_direction(e, d) else {
                continue;
            };
            match self.dfs(false) {
                Outcome::Exhausted => self.undo_to(mark),
                other => return other,
            }
        }
        Outcome::Exhausted
    }

    // Records the branch choices of every live node `depth` decisions deep,
    // or of complete assignments reached earlier, in search order.
    fn collect_prefixes(&mut self, first: bool, depth: usize, path: &mut Vec<Direction>, out: &mut Vec<Vec<Direction>>) {
        let Some(e) = self.next_unset() else {
            out.push(path.clone());
            return;
        };
        if path.len() == depth {
            out.push(path.clone());
            return;
        }
        for &d in Self::directions(first) {
            let Some(mark) = self.try_direction(e, d) else {
                continue;
            };
            path.push(d);
            self.collect_prefixes(false, depth, path, out);
            path.pop();
            self.undo_to(mark);
        }
    }

    fn replay(&mut self, prefix: &[Direction]) {
        for &d in prefix {
            let e = self.next_unset().expect("prefix shorter than the edge set");
            self.try_direction(e, d).expect("recorded prefixes are feasible");
        }
    }

    fn witness(&self, graph: &Arc<UndirectedGraph>) -> Result<Orientation> {
        Orientation::from_directions(Arc::clone(graph), self.dir.clone())
    }
}

enum PrefixResult {
    Found(Orientation),
    Exhausted,
    Stopped,
}

fn parallel(
    g: &UndirectedGraph,
    shared: &Arc<UndirectedGraph>,
    order: &[usize],
    options: &SearchOptions,
    limits: &Limits,
) -> Result<(AopVerdict, SearchStats)> {
    let threads = options.threads;
    let mut stats = SearchStats::default();
    let mut prefixes = vec![Vec::new()];
    let mut depth = 0;
    while prefixes.len() < 8 * threads && depth < g.edge_count() {
        depth += 1;
        let mut search = Search::new(g, order, options.propagate, limits, usize::MAX);
        let mut next = Vec::new();
        search.collect_prefixes(true, depth, &mut Vec::new(), &mut next);
        stats.absorb(&search.stats);
        let stalled = next.len() == prefixes.len();
        prefixes = next;
        if stalled && prefixes.iter().all(|p| p.len() < depth) {
            break;
        }
    }
    if prefixes.is_empty() {
        return Ok((AopVerdict::NoAop, stats));
    }

    let results: Vec<Mutex<Option<PrefixResult>>> = prefixes.iter().map(|_| Mutex::new(None)).collect();
    let worker_stats = Mutex::new(SearchStats::default());
    let next_prefix = AtomicUsize::new(0);
    let mut failure = Mutex::new(None);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(prefixes.len()) {
            scope.spawn(|| {
                let mut local = SearchStats::default();
                loop {
                    let i = next_prefix.fetch_add(1, Ordering::Relaxed);
                    if i >= prefixes.len() {
                        break;
                    }
                    if limits.best_prefix.load(Ordering::Relaxed) < i || limits.stop.load(Ordering::Relaxed) {
                        *results[i].lock().unwrap() = Some(PrefixResult::Stopped);
                        continue;
                    }
                    let mut search = Search::new(g, order, options.propagate, limits, i);
                    search.replay(&prefixes[i]);
                    let result = match search.dfs(prefixes[i].is_empty()) {
                        Outcome::Found => match search.witness(shared) {
                            Ok(o) => {
                                limits.best_prefix.fetch_min(i, Ordering::Relaxed);
                                PrefixResult::Found(o)
                            }
                            Err(e) => {
                                *failure.lock().unwrap() = Some(e);
                                PrefixResult::Stopped
                            }
                        },
                        Outcome::Exhausted => PrefixResult::Exhausted,
                        Outcome::Stopped => PrefixResult::Stopped,
                    };
                    local.absorb(&search.stats);
                    *results[i].lock().unwrap() = Some(result);
                }
                worker_stats.lock().unwrap().absorb(&local);
            });
        }
    });
    if let Some(e) = failure.get_mut().unwrap().take() {
        return Err(e);
    }
    stats.absorb(&worker_stats.into_inner().unwrap());
    for slot in results {
        match slot.into_inner().unwrap() {
            Some(PrefixResult::Exhausted) => continue,
            Some(PrefixResult::Found(o)) => return Ok((AopVerdict::HasAop(o), stats)),
            Some(PrefixResult::Stopped) | None => return Ok((AopVerdict::Timeout, stats)),
        }
    }
    Ok((AopVerdict::NoAop, stats))
}

/// The vertex map `G_{m,2} -> G_{n,2}` sending a pair to the same pair.
pub fn shift_pair_embedding(m: usize, n: usize) -> Result<Vec<usize>> {
    if m > n {
        return Err(Error::Parameter(format!("G({m},2) does not embed in G({n},2)")));
    }
    Ok((0..m)
        .flat_map(|i| (i + 1..m).map(move |j| pair_index(n, i, j)))
        .collect())
}

/// Whether `embedding` is an injective, edge-preserving map of `sub` into
/// `host`; if so, `host` lacks the AOP property whenever `sub` does.
pub fn inherits_non_aop(sub: &UndirectedGraph, host: &UndirectedGraph, embedding: &[usize]) -> bool {
    if embedding.len() != sub.n() || embedding.iter().any(|&v| v >= host.n()) {
        return false;
    }
    let mut image = embedding.to_vec();
    image.sort_unstable();
    image.dedup();
    image.len() == embedding.len()
        && sub
            .edges()
            .iter()
            .all(|&(u, v)| host.has_edge(embedding[u], embedding[v]))
}

/// Result of [`cycle_orientation_lemma_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleLemmaReport {
    pub k: usize,
    /// Orientations containing a directed path with `k - 2` edges.
    pub qualifying: usize,
    pub holds: bool,
}

/// Over every orientation of `C_k` with a directed path of `k - 2` edges:
/// acyclic iff some pair is joined by two internally disjoint directed paths.
///
/// Bit `i` of the mask orients edge `{i, i+1 mod k}` as `i -> i+1`.
pub fn cycle_orientation_lemma_check(k: usize) -> Result<CycleLemmaReport> {
    if !(4..=24).contains(&k) {
        return Err(Error::Parameter(format!("cycle length must be in 4..=24, got {k}")));
    }
    let forward = |mask: u32, i: usize| mask >> (i % k) & 1 == 1;
    let mut qualifying = 0;
    let mut holds = true;
    for mask in 0u32..1 << k {
        let full = (1u32 << k) - 1;
        let acyclic = mask != 0 && mask != full;
        let longest_run = (0..k)
            .map(|s| {
                let d = forward(mask, s);
                (0..k).take_while(|&t| forward(mask, s + t) == d).count()
            })
            .max()
            .unwrap_or(0);
        if longest_run < k - 2 {
            continue;
        }
        qualifying += 1;
        // both arcs of the cycle between x and y directed from x to y
        let two_paths = (0..k).any(|x| {
            (1..k).any(|offset| {
                let y = (x + offset) % k;
                let clockwise = (0..offset).all(|t| forward(mask, x + t));
                let counter = (0..k - offset).all(|t| !forward(mask, y + t));
                clockwise && counter
            })
        });
        if acyclic != two_paths {
            holds = false;
        }
    }
    Ok(CycleLemmaReport { k, qualifying, holds })
}

/// Result of [`aop_pipeline_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    pub n: usize,
    pub g: usize,
    pub vertices: usize,
    pub edges: usize,
    pub verified: bool,
    pub odd_girth: CycleLength,
    pub odd_girth_bound: usize,
    /// Exact chromatic number when within the solver's cap.
    pub chromatic: Option<usize>,
}

impl PipelineReport {
    pub fn holds(&self) -> bool {
        self.verified && self.odd_girth >= CycleLength::Finite(self.odd_girth_bound)
    }
}

/// Builds `L^g(Z_n)` with the orientation inherited through the iterations
/// and measures the AOP property, odd girth and chromatic number.
pub fn aop_pipeline_check(n: usize, g: usize, cap: usize) -> Result<PipelineReport> {
    let z = zykov(n, cap)?;
    let d = iterate_line_digraph(&z.digraph(), g, cap)?;
    let verified = verify_aop(&d.natural_orientation())?.holds();
    let under = d.underlying();
    let chromatic = if under.n() <= DEFAULT_CHROMATIC_CAP {
        Some(chromatic_number_capped(&under, DEFAULT_CHROMATIC_CAP)?.0)
    } else {
        None
    };
    Ok(PipelineReport {
        n,
        g,
        vertices: under.n(),
        edges: under.edge_count(),
        verified,
        odd_girth: odd_girth(&under),
        odd_girth_bound: 2 * g + 3,
        chromatic,
    })
}
