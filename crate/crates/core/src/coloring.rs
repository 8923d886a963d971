//! Proper colorings and the constructive colorings of line digraphs.
//!
//! * [`log_color_line_digraph`] colors `L(G)` with `k*(c)` colors from a
//!   `c`-coloring of `G`, by mapping base colors to an antichain of
//!   `⌊k/2⌋`-subsets and coloring each arc `u -> v` by an element of
//!   `S(u) \ S(v)`.
//! * [`lift_coloring`] goes the other way, coloring each vertex of `G` by the
//!   set of colors on its out-arcs.
//! * [`color_kab_free`] colors the line digraph of a subtournament through a
//!   degeneracy split of the parent.
//! * [`coloring_to_orientation`] and [`orientation_to_coloring`] translate
//!   between proper colorings and acyclic orientations with bounded paths.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::constructors::line_digraph;
use crate::error::{Error, Result};
use crate::graph::{AcyclicDigraph, Direction, Orientation, UndirectedGraph};

/// A proper vertex coloring with colors in `0..palette`.
///
/// The palette may exceed the number of colors actually used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    palette: usize,
}

impl Coloring {
    /// Validates length, range and propriety against `g`.
    pub fn new(g: &UndirectedGraph, colors: Vec<usize>, palette: usize) -> Result<Self> {
        if colors.len() != g.n() {
            return Err(Error::InvalidColoring(format!(
                "{} colors for {} vertices",
                colors.len(),
                g.n()
            )));
        }
        if palette == 0 && g.n() > 0 {
            return Err(Error::InvalidColoring("empty palette".into()));
        }
        if let Some(v) = colors.iter().position(|&c| c >= palette) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color {} outside palette {palette}",
                colors[v]
            )));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| colors[u] == colors[v]) {
            return Err(Error::ImproperColoring(u, v));
        }
        Ok(Self { colors, palette })
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    /// Number of distinct colors present.
    pub fn used_colors(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Re-checks this coloring against `g`.
    pub fn check(&self, g: &UndirectedGraph) -> Result<()> {
        Self::new(g, self.colors.clone(), self.palette).map(|_| ())
    }

    /// `{"palette": P, "colors": {"0": c0, "1": c1, ...}}`.
    pub fn to_json(&self) -> String {
        let mut s = format!("{{\"palette\": {}, \"colors\": {{", self.palette);
        for (v, c) in self.colors.iter().enumerate() {
            if v > 0 {
                s.push_str(", ");
            }
            write!(s, "\"{v}\": {c}").unwrap();
        }
        s.push_str("}}");
        s
    }

    /// Reads the [`Coloring::to_json`] document and validates it against `g`.
    pub fn from_json(g: &UndirectedGraph, text: &[u8]) -> Result<Self> {
        #[derive(serde::Deserialize)]
        #[serde(deny_unknown_fields)]
        struct RawColoring {
            palette: usize,
            colors: BTreeMap<String, usize>,
        }
        let raw: RawColoring = serde_json::from_slice(text).map_err(|e| Error::Json(e.to_string()))?;
        let mut colors = vec![None; g.n()];
        for (key, c) in raw.colors {
            let v: usize = key
                .parse()
                .ok()
                .filter(|&v| v < g.n())
                .ok_or_else(|| Error::Json(format!("color key {key:?} is not a vertex id")))?;
            colors[v] = Some(c);
        }
        let colors = colors
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| Error::InvalidColoring(format!("vertex {v} has no color"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, colors, raw.palette)
    }
}

/// `C(k, ⌊k/2⌋)`, saturating at `u128::MAX`.
pub fn central_binomial(k: usize) -> u128 {
    let h = k / 2;
    let mut c: u128 = 1;
    for i in 0..h {
        // c = C(k, i) here; C(k, i+1) = C(k, i) * (k - i) / (i + 1) exactly
        c = match c.checked_mul((k - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    c
}

/// Smallest `k >= 1` with `C(k, ⌊k/2⌋) >= c`.
pub fn k_star(c: usize) -> usize {
    (1..).find(|&k| central_binomial(k) >= c as u128).expect("central binomials are unbounded")
}

/// All `⌊k/2⌋`-subsets of `0..k` as bit masks, in colexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetPalette {
    k: usize,
    subsets: Vec<u64>,
}

impl SubsetPalette {
    pub fn new(k: usize) -> Result<Self> {
        Self::first(k, usize::MAX)
    }

    /// The first `count` subsets only.
    pub fn first(k: usize, count: usize) -> Result<Self> {
        if k == 0 || k > 64 {
            return Err(Error::Parameter(format!("subset palette size must be in 1..=64, got {k}")));
        }
        let h = k / 2;
        let limit = central_binomial(k).min(count as u128) as usize;
        let mut subsets = Vec::with_capacity(limit);
        let mut mask: u64 = if h == 0 { 0 } else { u64::MAX >> (64 - h) };
        while subsets.len() < limit {
            subsets.push(mask);
            if mask == 0 {
                break;
            }
            // next mask with the same popcount (Gosper)
            let low = mask & mask.wrapping_neg();
            let ripple = mask.wrapping_add(low);
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
        Ok(Self { k, subsets })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn subsets(&self) -> &[u64] {
        &self.subsets
    }
}

/// `k*(c)`-coloring of the underlying graph of `L(g)`, `c` the number of
/// colors `base` uses. Line vertex ids follow `g.arcs()`.
pub fn log_color_line_digraph(g: &AcyclicDigraph, base: &Coloring) -> Result<Coloring> {
    base.check(&g.underlying())?;
    let used: BTreeSet<usize> = base.colors().iter().copied().collect();
    let k = k_star(used.len());
    let palette = SubsetPalette::first(k, used.len())?;
    let subset_of: BTreeMap<usize, u64> = used.iter().copied().zip(palette.subsets().iter().copied()).collect();
    let mut colors = Vec::with_capacity(g.arc_count());
    for &(u, v) in g.arcs() {
        let diff = subset_of[&base.color(u)] & !subset_of[&base.color(v)];
        if diff == 0 {
            return Err(Error::Invariant(format!("subset of {u} is contained in subset of {v}")));
        }
        colors.push(diff.trailing_zeros() as usize);
    }
    let line = line_digraph(g).digraph.underlying();
    Coloring::new(&line, colors, k).map_err(|e| Error::Invariant(format!("log coloring: {e}")))
}

/// Colors each vertex of `g` by the set of `line_coloring` colors on its
/// out-arcs. Distinct sets get ids in increasing set order; sinks share one
/// extra color after them.
pub fn lift_coloring(g: &AcyclicDigraph, line_coloring: &Coloring) -> Result<Coloring> {
    line_coloring.check(&line_digraph(g).digraph.underlying())?;
    let sets: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let set: BTreeSet<usize> = g
                .out_neighbors(v)
                .iter()
                .map(|&w| line_coloring.color(g.arc_index(v, w).expect("out-arc exists")))
                .collect();
            set.into_iter().collect()
        })
        .collect();
    let distinct: BTreeSet<&Vec<usize>> = sets.iter().filter(|s| !s.is_empty()).collect();
    let id: BTreeMap<&Vec<usize>, usize> = distinct.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let sink = distinct.len();
    let has_sink = sets.iter().any(|s| s.is_empty());
    let colors = sets.iter().map(|s| id.get(s).copied().unwrap_or(sink)).collect();
    Coloring::new(&g.underlying(), colors, sink + usize::from(has_sink))
        .map_err(|e| Error::Invariant(format!("lifted coloring: {e}")))
}

/// An induced `K_{a,b}` in the line graph: both sides independent, every
/// cross pair adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KabWitness {
    pub a_side: Vec<usize>,
    pub b_side: Vec<usize>,
}

impl KabWitness {
    pub fn is_induced_in(&self, g: &UndirectedGraph) -> bool {
        let independent = |side: &[usize]| {
            side.iter()
                .enumerate()
                .all(|(i, &x)| side[i + 1..].iter().all(|&y| x != y && !g.has_edge(x, y)))
        };
        independent(&self.a_side)
            && independent(&self.b_side)
            && self
                .a_side
                .iter()
                .all(|&x| self.b_side.iter().all(|&y| g.has_edge(x, y)))
    }
}

/// Summary of a [`color_kab_free`] run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KabReport {
    /// Parent vertices with out-degree at most `b - 1`.
    pub left: Vec<usize>,
    /// Parent vertices with out-degree at least `b`.
    pub right: Vec<usize>,
    pub left_colors: usize,
    pub right_colors: usize,
    pub k_star: usize,
    pub palette: usize,
    /// Present exactly when the right side needed more than `a` colors.
    pub witness: Option<KabWitness>,
}

/// Colors the underlying graph of `L(t_prime)` for a subdigraph of `T_n`.
///
/// Parent vertices split by out-degree; the low side is colored first-fit in
/// decreasing id order, the high side first-fit in increasing id order on a
/// disjoint palette, and the union feeds [`log_color_line_digraph`].
pub fn color_kab_free(t_prime: &AcyclicDigraph, a: usize, b: usize) -> Result<(Coloring, KabReport)> {
    if a == 0 || b == 0 {
        return Err(Error::Parameter(format!("a and b must be positive, got a={a}, b={b}")));
    }
    if let Some(&(u, v)) = t_prime.arcs().iter().find(|&&(u, v)| u >= v) {
        return Err(Error::Parameter(format!("arc ({u},{v}) is not an arc of a tournament")));
    }
    let n = t_prime.n();
    let under = t_prime.underlying();
    let (left, right): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| t_prime.out_degree(v) < b);
    let mut colors = vec![usize::MAX; n];
    let left_colors = first_fit(&under, left.iter().rev().copied(), 0, &mut colors);
    let right_colors = first_fit(&under, right.iter().copied(), left_colors, &mut colors);
    let base = Coloring::new(&under, colors, (left_colors + right_colors).max(usize::from(n > 0)))?;
    let line = log_color_line_digraph(t_prime, &base)?;
    let witness = if right_colors > a {
        Some(right_witness(t_prime, &right, a, b)?)
    } else {
        None
    };
    let report = KabReport {
        left,
        right,
        left_colors,
        right_colors,
        k_star: k_star(base.used_colors()),
        palette: line.palette(),
        witness,
    };
    Ok((line, report))
}

/// Greedy smallest-free-color pass; returns the number of colors opened.
fn first_fit(
    g: &UndirectedGraph,
    order: impl Iterator<Item = usize>,
    offset: usize,
    colors: &mut [usize],
) -> usize {
    let mut opened = 0;
    for v in order {
        let taken: BTreeSet<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| colors[w])
            .filter(|&c| c != usize::MAX && c >= offset)
            .map(|c| c - offset)
            .collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        colors[v] = offset + c;
        opened = opened.max(c + 1);
    }
    opened
}

// A high-side vertex with `a` high-side in-neighbors: its in-arcs from them
// and `b` of its out-arcs span a K_{a,b} in the line graph.
fn right_witness(t_prime: &AcyclicDigraph, right: &[usize], a: usize, b: usize) -> Result<KabWitness> {
    let in_right: BTreeSet<usize> = right.iter().copied().collect();
    for &v in right {
        let feeders: Vec<usize> = t_prime
            .in_neighbors(v)
            .iter()
            .copied()
            .filter(|w| in_right.contains(w))
            .collect();
        if feeders.len() >= a {
            let mut a_side: Vec<usize> = feeders
                .iter()
                .map(|&w| t_prime.arc_index(w, v).expect("in-arc exists"))
                .collect();
            a_side.sort_unstable();
            a_side.truncate(a);
            let mut b_side: Vec<usize> = t_prime
                .out_neighbors(v)
                .iter()
                .map(|&x| t_prime.arc_index(v, x).expect("out-arc exists"))
                .collect();
            b_side.sort_unstable();
            b_side.truncate(b);
            let witness = KabWitness { a_side, b_side };
            if !witness.is_induced_in(&line_digraph(t_prime).digraph.underlying()) {
                return Err(Error::Invariant(format!("bad K_{{a,b}} witness {witness:?}")));
            }
            return Ok(witness);
        }
    }
    Err(Error::Invariant("high side exceeded its bound without a dense vertex".into()))
}

/// Some induced `K_{a,b}` of `g`, by exhaustive search. Desk scale only.
pub fn find_induced_kab(g: &UndirectedGraph, a: usize, b: usize) -> Option<KabWitness> {
    fn independent_subset(
        g: &UndirectedGraph,
        pool: &[usize],
        size: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if chosen.len() == size {
            return visit(chosen);
        }
        for (i, &v) in pool.iter().enumerate() {
            if pool.len() - i < size - chosen.len() {
                break;
            }
            if chosen.iter().any(|&w| g.has_edge(v, w)) {
                continue;
            }
            chosen.push(v);
            if independent_subset(g, &pool[i + 1..], size, chosen, visit) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let all: Vec<usize> = (0..g.n()).collect();
    let mut found = None;
    independent_subset(g, &all, a, &mut Vec::new(), &mut |a_side| {
        let common: Vec<usize> = (0..g.n())
            .filter(|&x| a_side.iter().all(|&y| g.has_edge(x, y)))
            .collect();
        let mut b_side = Vec::new();
        if independent_subset(g, &common, b, &mut b_side, &mut |_| true) {
            found = Some(KabWitness {
                a_side: a_side.to_vec(),
                b_side,
            });
            true
        } else {
            false
        }
    });
    found
}

pub fn is_kab_free(g: &UndirectedGraph, a: usize, b: usize) -> bool {
    find_induced_kab(g, a, b).is_none()
}

/// Orients every edge from its lower color to its higher color.
pub fn coloring_to_orientation(g: Arc<UndirectedGraph>, c: &Coloring) -> Result<Orientation> {
    c.check(&g)?;
    let dir = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            if c.color(u) < c.color(v) {
                Direction::Forward
            } else {
                Direction::Backward
            }
        })
        .collect();
    Orientation::from_directions(g, dir)
}

/// Colors each vertex by the number of arcs on a longest directed path
/// ending there.
pub fn orientation_to_coloring(o: &Orientation) -> Result<Coloring> {
    let d = o.to_digraph()?;
    let mut depth = vec![0usize; d.n()];
    for &v in d.topo() {
        depth[v] = d.in_neighbors(v).iter().map(|&w| depth[w] + 1).max().unwrap_or(0);
    }
    let palette = depth.iter().max().map_or(0, |&m| m + 1);
    Coloring::new(o.graph(), depth, palette)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::acyclic_tournament;

    fn path(n: usize) -> UndirectedGraph {
        UndirectedGraph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let g = path(3);
        let c = Coloring::new(&g, vec![0, 1, 0], 3).unwrap();
        assert_eq!(c.to_json(), r#"{"palette": 3, "colors": {"0": 0, "1": 1, "2": 0}}"#);
        assert_eq!(Coloring::from_json(&g, c.to_json().as_bytes()).unwrap(), c);
        let missing = br#"{"palette": 2, "colors": {"0": 0, "1": 1}}"#;
        assert!(matches!(Coloring::from_json(&g, missing), Err(Error::InvalidColoring(_))));
        let improper = br#"{"palette": 2, "colors": {"0": 0, "1": 0, "2": 1}}"#;
        assert_eq!(Coloring::from_json(&g, improper), Err(Error::ImproperColoring(0, 1)));
        assert!(matches!(Coloring::from_json(&g, br#"{"palette": 2, "colors": {"x": 0}}"#), Err(Error::Json(_))));
    }

    #[test]
    fn validation() {
        let p3 = path(3);
        assert!(Coloring::new(&p3, vec![0, 1, 0], 2).is_ok());
        assert_eq!(Coloring::new(&p3, vec![0, 0, 1], 2), Err(Error::ImproperColoring(0, 1)));
        assert!(matches!(Coloring::new(&p3, vec![0, 1], 2), Err(Error::InvalidColoring(_))));
        assert!(matches!(Coloring::new(&p3, vec![0, 2, 0], 2), Err(Error::InvalidColoring(_))));
        assert!(Coloring::new(&UndirectedGraph::empty(0), vec![], 0).is_ok());
        assert!(Coloring::new(&UndirectedGraph::empty(1), vec![0], 0).is_err());
    }

    #[test]
    fn json_shape() {
        let c = Coloring::new(&path(3), vec![0, 1, 0], 3).unwrap();
        assert_eq!(c.to_json(), r#"{"palette": 3, "colors": {"0": 0, "1": 1, "2": 0}}"#);
    }

    #[test]
    fn k_star_values() {
        let got: Vec<usize> = (0..=11).map(k_star).collect();
        assert_eq!(got, [1, 1, 2, 3, 4, 4, 4, 5, 5, 5, 5, 6]);
        assert_eq!(central_binomial(4), 6);
        assert_eq!(central_binomial(66), 7_219_428_434_016_265_740);
    }

    #[test]
    fn subset_palettes() {
        let p = SubsetPalette::new(4).unwrap();
        assert_eq!(p.subsets(), &[0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(SubsetPalette::new(1).unwrap().subsets(), &[0]);
        assert_eq!(SubsetPalette::new(5).unwrap().subsets().len(), 10);
        assert_eq!(SubsetPalette::first(6, 3).unwrap().subsets(), &[0b000111, 0b001011, 0b001101]);
    }

    #[test]
    fn log_color_of_t5() {
        let t5 = acyclic_tournament(5).unwrap();
        let base = Coloring::new(&t5.underlying(), (0..5).collect(), 5).unwrap();
        let c = log_color_line_digraph(&t5, &base).unwrap();
        assert_eq!((c.n(), c.palette()), (10, 4));
    }

    #[test]
    fn log_color_of_path() {
        let d = AcyclicDigraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let base = Coloring::new(&d.underlying(), vec![0, 1, 0, 1], 2).unwrap();
        let c = log_color_line_digraph(&d, &base).unwrap();
        assert_eq!(c.palette(), 2);
        assert_eq!(c.colors(), &[0, 1, 0]);
    }

    #[test]
    fn log_color_of_edgeless() {
        let d = AcyclicDigraph::new(3, []).unwrap();
        let base = Coloring::new(&d.underlying(), vec![0, 0, 0], 1).unwrap();
        let c = log_color_line_digraph(&d, &base).unwrap();
        assert_eq!((c.n(), c.palette()), (0, 1));
    }

    #[test]
    fn lifts() {
        let edgeless = AcyclicDigraph::new(3, []).unwrap();
        let empty = Coloring::new(&UndirectedGraph::empty(0), vec![], 1).unwrap();
        let lifted = lift_coloring(&edgeless, &empty).unwrap();
        assert_eq!((lifted.colors(), lifted.palette()), (&[0, 0, 0][..], 1));

        let arc = AcyclicDigraph::new(2, [(0, 1)]).unwrap();
        let one = Coloring::new(&UndirectedGraph::empty(1), vec![0], 1).unwrap();
        let lifted = lift_coloring(&arc, &one).unwrap();
        assert_eq!((lifted.colors(), lifted.palette()), (&[0, 1][..], 2));
    }

    #[test]
    fn kab_single_arc_and_low_side_only() {
        let single = AcyclicDigraph::new(2, [(0, 1)]).unwrap();
        let (c, report) = color_kab_free(&single, 1, 1).unwrap();
        assert_eq!((c.n(), c.used_colors()), (1, 1));
        assert_eq!(report.witness, None);

        let path = AcyclicDigraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (_, report) = color_kab_free(&path, 2, 2).unwrap();
        assert!(report.right.is_empty());
        assert!(report.left_colors <= 2);
        assert!(report.palette <= k_star(2));
    }

    #[test]
    fn kab_on_t9_reports_four_hole() {
        let t9 = acyclic_tournament(9).unwrap();
        let (c, report) = color_kab_free(&t9, 2, 2).unwrap();
        assert_eq!(c.n(), 36);
        let h = line_digraph(&t9).digraph.underlying();
        assert!(!is_kab_free(&h, 2, 2));
        if let Some(w) = &report.witness {
            assert!(w.is_induced_in(&h));
            assert_eq!((w.a_side.len(), w.b_side.len()), (2, 2));
        } else {
            assert!(report.palette <= k_star(4));
        }
    }

    #[test]
    fn kab_oracle_on_small_graphs() {
        let c4 = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let w = find_induced_kab(&c4, 2, 2).unwrap();
        assert!(w.is_induced_in(&c4));
        assert!(is_kab_free(&path(5), 2, 2));
        // a triangle's vertex pairs are not independent
        let k3 = UndirectedGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_kab_free(&k3, 1, 2));
        assert!(!is_kab_free(&k3, 1, 1));
    }

    #[test]
    fn gallai_roy_translations() {
        let p4 = Arc::new(path(4));
        let c = Coloring::new(&p4, vec![0, 1, 0, 1], 2).unwrap();
        let o = coloring_to_orientation(Arc::clone(&p4), &c).unwrap();
        assert_eq!(o.arcs().collect::<Vec<_>>(), vec![(0, 1), (2, 1), (2, 3)]);
        let back = orientation_to_coloring(&o).unwrap();
        assert_eq!(back.palette(), 2);

        let t4 = acyclic_tournament(4).unwrap();
        let colors = orientation_to_coloring(&t4.natural_orientation()).unwrap();
        assert_eq!(colors.colors(), &[0, 1, 2, 3]);

        let edgeless = Arc::new(UndirectedGraph::empty(3));
        let c = Coloring::new(&edgeless, vec![0, 0, 0], 1).unwrap();
        assert_eq!(coloring_to_orientation(edgeless, &c).unwrap().arcs().count(), 0);

        let partial = Orientation::unset(p4);
        assert!(orientation_to_coloring(&partial).is_err());
    }
}
