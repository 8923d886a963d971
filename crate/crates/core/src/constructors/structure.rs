//! Checkable predicates for the structure of a line digraph relative to the
//! bag decomposition of its parent. Each returns the first violation found.

use std::fmt;

use super::LineDigraph;
use crate::graph::AcyclicDigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureClause {
    /// Every bag is an independent set.
    IndependentBags,
    /// Adjacent line vertices come from adjacent parent vertices, and arcs
    /// point from the lower to the higher bag index.
    IndexedAdjacency,
    /// All neighbors at an index not below a vertex's own share one bag.
    SingleLargerBag,
    /// For adjacent parent vertices `v_i, v_j`, `i < j`, with `B(j)` nonempty,
    /// exactly one vertex of `B(i)` sees all of `B(j)` and no other sees any.
    UniqueParent,
    /// Two lower-index neighbors of a vertex see its whole bag and are not
    /// adjacent to each other.
    LowerNeighbors,
}

impl fmt::Display for StructureClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            StructureClause::IndependentBags => "independent bags",
            StructureClause::IndexedAdjacency => "indexed adjacency",
            StructureClause::SingleLargerBag => "single larger bag",
            StructureClause::UniqueParent => "unique parent",
            StructureClause::LowerNeighbors => "lower neighbors",
        };
        f.write_str(name)
    }
}

/// A clause together with the line-digraph vertices (or, for
/// [`StructureClause::UniqueParent`], the two bag indices) that break it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureViolation {
    pub clause: StructureClause,
    pub witness: Vec<usize>,
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at {:?}", self.clause, self.witness)
    }
}

fn violation(clause: StructureClause, witness: Vec<usize>) -> Option<StructureViolation> {
    Some(StructureViolation { clause, witness })
}

pub fn independent_bags(line: &LineDigraph) -> Option<StructureViolation> {
    let h = line.digraph.underlying();
    for bag in line.bags.bags() {
        for (x, &u) in bag.iter().enumerate() {
            if let Some(&w) = bag[x + 1..].iter().find(|&&w| h.has_edge(u, w)) {
                return violation(StructureClause::IndependentBags, vec![u, w]);
            }
        }
    }
    None
}

pub fn indexed_adjacency(parent: &AcyclicDigraph, line: &LineDigraph) -> Option<StructureViolation> {
    let under = parent.underlying();
    let vertex_at = parent.topo();
    let index = |u: usize| line.bags.index(u);
    for &(u, w) in line.digraph.arcs() {
        let adjacent = under.has_edge(vertex_at[index(u)], vertex_at[index(w)]);
        if !adjacent || index(u) >= index(w) {
            return violation(StructureClause::IndexedAdjacency, vec![u, w]);
        }
    }
    None
}

pub fn single_larger_bag(line: &LineDigraph) -> Option<StructureViolation> {
    let h = line.digraph.underlying();
    for u in 0..h.n() {
        let mut larger = h.neighbors(u).iter().filter(|&&w| line.bags.index(w) >= line.bags.index(u));
        if let Some(&first) = larger.next() {
            if let Some(&other) = larger.find(|&&w| line.bags.index(w) != line.bags.index(first)) {
                return violation(StructureClause::SingleLargerBag, vec![u, first, other]);
            }
        }
    }
    None
}

pub fn unique_parent(parent: &AcyclicDigraph, line: &LineDigraph) -> Option<StructureViolation> {
    let under = parent.underlying();
    let h = line.digraph.underlying();
    let vertex_at = parent.topo();
    let bags = line.bags.bags();
    for j in 0..bags.len() {
        if bags[j].is_empty() {
            continue;
        }
        for i in 0..j {
            if !under.has_edge(vertex_at[i], vertex_at[j]) {
                continue;
            }
            let mut sees_all = 0;
            let mut sees_some = 0;
            for &u in &bags[i] {
                let seen = bags[j].iter().filter(|&&w| h.has_edge(u, w)).count();
                if seen == bags[j].len() {
                    sees_all += 1;
                } else if seen > 0 {
                    sees_some += 1;
                }
            }
            if sees_all != 1 || sees_some != 0 {
                return violation(StructureClause::UniqueParent, vec![i, j]);
            }
        }
    }
    None
}

pub fn lower_neighbors(line: &LineDigraph) -> Option<StructureViolation> {
    let h = line.digraph.underlying();
    for u in 0..h.n() {
        let own_bag = line.bags.bag(line.bags.index(u));
        let lower: Vec<usize> = h
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| line.bags.index(w) < line.bags.index(u))
            .collect();
        for (x, &a) in lower.iter().enumerate() {
            if let Some(&b) = own_bag.iter().find(|&&b| !h.has_edge(a, b)) {
                return violation(StructureClause::LowerNeighbors, vec![u, a, b]);
            }
            if let Some(&b) = lower[x + 1..].iter().find(|&&b| h.has_edge(a, b)) {
                return violation(StructureClause::LowerNeighbors, vec![u, a, b]);
            }
        }
    }
    None
}

/// Runs all five predicates in clause order.
pub fn check_structure(parent: &AcyclicDigraph, line: &LineDigraph) -> Option<StructureViolation> {
    independent_bags(line)
        .or_else(|| indexed_adjacency(parent, line))
        .or_else(|| single_larger_bag(line))
        .or_else(|| unique_parent(parent, line))
        .or_else(|| lower_neighbors(line))
}
