//! Shift graphs, iterated line digraphs, and acyclic one-path (AOP) orientations.
//!
//! The crate builds the graph families (acyclic tournaments, shift graphs,
//! line digraphs and their iterates, Zykov graphs, non-AOP gadgets), checks
//! their structural invariants, produces the antichain and degeneracy based
//! colorings, and decides or verifies the AOP property: an acyclic
//! orientation with at most one directed path between any two vertices.

pub mod aop;
pub mod coloring;
pub mod constructors;
pub mod error;
pub mod graph;
pub mod invariants;

pub use error::{Error, Result};
pub use graph::{
    graph_from_json, AcyclicDigraph, Direction, Labels, Orientation, ParsedGraph, PathCount,
    PathCountMatrix, ToDot, UndirectedGraph,
};
