use std::fmt::Write as _;

use super::{AcyclicDigraph, Direction, Labels, Orientation, UndirectedGraph};

/// Deterministic Graphviz output.
pub trait ToDot {
    fn to_dot(&self) -> String;
}

fn vertex_lines(s: &mut String, n: usize, labels: &Labels) {
    for v in 0..n {
        match labels.get(&v) {
            Some(l) => writeln!(s, "  {v} [label=\"{}\"];", l.replace('\\', "\\\\").replace('"', "\\\"")).unwrap(),
            None => writeln!(s, "  {v};").unwrap(),
        }
    }
}

impl ToDot for UndirectedGraph {
    fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        vertex_lines(&mut s, self.n, &self.labels);
        for &(u, v) in &self.edges {
            writeln!(s, "  {u} -- {v};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

impl ToDot for AcyclicDigraph {
    fn to_dot(&self) -> String {
        let mut s = String::from("digraph G {\n");
        vertex_lines(&mut s, self.n, &self.labels);
        for &(u, v) in &self.arcs {
            writeln!(s, "  {u} -> {v};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

impl ToDot for Orientation {
    /// Unset edges are drawn without arrowheads.
    fn to_dot(&self) -> String {
        let g = self.graph();
        let mut s = String::from("digraph G {\n");
        vertex_lines(&mut s, g.n(), g.labels());
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            match self.direction(e) {
                Direction::Forward => writeln!(s, "  {u} -> {v};").unwrap(),
                Direction::Backward => writeln!(s, "  {v} -> {u};").unwrap(),
                Direction::Unset => writeln!(s, "  {u} -> {v} [dir=none];").unwrap(),
            }
        }
        s.push_str("}\n");
        s
    }
}
