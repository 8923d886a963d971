mod common;

use shiftlab::constructors::structure::check_structure;
use shiftlab::constructors::{
    acyclic_tournament, brinkmann_graph, closes_to_five_cycle, girth5_non_aop, induced_line_subdigraph,
    iterate_line_digraph, line_digraph, odd_girth_gadget, pair_index, shift_graph, three_edge_paths, zykov,
    DEFAULT_SIZE_CAP,
};
use shiftlab::graph::{topological_order, TopologicalOrder};
use shiftlab::invariants::{chromatic_number, girth, odd_girth, CycleLength};
use shiftlab::UndirectedGraph;

#[test]
fn shift_graph_is_line_digraph_of_tournament() {
    for n in 3..=12 {
        let shift = shift_graph(n, 2).unwrap();
        let line = line_digraph(&acyclic_tournament(n).unwrap()).digraph.underlying();
        // line vertex ids follow the tournament's arcs (i, j), which are the
        // pairs in lexicographic order, i.e. the 1-based tuples of `shift`
        assert_eq!(shift.edges(), line.edges(), "n = {n}");
        for (id, (i, j)) in acyclic_tournament(n).unwrap().arcs().iter().enumerate() {
            assert_eq!(shift.label(id), Some(format!("({},{})", i + 1, j + 1).as_str()));
            assert_eq!(pair_index(n, *i, *j), id);
        }
    }
}

#[test]
fn shift_graph_counts_match_binomials() {
    let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    for n in 3..=10 {
        let g = shift_graph(n, 2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (binom(n, 2), binom(n, 3)));
    }
    for (n, k) in [(7, 3), (8, 3), (9, 4)] {
        let g = shift_graph(n, k).unwrap();
        // (a1..ak) has one neighbor (a2..ak, x) per x > ak
        let expected: usize = (k..=n).map(|last| binom(last - 1, k - 1) * (n - last)).sum();
        assert_eq!((g.n(), g.edge_count()), (binom(n, k), expected), "G({n},{k})");
    }
}

#[test]
fn iterates_of_tournaments_are_shift_graphs() {
    for (n, k) in [(5, 2), (7, 3), (8, 3), (9, 4)] {
        let it = iterate_line_digraph(&acyclic_tournament(n).unwrap(), k - 1, DEFAULT_SIZE_CAP).unwrap();
        let g = shift_graph(n, k).unwrap();
        assert_eq!((it.n(), it.arc_count()), (g.n(), g.edge_count()));
    }
}

#[test]
fn structure_clauses_hold_on_random_digraphs() {
    let mut rng = common::rng(0x5eed_0001);
    for _ in 0..300 {
        let d = common::random_small_acyclic(&mut rng, 12);
        let line = line_digraph(&d);
        assert_eq!(check_structure(&d, &line), None, "{:?}", d.arcs());
    }
}

#[test]
fn line_digraphs_are_acyclic() {
    let mut rng = common::rng(0x5eed_0002);
    for _ in 0..100 {
        let d = common::random_small_acyclic(&mut rng, 20);
        let line = line_digraph(&d).digraph;
        assert!(matches!(topological_order(line.n(), line.arcs()), TopologicalOrder::Order(_)));
        for &(u, v) in line.arcs() {
            assert!(line.position(u) < line.position(v));
        }
    }
}

#[test]
fn line_digraph_arcs_follow_definition() {
    let mut rng = common::rng(0x5eed_0003);
    for _ in 0..50 {
        let d = common::random_small_acyclic(&mut rng, 9);
        let line = line_digraph(&d).digraph;
        let arcs = d.arcs();
        let mut expected = Vec::new();
        for (p, &(_, b)) in arcs.iter().enumerate() {
            for (q, &(c, _)) in arcs.iter().enumerate() {
                if b == c {
                    expected.push((p, q));
                }
            }
        }
        expected.sort_unstable();
        assert_eq!(line.arcs(), expected.as_slice());
    }
}

#[test]
fn induced_line_subdigraphs_embed_in_shift_graph() {
    let mut rng = common::rng(0x5eed_0004);
    for _ in 0..60 {
        let n = 7;
        let t = common::random_subtournament(&mut rng, n);
        let (line, inj) = induced_line_subdigraph(&t, n).unwrap();
        let h = line.digraph.underlying();
        let shift = shift_graph(n, 2).unwrap();
        for p in 0..h.n() {
            for q in p + 1..h.n() {
                assert_eq!(h.has_edge(p, q), shift.has_edge(inj[p], inj[q]));
            }
        }
    }
}

#[test]
fn zykov_graphs_are_triangle_free_with_growing_chromatic_number() {
    for n in 1..=4 {
        let z = zykov(n, DEFAULT_SIZE_CAP).unwrap();
        assert!(!z.graph.has_triangle());
        assert_eq!(chromatic_number(&z.graph).unwrap().0, n, "Z_{n}");
    }
    assert!(!zykov(5, DEFAULT_SIZE_CAP).unwrap().graph.has_triangle());
}

#[test]
fn gadget_odd_girth() {
    for g in [5, 7, 9, 11] {
        let gadget = odd_girth_gadget(g).unwrap();
        assert_eq!(odd_girth(&gadget), CycleLength::Finite(g));
        assert_eq!(common::brute_odd_girth(&gadget), Some(g));
        assert_eq!(gadget.edge_count(), 3 * g);
    }
}

#[test]
fn girth5_construction_invariants() {
    let base = brinkmann_graph();
    let built = girth5_non_aop(&base).unwrap();
    let g = &built.graph;
    assert_eq!(girth(g), CycleLength::Finite(5));
    for v in built.base_n..g.n() {
        assert_eq!(g.degree(v), 2);
    }
    for path in three_edge_paths(&base) {
        assert!(closes_to_five_cycle(g, &path));
    }
    // the base is an induced subgraph of the output
    let ids: Vec<usize> = (0..built.base_n).collect();
    assert_eq!(g.induced_subgraph(&ids).unwrap().edges(), base.edges());
    assert_eq!(built.apex_paths.len(), g.n() - base.n());
}

#[test]
fn girth5_construction_is_deterministic() {
    let a = girth5_non_aop(&brinkmann_graph()).unwrap();
    let b = girth5_non_aop(&brinkmann_graph()).unwrap();
    assert_eq!(a.graph.to_json(), b.graph.to_json());
}

#[test]
fn girth5_construction_rejects_three_colorable_base() {
    let petersen = UndirectedGraph::new(
        10,
        [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
    .unwrap();
    assert_eq!(girth(&petersen), CycleLength::Finite(5));
    assert!(girth5_non_aop(&petersen).is_err());
}
