mod common;

use std::sync::Arc;

use proptest::prelude::*;

use shiftlab::coloring::{
    coloring_to_orientation, color_kab_free, find_induced_kab, is_kab_free, k_star, lift_coloring,
    log_color_line_digraph, orientation_to_coloring, Coloring,
};
use shiftlab::constructors::{acyclic_tournament, line_digraph, shift_graph};
use shiftlab::invariants::{chromatic_number, dsatur_greedy};
use shiftlab::UndirectedGraph;

#[test]
fn k_star_matches_pascal_scan() {
    for c in 0..=3000 {
        assert_eq!(k_star(c), common::brute_k_star(c), "c = {c}");
    }
}

#[test]
fn log_coloring_palette_is_exactly_k_star() {
    let mut rng = common::rng(0x5eed_0201);
    for _ in 0..150 {
        let d = common::random_small_acyclic(&mut rng, 10);
        let (chi, base) = chromatic_number(&d.underlying()).unwrap();
        let line = log_color_line_digraph(&d, &base).unwrap();
        assert_eq!(line.palette(), k_star(chi));
        let h = line_digraph(&d).digraph.underlying();
        assert!(line.check(&h).is_ok());

        let greedy = dsatur_greedy(&d.underlying());
        let line = log_color_line_digraph(&d, &greedy).unwrap();
        assert_eq!(line.palette(), k_star(greedy.used_colors()));
    }
}

#[test]
fn log_coloring_of_t5_uses_four_colors() {
    let t5 = acyclic_tournament(5).unwrap();
    let base = Coloring::new(&t5.underlying(), (0..5).collect(), 5).unwrap();
    let c = log_color_line_digraph(&t5, &base).unwrap();
    assert_eq!(c.palette(), 4);
    assert!(c.check(&shift_graph(5, 2).unwrap()).is_ok());
}

#[test]
fn lifted_colorings_respect_the_set_bound() {
    let mut rng = common::rng(0x5eed_0202);
    for _ in 0..150 {
        let d = common::random_small_acyclic(&mut rng, 10);
        let h = line_digraph(&d).digraph.underlying();
        let (t, line) = chromatic_number(&h).unwrap();
        let lifted = lift_coloring(&d, &line).unwrap();
        assert!(lifted.check(&d.underlying()).is_ok());
        let bound = (1usize << t) - 1 + 1;
        assert!(lifted.palette() <= bound, "palette {} > {bound}", lifted.palette());
    }
}

#[test]
fn lifting_exact_colorings_of_tournament_lines() {
    for n in 2..=7 {
        let t = acyclic_tournament(n).unwrap();
        let h = line_digraph(&t).digraph.underlying();
        let (chi_line, line) = chromatic_number(&h).unwrap();
        let lifted = lift_coloring(&t, &line).unwrap();
        // K_n needs n colors, so 2^t - 1 + 1 >= n
        assert!(lifted.palette() >= n);
        assert!(common::pow2_at_least(chi_line, n));
    }
}

#[test]
fn kab_pipeline_on_random_subtournaments() {
    let mut rng = common::rng(0x5eed_0203);
    for _ in 0..150 {
        let t = common::random_subtournament(&mut rng, 7);
        let h = line_digraph(&t).digraph.underlying();
        for a in 1..=3 {
            for b in 1..=3 {
                let (c, report) = color_kab_free(&t, a, b).unwrap();
                assert!(c.check(&h).is_ok());
                assert!(report.left_colors <= b);
                if is_kab_free(&h, a, b) {
                    assert!(report.right_colors <= a);
                    assert!(report.palette <= k_star(a + b));
                    assert!(report.witness.is_none());
                }
                if let Some(w) = &report.witness {
                    assert!(w.is_induced_in(&h));
                    assert_eq!((w.a_side.len(), w.b_side.len()), (a, b));
                }
                assert_eq!(report.witness.is_some(), report.right_colors > a);
            }
        }
    }
}

#[test]
fn kab_oracle_agrees_with_subset_enumeration() {
    let mut rng = common::rng(0x5eed_0204);
    for _ in 0..60 {
        let n = 9;
        let g = common::random_graph(&mut rng, n, 0.4);
        for (a, b) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
            assert_eq!(
                !is_kab_free(&g, a, b),
                common::brute_has_induced_kab(&g, a, b),
                "{:?} a={a} b={b}",
                g.edges()
            );
            if let Some(w) = find_induced_kab(&g, a, b) {
                assert!(w.is_induced_in(&g));
            }
        }
    }
}

fn arb_graph_and_coloring() -> impl Strategy<Value = (UndirectedGraph, Vec<usize>)> {
    (1usize..9).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        (proptest::collection::vec(0usize..4, n), proptest::collection::vec(any::<bool>(), pairs.len())).prop_map(
            move |(colors, keep)| {
                // keep only edges between different colors so the coloring is proper
                let edges = pairs
                    .iter()
                    .zip(&keep)
                    .filter(|(&(u, v), &k)| k && colors[u] != colors[v])
                    .map(|(&p, _)| p);
                (UndirectedGraph::new(n, edges).unwrap(), colors)
            },
        )
    })
}

proptest! {
    #[test]
    fn gallai_roy_round_trip((g, colors) in arb_graph_and_coloring()) {
        let g = Arc::new(g);
        let c = Coloring::new(&g, colors, 4).unwrap();
        let o = coloring_to_orientation(Arc::clone(&g), &c).unwrap();
        let arcs: Vec<(usize, usize)> = o.arcs().collect();
        prop_assert!(common::brute_is_acyclic(g.n(), &arcs));
        prop_assert!(common::longest_path(g.n(), &arcs) < c.palette());
        let back = orientation_to_coloring(&o).unwrap();
        prop_assert!(back.palette() <= c.palette());
        prop_assert_eq!(back.palette(), common::longest_path(g.n(), &arcs) + 1);
    }
}

#[test]
fn natural_orientation_palette_dominates_chromatic_number() {
    let g = shift_graph(5, 2).unwrap();
    let line = line_digraph(&acyclic_tournament(5).unwrap()).digraph;
    let c = orientation_to_coloring(&line.natural_orientation()).unwrap();
    assert!(c.palette() >= chromatic_number(&g).unwrap().0);
}

#[test]
fn c5_three_coloring_orientation_has_short_paths() {
    let c5 = Arc::new(common::cycle(5));
    let c = Coloring::new(&c5, vec![0, 1, 0, 1, 2], 3).unwrap();
    let o = coloring_to_orientation(Arc::clone(&c5), &c).unwrap();
    let arcs: Vec<_> = o.arcs().collect();
    assert!(common::longest_path(5, &arcs) < 3);
}
