//! Property tests for the graph core, the detectors, the minor and k-trees.

mod common;

use obstruction_lab::detect::*;
use obstruction_lab::harness::enumerate_graphs;
use obstruction_lab::ktree::{ktree_quotient, random_ktree, recognize_ktree, validate_ktree, KTree};
use obstruction_lab::minor::triangle_minor;
use obstruction_lab::{parse_graph6, write_graph6, SimpleGraph, VertexSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 0..n {
                for i in 0..j {
                    if it.next().unwrap_or(false) {
                        edges.push((i, j));
                    }
                }
            }
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
    })
}

#[test]
fn graph6_round_trips_on_all_small_graphs() {
    for n in 0..=8 {
        for g in enumerate_graphs(n, |_| true) {
            assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }
}

/// Searches all elimination choices, not just the least one.
fn is_ktree_exhaustive(g: &SimpleGraph, k: usize) -> bool {
    fn peel(g: &SimpleGraph, k: usize, left: VertexSet) -> bool {
        if left.len() == k {
            return g.is_clique(left);
        }
        left.iter().any(|v| {
            let fwd = g.neighbors(v) & left;
            fwd.len() == k && g.is_clique(fwd) && peel(g, k, left.without(v))
        })
    }
    g.n() >= k && peel(g, k, g.vertices())
}

#[test]
fn recognition_matches_exhaustive_search() {
    for k in 1..=3 {
        let mut seen = 0;
        for n in k..=8 {
            let edges = k * n - k * (k + 1) / 2;
            for g in enumerate_graphs(n, |g| g.edge_count() == edges) {
                let fast = recognize_ktree(&g, k);
                assert_eq!(fast.is_some(), is_ktree_exhaustive(&g, k), "{}", write_graph6(&g));
                if let Some(order) = fast {
                    seen += 1;
                    assert!(validate_ktree(&g, k, &order).unwrap().is_valid());
                    assert!(g.is_connected() && is_chordal(&g).is_chordal());
                    assert!(has_clique(&g, k + 2).is_none());
                }
            }
        }
        assert!(seen > 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn induced_on_everything_is_identity(g in graph(20)) {
        let (h, map) = g.induced_subgraph(g.vertices());
        prop_assert_eq!(map, (0..g.n()).collect::<Vec<_>>());
        prop_assert_eq!(h, g);
    }

    #[test]
    fn components_partition(g in graph(24)) {
        let comps = g.components();
        let mut union = VertexSet::EMPTY;
        for (i, &c) in comps.iter().enumerate() {
            prop_assert!(!c.is_empty() && g.is_connected_within(c));
            prop_assert!(union.is_disjoint(c));
            union = union | c;
            for &d in &comps[i + 1..] {
                prop_assert!(g.is_anticomplete(c, d));
            }
        }
        prop_assert_eq!(union, g.vertices());
    }

    #[test]
    fn minor_drops_one_vertex(g in graph(14), pick in any::<prop::sample::Index>()) {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let (z1, z2) = edges[pick.index(edges.len())];
        let m = triangle_minor(&g, z1, z2).unwrap();
        prop_assert_eq!(m.graph.n(), g.n() - 1);
        let near = g.closed_neighbors(z1) | g.closed_neighbors(z2);
        for v in g.vertices() - near {
            prop_assert_eq!(m.graph.degree(m.map[v]), g.degree(v));
        }
        let common = g.neighbors(z1) & g.neighbors(z2);
        prop_assert_eq!(m.graph.degree(m.z), common.len());
    }

    #[test]
    fn certificates_validate(g in graph(11)) {
        let found = [
            find_theta(&g),
            find_prism(&g),
            find_even_wheel(&g),
            find_hole(&g, Parity::Any, 4),
            find_hole(&g, Parity::Even, 4),
            find_c4(&g),
            in_class_e(&g).certificate().cloned(),
        ];
        for c in found.iter().flatten() {
            prop_assert!(c.validate(&g).is_ok(), "{:?}", c);
        }
    }

    #[test]
    fn hole_classes_follow_the_definition(g in graph(10)) {
        for hole in all_holes(&g).into_iter().take(8) {
            let rim: VertexSet = hole.iter().collect();
            for v in g.vertices() - rim {
                let on = g.neighbors(v) & rim;
                let expected = match on.len() {
                    0 => WheelClass::NoNeighbor,
                    1 => WheelClass::Good,
                    _ if g.is_clique(on) => WheelClass::Bad,
                    _ => WheelClass::Ugly,
                };
                prop_assert_eq!(classify_against_hole(&g, &hole, v).unwrap(), expected);
            }
        }
    }

    #[test]
    fn quotients_stay_ktrees(k in 1usize..=4, extra in 0usize..12, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t: KTree = random_ktree(k, k + extra, &mut rng);
        prop_assert!(t.validate().unwrap().is_valid());
        for i in 0..=t.h() - k {
            let (q, map) = ktree_quotient(&t, i).unwrap();
            prop_assert!(q.validate().unwrap().is_valid(), "i = {}", i);
            prop_assert_eq!(q.h(), t.h() - i);
            prop_assert_eq!(map.len(), q.h());
        }
    }
}
