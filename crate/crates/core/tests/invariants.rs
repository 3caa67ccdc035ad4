//! Property tests for the structural invariants: involutions, counting
//! identities, serialization round-trips, and solver bounds on random
//! graphs.

use proptest::prelude::*;

use gfree_core::canon::{canonical_code, enumerate_graphs};
use gfree_core::g6::{parse_graph6, write_graph6};
use gfree_core::graph::{complete_graph, Graph};
use gfree_core::solver::chi_g;
use gfree_core::subiso::Pattern;

/// Strategy: a graph on up to 8 vertices from upper-triangle edge bits.
fn small_graph() -> impl Strategy<Value = Graph> {
    (0usize..=8).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), bits).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for col in 1..n {
                for row in 0..col {
                    if mask[idx] {
                        edges.push((row, col));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges)
        })
    })
}

fn named_pattern() -> impl Strategy<Value = Pattern> {
    prop::sample::select(vec!["K2", "P3", "K3", "P4", "C4", "K4"])
        .prop_map(|name| Pattern::from_name(name).unwrap())
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in small_graph()) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn join_edge_count_identity(a in small_graph(), b in small_graph()) {
        prop_assume!(a.vertex_count() + b.vertex_count() <= 8);
        let j = a.join(&b);
        prop_assert_eq!(
            j.edge_count(),
            a.edge_count() + b.edge_count() + a.vertex_count() * b.vertex_count()
        );
    }

    #[test]
    fn graph6_roundtrip_is_identity(g in small_graph()) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn remove_then_readd_edge(g in small_graph()) {
        if let Some(&e) = g.edges().first() {
            prop_assert_eq!(g.remove_edge(e).unwrap().with_edge(e), g);
        }
    }

    #[test]
    fn edge_count_is_half_degree_sum(g in small_graph()) {
        let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(2 * g.edge_count(), degree_sum);
    }

    #[test]
    fn chi_respects_class_size_upper_bound(g in small_graph(), pat in named_pattern()) {
        prop_assume!(g.vertex_count() >= 1);
        let chi = chi_g(&g, &pat).chi;
        prop_assert!(chi <= g.vertex_count().div_ceil(pat.m() - 1));
        prop_assert!(chi >= 1);
    }

    #[test]
    fn chi_witness_classes_are_free_and_cover(g in small_graph(), pat in named_pattern()) {
        let result = chi_g(&g, &pat);
        let mut seen = 0u64;
        for &class in result.witness.classes() {
            prop_assert!(gfree_core::is_g_free(&g, &pat, class));
            prop_assert_eq!(class.intersect(gfree_core::VertexSet(seen)).len(), 0);
            seen |= class.0;
        }
        prop_assert_eq!(gfree_core::VertexSet(seen), g.vertex_set());
    }

    #[test]
    fn chi_never_increases_under_deletion(g in small_graph(), pat in named_pattern()) {
        prop_assume!(g.vertex_count() >= 1);
        let base = chi_g(&g, &pat).chi;
        if let Some(&e) = g.edges().first() {
            let smaller = chi_g(&g.remove_edge(e).unwrap(), &pat).chi;
            prop_assert!(smaller <= base);
            // a single deletion drops chi by at most one
            prop_assert!(smaller + 1 >= base);
        }
        let (h, _) = g.remove_vertex(0).unwrap();
        let smaller = chi_g(&h, &pat).chi;
        prop_assert!(smaller <= base);
        prop_assert!(smaller + 1 >= base);
    }

    #[test]
    fn canonical_code_is_a_graph_invariant(g in small_graph(), seed in any::<u64>()) {
        // relabel by a seeded permutation and compare codes
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let relabeled = Graph::from_edges(n, &edges);
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&relabeled).unwrap());
    }
}

#[test]
fn join_is_associative_up_to_isomorphism_on_small_triples() {
    let pool: Vec<Graph> = (1..=2)
        .flat_map(|n| enumerate_graphs(n).unwrap())
        .chain(enumerate_graphs(3).unwrap())
        .collect();
    for a in &pool {
        for b in &pool {
            for c in &pool {
                if a.vertex_count() + b.vertex_count() + c.vertex_count() > 5 {
                    continue;
                }
                let left = a.join(b).join(c);
                let right = a.join(&b.join(c));
                assert_eq!(
                    canonical_code(&left).unwrap(),
                    canonical_code(&right).unwrap(),
                    "a {a:?} b {b:?} c {c:?}"
                );
            }
        }
    }
}

#[test]
fn graph6_roundtrip_on_all_graphs_up_to_order_6() {
    for n in 0..=6 {
        for g in enumerate_graphs(n).unwrap() {
            assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }
}

#[test]
fn chi_of_complete_graphs() {
    // chi_{K_m}(K_n) = ceil(n / (m-1)): classes hold at most m-1 clique vertices
    for m in 2..=4 {
        let pat = Pattern::from_graph(complete_graph(m)).unwrap();
        for n in 1..=8 {
            assert_eq!(chi_g(&complete_graph(n), &pat).chi, n.div_ceil(m - 1), "n={n} m={m}");
        }
    }
}
