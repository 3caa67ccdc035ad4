//! Deterministic generators for the extremal graph families used by the
//! bound checks: the block construction attaining the `km - 1` vertex bound,
//! its one-vertex-at-a-time uniqueness-preserving extension, the
//! near-complete vertex-minimal graph, complete graphs minus small
//! matchings, and the cocktail-party pattern.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{complete_graph, complete_minus_matching, Graph, VertexSet};
use crate::solver::is_uniquely_colorable;
use crate::subiso::{find_embedding_containing, Pattern};

/// A construction request as it appears in CLI invocations and reports.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "name")]
pub enum ConstructionSpec {
    #[serde(rename = "theorem2")]
    Theorem2 {
        pattern: String,
        k: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        attachment_seed: Option<u64>,
    },
    #[serde(rename = "theorem2_extended")]
    Theorem2Extended {
        pattern: String,
        k: usize,
        steps: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        attachment_seed: Option<u64>,
    },
    #[serde(rename = "hstar")]
    Hstar { m: usize, k: usize },
    #[serde(rename = "r_graph")]
    RGraph { m: usize, k: usize, t: usize },
    #[serde(rename = "theoremD")]
    TheoremD { m: usize, k: usize },
}

/// Builds the graph a spec describes.
pub fn build_from_spec(spec: &ConstructionSpec) -> Result<Graph> {
    match spec {
        ConstructionSpec::Theorem2 { pattern, k, attachment_seed } => {
            build_theorem2_seeded(&Pattern::from_source(pattern)?, *k, *attachment_seed)
        }
        ConstructionSpec::Theorem2Extended { pattern, k, steps, attachment_seed } => {
            let pat = Pattern::from_source(pattern)?;
            let base = build_theorem2_seeded(&pat, *k, *attachment_seed)?;
            extend_uniquely(&base, &pat, *steps)
        }
        ConstructionSpec::Hstar { m, k } => build_hstar(*m, *k),
        ConstructionSpec::RGraph { m, k, t } => build_r_graph(*m, *k, *t),
        ConstructionSpec::TheoremD { m, k } => build_theorem_d_graph(*m, *k),
    }
}

/// The `km - 1`-vertex block construction: `k` cliques of order `m - 1`,
/// attachment vertices `v_1 .. v_{k-1}` forming a clique, `v_i` adjacent to
/// exactly `min(delta - 1, m - 1)` vertices of block `i`, and all cross
/// edges between distinct augmented blocks.
///
/// Block `i` occupies ids `(i-1)(m-1) .. i(m-1)-1`; the attachment vertices
/// come last. The attachment targets are the lowest block ids, or a seeded
/// choice when `attachment_seed` is given.
pub fn build_theorem2(pat: &Pattern, k: usize) -> Result<Graph> {
    build_theorem2_seeded(pat, k, None)
}

fn ensure_order(n: usize) -> Result<()> {
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: crate::graph::MAX_VERTICES });
    }
    Ok(())
}

pub fn build_theorem2_seeded(pat: &Pattern, k: usize, attachment_seed: Option<u64>) -> Result<Graph> {
    if k < 1 {
        return Err(Error::BadParams("theorem2 needs k >= 1".into()));
    }
    let m = pat.m();
    let block = m - 1;
    let n = k * m - 1;
    ensure_order(n)?;
    let attach_count = pat.min_degree().saturating_sub(1).min(block);
    let block_ids = |i: usize| (i * block)..((i + 1) * block); // i in 0..k
    let v_id = |i: usize| k * block + i; // i in 0..k-1

    let mut rng = attachment_seed.map(ChaCha8Rng::seed_from_u64);
    let mut edges = Vec::new();
    for i in 0..k {
        let ids: Vec<usize> = block_ids(i).collect();
        for (a, &u) in ids.iter().enumerate() {
            for &w in &ids[a + 1..] {
                edges.push((u, w));
            }
        }
    }
    for i in 0..k.saturating_sub(1) {
        let ids: Vec<usize> = block_ids(i).collect();
        let targets: Vec<usize> = match &mut rng {
            None => ids[..attach_count].to_vec(),
            Some(rng) => {
                let mut picks: Vec<usize> =
                    rand::seq::index::sample(rng, block, attach_count).into_iter().collect();
                picks.sort_unstable();
                picks.into_iter().map(|p| ids[p]).collect()
            }
        };
        for t in targets {
            edges.push((t, v_id(i)));
        }
        for j in i + 1..k - 1 {
            edges.push((v_id(i), v_id(j)));
        }
    }
    // cross edges of the join: everything between distinct augmented blocks
    for i in 0..k {
        for j in i + 1..k {
            for u in block_ids(i) {
                for w in block_ids(j) {
                    edges.push((u, w));
                }
            }
            if i < k - 1 {
                for w in block_ids(j) {
                    edges.push((v_id(i), w));
                }
            }
            if j < k - 1 {
                for u in block_ids(i) {
                    edges.push((u, v_id(j)));
                }
            }
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Grows a uniquely colorable host one vertex per step while preserving
/// uniqueness: pick the smallest class and its lowest vertex `v`; in every
/// other class find a copy of the pattern through `v`; the new vertex copies
/// `v`'s adjacencies into each copy and stays non-adjacent to `v`'s class.
///
/// Uniqueness is re-verified after every step instead of being assumed; a
/// step that cannot find a copy in some class reports `NoCopy` (that absence
/// contradicts the uniqueness hypothesis and is itself a finding).
pub fn extend_uniquely(host: &Graph, pat: &Pattern, steps: usize) -> Result<Graph> {
    let check = |g: &Graph, stage: &str| {
        let u = is_uniquely_colorable(g, pat);
        if u.unique {
            Ok(u)
        } else {
            Err(Error::NotUnique(format!(
                "{stage}: found {} optimal partitions at chi = {}",
                if u.cap_hit { "at least 2".to_string() } else { u.partitions_found.len().to_string() },
                u.chi
            )))
        }
    };

    ensure_order(host.vertex_count() + steps)?;
    let mut g = host.clone();
    let mut unique = check(&g, "precondition")?;
    for step in 0..steps {
        let partition = &unique.partitions_found[0];
        let smallest = partition.classes()[0];
        let v = smallest.iter().next().expect("classes are nonempty");
        let mut new_neighbors = VertexSet::EMPTY;
        for (idx, &class) in partition.classes().iter().enumerate().skip(1) {
            let copy = find_embedding_containing(&g, pat, class.with(v), v)
                .ok_or(Error::NoCopy { class: idx, vertex: v })?;
            new_neighbors = new_neighbors.union(g.neighbors(v).intersect(copy.image()));
        }
        let u_id = g.vertex_count();
        let mut edges = g.edges();
        edges.extend(new_neighbors.iter().map(|w| (w, u_id)));
        g = Graph::from_edges(u_id + 1, &edges);
        unique = check(&g, &format!("after step {}", step + 1))?;
    }
    Ok(g)
}

/// The vertex-minimal construction of order `(k-1)(m-1) + 1`: blocks
/// `H_1 .. H_{k-1}` of order `m - 2`, vertices `v_1 .. v_k` mutually
/// adjacent, all cross edges, and `v_i` missing exactly its block's highest
/// vertex `w_i`. Equivalently: the complete graph minus the matching
/// `{v_i w_i : i < k}`. Minimum degree `(k-1)(m-1) - 1`.
pub fn build_hstar(m: usize, k: usize) -> Result<Graph> {
    if m < 3 || k < 2 || k > m - 1 {
        return Err(Error::BadParams(format!(
            "hstar needs m >= 3 and 2 <= k <= m-1, got m={m} k={k}"
        )));
    }
    let block = m - 2;
    let n = (k - 1) * block + k;
    debug_assert_eq!(n, (k - 1) * (m - 1) + 1);
    ensure_order(n)?;
    let mut g = complete_graph(n);
    for i in 0..k - 1 {
        let w_i = (i + 1) * block - 1;
        let v_i = (k - 1) * block + i;
        g = g.remove_edge((w_i, v_i))?;
    }
    Ok(g)
}

/// Membership in the family of connected order-`m` spanning subgraphs of
/// the cocktail-party graph: `m` even, connected, and the complement still
/// has a perfect matching.
pub fn is_in_family_f(g: &Graph) -> bool {
    let n = g.vertex_count();
    n >= 2 && n.is_multiple_of(2) && g.is_connected() && has_perfect_matching(&g.complement())
}

fn has_perfect_matching(g: &Graph) -> bool {
    fn rec(g: &Graph, remaining: VertexSet) -> bool {
        let Some(v) = remaining.iter().next() else {
            return true;
        };
        g.neighbors(v)
            .intersect(remaining)
            .iter()
            .any(|u| rec(g, remaining.without(v).without(u)))
    }
    g.vertex_count().is_multiple_of(2) && rec(g, g.vertex_set())
}

/// The complete graph of order `(k-1)(m-1) + 1` minus the `t`-matching that
/// pairs vertex `i` with vertex `m/2 + i`.
pub fn build_r_graph(m: usize, k: usize, t: usize) -> Result<Graph> {
    if m < 4 || !m.is_multiple_of(2) || k < 2 || t < 1 || t > m / 2 - 1 {
        return Err(Error::BadParams(format!(
            "r_graph needs even m >= 4, k >= 2, 1 <= t <= m/2 - 1, got m={m} k={k} t={t}"
        )));
    }
    let n = (k - 1) * (m - 1) + 1;
    ensure_order(n)?;
    if 2 * t > n {
        return Err(Error::MatchingTooLarge { n, t });
    }
    let mut g = complete_graph(n);
    for i in 0..t {
        g = g.remove_edge((i, m / 2 + i))?;
    }
    Ok(g)
}

/// The edge-minimal target shape: for even `k`, the complete graph of order
/// `(k-1)(m-1) + 1` minus a 1-factor; for odd `k`, that order is odd, so a
/// single dominating vertex is joined onto the complete graph of order
/// `(k-1)(m-1)` minus a 1-factor.
pub fn build_theorem_d_graph(m: usize, k: usize) -> Result<Graph> {
    if m < 4 || !m.is_multiple_of(2) || k < 2 {
        return Err(Error::BadParams(format!(
            "theoremD needs even m >= 4 and k >= 2, got m={m} k={k}"
        )));
    }
    ensure_order((k - 1) * (m - 1) + 1)?;
    if k.is_multiple_of(2) {
        let n = (k - 1) * (m - 1) + 1;
        debug_assert_eq!(n % 2, 0);
        Ok(complete_minus_matching(n, n / 2)?.0)
    } else {
        let n1 = (k - 1) * (m - 1);
        debug_assert_eq!(n1 % 2, 0);
        let h1 = complete_minus_matching(n1, n1 / 2)?.0;
        Ok(h1.join(&complete_graph(1)))
    }
}

/// The cocktail-party pattern: the complete graph on even `m >= 4` vertices
/// minus a perfect matching.
pub fn pattern_km_minus_pm(m: usize) -> Result<Pattern> {
    if m < 4 || !m.is_multiple_of(2) {
        return Err(Error::BadParams(format!("KmMinusPM needs even m >= 4, got {m}")));
    }
    Pattern::from_name(&format!("KmMinusPM:{m}"))
        .ok_or_else(|| Error::BadParams(format!("KmMinusPM:{m} is not a valid pattern")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_graph;
    use crate::solver::chi_g;

    fn pat(name: &str) -> Pattern {
        Pattern::from_name(name).unwrap()
    }

    #[test]
    fn theorem2_block_layout() {
        // P3 (delta = 1): the attachment vertex has no block neighbors
        let h = build_theorem2(&pat("P3"), 2).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 8);
        assert!(h.has_edge(0, 1) && h.has_edge(2, 3));
        assert!(!h.has_edge(4, 0) && !h.has_edge(4, 1));
        assert!(h.has_edge(4, 2) && h.has_edge(4, 3));

        // K3 (delta = 2): one attachment edge, to the lowest block id
        let h = build_theorem2(&pat("K3"), 2).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert!(h.has_edge(4, 0) && !h.has_edge(4, 1));
        assert_eq!(h.edge_count(), 9);

        // degenerate k = 1 is the bare block
        assert_eq!(build_theorem2(&pat("K4"), 1).unwrap(), complete_graph(3));
    }

    #[test]
    fn theorem2_vertex_counts() {
        for k in 1..=4 {
            for name in ["K2", "P3", "K3", "P4", "C4", "K4"] {
                let p = pat(name);
                let h = build_theorem2(&p, k).unwrap();
                assert_eq!(h.vertex_count(), k * p.m() - 1, "{name} k={k}");
            }
        }
    }

    #[test]
    fn seeded_attachment_is_reproducible() {
        let a = build_theorem2_seeded(&pat("K4"), 3, Some(7)).unwrap();
        let b = build_theorem2_seeded(&pat("K4"), 3, Some(7)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn extension_grows_and_stays_unique() {
        let p = pat("P3");
        let base = build_theorem2(&p, 2).unwrap();
        assert_eq!(extend_uniquely(&base, &p, 0).unwrap(), base);
        let bigger = extend_uniquely(&base, &p, 1).unwrap();
        assert_eq!(bigger.vertex_count(), 6);
        let two = extend_uniquely(&base, &p, 2).unwrap();
        assert_eq!(two.vertex_count(), 7);
        assert!(is_uniquely_colorable(&two, &p).unique);
    }

    #[test]
    fn extension_rejects_non_unique_hosts() {
        assert!(matches!(
            extend_uniquely(&complete_graph(4), &pat("K3"), 1),
            Err(Error::NotUnique(_))
        ));
    }

    #[test]
    fn hstar_shapes() {
        // m=4, k=2: K4 minus one edge, 4 vertices, delta 2
        let h = build_hstar(4, 2).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.min_degree(), 2);
        assert_eq!(h.edge_count(), 5);

        let h = build_hstar(4, 3).unwrap();
        assert_eq!(h.vertex_count(), 7);
        assert_eq!(h.min_degree(), 5);

        let h = build_hstar(3, 2).unwrap();
        assert_eq!(h.vertex_count(), 3);

        assert!(build_hstar(4, 4).is_err());
        assert!(build_hstar(2, 2).is_err());
    }

    #[test]
    fn hstar_counts_hold_for_small_parameters() {
        for m in 3..=6 {
            for k in 2..=(m - 1) {
                let h = build_hstar(m, k).unwrap();
                assert_eq!(h.vertex_count(), (k - 1) * (m - 1) + 1, "m={m} k={k}");
                assert_eq!(h.min_degree(), (k - 1) * (m - 1) - 1, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn family_f_membership() {
        assert!(is_in_family_f(&cycle_graph(4)));
        assert!(!is_in_family_f(&complete_graph(4)));
        let octahedron = complete_minus_matching(6, 3).unwrap().0;
        assert!(is_in_family_f(&octahedron));
        assert!(!is_in_family_f(&cycle_graph(5))); // odd order
        assert!(!is_in_family_f(&Graph::from_edges(4, &[(0, 1), (2, 3)]))); // disconnected
    }

    #[test]
    fn r_graph_layout() {
        // m=4, k=3, t=1: K7 minus the single edge (0, 2)
        let r = build_r_graph(4, 3, 1).unwrap();
        assert_eq!(r.vertex_count(), 7);
        assert_eq!(r.edge_count(), 20);
        assert!(!r.has_edge(0, 2));

        // m=6, k=2, t=2: K6 minus edges (0,3) and (1,4)
        let r = build_r_graph(6, 2, 2).unwrap();
        assert_eq!(r.edge_count(), 13);
        assert!(!r.has_edge(0, 3) && !r.has_edge(1, 4));

        let r = build_r_graph(4, 2, 1).unwrap();
        assert_eq!(r.edge_count(), 5);

        assert!(build_r_graph(4, 2, 2).is_err()); // t > m/2 - 1
        assert!(build_r_graph(5, 2, 1).is_err()); // odd m
    }

    #[test]
    fn oversized_parameters_error_instead_of_panicking() {
        assert!(matches!(
            build_theorem_d_graph(24, 4),
            Err(Error::TooManyVertices { n: 70, .. })
        ));
        assert!(build_hstar(40, 39).is_err());
        assert!(build_r_graph(64, 3, 1).is_err());
        assert!(build_theorem2(&pat("K4"), 17).is_err());
    }

    #[test]
    fn theorem_d_shapes() {
        let even = build_theorem_d_graph(4, 2).unwrap();
        assert!(crate::canon::is_isomorphic(&even, &cycle_graph(4)));

        let odd = build_theorem_d_graph(4, 3).unwrap();
        assert_eq!(odd.vertex_count(), 7);
        let octahedron = complete_minus_matching(6, 3).unwrap().0;
        assert!(crate::canon::is_isomorphic(&odd, &octahedron.join(&complete_graph(1))));

        let m6 = build_theorem_d_graph(6, 2).unwrap();
        assert!(crate::canon::is_isomorphic(&m6, &octahedron));

        assert!(build_theorem_d_graph(5, 2).is_err());
    }

    #[test]
    fn cocktail_party_pattern() {
        assert!(crate::canon::is_isomorphic(
            pattern_km_minus_pm(4).unwrap().graph(),
            &cycle_graph(4)
        ));
        let p6 = pattern_km_minus_pm(6).unwrap();
        assert_eq!(p6.min_degree(), 4);
        let p8 = pattern_km_minus_pm(8).unwrap();
        assert_eq!(p8.m(), 8);
        assert_eq!(p8.e2(), 24);
        assert_eq!(p8.graph().degree_sequence(), vec![6; 8]);
        assert!(pattern_km_minus_pm(5).is_err());
    }

    #[test]
    fn theorem2_chi_matches_k() {
        for name in ["P3", "K3", "C4"] {
            for k in 1..=3 {
                let p = pat(name);
                let h = build_theorem2(&p, k).unwrap();
                assert_eq!(chi_g(&h, &p).chi, k, "{name} k={k}");
            }
        }
    }
}
