//! Vertex- and edge-minimality of a host with respect to pattern-free
//! coloring, with a per-element certificate: the exact chi after every
//! single deletion.
//!
//! Two notions are reported side by side: `minimal` asks that every deletion
//! drop chi by at least one, `strict_equality` that it drop by exactly one.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::chi_g;
use crate::subiso::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MinimalityKind {
    Vertex,
    Edge,
}

/// The deleted element, named in the host's original labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Element {
    Vertex(usize),
    Edge(usize, usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct MinimalityEntry {
    pub element: Element,
    pub chi_after: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct MinimalityReport {
    pub kind: MinimalityKind,
    pub base_chi: usize,
    pub entries: Vec<MinimalityEntry>,
    /// Every deletion satisfies `chi_after <= base_chi - 1`.
    pub minimal: bool,
    /// Every deletion satisfies `chi_after == base_chi - 1`.
    pub strict_equality: bool,
}

fn assemble(kind: MinimalityKind, base_chi: usize, entries: Vec<MinimalityEntry>) -> MinimalityReport {
    let minimal = !entries.is_empty() && entries.iter().all(|e| e.chi_after < base_chi);
    let strict_equality = !entries.is_empty() && entries.iter().all(|e| e.chi_after + 1 == base_chi);
    MinimalityReport { kind, base_chi, entries, minimal, strict_equality }
}

fn run_deletions<T: Sync>(
    items: Vec<T>,
    jobs: usize,
    f: impl Fn(&T) -> MinimalityEntry + Sync,
) -> Vec<MinimalityEntry> {
    if jobs > 1 {
        items.par_iter().map(&f).collect()
    } else {
        items.iter().map(&f).collect()
    }
}

/// Computes base chi and the chi of `host - v` for every vertex, in
/// ascending vertex order regardless of worker scheduling.
pub fn is_vertex_minimal(host: &Graph, pat: &Pattern, jobs: usize) -> MinimalityReport {
    let base = chi_g(host, pat).chi;
    let entries = run_deletions(host.vertices().collect(), jobs, |&v| {
        let (deleted, _) = host.remove_vertex(v).expect("vertex ids are in range");
        MinimalityEntry { element: Element::Vertex(v), chi_after: chi_g(&deleted, pat).chi }
    });
    assemble(MinimalityKind::Vertex, base, entries)
}

/// Computes base chi and the chi of `host - e` for every edge, in
/// lexicographic edge order regardless of worker scheduling.
pub fn is_edge_minimal(host: &Graph, pat: &Pattern, jobs: usize) -> Result<MinimalityReport> {
    let edges = host.edges();
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let base = chi_g(host, pat).chi;
    let entries = run_deletions(edges, jobs, |&(u, v)| {
        let deleted = host.remove_edge((u, v)).expect("edge list is accurate");
        MinimalityEntry { element: Element::Edge(u, v), chi_after: chi_g(&deleted, pat).chi }
    });
    Ok(assemble(MinimalityKind::Edge, base, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, Graph};

    fn pat(name: &str) -> Pattern {
        Pattern::from_name(name).unwrap()
    }

    #[test]
    fn k5_is_vertex_minimal_for_k3() {
        let r = is_vertex_minimal(&complete_graph(5), &pat("K3"), 1);
        assert_eq!(r.base_chi, 3);
        assert!(r.minimal);
        assert!(r.strict_equality);
        assert!(r.entries.iter().all(|e| e.chi_after == 2));
    }

    #[test]
    fn isolated_vertex_blocks_minimality() {
        // K2 plus an isolated vertex, pattern K3: chi = 1 and stays 1
        let g = Graph::from_edges(3, &[(0, 1)]);
        let r = is_vertex_minimal(&g, &pat("K3"), 1);
        assert_eq!(r.base_chi, 1);
        assert!(!r.minimal);
    }

    #[test]
    fn c4_is_edge_minimal_for_c4() {
        let r = is_edge_minimal(&cycle_graph(4), &pat("C4"), 1).unwrap();
        assert_eq!(r.base_chi, 2);
        assert!(r.minimal);
        assert!(r.strict_equality);
        assert_eq!(r.entries.len(), 4);
    }

    #[test]
    fn k5_edge_deletions_under_k3() {
        // removing any edge of K5 lets its endpoints share a class with one
        // more vertex: chi drops from 3 to 2 on all ten edges
        let r = is_edge_minimal(&complete_graph(5), &pat("K3"), 1).unwrap();
        assert_eq!(r.base_chi, 3);
        assert!(r.entries.iter().all(|e| e.chi_after == 2));
        assert!(r.minimal && r.strict_equality);
    }

    #[test]
    fn p3_is_not_edge_minimal_for_k2() {
        let r = is_edge_minimal(&path_graph(3), &pat("K2"), 1).unwrap();
        assert_eq!(r.base_chi, 2);
        assert!(!r.minimal);
        assert!(r.entries.iter().all(|e| e.chi_after == 2));
    }

    #[test]
    fn edgeless_host_is_an_error() {
        assert!(matches!(
            is_edge_minimal(&Graph::empty(3), &pat("K2"), 1),
            Err(Error::NoEdges)
        ));
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let g = complete_graph(6);
        let a = is_vertex_minimal(&g, &pat("K3"), 1);
        let b = is_vertex_minimal(&g, &pat("K3"), 4);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
