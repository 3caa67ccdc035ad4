//! Subgraph containment: decide whether a host graph (restricted to a vertex
//! class) contains a copy of the forbidden pattern, with an explicit
//! embedding when it does.
//!
//! "Copy" means non-induced subgraph containment throughout: an injective
//! map sending pattern edges to host edges, host-only edges permitted. Any
//! class with fewer vertices than the pattern is therefore free of it
//! regardless of structure.

use crate::error::{Error, Result};
use crate::graph::{complete_graph, complete_minus_matching, cycle_graph, path_graph, Graph, VertexSet};

/// The forbidden graph G with its cached basic invariants.
#[derive(Debug, Clone)]
pub struct Pattern {
    graph: Graph,
    m: usize,
    e2: usize,
    min_degree: usize,
    connected: bool,
    descriptor: String,
}

impl Pattern {
    /// Wraps a graph of order at least 2 as a pattern. The descriptor is the
    /// replayable source string (a builtin name or the graph6 encoding).
    pub fn new(graph: Graph, descriptor: impl Into<String>) -> Result<Pattern> {
        if graph.vertex_count() < 2 {
            return Err(Error::InvalidPattern(format!(
                "patterns need at least 2 vertices, got {}",
                graph.vertex_count()
            )));
        }
        Ok(Pattern {
            m: graph.vertex_count(),
            e2: graph.edge_count(),
            min_degree: graph.min_degree(),
            connected: graph.is_connected(),
            descriptor: descriptor.into(),
            graph,
        })
    }

    pub fn from_graph(graph: Graph) -> Result<Pattern> {
        let descriptor = crate::g6::write_graph6(&graph);
        Pattern::new(graph, descriptor)
    }

    /// Builtin names: K2, P3, K3, P4, C4, K4, and KmMinusPM:m.
    pub fn from_name(name: &str) -> Option<Pattern> {
        let graph = match name {
            "K2" => complete_graph(2),
            "P3" => path_graph(3),
            "K3" => complete_graph(3),
            "P4" => path_graph(4),
            "C4" => cycle_graph(4),
            "K4" => complete_graph(4),
            _ => {
                let m: usize = name.strip_prefix("KmMinusPM:")?.parse().ok()?;
                if m < 4 || !m.is_multiple_of(2) || m > crate::graph::MAX_VERTICES {
                    return None;
                }
                complete_minus_matching(m, m / 2).ok()?.0
            }
        };
        Some(Pattern::new(graph, name).expect("builtin patterns have at least 2 vertices"))
    }

    /// Parses a pattern source: a builtin name, else a graph6 string.
    pub fn from_source(source: &str) -> Result<Pattern> {
        if let Some(p) = Pattern::from_name(source) {
            return Ok(p);
        }
        let graph = crate::g6::parse_graph6(source)
            .map_err(|e| Error::InvalidPattern(format!("{source:?} is neither a builtin name nor graph6 ({e})")))?;
        Pattern::new(graph, source)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// |V(G)|
    pub fn m(&self) -> usize {
        self.m
    }

    /// |E(G)|
    pub fn e2(&self) -> usize {
        self.e2
    }

    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn is_complete(&self) -> bool {
        self.e2 == self.m * (self.m - 1) / 2
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }
}

/// An injective map from pattern vertices to host vertices sending every
/// pattern edge to a host edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    /// `map[p]` is the host vertex that pattern vertex `p` lands on.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    /// Replays the embedding against a host: injectivity plus
    /// edge-preservation.
    pub fn verify(&self, host: &Graph, pat: &Pattern) -> bool {
        if self.map.len() != pat.m() {
            return false;
        }
        if self.image().len() != self.map.len() {
            return false;
        }
        pat.graph()
            .edges()
            .iter()
            .all(|&(a, b)| host.has_edge(self.map[a], self.map[b]))
    }
}

/// Pattern vertices in search order: descending degree, ties by id.
fn pattern_order(pattern: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pattern.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    host: &Graph,
    pattern: &Graph,
    restrict: VertexSet,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
    host_deg_ok: &[VertexSet],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    if map[p] != usize::MAX {
        // pinned by an anchored search; just validate and move on
        let h = map[p];
        let ok = restrict.contains(h)
            && !used.contains(h)
            && host_deg_ok[pattern.degree(p)].contains(h)
            && order[..depth]
                .iter()
                .filter(|&&q| pattern.has_edge(p, q))
                .all(|&q| host.has_edge(map[q], h));
        if !ok {
            return false;
        }
        used.insert(h);
        let found = extend(host, pattern, restrict, order, depth + 1, map, used, host_deg_ok);
        used.remove(h);
        return found;
    }
    // candidates: inside the restriction, unused, rich enough in degree,
    // and adjacent to the images of all already-placed pattern neighbors
    let mut candidates = restrict.minus(*used).intersect(host_deg_ok[pattern.degree(p)]);
    for &q in order[..depth].iter().filter(|&&q| pattern.has_edge(p, q)) {
        candidates = candidates.intersect(host.neighbors(map[q]));
    }
    for h in candidates.iter() {
        map[p] = h;
        used.insert(h);
        if extend(host, pattern, restrict, order, depth + 1, map, used, host_deg_ok) {
            used.remove(h);
            return true;
        }
        used.remove(h);
        map[p] = usize::MAX;
    }
    false
}

/// Backtracking embedding search over raw graphs. When `anchor` is given,
/// the embedding must cover that host vertex. Returns the first embedding in
/// the deterministic search order (pattern vertices by descending degree,
/// host candidates by ascending id), or `None`.
pub fn find_raw_embedding(
    host: &Graph,
    pattern: &Graph,
    restrict: VertexSet,
    anchor: Option<usize>,
) -> Option<Vec<usize>> {
    let m = pattern.vertex_count();
    if restrict.len() < m {
        return None;
    }
    let order = pattern_order(pattern);
    // host_deg_ok[d] = host vertices with at least d neighbors inside the restriction
    let max_pat_deg = pattern.max_degree();
    let mut host_deg_ok = vec![VertexSet::EMPTY; max_pat_deg + 1];
    for v in restrict.iter() {
        let d = host.neighbors(v).intersect(restrict).len().min(max_pat_deg);
        for row in host_deg_ok.iter_mut().take(d + 1) {
            row.insert(v);
        }
    }
    let mut map = vec![usize::MAX; m];
    let mut used = VertexSet::EMPTY;
    match anchor {
        None => extend(host, pattern, restrict, &order, 0, &mut map, &mut used, &host_deg_ok)
            .then_some(map),
        Some(a) => {
            if !restrict.contains(a) {
                return None;
            }
            for &p in &order {
                map.fill(usize::MAX);
                map[p] = a;
                if extend(host, pattern, restrict, &order, 0, &mut map, &mut used, &host_deg_ok) {
                    return Some(map);
                }
            }
            None
        }
    }
}

/// First embedding of the pattern into `host[restrict]`, if any.
pub fn find_embedding(host: &Graph, pat: &Pattern, restrict: VertexSet) -> Option<Embedding> {
    find_raw_embedding(host, pat.graph(), restrict, None).map(|map| Embedding { map })
}

/// First embedding whose image contains `anchor`, if any.
pub fn find_embedding_containing(
    host: &Graph,
    pat: &Pattern,
    restrict: VertexSet,
    anchor: usize,
) -> Option<Embedding> {
    find_raw_embedding(host, pat.graph(), restrict, Some(anchor)).map(|map| Embedding { map })
}

/// True iff `host[class]` contains no copy of the pattern. Classes smaller
/// than the pattern are free by counting alone.
pub fn is_g_free(host: &Graph, pat: &Pattern, class: VertexSet) -> bool {
    find_embedding(host, pat, class).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    fn pat(name: &str) -> Pattern {
        Pattern::from_name(name).unwrap()
    }

    #[test]
    fn cliques_contain_cliques() {
        let k5 = complete_graph(5);
        let emb = find_embedding(&k5, &pat("K3"), k5.vertex_set()).unwrap();
        assert!(emb.verify(&k5, &pat("K3")));
    }

    #[test]
    fn c5_is_triangle_free() {
        let c5 = cycle_graph(5);
        assert!(find_embedding(&c5, &pat("K3"), c5.vertex_set()).is_none());
        assert!(is_g_free(&c5, &pat("K3"), c5.vertex_set()));
    }

    #[test]
    fn c4_in_c4_but_not_in_p4() {
        let c4 = cycle_graph(4);
        assert!(find_embedding(&c4, &pat("C4"), c4.vertex_set()).is_some());
        let p4 = path_graph(4);
        assert!(find_embedding(&p4, &pat("C4"), p4.vertex_set()).is_none());
    }

    #[test]
    fn small_classes_are_always_free() {
        let k5 = complete_graph(5);
        let two: VertexSet = [1, 3].into_iter().collect();
        assert!(is_g_free(&k5, &pat("K3"), two));
        let three: VertexSet = [0, 2, 4].into_iter().collect();
        assert!(!is_g_free(&k5, &pat("K3"), three));
    }

    #[test]
    fn k2_pattern_means_independent_set() {
        let p4 = path_graph(4);
        let independent: VertexSet = [0, 2].into_iter().collect();
        let not_independent: VertexSet = [0, 1].into_iter().collect();
        assert!(is_g_free(&p4, &pat("K2"), independent));
        assert!(!is_g_free(&p4, &pat("K2"), not_independent));
    }

    #[test]
    fn anchored_search_respects_anchor() {
        let k5 = complete_graph(5);
        let emb = find_embedding_containing(&k5, &pat("K3"), k5.vertex_set(), 4).unwrap();
        assert!(emb.image().contains(4));
        assert!(emb.verify(&k5, &pat("K3")));

        // vertex 3 of P4 lies on no triangle-with-anchor in the paw graph
        let paw = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert!(find_embedding_containing(&paw, &pat("K3"), paw.vertex_set(), 3).is_none());
        assert!(find_embedding_containing(&paw, &pat("K3"), paw.vertex_set(), 0).is_some());
    }

    #[test]
    fn restriction_is_honored() {
        let k5 = complete_graph(5);
        let restrict: VertexSet = [0, 1].into_iter().collect();
        assert!(find_embedding(&k5, &pat("K3"), restrict).is_none());
    }

    #[test]
    fn disconnected_patterns_work() {
        // 2K2 as a pattern, supplied as graph6
        let two_k2 = Pattern::from_source("C`").unwrap();
        assert!(!two_k2.is_connected());
        assert_eq!(two_k2.min_degree(), 1);
        let p4 = path_graph(4);
        assert!(!is_g_free(&p4, &two_k2, p4.vertex_set()));
        let no_matching: VertexSet = [0, 1, 2].into_iter().collect();
        assert!(is_g_free(&p4, &two_k2, no_matching));
    }

    #[test]
    fn named_patterns() {
        assert_eq!(pat("K2").m(), 2);
        assert_eq!(pat("P3").min_degree(), 1);
        assert_eq!(pat("K3").min_degree(), 2);
        let cocktail = pat("KmMinusPM:6");
        assert_eq!(cocktail.m(), 6);
        assert_eq!(cocktail.e2(), 12);
        assert!(Pattern::from_name("KmMinusPM:5").is_none());
        assert!(Pattern::from_name("Q7").is_none());
        // graph6 fallback
        let p = Pattern::from_source("Bw").unwrap();
        assert!(p.is_complete());
        assert!(Pattern::from_source("@").is_err()); // single vertex
    }
}
