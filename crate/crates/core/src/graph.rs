//! Bit-adjacency representation of finite simple undirected graphs, the
//! elementary operations on them, and a handful of standard generators.
//!
//! Vertices are dense integers `0..n-1`. Operations that drop vertices
//! return a relabeling map (`map[new_id] = old_id`) so results can be traced
//! back to the original labels. Graphs are immutable once built; every
//! operation returns a fresh graph.

use crate::error::{Error, Result};

/// Hard upper bound on the vertex count, so neighborhoods fit in one word.
pub const MAX_VERTICES: usize = 64;

/// An unordered edge, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// A list of unordered vertex pairs (matchings, deleted 1-factors, ...).
pub type EdgeList = Vec<Edge>;

/// A subset of the vertices `0..n-1` of some graph, bit-encoded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0..n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1u64 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Iterates members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            debug_assert!(v < MAX_VERTICES);
            s.insert(v);
        }
        s
    }
}

/// A finite simple undirected graph on vertices `0..n-1`.
///
/// The adjacency relation is symmetric with an empty diagonal; both are
/// enforced by construction (edges are always inserted in both directions,
/// self-loops are rejected by `debug_assert`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds {MAX_VERTICES}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> EdgeList {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u << u).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Connectivity via bit-parallel reachability. Graphs on 0 or 1 vertices
    /// count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let all = VertexSet::full(self.n).0;
        let mut reached = 1u64;
        loop {
            let mut next = reached;
            let mut frontier = reached;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= self.adj[v];
            }
            if next == reached {
                return reached == all;
            }
            reached = next;
        }
    }

    /// Adjacency inverted off-diagonal.
    pub fn complement(&self) -> Graph {
        let mask = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & mask & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Same vertices, edge set minus `{e}`.
    pub fn remove_edge(&self, e: Edge) -> Result<Graph> {
        let (u, v) = e;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        Ok(g)
    }

    /// Same vertices, edge set plus `{e}` (inverse of `remove_edge`).
    pub fn with_edge(&self, e: Edge) -> Graph {
        let mut g = self.clone();
        g.add_edge(e.0, e.1);
        g
    }

    /// Induced subgraph on `V - {v}`, relabeled contiguously. The returned
    /// map sends new ids to original ids.
    pub fn remove_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        if v >= self.n {
            return Err(Error::MissingVertex(v));
        }
        self.induced_subgraph(self.vertex_set().without(v))
    }

    /// Induced subgraph on `s`, relabeled contiguously in ascending original
    /// order. The returned map sends new ids to original ids.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !s.is_subset_of(self.vertex_set()) {
            return Err(Error::BadSubset);
        }
        let map = s.to_vec();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok((g, map))
    }

    /// Disjoint copies of `self` and `other` plus all cross edges.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = self.union_shifted(other, self.n);
        for u in 0..self.n {
            for v in self.n..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Vertex set is the union, edge set is the union. The caller supplies
    /// relabelings when disjoint copies are intended; identical labels
    /// overlap.
    pub fn union(&self, other: &Graph) -> Graph {
        let n = self.n.max(other.n);
        let mut adj = vec![0u64; n];
        for (row, &bits) in adj.iter_mut().zip(&self.adj) {
            *row |= bits;
        }
        for (row, &bits) in adj.iter_mut().zip(&other.adj) {
            *row |= bits;
        }
        Graph { n, adj }
    }

    /// `other` relabeled upward by `offset`, then unioned with `self`.
    pub fn union_shifted(&self, other: &Graph, offset: usize) -> Graph {
        let n = self.n.max(offset + other.n);
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds {MAX_VERTICES}");
        let mut g = Graph::empty(n);
        for v in 0..self.n {
            g.adj[v] = self.adj[v];
        }
        for (u, v) in other.edges() {
            g.add_edge(u + offset, v + offset);
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// `K_n`: every distinct pair adjacent.
pub fn complete_graph(n: usize) -> Graph {
    Graph::empty(n).complement()
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

/// `K_n` with `t` pairwise-disjoint edges removed, lowest-index pairs first:
/// `(0,1), (2,3), ...`. Returns the graph and the removed matching.
pub fn complete_minus_matching(n: usize, t: usize) -> Result<(Graph, EdgeList)> {
    if 2 * t > n {
        return Err(Error::MatchingTooLarge { n, t });
    }
    let mut g = complete_graph(n);
    let mut matching = Vec::with_capacity(t);
    for i in 0..t {
        let e = (2 * i, 2 * i + 1);
        g = g.remove_edge(e)?;
        matching.push(e);
    }
    Ok((g, matching))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(complete_graph(0).edge_count(), 0);
        let k4 = complete_graph(4);
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.vertices().all(|v| k4.degree(v) == 3));
        assert_eq!(complete_graph(7).edge_count(), 21);
    }

    #[test]
    fn join_cliques_and_empties() {
        let k2 = complete_graph(2);
        assert_eq!(k2.join(&k2), complete_graph(4));

        // join of two edgeless pairs is C4 (as K_{2,2})
        let e2 = Graph::empty(2);
        let j = e2.join(&e2);
        assert_eq!(j.vertex_count(), 4);
        assert_eq!(j.edge_count(), 4);
        assert_eq!(j.degree_sequence(), vec![2, 2, 2, 2]);
        assert!(j.is_connected());

        // wheel-like: K1 + C4 = 4 cycle edges + 4 cross edges
        let w = complete_graph(1).join(&cycle_graph(4));
        assert_eq!(w.vertex_count(), 5);
        assert_eq!(w.edge_count(), 8);
    }

    #[test]
    fn union_behaviour() {
        let k2 = complete_graph(2);
        let two_k2 = k2.union_shifted(&k2, 2);
        assert_eq!(two_k2.vertex_count(), 4);
        assert_eq!(two_k2.edge_count(), 2);

        let g = path_graph(4);
        assert_eq!(g.union(&g), g);

        // K3 on {0,1,2} union K3 on {2,3,4}: 5 vertices, 6 edges
        let a = complete_graph(3);
        let b = Graph::from_edges(5, &[(2, 3), (2, 4), (3, 4)]);
        let u = a.union(&b);
        assert_eq!(u.vertex_count(), 5);
        assert_eq!(u.edge_count(), 6);
    }

    #[test]
    fn complement_basics() {
        assert_eq!(complete_graph(5).complement(), Graph::empty(5));
        // complement of C4 is 2K2
        let c = cycle_graph(4).complement();
        assert_eq!(c.edge_count(), 2);
        assert_eq!(c.degree_sequence(), vec![1, 1, 1, 1]);
        // C5 is self-complementary
        let c5 = cycle_graph(5);
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert_eq!(cc.degree_sequence(), vec![2, 2, 2, 2, 2]);
        assert!(cc.is_connected());
    }

    #[test]
    fn removals() {
        let p3 = complete_graph(3).remove_edge((0, 1)).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.degree_sequence(), vec![1, 1, 2]);

        let p4 = cycle_graph(4).remove_edge((0, 3)).unwrap();
        assert_eq!(p4, path_graph(4));

        let g = complete_graph(4).remove_edge((1, 2)).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.degree_sequence(), vec![2, 2, 3, 3]);

        assert!(matches!(
            path_graph(3).remove_edge((0, 2)),
            Err(Error::MissingEdge(0, 2))
        ));

        let (k3, map) = complete_graph(4).remove_vertex(1).unwrap();
        assert_eq!(k3, complete_graph(3));
        assert_eq!(map, vec![0, 2, 3]);

        // star center removal leaves the graph edgeless
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let (rest, _) = star.remove_vertex(0).unwrap();
        assert_eq!(rest, Graph::empty(3));

        let (p4b, _) = cycle_graph(5).remove_vertex(4).unwrap();
        assert_eq!(p4b, path_graph(4));

        assert!(matches!(path_graph(2).remove_vertex(5), Err(Error::MissingVertex(5))));
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = complete_graph(5);
        let (g, _) = k5.induced_subgraph([0, 2, 4].into_iter().collect()).unwrap();
        assert_eq!(g, complete_graph(3));

        let (g, map) = cycle_graph(5).induced_subgraph([1, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(g, path_graph(3));
        assert_eq!(map, vec![1, 2, 3]);

        let c5 = cycle_graph(5);
        let (whole, _) = c5.induced_subgraph(c5.vertex_set()).unwrap();
        assert_eq!(whole, c5);

        assert!(matches!(
            path_graph(2).induced_subgraph([0, 5].into_iter().collect()),
            Err(Error::BadSubset)
        ));
    }

    #[test]
    fn matching_removal() {
        let (g, m) = complete_minus_matching(4, 2).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree_sequence(), vec![2, 2, 2, 2]);
        assert_eq!(m, vec![(0, 1), (2, 3)]);

        // octahedron: 15 - 3 edges, 4-regular
        let (oct, _) = complete_minus_matching(6, 3).unwrap();
        assert_eq!(oct.edge_count(), 12);
        assert_eq!(oct.degree_sequence(), vec![4; 6]);

        let (g, _) = complete_minus_matching(5, 2).unwrap();
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.degree_sequence(), vec![3, 3, 3, 3, 4]);

        assert!(matches!(
            complete_minus_matching(5, 3),
            Err(Error::MatchingTooLarge { n: 5, t: 3 })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(complete_graph(1).is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(cycle_graph(6).is_connected());
        let k2 = complete_graph(2);
        assert!(!k2.union_shifted(&k2, 2).is_connected());
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [0, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert!(s.is_subset_of(VertexSet::full(6)));
        assert!(!VertexSet::full(6).is_subset_of(s));
        assert_eq!(s.without(3).to_vec(), vec![0, 5]);
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
