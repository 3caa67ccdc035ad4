//! Canonical labeling, isomorphism testing, and exhaustive enumeration of
//! small graphs up to isomorphism.
//!
//! The canonical form maximizes the upper-triangle bit string (column order,
//! the same layout graph6 uses) over all vertex orderings, found by
//! backtracking with prefix pruning. That is fast enough for the desk-scale
//! orders this crate targets; no external canonicalizer is involved.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subiso::find_raw_embedding;

/// Largest order the u128 canonical code supports: C(16,2) = 120 bits.
pub const MAX_CANON_VERTICES: usize = 16;

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    // segs[d] holds the adjacency bits of the vertex placed at position d+1
    // toward positions 0..=d, most significant bit first.
    segs: Vec<u32>,
    placed: Vec<usize>,
    used: u64,
    best_segs: Option<Vec<u32>>,
    best_perm: Vec<usize>,
}

impl<'a> CanonSearch<'a> {
    fn seg_for(&self, v: usize) -> u32 {
        let mut seg = 0u32;
        for &p in &self.placed {
            seg = seg << 1 | self.g.has_edge(p, v) as u32;
        }
        seg
    }

    fn run(&mut self) {
        debug_assert!(self.placed.is_empty());
        if self.n == 0 {
            self.best_segs = Some(Vec::new());
            return;
        }
        for v in 0..self.n {
            self.placed.push(v);
            self.used = 1 << v;
            self.descend(1);
            self.placed.pop();
        }
    }

    fn descend(&mut self, depth: usize) {
        if depth == self.n {
            if self.best_segs.as_ref().is_none_or(|b| self.segs > *b) {
                self.best_segs = Some(self.segs.clone());
                self.best_perm = self.placed.clone();
            }
            return;
        }
        let mut candidates: Vec<(u32, usize)> = (0..self.n)
            .filter(|&v| self.used >> v & 1 == 0)
            .map(|v| (self.seg_for(v), v))
            .collect();
        candidates.sort_unstable_by(|a, b| b.cmp(a));
        for (seg, v) in candidates {
            self.segs.push(seg);
            // prune branches whose prefix already falls below the best
            let keep = match &self.best_segs {
                Some(best) => self.segs.as_slice() >= &best[..self.segs.len()],
                None => true,
            };
            if keep {
                self.placed.push(v);
                self.used |= 1 << v;
                self.descend(depth + 1);
                self.used &= !(1 << v);
                self.placed.pop();
            }
            self.segs.pop();
        }
    }
}

fn canon_search(g: &Graph) -> Result<(Vec<u32>, Vec<usize>)> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(Error::BadParams(format!(
            "canonical form supports orders up to {MAX_CANON_VERTICES}, got {n}"
        )));
    }
    let mut search = CanonSearch {
        g,
        n,
        segs: Vec::with_capacity(n),
        placed: Vec::with_capacity(n),
        used: 0,
        best_segs: None,
        best_perm: (0..n).collect(),
    };
    search.run();
    Ok((search.best_segs.unwrap_or_default(), search.best_perm))
}

/// Order-dependent canonical code: the vertex count in the top bits, then
/// the maximized upper-triangle bit string. Equal codes iff isomorphic.
pub fn canonical_code(g: &Graph) -> Result<u128> {
    let (segs, _) = canon_search(g)?;
    let mut code = g.vertex_count() as u128;
    for (d, seg) in segs.iter().enumerate() {
        code = code << (d + 1) | *seg as u128;
    }
    Ok(code)
}

/// A labeling realizing the canonical code: `perm[position] = original id`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    Ok(canon_search(g)?.1)
}

/// The graph relabeled into canonical position order.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let perm = canonical_labeling(g)?;
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (p, &orig) in perm.iter().enumerate() {
        pos[orig] = p;
    }
    let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (pos[u], pos[v])).collect();
    Ok(Graph::from_edges(n, &edges))
}

/// Isomorphism test. Small orders compare canonical codes; larger ones fall
/// back to an embedding search (an injective edge-preserving map between
/// graphs of equal order and size is an isomorphism).
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return false;
    }
    if a.vertex_count() <= MAX_CANON_VERTICES {
        return canonical_code(a).unwrap() == canonical_code(b).unwrap();
    }
    find_raw_embedding(b, a, b.vertex_set(), None).is_some()
}

/// All graphs on `n` vertices up to isomorphism, as canonical representatives
/// sorted by code. Built by extending each smaller representative with one
/// new vertex in every possible way and deduplicating.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    const MAX_ENUM: usize = 10;
    if n > MAX_ENUM {
        return Err(Error::BadParams(format!(
            "exhaustive enumeration supports orders up to {MAX_ENUM}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut level = vec![Graph::empty(1)];
    for i in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u64..1 << i {
                let mut edges = g.edges();
                for v in 0..i {
                    if mask >> v & 1 == 1 {
                        edges.push((v, i));
                    }
                }
                let h = canonical_graph(&Graph::from_edges(i + 1, &edges))?;
                let code = canonical_code(&h)?;
                if seen.insert(code) {
                    next.push((code, h));
                }
            }
        }
        next.sort_unstable_by_key(|(code, _)| *code);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}
