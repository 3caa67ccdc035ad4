//! Exact computation of the pattern-free chromatic number, enumeration of
//! optimal colorings as unordered partitions, and the uniqueness decision.
//!
//! The search assigns vertices in descending-degree order to classes,
//! pruning assignments that would close a copy of the pattern inside a class
//! (checked incrementally: any new copy must contain the vertex just added)
//! and breaking class-relabeling symmetry by letting a vertex open class
//! `j+1` only once class `j` is open. With that rule each unordered
//! partition is generated exactly once, so uniqueness falls out of plain
//! enumeration with an early cap.

use std::time::{Duration, Instant};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::subiso::{find_raw_embedding, is_g_free, Pattern};

/// An unordered set of disjoint color classes covering the host's vertices,
/// held in canonical order: by class size, then lexicographic member list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    classes: Vec<VertexSet>,
}

impl Partition {
    pub fn new(mut classes: Vec<VertexSet>) -> Partition {
        classes.sort_by_cached_key(|c| (c.len(), c.to_vec()));
        Partition { classes }
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.to_vec()).collect()
    }

    /// Union of all classes.
    pub fn support(&self) -> VertexSet {
        self.classes
            .iter()
            .fold(VertexSet::EMPTY, |acc, c| acc.union(*c))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.classes.len()))?;
        for class in &self.classes {
            seq.serialize_element(&class.to_vec())?;
        }
        seq.end()
    }
}

/// Result of an exact chi computation.
#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    pub chi: usize,
    pub witness: Partition,
    pub nodes_explored: u64,
    /// Wall-clock time; excluded from serialized reports so identical runs
    /// stay byte-identical.
    #[serde(skip)]
    pub time: Duration,
}

/// Result of the uniqueness decision.
#[derive(Debug, Clone, Serialize)]
pub struct UniquenessResult {
    pub chi: usize,
    pub unique: bool,
    pub partitions_found: Vec<Partition>,
    pub cap_hit: bool,
}

struct Search<'a> {
    host: &'a Graph,
    pat: &'a Pattern,
    order: Vec<usize>,
    k: usize,
    classes: Vec<VertexSet>,
    nodes: u64,
}

enum Walk {
    Continue,
    Stop,
}

impl<'a> Search<'a> {
    fn new(host: &'a Graph, pat: &'a Pattern, k: usize) -> Search<'a> {
        let mut order: Vec<usize> = host.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(host.degree(v)), v));
        Search { host, pat, order, k, classes: vec![VertexSet::EMPTY; k], nodes: 0 }
    }

    /// True iff adding `v` to the class keeps it pattern-free. Only
    /// embeddings through `v` can be new, so the search is anchored there.
    fn stays_free(&self, class: VertexSet, v: usize) -> bool {
        let extended = class.with(v);
        if extended.len() < self.pat.m() {
            return true;
        }
        find_raw_embedding(self.host, self.pat.graph(), extended, Some(v)).is_none()
    }

    fn walk(&mut self, pos: usize, opened: usize, emit: &mut impl FnMut(&[VertexSet]) -> Walk) -> Walk {
        if pos == self.order.len() {
            return emit(&self.classes[..opened]);
        }
        let v = self.order[pos];
        let limit = (opened + 1).min(self.k);
        for c in 0..limit {
            self.nodes += 1;
            if self.stays_free(self.classes[c], v) {
                self.classes[c].insert(v);
                let now_opened = opened.max(c + 1);
                if let Walk::Stop = self.walk(pos + 1, now_opened, emit) {
                    return Walk::Stop;
                }
                self.classes[c].remove(v);
            }
        }
        Walk::Continue
    }
}

fn greedy_clique_size(host: &Graph) -> usize {
    let mut order: Vec<usize> = host.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(host.degree(v)), v));
    let mut clique = VertexSet::EMPTY;
    for v in order {
        if clique.is_subset_of(host.neighbors(v)) {
            clique.insert(v);
        }
    }
    clique.len()
}

/// Exact pattern-free chromatic number with a witness partition.
///
/// Levels `k` are tried in increasing order from a safe lower bound; the
/// first feasible level is chi. Any class with fewer vertices than the
/// pattern is free, so `ceil(n / (m-1))` classes always suffice and the loop
/// terminates. The clique-based start applies only to complete patterns,
/// where a clique of size `c` forces at least `ceil(c / (m-1))` classes.
pub fn chi_g(host: &Graph, pat: &Pattern) -> SolveResult {
    let start = Instant::now();
    let n = host.vertex_count();
    if n == 0 {
        return SolveResult {
            chi: 0,
            witness: Partition::new(vec![]),
            nodes_explored: 0,
            time: start.elapsed(),
        };
    }
    let m = pat.m();
    let lower = if pat.is_complete() {
        greedy_clique_size(host).div_ceil(m - 1).max(1)
    } else {
        1
    };
    let upper = n.div_ceil(m - 1);
    let mut nodes = 0;
    for k in lower..=upper {
        let mut search = Search::new(host, pat, k);
        let mut witness = None;
        search.walk(0, 0, &mut |classes| {
            witness = Some(Partition::new(classes.to_vec()));
            Walk::Stop
        });
        nodes += search.nodes;
        if let Some(witness) = witness {
            debug_assert!(witness.classes().iter().all(|&c| is_g_free(host, pat, c)));
            return SolveResult { chi: k, witness, nodes_explored: nodes, time: start.elapsed() };
        }
    }
    unreachable!("a partition into classes below the pattern order always exists");
}

/// All pattern-free partitions into exactly `k` nonempty classes, up to
/// class reordering, stopping early once `cap` partitions are found.
/// Returns the canonical partitions in deterministic search order and
/// whether the cap cut the enumeration short (complete iff it did not).
pub fn enumerate_optimal_partitions(
    host: &Graph,
    pat: &Pattern,
    k: usize,
    cap: Option<usize>,
) -> Result<(Vec<Partition>, bool)> {
    if host.vertex_count() == 0 {
        return if k == 0 { Ok((vec![Partition::new(vec![])], false)) } else { Err(Error::BadK { k }) };
    }
    if k == 0 || k > host.vertex_count() {
        return Err(Error::BadK { k });
    }
    let mut found: Vec<Partition> = Vec::new();
    let mut cap_hit = false;
    let mut search = Search::new(host, pat, k);
    search.walk(0, 0, &mut |classes| {
        if classes.len() == k {
            found.push(Partition::new(classes.to_vec()));
            if cap.is_some_and(|cap| found.len() >= cap) {
                cap_hit = true;
                return Walk::Stop;
            }
        }
        Walk::Continue
    });
    if found.is_empty() {
        return Err(Error::BadK { k });
    }
    Ok((found, cap_hit))
}

/// Uniqueness with the default cap of 2: the enumeration stops as soon as a
/// second optimal partition shows up.
pub fn is_uniquely_colorable(host: &Graph, pat: &Pattern) -> UniquenessResult {
    is_uniquely_colorable_capped(host, pat, Some(2))
}

/// Uniqueness with a configurable cap (`None` enumerates everything). A cap
/// below 2 cannot certify uniqueness and always reports `unique = false`
/// with `cap_hit` set.
pub fn is_uniquely_colorable_capped(host: &Graph, pat: &Pattern, cap: Option<usize>) -> UniquenessResult {
    let solve = chi_g(host, pat);
    let (partitions_found, cap_hit) = enumerate_optimal_partitions(host, pat, solve.chi, cap)
        .expect("a partition at the optimum always exists");
    UniquenessResult {
        chi: solve.chi,
        unique: partitions_found.len() == 1 && !cap_hit,
        partitions_found,
        cap_hit,
    }
}
