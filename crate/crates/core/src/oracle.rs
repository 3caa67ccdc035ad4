//! Brute-force reference implementations used to cross-check the solver and
//! the containment search in tests. Everything here is deliberately naive
//! and shares no code with the search paths it validates: containment is
//! checked by trying all injective maps, partitions are enumerated as
//! restricted growth strings, and the ordinary chromatic number is a plain
//! color-by-color backtracking.
//!
//! Intended for desk-scale inputs only (hosts of about 8 vertices).

use crate::graph::{Graph, VertexSet};

/// Containment by exhaustive search over injective maps of the pattern's
/// vertices into the class members.
pub fn contains_copy_bruteforce(host: &Graph, pattern: &Graph, class: VertexSet) -> bool {
    let members = class.to_vec();
    let m = pattern.vertex_count();
    if members.len() < m {
        return false;
    }
    let pat_edges = pattern.edges();
    let mut assignment = vec![usize::MAX; m];
    let mut used = vec![false; members.len()];

    fn rec(
        pos: usize,
        m: usize,
        members: &[usize],
        used: &mut [bool],
        assignment: &mut [usize],
        pat_edges: &[(usize, usize)],
        host: &Graph,
    ) -> bool {
        if pos == m {
            return pat_edges
                .iter()
                .all(|&(a, b)| host.has_edge(assignment[a], assignment[b]));
        }
        for i in 0..members.len() {
            if !used[i] {
                used[i] = true;
                assignment[pos] = members[i];
                if rec(pos + 1, m, members, used, assignment, pat_edges, host) {
                    used[i] = false;
                    return true;
                }
                used[i] = false;
            }
        }
        false
    }

    rec(0, m, &members, &mut used, &mut assignment, &pat_edges, host)
}

/// Lookup table over all `2^n` vertex subsets: `table[mask]` is true iff the
/// subset is free of the pattern.
pub fn free_subset_table(host: &Graph, pattern: &Graph) -> Vec<bool> {
    let n = host.vertex_count();
    assert!(n <= 20, "subset table limited to small hosts");
    (0u64..1 << n)
        .map(|mask| !contains_copy_bruteforce(host, pattern, VertexSet(mask)))
        .collect()
}

/// Visits every set partition of `{0..n-1}` as a restricted growth string
/// (`rgs[v]` = class of vertex `v`). Returns early if the visitor says stop.
pub fn for_each_set_partition(n: usize, mut visit: impl FnMut(&[usize], usize) -> bool) {
    if n == 0 {
        visit(&[], 0);
        return;
    }
    let mut rgs = vec![0usize; n];
    loop {
        let classes = rgs.iter().copied().max().unwrap() + 1;
        if !visit(&rgs, classes) {
            return;
        }
        // next restricted growth string: increment the rightmost position
        // that may still grow (bounded by 1 + max of the prefix)
        let mut i = n;
        loop {
            if i == 1 {
                return; // rgs[0] is pinned to 0: enumeration finished
            }
            i -= 1;
            let prefix_max = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                rgs[i + 1..].fill(0);
                break;
            }
        }
    }
}

fn class_masks(rgs: &[usize], classes: usize) -> Vec<u64> {
    let mut masks = vec![0u64; classes];
    for (v, &c) in rgs.iter().enumerate() {
        masks[c] |= 1 << v;
    }
    masks
}

/// Minimum class count over all set partitions whose classes are all
/// pattern-free. This is the Bell-number sweep the solver is checked
/// against.
pub fn chi_bruteforce(host: &Graph, pattern: &Graph) -> usize {
    let n = host.vertex_count();
    if n == 0 {
        return 0;
    }
    let table = free_subset_table(host, pattern);
    let mut best = n.min(u32::MAX as usize);
    for_each_set_partition(n, |rgs, classes| {
        if classes < best && class_masks(rgs, classes).iter().all(|&m| table[m as usize]) {
            best = classes;
        }
        best > 1
    });
    best
}

/// All partitions into exactly `k` pattern-free classes, each canonicalized
/// as sorted member lists ordered by (size, members), and the whole list
/// sorted. Distinct entries iff genuinely distinct unordered partitions.
pub fn optimal_partitions_bruteforce(host: &Graph, pattern: &Graph, k: usize) -> Vec<Vec<Vec<usize>>> {
    let n = host.vertex_count();
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let table = free_subset_table(host, pattern);
    let mut found = Vec::new();
    for_each_set_partition(n, |rgs, classes| {
        if classes == k && class_masks(rgs, classes).iter().all(|&m| table[m as usize]) {
            let mut part: Vec<Vec<usize>> = class_masks(rgs, classes)
                .iter()
                .map(|&m| VertexSet(m).to_vec())
                .collect();
            part.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            found.push(part);
        }
        true
    });
    found.sort();
    found.dedup();
    found
}

/// Ordinary chromatic number by direct backtracking: assign colors vertex by
/// vertex, never exceeding `k`, growing `k` from 1. Independent of both the
/// partition sweep above and the solver.
pub fn chromatic_number_bruteforce(host: &Graph) -> usize {
    let n = host.vertex_count();
    if n == 0 {
        return 0;
    }

    fn colorable(host: &Graph, colors: &mut [usize], v: usize, k: usize) -> bool {
        if v == host.vertex_count() {
            return true;
        }
        let used_by_neighbors: Vec<usize> = host
            .neighbors(v)
            .iter()
            .filter(|&u| u < v)
            .map(|u| colors[u])
            .collect();
        let cap = colors[..v].iter().copied().max().map_or(0, |m| m + 1).min(k - 1);
        for c in 0..=cap {
            if !used_by_neighbors.contains(&c) {
                colors[v] = c;
                if colorable(host, colors, v + 1, k) {
                    return true;
                }
            }
        }
        false
    }

    for k in 1..=n {
        let mut colors = vec![0usize; n];
        if colorable(host, &mut colors, 0, k) {
            return k;
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    #[test]
    fn partition_count_matches_bell_numbers() {
        // Bell numbers B(1)..B(7)
        for (n, bell) in [(1usize, 1usize), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203), (7, 877)] {
            let mut count = 0;
            for_each_set_partition(n, |_, _| {
                count += 1;
                true
            });
            assert_eq!(count, bell, "n={n}");
        }
    }

    #[test]
    fn bruteforce_containment() {
        let k5 = complete_graph(5);
        let k3 = complete_graph(3);
        assert!(contains_copy_bruteforce(&k5, &k3, k5.vertex_set()));
        let c5 = cycle_graph(5);
        assert!(!contains_copy_bruteforce(&c5, &k3, c5.vertex_set()));
    }

    #[test]
    fn bruteforce_chi_samples() {
        // chi_{K3}(K5) = 3: classes of size at most 2
        assert_eq!(chi_bruteforce(&complete_graph(5), &complete_graph(3)), 3);
        // chi_{K2} is the ordinary chromatic number
        assert_eq!(chi_bruteforce(&cycle_graph(5), &complete_graph(2)), 3);
        assert_eq!(chromatic_number_bruteforce(&cycle_graph(5)), 3);
        assert_eq!(chromatic_number_bruteforce(&complete_graph(6)), 6);
        assert_eq!(chromatic_number_bruteforce(&path_graph(4)), 2);
    }

    #[test]
    fn k4_under_k3_has_three_optimal_bipartitions() {
        let parts = optimal_partitions_bruteforce(&complete_graph(4), &complete_graph(3), 2);
        assert_eq!(parts.len(), 3);
        for p in &parts {
            assert!(p.iter().all(|class| class.len() <= 2));
        }
    }

    #[test]
    fn c4_is_uniquely_bipartite() {
        let parts = optimal_partitions_bruteforce(&cycle_graph(4), &complete_graph(2), 2);
        assert_eq!(parts, vec![vec![vec![0, 2], vec![1, 3]]]);
    }
}
