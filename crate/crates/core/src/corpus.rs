//! Exhaustive small-graph corpora: every graph on up to 7 vertices, either
//! labeled (edge-mask enumeration) or up to isomorphism (minimum adjacency
//! mask over all vertex permutations — fine at this scale, not a general
//! canonical-labeling facility).

use crate::graph::Graph;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut ps = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            ps.push((u, v));
        }
    }
    ps
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let ps = pairs(n);
    let mut g = Graph::empty(n);
    for (i, &(u, v)) in ps.iter().enumerate() {
        if (mask >> i) & 1 == 1 {
            g.add_edge(u, v);
        }
    }
    g
}

/// Every labeled graph on `n` vertices; `n <= 7` keeps this enumerable.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let m = n * n.saturating_sub(1) / 2;
    assert!(m <= 28, "labeled enumeration capped at 7 vertices");
    (0u64..(1 << m)).map(move |mask| graph_from_mask(n, mask))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(&mut p, n, &mut perms);
    perms
}

fn heap(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(p, k - 1, out);
        if k % 2 == 0 {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

/// Minimum edge mask over all relabelings.
fn canonical_mask(n: usize, mask: u64, perms: &[Vec<usize>], ps: &[(usize, usize)]) -> u64 {
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in ps.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let mut best = u64::MAX;
    for perm in perms {
        let mut m = 0u64;
        for (i, &(u, v)) in ps.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                m |= 1 << index[perm[u]][perm[v]];
            }
        }
        if m < best {
            best = m;
        }
    }
    best
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, `n <= 7`.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let ps = pairs(n);
    assert!(ps.len() <= 28, "isomorphism corpus capped at 7 vertices");
    let perms = permutations(n);
    let mut reps = Vec::new();
    for mask in 0u64..(1 << ps.len()) {
        if canonical_mask(n, mask, &perms, &ps) == mask {
            reps.push(graph_from_mask(n, mask));
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iso_class_counts_match_the_known_sequence() {
        // graphs on n nodes up to isomorphism: 1, 2, 4, 11, 34, 156
        let expected = [1usize, 2, 4, 11, 34, 156];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(graphs_up_to_iso(n).len(), want, "n = {n}");
        }
    }

    #[test]
    fn labeled_count_is_a_power_of_two() {
        assert_eq!(labeled_graphs(4).count(), 1 << 6);
    }
}
