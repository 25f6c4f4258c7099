//! Exact subgraph counts of cycles and paths.
//!
//! Copy convention: a copy is a subgraph (vertex set + edge set), counted once
//! per isomorphism class of embedding — labeled cycle traversals divided by
//! `2k`, labeled endpoint-ordered paths divided by 2. Cycle counting walks a
//! canonical-start DFS (smallest vertex first, smaller second neighbor)
//! instead of dividing, so no remainder bugs can creep in.
//!
//! Class-restricted counts (`partition_path_count`, `partition_cycle_count`)
//! count vertex tuples `(u_1, ..., u_s)` with `u_i` in class `i`; class
//! disjointness forces distinct vertices, so a layered DP over the classes is
//! exact at cost `O(s n^2)`.
//!
//! Practical limits: the plain counters are meant for `k <= 8` and dense
//! graphs up to roughly 128 vertices; sparse graphs can go far larger.

use crate::bits::VertexSet;
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("classes must be pairwise disjoint (vertex {0} repeats)")]
    OverlappingClasses(usize),
    #[error("a class-ordered cycle needs at least 3 classes, got {0}")]
    TooFewClasses(usize),
    #[error("enumeration exceeded the budget of {0} copies")]
    BudgetExceeded(usize),
}

/// Number of subgraphs of `g` isomorphic to the cycle on `k` vertices.
pub fn cycle_copies(g: &Graph, k: usize) -> u64 {
    assert!(k >= 3, "cycles have length at least 3");
    let n = g.n();
    if n < k {
        return 0;
    }
    let mut total = 0u64;
    let mut stack_visited = VertexSet::empty(n);
    for v in 0..n {
        stack_visited.insert(v);
        let firsts: Vec<usize> = g.neighbors(v).filter(|&x| x > v).collect();
        for &first in &firsts {
            stack_visited.insert(first);
            total += cycle_dfs(g, v, first, first, k - 2, &mut stack_visited);
            stack_visited.remove(first);
        }
        stack_visited.remove(v);
    }
    total
}

// Count completions of the path root..first..cur with `rem` more vertices,
// ending adjacent to root. Intermediate vertices stay above root, and the
// closing vertex stays above `first` so each cycle is produced exactly once.
fn cycle_dfs(
    g: &Graph,
    root: usize,
    first: usize,
    cur: usize,
    rem: usize,
    visited: &mut VertexSet,
) -> u64 {
    if rem == 0 {
        return u64::from(cur > first && g.has_edge(cur, root));
    }
    let mut total = 0;
    for w in g.neighbors(cur) {
        if w > root && !visited.contains(w) {
            visited.insert(w);
            total += cycle_dfs(g, root, first, w, rem - 1, visited);
            visited.remove(w);
        }
    }
    total
}

/// Every copy of `C_len` in `g`, each returned as its edge list. Fails once
/// more than `budget` copies have been produced.
pub fn enumerate_cycles(
    g: &Graph,
    len: usize,
    budget: usize,
) -> Result<Vec<Vec<(usize, usize)>>, CountError> {
    assert!(len >= 3);
    let n = g.n();
    let mut out = Vec::new();
    if n < len {
        return Ok(out);
    }
    let mut path = Vec::with_capacity(len);
    let mut visited = VertexSet::empty(n);
    for v in 0..n {
        visited.insert(v);
        path.push(v);
        let firsts: Vec<usize> = g.neighbors(v).filter(|&x| x > v).collect();
        for &first in &firsts {
            visited.insert(first);
            path.push(first);
            enumerate_dfs(g, len, &mut path, &mut visited, &mut out, budget)?;
            path.pop();
            visited.remove(first);
        }
        path.pop();
        visited.remove(v);
    }
    Ok(out)
}

fn enumerate_dfs(
    g: &Graph,
    len: usize,
    path: &mut Vec<usize>,
    visited: &mut VertexSet,
    out: &mut Vec<Vec<(usize, usize)>>,
    budget: usize,
) -> Result<(), CountError> {
    let root = path[0];
    let cur = *path.last().unwrap();
    if path.len() == len {
        if cur > path[1] && g.has_edge(cur, root) {
            if out.len() >= budget {
                return Err(CountError::BudgetExceeded(budget));
            }
            let mut edges: Vec<(usize, usize)> = path
                .windows(2)
                .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                .collect();
            edges.push((root.min(cur), root.max(cur)));
            out.push(edges);
        }
        return Ok(());
    }
    let nexts: Vec<usize> = g
        .neighbors(cur)
        .filter(|&w| w > root && !visited.contains(w))
        .collect();
    for w in nexts {
        visited.insert(w);
        path.push(w);
        enumerate_dfs(g, len, path, visited, out, budget)?;
        path.pop();
        visited.remove(w);
    }
    Ok(())
}

/// Number of simple paths with `k` edges and endpoint `v`.
pub fn paths_from(g: &Graph, v: usize, k: usize) -> Result<u64, CountError> {
    if v >= g.n() {
        return Err(CountError::VertexOutOfRange(v, g.n()));
    }
    let mut visited = VertexSet::empty(g.n());
    visited.insert(v);
    Ok(paths_dfs(g, v, k, &mut visited))
}

fn paths_dfs(g: &Graph, cur: usize, rem: usize, visited: &mut VertexSet) -> u64 {
    if rem == 0 {
        return 1;
    }
    let mut total = 0;
    for w in g.neighbors(cur) {
        if !visited.contains(w) {
            visited.insert(w);
            total += paths_dfs(g, w, rem - 1, visited);
            visited.remove(w);
        }
    }
    total
}

/// Number of subgraphs of `g` isomorphic to the path with `k` edges.
pub fn path_copies(g: &Graph, k: usize) -> u64 {
    assert!(k >= 1, "paths have at least one edge");
    let total: u64 = (0..g.n()).map(|v| paths_from(g, v, k).unwrap()).sum();
    total / 2
}

fn validate_disjoint(classes: &[VertexSet]) -> Result<(), CountError> {
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            if !a.is_disjoint(b) {
                let v = a.iter().find(|&v| b.contains(v)).unwrap();
                return Err(CountError::OverlappingClasses(v));
            }
        }
    }
    Ok(())
}

/// Count of class-ordered paths `u_1, ..., u_s` with `u_i` in `classes[i-1]`.
pub fn partition_path_count(g: &Graph, classes: &[VertexSet]) -> Result<u64, CountError> {
    validate_disjoint(classes)?;
    Ok(path_dp_total(g, classes))
}

fn path_dp_total(g: &Graph, classes: &[VertexSet]) -> u64 {
    let s = classes.len();
    if s == 0 {
        return 0;
    }
    let n = g.n();
    let mut f = vec![0u64; n];
    for v in classes[0].iter() {
        f[v] = 1;
    }
    for step in 1..s {
        let mut next = vec![0u64; n];
        for w in classes[step].iter() {
            let mut acc = 0u64;
            for v in classes[step - 1].iter() {
                if g.has_edge(v, w) {
                    acc += f[v];
                }
            }
            next[w] = acc;
        }
        f = next;
    }
    classes[s - 1].iter().map(|v| f[v]).sum()
}

/// Count of class-ordered cycles `u_1, ..., u_s, u_1` with `u_i` in
/// `classes[i-1]`; needs `s >= 3`.
pub fn partition_cycle_count(g: &Graph, classes: &[VertexSet]) -> Result<u64, CountError> {
    let s = classes.len();
    if s < 3 {
        return Err(CountError::TooFewClasses(s));
    }
    validate_disjoint(classes)?;
    let n = g.n();
    let mut total = 0u64;
    // anchor on u_1, run the layered DP through the remaining classes, then
    // close back to the anchor
    for u1 in classes[0].iter() {
        let mut f = vec![0u64; n];
        f[u1] = 1;
        for step in 1..s {
            let mut next = vec![0u64; n];
            for w in classes[step].iter() {
                let mut acc = 0u64;
                if step == 1 {
                    if g.has_edge(u1, w) {
                        acc = 1;
                    }
                } else {
                    for v in classes[step - 1].iter() {
                        if g.has_edge(v, w) {
                            acc += f[v];
                        }
                    }
                }
                next[w] = acc;
            }
            f = next;
        }
        total += classes[s - 1]
            .iter()
            .filter(|&v| g.has_edge(v, u1))
            .map(|v| f[v])
            .sum::<u64>();
    }
    Ok(total)
}

/// Triangle count by summing `|N(u) ∩ N(v)|` over edges; mostly a cheap path
/// for checks that only need `C_3`.
pub fn triangle_count(g: &Graph) -> u64 {
    let mut total = 0u64;
    for u in 0..g.n() {
        for v in g.neighbors(u) {
            if v > u {
                total += g
                    .neighbors(v)
                    .filter(|&w| w > v && g.has_edge(u, w))
                    .count() as u64;
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{blow_up, random_partition, Graph};
    use crate::rng::master_rng;
    use rand::Rng;

    fn petersen() -> Graph {
        // outer C5, inner 5-star polygon, spokes
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        g
    }

    fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    // brute-force oracle: test every k-subset and count cycle subgraphs on it
    fn cycle_copies_oracle(g: &Graph, k: usize) -> u64 {
        let n = g.n();
        if n < k {
            return 0;
        }
        let mut total = 0u64;
        let mut subset: Vec<usize> = Vec::new();
        fn rec(g: &Graph, k: usize, start: usize, subset: &mut Vec<usize>, total: &mut u64) {
            if subset.len() == k {
                *total += hamilton_cycles_on(g, subset);
                return;
            }
            for v in start..g.n() {
                subset.push(v);
                rec(g, k, v + 1, subset, total);
                subset.pop();
            }
        }
        // count Hamilton cycles of the induced subgraph, each once
        fn hamilton_cycles_on(g: &Graph, verts: &[usize]) -> u64 {
            let k = verts.len();
            let mut perm: Vec<usize> = (1..k).collect();
            let mut count = 0u64;
            loop {
                let ok = {
                    let mut prev = verts[0];
                    let mut fine = true;
                    for &i in &perm {
                        if !g.has_edge(prev, verts[i]) {
                            fine = false;
                            break;
                        }
                        prev = verts[i];
                    }
                    fine && g.has_edge(prev, verts[0])
                };
                if ok {
                    count += 1;
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
            count / 2
        }
        fn next_permutation(p: &mut [usize]) -> bool {
            if p.len() < 2 {
                return false;
            }
            let mut i = p.len() - 1;
            while i > 0 && p[i - 1] >= p[i] {
                i -= 1;
            }
            if i == 0 {
                return false;
            }
            let mut j = p.len() - 1;
            while p[j] <= p[i - 1] {
                j -= 1;
            }
            p.swap(i - 1, j);
            p[i..].reverse();
            true
        }
        rec(g, k, 0, &mut subset, &mut total);
        total
    }

    #[test]
    fn small_cycle_counts() {
        assert_eq!(cycle_copies(&Graph::complete(4), 3), 4);
        assert_eq!(cycle_copies(&Graph::complete(5), 5), 12);
        assert_eq!(cycle_copies(&Graph::cycle(6), 6), 1);
        assert_eq!(cycle_copies(&Graph::cycle(6), 5), 0);
    }

    #[test]
    fn petersen_has_twelve_pentagons() {
        let g = petersen();
        assert_eq!(cycle_copies_oracle(&g, 5), 12);
        assert_eq!(cycle_copies(&g, 5), 12);
    }

    #[test]
    fn cycle_counts_match_oracle_on_random_graphs() {
        let mut rng = master_rng(17);
        for _ in 0..30 {
            let g = random_graph(8, 0.45, &mut rng);
            for k in 3..=6 {
                assert_eq!(cycle_copies(&g, k), cycle_copies_oracle(&g, k));
            }
        }
    }

    #[test]
    fn triangle_count_matches_trace_of_cube() {
        // independent algebraic oracle: tr(A^3) / 6
        let mut rng = master_rng(23);
        for _ in 0..40 {
            let n = 3 + rng.random_range(0..8);
            let g = random_graph(n, 0.4, &mut rng);
            let mut a = vec![vec![0u64; n]; n];
            for u in 0..n {
                for v in g.neighbors(u) {
                    a[u][v] = 1;
                }
            }
            let mut a2 = vec![vec![0u64; n]; n];
            for i in 0..n {
                for j in 0..n {
                    a2[i][j] = (0..n).map(|t| a[i][t] * a[t][j]).sum();
                }
            }
            let trace3: u64 = (0..n)
                .map(|i| (0..n).map(|t| a2[i][t] * a[t][i]).sum::<u64>())
                .sum();
            assert_eq!(cycle_copies(&g, 3), trace3 / 6);
            assert_eq!(triangle_count(&g), trace3 / 6);
        }
    }

    #[test]
    fn blow_up_of_c5_has_product_many_pentagons() {
        let (g, _) = blow_up(&Graph::cycle(5), &[3, 1, 3, 1, 1]).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(cycle_copies_oracle(&g, 5), 9);
        assert_eq!(cycle_copies(&g, 5), 9);
    }

    #[test]
    fn small_path_counts() {
        assert_eq!(path_copies(&Graph::cycle(3), 2), 3);
        assert_eq!(path_copies(&Graph::path(4), 3), 1);
        assert_eq!(path_copies(&Graph::path(4), 1), 3);
    }

    #[test]
    fn paths_from_examples() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(paths_from(&star, 0, 1).unwrap(), 3);
        assert_eq!(paths_from(&Graph::cycle(5), 2, 2).unwrap(), 2);
        assert!(paths_from(&star, 9, 1).is_err());
    }

    #[test]
    fn endpoint_sums_double_count_paths() {
        let mut rng = master_rng(31);
        for _ in 0..25 {
            let n = 4 + rng.random_range(0..7);
            let g = random_graph(n, 0.5, &mut rng);
            for k in 1..=4 {
                let by_endpoints: u64 = (0..n).map(|v| paths_from(&g, v, k).unwrap()).sum();
                assert_eq!(by_endpoints, 2 * path_copies(&g, k));
            }
        }
    }

    // naive depth-first enumeration of class-ordered paths / cycles
    fn naive_partition_path(g: &Graph, classes: &[VertexSet]) -> u64 {
        fn rec(g: &Graph, classes: &[VertexSet], tuple: &mut Vec<usize>) -> u64 {
            if tuple.len() == classes.len() {
                return 1;
            }
            let step = tuple.len();
            let mut total = 0;
            for v in classes[step].iter() {
                if tuple.is_empty() || g.has_edge(*tuple.last().unwrap(), v) {
                    tuple.push(v);
                    total += rec(g, classes, tuple);
                    tuple.pop();
                }
            }
            total
        }
        rec(g, classes, &mut Vec::new())
    }

    fn naive_partition_cycle(g: &Graph, classes: &[VertexSet]) -> u64 {
        fn rec(g: &Graph, classes: &[VertexSet], tuple: &mut Vec<usize>) -> u64 {
            if tuple.len() == classes.len() {
                return u64::from(g.has_edge(*tuple.last().unwrap(), tuple[0]));
            }
            let step = tuple.len();
            let mut total = 0;
            for v in classes[step].iter() {
                if tuple.is_empty() || g.has_edge(*tuple.last().unwrap(), v) {
                    tuple.push(v);
                    total += rec(g, classes, tuple);
                    tuple.pop();
                }
            }
            total
        }
        rec(g, classes, &mut Vec::new())
    }

    #[test]
    fn partition_counts_trivial_cases() {
        let c4 = Graph::cycle(4);
        let mk = |vs: &[usize]| VertexSet::from_iter(4, vs.iter().copied());
        assert_eq!(
            partition_path_count(&c4, &[mk(&[0]), mk(&[1]), mk(&[2])]).unwrap(),
            1
        );
        assert_eq!(
            partition_path_count(&c4, &[mk(&[0]), mk(&[]), mk(&[2])]).unwrap(),
            0
        );
        assert_eq!(
            partition_cycle_count(&c4, &[mk(&[0]), mk(&[]), mk(&[2])]).unwrap(),
            0
        );
        assert!(matches!(
            partition_cycle_count(&c4, &[mk(&[0]), mk(&[1])]),
            Err(CountError::TooFewClasses(2))
        ));
        assert!(matches!(
            partition_path_count(&c4, &[mk(&[0, 1]), mk(&[1])]),
            Err(CountError::OverlappingClasses(1))
        ));
    }

    #[test]
    fn blow_up_classes_give_product_cycle_count() {
        let (g, part) = blow_up(&Graph::cycle(5), &[2, 2, 2, 2, 2]).unwrap();
        let classes = part.class_sets();
        assert_eq!(partition_cycle_count(&g, &classes).unwrap(), 32);
    }

    #[test]
    fn partition_counts_match_naive_enumeration() {
        let mut rng = master_rng(47);
        for trial in 0..500 {
            let n = 3 + rng.random_range(0..8);
            let g = random_graph(n, 0.5, &mut rng);
            let s = 3 + (trial % 3);
            let part = random_partition(&g, s, &mut rng).unwrap();
            let classes = part.class_sets();
            assert_eq!(
                partition_path_count(&g, &classes).unwrap(),
                naive_partition_path(&g, &classes)
            );
            assert_eq!(
                partition_cycle_count(&g, &classes).unwrap(),
                naive_partition_cycle(&g, &classes)
            );
        }
    }

    #[test]
    fn enumerate_cycles_lists_each_copy_once() {
        let g = Graph::complete(4);
        let tri = enumerate_cycles(&g, 3, 100).unwrap();
        assert_eq!(tri.len(), 4);
        for edges in &tri {
            assert_eq!(edges.len(), 3);
        }
        assert!(matches!(
            enumerate_cycles(&g, 3, 2),
            Err(CountError::BudgetExceeded(2))
        ));
    }
}
