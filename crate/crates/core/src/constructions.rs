//! Lower-bound witness families: the polarity graph over a prime field,
//! cycle/path blow-ups with one class scale, the general pattern blow-up, the
//! edge-to-triangle booster for bipartite inputs, and balanced odd-cycle
//! blow-ups that are hard for sampling testers.

use crate::detect::is_l_free;
use crate::field::{FieldError, PrimeField};
use crate::graph::{blow_up, BipartiteGraph, Graph, GraphError, VertexPartition};
use crate::pattern::Pattern;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("booster input is not free of short even cycles: contains C_{0}")]
    BoosterInputNotFree(usize),
}

fn params_err<T>(msg: impl Into<String>) -> Result<T, ConstructionError> {
    Err(ConstructionError::InvalidParams(msg.into()))
}

/// Graph on the nonzero points of `F_p^2`, with `(a,b) ~ (c,d)` iff
/// `ac + bd = 1`. Loops (points with `a^2 + b^2 = 1`) are dropped; their
/// count is returned alongside. The result is `C_4`-free with all degrees in
/// `{p-1, p}`.
pub fn polarity_graph(p: u64) -> Result<(Graph, usize), ConstructionError> {
    if p < 3 {
        return params_err("polarity graph needs a prime p >= 3");
    }
    let f = PrimeField::new(p)?;
    let p = p as usize;
    let n = p * p - 1;
    let idx = |a: usize, b: usize| a * p + b - 1; // (0,0) excluded
    let mut g = Graph::empty(n);
    let mut loops = 0usize;
    for a in 0..p {
        for b in 0..p {
            if a == 0 && b == 0 {
                continue;
            }
            if f.add(f.mul(a as u64, a as u64), f.mul(b as u64, b as u64)) == 1 {
                loops += 1;
            }
            for c in 0..p {
                for d in 0..p {
                    if c == 0 && d == 0 || (c, d) <= (a, b) {
                        continue;
                    }
                    if f.add(f.mul(a as u64, c as u64), f.mul(b as u64, d as u64)) == 1 {
                        g.add_edge(idx(a, b), idx(c, d));
                    }
                }
            }
        }
    }
    Ok((g, loops))
}

fn blowup_sizes(pattern: Pattern, m: usize) -> Vec<usize> {
    let v = pattern.vertex_count();
    let mut sizes = vec![1usize; v];
    for i in pattern.max_independent_positions() {
        sizes[i] = m;
    }
    sizes
}

/// Blow-up of `C_k` with a maximum independent set of classes scaled to `m`.
/// `C_l`-free for every `l` not in `{k, 4}`; carries at least
/// `m^{floor(k/2)}` copies of `C_k` (exactly that many when `k` is odd) on
/// `floor(k/2) m + ceil(k/2)` vertices.
pub fn cycle_blowup(
    k: usize,
    l: usize,
    m: usize,
) -> Result<(Graph, VertexPartition), ConstructionError> {
    if k < 3 {
        return params_err("cycle_blowup needs k >= 3");
    }
    if l == k || l == 4 || l < 3 {
        return params_err(format!("cycle_blowup target C{k} is not C{l}-free"));
    }
    if m < 1 {
        return params_err("cycle_blowup needs m >= 1");
    }
    let pattern = Pattern::Cycle(k);
    Ok(blow_up(&pattern.base_graph(), &blowup_sizes(pattern, m))?)
}

/// Blow-up of `P_k` with a maximum independent set of classes scaled to `m`;
/// `C_l`-free for every `l != 4` and carrying at least `m^{ceil((k+1)/2)}`
/// copies of `P_k`.
pub fn path_blowup(
    k: usize,
    l: usize,
    m: usize,
) -> Result<(Graph, VertexPartition), ConstructionError> {
    if k < 2 {
        return params_err("path_blowup needs k >= 2");
    }
    if l == k || l == 4 || l < 3 {
        return params_err(format!("path_blowup rejects l = {l}"));
    }
    if m < 1 {
        return params_err("path_blowup needs m >= 1");
    }
    let pattern = Pattern::Path(k);
    Ok(blow_up(&pattern.base_graph(), &blowup_sizes(pattern, m))?)
}

/// Blow-up of `target` that stays `C_h`-free: the `h - floor(h/2) - 1`
/// vertices outside the independent positions are split as equally as
/// possible, the remaining `n - (h - floor(h/2) - 1)` over the independent
/// positions; lower class indices receive the extras.
pub fn general_blowup(
    target: Pattern,
    forbidden_len: usize,
    n: usize,
) -> Result<(Graph, VertexPartition), ConstructionError> {
    if !target.is_valid() {
        return params_err("invalid target pattern");
    }
    let h = forbidden_len;
    if h < 3 {
        return params_err("forbidden cycle length must be at least 3");
    }
    let t = target.vertex_count();
    let alpha_t = target.independence_number();
    let alpha_h = h / 2;
    let non_ind_budget = h
        .checked_sub(alpha_h + 1)
        .ok_or_else(|| ConstructionError::InvalidParams("forbidden cycle too small".into()))?;
    if non_ind_budget < t - alpha_t {
        return params_err(format!(
            "hypothesis violated: C{h} leaves budget {non_ind_budget} < {} non-independent vertices of {target}",
            t - alpha_t
        ));
    }
    if n < non_ind_budget + alpha_t {
        return params_err(format!("n = {n} too small for the split"));
    }
    let ind = target.max_independent_positions();
    let is_ind = |i: usize| ind.binary_search(&i).is_ok();
    let mut sizes = vec![0usize; t];
    // equal split with lower indices taking the extras
    let spread = |total: usize, count: usize, j: usize| total / count + usize::from(j < total % count);
    let mut j_non = 0;
    let mut j_ind = 0;
    let ind_total = n - non_ind_budget;
    for (i, size) in sizes.iter_mut().enumerate() {
        if is_ind(i) {
            *size = spread(ind_total, alpha_t, j_ind);
            j_ind += 1;
        } else {
            *size = spread(non_ind_budget, t - alpha_t, j_non);
            j_non += 1;
        }
    }
    Ok(blow_up(&target.base_graph(), &sizes)?)
}

/// Replace every side-A vertex of a bipartite graph by an edge; each original
/// edge becomes a triangle. The input must be free of `C_4, C_6, ..., C_{2l}`
/// (verified here); the output then has exactly `e(input)` triangles and no
/// `C_{2l}`.
pub fn triangle_booster(gprime: &BipartiteGraph, l: usize) -> Result<Graph, ConstructionError> {
    if l < 3 {
        return params_err("triangle_booster needs l >= 3");
    }
    let flat = gprime.to_graph();
    for len in (4..=2 * l).step_by(2) {
        if !is_l_free(&flat, &[len]) {
            return Err(ConstructionError::BoosterInputNotFree(len));
        }
    }
    let a = gprime.side_a();
    let b = gprime.side_b();
    let mut g = Graph::empty(2 * a + b);
    for u in 0..a {
        g.add_edge(2 * u, 2 * u + 1);
    }
    for (u, v) in gprime.edges() {
        g.add_edge(2 * u, 2 * a + v);
        g.add_edge(2 * u + 1, 2 * a + v);
    }
    Ok(g)
}

/// Balanced blow-up of the odd cycle `C_{l1 + 2}` on `n` vertices (classes as
/// equal as possible, lower indices first), optionally reserving one vertex
/// to stay isolated. Free of every odd cycle shorter than `l1 + 2`, and of
/// every cycle longer than the vertex count it actually spans.
pub fn hard_l_free_instance(
    l1: usize,
    n: usize,
    with_isolated: bool,
) -> Result<Graph, ConstructionError> {
    if l1 < 3 || l1 % 2 == 0 {
        return params_err("l1 must be odd and at least 3");
    }
    let m = l1 + 2;
    let blown = if with_isolated { n - 1 } else { n };
    if blown < m {
        return params_err(format!("n = {n} too small for a blow-up of C_{m}"));
    }
    let sizes: Vec<usize> = (0..m).map(|i| blown / m + usize::from(i < blown % m)).collect();
    let (core, _) = blow_up(&Graph::cycle(m), &sizes)?;
    if !with_isolated {
        return Ok(core);
    }
    let mut g = Graph::empty(n);
    for (u, v) in core.edges() {
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Serializable description of one construction run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum ConstructionSpec {
    Polarity { p: u64 },
    CycleBlowup { k: usize, l: usize, m: usize },
    PathBlowup { k: usize, l: usize, m: usize },
    GeneralBlowup { target: Pattern, forbidden: usize, n: usize },
    /// Booster applied to the `size x size` perfect matching.
    TriangleBooster { l: usize, matching: usize },
    HardLFree { l1: usize, n: usize, with_isolated: bool },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Graph, ConstructionError> {
        match *self {
            ConstructionSpec::Polarity { p } => Ok(polarity_graph(p)?.0),
            ConstructionSpec::CycleBlowup { k, l, m } => Ok(cycle_blowup(k, l, m)?.0),
            ConstructionSpec::PathBlowup { k, l, m } => Ok(path_blowup(k, l, m)?.0),
            ConstructionSpec::GeneralBlowup { target, forbidden, n } => {
                Ok(general_blowup(target, forbidden, n)?.0)
            }
            ConstructionSpec::TriangleBooster { l, matching } => {
                let mut bg = BipartiteGraph::empty(matching, matching);
                for i in 0..matching {
                    bg.add_edge(i, i);
                }
                triangle_booster(&bg, l)
            }
            ConstructionSpec::HardLFree { l1, n, with_isolated } => {
                hard_l_free_instance(l1, n, with_isolated)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{cycle_copies, path_copies, triangle_count};
    use crate::detect::{contains_cycle_of_length, shortest_odd_cycle};

    #[test]
    fn polarity_small_case() {
        let (g, loops) = polarity_graph(3).unwrap();
        assert_eq!(g.n(), 8);
        for v in 0..8 {
            assert!(matches!(g.degree(v), 2 | 3), "degree {} at {v}", g.degree(v));
        }
        assert!(loops <= 6);
        assert!(!contains_cycle_of_length(&g, 4));
    }

    #[test]
    fn polarity_degrees_and_c4_freeness() {
        for p in [3u64, 5, 7, 11] {
            let (g, loops) = polarity_graph(p).unwrap();
            let n = (p * p - 1) as usize;
            assert_eq!(g.n(), n);
            assert!(loops <= 2 * p as usize, "p={p}: {loops} loops");
            for v in 0..n {
                let d = g.degree(v) as u64;
                assert!(d == p - 1 || d == p, "p={p}: degree {d}");
            }
            // C4-free means no pair with two common neighbors
            for u in 0..n {
                for v in (u + 1)..n {
                    assert!(g.common_neighbor_count(u, v) <= 1, "p={p}: pair ({u},{v})");
                }
            }
        }
    }

    #[test]
    fn polarity_most_pairs_share_a_neighbor() {
        for p in [3u64, 5, 7] {
            let (g, _) = polarity_graph(p).unwrap();
            let n = g.n();
            let mut lonely = 0u64;
            for u in 0..n {
                for v in (u + 1)..n {
                    if g.common_neighbor_count(u, v) == 0 {
                        lonely += 1;
                    }
                }
            }
            assert!(lonely <= 3 * n as u64 * p, "p={p}: {lonely} pairs");
        }
    }

    #[test]
    fn polarity_path_counts_meet_degree_lower_bound() {
        for p in [3u64, 5] {
            let (g, _) = polarity_graph(p).unwrap();
            let n = g.n() as u64;
            for k in 1..=3usize {
                let mut bound: i64 = n as i64;
                for i in 1..=k as i64 {
                    bound *= p as i64 - i;
                }
                let bound = (bound / 2).max(0) as u64;
                assert!(
                    path_copies(&g, k) >= bound,
                    "p={p}, k={k}: {} < {bound}",
                    path_copies(&g, k)
                );
            }
        }
    }

    #[test]
    fn polarity_rejects_non_prime() {
        assert!(matches!(
            polarity_graph(9),
            Err(ConstructionError::Field(FieldError::NotPrime(9)))
        ));
        assert!(polarity_graph(2).is_err());
    }

    #[test]
    fn cycle_blowup_pentagon_example() {
        let (g, _) = cycle_blowup(5, 3, 4).unwrap();
        assert_eq!(g.n(), 11); // floor(5/2) * 4 + ceil(5/2)
        assert!(!contains_cycle_of_length(&g, 3));
        assert_eq!(cycle_copies(&g, 5), 16);
    }

    #[test]
    fn cycle_blowup_vertex_count_formula() {
        for k in 3..=8usize {
            for m in 1..=4usize {
                let l = if k == 3 { 5 } else { 3 };
                let (g, _) = cycle_blowup(k, l, m).unwrap();
                assert_eq!(g.n(), (k / 2) * m + k.div_ceil(2), "k={k}, m={m}");
                let floor_pow = (m as u64).pow((k / 2) as u32);
                let copies = cycle_copies(&g, k);
                if k % 2 == 1 {
                    // odd k: every copy takes one vertex per class
                    assert_eq!(copies, floor_pow, "k={k}, m={m}");
                } else {
                    // even k: extra copies reuse a blown class twice
                    assert!(copies >= floor_pow, "k={k}, m={m}: {copies} < {floor_pow}");
                }
            }
        }
    }

    #[test]
    fn cycle_blowup_forbidden_lengths_hold() {
        for (k, l, m) in [(5usize, 3usize, 3usize), (4, 6, 3), (6, 8, 2), (7, 9, 2), (5, 7, 4)] {
            let (g, _) = cycle_blowup(k, l, m).unwrap();
            assert!(!contains_cycle_of_length(&g, l), "k={k} l={l} m={m}");
        }
    }

    #[test]
    fn cycle_blowup_rejects_bad_params() {
        assert!(cycle_blowup(5, 5, 2).is_err());
        assert!(cycle_blowup(5, 4, 2).is_err());
        assert!(cycle_blowup(2, 3, 2).is_err());
        assert!(cycle_blowup(5, 3, 0).is_err());
    }

    #[test]
    fn path_blowup_square_example() {
        let (g, _) = path_blowup(2, 3, 4).unwrap();
        assert!(!contains_cycle_of_length(&g, 3));
        assert!(path_copies(&g, 2) >= 16);
    }

    #[test]
    fn general_blowup_triangle_vs_c7() {
        let (g, part) = general_blowup(Pattern::Cycle(3), 7, 10).unwrap();
        let mut sizes = part.class_sizes();
        assert_eq!(sizes.iter().sum::<usize>(), 10);
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 7]);
        assert_eq!(triangle_count(&g), 14);
        assert!(!contains_cycle_of_length(&g, 7));
        for n in 6..=12usize {
            let (g, _) = general_blowup(Pattern::Cycle(3), 7, n).unwrap();
            assert_eq!(triangle_count(&g), 2 * (n as u64 - 3));
        }
    }

    #[test]
    fn general_blowup_rejects_hypothesis_violation() {
        assert!(matches!(
            general_blowup(Pattern::Cycle(5), 5, 20),
            Err(ConstructionError::InvalidParams(_))
        ));
    }

    #[test]
    fn booster_on_perfect_matching() {
        let mut bg = BipartiteGraph::empty(3, 3);
        for i in 0..3 {
            bg.add_edge(i, i);
        }
        let g = triangle_booster(&bg, 3).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(triangle_count(&g), 3);
        assert!(!contains_cycle_of_length(&g, 6));
    }

    #[test]
    fn booster_on_star() {
        // center on side A so the single A-vertex becomes an edge
        let mut bg = BipartiteGraph::empty(1, 3);
        for i in 0..3 {
            bg.add_edge(0, i);
        }
        let g = triangle_booster(&bg, 3).unwrap();
        assert_eq!(triangle_count(&g), 3);
        assert!(!contains_cycle_of_length(&g, 6));
    }

    #[test]
    fn booster_rejects_input_with_short_even_cycle() {
        let mut bg = BipartiteGraph::empty(2, 2);
        for u in 0..2 {
            for v in 0..2 {
                bg.add_edge(u, v);
            }
        }
        assert_eq!(
            triangle_booster(&bg, 3).unwrap_err(),
            ConstructionError::BoosterInputNotFree(4)
        );
    }

    #[test]
    fn hard_instance_shape() {
        let g = hard_l_free_instance(3, 500, false).unwrap();
        assert_eq!(g.n(), 500);
        assert_eq!(shortest_odd_cycle(&g), Some(5));
        assert!(!contains_cycle_of_length(&g, 3));
        assert!(contains_cycle_of_length(&g, 101));
    }

    #[test]
    fn hard_instance_explicit_long_cycle_witness() {
        // hand-build a 101-cycle: zig-zag 49 times between the first two
        // classes, then close through the remaining three
        let g = hard_l_free_instance(3, 500, false).unwrap();
        // balanced split: classes of 100, class i occupies 100i..100(i+1)
        let mut cyc: Vec<usize> = Vec::new();
        for i in 0..49 {
            cyc.push(i); // class 0
            cyc.push(100 + i); // class 1
        }
        cyc.push(200); // class 2
        cyc.push(300); // class 3
        cyc.push(400); // class 4
        assert_eq!(cyc.len(), 101);
        let mut sorted = cyc.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 101, "witness vertices must be distinct");
        for i in 0..cyc.len() {
            let u = cyc[i];
            let v = cyc[(i + 1) % cyc.len()];
            assert!(g.has_edge(u, v), "witness edge ({u},{v}) missing");
        }
    }

    #[test]
    fn hard_instance_with_isolated_vertex() {
        let g = hard_l_free_instance(3, 20, true).unwrap();
        assert_eq!(g.n(), 20);
        assert_eq!(g.degree(19), 0);
        assert!(crate::detect::is_l_free(&g, &[3, 20]));
    }

    #[test]
    fn construction_spec_builds_and_serializes() {
        let specs = vec![
            ConstructionSpec::Polarity { p: 5 },
            ConstructionSpec::CycleBlowup { k: 5, l: 3, m: 2 },
            ConstructionSpec::PathBlowup { k: 2, l: 3, m: 2 },
            ConstructionSpec::GeneralBlowup { target: Pattern::Cycle(3), forbidden: 7, n: 10 },
            ConstructionSpec::TriangleBooster { l: 3, matching: 4 },
            ConstructionSpec::HardLFree { l1: 3, n: 25, with_isolated: false },
        ];
        for spec in specs {
            let g = spec.build().unwrap();
            assert!(g.n() > 0);
            let json = serde_json::to_string(&spec).unwrap();
            let back: ConstructionSpec = serde_json::from_str(&json).unwrap();
            assert_eq!(back, spec);
        }
    }
}
