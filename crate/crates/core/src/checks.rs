//! Mechanical verification of explicit counting inequalities: each check
//! evaluates both sides exactly on a concrete instance and reports pass,
//! fail (with a counterexample payload), or not-applicable when the
//! instance misses a hypothesis.

use crate::bits::VertexSet;
use crate::counting::{
    cycle_copies, partition_cycle_count, partition_path_count, path_copies, paths_from,
    triangle_count,
};
use crate::detect::{find_path_with_edges, is_l_free};
use crate::graph::{BipartiteGraph, Graph, VertexPartition};
use crate::graph6::encode;
use crate::oddcycle::cycle_independent_sets;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckOutcome {
    Pass,
    Fail,
    NotApplicable,
}

/// One verified inequality instance. `pass` holds exactly when
/// `lhs <= rhs`; failing results carry the instance graph in graph6 form.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub instance: String,
    pub lhs: f64,
    pub rhs: f64,
    pub outcome: CheckOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn from_u128(check: &str, instance: String, lhs: u128, rhs: u128, g: &Graph) -> Self {
        let pass = lhs <= rhs;
        CheckResult {
            check: check.to_string(),
            instance,
            lhs: lhs as f64,
            rhs: rhs as f64,
            outcome: if pass { CheckOutcome::Pass } else { CheckOutcome::Fail },
            counterexample: if pass { None } else { Some(encode(g)) },
        }
    }

    fn from_f64(check: &str, instance: String, lhs: f64, rhs: f64, g: &Graph) -> Self {
        let pass = lhs <= rhs;
        CheckResult {
            check: check.to_string(),
            instance,
            lhs,
            rhs,
            outcome: if pass { CheckOutcome::Pass } else { CheckOutcome::Fail },
            counterexample: if pass { None } else { Some(encode(g)) },
        }
    }

    fn not_applicable(check: &str, instance: String) -> Self {
        CheckResult {
            check: check.to_string(),
            instance,
            lhs: 0.0,
            rhs: 0.0,
            outcome: CheckOutcome::NotApplicable,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == CheckOutcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == CheckOutcome::Fail
    }
}

/// Exhaustive partition-averaging identity: summed over all `k^n` class
/// assignments, the class-ordered cycle count equals `#C_k 2k k^{n-k}` and
/// the class-ordered path count equals `#P_{k-1} 2 k^{n-k}`, exactly.
pub fn check_random_partition_identity(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<CheckResult, CheckError> {
    assert!(k >= 3);
    let n = g.n();
    let assignments = (k as u64).checked_pow(n as u32).filter(|&a| a <= budget);
    let Some(assignments) = assignments else {
        return Err(CheckError::Budget(format!("k^n = {k}^{n} exceeds {budget}")));
    };
    let cycles = cycle_copies(g, k);
    let paths = path_copies(g, k - 1);
    let scale = (k as u64).pow((n - k.min(n)) as u32);
    let (expected_c, expected_p);
    if n >= k {
        expected_c = cycles * 2 * k as u64 * scale;
        expected_p = paths * 2 * scale;
    } else {
        expected_c = 0;
        expected_p = 0;
    }
    let mut sum_c = 0u64;
    let mut sum_p = 0u64;
    let mut class_of = vec![0usize; n];
    for _ in 0..assignments {
        let part = VertexPartition::new(k, class_of.clone()).unwrap();
        let classes = part.class_sets();
        sum_c += partition_cycle_count(g, &classes).unwrap();
        sum_p += partition_path_count(g, &classes).unwrap();
        // odometer over class assignments
        for slot in class_of.iter_mut() {
            *slot += 1;
            if *slot < k {
                break;
            }
            *slot = 0;
        }
    }
    let instance = format!("n={n}, k={k}, cycle sum {sum_c} vs {expected_c}, path sum {sum_p} vs {expected_p}");
    let pass = sum_c == expected_c && sum_p == expected_p;
    Ok(CheckResult {
        check: "partition-identity".into(),
        instance,
        lhs: if sum_c == expected_c { sum_p as f64 } else { sum_c as f64 },
        rhs: if sum_c == expected_c { expected_p as f64 } else { expected_c as f64 },
        outcome: if pass { CheckOutcome::Pass } else { CheckOutcome::Fail },
        counterexample: if pass { None } else { Some(encode(g)) },
    })
}

/// Class-ordered cycles through `2k+1` disjoint classes are at most the sum
/// over nonempty independent sets of the `(2k+1)`-cycle of the class-size
/// products. Requires the host graph to be `C_{2k+3}`-free.
pub fn check_cycle_partition_inequality(
    g: &Graph,
    classes: &[VertexSet],
    k: usize,
) -> Result<CheckResult, CheckError> {
    assert!(k >= 2);
    let s = 2 * k + 1;
    if classes.len() != s {
        return Err(CheckError::Precondition(format!(
            "need {s} classes, got {}",
            classes.len()
        )));
    }
    if !is_l_free(g, &[2 * k + 3]) {
        return Err(CheckError::Precondition(format!("graph contains C_{}", 2 * k + 3)));
    }
    let lhs = partition_cycle_count(g, classes).unwrap() as u128;
    let sizes: Vec<u128> = classes.iter().map(|c| c.len() as u128).collect();
    let mut rhs = 0u128;
    for mask in cycle_independent_sets(s) {
        let mut prod = 1u128;
        for (i, &size) in sizes.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                prod *= size;
            }
        }
        rhs += prod;
    }
    Ok(CheckResult::from_u128(
        "cycle-partition-inequality",
        format!("n={}, k={k}, sizes={sizes:?}", g.n()),
        lhs,
        rhs,
        g,
    ))
}

/// Layered path bound under edge-sparsity hypotheses: when
/// `e(U_1, U_2) <= lambda (|U_1| + |U_2|)` and every neighborhood slice
/// `e(N_{U_{i+1}}(u_i), U_{i+2}) <= lambda (|N_{U_{i+1}}(u_i)| + |U_{i+2}|)`,
/// the class-ordered path count obeys a `lambda`-power bound. Instances
/// missing a hypothesis report not-applicable.
///
/// For even `s` the asserted form is
/// `lambda^{s/2} n^{s/2-1} (|U_1| + |U_s|)`, the version the inductive
/// argument actually establishes and consumes downstream.
pub fn check_lambda_path_bound(g: &Graph, classes: &[VertexSet], lambda: u64) -> CheckResult {
    assert!(lambda >= 1);
    let s = classes.len();
    assert!(s >= 2);
    let n = g.n() as u128;
    let instance = format!(
        "n={}, s={s}, lambda={lambda}, sizes={:?}",
        g.n(),
        classes.iter().map(VertexSet::len).collect::<Vec<_>>()
    );
    let lam = lambda as u128;
    // base hypothesis
    let e12 = g.edges_between(&classes[0], &classes[1]) as u128;
    if e12 > lam * (classes[0].len() as u128 + classes[1].len() as u128) {
        return CheckResult::not_applicable("lambda-path-bound", instance);
    }
    // sliced hypotheses for every anchor vertex
    for i in 0..s.saturating_sub(2) {
        for u in classes[i].iter() {
            let mut slice = VertexSet::empty(g.n());
            for w in g.neighbors(u) {
                if classes[i + 1].contains(w) {
                    slice.insert(w);
                }
            }
            let e = g.edges_between(&slice, &classes[i + 2]) as u128;
            if e > lam * (slice.len() as u128 + classes[i + 2].len() as u128) {
                return CheckResult::not_applicable("lambda-path-bound", instance);
            }
        }
    }
    let lhs = partition_path_count(g, classes).unwrap() as u128;
    let u1 = classes[0].len() as u128;
    let us = classes[s - 1].len() as u128;
    let rhs = if s % 2 == 1 {
        lam.pow(((s - 1) / 2) as u32)
            * n.pow(((s - 3) / 2) as u32)
            * (u1 * us + lam * n)
    } else {
        lam.pow((s / 2) as u32) * n.pow((s / 2 - 1) as u32) * (u1 + us)
    };
    CheckResult::from_u128("lambda-path-bound", instance, lhs, rhs, g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeMode {
    /// host graph is `C_{2l}`-free
    EvenFree,
    /// host graph is `C_{2l+1}`-free and `l > k`
    OddFree,
}

/// Cycle count through `2k+1` classes bounded by short class-ordered path
/// counts: `c <= l^{k-1} n^{k-2} [p(V1,V2,V3,V4) + p(V_{2k+1},V1,V2,V3)]`.
pub fn check_forbidden_cycles_main(
    g: &Graph,
    classes: &[VertexSet],
    k: usize,
    l: usize,
    mode: FreeMode,
) -> Result<CheckResult, CheckError> {
    assert!(k >= 2 && l >= 2);
    let s = 2 * k + 1;
    if classes.len() != s {
        return Err(CheckError::Precondition(format!(
            "need {s} classes, got {}",
            classes.len()
        )));
    }
    match mode {
        FreeMode::EvenFree => {
            if !is_l_free(g, &[2 * l]) {
                return Err(CheckError::Precondition(format!("graph contains C_{}", 2 * l)));
            }
        }
        FreeMode::OddFree => {
            if l <= k {
                return Err(CheckError::Precondition(format!("odd mode needs l > k, got l={l}, k={k}")));
            }
            if !is_l_free(g, &[2 * l + 1]) {
                return Err(CheckError::Precondition(format!("graph contains C_{}", 2 * l + 1)));
            }
        }
    }
    let lhs = partition_cycle_count(g, classes).unwrap() as u128;
    let p_front = partition_path_count(g, &[
        classes[0].clone(),
        classes[1].clone(),
        classes[2].clone(),
        classes[3].clone(),
    ])
    .unwrap() as u128;
    let p_back = partition_path_count(g, &[
        classes[s - 1].clone(),
        classes[0].clone(),
        classes[1].clone(),
        classes[2].clone(),
    ])
    .unwrap() as u128;
    let n = g.n() as u128;
    let rhs = (l as u128).pow((k - 1) as u32) * n.pow((k - 2) as u32) * (p_front + p_back);
    Ok(CheckResult::from_u128(
        "forbidden-cycles-main",
        format!("n={}, k={k}, l={l}, mode={mode:?}", g.n()),
        lhs,
        rhs,
        g,
    ))
}

/// In a `C_{2l}`-free graph, every vertex ends at most `4(l-1)n` two-edge
/// paths.
pub fn check_p2_bound(g: &Graph, l: usize) -> Result<CheckResult, CheckError> {
    assert!(l >= 2);
    if !is_l_free(g, &[2 * l]) {
        return Err(CheckError::Precondition(format!("graph contains C_{}", 2 * l)));
    }
    let lhs = (0..g.n())
        .map(|v| paths_from(g, v, 2).unwrap())
        .max()
        .unwrap_or(0) as u128;
    let rhs = 4 * (l as u128 - 1) * g.n() as u128;
    Ok(CheckResult::from_u128(
        "p2-bound",
        format!("n={}, l={l}", g.n()),
        lhs,
        rhs,
        g,
    ))
}

/// In a `C_{2l}`-free graph the triangle count is at most
/// `(2l-3)/3 e(G)`; compared as `3 #C_3 <= (2l-3) e` to stay in integers.
pub fn check_triangle_bound(g: &Graph, l: usize) -> Result<CheckResult, CheckError> {
    assert!(l >= 2);
    if !is_l_free(g, &[2 * l]) {
        return Err(CheckError::Precondition(format!("graph contains C_{}", 2 * l)));
    }
    let triples = 3 * triangle_count(g) as u128;
    let bound = (2 * l as u128 - 3) * g.edge_count() as u128;
    let mut res = CheckResult::from_u128(
        "triangle-bound",
        format!("n={}, l={l}", g.n()),
        triples,
        bound,
        g,
    );
    // report the natural scale, the decision already happened exactly
    res.lhs = triangle_count(g) as f64;
    res.rhs = bound as f64 / 3.0;
    Ok(res)
}

/// Edge counts above `(t-1)/2 n` force a path with `t` edges; the check
/// fails only when the bound is exceeded and no witness path is found.
pub fn check_erdos_gallai(g: &Graph, t: usize) -> CheckResult {
    assert!(t >= 1);
    let instance = format!("n={}, m={}, t={t}", g.n(), g.edge_count());
    let exceeded = 2 * g.edge_count() as u128 > (t as u128 - 1) * g.n() as u128;
    if !exceeded {
        return CheckResult {
            check: "erdos-gallai".into(),
            instance,
            lhs: g.edge_count() as f64,
            rhs: (t as f64 - 1.0) / 2.0 * g.n() as f64,
            outcome: CheckOutcome::Pass,
            counterexample: None,
        };
    }
    let found = find_path_with_edges(g, t).is_some();
    CheckResult {
        check: "erdos-gallai".into(),
        instance,
        lhs: g.edge_count() as f64,
        rhs: (t as f64 - 1.0) / 2.0 * g.n() as f64,
        outcome: if found { CheckOutcome::Pass } else { CheckOutcome::Fail },
        counterexample: if found { None } else { Some(encode(g)) },
    }
}

/// Skew even-cycle bound for `C_{2l}`-free bipartite graphs with sides
/// `m <= n`: `e <= (2l-3)((nm)^{1/2 + 1/2l} + 2n)` for odd `l` and
/// `e <= (2l-3)(n^{1/2} m^{1/2 + 1/l} + 2n)` for even `l`.
pub fn check_zarankiewicz(bip: &BipartiteGraph, l: usize) -> Result<CheckResult, CheckError> {
    assert!(l >= 2);
    let flat = bip.to_graph();
    if !is_l_free(&flat, &[2 * l]) {
        return Err(CheckError::Precondition(format!("bipartite graph contains C_{}", 2 * l)));
    }
    let n = bip.side_a().max(bip.side_b()) as f64;
    let m = bip.side_a().min(bip.side_b()) as f64;
    let lf = l as f64;
    let bound = if l % 2 == 1 {
        (2.0 * lf - 3.0) * ((n * m).powf(0.5 + 1.0 / (2.0 * lf)) + 2.0 * n)
    } else {
        (2.0 * lf - 3.0) * (n.sqrt() * m.powf(0.5 + 1.0 / lf) + 2.0 * n)
    };
    Ok(CheckResult::from_f64(
        "zarankiewicz",
        format!("sides {}x{}, l={l}", bip.side_a(), bip.side_b()),
        bip.edge_count() as f64,
        bound,
        &flat,
    ))
}

/// Result of the four-layer trimming construction.
#[derive(Clone, Debug)]
pub struct TrimmingSets {
    pub y_trim: Vec<usize>,
    pub z_trim: Vec<usize>,
    pub edge_counts: [u64; 4],
    pub residual_paths: u64,
    pub result: CheckResult,
}

/// Degree-threshold trimming over four disjoint layers whose consecutive
/// bipartite graphs are `C_{2l}`-free: vertices of `Y` with at least
/// `l n^{2/(l+2)}` (even `l`; exponent `2/(l+1)` odd) neighbors in `X` form
/// `Y'`, symmetrically `Z'` against `W`. The trimmed layers leave
/// `O(l n)` edges at the removed vertices and `O(l^2 n^2)` four-layer paths;
/// `slack` stands in for the absolute constants.
pub fn find_trimming_sets(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    z: &VertexSet,
    w: &VertexSet,
    l: usize,
    slack: f64,
) -> Result<TrimmingSets, CheckError> {
    assert!(l >= 3);
    for (a, b, name) in [(x, y, "X-Y"), (y, z, "Y-Z"), (z, w, "Z-W")] {
        let cross = cross_graph(g, a, b);
        if !is_l_free(&cross, &[2 * l]) {
            return Err(CheckError::Precondition(format!(
                "bipartite layer {name} contains C_{}",
                2 * l
            )));
        }
    }
    let n = g.n() as f64;
    let exponent = if l % 2 == 0 {
        2.0 / (l as f64 + 2.0)
    } else {
        2.0 / (l as f64 + 1.0)
    };
    let threshold = l as f64 * n.powf(exponent);
    let y_trim: Vec<usize> = y
        .iter()
        .filter(|&v| g.degree_in(v, x) as f64 >= threshold)
        .collect();
    let z_trim: Vec<usize> = z
        .iter()
        .filter(|&v| g.degree_in(v, w) as f64 >= threshold)
        .collect();
    let y_trim_set = VertexSet::from_iter(g.n(), y_trim.iter().copied());
    let z_trim_set = VertexSet::from_iter(g.n(), z_trim.iter().copied());
    let mut y_rest = VertexSet::empty(g.n());
    for v in y.iter() {
        if !y_trim_set.contains(v) {
            y_rest.insert(v);
        }
    }
    let mut z_rest = VertexSet::empty(g.n());
    for v in z.iter() {
        if !z_trim_set.contains(v) {
            z_rest.insert(v);
        }
    }
    let edge_counts = [
        g.edges_between(&y_trim_set, x) as u64,
        g.edges_between(&y_trim_set, z) as u64,
        g.edges_between(&z_trim_set, y) as u64,
        g.edges_between(&z_trim_set, w) as u64,
    ];
    let residual_paths =
        partition_path_count(g, &[x.clone(), y_rest, z_rest, w.clone()]).unwrap();
    let edge_scale = l as f64 * n;
    let path_scale = (l * l) as f64 * n * n;
    let worst_ratio = edge_counts
        .iter()
        .map(|&e| e as f64 / edge_scale)
        .fold(residual_paths as f64 / path_scale, f64::max);
    let result = CheckResult::from_f64(
        "trimming-sets",
        format!(
            "n={}, l={l}, |Y'|={}, |Z'|={}, edges={edge_counts:?}, residual={residual_paths}",
            g.n(),
            y_trim.len(),
            z_trim.len()
        ),
        worst_ratio,
        slack,
        g,
    );
    Ok(TrimmingSets {
        y_trim,
        z_trim,
        edge_counts,
        residual_paths,
        result,
    })
}

fn cross_graph(g: &Graph, a: &VertexSet, b: &VertexSet) -> Graph {
    let averts: Vec<usize> = a.iter().collect();
    let bverts: Vec<usize> = b.iter().collect();
    let mut cross = Graph::empty(averts.len() + bverts.len());
    for (i, &u) in averts.iter().enumerate() {
        for (j, &v) in bverts.iter().enumerate() {
            if g.has_edge(u, v) {
                cross.add_edge(i, averts.len() + j);
            }
        }
    }
    cross
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::blow_up;

    fn sets(n: usize, groups: &[&[usize]]) -> Vec<VertexSet> {
        groups
            .iter()
            .map(|g| VertexSet::from_iter(n, g.iter().copied()))
            .collect()
    }

    #[test]
    fn identity_on_triangle() {
        let res = check_random_partition_identity(&Graph::complete(3), 3, 1 << 20).unwrap();
        assert!(res.passed());
        // sum over 27 assignments must be 6
        assert!(res.instance.contains("cycle sum 6"));
    }

    #[test]
    fn identity_on_square_with_four_classes() {
        let res = check_random_partition_identity(&Graph::cycle(4), 4, 1 << 20).unwrap();
        assert!(res.passed());
        assert!(res.instance.contains("cycle sum 8"));
    }

    #[test]
    fn identity_budget() {
        assert!(matches!(
            check_random_partition_identity(&Graph::empty(12), 5, 1000),
            Err(CheckError::Budget(_))
        ));
    }

    #[test]
    fn cycle_partition_inequality_on_blowup() {
        // (2,1,2,1,1) keeps the host C7-free; the all-2 blow-up is not
        // (0a-1a-0b-1b-2-3-4 is a 7-cycle) and must be rejected
        let (g, part) = blow_up(&Graph::cycle(5), &[2, 1, 2, 1, 1]).unwrap();
        let classes = part.class_sets();
        let res = check_cycle_partition_inequality(&g, &classes, 2).unwrap();
        assert!(res.passed());
        assert_eq!(res.lhs, 4.0);
        assert_eq!(res.rhs, 17.0);

        let (g2, part2) = blow_up(&Graph::cycle(5), &[2; 5]).unwrap();
        assert!(matches!(
            check_cycle_partition_inequality(&g2, &part2.class_sets(), 2),
            Err(CheckError::Precondition(_))
        ));
    }

    #[test]
    fn cycle_partition_inequality_rejects_bad_host() {
        let g = Graph::cycle(7);
        let classes = sets(7, &[&[0], &[1], &[2], &[3], &[4]]);
        assert!(matches!(
            check_cycle_partition_inequality(&g, &classes, 2),
            Err(CheckError::Precondition(_))
        ));
    }

    #[test]
    fn lambda_path_base_case_restates_hypothesis() {
        let g = Graph::complete_bipartite(2, 3);
        let classes = sets(5, &[&[0, 1], &[2, 3, 4]]);
        let res = check_lambda_path_bound(&g, &classes, 2);
        assert!(res.passed());
    }

    #[test]
    fn lambda_path_on_path_blowup() {
        let (g, part) = blow_up(&Graph::path(4), &[1, 2, 1, 2]).unwrap();
        let res = check_lambda_path_bound(&g, &part.class_sets(), 2);
        assert!(res.passed());
    }

    #[test]
    fn lambda_path_not_applicable_when_dense() {
        let g = Graph::complete(8);
        let classes = sets(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]);
        let res = check_lambda_path_bound(&g, &classes, 1);
        assert_eq!(res.outcome, CheckOutcome::NotApplicable);
    }

    #[test]
    fn forbidden_cycles_trivial_zero() {
        let g = Graph::empty(10);
        let classes = sets(10, &[&[0, 1], &[2, 3], &[4, 5], &[6, 7], &[8, 9]]);
        let res = check_forbidden_cycles_main(&g, &classes, 2, 3, FreeMode::EvenFree).unwrap();
        assert!(res.passed());
        assert_eq!(res.lhs, 0.0);
        assert_eq!(res.rhs, 0.0);
    }

    #[test]
    fn forbidden_cycles_rejects_wrong_mode() {
        let g = Graph::cycle(9);
        let classes = sets(
            9,
            &[&[0, 1], &[2, 3], &[4, 5], &[6, 7], &[8]],
        );
        assert!(matches!(
            check_forbidden_cycles_main(&g, &classes, 2, 4, FreeMode::OddFree),
            Err(CheckError::Precondition(_))
        ));
        // l <= k is rejected in odd mode
        assert!(matches!(
            check_forbidden_cycles_main(&Graph::empty(9), &classes, 2, 2, FreeMode::OddFree),
            Err(CheckError::Precondition(_))
        ));
    }

    #[test]
    fn p2_bound_on_star() {
        let mut g = Graph::empty(8);
        for v in 1..8 {
            g.add_edge(0, v);
        }
        let res = check_p2_bound(&g, 2).unwrap();
        assert!(res.passed());
        assert_eq!(res.lhs, 6.0); // a leaf ends deg-1 = 6 two-edge paths
    }

    #[test]
    fn triangle_bound_tight_on_k3() {
        let res = check_triangle_bound(&Graph::complete(3), 2).unwrap();
        assert!(res.passed());
        assert_eq!(res.lhs, 1.0);
        assert_eq!(res.rhs, 1.0);
    }

    #[test]
    fn erdos_gallai_on_k4() {
        let res = check_erdos_gallai(&Graph::complete(4), 3);
        assert!(res.passed());
        // vacuous case
        let res = check_erdos_gallai(&Graph::empty(5), 3);
        assert!(res.passed());
    }

    #[test]
    fn zarankiewicz_on_matching() {
        let mut bip = BipartiteGraph::empty(6, 6);
        for i in 0..6 {
            bip.add_edge(i, i);
        }
        let res = check_zarankiewicz(&bip, 3).unwrap();
        assert!(res.passed());
        // C6-containing input is a precondition failure
        let mut bad = BipartiteGraph::empty(3, 3);
        for u in 0..3 {
            for v in 0..3 {
                if u != v {
                    bad.add_edge(u, v);
                }
            }
        }
        assert!(matches!(
            check_zarankiewicz(&bad, 3),
            Err(CheckError::Precondition(_))
        ));
    }

    #[test]
    fn trimming_on_empty_layers() {
        let g = Graph::empty(20);
        let layers = sets(20, &[&[0, 1, 2], &[3, 4, 5], &[6, 7, 8], &[9, 10, 11]]);
        let trims =
            find_trimming_sets(&g, &layers[0], &layers[1], &layers[2], &layers[3], 3, 64.0)
                .unwrap();
        assert!(trims.result.passed());
        assert!(trims.y_trim.is_empty() && trims.z_trim.is_empty());
        assert_eq!(trims.edge_counts, [0, 0, 0, 0]);
        assert_eq!(trims.residual_paths, 0);
    }

    #[test]
    fn trimming_catches_the_hub() {
        // a single Y-hub adjacent to everything in X and Z must land in Y'
        let nx = 30;
        let n = 1 + 3 * nx;
        let mut g = Graph::empty(n);
        let hub = 0;
        let x: Vec<usize> = (1..=nx).collect();
        let z: Vec<usize> = (nx + 1..=2 * nx).collect();
        let w: Vec<usize> = (2 * nx + 1..=3 * nx).collect();
        for &xx in &x {
            g.add_edge(hub, xx);
        }
        for &zz in &z {
            g.add_edge(hub, zz);
        }
        // sparse Z-W matching keeps those layers quiet
        for i in 0..nx {
            g.add_edge(z[i], w[i]);
        }
        let xs = VertexSet::from_iter(n, x.iter().copied());
        let ys = VertexSet::from_iter(n, [hub]);
        let zs = VertexSet::from_iter(n, z.iter().copied());
        let ws = VertexSet::from_iter(n, w.iter().copied());
        let trims = find_trimming_sets(&g, &xs, &ys, &zs, &ws, 3, 64.0).unwrap();
        assert_eq!(trims.y_trim, vec![hub]);
        assert_eq!(trims.residual_paths, 0);
        assert!(trims.result.passed());
    }
}
