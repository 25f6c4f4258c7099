//! Edit distances to graph properties: distance to bipartiteness (edges minus
//! max cut), exact distance to `C_l`-freeness (minimum hitting set over the
//! enumerated copies, branch and bound), and the sampled max-cut density.

use crate::counting::{enumerate_cycles, CountError};
use crate::graph::{sample_vertices, Graph};
use crate::maxcut::{max_cut, MaxCutError, MaxCutMethod};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DistanceError {
    #[error(transparent)]
    MaxCut(#[from] MaxCutError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error("sample size {q} exceeds vertex count {n}")]
    SampleTooLarge { q: usize, n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BipartiteDistance {
    /// Edge deletions needed to reach bipartiteness. An upper bound when the
    /// heuristic cut is used, exact otherwise.
    pub edges_to_remove: u64,
    /// `edges_to_remove / n^2`.
    pub farness: f64,
    pub exact: bool,
}

/// Distance to bipartiteness: `e(G) - maxcut(G)`, normalized by `n^2`.
pub fn bipartite_distance<R: Rng>(
    g: &Graph,
    method: MaxCutMethod,
    rng: &mut R,
) -> Result<BipartiteDistance, DistanceError> {
    let cut = max_cut(g, method, rng)?;
    let dist = g.edge_count() as u64 - cut;
    let n = g.n() as f64;
    Ok(BipartiteDistance {
        edges_to_remove: dist,
        farness: if g.n() == 0 { 0.0 } else { dist as f64 / (n * n) },
        exact: matches!(method, MaxCutMethod::Exact { .. }),
    })
}

/// Exact minimum number of edge deletions destroying every copy of `C_len`.
/// Enumerates the copies (error above `budget`), then solves the minimum
/// hitting set over their edge sets by branch and bound.
pub fn f_free_distance(g: &Graph, len: usize, budget: usize) -> Result<u64, DistanceError> {
    let copies = enumerate_cycles(g, len, budget)?;
    if copies.is_empty() {
        return Ok(0);
    }
    // index edges that occur in at least one copy
    let mut edge_ids: std::collections::HashMap<(usize, usize), usize> =
        std::collections::HashMap::new();
    let mut copy_sets: Vec<Vec<usize>> = Vec::with_capacity(copies.len());
    for edges in &copies {
        let set = edges
            .iter()
            .map(|&e| {
                let next = edge_ids.len();
                *edge_ids.entry(e).or_insert(next)
            })
            .collect();
        copy_sets.push(set);
    }
    let mut solver = HittingSet::new(copy_sets, edge_ids.len());
    Ok(solver.solve())
}

// Minimum hitting set by branch and bound. On an uncovered set, branch
// "delete edge e_i, with e_1..e_{i-1} forbidden from the solution"; a set
// whose edges are all forbidden kills its branch outright.
struct HittingSet {
    copy_sets: Vec<Vec<usize>>,
    with_edge: Vec<Vec<u32>>, // edge -> copies containing it
    cover_count: Vec<u32>,    // deleted edges per copy
    deleted: Vec<bool>,
    forbidden: Vec<bool>,
    best: u64,
}

impl HittingSet {
    fn new(copy_sets: Vec<Vec<usize>>, edge_count: usize) -> Self {
        let mut with_edge = vec![Vec::new(); edge_count];
        for (ci, c) in copy_sets.iter().enumerate() {
            for &e in c {
                with_edge[e].push(ci as u32);
            }
        }
        let cover_count = vec![0; copy_sets.len()];
        HittingSet {
            deleted: vec![false; edge_count],
            forbidden: vec![false; edge_count],
            best: 0,
            copy_sets,
            with_edge,
            cover_count,
        }
    }

    fn solve(&mut self) -> u64 {
        self.best = self.greedy_cover();
        self.branch(0);
        self.best
    }

    // upper bound: repeatedly delete the edge covering the most live sets
    fn greedy_cover(&self) -> u64 {
        let mut killed = vec![false; self.copy_sets.len()];
        let mut alive = self.copy_sets.len();
        let mut freq: Vec<usize> = self.with_edge.iter().map(Vec::len).collect();
        let mut steps = 0u64;
        while alive > 0 {
            let e = (0..freq.len()).max_by_key(|&e| freq[e]).unwrap();
            steps += 1;
            for &ci in &self.with_edge[e] {
                let ci = ci as usize;
                if !killed[ci] {
                    killed[ci] = true;
                    alive -= 1;
                    for &e2 in &self.copy_sets[ci] {
                        freq[e2] -= 1;
                    }
                }
            }
        }
        steps
    }

    // lower bound: greedily packed edge-disjoint uncovered sets, scanning a
    // bounded prefix so node cost stays flat
    fn lower_bound(&self, used_scratch: &mut [bool]) -> u64 {
        used_scratch.iter_mut().for_each(|u| *u = false);
        let mut count = 0u64;
        let mut scanned = 0;
        'outer: for (ci, c) in self.copy_sets.iter().enumerate() {
            if self.cover_count[ci] > 0 {
                continue;
            }
            scanned += 1;
            if scanned > 4000 {
                break;
            }
            for &e in c {
                if used_scratch[e] {
                    continue 'outer;
                }
            }
            for &e in c {
                used_scratch[e] = true;
            }
            count += 1;
        }
        count
    }

    fn delete(&mut self, e: usize) {
        self.deleted[e] = true;
        for i in 0..self.with_edge[e].len() {
            let ci = self.with_edge[e][i] as usize;
            self.cover_count[ci] += 1;
        }
    }

    fn undelete(&mut self, e: usize) {
        self.deleted[e] = false;
        for i in 0..self.with_edge[e].len() {
            let ci = self.with_edge[e][i] as usize;
            self.cover_count[ci] -= 1;
        }
    }

    fn branch(&mut self, size: u64) {
        if size >= self.best {
            return;
        }
        // pick the uncovered set with the fewest branchable edges
        let mut target: Option<usize> = None;
        let mut target_open = usize::MAX;
        for (ci, c) in self.copy_sets.iter().enumerate() {
            if self.cover_count[ci] > 0 {
                continue;
            }
            let open = c.iter().filter(|&&e| !self.forbidden[e]).count();
            if open == 0 {
                return; // unhittable set on this branch
            }
            if open < target_open {
                target_open = open;
                target = Some(ci);
                if open == 1 {
                    break;
                }
            }
        }
        let Some(ci) = target else {
            self.best = size;
            return;
        };
        if size + 1 >= self.best {
            return;
        }
        let mut scratch = vec![false; self.deleted.len()];
        if size + self.lower_bound(&mut scratch) >= self.best {
            return;
        }
        let edges: Vec<usize> = self.copy_sets[ci]
            .iter()
            .copied()
            .filter(|&e| !self.forbidden[e])
            .collect();
        let mut newly_forbidden = Vec::with_capacity(edges.len());
        for &e in &edges {
            self.delete(e);
            self.branch(size + 1);
            self.undelete(e);
            self.forbidden[e] = true;
            newly_forbidden.push(e);
        }
        for e in newly_forbidden {
            self.forbidden[e] = false;
        }
    }
}

/// Max-cut density of a uniform `q`-subset's induced subgraph, exact when the
/// sample fits `exact_limit` and by local search otherwise.
pub fn maxcut_sample_estimate<R: Rng>(
    g: &Graph,
    q: usize,
    exact_limit: usize,
    restarts: usize,
    rng: &mut R,
) -> Result<f64, DistanceError> {
    if q > g.n() {
        return Err(DistanceError::SampleTooLarge { q, n: g.n() });
    }
    if q == 0 {
        return Ok(0.0);
    }
    let verts = sample_vertices(g.n(), q, rng).map_err(|_| DistanceError::SampleTooLarge {
        q,
        n: g.n(),
    })?;
    let sub = g.induced(&verts).expect("sampled vertices are in range");
    let method = if q <= exact_limit {
        MaxCutMethod::Exact { limit: exact_limit }
    } else {
        MaxCutMethod::Heuristic { restarts }
    };
    let cut = max_cut(&sub, method, rng)?;
    Ok(cut as f64 / (q as f64 * q as f64))
}
