//! Simple undirected graphs over vertices `0..n`, stored as per-vertex bit
//! rows. Values are immutable once built (construction helpers take `&mut`
//! before the graph is shared); all randomized helpers take an explicit
//! generator so results are reproducible from a seed.

use crate::bits::{and_count, iter_words, words_for, VertexSet};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("blow-up size list has length {got}, base graph has {expected} vertices")]
    SizeListMismatch { got: usize, expected: usize },
    #[error("blow-up class sizes must be >= 1")]
    ZeroClassSize,
    #[error("sample size {q} exceeds vertex count {n}")]
    SampleTooLarge { q: usize, n: usize },
    #[error("partition needs at least one class")]
    NoClasses,
}

/// Simple undirected graph: symmetric adjacency, no loops, no multi-edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    row_words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let row_words = words_for(n).max(1);
        Graph {
            n,
            row_words,
            bits: vec![0; n * row_words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        debug_assert!(v < self.n);
        &self.bits[v * self.row_words..(v + 1) * self.row_words]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert_ne!(u, v, "loops are unrepresentable");
        self.bits[u * self.row_words + v / 64] |= 1u64 << (v % 64);
        self.bits[v * self.row_words + u / 64] |= 1u64 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v);
        self.bits[u * self.row_words + v / 64] &= !(1u64 << (v % 64));
        self.bits[v * self.row_words + u / 64] &= !(1u64 << (u % 64));
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        (self.bits[u * self.row_words + v / 64] >> (v % 64)) & 1 != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v)).sum();
        total / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_words(self.row(v))
    }

    /// `|N(v) ∩ s|`.
    #[inline]
    pub fn degree_in(&self, v: usize, s: &VertexSet) -> usize {
        and_count(self.row(v), s.words())
    }

    #[inline]
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        and_count(self.row(u), self.row(v))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of edges with both endpoints in distinct sets `a`, `b`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| self.degree_in(v, b)).sum()
    }

    /// Number of edges with both endpoints inside `s`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.degree_in(v, s)).sum::<usize>() / 2
    }

    /// Induced subgraph on `verts` (ascending), relabeled order-preservingly.
    pub fn induced(&self, verts: &[usize]) -> Result<Graph, GraphError> {
        let mut sorted = verts.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v, self.n));
            }
        }
        let mut g = Graph::empty(sorted.len());
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }
}

/// Uniform random `q`-subset of `0..n`, ascending. Deterministic given `rng`.
pub fn sample_vertices<R: Rng>(n: usize, q: usize, rng: &mut R) -> Result<Vec<usize>, GraphError> {
    if q > n {
        return Err(GraphError::SampleTooLarge { q, n });
    }
    let mut chosen = rand::seq::index::sample(rng, n, q).into_vec();
    chosen.sort_unstable();
    Ok(chosen)
}

/// Induced subgraph on a uniformly random `q`-subset.
pub fn sample_induced<R: Rng>(g: &Graph, q: usize, rng: &mut R) -> Result<Graph, GraphError> {
    let verts = sample_vertices(g.n(), q, rng)?;
    g.induced(&verts)
}

/// Disjoint ordered classes `U_0, ..., U_{s-1}` covering the vertices of a
/// graph. Class order is significant; classes may be empty.
#[derive(Clone, Debug)]
pub struct VertexPartition {
    class_count: usize,
    class_of: Vec<usize>,
}

impl VertexPartition {
    pub fn new(class_count: usize, class_of: Vec<usize>) -> Result<Self, GraphError> {
        if class_count == 0 {
            return Err(GraphError::NoClasses);
        }
        assert!(
            class_of.iter().all(|&c| c < class_count),
            "class index out of range"
        );
        Ok(VertexPartition {
            class_count,
            class_of,
        })
    }

    #[inline]
    pub fn class_count(&self) -> usize {
        self.class_count
    }

    #[inline]
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.class_count];
        for &c in &self.class_of {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn class_sets(&self) -> Vec<VertexSet> {
        let n = self.class_of.len();
        let mut sets = vec![VertexSet::empty(n); self.class_count];
        for (v, &c) in self.class_of.iter().enumerate() {
            sets[c].insert(v);
        }
        sets
    }
}

/// Each vertex lands in one of `s` classes independently and uniformly.
pub fn random_partition<R: Rng>(
    g: &Graph,
    s: usize,
    rng: &mut R,
) -> Result<VertexPartition, GraphError> {
    if s == 0 {
        return Err(GraphError::NoClasses);
    }
    let class_of = (0..g.n()).map(|_| rng.random_range(0..s)).collect();
    VertexPartition::new(s, class_of)
}

/// Replace each base vertex `i` by an independent class of `sizes[i]`
/// vertices; base edges become complete bipartite graphs between classes.
/// Returns the blown-up graph together with its class partition.
pub fn blow_up(base: &Graph, sizes: &[usize]) -> Result<(Graph, VertexPartition), GraphError> {
    if sizes.len() != base.n() {
        return Err(GraphError::SizeListMismatch {
            got: sizes.len(),
            expected: base.n(),
        });
    }
    if sizes.iter().any(|&s| s == 0) {
        return Err(GraphError::ZeroClassSize);
    }
    let n: usize = sizes.iter().sum();
    let mut start = Vec::with_capacity(base.n());
    let mut acc = 0;
    for &s in sizes {
        start.push(acc);
        acc += s;
    }
    let mut g = Graph::empty(n);
    let mut class_of = vec![0; n];
    for i in 0..base.n() {
        for x in start[i]..start[i] + sizes[i] {
            class_of[x] = i;
        }
    }
    for i in 0..base.n() {
        for j in base.neighbors(i) {
            if j > i {
                for x in start[i]..start[i] + sizes[i] {
                    for y in start[j]..start[j] + sizes[j] {
                        g.add_edge(x, y);
                    }
                }
            }
        }
    }
    let part = VertexPartition::new(base.n(), class_of)?;
    Ok((g, part))
}

/// Bipartite graph with cross edges only; convertible to a `Graph` with side A
/// on `0..a` and side B on `a..a+b`.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    a: usize,
    b: usize,
    // adjacency rows for side A over side-B columns
    rows: Vec<u64>,
    row_words: usize,
}

impl BipartiteGraph {
    pub fn empty(a: usize, b: usize) -> Self {
        let row_words = words_for(b).max(1);
        BipartiteGraph {
            a,
            b,
            rows: vec![0; a * row_words],
            row_words,
        }
    }

    #[inline]
    pub fn side_a(&self) -> usize {
        self.a
    }

    #[inline]
    pub fn side_b(&self) -> usize {
        self.b
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.a && v < self.b);
        self.rows[u * self.row_words + v / 64] |= 1u64 << (v % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u * self.row_words + v / 64] >> (v % 64)) & 1 != 0
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.a {
            let row = &self.rows[u * self.row_words..(u + 1) * self.row_words];
            for v in iter_words(row) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.a + self.b);
        for (u, v) in self.edges() {
            g.add_edge(u, self.a + v);
        }
        g
    }
}
