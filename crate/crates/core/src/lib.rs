//! Exact subgraph counting for cycles and paths, forbidden-cycle lower-bound
//! constructions, exhaustive small-n extremal search, mechanical inequality
//! verification, and bipartiteness-testing experiments, all on bitset-backed
//! simple graphs with reproducible seeded randomness.

pub mod bits;
pub mod field;
pub mod graph;
pub mod graph6;
pub mod oddcycle;
pub mod pattern;
pub mod checks;
pub mod constructions;
pub mod corpus;
pub mod counting;
pub mod detect;
pub mod distance;
pub mod extremal;
pub mod maxcut;
pub mod rng;
pub mod suites;
pub mod testing;

pub use graph::{blow_up, random_partition, sample_induced, BipartiteGraph, Graph, VertexPartition};
