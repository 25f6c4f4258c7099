//! Target patterns for counting and search: the cycle `C_k` on `k` vertices
//! or the path `P_k` with `k` edges.

use crate::counting::{cycle_copies, path_copies};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pattern {
    /// Cycle on `k >= 3` vertices.
    Cycle(usize),
    /// Path with `k >= 1` edges (`k + 1` vertices).
    Path(usize),
}

impl Pattern {
    pub fn is_valid(&self) -> bool {
        match *self {
            Pattern::Cycle(k) => k >= 3,
            Pattern::Path(k) => k >= 1,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            Pattern::Cycle(k) => k,
            Pattern::Path(k) => k + 1,
        }
    }

    /// Independence number of the pattern graph.
    pub fn independence_number(&self) -> usize {
        match *self {
            Pattern::Cycle(k) => k / 2,
            Pattern::Path(k) => (k + 2) / 2,
        }
    }

    /// A maximum independent set of the pattern: every second position.
    pub fn max_independent_positions(&self) -> Vec<usize> {
        (0..self.independence_number()).map(|i| 2 * i).collect()
    }

    pub fn base_graph(&self) -> Graph {
        assert!(self.is_valid());
        match *self {
            Pattern::Cycle(k) => Graph::cycle(k),
            Pattern::Path(k) => Graph::path(k + 1),
        }
    }

    /// Exact number of copies of the pattern in `g`.
    pub fn count_in(&self, g: &Graph) -> u64 {
        assert!(self.is_valid());
        match *self {
            Pattern::Cycle(k) => cycle_copies(g, k),
            Pattern::Path(k) => path_copies(g, k),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Pattern::Cycle(k) => write!(f, "C{k}"),
            Pattern::Path(k) => write!(f, "P{k}"),
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct PatternParseError(pub String);

impl fmt::Display for PatternParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse pattern {:?} (expected C<k> or P<k>)", self.0)
    }
}

impl std::error::Error for PatternParseError {}

impl FromStr for Pattern {
    type Err = PatternParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PatternParseError(s.to_string());
        let (head, num) = s.split_at(s.len().min(1));
        let k: usize = num.parse().map_err(|_| err())?;
        let p = match head {
            "C" | "c" => Pattern::Cycle(k),
            "P" | "p" => Pattern::Path(k),
            _ => return Err(err()),
        };
        if !p.is_valid() {
            return Err(err());
        }
        Ok(p)
    }
}
