//! graph6 text encoding: a size header followed by the upper triangle of the
//! adjacency matrix read column by column, packed into 6-bit chunks offset by
//! 63. Bit-exact with the standard layout; files hold one graph per line.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 byte {0:#x} outside the printable range 63..=126")]
    BadByte(u8),
    #[error("truncated graph6 string: expected {expected} data bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing data after graph on {0} vertices")]
    TrailingData(usize),
    #[error("vertex count {0} not supported by this encoder")]
    UnsupportedOrder(u64),
}

const MAX_ORDER: u64 = 258_047; // two-tier size header

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    assert!(
        (n as u64) <= MAX_ORDER,
        "graph6 encoding supported for n <= {MAX_ORDER}"
    );
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        let n = n as u32;
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(out).unwrap()
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte(b));
        }
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Graph6Error::UnsupportedOrder(u64::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                got: bytes.len(),
            });
        }
        let n = (((bytes[1] - 63) as u64) << 12)
            | (((bytes[2] - 63) as u64) << 6)
            | ((bytes[3] - 63) as u64);
        (n, 4)
    } else {
        ((bytes[0] - 63) as u64, 1)
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let n = n as usize;
    let pair_bits = n * n.saturating_sub(1) / 2;
    let expected = pair_bits.div_ceil(6);
    if bytes.len() - pos < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: bytes.len() - pos,
        });
    }
    if bytes.len() - pos > expected {
        return Err(Graph6Error::TrailingData(n));
    }
    let mut g = Graph::empty(n);
    let mut acc = 0u32;
    let mut nbits = 0;
    let mut next_bit = || {
        if nbits == 0 {
            acc = (bytes[pos] - 63) as u32;
            pos += 1;
            nbits = 6;
        }
        nbits -= 1;
        (acc >> nbits) & 1 == 1
    };
    for j in 1..n {
        for i in 0..j {
            if next_bit() {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Parse a newline-separated multi-graph file body.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode)
        .collect()
}

// graphs serialize as their graph6 string
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&encode(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        decode(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{sample_induced, Graph};
    use crate::rng::master_rng;
    use rand::Rng;

    #[test]
    fn k3_encodes_to_frozen_vector() {
        // hand-computed from the byte layout: header 63+3 = 'B',
        // bits 111 padded to 111000 -> 63+56 = 'w'
        assert_eq!(encode(&Graph::complete(3)), "Bw");
    }

    #[test]
    fn empty_graph_on_zero_vertices() {
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(decode("?").unwrap().n(), 0);
    }

    #[test]
    fn known_five_vertex_vector() {
        // independently produced by another implementation of the format
        let g = decode("DQc").unwrap();
        assert_eq!(g.n(), 5);
        let mut edges = g.edges();
        edges.sort_unstable();
        assert_eq!(edges, vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn roundtrip_all_graphs_up_to_7_vertices() {
        for n in 0..=7usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let m = pairs.len();
            // all labeled graphs for n <= 5; random screens above
            let masks: Vec<u64> = if n <= 5 {
                (0..1u64 << m).collect()
            } else {
                let mut rng = master_rng(99);
                (0..2000).map(|_| rng.random_range(0..1u64 << m)).collect()
            };
            for mask in masks {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (mask >> i) & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges);
                assert_eq!(decode(&encode(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn roundtrip_medium_order() {
        let big = Graph::cycle(100);
        assert_eq!(decode(&encode(&big)).unwrap(), big);
        let mut rng = master_rng(5);
        let s = sample_induced(&big, 70, &mut rng).unwrap();
        assert_eq!(decode(&encode(&s)).unwrap(), s);
    }

    #[test]
    fn decode_rejects_malformed() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(decode("B"), Err(Graph6Error::Truncated { .. })));
        assert!(matches!(decode("Bww"), Err(Graph6Error::TrailingData(_))));
        assert!(matches!(decode("B\x1f"), Err(Graph6Error::BadByte(_))));
    }

    #[test]
    fn multi_graph_lines() {
        let text = format!("{}\n{}\n", encode(&Graph::cycle(4)), encode(&Graph::complete(3)));
        let gs = decode_lines(&text).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0], Graph::cycle(4));
        assert_eq!(gs[1], Graph::complete(3));
    }
}
