//! graph6 encoding.
//!
//! A record is the order (one byte `n + 63` for `n <= 62`, otherwise `~`
//! followed by three bytes carrying 18 bits) and then the upper triangle in
//! column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits
//! per byte, most significant first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

impl Graph {
    /// Standard graph6 text, without header or trailing newline.
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
        if n <= 62 {
            out.push(n as u8 + 63);
        } else {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 0x3f) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        // Every byte is in 63..=126.
        String::from_utf8(out).expect("graph6 output is ASCII")
    }

    /// Parses one graph6 record. An optional `>>graph6<<` header and
    /// trailing line terminators are accepted; padding bits are ignored.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let start = if text.starts_with(HEADER) {
            HEADER.len()
        } else {
            0
        };
        let body = text[start..].trim_end_matches(['\n', '\r']);
        let bytes = body.as_bytes();
        if bytes.is_empty() {
            return Err(parse_err(start, "empty record"));
        }
        for (i, &b) in bytes.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(parse_err(
                    start + i,
                    format!("byte {b:#04x} outside 63..=126"),
                ));
            }
        }
        let six = |i: usize| (bytes[i] - 63) as usize;

        let (order, mut pos) = if bytes[0] != 126 {
            (six(0), 1)
        } else if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return Err(parse_err(start + bytes.len(), "truncated order field"));
            }
            let n = (2..8).fold(0usize, |acc, i| (acc << 6) | six(i));
            (n, 8)
        } else {
            if bytes.len() < 4 {
                return Err(parse_err(start + bytes.len(), "truncated order field"));
            }
            ((1..4).fold(0usize, |acc, i| (acc << 6) | six(i)), 4)
        };
        if order > MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph order",
                got: order,
                max: MAX_ORDER,
            });
        }

        let pairs = order * order.saturating_sub(1) / 2;
        let expected = pairs.div_ceil(6);
        let found = bytes.len() - pos;
        if found != expected {
            return Err(parse_err(
                start + bytes.len().min(pos + expected),
                format!("expected {expected} adjacency bytes for order {order}, found {found}"),
            ));
        }

        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..order {
            for i in 0..j {
                if (six(pos + k / 6) >> (5 - k % 6)) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        pos += expected;
        debug_assert_eq!(pos, bytes.len());
        Graph::from_edges(order, edges)
    }
}
