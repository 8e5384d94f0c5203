//! Induced path search.
//!
//! Partial paths are extended depth first. A candidate must be adjacent to
//! the current endpoint and outside the closed neighbourhoods of all earlier
//! path vertices; those neighbourhoods accumulate in a single forbidden mask.
//! Start vertices and neighbours are tried in ascending order, so the first
//! witness found is deterministic. Worst case is exponential.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// An ordered vertex sequence that induces a path in some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WitnessPath(Vec<usize>);

impl WitnessPath {
    /// Wraps `vertices` after checking it is an induced path in `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if is_induced_path(g, &vertices) {
            Ok(WitnessPath(vertices))
        } else {
            Err(Error::Domain(format!(
                "{vertices:?} is not an induced path"
            )))
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// Distinct vertices, consecutive pairs adjacent, every other pair non-adjacent.
/// Out-of-range vertices make the answer `false`.
pub fn is_induced_path(g: &Graph, seq: &[usize]) -> bool {
    let mut seen = 0u64;
    for &v in seq {
        if v >= g.order() || seen & bit(v) != 0 {
            return false;
        }
        seen |= bit(v);
    }
    seq.iter().enumerate().all(|(i, &a)| {
        seq[i + 1..]
            .iter()
            .enumerate()
            .all(|(d, &b)| g.has_edge(a, b) == (d == 0))
    })
}

/// First induced path on exactly `k` vertices, or `None`.
///
/// `k = 1` yields vertex 0 and `k = 2` the lowest edge.
pub fn find_induced_path(g: &Graph, k: usize) -> Result<Option<WitnessPath>> {
    if k == 0 || k > g.order() {
        return Err(Error::Domain(format!(
            "induced path order {k} outside 1..={}",
            g.order()
        )));
    }
    let mut path = Vec::with_capacity(k);
    for start in 0..g.order() {
        path.push(start);
        if extend(g, k, &mut path, bit(start)) {
            return Ok(Some(WitnessPath(path)));
        }
        path.pop();
    }
    Ok(None)
}

/// `forbidden` covers every path vertex plus the neighbours of all path
/// vertices except the last one.
fn extend(g: &Graph, k: usize, path: &mut Vec<usize>, forbidden: u64) -> bool {
    if path.len() == k {
        return true;
    }
    let last = *path.last().expect("path is non-empty");
    let candidates = g.row(last) & !forbidden;
    let next_forbidden = forbidden | g.row(last);
    // All vertices after the next one lie outside `next_forbidden`.
    if (g.vertices() & !next_forbidden).count_ones() as usize + 1 < k - path.len() {
        return false;
    }
    for c in bits(candidates) {
        path.push(c);
        if extend(g, k, path, next_forbidden | bit(c)) {
            return true;
        }
        path.pop();
    }
    false
}

/// Largest `k` with an induced path on `k` vertices, and the first such path.
pub fn longest_induced_path(g: &Graph) -> Result<(usize, WitnessPath)> {
    let mut best = find_induced_path(g, 1)?.ok_or_else(|| Error::Domain("empty graph".into()))?;
    for k in 2..=g.order() {
        match find_induced_path(g, k)? {
            Some(p) => best = p,
            None => break,
        }
    }
    Ok((best.len(), best))
}
