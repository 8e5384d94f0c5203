//! Undirected simple graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` adjacency row; bit `j` of row `i` is set iff
//! `{i, j}` is an edge. Graphs are values: mutation returns a new graph.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `order` bits set.
#[inline]
pub const fn vertex_mask(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

/// Iterate the set bits of a word in ascending order.
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let v = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(v)
        }
    })
}

/// An unordered vertex pair, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Loops are rejected.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidEdge {
                u: a,
                v: b,
                reason: "loops are not allowed".into(),
            });
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;

    fn try_from(pair: [usize; 2]) -> Result<Self> {
        Edge::new(pair[0], pair[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph order",
                got: order,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            order,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(order)?;
        for (a, b) in edges {
            let e = g.check_edge(a, b)?;
            g.set(e, true);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, validating every representation invariant.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let mut g = Graph::new(rows.len())?;
        let mask = vertex_mask(rows.len());
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row & bit(i) != 0 {
                return Err(Error::Domain(format!(
                    "row {i} has bits outside the vertex set"
                )));
            }
            g.adj[i] = row;
        }
        for i in 0..rows.len() {
            for j in bits(rows[i]) {
                if rows[j] & bit(i) == 0 {
                    return Err(Error::Domain(format!("rows {i} and {j} are not symmetric")));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Neighbourhood of `v` as a bit row.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.order]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Mask of all vertices of this graph.
    #[inline]
    pub fn vertices(&self) -> u64 {
        vertex_mask(self.order)
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.order)
            .flat_map(|u| bits(self.adj[u] & !vertex_mask(u + 1)).map(move |v| Edge { u, v }))
            .collect()
    }

    /// Non-edges (edges of the complement) in ascending `(u, v)` order.
    pub fn non_edges(&self) -> Vec<Edge> {
        self.complement().edges()
    }

    /// Copy of this graph with `e` present or absent.
    pub fn toggle_edge(&self, e: Edge, present: bool) -> Result<Graph> {
        self.check_edge(e.u, e.v)?;
        let mut g = self.clone();
        g.set(e, present);
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mask = self.vertices();
        let mut g = self.clone();
        for (i, row) in g.adj[..self.order].iter_mut().enumerate() {
            *row = !*row & mask & !bit(i);
        }
        g
    }

    /// Induced subgraph on the vertices of `set`, relabelled in ascending order.
    pub fn induced(&self, set: u64) -> Graph {
        let set = set & self.vertices();
        let members: Vec<usize> = bits(set).collect();
        let mut g = Graph {
            order: members.len(),
            adj: [0; MAX_ORDER],
        };
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                if self.adj[a] & bit(b) != 0 {
                    g.adj[i] |= bit(j);
                }
            }
        }
        g
    }

    /// Image of this graph under the vertex permutation `perm` (vertex `i` becomes `perm[i]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::Domain(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.order
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.order || seen & bit(p) != 0 {
                return Err(Error::Domain("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut g = Graph::new(self.order)?;
        for e in self.edges() {
            g.set(Edge::new(perm[e.u], perm[e.v])?, true);
        }
        Ok(g)
    }

    fn check_edge(&self, a: usize, b: usize) -> Result<Edge> {
        let e = Edge::new(a, b)?;
        if e.v >= self.order {
            return Err(Error::InvalidEdge {
                u: e.u,
                v: e.v,
                reason: format!("endpoint out of range for order {}", self.order),
            });
        }
        Ok(e)
    }

    #[inline]
    fn set(&mut self, e: Edge, present: bool) {
        if present {
            self.adj[e.u] |= bit(e.v);
            self.adj[e.v] |= bit(e.u);
        } else {
            self.adj[e.u] &= !bit(e.v);
            self.adj[e.v] &= !bit(e.u);
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field(
                "edges",
                &self.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
            )
            .finish()
    }
}
