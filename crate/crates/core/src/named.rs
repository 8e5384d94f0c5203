//! Small named graphs used as targets and fixtures.

use crate::error::Result;
use crate::graph::Graph;

/// Path `0 - 1 - ... - (k-1)`.
pub fn path(k: usize) -> Result<Graph> {
    Graph::from_edges(k, (1..k).map(|i| (i - 1, i)))
}

/// Cycle on `k >= 3` vertices; smaller `k` yields the path.
pub fn cycle(k: usize) -> Result<Graph> {
    let closing = (k >= 3).then(|| (k - 1, 0));
    Graph::from_edges(k, (1..k).map(|i| (i - 1, i)).chain(closing))
}

pub fn complete(k: usize) -> Result<Graph> {
    Ok(Graph::new(k)?.complement())
}

pub fn edgeless(k: usize) -> Result<Graph> {
    Graph::new(k)
}

/// Vertices of `b` are shifted past those of `a`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph> {
    let shift = a.order();
    let edges = a.edges().into_iter().map(|e| (e.u(), e.v())).chain(
        b.edges()
            .into_iter()
            .map(|e| (e.u() + shift, e.v() + shift)),
    );
    Graph::from_edges(a.order() + b.order(), edges)
}

/// Outer 5-cycle `0..5`, spokes `i - (i+5)`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("static edge list")
}
