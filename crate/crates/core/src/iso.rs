//! Backtracking isomorphism test for small graphs.

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// Largest order accepted by [`find_isomorphism`].
pub const MAX_ISO_ORDER: usize = 16;

/// Degree plus the sorted multiset of neighbour degrees.
fn vertex_signature(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = bits(g.row(v)).map(|w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Returns `perm` with `a.has_edge(x, y) == b.has_edge(perm[x], perm[y])`
/// for all pairs, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    for g in [a, b] {
        if g.order() > MAX_ISO_ORDER {
            return Err(Error::Capacity {
                what: "isomorphism test order",
                got: g.order(),
                max: MAX_ISO_ORDER,
            });
        }
    }
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let sig_a: Vec<_> = (0..n).map(|v| vertex_signature(a, v)).collect();
    let sig_b: Vec<_> = (0..n).map(|v| vertex_signature(b, v)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return Ok(None);
        }
    }

    // Visit order for `a`: greedily take the vertex with the most already
    // placed neighbours, breaking ties by degree, so adjacency constraints
    // bite as early as possible.
    let mut visit = Vec::with_capacity(n);
    let mut placed = 0u64;
    while visit.len() < n {
        let next = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                (
                    (a.row(v) & placed).count_ones(),
                    a.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex remains");
        placed |= bit(next);
        visit.push(next);
    }

    let candidates: Vec<u64> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| sig_a[x] == sig_b[y])
                .fold(0u64, |m, y| m | bit(y))
        })
        .collect();

    let mut map = vec![usize::MAX; n];
    if extend(a, b, &visit, &candidates, &mut map, 0, 0) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn extend(
    a: &Graph,
    b: &Graph,
    visit: &[usize],
    candidates: &[u64],
    map: &mut [usize],
    depth: usize,
    used: u64,
) -> bool {
    let Some(&x) = visit.get(depth) else {
        return true;
    };
    // Images of x's already-mapped neighbours, and of everything mapped so far.
    let mut mapped_image = 0u64;
    let mut neighbour_image = 0u64;
    for &p in &visit[..depth] {
        mapped_image |= bit(map[p]);
        if a.has_edge(x, p) {
            neighbour_image |= bit(map[p]);
        }
    }
    for y in bits(candidates[x] & !used) {
        if b.row(y) & mapped_image != neighbour_image {
            continue;
        }
        map[x] = y;
        if extend(a, b, visit, candidates, map, depth + 1, used | bit(y)) {
            return true;
        }
    }
    map[x] = usize::MAX;
    false
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}
