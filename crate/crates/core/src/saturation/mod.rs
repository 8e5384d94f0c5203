//! Induced-saturation verification.
//!
//! `g` is `h`-induced-saturated when it has no induced copy of `h`, removing
//! any edge of `g` creates one, and adding any non-edge of `g` creates one.

mod cases;
mod report;

pub use cases::{
    classify_edge, classify_labels, paper_witness, witness_set, CaseKind, EdgeCase, Mode,
};
pub use report::{EdgeOutcome, VerificationReport};

use crate::construction::LabeledGn;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{bit, bits, Edge, Graph};
use crate::induced_path::find_induced_path;
use crate::named;

/// Largest non-path target accepted by the general embedding search.
pub const MAX_PATTERN_ORDER: usize = 16;

/// A target graph `h`, preprocessed for repeated induced-copy searches.
///
/// Paths are detected and routed through the induced path search; any other
/// target uses backtracking over injective maps that preserve both edges and
/// non-edges.
#[derive(Debug, Clone)]
pub struct Pattern {
    h: Graph,
    /// Vertices of `h` in path order, when `h` is a path.
    path_order: Option<Vec<usize>>,
    /// Visit order for the general search.
    visit: Vec<usize>,
}

impl Pattern {
    pub fn new(h: &Graph) -> Result<Self> {
        let path_order = path_order(h);
        if path_order.is_none() && h.order() > MAX_PATTERN_ORDER {
            return Err(Error::Capacity {
                what: "non-path target order",
                got: h.order(),
                max: MAX_PATTERN_ORDER,
            });
        }
        let mut visit = Vec::with_capacity(h.order());
        let mut placed = 0u64;
        while visit.len() < h.order() {
            let next = (0..h.order())
                .filter(|&v| placed & bit(v) == 0)
                .max_by_key(|&v| {
                    (
                        (h.row(v) & placed).count_ones(),
                        h.degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("unplaced vertex remains");
            placed |= bit(next);
            visit.push(next);
        }
        Ok(Pattern {
            h: h.clone(),
            path_order,
            visit,
        })
    }

    /// Pattern for the path on `k` vertices.
    pub fn path(k: usize) -> Result<Self> {
        Pattern::new(&named::path(k)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.h
    }

    pub fn is_path(&self) -> bool {
        self.path_order.is_some()
    }

    /// An induced copy of the target in `g`, as the images of the target's
    /// vertices `0..h.order()`.
    pub fn find_in(&self, g: &Graph) -> Option<Vec<usize>> {
        let k = self.h.order();
        if k > g.order() {
            return None;
        }
        if let Some(order) = &self.path_order {
            let path = find_induced_path(g, k).expect("1 <= k <= order checked above")?;
            let mut image = vec![0; k];
            for (&hv, &gv) in order.iter().zip(path.vertices()) {
                image[hv] = gv;
            }
            return Some(image);
        }
        let mut image = vec![usize::MAX; k];
        self.embed(g, &mut image, 0, 0).then_some(image)
    }

    fn embed(&self, g: &Graph, image: &mut [usize], depth: usize, used: u64) -> bool {
        let Some(&x) = self.visit.get(depth) else {
            return true;
        };
        let mut mapped_image = 0u64;
        let mut neighbour_image = 0u64;
        let mut candidates = g.vertices() & !used;
        for &p in &self.visit[..depth] {
            mapped_image |= bit(image[p]);
            if self.h.has_edge(x, p) {
                neighbour_image |= bit(image[p]);
                candidates &= g.row(image[p]);
            }
        }
        let need = self.h.degree(x);
        for y in bits(candidates) {
            if g.degree(y) < need || g.row(y) & mapped_image != neighbour_image {
                continue;
            }
            image[x] = y;
            if self.embed(g, image, depth + 1, used | bit(y)) {
                return true;
            }
        }
        image[x] = usize::MAX;
        false
    }

    /// `true` iff `image` is an induced copy of the target in `g`.
    pub fn is_copy(&self, g: &Graph, image: &[usize]) -> bool {
        let k = self.h.order();
        if image.len() != k {
            return false;
        }
        let mut seen = 0u64;
        for &y in image {
            if y >= g.order() || seen & bit(y) != 0 {
                return false;
            }
            seen |= bit(y);
        }
        (0..k).all(|a| (a + 1..k).all(|b| self.h.has_edge(a, b) == g.has_edge(image[a], image[b])))
    }

    /// Fast yes/no check with early exit: freeness, then additions, then deletions.
    pub fn saturates(&self, g: &Graph, exec: Execution) -> bool {
        if self.find_in(g).is_some() {
            return false;
        }
        let non_edges = g.non_edges();
        let toggled = |e: &Edge, present| g.toggle_edge(*e, present).expect("edge of g");
        exec.all(&non_edges, |e| self.find_in(&toggled(e, true)).is_some())
            && exec.all(&g.edges(), |e| self.find_in(&toggled(e, false)).is_some())
    }
}

/// Path order of `h` starting from its lowest-numbered end, if `h` is a path.
fn path_order(h: &Graph) -> Option<Vec<usize>> {
    let k = h.order();
    if k == 0 || h.edge_count() != k - 1 || (0..k).any(|v| h.degree(v) > 2) {
        return None;
    }
    let start = (0..k).find(|&v| h.degree(v) <= 1)?;
    let mut order = vec![start];
    let mut visited = bit(start);
    while let Some(next) = bits(h.row(*order.last().unwrap()) & !visited).next() {
        visited |= bit(next);
        order.push(next);
    }
    (order.len() == k).then_some(order)
}

/// Full three-clause check of `g` against `h`, with a certificate for every edge.
pub fn verify_h_is(g: &Graph, h: &Graph) -> Result<VerificationReport> {
    verify_h_is_with(g, h, Execution::default())
}

pub fn verify_h_is_with(g: &Graph, h: &Graph, exec: Execution) -> Result<VerificationReport> {
    Ok(verify_pattern(g, &Pattern::new(h)?, exec))
}

pub(crate) fn verify_pattern(g: &Graph, pattern: &Pattern, exec: Execution) -> VerificationReport {
    let counterexample = pattern.find_in(g);
    let outcomes = |edges: Vec<Edge>, present: bool| {
        exec.map(&edges, |&edge| {
            let perturbed = g.toggle_edge(edge, present).expect("edge of g");
            EdgeOutcome {
                edge,
                witness: pattern.find_in(&perturbed),
            }
        })
    };
    let deletions = outcomes(g.edges(), false);
    let additions = outcomes(g.non_edges(), true);
    VerificationReport::assemble(
        pattern.graph().order(),
        counterexample,
        deletions,
        additions,
    )
}

/// [`verify_h_is`] for `G_n` against the path on `n` vertices.
pub fn verify_pn_is(g: &LabeledGn) -> Result<VerificationReport> {
    verify_pn_is_with(g, Execution::default())
}

pub fn verify_pn_is_with(g: &LabeledGn, exec: Execution) -> Result<VerificationReport> {
    Ok(verify_pattern(g.graph(), &Pattern::path(g.n())?, exec))
}
