//! Case analysis for single-edge perturbations of `G_n`.
//!
//! Every edge (for deletion) or non-edge (for addition) of `G_n` is carried
//! by a rotation onto one of a few canonical edges, each with an explicit
//! vertex set whose induced subgraph in the perturbed graph is a path on `n`
//! vertices. With `m = n - 1`:
//!
//! | case  | mode   | canonical edge      | witness set                                              |
//! |-------|--------|---------------------|----------------------------------------------------------|
//! | S1    | delete | `v_1 v_m`           | `w_1, v_1..v_m`                                          |
//! | S2    | delete | `v_1 w_1`           | `w_1, w_{n-2}, v_1..v_{n-2}`                             |
//! | S3    | delete | `w_1 w_j`, 3<j<n-2  | `w_1, w_{j-1}, w_j, w_m, v_1..v_{j-2}, v_j..v_{n-3}`     |
//! | S3'   | delete | `w_1 w_3`           | `w_1, w_3, v_1, v_3..v_m`                                |
//! | S3''  | delete | `w_1 w_{n-2}`       | `w_1, w_{n-2}, v_1..v_{n-2}`                             |
//! | T1    | add    | `w_1 w_m`           | `w_1, w_m, v_1..v_{n-2}`                                 |
//! | T2    | add    | `v_1 v_j`, 3<j≤n-2  | `w_{j-2}, w_{j-1}, w_m, v_1..v_{j-2}, v_j..v_{n-2}`      |
//! | T2'   | add    | `v_1 v_3`           | `w_2, w_{n-2}, w_m, v_1, v_3..v_{n-2}`                   |
//! | T3    | add    | `v_1 w_j`, 2≤j≤n-3  | `w_{j-1}, w_j, w_{j+1}, v_1..v_{j-1}, v_{j+1}..v_{n-2}`  |
//! | T3'   | add    | `v_1 w_{n-2}`       | `w_{n-3}, w_{n-2}, w_m, v_1..v_{n-3}`                    |
//! | T3''  | add    | `v_1 w_m`           | `w_{n-2}, w_m, v_1..v_{n-2}`                             |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::construction::{cyclically_adjacent, wrap, DihedralMap, GnLabel, LabeledGn, Side};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Edge};
use crate::induced_path::WitnessPath;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Delete,
    Add,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delete" => Ok(Mode::Delete),
            "add" => Ok(Mode::Add),
            other => Err(Error::Domain(format!(
                "unknown mode {other:?}; expected delete or add"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseKind {
    S1,
    S2,
    S3,
    S3Prime,
    S3DoublePrime,
    T1,
    T2,
    T2Prime,
    T3,
    T3Prime,
    T3DoublePrime,
}

impl CaseKind {
    pub const ALL: [CaseKind; 11] = [
        CaseKind::S1,
        CaseKind::S2,
        CaseKind::S3,
        CaseKind::S3Prime,
        CaseKind::S3DoublePrime,
        CaseKind::T1,
        CaseKind::T2,
        CaseKind::T2Prime,
        CaseKind::T3,
        CaseKind::T3Prime,
        CaseKind::T3DoublePrime,
    ];

    pub fn mode(self) -> Mode {
        use CaseKind::*;
        match self {
            S1 | S2 | S3 | S3Prime | S3DoublePrime => Mode::Delete,
            _ => Mode::Add,
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CaseKind::*;
        f.write_str(match self {
            S1 => "S1",
            S2 => "S2",
            S3 => "S3",
            S3Prime => "S3'",
            S3DoublePrime => "S3''",
            T1 => "T1",
            T2 => "T2",
            T2Prime => "T2'",
            T3 => "T3",
            T3Prime => "T3'",
            T3DoublePrime => "T3''",
        })
    }
}

/// Classification of one perturbation.
///
/// `map` carries the canonical edge of `kind` (with parameter `canonical_j`)
/// onto the classified edge. S1 and T1 use `j = n - 1`, S2 uses `j = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCase {
    pub kind: CaseKind,
    pub canonical_j: usize,
    pub map: DihedralMap,
}

impl EdgeCase {
    /// Canonical edge of this case, lower label first.
    pub fn canonical_edge(&self) -> (GnLabel, GnLabel) {
        use CaseKind::*;
        let j = self.canonical_j;
        match self.kind {
            S1 | T2 | T2Prime => (GnLabel::v(1), GnLabel::v(j)),
            S2 | T3 | T3Prime | T3DoublePrime => (GnLabel::v(1), GnLabel::w(j)),
            S3 | S3Prime | S3DoublePrime | T1 => (GnLabel::w(1), GnLabel::w(j)),
        }
    }

    /// Rotation taking the classified edge to the canonical one.
    pub fn to_canonical(&self, n: usize) -> DihedralMap {
        self.map.inverse(n - 1)
    }
}

fn require_case_range(g: &LabeledGn) -> Result<()> {
    if g.n() < 6 {
        return Err(Error::Domain(format!(
            "the edge case analysis needs n >= 6, got n = {}",
            g.n()
        )));
    }
    Ok(())
}

/// Classifies an edge given by vertex indices.
pub fn classify_edge(g: &LabeledGn, e: Edge, mode: Mode) -> Result<EdgeCase> {
    let a = g.label_of(e.u())?;
    let b = g.label_of(e.v())?;
    classify_labels(g, a, b, mode)
}

/// Classifies the pair `{a, b}` for deletion (must be an edge) or addition
/// (must be a non-edge).
pub fn classify_labels(g: &LabeledGn, a: GnLabel, b: GnLabel, mode: Mode) -> Result<EdgeCase> {
    require_case_range(g)?;
    let (x, y) = (g.vertex_of(a)?, g.vertex_of(b)?);
    if x == y {
        return Err(Error::Domain(format!("{a}{b} is a loop")));
    }
    let present = g.graph().has_edge(x, y);
    match (mode, present) {
        (Mode::Delete, false) => {
            return Err(Error::Domain(format!(
                "{a}{b} is not an edge of G_{}, so it cannot be deleted",
                g.n()
            )))
        }
        (Mode::Add, true) => {
            return Err(Error::Domain(format!(
                "{a}{b} is already an edge of G_{}, so it cannot be added",
                g.n()
            )))
        }
        _ => {}
    }

    let n = g.n();
    let m = g.m();
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let (i, j) = (a.index, b.index);
    // Rotation sending index 1 to `i`.
    let onto = |i: usize| DihedralMap::rotation((i - 1) % m);
    // For a cyclically consecutive pair, the rotation sending {1, m} onto it.
    let onto_consecutive = || {
        let lower = if wrap(i as i64 + 1, m) == j { i } else { j };
        DihedralMap::rotation(lower % m)
    };
    let gap = wrap(j as i64 - i as i64 + 1, m);

    use CaseKind::*;
    let case = match (mode, a.side, b.side) {
        (Mode::Delete, Side::V, Side::V) => EdgeCase {
            kind: S1,
            canonical_j: m,
            map: onto_consecutive(),
        },
        (Mode::Delete, Side::V, Side::W) => EdgeCase {
            kind: S2,
            canonical_j: 1,
            map: onto(i),
        },
        (Mode::Delete, Side::W, Side::W) => EdgeCase {
            kind: if gap == 3 {
                S3Prime
            } else if gap == n - 2 {
                S3DoublePrime
            } else {
                S3
            },
            canonical_j: gap,
            map: onto(i),
        },
        (Mode::Add, Side::W, Side::W) => EdgeCase {
            kind: T1,
            canonical_j: m,
            map: onto_consecutive(),
        },
        (Mode::Add, Side::V, Side::V) => EdgeCase {
            kind: if gap == 3 { T2Prime } else { T2 },
            canonical_j: gap,
            map: onto(i),
        },
        (Mode::Add, Side::V, Side::W) => EdgeCase {
            kind: if gap <= n - 3 {
                T3
            } else if gap == n - 2 {
                T3Prime
            } else {
                T3DoublePrime
            },
            canonical_j: gap,
            map: onto(i),
        },
        (_, Side::W, Side::V) => unreachable!("labels are ordered with v before w"),
    };
    debug_assert!(match case.kind {
        S3 => 3 < gap && gap < n - 2,
        S3Prime | S3DoublePrime | T2 | T2Prime => (3..=n - 2).contains(&gap),
        T3 | T3Prime | T3DoublePrime => (2..=m).contains(&gap),
        _ => true,
    });
    debug_assert!(!(matches!(case.kind, S1 | T1) && !cyclically_adjacent(i, j, m)));
    Ok(case)
}

fn v_range(lo: usize, hi: usize) -> impl Iterator<Item = GnLabel> {
    (lo..=hi).map(GnLabel::v)
}

/// Witness set of a case, in canonical labels.
pub fn witness_set(kind: CaseKind, n: usize, j: usize) -> Vec<GnLabel> {
    use CaseKind::*;
    let m = n - 1;
    let w = GnLabel::w;
    let mut set: Vec<GnLabel> = match kind {
        S1 => [w(1)].into_iter().chain(v_range(1, m)).collect(),
        S2 | S3DoublePrime => [w(1), w(n - 2)]
            .into_iter()
            .chain(v_range(1, n - 2))
            .collect(),
        S3 => [w(1), w(j - 1), w(j), w(m)]
            .into_iter()
            .chain(v_range(1, j - 2))
            .chain(v_range(j, n - 3))
            .collect(),
        S3Prime => [w(1), w(3), GnLabel::v(1)]
            .into_iter()
            .chain(v_range(3, m))
            .collect(),
        T1 => [w(1), w(m)].into_iter().chain(v_range(1, n - 2)).collect(),
        T2 => [w(j - 2), w(j - 1), w(m)]
            .into_iter()
            .chain(v_range(1, j - 2))
            .chain(v_range(j, n - 2))
            .collect(),
        T2Prime => [w(2), w(n - 2), w(m), GnLabel::v(1)]
            .into_iter()
            .chain(v_range(3, n - 2))
            .collect(),
        T3 => [w(j - 1), w(j), w(j + 1)]
            .into_iter()
            .chain(v_range(1, j - 1))
            .chain(v_range(j + 1, n - 2))
            .collect(),
        T3Prime => [w(n - 3), w(n - 2), w(m)]
            .into_iter()
            .chain(v_range(1, n - 3))
            .collect(),
        T3DoublePrime => [w(n - 2), w(m)]
            .into_iter()
            .chain(v_range(1, n - 2))
            .collect(),
    };
    set.sort();
    set
}

/// Ordered witness path for deleting or adding `e`, built from the case's
/// witness set rather than by search.
///
/// Fails with [`Error::Consistency`] if the set does not induce a path on
/// `n` vertices in the perturbed graph.
pub fn paper_witness(g: &LabeledGn, e: Edge, mode: Mode) -> Result<WitnessPath> {
    let case = classify_edge(g, e, mode)?;
    let m = g.m();
    let mut set = 0u64;
    for label in witness_set(case.kind, g.n(), case.canonical_j) {
        set |= bit(g.vertex_of(case.map.map_label(label, m))?);
    }
    let perturbed = g.graph().toggle_edge(e, mode == Mode::Add)?;
    let inconsistent = |why: &str| {
        Error::Consistency(format!(
            "case {} (j = {}) for edge {}{} in G_{}: {why}",
            case.kind,
            case.canonical_j,
            g.name(e.u()),
            g.name(e.v()),
            g.n()
        ))
    };
    if set.count_ones() as usize != g.n() {
        return Err(inconsistent("witness set has the wrong size"));
    }
    let inner = |v: usize| perturbed.row(v) & set;
    let ends: Vec<usize> = bits(set).filter(|&v| inner(v).count_ones() == 1).collect();
    if ends.len() != 2 || bits(set).any(|v| inner(v).count_ones() > 2) {
        return Err(inconsistent("induced subgraph is not a path"));
    }
    let mut order = vec![ends[0]];
    let mut seen = bit(ends[0]);
    while let Some(next) = bits(inner(*order.last().unwrap()) & !seen).next() {
        seen |= bit(next);
        order.push(next);
    }
    if order.len() != g.n() {
        return Err(inconsistent("induced subgraph is disconnected"));
    }
    WitnessPath::new(&perturbed, order)
        .map_err(|_| inconsistent("ordered set fails the induced path check"))
}
