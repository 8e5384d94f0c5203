//! The graphs `G_n`.
//!
//! `G_n` has vertices `v_1..v_{n-1}` and `w_1..w_{n-1}`. The `v`'s form a
//! cycle, the `w`'s are adjacent exactly when their indices are *not*
//! cyclically consecutive, and each `v_i` is matched to `w_i`.
//!
//! Vertex `i - 1` is `v_i` and vertex `(n - 1) + i - 1` is `w_i`. Label
//! indices are 1-based and cyclic arithmetic uses representatives `1..=n-1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MIN_N: usize = 4;
/// `2(n - 1)` must fit in one 64-bit adjacency row with room to spare.
pub const MAX_N: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    V,
    W,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GnLabel {
    pub side: Side,
    pub index: usize,
}

impl GnLabel {
    pub const fn v(index: usize) -> Self {
        GnLabel {
            side: Side::V,
            index,
        }
    }

    pub const fn w(index: usize) -> Self {
        GnLabel {
            side: Side::W,
            index,
        }
    }
}

impl fmt::Display for GnLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.side {
            Side::V => 'v',
            Side::W => 'w',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for GnLabel {
    type Err = Error;

    /// Accepts `v3`, `w12`, also upper case. Range is checked against a graph later.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || {
            Error::Domain(format!(
                "malformed vertex label {s:?}; expected v<i> or w<i>"
            ))
        };
        let mut chars = s.chars();
        let side = match chars.next().map(|c| c.to_ascii_lowercase()) {
            Some('v') => Side::V,
            Some('w') => Side::W,
            _ => return Err(bad()),
        };
        let index: usize = chars.as_str().parse().map_err(|_| bad())?;
        Ok(GnLabel { side, index })
    }
}

/// Wraps any integer into the representative range `1..=m`.
#[inline]
pub fn wrap(i: i64, m: usize) -> usize {
    ((i - 1).rem_euclid(m as i64) + 1) as usize
}

/// `true` iff `i - j ≡ ±1 (mod m)`.
#[inline]
pub fn cyclically_adjacent(i: usize, j: usize, m: usize) -> bool {
    let d = (i as i64 - j as i64).rem_euclid(m as i64) as usize;
    d == 1 || d == m - 1
}

/// Index map `i ↦ i + r` or, when reflected, `i ↦ r - i` (mod `n - 1`),
/// applied to both sides at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DihedralMap {
    pub rotation: usize,
    pub reflected: bool,
}

impl DihedralMap {
    pub const IDENTITY: DihedralMap = DihedralMap {
        rotation: 0,
        reflected: false,
    };

    pub const fn rotation(r: usize) -> Self {
        DihedralMap {
            rotation: r,
            reflected: false,
        }
    }

    pub const fn reflection(r: usize) -> Self {
        DihedralMap {
            rotation: r,
            reflected: true,
        }
    }

    /// Image of a label index under this map, for cycle length `m`.
    pub fn map_index(&self, i: usize, m: usize) -> usize {
        let r = self.rotation as i64;
        if self.reflected {
            wrap(r - i as i64, m)
        } else {
            wrap(i as i64 + r, m)
        }
    }

    pub fn map_label(&self, l: GnLabel, m: usize) -> GnLabel {
        GnLabel {
            side: l.side,
            index: self.map_index(l.index, m),
        }
    }

    /// Inverse map for cycle length `m`. Reflections are involutions.
    pub fn inverse(&self, m: usize) -> Self {
        if self.reflected {
            *self
        } else {
            DihedralMap::rotation((m - self.rotation % m) % m)
        }
    }

    /// All `2m` maps: rotations first, then reflections.
    pub fn all(m: usize) -> impl Iterator<Item = DihedralMap> {
        (0..m)
            .map(DihedralMap::rotation)
            .chain((0..m).map(DihedralMap::reflection))
    }
}

impl fmt::Display for DihedralMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reflected {
            write!(f, "reflection i -> {} - i", self.rotation)
        } else {
            write!(f, "rotation i -> i + {}", self.rotation)
        }
    }
}

/// `G_n` together with its `v`/`w` labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGn {
    n: usize,
    graph: Graph,
}

impl LabeledGn {
    pub fn build(n: usize) -> Result<Self> {
        if !(MIN_N..=MAX_N).contains(&n) {
            return Err(Error::Domain(format!(
                "G_n is built for {MIN_N} <= n <= {MAX_N}, got n = {n}"
            )));
        }
        let m = n - 1;
        let mut edges = Vec::new();
        for i in 1..=m {
            for j in i + 1..=m {
                let vertex_v = |k: usize| k - 1;
                let vertex_w = |k: usize| m + k - 1;
                if cyclically_adjacent(i, j, m) {
                    edges.push((vertex_v(i), vertex_v(j)));
                } else {
                    edges.push((vertex_w(i), vertex_w(j)));
                }
            }
            edges.push((i - 1, m + i - 1));
        }
        Ok(LabeledGn {
            n,
            graph: Graph::from_edges(2 * m, edges)?,
        })
    }

    /// Target path order `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Length `n - 1` of the `v`-cycle.
    pub fn m(&self) -> usize {
        self.n - 1
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn label_of(&self, vertex: usize) -> Result<GnLabel> {
        let m = self.m();
        match vertex {
            x if x < m => Ok(GnLabel::v(x + 1)),
            x if x < 2 * m => Ok(GnLabel::w(x - m + 1)),
            x => Err(Error::Domain(format!(
                "vertex {x} out of range for G_{} (order {})",
                self.n,
                2 * m
            ))),
        }
    }

    pub fn vertex_of(&self, label: GnLabel) -> Result<usize> {
        let m = self.m();
        if !(1..=m).contains(&label.index) {
            return Err(Error::Domain(format!(
                "label {label} out of range for G_{}: index must be in 1..={m}",
                self.n
            )));
        }
        Ok(match label.side {
            Side::V => label.index - 1,
            Side::W => m + label.index - 1,
        })
    }

    /// Label string for a vertex index; panics on out-of-range input.
    pub fn name(&self, vertex: usize) -> String {
        self.label_of(vertex).expect("vertex in range").to_string()
    }

    /// Vertex permutation induced by `map`: vertex `x` goes to `perm[x]`.
    pub fn apply_automorphism(&self, map: DihedralMap) -> Result<Vec<usize>> {
        let m = self.m();
        if map.rotation >= m {
            return Err(Error::Domain(format!(
                "dihedral parameter {} out of range 0..{m}",
                map.rotation
            )));
        }
        (0..2 * m)
            .map(|x| {
                let l = self.label_of(x)?;
                self.vertex_of(map.map_label(l, m))
            })
            .collect()
    }
}

/// Searches the 5-subsets of `{w_1..w_{n-1}}` for one containing no triangle.
///
/// For `n >= 7` none exists: every five `w`-vertices contain three mutually
/// adjacent ones, which caps an induced path at four `w`-vertices.
pub fn triangle_free_w_quintuple(g: &LabeledGn) -> Option<[GnLabel; 5]> {
    let m = g.m();
    let graph = g.graph();
    let w = |i: usize| m + i - 1;
    let mut pick = [0usize; 5];
    fn rec(
        graph: &Graph,
        m: usize,
        w: &dyn Fn(usize) -> usize,
        pick: &mut [usize; 5],
        depth: usize,
        from: usize,
    ) -> bool {
        if depth == 5 {
            let has_triangle = (0..5).any(|a| {
                (a + 1..5).any(|b| {
                    (b + 1..5).any(|c| {
                        let (x, y, z) = (w(pick[a]), w(pick[b]), w(pick[c]));
                        graph.has_edge(x, y) && graph.has_edge(y, z) && graph.has_edge(x, z)
                    })
                })
            });
            return !has_triangle;
        }
        for i in from..=m {
            pick[depth] = i;
            if rec(graph, m, w, pick, depth + 1, i + 1) {
                return true;
            }
        }
        false
    }
    rec(graph, m, &w, &mut pick, 0, 1).then(|| pick.map(GnLabel::w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;
    use crate::named;

    /// Edge rule evaluated directly on labels.
    fn rule(a: GnLabel, b: GnLabel, m: usize) -> bool {
        match (a.side, b.side) {
            (Side::V, Side::W) | (Side::W, Side::V) => a.index == b.index,
            (Side::V, Side::V) => a.index != b.index && cyclically_adjacent(a.index, b.index, m),
            (Side::W, Side::W) => a.index != b.index && !cyclically_adjacent(a.index, b.index, m),
        }
    }

    fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
        (0..g.order())
            .all(|x| (0..g.order()).all(|y| g.has_edge(x, y) == g.has_edge(perm[x], perm[y])))
    }

    #[test]
    fn wrap_representatives() {
        assert_eq!(wrap(0, 6), 6);
        assert_eq!(wrap(7, 6), 1);
        assert_eq!(wrap(-1, 6), 5);
        assert_eq!(wrap(6, 6), 6);
    }

    #[test]
    fn g6_size_and_petersen() {
        let g = LabeledGn::build(6).unwrap();
        assert_eq!(g.graph().order(), 10);
        assert_eq!(g.graph().edge_count(), 15);
        assert!(is_isomorphic(g.graph(), &named::petersen()).unwrap());
    }

    #[test]
    fn g7_degrees() {
        let g = LabeledGn::build(7).unwrap();
        assert_eq!((g.graph().order(), g.graph().edge_count()), (12, 21));
        assert!((0..6).all(|v| g.graph().degree(v) == 3));
        assert!((6..12).all(|v| g.graph().degree(v) == 4));
    }

    #[test]
    fn build_range() {
        assert!(matches!(LabeledGn::build(3), Err(Error::Domain(_))));
        assert!(LabeledGn::build(4).is_ok());
        assert!(LabeledGn::build(32).is_ok());
        assert!(LabeledGn::build(33).is_err());
    }

    #[test]
    fn edge_rules_hold_exhaustively() {
        for n in 4..=14 {
            let g = LabeledGn::build(n).unwrap();
            let m = g.m();
            for x in 0..2 * m {
                for y in 0..2 * m {
                    let (a, b) = (g.label_of(x).unwrap(), g.label_of(y).unwrap());
                    assert_eq!(
                        g.graph().has_edge(x, y),
                        x != y && rule(a, b, m),
                        "n={n} {a} {b}"
                    );
                }
            }
            assert_eq!(g.graph().edge_count(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn labels_round_trip() {
        let g = LabeledGn::build(9).unwrap();
        assert_eq!(g.vertex_of(GnLabel::v(1)).unwrap(), 0);
        assert_eq!(g.label_of(8).unwrap(), GnLabel::w(1));
        for x in 0..16 {
            assert_eq!(g.vertex_of(g.label_of(x).unwrap()).unwrap(), x);
        }
        assert!(g.label_of(16).is_err());
        assert!(g.vertex_of(GnLabel::w(0)).is_err());
        assert!(g.vertex_of(GnLabel::v(9)).is_err());
    }

    #[test]
    fn label_parsing() {
        assert_eq!("v3".parse::<GnLabel>().unwrap(), GnLabel::v(3));
        assert_eq!("W12".parse::<GnLabel>().unwrap(), GnLabel::w(12));
        assert!("x1".parse::<GnLabel>().is_err());
        assert!("v".parse::<GnLabel>().is_err());
        assert_eq!(GnLabel::w(4).to_string(), "w4");
    }

    #[test]
    fn dihedral_examples() {
        let g7 = LabeledGn::build(7).unwrap();
        let perm = g7.apply_automorphism(DihedralMap::rotation(1)).unwrap();
        assert!(is_automorphism(g7.graph(), &perm));
        assert_eq!(perm[0], 1);
        let id = g7.apply_automorphism(DihedralMap::IDENTITY).unwrap();
        assert_eq!(id, (0..12).collect::<Vec<_>>());

        let g8 = LabeledGn::build(8).unwrap();
        let refl = DihedralMap::reflection(2);
        assert_eq!(refl.map_index(1, 7), 1);
        assert_eq!(refl.map_index(2, 7), 7);
        assert!(is_automorphism(
            g8.graph(),
            &g8.apply_automorphism(refl).unwrap()
        ));
        assert!(g8.apply_automorphism(DihedralMap::rotation(7)).is_err());
    }

    #[test]
    fn w_quintuples_contain_triangles() {
        for n in 7..=12 {
            assert_eq!(
                triangle_free_w_quintuple(&LabeledGn::build(n).unwrap()),
                None,
                "n={n}"
            );
        }
        // G_6 has only five w-vertices, forming a 5-cycle complement (itself a 5-cycle).
        let g6 = LabeledGn::build(6).unwrap();
        assert_eq!(
            triangle_free_w_quintuple(&g6),
            Some([1, 2, 3, 4, 5].map(GnLabel::w))
        );
    }

    #[test]
    fn every_dihedral_map_is_an_automorphism() {
        for n in 4..=12 {
            let g = LabeledGn::build(n).unwrap();
            for map in DihedralMap::all(g.m()) {
                let perm = g.apply_automorphism(map).unwrap();
                assert!(is_automorphism(g.graph(), &perm), "n={n} {map}");
                let inv = g.apply_automorphism(map.inverse(g.m())).unwrap();
                assert!((0..perm.len()).all(|x| inv[perm[x]] == x));
            }
        }
    }
}
