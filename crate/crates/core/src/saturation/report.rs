use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::saturation::Pattern;

/// Outcome for one deleted or added edge.
///
/// `witness[i]` is the host vertex playing target vertex `i`. For a path
/// target numbered `0 - 1 - ... - (k-1)` this is the path in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeOutcome {
    pub edge: Edge,
    pub witness: Option<Vec<usize>>,
}

impl EdgeOutcome {
    pub fn ok(&self) -> bool {
        self.witness.is_some()
    }
}

/// Result of the three-clause induced-saturation check.
///
/// Serialized field names are stable: `target_order`, `free_ok`,
/// `counterexample`, `deletions`, `additions`, `verdict`. Edge lists are in
/// ascending edge order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub target_order: usize,
    pub free_ok: bool,
    /// Induced copy of the target in the unperturbed graph, if any.
    pub counterexample: Option<Vec<usize>>,
    pub deletions: Vec<EdgeOutcome>,
    pub additions: Vec<EdgeOutcome>,
    pub verdict: bool,
}

impl VerificationReport {
    pub(crate) fn assemble(
        target_order: usize,
        counterexample: Option<Vec<usize>>,
        deletions: Vec<EdgeOutcome>,
        additions: Vec<EdgeOutcome>,
    ) -> Self {
        let free_ok = counterexample.is_none();
        let verdict = free_ok
            && deletions.iter().all(EdgeOutcome::ok)
            && additions.iter().all(EdgeOutcome::ok);
        VerificationReport {
            target_order,
            free_ok,
            counterexample,
            deletions,
            additions,
            verdict,
        }
    }

    pub fn deletions_ok(&self) -> usize {
        self.deletions.iter().filter(|o| o.ok()).count()
    }

    pub fn additions_ok(&self) -> usize {
        self.additions.iter().filter(|o| o.ok()).count()
    }

    /// Re-checks every certificate and the verdict against `g` and `h`.
    pub fn validate(&self, g: &Graph, h: &Graph) -> Result<()> {
        let pattern = Pattern::new(h)?;
        let fail = |msg: String| Err(Error::Consistency(msg));
        if self.target_order != h.order() {
            return fail(format!(
                "target order {} but h has {}",
                self.target_order,
                h.order()
            ));
        }
        if self.free_ok != self.counterexample.is_none() {
            return fail("free_ok disagrees with counterexample".into());
        }
        if let Some(c) = &self.counterexample {
            if !pattern.is_copy(g, c) {
                return fail(format!("counterexample {c:?} is not an induced copy"));
            }
        }
        if self.deletions.iter().map(|o| o.edge).ne(g.edges())
            || self.additions.iter().map(|o| o.edge).ne(g.non_edges())
        {
            return fail("edge lists do not match the graph".into());
        }
        for (outcomes, present) in [(&self.deletions, false), (&self.additions, true)] {
            for o in outcomes {
                if let Some(w) = &o.witness {
                    let perturbed = g.toggle_edge(o.edge, present)?;
                    if !pattern.is_copy(&perturbed, w) {
                        return fail(format!(
                            "witness {w:?} for edge {} does not validate",
                            o.edge
                        ));
                    }
                }
            }
        }
        let expected = self.free_ok
            && self.deletions.iter().all(EdgeOutcome::ok)
            && self.additions.iter().all(EdgeOutcome::ok);
        if self.verdict != expected {
            return fail("verdict disagrees with clauses".into());
        }
        Ok(())
    }

    /// Line-oriented report, naming vertices with `name`.
    ///
    /// ```text
    /// target_order 6
    /// free ok
    /// delete 0-1 ok 0 4 3 ...
    /// add 0-2 FAIL
    /// summary deletions 15/15 additions 30/30
    /// verdict true
    /// ```
    pub fn render_text(&self, name: &dyn Fn(usize) -> String) -> String {
        let seq = |w: &[usize]| w.iter().map(|&v| name(v)).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        let _ = writeln!(out, "target_order {}", self.target_order);
        match &self.counterexample {
            None => out.push_str("free ok\n"),
            Some(c) => {
                let _ = writeln!(out, "free violated {}", seq(c));
            }
        }
        for (tag, outcomes) in [("delete", &self.deletions), ("add", &self.additions)] {
            for o in outcomes {
                let edge = format!("{}-{}", name(o.edge.u()), name(o.edge.v()));
                match &o.witness {
                    Some(w) => {
                        let _ = writeln!(out, "{tag} {edge} ok {}", seq(w));
                    }
                    None => {
                        let _ = writeln!(out, "{tag} {edge} FAIL");
                    }
                }
            }
        }
        let _ = writeln!(
            out,
            "summary deletions {}/{} additions {}/{}",
            self.deletions_ok(),
            self.deletions.len(),
            self.additions_ok(),
            self.additions.len()
        );
        let _ = writeln!(out, "verdict {}", self.verdict);
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text(&|v| v.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::saturation::verify_h_is;

    #[test]
    fn text_and_json_shapes() {
        let g = Graph::new(2).unwrap();
        let r = verify_h_is(&g, &named::path(2).unwrap()).unwrap();
        assert_eq!(
            r.to_string(),
            "target_order 2\nfree ok\nadd 0-1 ok 0 1\nsummary deletions 0/0 additions 1/1\nverdict true\n"
        );
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "target_order": 2,
                "free_ok": true,
                "counterexample": null,
                "deletions": [],
                "additions": [{"edge": [0, 1], "witness": [0, 1]}],
                "verdict": true
            })
        );
        let back: VerificationReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn validate_catches_tampering() {
        let k3 = named::complete(3).unwrap();
        let g = named::disjoint_union(&k3, &k3).unwrap();
        let h = named::path(3).unwrap();
        let mut r = verify_h_is(&g, &h).unwrap();
        r.validate(&g, &h).unwrap();
        r.additions[0].witness = Some(vec![0, 1, 2]);
        assert!(r.validate(&g, &h).is_err());
        let mut r = verify_h_is(&g, &h).unwrap();
        r.verdict = false;
        assert!(r.validate(&g, &h).is_err());
    }
}
