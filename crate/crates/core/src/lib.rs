//! Induced saturation of small graphs.
//!
//! A graph `G` is `H`-induced-saturated when it has no induced copy of `H`,
//! yet deleting any edge or adding any non-edge creates one. This crate
//! builds the family `G_n` (a `v`-cycle of length `n - 1`, the complement of
//! that cycle on the `w`-side, and the matching `v_i w_i`), verifies
//! saturation for arbitrary targets by exhaustive search, and carries an
//! explicit certificate for every single-edge perturbation of `G_n`.

pub mod construction;
pub mod enumeration;
pub mod error;
pub mod exec;
pub mod graph;
mod graph6;
pub mod induced_path;
pub mod iso;
pub mod named;
pub mod saturation;

pub use construction::{triangle_free_w_quintuple, DihedralMap, GnLabel, LabeledGn, Side};
pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{Edge, Graph, MAX_ORDER};
pub use induced_path::{find_induced_path, is_induced_path, longest_induced_path, WitnessPath};
pub use iso::{find_isomorphism, is_isomorphic};
pub use saturation::{
    classify_edge, classify_labels, paper_witness, verify_h_is, verify_h_is_with, verify_pn_is,
    verify_pn_is_with, CaseKind, EdgeCase, EdgeOutcome, Mode, Pattern, VerificationReport,
};
