//! Constructions of every composite gate and W-state circuit in the
//! Clifford + dth-root-of-Z gate set, each registered as a macro with a
//! verifiable contract and its resource counts.

mod build;
mod ops;
mod registry;

pub use ops::{
    plan_postselected_w, synth_cgp, synth_controlled_h, synth_controlled_ztau, synth_mixed_tree,
    synth_p1, synth_phase_gadget, synth_point_phase, synth_qudit_spread, synth_qudit_w_tree,
    synth_spread, synth_spread_tree, synth_w_prime, synth_zcx, ChMode, PostSelectPlan,
};
pub use registry::Registry;

use num_complex::Complex64;
use serde::Serialize;

use crate::circuit::{Circuit, ResourceReport};

/// Logical wires a tree construction may request before the resource guard
/// trips (ancillas come on top of this).
pub const WIRE_LIMIT: usize = 128;

/// How a construction's unitary relates to its declared target.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum ContractClass {
    /// recorded_phase · unitary equals the target entrywise.
    ExactUpToRecordedPhase,
    /// Unitary equals the target up to one global phase.
    GlobalPhase,
    /// Comparison restricted to columns with the control wire in `values`,
    /// up to one shared phase.
    ControlSubspace { wire: usize, values: Vec<usize> },
    /// Action promised on specific basis inputs; verified at state level.
    BasisAction,
}

/// A synthesized construction: the macro-level circuit, its full expansion,
/// the declared contract, recorded phases, and resource counts.
#[derive(Debug, Clone)]
pub struct SynthResult {
    pub name: String,
    /// Macro-level circuit (what `serialize` emits for documents).
    pub circuit: Circuit,
    /// Fully expanded to primitives.
    pub expanded: Circuit,
    pub contract: ContractClass,
    /// Human-readable statement of the target action.
    pub action: String,
    /// γ with target = γ · unitary, when tracked analytically.
    pub recorded_phase: Option<Complex64>,
    /// Uncorrected per-branch phase (lax controlled-X, subspace CH).
    pub controlled_phase: Option<Complex64>,
    /// Counts over the expanded circuit.
    pub report: ResourceReport,
    /// For tree constructions: number of spread-type nodes.
    pub spread_count: Option<u64>,
}
