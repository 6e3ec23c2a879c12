//! Synthesis and verification of qudit circuits in the Clifford plus
//! dth-root-of-Z gate set.
//!
//! The crate builds controlled-X and controlled-H gates for any prime wire
//! dimension, W-state preparation circuits that scale to arbitrary size with
//! linear non-Clifford count and logarithmic depth, and the machinery to
//! verify every construction against brute-force linear-algebra oracles:
//!
//! - [`radix`]: mixed-radix registers, modular arithmetic, roots of unity.
//! - [`gates`]: primitive gate matrices and Pauli / Clifford / hierarchy
//!   classification.
//! - [`circuit`]: the circuit IR, resource counting, depth, the JSON
//!   document format, and macro expansion.
//! - [`synth`]: every composite construction with its contract and counts.
//! - [`sim`]: dense oracle engine and sparse map engine, state comparison,
//!   post-selection.
//! - [`verify`]: named check suites binding each claim to an executable
//!   test.
//!
//! ```
//! use wforge_core::sim::{apply_circuit, PureState, StateKind};
//! use wforge_core::synth::synth_spread_tree;
//!
//! // a 9-qubit W state over qutrits: 4 spread nodes, fidelity 1
//! let tree = synth_spread_tree(3, 2).unwrap();
//! assert_eq!(tree.spread_count, Some(4));
//!
//! let register = tree.expanded.register.clone();
//! let out = apply_circuit(&PureState::zero(&register), &tree.expanded).unwrap();
//! let w9: Vec<_> = out.support().into_iter().filter(|(cfg, _)| {
//!     cfg[..9].iter().sum::<usize>() == 1
//! }).collect();
//! assert_eq!(w9.len(), 9);
//! ```

pub mod circuit;
pub mod error;
pub mod gates;
pub mod linalg;
pub mod radix;
pub mod sim;
pub mod synth;
pub mod verify;

pub use circuit::{Circuit, GateInstance, MacroKind, MacroParams, OpKind, ResourceReport};
pub use error::{Error, Result};
pub use gates::{GateKind, GateSpec, Granularity, PauliWord, PhaseVector};
pub use radix::{RadixRegister, RootTable};
pub use sim::{PureState, StateKind, DEFAULT_TOL};
pub use synth::{Registry, SynthResult};
