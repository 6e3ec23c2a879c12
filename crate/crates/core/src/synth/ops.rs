//! Public synthesis entry points. Each returns a [`SynthResult`] holding the
//! macro-level circuit, its primitive expansion, the declared contract, and
//! resource counts.

use num_complex::Complex64;

use crate::circuit::{Circuit, Fragment, GateInstance, MacroKind, MacroParams};
use crate::error::{Error, Result};
use crate::gates::{Granularity, PhaseVector};
use crate::radix::{is_prime, RadixRegister, RootTable};

use super::build::{ch_gates, cztau_gates, kch_gates, FragmentBuilder};
use super::registry::{tree_dims, tree_nodes, Registry};
use super::{ContractClass, SynthResult, WIRE_LIMIT};

fn prime_guard(d: usize) -> Result<()> {
    if !is_prime(d) {
        return Err(Error::NotPrime(d));
    }
    Ok(())
}

fn odd_prime_guard(d: usize) -> Result<()> {
    prime_guard(d)?;
    if d == 2 {
        return Err(Error::Unsupported("this construction needs an odd prime dimension".into()));
    }
    Ok(())
}

/// Splice a primitive fragment into a circuit over `register`, appending the
/// fragment's ancilla wires.
fn fragment_circuit(register: RadixRegister, frag: Fragment) -> Result<Circuit> {
    let mut c = Circuit::new(register);
    for dim in frag.ancilla_dims {
        let w = c.register.push_wire(dim)?;
        c.mark_ancilla(w);
    }
    for g in frag.gates {
        c.push(g)?;
    }
    Ok(c)
}

struct Pieces {
    name: String,
    action: String,
    contract: ContractClass,
    recorded_phase: Option<Complex64>,
    controlled_phase: Option<Complex64>,
    spread_count: Option<u64>,
}

fn assemble(circuit: Circuit, expanded: Circuit, p: Pieces) -> Result<SynthResult> {
    let report = expanded.count_resources()?;
    Ok(SynthResult {
        name: p.name,
        circuit,
        expanded,
        contract: p.contract,
        action: p.action,
        recorded_phase: p.recorded_phase,
        controlled_phase: p.controlled_phase,
        report,
        spread_count: p.spread_count,
    })
}

/// One-macro circuit plus its expansion.
fn macro_result(
    register: RadixRegister,
    kind: MacroKind,
    params: MacroParams,
    wires: Vec<usize>,
    pieces: Pieces,
) -> Result<SynthResult> {
    let mut circuit = Circuit::new(register);
    circuit.push(GateInstance::mac(kind, params, wires))?;
    let expanded = circuit.expand(&Registry)?;
    assemble(circuit, expanded, pieces)
}

/// P1(k): the diagonal applying ω to level k only, as the recorded-ζ root-of-Z
/// sequence. Clifford at d = 2, level d−1 otherwise.
pub fn synth_p1(d: usize, k: u64) -> Result<SynthResult> {
    prime_guard(d)?;
    if k >= d as u64 {
        return Err(Error::invalid(format!("level {k} out of range for d={d}")));
    }
    let register = RadixRegister::uniform(d, 1)?;
    let mut b = FragmentBuilder::new(1);
    b.p1_seq(d, k, 0);
    let circuit = fragment_circuit(register, b.finish())?;
    let roots = RootTable::new(d)?;
    let action = if d == 2 {
        format!("phase -1 on level {k} (Clifford at d=2)")
    } else {
        format!("phase omega on level {k} of a dimension-{d} wire")
    };
    assemble(
        circuit.clone(),
        circuit,
        Pieces {
            name: format!("p1(d={d},k={k})"),
            action,
            contract: ContractClass::ExactUpToRecordedPhase,
            recorded_phase: Some(roots.zeta()),
            controlled_phase: None,
            spread_count: None,
        },
    )
}

/// The single-wire corrector pairing with the lax controlled-X: ω^{(d−1)/2}
/// on |0⟩ relative to all other levels, with d−1 root-of-Z gates (√Z† at
/// d = 2, where the relative phase is a quarter turn).
pub fn synth_cgp(d: usize) -> Result<SynthResult> {
    prime_guard(d)?;
    let roots = RootTable::new(d)?;
    let recorded = if d == 2 {
        Complex64::new(0.0, 1.0)
    } else {
        roots.zeta_pow((d as i64 - 1) / 2)
    };
    macro_result(
        RadixRegister::uniform(d, 1)?,
        MacroKind::Cgp,
        MacroParams::default(),
        vec![0],
        Pieces {
            name: format!("cgp(d={d})"),
            action: format!("phase omega^{} on level 0, identity elsewhere", (d - 1) / 2),
            contract: ContractClass::ExactUpToRecordedPhase,
            recorded_phase: Some(recorded),
            controlled_phase: None,
            spread_count: None,
        },
    )
}

/// |k⟩-controlled X^p. Lax variant: root-of-Z count d·p, off by the
/// controlled phase ω^{(d−1)/2} per repetition on control ≠ k. Exact
/// variant: count (2d−1)·p, equal to the target up to one global phase.
pub fn synth_zcx(d: usize, k: u64, p: i64, exact: bool) -> Result<SynthResult> {
    prime_guard(d)?;
    if k >= d as u64 {
        return Err(Error::invalid(format!("control value {k} out of range for d={d}")));
    }
    let pm = p.rem_euclid(d as i64);
    if pm == 0 {
        return Err(Error::invalid("target power must be nonzero mod d"));
    }
    let roots = RootTable::new(d)?;
    let s = (d as i64 - 1) / 2;
    let (recorded, controlled) = if exact {
        let per_rep = if d == 2 {
            Complex64::new(1.0, 0.0)
        } else {
            roots.zeta_pow(s) * roots.omega_pow(-s)
        };
        (Some(per_rep.powi(pm as i32)), None)
    } else {
        let per_rep = if d == 2 { Complex64::new(0.0, 1.0) } else { roots.omega_pow(s) };
        (None, Some(per_rep.powi(pm as i32)))
    };
    let kind = if k == 0 { MacroKind::Zcx } else { MacroKind::Kcx };
    macro_result(
        RadixRegister::uniform(d, 2)?,
        kind,
        MacroParams { k: Some(k), power: Some(pm), exact: Some(exact), ..Default::default() },
        vec![0, 1],
        Pieces {
            name: format!("zcx(d={d},k={k},p={pm},{})", if exact { "exact" } else { "lax" }),
            action: format!("X^{pm} on the target iff the control is |{k}>"),
            contract: ContractClass::GlobalPhase,
            recorded_phase: recorded,
            controlled_phase: controlled,
            spread_count: None,
        },
    )
}

/// Two-wire diagonal applying ω^{α((b·x + y) mod d)}: a controlled-X^b
/// conjugation of the single-wire phase chain.
pub fn synth_phase_gadget(d: usize, alpha: &PhaseVector, b: u64) -> Result<SynthResult> {
    prime_guard(d)?;
    if alpha.d != d {
        return Err(Error::invalid("phase vector dimension mismatch"));
    }
    if alpha.granularity != Granularity::Omega {
        return Err(Error::invalid("gadget needs an ω-granularity phase vector"));
    }
    if b == 0 || b >= d as u64 {
        return Err(Error::invalid("direction b must lie in 1..d"));
    }
    let roots = RootTable::new(d)?;
    let recorded = roots.zeta_pow(alpha.total() as i64);
    macro_result(
        RadixRegister::uniform(d, 2)?,
        MacroKind::Gadget,
        MacroParams { alpha: Some(alpha.clone()), b: Some(b), ..Default::default() },
        vec![0, 1],
        Pieces {
            name: format!("gadget(d={d},b={b})"),
            action: format!("phase omega^alpha(({b}x+y) mod {d}) on |x,y>"),
            contract: ContractClass::ExactUpToRecordedPhase,
            recorded_phase: Some(recorded),
            controlled_phase: None,
            spread_count: None,
        },
    )
}

/// Diagonal applying ω^power exactly at |cval,tval⟩, built around one clean
/// ancilla (Clifford controlled-Z conjugations at d = 2).
pub fn synth_point_phase(d: usize, cval: u64, tval: u64, power: i64) -> Result<SynthResult> {
    prime_guard(d)?;
    if cval >= d as u64 || tval >= d as u64 {
        return Err(Error::invalid("point-phase levels out of range"));
    }
    let roots = RootTable::new(d)?;
    let recorded = if d == 2 {
        Complex64::new(1.0, 0.0)
    } else {
        roots.zeta_pow(power.rem_euclid(d as i64))
    };
    macro_result(
        RadixRegister::uniform(d, 2)?,
        MacroKind::PointPhase,
        MacroParams { cval: Some(cval), tval: Some(tval), power: Some(power), ..Default::default() },
        vec![0, 1],
        Pieces {
            name: format!("point_phase(d={d},c={cval},t={tval},p={power})"),
            action: format!("phase omega^{power} on |{cval},{tval}>, identity elsewhere"),
            contract: ContractClass::ExactUpToRecordedPhase,
            recorded_phase: Some(recorded),
            controlled_phase: None,
            spread_count: None,
        },
    )
}

/// Controlled Z(τ) on the {|0⟩,|1⟩} control subspace.
pub fn synth_controlled_ztau(d: usize) -> Result<SynthResult> {
    odd_prime_guard(d)?;
    // scratch run for the recorded-ζ tally
    let mut scratch = FragmentBuilder::new(2);
    let zetas = cztau_gates(&mut scratch, d, d, 0, 1, None)?;
    let roots = RootTable::new(d)?;
    macro_result(
        RadixRegister::uniform(d, 2)?,
        MacroKind::Cztau,
        MacroParams::default(),
        vec![0, 1],
        Pieces {
            name: format!("cztau(d={d})"),
            action: "Z(tau) on the target iff the control is |1>, identity on |0>".into(),
            contract: ContractClass::ControlSubspace { wire: 0, values: vec![0, 1] },
            recorded_phase: Some(roots.zeta_pow(zetas as i64)),
            controlled_phase: None,
            spread_count: None,
        },
    )
}

/// Controlled-H modes: restricted to a {|0⟩,|1⟩} control, or valid for every
/// control value via a clean uncomputed ancilla.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChMode {
    Subspace,
    Full { k: u64 },
}

/// Controlled H. In subspace mode the control-|1⟩ branch applies
/// i^{−(d−1)/2}·H; the recorded controlled phase i^{(d−1)/2} is the factor
/// restoring a plain H (exact at d = 2, where it is 1).
pub fn synth_controlled_h(d: usize, mode: ChMode) -> Result<SynthResult> {
    prime_guard(d)?;
    let i = Complex64::new(0.0, 1.0);
    let s = ((d - 1) / 2) as u32;
    let controlled = if d == 2 { None } else { Some(i.powu(s)) };
    let mut scratch = FragmentBuilder::new(2);
    let roots = RootTable::new(d)?;
    match mode {
        ChMode::Subspace => {
            let zetas = ch_gates(&mut scratch, d, d, 0, 1)?;
            macro_result(
                RadixRegister::uniform(d, 2)?,
                MacroKind::Ch,
                MacroParams::default(),
                vec![0, 1],
                Pieces {
                    name: format!("ch(d={d},subspace)"),
                    action: "identity on control |0>; H on the target (up to the recorded \
                             controlled phase) on control |1>"
                        .into(),
                    contract: ContractClass::ControlSubspace { wire: 0, values: vec![0, 1] },
                    recorded_phase: Some(roots.zeta_pow(zetas as i64)),
                    controlled_phase: controlled,
                    spread_count: None,
                },
            )
        }
        ChMode::Full { k } => {
            if k >= d as u64 {
                return Err(Error::invalid(format!("control value {k} out of range for d={d}")));
            }
            let zetas = kch_gates(&mut scratch, d, d, k, 0, 1)?;
            let kind = if k == 1 { MacroKind::Och } else { MacroKind::Kch };
            let params = if k == 1 {
                MacroParams::default()
            } else {
                MacroParams { k: Some(k), ..Default::default() }
            };
            macro_result(
                RadixRegister::uniform(d, 2)?,
                kind,
                params,
                vec![0, 1],
                Pieces {
                    name: format!("kch(d={d},k={k})"),
                    action: format!(
                        "H on the target (up to the recorded controlled phase) iff the \
                         control is |{k}>; ancilla returns to |0>"
                    ),
                    contract: ContractClass::ControlSubspace {
                        wire: 0,
                        values: (0..d).collect(),
                    },
                    recorded_phase: Some(roots.zeta_pow(zetas as i64)),
                    controlled_phase: controlled,
                    spread_count: None,
                },
            )
        }
    }
}

/// The d-qubit W state on d wires of dimension d from the all-|0⟩ input,
/// with lax controlled-X fan-out and one deferred phase fix.
pub fn synth_w_prime(d: usize) -> Result<SynthResult> {
    prime_guard(d)?;
    let roots = RootTable::new(d)?;
    let s = (d as i64 - 1) / 2;
    // every branch ends carrying ω^{s(d−2)}; the W target is that times the
    // circuit output (exact at d = 2)
    let recorded = if d == 2 {
        Complex64::new(1.0, 0.0)
    } else {
        roots.omega_pow(-s * (d as i64 - 2))
    };
    macro_result(
        RadixRegister::uniform(d, d)?,
        MacroKind::WPrime,
        MacroParams::default(),
        (0..d).collect(),
        Pieces {
            name: format!("w_prime(d={d})"),
            action: format!("all-|0> input maps to the {d}-qubit W state in the {{0,1}} subspace"),
            contract: ContractClass::BasisAction,
            recorded_phase: Some(recorded),
            controlled_phase: None,
            spread_count: Some(1),
        },
    )
}

/// Spread node: |0...0⟩ to itself and |10...0⟩ to the d-wire W state, each up
/// to its own recorded phase. Control wire promised to {|0⟩,|1⟩}.
pub fn synth_spread(d: usize) -> Result<SynthResult> {
    prime_guard(d)?;
    let i = Complex64::new(0.0, 1.0);
    let controlled = if d == 2 { None } else { Some(i.powu(((d - 1) / 2) as u32)) };
    let mut circuit = Circuit::new(RadixRegister::uniform(d, d)?);
    circuit.mark_control_subspace(0);
    circuit.push(GateInstance::mac(MacroKind::Spread, MacroParams::default(), (0..d).collect()))?;
    let expanded = circuit.expand(&Registry)?;
    assemble(
        circuit,
        expanded,
        Pieces {
            name: format!("spread(d={d})"),
            action: format!(
                "|0...0> to |0...0> and |10...0> to the {d}-wire W state, phases recorded"
            ),
            contract: ContractClass::BasisAction,
            recorded_phase: None,
            controlled_phase: controlled,
            spread_count: Some(1),
        },
    )
}

fn tree_guard(total: usize) -> Result<()> {
    if total > WIRE_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "tree of {total} wires exceeds the limit of {WIRE_LIMIT}"
        )));
    }
    Ok(())
}

fn geometric_nodes(d: usize, n: u32) -> u64 {
    (0..n).map(|i| (d as u64).pow(i)).sum()
}

/// W state of size d^n: one W-prime root followed by n−1 layers of spread
/// nodes, (d^n−1)/(d−1) nodes in total.
pub fn synth_spread_tree(d: usize, n: u32) -> Result<SynthResult> {
    prime_guard(d)?;
    if n == 0 {
        return Err(Error::invalid("tree needs at least one layer"));
    }
    let total = d.checked_pow(n).ok_or_else(|| Error::ResourceLimit("tree size overflow".into()))?;
    tree_guard(total)?;
    macro_result(
        RadixRegister::uniform(d, total)?,
        MacroKind::WTree,
        MacroParams { n: Some(n), ..Default::default() },
        (0..total).collect(),
        Pieces {
            name: format!("wtree(d={d},n={n})"),
            action: format!("all-|0> input maps to the {total}-qubit W state up to a global phase"),
            contract: ContractClass::BasisAction,
            recorded_phase: None,
            controlled_phase: None,
            spread_count: Some(geometric_nodes(d, n)),
        },
    )
}

/// Qudit spread node on d wires of dimension d.
pub fn synth_qudit_spread(d: usize) -> Result<SynthResult> {
    odd_prime_guard(d)?;
    let i = Complex64::new(0.0, 1.0);
    macro_result(
        RadixRegister::uniform(d, d)?,
        MacroKind::QSpread,
        MacroParams::default(),
        (0..d).collect(),
        Pieces {
            name: format!("qspread(d={d})"),
            action: format!(
                "|k,0...0> maps to (sum_j |0>^k|j>|0...> + |k,0...0>)/sqrt({d}) for k != 0, \
                 uniformly in k up to one phase; |0...0> maps to itself"
            ),
            contract: ContractClass::BasisAction,
            recorded_phase: None,
            controlled_phase: Some(i.powu(((d - 1) / 2) as u32)),
            spread_count: Some(1),
        },
    )
}

/// Qudit W state of size d^n from the resource-state input on wire 0:
/// n layers of qudit spread nodes, no post-selection.
pub fn synth_qudit_w_tree(d: usize, n: u32) -> Result<SynthResult> {
    odd_prime_guard(d)?;
    if n == 0 {
        return Err(Error::invalid("tree needs at least one layer"));
    }
    let total = d.checked_pow(n).ok_or_else(|| Error::ResourceLimit("tree size overflow".into()))?;
    tree_guard(total)?;
    macro_result(
        RadixRegister::uniform(d, total)?,
        MacroKind::QWTree,
        MacroParams { n: Some(n), ..Default::default() },
        (0..total).collect(),
        Pieces {
            name: format!("qwtree(d={d},n={n})"),
            action: format!(
                "resource input on wire 0 maps to the {total}-qudit W state up to a global phase"
            ),
            contract: ContractClass::BasisAction,
            recorded_phase: None,
            controlled_phase: None,
            spread_count: Some(geometric_nodes(d, n)),
        },
    )
}

/// W state of composite size ∏ factors: layer i runs spread nodes of
/// dimension factors[i]; cross-dimension boundaries ride the mixed-dimension
/// controlled-X primitives, so the whole tree expands to primitives.
pub fn synth_mixed_tree(factors: &[usize]) -> Result<SynthResult> {
    if factors.is_empty() {
        return Err(Error::invalid("factor list must be nonempty"));
    }
    for &f in factors {
        if !is_prime(f) {
            return Err(Error::NotPrime(f));
        }
    }
    let total: usize = factors.iter().product();
    tree_guard(total)?;
    let dims = tree_dims(factors);
    let spread_count = tree_nodes(factors).iter().map(|l| l.len() as u64).sum();
    macro_result(
        RadixRegister::new(dims)?,
        MacroKind::MixedTree,
        MacroParams { factors: Some(factors.to_vec()), ..Default::default() },
        (0..total).collect(),
        Pieces {
            name: format!("mixed_tree({factors:?})"),
            action: format!(
                "all-|0> input maps to the {total}-qubit W state in the {{0,1}} subspace \
                 up to a global phase"
            ),
            contract: ContractClass::BasisAction,
            recorded_phase: None,
            controlled_phase: None,
            spread_count: Some(spread_count),
        },
    )
}

/// Post-selection plan: build the next power-of-d W state and project the
/// surplus wires onto |0⟩.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct PostSelectPlan {
    pub n_target: usize,
    pub d: usize,
    /// ⌈log_d N⌉ layers.
    pub tree_layers: u32,
    /// d^layers wires in the tree.
    pub tree_size: usize,
    /// Wires projected onto |0⟩ (the trailing ones).
    pub drop_wires: Vec<usize>,
    /// N / d^layers.
    pub success_probability: f64,
    /// Closed form d^layers / N.
    pub expected_attempts: f64,
}

pub fn plan_postselected_w(n_target: usize, d: usize) -> Result<PostSelectPlan> {
    prime_guard(d)?;
    if n_target < 2 {
        return Err(Error::invalid("W states need at least two wires"));
    }
    let mut layers = 0u32;
    let mut size = 1usize;
    while size < n_target {
        size = size
            .checked_mul(d)
            .ok_or_else(|| Error::ResourceLimit("tree size overflow".into()))?;
        layers += 1;
    }
    Ok(PostSelectPlan {
        n_target,
        d,
        tree_layers: layers,
        tree_size: size,
        drop_wires: (n_target..size).collect(),
        success_probability: n_target as f64 / size as f64,
        expected_attempts: size as f64 / n_target as f64,
    })
}
