//! Gate-sequence builders shared by the macro registry and the synthesis
//! entry points. Builders write into a [`FragmentBuilder`], which tracks
//! fresh ancilla wires relative to the register the fragment splices into.

use crate::circuit::{Fragment, GateInstance, MacroKind, MacroParams};
use crate::error::{Error, Result};
use crate::gates::{GateSpec, Granularity, PhaseVector};
use crate::radix::mod_inverse;

pub struct FragmentBuilder {
    base: usize,
    gates: Vec<GateInstance>,
    ancilla_dims: Vec<usize>,
}

impl FragmentBuilder {
    pub fn new(base: usize) -> Self {
        FragmentBuilder { base, gates: Vec::new(), ancilla_dims: Vec::new() }
    }

    pub fn finish(self) -> Fragment {
        Fragment { gates: self.gates, ancilla_dims: self.ancilla_dims }
    }

    pub fn alloc_ancilla(&mut self, dim: usize) -> usize {
        self.ancilla_dims.push(dim);
        self.base + self.ancilla_dims.len() - 1
    }

    pub fn push(&mut self, inst: GateInstance) {
        self.gates.push(inst);
    }

    pub fn mac(&mut self, kind: MacroKind, params: MacroParams, wires: Vec<usize>) {
        self.push(GateInstance::mac(kind, params, wires));
    }

    pub fn x_pow(&mut self, d: usize, p: i64, w: usize) {
        if p.rem_euclid(d as i64) != 0 {
            self.push(GateInstance::prim(GateSpec::x_pow(d, p), vec![w]));
        }
    }

    pub fn z_pow(&mut self, d: usize, p: i64, w: usize) {
        if p.rem_euclid(d as i64) != 0 {
            self.push(GateInstance::prim(GateSpec::z_pow(d, p), vec![w]));
        }
    }

    pub fn h(&mut self, d: usize, w: usize) {
        self.push(GateInstance::prim(GateSpec::h(d), vec![w]));
    }

    pub fn h_dag(&mut self, d: usize, w: usize) {
        self.push(GateInstance::prim_dag(GateSpec::h(d), vec![w]));
    }

    pub fn s(&mut self, d: usize, w: usize) {
        self.push(GateInstance::prim(GateSpec::s(d), vec![w]));
    }

    pub fn s_dag(&mut self, d: usize, w: usize) {
        self.push(GateInstance::prim_dag(GateSpec::s(d), vec![w]));
    }

    pub fn t2(&mut self, w: usize) {
        self.push(GateInstance::prim(GateSpec::t2(), vec![w]));
    }

    pub fn t2_dag(&mut self, w: usize) {
        self.push(GateInstance::prim_dag(GateSpec::t2(), vec![w]));
    }

    pub fn sqrtz(&mut self, d: usize, w: usize) {
        self.push(GateInstance::prim(GateSpec::sqrt_z(d), vec![w]));
    }

    pub fn sqrtz_dag(&mut self, d: usize, w: usize) {
        self.push(GateInstance::prim_dag(GateSpec::sqrt_z(d), vec![w]));
    }

    pub fn cx(&mut self, dc: usize, dt: usize, c: usize, t: usize) {
        self.push(GateInstance::prim(GateSpec::cx(dc, dt), vec![c, t]));
    }

    pub fn cx_dag(&mut self, dc: usize, dt: usize, c: usize, t: usize) {
        self.push(GateInstance::prim_dag(GateSpec::cx(dc, dt), vec![c, t]));
    }

    /// The dth-root-of-Z realization of P1(k): first-to-last
    /// X^{−(k+1)}, √Z, X, √Z†, X^k. The product is ζ^{-1}·P1(k), so every
    /// emitted sequence contributes one recorded ζ.
    pub fn p1_seq(&mut self, d: usize, k: u64, w: usize) {
        let k = (k % d as u64) as i64;
        self.x_pow(d, -(k + 1), w);
        self.sqrtz(d, w);
        self.x_pow(d, 1, w);
        self.sqrtz_dag(d, w);
        self.x_pow(d, k, w);
    }

    /// Z(α) as a product of P1 sequences; returns the number of sequences
    /// emitted (each worth one recorded ζ).
    pub fn zalpha_chain(&mut self, alpha: &PhaseVector, w: usize) -> Result<u64> {
        if alpha.granularity != Granularity::Omega {
            return Err(Error::invalid("phase chains need an ω-granularity vector"));
        }
        let d = alpha.d;
        let mut seqs = 0;
        for (k, &e) in alpha.exponents.iter().enumerate() {
            for _ in 0..e {
                self.p1_seq(d, k as u64, w);
                seqs += 1;
            }
        }
        Ok(seqs)
    }
}

/// Controlled-global-phase corrector on one wire: applies ω^{(d−1)/2} to |0⟩
/// relative to the other levels. Realized as (d−1)/2 P1(0) sequences for odd
/// d; at d = 2 the needed relative phase is −i on |1⟩, which is √Z†.
/// Returns the number of P1 sequences emitted.
pub fn cgp_gates(b: &mut FragmentBuilder, d: usize, wire: usize) -> u64 {
    if d == 2 {
        b.sqrtz_dag(2, wire);
        0
    } else {
        let s = (d - 1) as u64 / 2;
        for _ in 0..s {
            b.p1_seq(d, 0, wire);
        }
        s
    }
}

/// Core of the |k⟩-controlled X^p construction: conjugate the control by
/// X^k, then repeat p times [target conjugated by H around d rounds of
/// CX then √Z on the target], with the control-side corrector when exact.
#[allow(clippy::too_many_arguments)]
pub fn kcx_gates(
    b: &mut FragmentBuilder,
    dc: usize,
    dt: usize,
    k: u64,
    p: i64,
    exact: bool,
    c: usize,
    t: usize,
) -> Result<()> {
    let p = p.rem_euclid(dt as i64);
    if p == 0 {
        return Err(Error::invalid("controlled-X power must be nonzero mod d"));
    }
    if dc != dt {
        return Err(Error::Unsupported(
            "general controlled-X needs equal control and target dimensions; \
             use the subspace form across dimensions"
                .into(),
        ));
    }
    let d = dt;
    let k = (k % d as u64) as i64;
    b.x_pow(d, -k, c);
    for _ in 0..p {
        b.h(d, t);
        for _ in 0..d {
            b.cx(d, d, c, t);
            b.sqrtz(d, t);
        }
        b.h_dag(d, t);
        if exact {
            cgp_gates(b, d, c);
        }
    }
    b.x_pow(d, k, c);
    Ok(())
}

/// Controlled-X for a control promised to the {|0⟩,|1⟩} subspace: Clifford,
/// valid across mixed dimensions. k selects which of the two levels fires.
pub fn kcx_subspace_gates(
    b: &mut FragmentBuilder,
    dc: usize,
    dt: usize,
    k: u64,
    p: i64,
    c: usize,
    t: usize,
) -> Result<()> {
    let p = p.rem_euclid(dt as i64);
    if p == 0 {
        return Err(Error::invalid("controlled-X power must be nonzero mod d"));
    }
    match k {
        1 => {
            b.push(GateInstance::prim(GateSpec::cx_pow(dc, dt, p), vec![c, t]));
        }
        0 => {
            b.x_pow(dt, p, t);
            b.push(GateInstance::prim(GateSpec::cx_pow(dc, dt, -p), vec![c, t]));
        }
        _ => {
            return Err(Error::invalid(
                "subspace-promised control only fires on level 0 or 1",
            ))
        }
    }
    Ok(())
}

/// Diagonal applying ω^power exactly at |cval,tval⟩: controlled-X both wires
/// into a clean ancilla, P1(2) on the coincidence level, uncompute. The
/// conjugation pairs cancel their own recorded phases, leaving ζ^power.
/// Returns the number of uncancelled P1 sequences (power mod d).
///
/// At target dimension 2 the phase is ±1 and a controlled-Z conjugation
/// does the whole job without an ancilla.
#[allow(clippy::too_many_arguments)]
pub fn point_phase_gates(
    b: &mut FragmentBuilder,
    dc: usize,
    dt: usize,
    cval: u64,
    tval: u64,
    power: i64,
    subspace_control: bool,
    c: usize,
    t: usize,
    shared_ancilla: Option<usize>,
) -> Result<u64> {
    if cval >= dc as u64 || tval >= dt as u64 {
        return Err(Error::invalid("point-phase levels out of range"));
    }
    if dt == 2 {
        if dc != 2 {
            return Err(Error::Unsupported("qubit point phase needs a qubit control".into()));
        }
        let power = power.rem_euclid(2);
        if power == 0 {
            return Ok(0);
        }
        b.x_pow(2, 1 - cval as i64, c);
        b.x_pow(2, 1 - tval as i64, t);
        b.h_dag(2, t);
        b.cx(2, 2, c, t);
        b.h(2, t);
        b.x_pow(2, -(1 - tval as i64), t);
        b.x_pow(2, -(1 - cval as i64), c);
        return Ok(0);
    }
    let power = power.rem_euclid(dt as i64) as u64;
    if power == 0 {
        return Ok(0);
    }
    let anc = shared_ancilla.unwrap_or_else(|| b.alloc_ancilla(dt));

    let step1 = |b: &mut FragmentBuilder| -> Result<()> {
        if subspace_control {
            kcx_subspace_gates(b, dc, dt, cval, 1, c, anc)
        } else {
            kcx_gates(b, dc, dt, cval, 1, true, c, anc)
        }
    };
    let step2 = |b: &mut FragmentBuilder| kcx_gates(b, dt, dt, tval, 1, true, t, anc);

    step1(b)?;
    step2(b)?;
    for _ in 0..power {
        b.p1_seq(dt, 2, anc);
    }
    // uncompute: dagger of [step1, step2]
    let mark = b.gates.len();
    step1(b)?;
    step2(b)?;
    let tail: Vec<GateInstance> =
        b.gates.split_off(mark).into_iter().rev().map(GateInstance::daggered).collect();
    b.gates.extend(tail);
    Ok(power)
}

/// Controlled Z(τ) restricted to control ∈ {0,1}: ancilla-free repetitions
/// of [Z(α) on the target, phase gadget with −α] when the α recurrence is
/// cyclically consistent (d ≥ 5); two point phases otherwise (d = 3, where
/// Z(τ) = ω²·P1(0) on the fired branch). Returns the recorded-ζ count.
pub fn cztau_gates(
    b: &mut FragmentBuilder,
    dc: usize,
    dt: usize,
    c: usize,
    t: usize,
    shared_ancilla: Option<usize>,
) -> Result<u64> {
    if dt == 2 {
        return Err(Error::Unsupported("controlled Z(τ) is defined for odd target dimension".into()));
    }
    let d = dt;
    if d == 3 {
        let anc = shared_ancilla.unwrap_or_else(|| b.alloc_ancilla(3));
        let mut zetas = 0;
        zetas += point_phase_gates(b, dc, 3, 1, 1, 2, true, c, t, Some(anc))?;
        zetas += point_phase_gates(b, dc, 3, 1, 2, 2, true, c, t, Some(anc))?;
        return Ok(zetas);
    }
    let (alpha, consistent) = crate::gates::alpha_vector(d)?;
    debug_assert!(consistent, "the α recurrence closes cyclically for d ≥ 5");
    let reps = mod_inverse(2, d)?;
    let neg = alpha.neg();
    let mut zetas = 0;
    for _ in 0..reps {
        zetas += b.zalpha_chain(&alpha, t)?;
        // gadget with −α: CX conjugation of the target-side chain
        b.cx(dc, dt, c, t);
        zetas += b.zalpha_chain(&neg, t)?;
        b.cx_dag(dc, dt, c, t);
    }
    Ok(zetas)
}

/// Subspace-mode controlled H: identity on control |0⟩ and i^{−(d−1)/2}·H on
/// control |1⟩ for odd d, built as CZτ · H · CZτ · H† · CZτ on the target.
/// At d = 2 the T-conjugated CX form is exact. Returns the recorded-ζ count.
pub fn ch_gates(b: &mut FragmentBuilder, dc: usize, dt: usize, c: usize, t: usize) -> Result<u64> {
    if dt == 2 {
        // valid for any control dimension: the control acts through its
        // {|0⟩,|1⟩} subspace via the plain CX primitive
        b.s(2, t);
        b.h(2, t);
        b.t2(t);
        b.cx(dc, 2, c, t);
        b.t2_dag(t);
        b.h_dag(2, t);
        b.s_dag(2, t);
        return Ok(0);
    }
    // one ancilla serves all three controlled phases: it is clean between
    // uses, so sequential sharing is sound
    let shared = if dt == 3 { Some(b.alloc_ancilla(3)) } else { None };
    let mut zetas = 0;
    zetas += cztau_gates(b, dc, dt, c, t, shared)?;
    b.h(dt, t);
    zetas += cztau_gates(b, dc, dt, c, t, shared)?;
    b.h_dag(dt, t);
    zetas += cztau_gates(b, dc, dt, c, t, shared)?;
    Ok(zetas)
}

/// Full |k⟩-controlled H via a clean ancilla: controlled-X the control into
/// the ancilla, subspace CH from the ancilla, uncompute. The conjugation
/// pair cancels its own recorded phases; returns the CH recorded-ζ count.
pub fn kch_gates(
    b: &mut FragmentBuilder,
    dc: usize,
    dt: usize,
    k: u64,
    c: usize,
    t: usize,
) -> Result<u64> {
    let anc = b.alloc_ancilla(dc);
    kcx_gates(b, dc, dc, k, 1, true, c, anc)?;
    let zetas = ch_gates(b, dc, dt, anc, t)?;
    let mark = b.gates.len();
    kcx_gates(b, dc, dc, k, 1, true, c, anc)?;
    let tail: Vec<GateInstance> =
        b.gates.split_off(mark).into_iter().rev().map(GateInstance::daggered).collect();
    b.gates.extend(tail);
    Ok(zetas)
}

/// W-state preparation across d wires of dimension d: H on wire 1, lax
/// controlled-X fan-out, deferred phase fix of Z^{−(d−1)/2} on wire 1
/// (√Z† at d = 2).
#[allow(clippy::needless_range_loop)]
pub fn w_prime_gates(b: &mut FragmentBuilder, d: usize, wires: &[usize]) -> Result<()> {
    if wires.len() != d {
        return Err(Error::invalid(format!("w-prime at d={d} needs exactly {d} wires")));
    }
    let (w0, w1) = (wires[0], wires[1]);
    b.h(d, w1);
    kcx_gates(b, d, d, 0, 1, false, w1, w0)?;
    for k in 2..d {
        kcx_gates(b, d, d, k as u64, 1, false, w1, wires[k])?;
        for _ in 0..k {
            b.cx_dag(d, d, wires[k], w1);
        }
    }
    if d == 2 {
        b.s_dag(2, w1);
    } else {
        b.z_pow(d, -((d as i64 - 1) / 2), w1);
    }
    Ok(())
}

/// Spread node: maps |0...0⟩ to itself and |10...0⟩ to the m-wire W state
/// (phases recorded separately). Controlled-X components are exact so every
/// branch picks up one uniform CH phase. The leader may carry any dimension;
/// the remaining wires share dimension m.
#[allow(clippy::needless_range_loop)]
pub fn spread_gates(b: &mut FragmentBuilder, dims: &[usize], wires: &[usize]) -> Result<()> {
    let m = wires.len();
    if m < 2 {
        return Err(Error::invalid("spread needs at least two wires"));
    }
    let d0 = dims[0];
    let dm = dims[1];
    if dims[1..].iter().any(|&d| d != dm) {
        return Err(Error::invalid("spread target wires must share one dimension"));
    }
    if dm != m {
        return Err(Error::invalid(format!(
            "spread across {m} wires needs target dimension {m}, got {dm}"
        )));
    }
    let (w0, w1) = (wires[0], wires[1]);
    ch_gates(b, d0, dm, w0, w1)?;
    b.cx_dag(dm, d0, w1, w0);
    for k in 2..m {
        kcx_gates(b, dm, dm, k as u64, 1, true, w1, wires[k])?;
        for _ in 0..k {
            b.cx_dag(dm, dm, wires[k], w1);
        }
        for _ in 0..(k - 1) {
            b.cx(dm, d0, wires[k], w0);
        }
    }
    Ok(())
}

/// Qudit spread node on d wires of dimension d: for each control level m,
/// a full controlled H onto wire m followed by value-controlled X^{−m}
/// clean-ups back onto the leader.
#[allow(clippy::needless_range_loop)]
pub fn qspread_gates(b: &mut FragmentBuilder, d: usize, wires: &[usize]) -> Result<()> {
    if wires.len() != d {
        return Err(Error::invalid(format!("qudit spread at d={d} needs exactly {d} wires")));
    }
    let w0 = wires[0];
    for m in 1..d {
        kch_gates(b, d, d, m as u64, w0, wires[m])?;
        for j in 1..d {
            kcx_gates(b, d, d, j as u64, (d - m) as i64, true, wires[m], w0)?;
        }
    }
    Ok(())
}
