//! Named check suites binding every claim to an executable verification.
//!
//! Each check compares a construction against an independently coded
//! brute-force oracle (case-by-case basis action, never the synthesis path)
//! or against a closed-form count. Checks are deterministic and ordered, so
//! two runs on the same build produce identical reports.

use ndarray::Array2;
use num_complex::Complex64;
use serde::Serialize;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gates::{hierarchy_level, tau_vector, GateSpec, LevelResult, PhaseVector};
use crate::linalg::{dagger, identity, max_abs_diff, CMat};
use crate::radix::{RadixRegister, RootTable};
use crate::sim::{
    apply_circuit, apply_circuit_bounded, circuit_unitary, compare_unitaries, CompareMode,
    PureState, StateKind, DEFAULT_TOL,
};
use crate::synth::{self, ChMode};

// --- brute-force oracles ----------------------------------------------------

pub mod oracle {
    //! Matrix and state oracles built from case analysis of the defining
    //! actions. Nothing here touches the synthesis module.

    use super::*;

    /// Diagonal with ω at level k.
    pub fn p1(d: usize, k: usize) -> CMat {
        let roots = RootTable::new(d).unwrap();
        let mut m = identity(d);
        m[(k, k)] = roots.omega();
        m
    }

    /// |k⟩-controlled X^p: X^p on the target iff the control is k.
    pub fn kcx(d: usize, k: usize, p: i64) -> CMat {
        let mut m = Array2::zeros((d * d, d * d));
        for c in 0..d {
            for t in 0..d {
                let to = if c == k { (t as i64 + p).rem_euclid(d as i64) as usize } else { t };
                m[(c * d + to, c * d + t)] = Complex64::new(1.0, 0.0);
            }
        }
        m
    }

    /// The lax controlled-X target: kcx times ω^{(d−1)/2·p} on every
    /// control ≠ k column (i at d = 2 per power).
    pub fn kcx_lax(d: usize, k: usize, p: i64) -> CMat {
        let roots = RootTable::new(d).unwrap();
        let phase = if d == 2 {
            Complex64::new(0.0, 1.0).powi(p.rem_euclid(2) as i32)
        } else {
            roots.omega_pow((d as i64 - 1) / 2 * p)
        };
        let mut m = kcx(d, k, p);
        for c in 0..d {
            if c == k {
                continue;
            }
            for t in 0..d {
                for r in 0..d * d {
                    m[(r, c * d + t)] *= phase;
                }
            }
        }
        m
    }

    /// Single-wire corrector: ω^{(d−1)/2} on |0⟩ (i at d = 2).
    pub fn cgp(d: usize) -> CMat {
        let mut m = identity(d);
        m[(0, 0)] = if d == 2 {
            Complex64::new(0.0, 1.0)
        } else {
            RootTable::new(d).unwrap().omega_pow((d as i64 - 1) / 2)
        };
        m
    }

    /// Two-wire diagonal ω^{α((b·x + y) mod d)}.
    pub fn gadget(d: usize, alpha: &PhaseVector, b: u64) -> CMat {
        let roots = RootTable::new(d).unwrap();
        let mut m: CMat = Array2::zeros((d * d, d * d));
        for x in 0..d {
            for y in 0..d {
                let idx = x * d + y;
                let e = alpha.exponents[(b as usize * x + y) % d] as i64;
                m[(idx, idx)] = roots.omega_pow(e);
            }
        }
        m
    }

    /// Diagonal with ω^power at |cval,tval⟩ only.
    pub fn point_phase(d: usize, cval: usize, tval: usize, power: i64) -> CMat {
        let roots = RootTable::new(d).unwrap();
        let mut m = identity(d * d);
        let idx = cval * d + tval;
        m[(idx, idx)] = roots.omega_pow(power);
        m
    }

    /// Z(v) diagonal from an exponent vector.
    pub fn z_phase(v: &PhaseVector) -> CMat {
        GateSpec::z_alpha(v.clone()).matrix().unwrap()
    }
}

// --- check plumbing ----------------------------------------------------------

/// One executable check: an id, a claim it verifies, the measured and
/// expected values, and the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub claim: String,
    pub pass: bool,
    pub measured: String,
    pub expected: String,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckReport>,
    pub passed: usize,
    pub failed: usize,
    pub overall_pass: bool,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<CheckReport>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let failed = checks.len() - passed;
        SuiteReport { suite: suite.into(), passed, failed, overall_pass: failed == 0, checks }
    }

    /// One line per check, stable ordering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {} | {} | measured {} | expected {} | tol {:e}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.claim,
                c.measured,
                c.expected,
                c.tolerance
            ));
        }
        out.push_str(&format!(
            "suite {}: {}/{} passed -> {}\n",
            self.suite,
            self.passed,
            self.checks.len(),
            if self.overall_pass { "PASS" } else { "FAIL" }
        ));
        out
    }
}

struct Suite {
    checks: Vec<CheckReport>,
    tol: f64,
}

impl Suite {
    fn new(tol: f64) -> Self {
        Suite { checks: Vec::new(), tol }
    }

    fn push(&mut self, id: &str, claim: &str, pass: bool, measured: String, expected: String) {
        self.checks.push(CheckReport {
            id: id.into(),
            claim: claim.into(),
            pass,
            measured,
            expected,
            tolerance: self.tol,
        });
    }

    fn deviation(&mut self, id: &str, claim: &str, deviation: f64) {
        let pass = deviation < self.tol;
        self.push(id, claim, pass, format!("max deviation {deviation:.3e}"), "0 within tolerance".into());
    }

    fn count(&mut self, id: &str, claim: &str, measured: usize, expected: usize) {
        self.push(id, claim, measured == expected, measured.to_string(), expected.to_string());
    }

    fn number(&mut self, id: &str, claim: &str, measured: f64, expected: f64) {
        let pass = (measured - expected).abs() < self.tol;
        self.push(id, claim, pass, format!("{measured}"), format!("{expected}"));
    }

    fn flag(&mut self, id: &str, claim: &str, pass: bool, measured: String) {
        self.push(id, claim, pass, measured, "true".into());
    }
}

fn i_pow(s: u32) -> Complex64 {
    Complex64::new(0.0, 1.0).powu(s)
}

fn expanded_unitary(result: &synth::SynthResult) -> Result<CMat> {
    circuit_unitary(&result.expanded)
}

/// Distance of `recorded_phase · U` from the target, entrywise.
fn recorded_phase_distance(result: &synth::SynthResult, target: &CMat) -> Result<f64> {
    let u = expanded_unitary(result)?;
    let phase = result
        .recorded_phase
        .ok_or_else(|| Error::invalid("construction has no recorded phase"))?;
    Ok(max_abs_diff(&u.mapv(|z| z * phase), target))
}

// --- suites -------------------------------------------------------------------

/// Gate identities: the root-of-Z realization of P1 including its ζ factor,
/// and the phase-gate decomposition of H.
pub fn suite_gates(tol: f64) -> Result<SuiteReport> {
    let mut s = Suite::new(tol);
    for &d in &[3usize, 5, 7] {
        for k in 0..d as u64 {
            let r = synth::synth_p1(d, k)?;
            let dist = recorded_phase_distance(&r, &oracle::p1(d, k as usize))?;
            s.deviation(
                &format!("gates.p1.d{d}.k{k}"),
                "root-of-Z sequence times recorded zeta equals P1(k) exactly",
                dist,
            );
        }
    }
    for &d in &[3usize, 5, 7, 11] {
        let h = GateSpec::h(d).matrix()?;
        let ztau = oracle::z_phase(&tau_vector(d)?);
        let xtau = dagger(&h).dot(&ztau).dot(&h);
        let m = ztau.dot(&xtau).dot(&ztau);
        let rhs = m.mapv(|z| z * i_pow(((d - 1) / 2) as u32));
        s.deviation(
            &format!("gates.hadamard_decomposition.d{d}"),
            "H equals i^{(d-1)/2} Z(tau) X(tau) Z(tau)",
            max_abs_diff(&h, &rhs),
        );
    }
    for &d in &[2usize, 3, 5, 7] {
        let sq = GateSpec::sqrt_z(d).matrix()?;
        let mut acc = identity(d);
        for _ in 0..d {
            acc = sq.dot(&acc);
        }
        s.deviation(
            &format!("gates.root_power.d{d}"),
            "the dth power of the root gate is Z",
            max_abs_diff(&acc, &GateSpec::z(d).matrix()?),
        );
    }
    Ok(SuiteReport::new("gates", s.checks))
}

/// Hierarchy levels of the named gates.
pub fn suite_hierarchy(tol: f64) -> Result<SuiteReport> {
    let mut s = Suite::new(tol);
    let level = |m: &CMat, d: usize| -> Result<String> {
        Ok(match hierarchy_level(m, d, 8, tol)? {
            LevelResult::Level(n) => n.to_string(),
            LevelResult::ExceedsBound(b) => format!("exceeds bound {b}"),
        })
    };
    let check = |s: &mut Suite, id: String, claim: &str, m: &CMat, d: usize, want: u32| -> Result<()> {
        let got = level(m, d)?;
        s.push(&id, claim, got == want.to_string(), got, want.to_string());
        Ok(())
    };
    for &d in &[2usize, 3, 5] {
        check(&mut s, format!("hierarchy.x.d{d}"), "X is Pauli", &GateSpec::x(d).matrix()?, d, 1)?;
        check(&mut s, format!("hierarchy.z.d{d}"), "Z is Pauli", &GateSpec::z(d).matrix()?, d, 1)?;
        check(&mut s, format!("hierarchy.s.d{d}"), "S is Clifford", &GateSpec::s(d).matrix()?, d, 2)?;
        check(&mut s, format!("hierarchy.h.d{d}"), "H is Clifford", &GateSpec::h(d).matrix()?, d, 2)?;
        check(&mut s, format!("hierarchy.cx.d{d}"), "CX is Clifford", &GateSpec::cx(d, d).matrix()?, d, 2)?;
        check(
            &mut s,
            format!("hierarchy.sqrtz.d{d}"),
            "the dth root of Z sits in level d",
            &GateSpec::sqrt_z(d).matrix()?,
            d,
            d as u32,
        )?;
    }
    for &d in &[3usize, 5] {
        check(
            &mut s,
            format!("hierarchy.p1.d{d}"),
            "P1(0) sits in level d-1",
            &GateSpec::p1(d, 0).matrix()?,
            d,
            (d - 1) as u32,
        )?;
    }
    for (m, a, want) in [(1u32, 1u32, 1u32), (1, 2, 2), (2, 1, 3)] {
        check(
            &mut s,
            format!("hierarchy.uma.d3.m{m}a{a}"),
            "diagonal family level is (d-1)(m-1)+a",
            &GateSpec::uma(3, m, a).matrix()?,
            3,
            want,
        )?;
    }
    check(
        &mut s,
        "hierarchy.uma.d5.m1a3".into(),
        "diagonal family level is (d-1)(m-1)+a",
        &GateSpec::uma(5, 1, 3).matrix()?,
        5,
        3,
    )?;
    Ok(SuiteReport::new("hierarchy", s.checks))
}

/// Controlled-X constructions against the case-analysis oracle.
pub fn suite_zcx(tol: f64) -> Result<SuiteReport> {
    let mut s = Suite::new(tol);
    let reg2 = |d: usize| RadixRegister::uniform(d, 2).unwrap();
    for &d in &[2usize, 3, 5, 7] {
        let exact = synth::synth_zcx(d, 0, 1, true)?;
        let u = expanded_unitary(&exact)?;
        let cmp = compare_unitaries(&u, &oracle::kcx(d, 0, 1), &CompareMode::GlobalPhase, &reg2(d), tol)?;
        s.deviation(
            &format!("zcx.exact.d{d}"),
            "exact variant equals the |0>-controlled X up to global phase",
            cmp.max_deviation,
        );
        let lax = synth::synth_zcx(d, 0, 1, false)?;
        let ul = expanded_unitary(&lax)?;
        let cmp = compare_unitaries(&ul, &oracle::kcx_lax(d, 0, 1), &CompareMode::GlobalPhase, &reg2(d), tol)?;
        s.deviation(
            &format!("zcx.lax_phase.d{d}"),
            "lax variant differs from the oracle exactly by the controlled phase omega^{(d-1)/2}",
            cmp.max_deviation,
        );
        s.count(
            &format!("zcx.lax_count.d{d}"),
            "lax root-of-Z count is d",
            lax.report.sqrtz_count(d),
            d,
        );
        s.count(
            &format!("zcx.exact_count.d{d}"),
            "exact root-of-Z count is 2d-1",
            exact.report.sqrtz_count(d),
            2 * d - 1,
        );
    }
    // conjugated control value and repeated target power
    let r = synth::synth_zcx(3, 2, 1, true)?;
    let cmp = compare_unitaries(
        &expanded_unitary(&r)?,
        &oracle::kcx(3, 2, 1),
        &CompareMode::GlobalPhase,
        &reg2(3),
        tol,
    )?;
    s.deviation("zcx.k2.d3", "control conjugation moves the fired level", cmp.max_deviation);
    let r = synth::synth_zcx(5, 1, 2, true)?;
    let cmp = compare_unitaries(
        &expanded_unitary(&r)?,
        &oracle::kcx(5, 1, 2),
        &CompareMode::GlobalPhase,
        &reg2(5),
        tol,
    )?;
    s.deviation("zcx.power2.d5", "repetition realizes higher target powers", cmp.max_deviation);
    s.count(
        "zcx.power2_count.d5",
        "counts scale per repetition",
        r.report.sqrtz_count(5),
        2 * (2 * 5 - 1),
    );
    // corrector alone
    for &d in &[3usize, 5] {
        let c = synth::synth_cgp(d)?;
        s.deviation(
            &format!("zcx.cgp.d{d}"),
            "corrector applies omega^{(d-1)/2} at level 0 up to the recorded phase",
            recorded_phase_distance(&c, &oracle::cgp(d))?,
        );
        s.count(
            &format!("zcx.cgp_count.d{d}"),
            "corrector costs d-1 root-of-Z gates",
            c.report.sqrtz_count(d),
            d - 1,
        );
    }
    // the corrector is built from the root-of-Z realization of P1; assert
    // that identity here as well, where the corrector is consumed
    let p = synth::synth_p1(3, 0)?;
    s.deviation(
        "zcx.p1_identity.d3",
        "the P1 sequence times its recorded zeta equals P1(0) exactly",
        recorded_phase_distance(&p, &oracle::p1(3, 0))?,
    );
    // document round-trip on a synthesized circuit
    let r = synth::synth_zcx(5, 0, 1, true)?;
    let text = r.circuit.serialize();
    let back = Circuit::parse(&text)?;
    s.flag(
        "zcx.roundtrip.d5",
        "document round-trip reproduces the circuit bit-identically",
        back == r.circuit && back.serialize() == text,
        "roundtrip".into(),
    );
    Ok(SuiteReport::new("zcx", s.checks))
}

/// Entrywise distance restricted to the columns where the control digit is
/// allowed and every ancilla starts at |0⟩, after one shared phase
/// alignment. Full rows are compared, so ancillas must also return to |0⟩.
fn contract_distance(
    u: &CMat,
    target: &CMat,
    circuit: &Circuit,
    control: usize,
    values: &[usize],
) -> Result<f64> {
    let register = &circuit.register;
    let dim = register.dense_dim(crate::sim::DENSE_CAP)?;
    let cols: Vec<usize> = (0..dim)
        .filter(|&j| {
            let digits = register.decode(j as u128).unwrap();
            values.contains(&digits[control])
                && circuit.ancilla_wires.iter().all(|&a| digits[a] == 0)
        })
        .collect();
    let pick = |m: &CMat| {
        let mut sub: CMat = Array2::zeros((dim, cols.len()));
        for (cj, &j) in cols.iter().enumerate() {
            for i in 0..dim {
                sub[(i, cj)] = m[(i, j)];
            }
        }
        sub
    };
    let su = pick(u);
    let sv = pick(target);
    Ok(match crate::linalg::alignment_phase(&su, &sv) {
        Some(p) => max_abs_diff(&su, &sv.mapv(|z| z * p)),
        None => f64::INFINITY,
    })
}

/// Controlled-H constructions: subspace contract and full mode with a clean
/// ancilla.
pub fn suite_ch(tol: f64) -> Result<SuiteReport> {
    let mut s = Suite::new(tol);
    for &d in &[2usize, 3, 5] {
        let r = synth::synth_controlled_h(d, ChMode::Subspace)?;
        let u = expanded_unitary(&r)?;
        let h = GateSpec::h(d).matrix()?;
        // control-|1⟩ branch applies H up to the recorded controlled phase
        let branch1 = if d == 2 {
            h.clone()
        } else {
            let corr = r.controlled_phase.unwrap();
            h.mapv(|z| z / corr)
        };
        let target = embed_controlled(&r.expanded.register, 0, 1, &[None, Some(branch1)])?;
        let dist = contract_distance(&u, &target, &r.expanded, 0, &[0, 1])?;
        s.deviation(
            &format!("ch.subspace.d{d}"),
            "identity on control |0>, H times the recorded controlled phase on control |1>",
            dist,
        );
    }
    // full mode at d = 3: every control value, ancilla restored
    let d = 3;
    for k in 0..3u64 {
        let r = synth::synth_controlled_h(d, ChMode::Full { k })?;
        let u = expanded_unitary(&r)?;
        let h = GateSpec::h(d).matrix()?;
        let corr = r.controlled_phase.unwrap();
        let fired = h.mapv(|z| z / corr);
        let mut branches: Vec<Option<CMat>> = vec![None; d];
        branches[k as usize] = Some(fired);
        let target = embed_controlled(&r.expanded.register, 0, 1, &branches)?;
        let all: Vec<usize> = (0..d).collect();
        let dist = contract_distance(&u, &target, &r.expanded, 0, &all)?;
        s.deviation(
            &format!("ch.full.d3.k{k}"),
            "full mode fires only on the chosen control value with the ancilla restored",
            dist,
        );
    }
    Ok(SuiteReport::new("ch", s.checks))
}

/// Target unitary on a possibly ancilla-extended register: `branches[v]` on
/// the target wire when the control wire reads v, identity on every other
/// wire (ancillas must return to |0⟩, enforced by the full-matrix compare).
fn embed_controlled(
    register: &RadixRegister,
    control: usize,
    target: usize,
    branches: &[Option<CMat>],
) -> Result<CMat> {
    let dim = register.dense_dim(crate::sim::DENSE_CAP)?;
    let mut m: CMat = Array2::zeros((dim, dim));
    for col in 0..dim {
        let digits = register.decode(col as u128)?;
        let c = digits[control];
        match branches.get(c).and_then(|b| b.as_ref()) {
            None => m[(col, col)] = Complex64::new(1.0, 0.0),
            Some(block) => {
                let t_in = digits[target];
                for t_out in 0..register.dim(target) {
                    let amp = block[(t_out, t_in)];
                    if amp.norm() == 0.0 {
                        continue;
                    }
                    let mut out = digits.clone();
                    out[target] = t_out;
                    m[(register.encode(&out)? as usize, col)] = amp;
                }
            }
        }
    }
    Ok(m)
}

/// W-state preparation on d wires.
pub fn suite_wstates(tol: f64) -> Result<SuiteReport> {
    let mut s = Suite::new(tol);
    for &d in &[2usize, 3, 5, 7] {
        let r = synth::synth_w_prime(d)?;
        let reg = r.expanded.register.clone();
        let out = apply_circuit(&PureState::zero(&reg), &r.expanded)?;
        let w = PureState::make(&StateKind::WQubit, &reg)?;
        let f = out.fidelity(&w)?;
        s.number(
            &format!("wstates.wprime_fidelity.d{d}"),
            "all-|0> input yields the d-qubit W state",
            f,
            1.0,
        );
        s.count(
            &format!("wstates.wprime_count.d{d}"),
            "lax root-of-Z count is d^2-d",
            r.report.sqrtz_count(d),
            d * d - d,
        );
        // amplitudes all equal in modulus, supported on single excitations
        let support = out.support();
        let ok = support.len() == d
            && support.iter().all(|(cfg, amp)| {
                cfg.iter().sum::<usize>() == 1
                    && cfg.iter().all(|&x| x <= 1)
                    && (amp.norm() - 1.0 / (d as f64).sqrt()).abs() < tol
            });
        s.flag(
            &format!("wstates.wprime_support.d{d}"),
            "support is exactly the single-excitation set with equal moduli",
            ok,
            format!("{} terms", support.len()),
        );
    }
    // d = 2 exact output including phases
    let r = synth::synth_w_prime(2)?;
    let out = apply_circuit(&PureState::zero(&r.expanded.register), &r.expanded)?;
    let support = out.support();
    let amp = Complex64::new(1.0 / 2.0f64.sqrt(), 0.0);
    let exact = support.len() == 2
        && support
            .iter()
            .all(|(cfg, a)| (cfg == &vec![0, 1] || cfg == &vec![1, 0]) && (a - amp).norm() < tol);
    s.flag(
        "wstates.wprime_d2_bell",
        "the two-wire case produces (|01> + |10>)/sqrt(2) exactly",
        exact,
        format!("{support:?}"),
    );
    Ok(SuiteReport::new("wstates", s.checks))
}

fn tree_fidelity(d: usize, n: u32, s: &mut Suite) -> Result<()> {
    let r = synth::synth_spread_tree(d, n)?;
    let reg = r.expanded.register.clone();
    // d·wires for the ancilla-free expansions; the d = 3 point-phase
    // fallback adds one H-conjugation level of transient support, d²·wires
    let factor = if d == 3 { d * d } else { d };
    let bound = reg.num_wires() * factor;
    let out = apply_circuit_bounded(&PureState::zero(&reg), &r.expanded, Some(bound))?;
    let w = w_qubit_embedded(&reg, d.pow(n))?;
    s.number(
        &format!("trees.w{}.d{d}", d.pow(n)),
        "tree output reaches the W state at fidelity 1 within bounded sparse support",
        out.fidelity(&w)?,
        1.0,
    );
    s.count(
        &format!("trees.spread_count.d{d}.n{n}"),
        "spread nodes number (d^n - 1)/(d - 1)",
        r.spread_count.unwrap() as usize,
        (d.pow(n) - 1) / (d - 1),
    );
    Ok(())
}

/// Spread nodes and W trees: fidelities, node counts, depth growth, and
/// linear non-Clifford scaling.
pub fn suite_trees(tol: f64) -> Result<SuiteReport> {
    let mut s = Suite::new(tol);

    // spread node contract at d ∈ {2, 3}: both defining basis inputs
    for &d in &[2usize, 3] {
        let r = synth::synth_spread(d)?;
        let reg = r.expanded.register.clone();
        let n_wires = reg.num_wires();
        let mut one = vec![0usize; n_wires];
        one[0] = 1;
        let out = apply_circuit(&PureState::make(&StateKind::Basis(one), &reg)?, &r.expanded)?;
        let w_digits = PureState::make(&StateKind::WQubit, &RadixRegister::uniform(d, d)?)?;
        // embed the d-wire W into the ancilla-extended register
        let w = embed_state(&reg, d, &w_digits)?;
        s.number(
            &format!("trees.spread_fire.d{d}"),
            "|10...0> maps to the W state up to a phase",
            out.fidelity(&w)?,
            1.0,
        );
        let out0 = apply_circuit(&PureState::zero(&reg), &r.expanded)?;
        s.number(
            &format!("trees.spread_rest.d{d}"),
            "|0...0> maps to itself up to a phase",
            out0.fidelity(&PureState::zero(&reg))?,
            1.0,
        );
    }

    for (d, n) in [(2usize, 2u32), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
        tree_fidelity(d, n, &mut s)?;
    }

    // depth grows affinely: steady-state slope constant at d = 2
    let depths: Vec<usize> = (1..=4u32)
        .map(|n| synth::synth_spread_tree(2, n).map(|r| r.expanded.depth()))
        .collect::<Result<_>>()?;
    let slopes: Vec<i64> = depths.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
    s.flag(
        "trees.depth_affine.d2",
        "depth increments settle to one constant per layer (logarithmic depth in N)",
        slopes[1] == slopes[2] && slopes[2] > 0,
        format!("depths {depths:?}, slopes {slopes:?}"),
    );

    // non-Clifford growth is exactly geometric: count(n+1)−count(n) scales by d
    for &d in &[2usize, 3] {
        let counts: Vec<usize> = (1..=3u32)
            .map(|n| synth::synth_spread_tree(d, n).map(|r| r.report.non_clifford(d)))
            .collect::<Result<_>>()?;
        let d1 = counts[1] as i64 - counts[0] as i64;
        let d2 = counts[2] as i64 - counts[1] as i64;
        s.flag(
            &format!("trees.linear_count.d{d}"),
            "count increments grow by exactly d per layer (linear total in N)",
            d2 == d as i64 * d1 && d1 > 0,
            format!("counts {counts:?}"),
        );
        let n_big = d.pow(3);
        let ratio = counts[2] as f64 / n_big as f64;
        s.flag(
            &format!("trees.count_ratio.d{d}"),
            "non-Clifford count stays below a constant multiple of N",
            counts[2] <= ratio.ceil() as usize * n_big,
            format!("c_{d} = {ratio:.3}"),
        );
    }
    // Gidney-form qubit total: T-count 2N−4 for the d=2 tree
    let r = synth::synth_spread_tree(2, 3)?;
    s.count("trees.t_count_2n4.d2", "qubit tree T-count is 2N-4", r.report.t, 2 * 8 - 4);

    // qudit W trees from the resource state
    for n in [1u32, 2] {
        let r = synth::synth_qudit_w_tree(3, n)?;
        let reg = r.expanded.register.clone();
        let input = PureState::make(&StateKind::Resource { wire: 0 }, &reg)?;
        let bound = reg.num_wires() * 9; // d² factor: routes through the d=3 fallback
        let out = apply_circuit_bounded(&input, &r.expanded, Some(bound))?;
        let w_small =
            PureState::make(&StateKind::WQudit, &RadixRegister::uniform(3, 3usize.pow(n))?)?;
        let w = embed_state(&reg, 3usize.pow(n), &w_small)?;
        s.number(
            &format!("trees.qudit_w{}.d3", 3usize.pow(n)),
            "resource input yields the qudit W state with no further post-selection",
            out.fidelity(&w)?,
            1.0,
        );
        s.count(
            &format!("trees.qudit_spread_count.n{n}"),
            "qudit tree uses (d^n - 1)/(d - 1) spread nodes",
            r.spread_count.unwrap() as usize,
            (3usize.pow(n) - 1) / 2,
        );
    }
    // the single qudit spread action cases at d = 3
    let r = synth::synth_qudit_spread(3)?;
    let reg = r.expanded.register.clone();
    let nw = reg.num_wires();
    let mk = |digits: Vec<usize>| -> Result<PureState> {
        let mut full = vec![0usize; nw];
        full[..digits.len()].copy_from_slice(&digits);
        PureState::make(&StateKind::Basis(full), &reg)
    };
    let out = apply_circuit(&mk(vec![1, 0, 0])?, &r.expanded)?;
    let mut target = std::collections::BTreeMap::new();
    let a = Complex64::new(1.0 / 3.0f64.sqrt(), 0.0);
    for digits in [vec![0usize, 1, 0], vec![0, 2, 0], vec![1, 0, 0]] {
        let mut full = vec![0usize; nw];
        full[..3].copy_from_slice(&digits);
        target.insert(full, a);
    }
    let fid = fidelity_against_map(&out, &target);
    s.number(
        "trees.qspread_k1.d3",
        "|1,0,0> spreads to (|010> + |020> + |100>)/sqrt(3)",
        fid,
        1.0,
    );
    let out0 = apply_circuit(&PureState::zero(&reg), &r.expanded)?;
    s.number(
        "trees.qspread_zero.d3",
        "|0,0,0> maps to itself up to a phase",
        out0.fidelity(&PureState::zero(&reg))?,
        1.0,
    );

    Ok(SuiteReport::new("trees", s.checks))
}

/// Fidelity of `state` against an explicit configuration → amplitude map
/// (compared projectively).
fn fidelity_against_map(
    state: &PureState,
    target: &std::collections::BTreeMap<Vec<usize>, Complex64>,
) -> f64 {
    let mut overlap = Complex64::new(0.0, 0.0);
    let support = state.support();
    let byte_support: std::collections::BTreeMap<Vec<usize>, Complex64> =
        support.into_iter().collect();
    for (cfg, want) in target {
        if let Some(have) = byte_support.get(cfg) {
            overlap += want.conj() * have;
        }
    }
    let norm: f64 = target.values().map(|a| a.norm_sqr()).sum();
    (overlap.norm_sqr() / norm).min(1.0)
}

/// Extend a state over the first `logical` wires of a larger register with
/// |0⟩ padding on the remaining wires.
fn embed_state(register: &RadixRegister, logical: usize, small: &PureState) -> Result<PureState> {
    let n = register.num_wires();
    let mut entries = Vec::new();
    for (cfg, amp) in small.support() {
        let mut full = vec![0usize; n];
        full[..logical].copy_from_slice(&cfg);
        entries.push((full, amp));
    }
    PureState::from_support(register.clone(), entries)
}

/// Mixed-dimension trees.
pub fn suite_mixed(tol: f64) -> Result<SuiteReport> {
    let mut s = Suite::new(tol);
    for factors in [vec![2usize, 3], vec![3, 2]] {
        let r = synth::synth_mixed_tree(&factors)?;
        let reg = r.expanded.register.clone();
        let out = apply_circuit(&PureState::zero(&reg), &r.expanded)?;
        let w = w_qubit_embedded(&reg, 6)?;
        s.number(
            &format!("mixed.w6.{}x{}", factors[0], factors[1]),
            "both factor orders reach the 6-qubit W state deterministically",
            out.fidelity(&w)?,
            1.0,
        );
        s.flag(
            &format!("mixed.expanded.{}x{}", factors[0], factors[1]),
            "the mixed tree expands fully to primitives",
            r.expanded.is_expanded(),
            "expanded".into(),
        );
    }
    let r = synth::synth_mixed_tree(&[2])?;
    let wp = synth::synth_w_prime(2)?;
    let u_tree = circuit_unitary(&r.expanded)?;
    let u_wp = circuit_unitary(&wp.expanded)?;
    s.deviation(
        "mixed.single_factor",
        "a single-factor tree reduces to the W-prime circuit",
        max_abs_diff(&u_tree, &u_wp),
    );
    Ok(SuiteReport::new("mixed", s.checks))
}

/// W state over the first `logical` wires of `register` (any dims, terms in
/// the {0,1} subspace).
fn w_qubit_embedded(register: &RadixRegister, logical: usize) -> Result<PureState> {
    let n = register.num_wires();
    let amp = Complex64::new(1.0 / (logical as f64).sqrt(), 0.0);
    let mut entries = Vec::new();
    for w in 0..logical {
        let mut cfg = vec![0usize; n];
        cfg[w] = 1;
        entries.push((cfg, amp));
    }
    PureState::from_support(register.clone(), entries)
}

/// Post-selection plans and the projected states.
pub fn suite_postselect(tol: f64) -> Result<SuiteReport> {
    let mut s = Suite::new(tol);
    let plan = synth::plan_postselected_w(5, 2)?;
    s.number("postselect.prob.n5d2", "success probability is N/d^ceil(log_d N)", plan.success_probability, 5.0 / 8.0);
    s.number("postselect.attempts.n5d2", "expected attempts follow the closed form", plan.expected_attempts, 8.0 / 5.0);
    s.count("postselect.tree.n5d2", "plan builds the next power-of-d tree", plan.tree_size, 8);
    s.count("postselect.drop.n5d2", "plan drops the surplus wires", plan.drop_wires.len(), 3);

    let plan63 = synth::plan_postselected_w(6, 3)?;
    s.number("postselect.prob.n6d3", "success probability is N/d^ceil(log_d N)", plan63.success_probability, 2.0 / 3.0);
    s.number("postselect.attempts.n6d3", "expected attempts follow the closed form", plan63.expected_attempts, 1.5);

    // simulate the N=5, d=2 projection
    let tree = synth::synth_spread_tree(2, plan.tree_layers)?;
    let reg = tree.expanded.register.clone();
    let mut state = apply_circuit(&PureState::zero(&reg), &tree.expanded)?;
    let mut prob = 1.0;
    for &w in &plan.drop_wires {
        let (p, next) = state.post_select(w, 0)?;
        prob *= p;
        state = next;
    }
    s.number("postselect.sim_prob.n5d2", "projection probabilities compose to N/d^n", prob, 5.0 / 8.0);
    let w5 = w_qubit_embedded(&reg, 5)?;
    s.number("postselect.sim_state.n5d2", "projected state is the 5-qubit W state", state.fidelity(&w5)?, 1.0);

    let exact_power = synth::plan_postselected_w(8, 2)?;
    s.count("postselect.exact_power.n8d2", "exact powers need no projection", exact_power.drop_wires.len(), 0);
    s.number("postselect.exact_attempts.n8d2", "exact powers succeed first try", exact_power.expected_attempts, 1.0);

    // independent route to the closed form: the success probability is the
    // telescoping product over the dropped wires, and the attempt count is
    // its geometric series
    for (n, d) in [(5usize, 2usize), (6, 3), (11, 2)] {
        let plan = synth::plan_postselected_w(n, d)?;
        let product: f64 = (n + 1..=plan.tree_size).map(|j| 1.0 - 1.0 / j as f64).product();
        s.number(
            &format!("postselect.product.n{n}d{d}"),
            "projection probabilities telescope to N over the tree size",
            product,
            plan.success_probability,
        );
        let series: f64 = (0..200).map(|h| (h + 1) as f64 * product * (1.0 - product).powi(h)).sum();
        let pass = (series - plan.expected_attempts).abs() < 1e-8;
        s.push(
            &format!("postselect.series.n{n}d{d}"),
            "the attempt-count series sums to the closed form",
            pass,
            format!("{series}"),
            format!("{}", plan.expected_attempts),
        );
    }
    Ok(SuiteReport::new("postselect", s.checks))
}

/// All suite names, in the order `all` runs them.
pub const SUITE_NAMES: [&str; 8] =
    ["gates", "hierarchy", "zcx", "ch", "wstates", "trees", "mixed", "postselect"];

pub fn run_suite(name: &str, tol: f64) -> Result<Vec<SuiteReport>> {
    match name {
        "gates" => Ok(vec![suite_gates(tol)?]),
        "hierarchy" => Ok(vec![suite_hierarchy(tol)?]),
        "zcx" => Ok(vec![suite_zcx(tol)?]),
        "ch" => Ok(vec![suite_ch(tol)?]),
        "wstates" => Ok(vec![suite_wstates(tol)?]),
        "trees" => Ok(vec![suite_trees(tol)?]),
        "mixed" => Ok(vec![suite_mixed(tol)?]),
        "postselect" => Ok(vec![suite_postselect(tol)?]),
        "all" => {
            let mut out = Vec::new();
            for n in SUITE_NAMES {
                out.extend(run_suite(n, tol)?);
            }
            Ok(out)
        }
        other => Err(Error::invalid(format!(
            "unknown suite `{other}`; expected one of {:?} or `all`",
            SUITE_NAMES
        ))),
    }
}

pub fn default_tolerance() -> f64 {
    DEFAULT_TOL
}

