//! Construction-level oracle checks that go beyond the named suites:
//! recorded phases asserted entrywise, restricted contracts, and the
//! structural examples for composition and expansion.

use ndarray::Array2;
use num_complex::Complex64;

use wforge_core::circuit::{Circuit, GateInstance, MacroKind, MacroParams, OpKind};
use wforge_core::gates::{alpha_vector, tau_vector, GateKind, GateSpec, Granularity, PhaseVector};
use wforge_core::linalg::{dagger, identity, max_abs_diff, CMat};
use wforge_core::radix::RadixRegister;
use wforge_core::sim::{apply_circuit, circuit_unitary, PureState, StateKind};
use wforge_core::synth::{self, ChMode};
use wforge_core::verify::oracle;
use wforge_core::Registry;

const TOL: f64 = 1e-10;

fn unitary(r: &synth::SynthResult) -> CMat {
    circuit_unitary(&r.expanded).unwrap()
}

/// phase · U == target, entrywise.
fn assert_recorded_exact(r: &synth::SynthResult, target: &CMat) {
    let u = unitary(r);
    let phase = r.recorded_phase.expect("recorded phase");
    let dist = max_abs_diff(&u.mapv(|z| z * phase), target);
    assert!(dist < TOL, "{}: recorded-phase distance {dist:.3e}", r.name);
}

#[test]
fn gadget_matches_oracle_exactly() {
    // d=3, alpha=(0,1,0), b=1: phase ω exactly on {(x,y): x+y ≡ 1 mod 3}
    let alpha = PhaseVector::new(3, vec![0, 1, 0], Granularity::Omega).unwrap();
    let r = synth::synth_phase_gadget(3, &alpha, 1).unwrap();
    assert_recorded_exact(&r, &oracle::gadget(3, &alpha, 1));

    // d=5, b=2: exponent pattern α((2x+y) mod 5)
    let alpha = PhaseVector::new(5, vec![0, 3, 1, 0, 2], Granularity::Omega).unwrap();
    let r = synth::synth_phase_gadget(5, &alpha, 2).unwrap();
    assert_recorded_exact(&r, &oracle::gadget(5, &alpha, 2));

    // zero vector: identity
    let alpha = PhaseVector::zero(3);
    let r = synth::synth_phase_gadget(3, &alpha, 1).unwrap();
    assert_recorded_exact(&r, &identity(9));
}

#[test]
fn gadget_rejects_zeta_granularity() {
    let alpha = PhaseVector::new(3, vec![0, 1, 0], Granularity::Zeta).unwrap();
    assert!(synth::synth_phase_gadget(3, &alpha, 1).is_err());
}

/// Distance between U and target on the columns where every ancilla reads 0,
/// after one shared phase alignment over those columns. Rows are compared in
/// full, so ancillas must also come back clean.
fn ancilla_restricted_distance(u: &CMat, target_logical: &CMat, c: &Circuit, logical: usize) -> f64 {
    let reg = &c.register;
    let dim = reg.dense_dim(4096).unwrap();
    let logical_dim: usize = reg.dims()[..logical].iter().product();
    let anc_wires: Vec<usize> = (logical..reg.num_wires()).collect();
    let cols: Vec<usize> = (0..dim)
        .filter(|&j| {
            let digits = reg.decode(j as u128).unwrap();
            anc_wires.iter().all(|&a| digits[a] == 0)
        })
        .collect();
    assert_eq!(cols.len(), logical_dim);
    let mut su: CMat = Array2::zeros((dim, cols.len()));
    let mut sv: CMat = Array2::zeros((dim, cols.len()));
    for (cj, &j) in cols.iter().enumerate() {
        let jd = reg.decode(j as u128).unwrap();
        let jl: usize = {
            let logical_reg = RadixRegister::new(reg.dims()[..logical].to_vec()).unwrap();
            logical_reg.encode(&jd[..logical]).unwrap() as usize
        };
        for i in 0..dim {
            su[(i, cj)] = u[(i, j)];
        }
        // target rows: logical action, ancillas stay 0
        for il in 0..logical_dim {
            let logical_reg = RadixRegister::new(reg.dims()[..logical].to_vec()).unwrap();
            let id = logical_reg.decode(il as u128).unwrap();
            let mut full = vec![0usize; reg.num_wires()];
            full[..logical].copy_from_slice(&id);
            let i = reg.encode(&full).unwrap() as usize;
            sv[(i, cj)] = target_logical[(il, jl)];
        }
    }
    match wforge_core::linalg::alignment_phase(&su, &sv) {
        Some(p) => max_abs_diff(&su, &sv.mapv(|z| z * p)),
        None => f64::INFINITY,
    }
}

#[test]
fn point_phase_matches_oracle() {
    // d=3, (1,0), power 1: ω exactly at |1,0⟩, ancilla back at |0⟩
    let r = synth::synth_point_phase(3, 1, 0, 1).unwrap();
    let dist = ancilla_restricted_distance(&unitary(&r), &oracle::point_phase(3, 1, 0, 1), &r.expanded, 2);
    assert!(dist < TOL, "d=3 distance {dist:.3e}");

    // the recorded phase makes it exact, not just phase-aligned
    assert_recorded_exact_on_clean_ancilla(&r, &oracle::point_phase(3, 1, 0, 1));

    // power 0: identity
    let r = synth::synth_point_phase(3, 1, 0, 0).unwrap();
    let dim = r.expanded.register.dense_dim(4096).unwrap();
    assert!(max_abs_diff(&unitary(&r), &identity(dim)) < TOL);

    // d=5, (1,3), power 2
    let r = synth::synth_point_phase(5, 1, 3, 2).unwrap();
    let dist = ancilla_restricted_distance(&unitary(&r), &oracle::point_phase(5, 1, 3, 2), &r.expanded, 2);
    assert!(dist < TOL, "d=5 distance {dist:.3e}");

    // d=2 Clifford realization
    let r = synth::synth_point_phase(2, 1, 1, 1).unwrap();
    assert_eq!(r.report.sqrtz_count(2), 0);
    assert_eq!(r.report.t, 0);
    let dist = ancilla_restricted_distance(&unitary(&r), &oracle::point_phase(2, 1, 1, 1), &r.expanded, 2);
    assert!(dist < TOL);
}

/// Like assert_recorded_exact but only over clean-ancilla columns.
fn assert_recorded_exact_on_clean_ancilla(r: &synth::SynthResult, target_logical: &CMat) {
    let u = unitary(r);
    let phase = r.recorded_phase.expect("recorded phase");
    let phased = u.mapv(|z| z * phase);
    let reg = &r.expanded.register;
    let dim = reg.dense_dim(4096).unwrap();
    let logical = 2usize;
    let logical_reg = RadixRegister::new(reg.dims()[..logical].to_vec()).unwrap();
    for j in 0..dim {
        let jd = reg.decode(j as u128).unwrap();
        if jd[logical..].iter().any(|&x| x != 0) {
            continue;
        }
        let jl = logical_reg.encode(&jd[..logical]).unwrap() as usize;
        for i in 0..dim {
            let id = reg.decode(i as u128).unwrap();
            let want = if id[logical..].iter().all(|&x| x == 0) {
                target_logical[(logical_reg.encode(&id[..logical]).unwrap() as usize, jl)]
            } else {
                Complex64::new(0.0, 0.0)
            };
            let got = phased[(i, j)];
            assert!(
                (got - want).norm() < TOL,
                "{}: entry ({i},{j}) differs: {got} vs {want}",
                r.name
            );
        }
    }
}

#[test]
fn controlled_ztau_restricted_contract() {
    for &d in &[3usize, 5] {
        let r = synth::synth_controlled_ztau(d).unwrap();
        let tau = GateSpec::z_alpha(tau_vector(d).unwrap()).matrix().unwrap();
        // blockdiag(I, Z(τ)) over the control ∈ {0,1} columns
        let mut target = identity(d * d);
        for t in 0..d {
            for t2 in 0..d {
                target[(d + t, d + t2)] = tau[(t, t2)];
            }
        }
        let u = unitary(&r);
        // restrict to control ∈ {0,1} and clean ancilla
        let reg = &r.expanded.register;
        let dim = reg.dense_dim(4096).unwrap();
        let cols: Vec<usize> = (0..dim)
            .filter(|&j| {
                let jd = reg.decode(j as u128).unwrap();
                jd[0] <= 1 && jd[2..].iter().all(|&x| x == 0)
            })
            .collect();
        let mut worst = 0.0f64;
        let phase = r.recorded_phase.unwrap();
        for &j in &cols {
            let jd = reg.decode(j as u128).unwrap();
            let jl = jd[0] * d + jd[1];
            for i in 0..dim {
                let id = reg.decode(i as u128).unwrap();
                let want = if id[2..].iter().all(|&x| x == 0) {
                    target[(id[0] * d + id[1], jl)]
                } else {
                    Complex64::new(0.0, 0.0)
                };
                worst = worst.max((u[(i, j)] * phase - want).norm());
            }
        }
        assert!(worst < TOL, "d={d} restricted contract distance {worst:.3e}");
    }
    assert!(synth::synth_controlled_ztau(2).is_err());
}

#[test]
fn cztau_d5_uses_three_repetitions() {
    // 2⁻¹ mod 5 = 3 repetitions, each wrapping the target chain in one
    // controlled-X conjugation pair
    let r = synth::synth_controlled_ztau(5).unwrap();
    let cx_count = r
        .expanded
        .gates
        .iter()
        .filter(|g| matches!(&g.op, OpKind::Prim(s) if s.kind == GateKind::Cx))
        .count();
    assert_eq!(cx_count, 6, "three gadget conjugation pairs");
    assert_eq!(alpha_vector(5).unwrap().0.exponents, vec![0, 0, 4, 0, 1]);
}

#[test]
fn p1_conjugation_shifts_the_marked_level() {
    // X · P1(0) · X† = P1(1)
    for &d in &[3usize, 5] {
        let x = GateSpec::x(d).matrix().unwrap();
        let p0 = GateSpec::p1(d, 0).matrix().unwrap();
        let p1 = GateSpec::p1(d, 1).matrix().unwrap();
        assert!(max_abs_diff(&x.dot(&p0).dot(&dagger(&x)), &p1) < TOL);
    }
}

#[test]
fn zcx_exact_recorded_phase_is_entrywise() {
    for &d in &[3usize, 5] {
        let r = synth::synth_zcx(d, 0, 1, true).unwrap();
        let mut target = identity(d * d);
        for t in 0..d {
            target[(t, t)] = Complex64::new(0.0, 0.0);
        }
        for t in 0..d {
            target[((t + 1) % d, t)] = Complex64::new(1.0, 0.0);
        }
        assert_recorded_exact(&r, &target);
    }
}

#[test]
fn w_prime_recorded_phase_is_exact() {
    // target amplitudes equal recorded_phase · output amplitudes entrywise
    for &d in &[3usize, 5] {
        let r = synth::synth_w_prime(d).unwrap();
        let reg = r.expanded.register.clone();
        let out = apply_circuit(&PureState::zero(&reg), &r.expanded).unwrap();
        let phase = r.recorded_phase.unwrap();
        let amp = 1.0 / (d as f64).sqrt();
        let support = out.support();
        assert_eq!(support.len(), d);
        for (cfg, a) in support {
            assert_eq!(cfg.iter().sum::<usize>(), 1);
            let fixed = a * phase;
            assert!(
                (fixed - Complex64::new(amp, 0.0)).norm() < TOL,
                "d={d} term {cfg:?}: {fixed}"
            );
        }
    }
}

#[test]
fn spread_d5_basis_action() {
    let r = synth::synth_spread(5).unwrap();
    let reg = r.expanded.register.clone();
    let n = reg.num_wires();
    let mut one = vec![0usize; n];
    one[0] = 1;
    let out = apply_circuit(&PureState::make(&StateKind::Basis(one), &reg).unwrap(), &r.expanded).unwrap();
    // equal-modulus single-excitation support with one uniform phase
    let support = out.support();
    assert_eq!(support.len(), 5);
    let first = support[0].1;
    for (cfg, amp) in &support {
        assert_eq!(cfg.iter().sum::<usize>(), 1);
        assert!((amp - first).norm() < TOL, "nonuniform phase at {cfg:?}");
        assert!((amp.norm() - 1.0 / 5.0f64.sqrt()).abs() < TOL);
    }
    let out0 = apply_circuit(&PureState::zero(&reg), &r.expanded).unwrap();
    assert!((out0.fidelity(&PureState::zero(&reg)).unwrap() - 1.0).abs() < TOL);
}

#[test]
fn qudit_spread_resource_input_gives_w3() {
    // (1/√2)(|1⟩+|2⟩)⊗|00⟩ in: six terms of amplitude 1/√6 out
    let r = synth::synth_qudit_spread(3).unwrap();
    let reg = r.expanded.register.clone();
    let input = PureState::make(&StateKind::Resource { wire: 0 }, &reg).unwrap();
    let out = apply_circuit(&input, &r.expanded).unwrap();
    let support = out.support();
    assert_eq!(support.len(), 6);
    let amp = 1.0 / 6.0f64.sqrt();
    let first = support[0].1;
    for (cfg, a) in &support {
        let logical = &cfg[..3];
        let nonzero: Vec<usize> = logical.iter().copied().filter(|&x| x != 0).collect();
        assert_eq!(nonzero.len(), 1, "single qudit excitation in {logical:?}");
        assert!(cfg[3..].iter().all(|&x| x == 0), "ancillas clean");
        assert!((a.norm() - amp).abs() < TOL);
        assert!((a - first).norm() < TOL, "uniform phase across terms");
    }
}

#[test]
fn compose_with_inverse_is_identity() {
    let r = synth::synth_zcx(3, 0, 1, false).unwrap();
    let c = r.expanded;
    let composed = c.compose(&c.inverse()).unwrap();
    let u = circuit_unitary(&composed).unwrap();
    assert!(max_abs_diff(&u, &identity(9)) < TOL);
}

#[test]
fn expansion_examples() {
    // lax qutrit controlled-X: exactly three root-of-Z instances
    let r = synth::synth_zcx(3, 0, 1, false).unwrap();
    let sqrtz = r
        .expanded
        .gates
        .iter()
        .filter(|g| matches!(&g.op, OpKind::Prim(s) if s.kind == GateKind::SqrtZ))
        .count();
    assert_eq!(sqrtz, 3);

    // empty circuit expands to itself
    let empty = Circuit::new(RadixRegister::uniform(3, 2).unwrap());
    let expanded = empty.expand(&Registry).unwrap();
    assert_eq!(expanded.gates.len(), 0);

    // one expansion pass of the 9-wire tree yields 4 spread-type nodes
    let mut tree = Circuit::new(RadixRegister::uniform(3, 9).unwrap());
    tree.push(GateInstance::mac(
        MacroKind::WTree,
        MacroParams { n: Some(2), ..Default::default() },
        (0..9).collect(),
    ))
    .unwrap();
    let frag = wforge_core::circuit::MacroResolver::expand_instance(
        &Registry,
        &tree.gates[0],
        &tree.register,
    )
    .unwrap();
    assert_eq!(frag.gates.len(), 4);
    let names: Vec<&str> = frag.gates.iter().map(|g| g.name()).collect();
    assert_eq!(names, vec!["WPRIME", "SPREAD", "SPREAD", "SPREAD"]);

    // unknown-macro errors surface by name
    let mut c = Circuit::new(RadixRegister::uniform(3, 2).unwrap());
    c.push(GateInstance::mac(MacroKind::Kcx, MacroParams::default(), vec![0, 1])).unwrap();
    let err = c.expand(&Registry).unwrap_err();
    assert!(err.to_string().contains("k"), "{err}");
}

#[test]
fn full_mode_ch_at_d2() {
    // the ancilla-based full mode also works for qubits
    let r = synth::synth_controlled_h(2, ChMode::Full { k: 1 }).unwrap();
    let u = unitary(&r);
    let h = GateSpec::h(2).matrix().unwrap();
    let mut target = identity(4);
    for a in 0..2 {
        for b in 0..2 {
            target[(2 + a, 2 + b)] = h[(a, b)];
        }
    }
    let dist = ancilla_restricted_distance(&u, &target, &r.expanded, 2);
    assert!(dist < TOL, "distance {dist:.3e}");
}

#[test]
fn constructions_hold_at_d7_where_dimension_permits() {
    // subspace controlled-H: 49-dimensional check
    let r = synth::synth_controlled_h(7, ChMode::Subspace).unwrap();
    let u = unitary(&r);
    let h = GateSpec::h(7).matrix().unwrap();
    let corr = r.controlled_phase.unwrap();
    let reg = &r.expanded.register;
    let dim = reg.dense_dim(4096).unwrap();
    let phase = r.recorded_phase.unwrap();
    let mut worst = 0.0f64;
    for c in 0..2usize {
        for t_in in 0..7 {
            let col = c * 7 + t_in;
            for i in 0..dim {
                let id = reg.decode(i as u128).unwrap();
                let want = if id[0] == c {
                    if c == 0 {
                        if id[1] == t_in { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }
                    } else {
                        h[(id[1], t_in)] / corr
                    }
                } else {
                    Complex64::new(0.0, 0.0)
                };
                worst = worst.max((u[(i, col)] * phase - want).norm());
            }
        }
    }
    assert!(worst < TOL, "d=7 subspace CH distance {worst:.3e}");

    // spread node at d = 7: both defining basis inputs, sparse engine
    let r = synth::synth_spread(7).unwrap();
    let reg = r.expanded.register.clone();
    let n = reg.num_wires();
    let mut one = vec![0usize; n];
    one[0] = 1;
    let out =
        apply_circuit(&PureState::make(&StateKind::Basis(one), &reg).unwrap(), &r.expanded).unwrap();
    let support = out.support();
    assert_eq!(support.len(), 7);
    let first = support[0].1;
    for (cfg, amp) in &support {
        assert_eq!(cfg.iter().sum::<usize>(), 1);
        assert!((amp - first).norm() < TOL, "nonuniform phase at {cfg:?}");
        assert!((amp.norm() - 1.0 / 7.0f64.sqrt()).abs() < TOL);
    }
    let out0 = apply_circuit(&PureState::zero(&reg), &r.expanded).unwrap();
    assert!((out0.fidelity(&PureState::zero(&reg)).unwrap() - 1.0).abs() < TOL);

    // controlled Z(τ) at d = 7 is ancilla-free
    let r = synth::synth_controlled_ztau(7).unwrap();
    assert!(r.expanded.ancilla_wires.is_empty());
}

#[test]
fn parameter_validation_edges() {
    // X^d on the target is the identity: rejected
    assert!(synth::synth_zcx(3, 0, 3, false).is_err());
    assert!(synth::synth_zcx(3, 0, 0, true).is_err());
    // control value out of range
    assert!(synth::synth_zcx(3, 3, 1, false).is_err());
    // gadget direction must be nonzero mod d
    let alpha = PhaseVector::new(3, vec![0, 1, 0], Granularity::Omega).unwrap();
    assert!(synth::synth_phase_gadget(3, &alpha, 0).is_err());
    assert!(synth::synth_phase_gadget(3, &alpha, 3).is_err());
    // phase vector dimension mismatch
    assert!(synth::synth_phase_gadget(5, &alpha, 1).is_err());
    // point-phase levels out of range
    assert!(synth::synth_point_phase(3, 3, 0, 1).is_err());
    assert!(synth::synth_point_phase(3, 0, 5, 1).is_err());
    // P1 level out of range, bad UMA exponents
    assert!(synth::synth_p1(5, 5).is_err());
    assert!(GateSpec::uma(3, 0, 1).matrix().is_err());
    assert!(GateSpec::uma(3, 1, 0).matrix().is_err());
    // qudit constructions reject d = 2
    assert!(synth::synth_qudit_spread(2).is_err());
    assert!(synth::synth_qudit_w_tree(2, 2).is_err());
    // plans need a real W state and a prime dimension
    assert!(synth::plan_postselected_w(1, 2).is_err());
    assert!(synth::plan_postselected_w(5, 4).is_err());
}

#[test]
fn qubit_ch_costs_two_t_gates() {
    let r = synth::synth_controlled_h(2, ChMode::Subspace).unwrap();
    assert_eq!(r.report.t, 2);
    assert_eq!(r.report.sqrtz_count(2), 0);
}

#[test]
fn single_layer_tree_is_w_prime() {
    for &d in &[2usize, 3] {
        let tree = synth::synth_spread_tree(d, 1).unwrap();
        let wp = synth::synth_w_prime(d).unwrap();
        assert_eq!(tree.expanded.gates, wp.expanded.gates, "d={d}");
        assert_eq!(tree.spread_count, Some(1));
    }
}

#[test]
fn tree_guard_rejects_oversized_requests() {
    assert!(synth::synth_spread_tree(2, 8).is_err());
    assert!(synth::synth_qudit_w_tree(3, 5).is_err());
    assert!(synth::synth_mixed_tree(&[2, 3, 5, 7]).is_err());
    assert!(synth::synth_mixed_tree(&[4]).is_err());
}
