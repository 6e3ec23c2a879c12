//! State-vector simulation: a dense engine for oracle-sized registers and a
//! sparse map engine that rides the bounded support of W-state circuits.

use std::collections::BTreeMap;

use ndarray::Array2;
use num_complex::Complex64;

use crate::circuit::{Circuit, GateInstance};
use crate::error::{Error, Result};
use crate::linalg::{alignment_phase, max_abs_diff, CMat};
use crate::radix::RadixRegister;

/// Default comparison tolerance for the whole toolkit.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Sparse amplitudes below this are dropped.
pub const PRUNE_TOL: f64 = 1e-14;
/// Dense representations (states and unitaries) are refused above this.
pub const DENSE_CAP: usize = 4096;

type Config = Vec<u8>;

#[derive(Debug, Clone)]
enum Repr {
    Dense(Vec<Complex64>),
    Sparse(BTreeMap<Config, Complex64>),
}

/// A pure state over a mixed-radix register.
#[derive(Debug, Clone)]
pub struct PureState {
    pub register: RadixRegister,
    repr: Repr,
}

/// Target-state constructors.
#[derive(Debug, Clone, PartialEq)]
pub enum StateKind {
    /// |0...0⟩
    Zero,
    /// A computational basis state.
    Basis(Vec<usize>),
    /// |+⟩ on one wire, |0⟩ elsewhere.
    Plus { wire: usize },
    /// (1/√(d−1)) Σ_{j≠0} |j⟩ on one wire, |0⟩ elsewhere.
    Resource { wire: usize },
    /// Equal superposition of single-excitation {|0⟩,|1⟩} configurations.
    WQubit,
    /// Qudit W state: excitation ranges over wires and all nonzero values.
    WQudit,
}

impl PureState {
    fn new_sparse(register: RadixRegister, map: BTreeMap<Config, Complex64>) -> Self {
        PureState { register, repr: Repr::Sparse(map) }
    }

    pub fn make(kind: &StateKind, register: &RadixRegister) -> Result<PureState> {
        let n = register.num_wires();
        let mut map = BTreeMap::new();
        match kind {
            StateKind::Zero => {
                map.insert(vec![0u8; n], Complex64::new(1.0, 0.0));
            }
            StateKind::Basis(digits) => {
                if digits.len() != n {
                    return Err(Error::invalid("basis state digit count mismatch"));
                }
                for (w, &x) in digits.iter().enumerate() {
                    if x >= register.dim(w) {
                        return Err(Error::invalid(format!(
                            "digit {x} out of range for wire {w}"
                        )));
                    }
                }
                map.insert(digits.iter().map(|&x| x as u8).collect(), Complex64::new(1.0, 0.0));
            }
            StateKind::Plus { wire } => {
                if *wire >= n {
                    return Err(Error::invalid("plus wire out of range"));
                }
                let d = register.dim(*wire);
                let amp = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
                for j in 0..d {
                    let mut cfg = vec![0u8; n];
                    cfg[*wire] = j as u8;
                    map.insert(cfg, amp);
                }
            }
            StateKind::Resource { wire } => {
                if *wire >= n {
                    return Err(Error::invalid("resource wire out of range"));
                }
                let d = register.dim(*wire);
                if d < 2 {
                    return Err(Error::invalid("resource state needs d ≥ 2"));
                }
                let amp = Complex64::new(1.0 / ((d - 1) as f64).sqrt(), 0.0);
                for j in 1..d {
                    let mut cfg = vec![0u8; n];
                    cfg[*wire] = j as u8;
                    map.insert(cfg, amp);
                }
            }
            StateKind::WQubit => {
                let amp = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
                for w in 0..n {
                    let mut cfg = vec![0u8; n];
                    cfg[w] = 1;
                    map.insert(cfg, amp);
                }
            }
            StateKind::WQudit => {
                let d = register
                    .uniform_dim()
                    .ok_or_else(|| Error::invalid("qudit W state needs a uniform register"))?;
                let amp = Complex64::new(1.0 / (((d - 1) * n) as f64).sqrt(), 0.0);
                for w in 0..n {
                    for j in 1..d {
                        let mut cfg = vec![0u8; n];
                        cfg[w] = j as u8;
                        map.insert(cfg, amp);
                    }
                }
            }
        }
        Ok(PureState::new_sparse(register.clone(), map))
    }

    pub fn zero(register: &RadixRegister) -> PureState {
        Self::make(&StateKind::Zero, register).expect("zero state always valid")
    }

    /// Sparse state from explicit configuration → amplitude entries.
    pub fn from_support(
        register: RadixRegister,
        entries: Vec<(Vec<usize>, Complex64)>,
    ) -> Result<PureState> {
        let n = register.num_wires();
        let mut map = BTreeMap::new();
        for (cfg, amp) in entries {
            if cfg.len() != n {
                return Err(Error::invalid("configuration length mismatch"));
            }
            for (w, &x) in cfg.iter().enumerate() {
                if x >= register.dim(w) {
                    return Err(Error::invalid(format!("digit {x} out of range for wire {w}")));
                }
            }
            map.insert(cfg.iter().map(|&x| x as u8).collect(), amp);
        }
        Ok(PureState::new_sparse(register, map))
    }

    /// Dense state from an amplitude vector (wire 0 most significant).
    pub fn from_dense(register: RadixRegister, amps: Vec<Complex64>) -> Result<PureState> {
        let dim = register.dense_dim(DENSE_CAP)?;
        if amps.len() != dim {
            return Err(Error::ShapeMismatch(format!(
                "expected {dim} amplitudes, got {}",
                amps.len()
            )));
        }
        Ok(PureState { register, repr: Repr::Dense(amps) })
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.repr, Repr::Sparse(_))
    }

    /// Convert to a dense amplitude vector (subject to the dense cap).
    pub fn to_dense(&self) -> Result<Vec<Complex64>> {
        let dim = self.register.dense_dim(DENSE_CAP)?;
        match &self.repr {
            Repr::Dense(v) => Ok(v.clone()),
            Repr::Sparse(map) => {
                let mut v = vec![Complex64::new(0.0, 0.0); dim];
                for (cfg, &amp) in map {
                    let digits: Vec<usize> = cfg.iter().map(|&x| x as usize).collect();
                    v[self.register.encode(&digits)? as usize] = amp;
                }
                Ok(v)
            }
        }
    }

    /// Nonzero configurations with amplitudes, sorted by configuration.
    pub fn support(&self) -> Vec<(Vec<usize>, Complex64)> {
        match &self.repr {
            Repr::Sparse(map) => map
                .iter()
                .filter(|(_, a)| a.norm() > PRUNE_TOL)
                .map(|(cfg, &a)| (cfg.iter().map(|&x| x as usize).collect(), a))
                .collect(),
            Repr::Dense(v) => {
                let mut out = Vec::new();
                for (idx, &a) in v.iter().enumerate() {
                    if a.norm() > PRUNE_TOL {
                        out.push((self.register.decode(idx as u128).unwrap(), a));
                    }
                }
                out
            }
        }
    }

    pub fn support_size(&self) -> usize {
        self.support().len()
    }

    pub fn norm_sqr(&self) -> f64 {
        match &self.repr {
            Repr::Dense(v) => v.iter().map(|a| a.norm_sqr()).sum(),
            Repr::Sparse(m) => m.values().map(|a| a.norm_sqr()).sum(),
        }
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &PureState) -> Result<Complex64> {
        if self.register != other.register {
            return Err(Error::RegisterMismatch("inner product registers differ".into()));
        }
        match (&self.repr, &other.repr) {
            (Repr::Sparse(a), Repr::Sparse(b)) => {
                // iterate the smaller support
                let (small, big, conj_small) =
                    if a.len() <= b.len() { (a, b, true) } else { (b, a, false) };
                let mut acc = Complex64::new(0.0, 0.0);
                for (cfg, &amp) in small {
                    if let Some(&other_amp) = big.get(cfg) {
                        acc += if conj_small { amp.conj() * other_amp } else { other_amp.conj() * amp };
                    }
                }
                Ok(acc)
            }
            _ => {
                let a = self.to_dense()?;
                let b = other.to_dense()?;
                Ok(a.iter().zip(&b).map(|(x, y)| x.conj() * y).sum())
            }
        }
    }

    /// |⟨self|other⟩|², clamped into [0, 1].
    pub fn fidelity(&self, other: &PureState) -> Result<f64> {
        let f = self.inner(other)?.norm_sqr();
        Ok(f.min(1.0))
    }

    /// Project one wire onto a value. Returns the outcome probability and
    /// the renormalized state.
    pub fn post_select(&self, wire: usize, value: usize) -> Result<(f64, PureState)> {
        if wire >= self.register.num_wires() {
            return Err(Error::invalid(format!("wire {wire} out of range")));
        }
        if value >= self.register.dim(wire) {
            return Err(Error::invalid(format!("value {value} out of range for wire {wire}")));
        }
        let mut map = BTreeMap::new();
        match &self.repr {
            Repr::Sparse(m) => {
                for (cfg, &amp) in m {
                    if cfg[wire] as usize == value {
                        map.insert(cfg.clone(), amp);
                    }
                }
            }
            Repr::Dense(v) => {
                for (idx, &amp) in v.iter().enumerate() {
                    if amp.norm() <= PRUNE_TOL {
                        continue;
                    }
                    let digits = self.register.decode(idx as u128)?;
                    if digits[wire] == value {
                        map.insert(digits.iter().map(|&x| x as u8).collect(), amp);
                    }
                }
            }
        }
        let prob: f64 = map.values().map(|a| a.norm_sqr()).sum();
        if prob < 1e-12 {
            return Err(Error::ImpossibleOutcome(prob));
        }
        let scale = 1.0 / prob.sqrt();
        for amp in map.values_mut() {
            *amp *= scale;
        }
        Ok((prob, PureState::new_sparse(self.register.clone(), map)))
    }
}

fn local_dims(register: &RadixRegister, wires: &[usize]) -> Vec<usize> {
    wires.iter().map(|&w| register.dim(w)).collect()
}

fn local_encode(dims: &[usize], digits: &[usize]) -> usize {
    digits.iter().zip(dims).fold(0, |acc, (&x, &d)| acc * d + x)
}

fn local_decode(dims: &[usize], mut idx: usize) -> Vec<usize> {
    let mut out = vec![0usize; dims.len()];
    for (i, &d) in dims.iter().enumerate().rev() {
        out[i] = idx % d;
        idx /= d;
    }
    out
}

fn apply_gate_sparse(
    map: &BTreeMap<Config, Complex64>,
    inst: &GateInstance,
    register: &RadixRegister,
) -> Result<BTreeMap<Config, Complex64>> {
    let m = inst.matrix()?;
    let dims = local_dims(register, &inst.wires);
    let local_dim: usize = dims.iter().product();
    if m.nrows() != local_dim {
        return Err(Error::ShapeMismatch(format!(
            "gate of dimension {} applied to wires of joint dimension {local_dim}",
            m.nrows()
        )));
    }
    let mut out: BTreeMap<Config, Complex64> = BTreeMap::new();
    for (cfg, &amp) in map {
        let in_digits: Vec<usize> = inst.wires.iter().map(|&w| cfg[w] as usize).collect();
        let col = local_encode(&dims, &in_digits);
        for row in 0..local_dim {
            let coeff = m[(row, col)];
            if coeff.norm() <= PRUNE_TOL {
                continue;
            }
            let out_digits = local_decode(&dims, row);
            let mut new_cfg = cfg.clone();
            for (&w, &x) in inst.wires.iter().zip(&out_digits) {
                new_cfg[w] = x as u8;
            }
            let entry = out.entry(new_cfg).or_insert(Complex64::new(0.0, 0.0));
            *entry += coeff * amp;
        }
    }
    out.retain(|_, a| a.norm() > PRUNE_TOL);
    Ok(out)
}

fn apply_gate_dense(
    vec: &[Complex64],
    inst: &GateInstance,
    register: &RadixRegister,
) -> Result<Vec<Complex64>> {
    let m = inst.matrix()?;
    let dims = local_dims(register, &inst.wires);
    let local_dim: usize = dims.iter().product();
    if m.nrows() != local_dim {
        return Err(Error::ShapeMismatch(format!(
            "gate of dimension {} applied to wires of joint dimension {local_dim}",
            m.nrows()
        )));
    }
    let mut out = vec![Complex64::new(0.0, 0.0); vec.len()];
    for (idx, &amp) in vec.iter().enumerate() {
        if amp.norm() <= 1e-300 {
            continue;
        }
        let digits = register.decode(idx as u128)?;
        let in_digits: Vec<usize> = inst.wires.iter().map(|&w| digits[w]).collect();
        let col = local_encode(&dims, &in_digits);
        for row in 0..local_dim {
            let coeff = m[(row, col)];
            if coeff.norm() <= PRUNE_TOL {
                continue;
            }
            let out_digits = local_decode(&dims, row);
            let mut new_digits = digits.clone();
            for (&w, &x) in inst.wires.iter().zip(&out_digits) {
                new_digits[w] = x;
            }
            out[register.encode(&new_digits)? as usize] += coeff * amp;
        }
    }
    Ok(out)
}

/// Exact gate-by-gate action of an expanded circuit. The representation of
/// the input is preserved: sparse in, sparse out.
pub fn apply_circuit(state: &PureState, circuit: &Circuit) -> Result<PureState> {
    apply_circuit_bounded(state, circuit, None)
}

/// Like [`apply_circuit`], asserting that the sparse support never exceeds
/// `support_bound` at any intermediate step.
pub fn apply_circuit_bounded(
    state: &PureState,
    circuit: &Circuit,
    support_bound: Option<usize>,
) -> Result<PureState> {
    if state.register != circuit.register {
        return Err(Error::RegisterMismatch(
            "state register does not match circuit register".into(),
        ));
    }
    let out = match &state.repr {
        Repr::Sparse(map) => {
            let mut cur = map.clone();
            for inst in &circuit.gates {
                cur = apply_gate_sparse(&cur, inst, &circuit.register)?;
                if let Some(bound) = support_bound {
                    if cur.len() > bound {
                        return Err(Error::ResourceLimit(format!(
                            "sparse support {} exceeded bound {bound}",
                            cur.len()
                        )));
                    }
                }
            }
            PureState::new_sparse(state.register.clone(), cur)
        }
        Repr::Dense(v) => {
            let mut cur = v.clone();
            for inst in &circuit.gates {
                cur = apply_gate_dense(&cur, inst, &circuit.register)?;
            }
            PureState { register: state.register.clone(), repr: Repr::Dense(cur) }
        }
    };
    debug_assert!((out.norm_sqr() - 1.0).abs() < 1e-9);
    Ok(out)
}

/// Column-by-column unitary of an expanded circuit; column j is the image of
/// basis state j. Capped at total dimension 4096.
pub fn circuit_unitary(circuit: &Circuit) -> Result<CMat> {
    let dim = circuit.register.dense_dim(DENSE_CAP)?;
    let mut u = Array2::zeros((dim, dim));
    for j in 0..dim {
        let mut v = vec![Complex64::new(0.0, 0.0); dim];
        v[j] = Complex64::new(1.0, 0.0);
        let state = PureState { register: circuit.register.clone(), repr: Repr::Dense(v) };
        let out = apply_circuit(&state, circuit)?;
        let col = out.to_dense()?;
        for (i, amp) in col.into_iter().enumerate() {
            u[(i, j)] = amp;
        }
    }
    Ok(u)
}

/// How two unitaries are compared.
#[derive(Debug, Clone, PartialEq)]
pub enum CompareMode {
    /// Entrywise within tolerance.
    Exact,
    /// Within tolerance after optimal global-phase alignment.
    GlobalPhase,
    /// Restricted to columns whose control digit lies in the allowed set,
    /// then compared up to one shared phase.
    ControlSubspace { wire: usize, values: Vec<usize> },
}

/// Comparison verdict with the worst entrywise deviation observed.
#[derive(Debug, Clone, Copy)]
pub struct Comparison {
    pub equal: bool,
    pub max_deviation: f64,
}

/// Compare two same-shape unitaries under the given mode.
pub fn compare_unitaries(
    u: &CMat,
    v: &CMat,
    mode: &CompareMode,
    register: &RadixRegister,
    tol: f64,
) -> Result<Comparison> {
    if u.dim() != v.dim() {
        return Err(Error::ShapeMismatch(format!("{:?} vs {:?}", u.dim(), v.dim())));
    }
    let deviation = match mode {
        CompareMode::Exact => max_abs_diff(u, v),
        CompareMode::GlobalPhase => crate::linalg::global_phase_distance(u, v),
        CompareMode::ControlSubspace { wire, values } => {
            let dim = register.dense_dim(DENSE_CAP)?;
            if dim != u.nrows() {
                return Err(Error::ShapeMismatch(
                    "register does not match matrix dimension".into(),
                ));
            }
            let cols: Vec<usize> = (0..dim)
                .filter(|&j| {
                    let digits = register.decode(j as u128).unwrap();
                    values.contains(&digits[*wire])
                })
                .collect();
            let pick = |m: &CMat| {
                let mut sub = Array2::zeros((dim, cols.len()));
                for (cj, &j) in cols.iter().enumerate() {
                    for i in 0..dim {
                        sub[(i, cj)] = m[(i, j)];
                    }
                }
                sub
            };
            let su = pick(u);
            let sv = pick(v);
            match alignment_phase(&su, &sv) {
                Some(p) => max_abs_diff(&su, &sv.mapv(|z| z * p)),
                None => f64::INFINITY,
            }
        }
    };
    Ok(Comparison { equal: deviation < tol, max_deviation: deviation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::GateInstance;
    use crate::gates::GateSpec;
    use crate::linalg::identity;

    fn reg(dims: &[usize]) -> RadixRegister {
        RadixRegister::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn make_states() {
        let w3 = PureState::make(&StateKind::WQubit, &reg(&[2, 2, 2])).unwrap();
        let sup = w3.support();
        assert_eq!(sup.len(), 3);
        for (cfg, amp) in sup {
            assert_eq!(cfg.iter().sum::<usize>(), 1);
            assert!((amp.norm() - 1.0 / 3.0f64.sqrt()).abs() < 1e-12);
        }

        let wq = PureState::make(&StateKind::WQudit, &reg(&[3, 3, 3])).unwrap();
        assert_eq!(wq.support().len(), 6);
        for (_, amp) in wq.support() {
            assert!((amp.norm() - 1.0 / 6.0f64.sqrt()).abs() < 1e-12);
        }

        let res = PureState::make(&StateKind::Resource { wire: 0 }, &reg(&[3])).unwrap();
        assert_eq!(res.support().len(), 2);
        assert!((res.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn h_on_zero_gives_plus() {
        let register = reg(&[3]);
        let mut c = Circuit::new(register.clone());
        c.push(GateInstance::prim(GateSpec::h(3), vec![0])).unwrap();
        let out = apply_circuit(&PureState::zero(&register), &c).unwrap();
        let plus = PureState::make(&StateKind::Plus { wire: 0 }, &register).unwrap();
        assert!((out.fidelity(&plus).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cx_addition_mod_d() {
        let register = reg(&[3, 3]);
        let mut c = Circuit::new(register.clone());
        c.push(GateInstance::prim(GateSpec::cx(3, 3), vec![0, 1])).unwrap();
        let input = PureState::make(&StateKind::Basis(vec![1, 1]), &register).unwrap();
        let out = apply_circuit(&input, &c).unwrap();
        let expect = PureState::make(&StateKind::Basis(vec![1, 2]), &register).unwrap();
        assert!((out.fidelity(&expect).unwrap() - 1.0).abs() < 1e-12);

        // inverse maps |1,1⟩ → |1,0⟩
        let out = apply_circuit(&input, &c.inverse()).unwrap();
        let expect = PureState::make(&StateKind::Basis(vec![1, 0]), &register).unwrap();
        assert!((out.fidelity(&expect).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fidelity_phase_invariance() {
        let register = reg(&[2, 2]);
        let a = PureState::make(&StateKind::WQubit, &register).unwrap();
        assert!((a.fidelity(&a).unwrap() - 1.0).abs() < 1e-12);
        let phase = Complex64::from_polar(1.0, 0.7);
        let mut map = BTreeMap::new();
        for (cfg, amp) in a.support() {
            map.insert(cfg.iter().map(|&x| x as u8).collect(), amp * phase);
        }
        let b = PureState::new_sparse(register, map);
        assert!((a.fidelity(&b).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unitary_of_empty_circuit() {
        let c = Circuit::new(reg(&[3, 3]));
        let u = circuit_unitary(&c).unwrap();
        assert!(max_abs_diff(&u, &identity(9)) < 1e-14);
    }

    #[test]
    fn unitary_cap() {
        let c = Circuit::new(reg(&[5, 5, 5]));
        assert!(circuit_unitary(&c).is_ok(), "125 within cap");
        let big = Circuit::new(RadixRegister::uniform(3, 10).unwrap());
        assert!(matches!(circuit_unitary(&big), Err(Error::ResourceLimit(_))), "59049 rejected");
    }

    #[test]
    fn post_select_plus() {
        let register = reg(&[2]);
        let plus = PureState::make(&StateKind::Plus { wire: 0 }, &register).unwrap();
        let (p, out) = plus.post_select(0, 0).unwrap();
        assert!((p - 0.5).abs() < 1e-12);
        assert!((out.norm_sqr() - 1.0).abs() < 1e-12);

        let basis = PureState::make(&StateKind::Basis(vec![1]), &register).unwrap();
        assert!(matches!(basis.post_select(0, 0), Err(Error::ImpossibleOutcome(_))));
    }

    #[test]
    fn post_select_probabilities_sum_to_one() {
        let register = reg(&[3]);
        let plus = PureState::make(&StateKind::Plus { wire: 0 }, &register).unwrap();
        let total: f64 = (0..3)
            .map(|v| plus.post_select(0, v).map(|(p, _)| p).unwrap_or(0.0))
            .sum();
        assert!((total - 1.0).abs() < 1e-10);
    }

    #[test]
    fn compare_modes() {
        let x = GateSpec::x(3).matrix().unwrap();
        let z = GateSpec::z(3).matrix().unwrap();
        let register = reg(&[3]);
        let phased = x.mapv(|v| v * Complex64::from_polar(1.0, 1.1));
        assert!(
            compare_unitaries(&x, &phased, &CompareMode::GlobalPhase, &register, 1e-10)
                .unwrap()
                .equal
        );
        assert!(
            !compare_unitaries(&x, &phased, &CompareMode::Exact, &register, 1e-10).unwrap().equal
        );
        assert!(!compare_unitaries(&x, &z, &CompareMode::GlobalPhase, &register, 1e-10)
            .unwrap()
            .equal);
    }

    #[test]
    fn control_subspace_compare() {
        // matrices agreeing on control ∈ {0,1} columns but not on control 2
        let register = reg(&[3, 3]);
        let mut a = identity(9);
        let mut b = identity(9);
        b[(8, 8)] = Complex64::new(0.0, 1.0); // differs only in a control-2 column
        a[(0, 0)] = Complex64::new(1.0, 0.0);
        let mode = CompareMode::ControlSubspace { wire: 0, values: vec![0, 1] };
        assert!(compare_unitaries(&a, &b, &mode, &register, 1e-10).unwrap().equal);
        assert!(!compare_unitaries(&a, &b, &CompareMode::Exact, &register, 1e-10).unwrap().equal);
    }

    #[test]
    fn dense_and_sparse_agree_on_small_circuit() {
        let register = reg(&[3, 3]);
        let mut c = Circuit::new(register.clone());
        c.push(GateInstance::prim(GateSpec::h(3), vec![0])).unwrap();
        c.push(GateInstance::prim(GateSpec::cx(3, 3), vec![0, 1])).unwrap();
        c.push(GateInstance::prim(GateSpec::sqrt_z(3), vec![1])).unwrap();
        let sparse_out = apply_circuit(&PureState::zero(&register), &c).unwrap();
        let dense_in =
            PureState::from_dense(register.clone(), sparse_to_dense_basis(&register)).unwrap();
        let dense_out = apply_circuit(&dense_in, &c).unwrap();
        assert!((sparse_out.fidelity(&dense_out).unwrap() - 1.0).abs() < 1e-12);
    }

    fn sparse_to_dense_basis(register: &RadixRegister) -> Vec<Complex64> {
        let mut v = vec![Complex64::new(0.0, 0.0); register.total_dim() as usize];
        v[0] = Complex64::new(1.0, 0.0);
        v
    }
}
