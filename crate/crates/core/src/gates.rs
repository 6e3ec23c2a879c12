//! Primitive gate matrices for any prime dimension, plus classification of
//! small unitaries as Pauli, Clifford, or members of higher hierarchy levels.

use ndarray::Array2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{check_unitary, identity, kron, CMat};
use crate::radix::{is_prime, mod_inverse, RadixRegister, RootTable};

/// Matrices are generated exactly; this is the slack we allow them.
pub const MATRIX_TOL: f64 = 1e-12;

/// Granularity of a diagonal phase vector: exponents of ω (mod d) or of
/// ζ (mod d²).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Granularity {
    Omega,
    Zeta,
}

/// A length-d vector of integer phase exponents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseVector {
    pub d: usize,
    pub exponents: Vec<u64>,
    pub granularity: Granularity,
}

impl PhaseVector {
    pub fn new(d: usize, exponents: Vec<i64>, granularity: Granularity) -> Result<Self> {
        if exponents.len() != d {
            return Err(Error::invalid(format!(
                "phase vector for d={d} needs {d} entries, got {}",
                exponents.len()
            )));
        }
        let modulus = match granularity {
            Granularity::Omega => d as i64,
            Granularity::Zeta => (d * d) as i64,
        };
        let exponents = exponents.iter().map(|&e| e.rem_euclid(modulus) as u64).collect();
        Ok(PhaseVector { d, exponents, granularity })
    }

    pub fn zero(d: usize) -> Self {
        PhaseVector { d, exponents: vec![0; d], granularity: Granularity::Omega }
    }

    pub fn modulus(&self) -> u64 {
        match self.granularity {
            Granularity::Omega => self.d as u64,
            Granularity::Zeta => (self.d * self.d) as u64,
        }
    }

    /// Entrywise negation mod the granularity modulus.
    pub fn neg(&self) -> Self {
        let m = self.modulus();
        PhaseVector {
            d: self.d,
            exponents: self.exponents.iter().map(|&e| (m - e % m) % m).collect(),
            granularity: self.granularity,
        }
    }

    /// Sum of all exponents (used for bookkeeping of recorded phases).
    pub fn total(&self) -> u64 {
        self.exponents.iter().sum()
    }
}

/// τ(k) = ω^{2⁻¹ k² mod d}, as an exponent vector. Odd prime d only.
pub fn tau_vector(d: usize) -> Result<PhaseVector> {
    if d == 2 {
        return Err(Error::Unsupported("tau needs 2 to be invertible mod d".into()));
    }
    let inv2 = mod_inverse(2, d)? as i64;
    let exps = (0..d as i64).map(|k| (inv2 * k * k).rem_euclid(d as i64)).collect();
    PhaseVector::new(d, exps, Granularity::Omega)
}

/// α(k) = −Σ_{j<k} j² mod d with α(0) = 0, plus the cyclic consistency flag
/// Σ_{j=0}^{d−1} j² ≡ 0 (mod d). The flag fails at d = 3.
pub fn alpha_vector(d: usize) -> Result<(PhaseVector, bool)> {
    if d == 2 {
        return Err(Error::Unsupported("alpha needs 2 to be invertible mod d".into()));
    }
    if !is_prime(d) {
        return Err(Error::NotPrime(d));
    }
    let m = d as i64;
    let mut exps = Vec::with_capacity(d);
    let mut acc: i64 = 0;
    for k in 0..d as i64 {
        exps.push((-acc).rem_euclid(m));
        acc = (acc + k * k).rem_euclid(m);
    }
    // after the loop, acc = Σ_{j<d} j² mod d
    let consistent = acc == 0;
    Ok((PhaseVector::new(d, exps, Granularity::Omega)?, consistent))
}

/// Enumerated primitive gate kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GateKind {
    X,
    Z,
    S,
    H,
    Cx,
    SqrtZ,
    /// Qubit T gate diag(1, e^{iπ/4}); d = 2 only.
    T2,
    P1,
    ZAlpha,
    Uma,
}

impl GateKind {
    pub fn name(&self) -> &'static str {
        match self {
            GateKind::X => "X",
            GateKind::Z => "Z",
            GateKind::S => "S",
            GateKind::H => "H",
            GateKind::Cx => "CX",
            GateKind::SqrtZ => "SQRTZ",
            GateKind::T2 => "T2",
            GateKind::P1 => "P1",
            GateKind::ZAlpha => "ZALPHA",
            GateKind::Uma => "UMA",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "X" => GateKind::X,
            "Z" => GateKind::Z,
            "S" => GateKind::S,
            "H" => GateKind::H,
            "CX" => GateKind::Cx,
            "SQRTZ" => GateKind::SqrtZ,
            "T2" => GateKind::T2,
            "P1" => GateKind::P1,
            "ZALPHA" => GateKind::ZAlpha,
            "UMA" => GateKind::Uma,
            _ => return None,
        })
    }

    pub fn num_wires(&self) -> usize {
        match self {
            GateKind::Cx => 2,
            _ => 1,
        }
    }
}

/// Integer parameters of a primitive gate. Which fields apply depends on the
/// kind: `power` for X/Z/CX, `k` for P1, `m`/`a` for UMA, `alpha` for ZALPHA.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GateParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<PhaseVector>,
}

/// A primitive gate together with its wire dimensions.
///
/// Single-wire gates carry one dimension. CX carries the control and target
/// dimensions, which may differ: the semantics |c,t⟩ ↦ |c, t + p·c mod d_t⟩
/// is well defined for any pair and is how mixed-dimension trees compose.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateSpec {
    pub kind: GateKind,
    pub dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "is_default_params")]
    pub params: GateParams,
}

fn is_default_params(p: &GateParams) -> bool {
    *p == GateParams::default()
}

impl GateSpec {
    fn single(kind: GateKind, d: usize) -> Self {
        GateSpec { kind, dims: vec![d], params: GateParams::default() }
    }

    pub fn x(d: usize) -> Self {
        Self::single(GateKind::X, d)
    }

    pub fn x_pow(d: usize, p: i64) -> Self {
        let mut g = Self::single(GateKind::X, d);
        g.params.power = Some(p);
        g
    }

    pub fn z(d: usize) -> Self {
        Self::single(GateKind::Z, d)
    }

    pub fn z_pow(d: usize, p: i64) -> Self {
        let mut g = Self::single(GateKind::Z, d);
        g.params.power = Some(p);
        g
    }

    pub fn s(d: usize) -> Self {
        Self::single(GateKind::S, d)
    }

    pub fn h(d: usize) -> Self {
        Self::single(GateKind::H, d)
    }

    pub fn cx(dc: usize, dt: usize) -> Self {
        GateSpec { kind: GateKind::Cx, dims: vec![dc, dt], params: GateParams::default() }
    }

    pub fn cx_pow(dc: usize, dt: usize, p: i64) -> Self {
        let mut g = Self::cx(dc, dt);
        g.params.power = Some(p);
        g
    }

    pub fn sqrt_z(d: usize) -> Self {
        Self::single(GateKind::SqrtZ, d)
    }

    pub fn t2() -> Self {
        Self::single(GateKind::T2, 2)
    }

    pub fn p1(d: usize, k: u64) -> Self {
        let mut g = Self::single(GateKind::P1, d);
        g.params.k = Some(k);
        g
    }

    pub fn z_alpha(alpha: PhaseVector) -> Self {
        let mut g = Self::single(GateKind::ZAlpha, alpha.d);
        g.params.alpha = Some(alpha);
        g
    }

    pub fn uma(d: usize, m: u32, a: u32) -> Self {
        let mut g = Self::single(GateKind::Uma, d);
        g.params.m = Some(m);
        g.params.a = Some(a);
        g
    }

    pub fn num_wires(&self) -> usize {
        self.kind.num_wires()
    }

    /// Dimension of the generated matrix.
    pub fn matrix_dim(&self) -> usize {
        self.dims.iter().product()
    }

    fn power(&self) -> i64 {
        self.params.power.unwrap_or(1)
    }

    /// The defining matrix of this gate.
    pub fn matrix(&self) -> Result<CMat> {
        for &d in &self.dims {
            if !is_prime(d) {
                return Err(Error::NotPrime(d));
            }
        }
        if self.dims.len() != self.kind.num_wires() {
            return Err(Error::invalid(format!(
                "{} expects {} wire dimension(s), got {}",
                self.kind.name(),
                self.kind.num_wires(),
                self.dims.len()
            )));
        }
        let d = self.dims[0];
        let roots = RootTable::new(d)?;
        let m = match self.kind {
            GateKind::X => {
                let p = self.power();
                let mut m: CMat = Array2::zeros((d, d));
                for k in 0..d {
                    let to = (k as i64 + p).rem_euclid(d as i64) as usize;
                    m[(to, k)] = Complex64::new(1.0, 0.0);
                }
                m
            }
            GateKind::Z => {
                let p = self.power();
                Array2::from_diag(&ndarray::Array1::from((0..d).map(|k| roots.omega_pow(p * k as i64)).collect::<Vec<_>>()))
            }
            GateKind::S => {
                if d == 2 {
                    // The odd-d formula degenerates to the identity at d = 2;
                    // the qubit S gate is diag(1, i).
                    Array2::from_diag(&ndarray::Array1::from(vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)]))
                } else {
                    Array2::from_diag(&ndarray::Array1::from(
                        (0..d as i64).map(|k| roots.omega_pow(k * (k - 1) / 2)).collect::<Vec<_>>(),
                    ))
                }
            }
            GateKind::H => {
                let norm = 1.0 / (d as f64).sqrt();
                Array2::from_shape_fn((d, d), |(j, k)| roots.omega_pow((j * k) as i64) * norm)
            }
            GateKind::Cx => {
                let (dc, dt) = (self.dims[0], self.dims[1]);
                let p = self.power();
                let dim = dc * dt;
                let mut m: CMat = Array2::zeros((dim, dim));
                for c in 0..dc {
                    for t in 0..dt {
                        let to = (t as i64 + p * c as i64).rem_euclid(dt as i64) as usize;
                        m[(c * dt + to, c * dt + t)] = Complex64::new(1.0, 0.0);
                    }
                }
                m
            }
            GateKind::SqrtZ => {
                Array2::from_diag(&ndarray::Array1::from((0..d).map(|k| roots.zeta_pow(k as i64)).collect::<Vec<_>>()))
            }
            GateKind::T2 => {
                if d != 2 {
                    return Err(Error::invalid("T2 is a qubit gate; d must be 2"));
                }
                let t = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
                Array2::from_diag(&ndarray::Array1::from(vec![Complex64::new(1.0, 0.0), t]))
            }
            GateKind::P1 => {
                let k = self.params.k.ok_or_else(|| Error::invalid("P1 needs parameter k"))? as usize;
                if k >= d {
                    return Err(Error::invalid(format!("P1 level {k} out of range for d={d}")));
                }
                let mut diag = vec![Complex64::new(1.0, 0.0); d];
                diag[k] = roots.omega();
                Array2::from_diag(&ndarray::Array1::from(diag))
            }
            GateKind::ZAlpha => {
                let alpha =
                    self.params.alpha.as_ref().ok_or_else(|| Error::invalid("ZALPHA needs a phase vector"))?;
                if alpha.d != d {
                    return Err(Error::invalid("phase vector dimension mismatch"));
                }
                let diag: Vec<Complex64> = alpha
                    .exponents
                    .iter()
                    .map(|&e| match alpha.granularity {
                        Granularity::Omega => roots.omega_pow(e as i64),
                        Granularity::Zeta => roots.zeta_pow(e as i64),
                    })
                    .collect();
                Array2::from_diag(&ndarray::Array1::from(diag))
            }
            GateKind::Uma => {
                let m = self.params.m.ok_or_else(|| Error::invalid("UMA needs parameter m"))?;
                let a = self.params.a.ok_or_else(|| Error::invalid("UMA needs parameter a"))?;
                if m == 0 || a == 0 {
                    return Err(Error::invalid("UMA parameters must be positive"));
                }
                let den = (d as u128).pow(m);
                let diag: Vec<Complex64> = (0..d as u128)
                    .map(|j| {
                        let num = j.pow(a) % den;
                        let angle = 2.0 * std::f64::consts::PI * num as f64 / den as f64;
                        Complex64::from_polar(1.0, angle)
                    })
                    .collect();
                Array2::from_diag(&ndarray::Array1::from(diag))
            }
        };
        debug_assert!(check_unitary(&m, MATRIX_TOL).is_ok());
        Ok(m)
    }

    /// True for gates whose matrix is diagonal regardless of parameters.
    pub fn is_diagonal(&self) -> bool {
        matches!(
            self.kind,
            GateKind::Z | GateKind::S | GateKind::SqrtZ | GateKind::T2 | GateKind::P1 | GateKind::ZAlpha | GateKind::Uma
        )
    }
}

/// A projective Pauli word: per-wire X and Z powers, global phase ignored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PauliWord {
    pub d: usize,
    pub x_powers: Vec<u64>,
    pub z_powers: Vec<u64>,
}

impl PauliWord {
    pub fn num_wires(&self) -> usize {
        self.x_powers.len()
    }
}

fn infer_wires(dim: usize, d: usize) -> Result<usize> {
    let mut n = 0;
    let mut t = 1usize;
    while t < dim {
        t *= d;
        n += 1;
    }
    if t != dim || n == 0 {
        return Err(Error::invalid(format!(
            "matrix dimension {dim} is not a positive power of {d}"
        )));
    }
    Ok(n)
}

/// If `u` is (up to a global phase) a tensor product of X and Z powers,
/// return the word. `d` is the per-wire dimension.
pub fn is_pauli(u: &CMat, d: usize, tol: f64) -> Result<Option<PauliWord>> {
    check_unitary(u, 1e-9)?;
    let dim = u.nrows();
    let n = infer_wires(dim, d)?;
    let reg = RadixRegister::uniform(d, n)?;
    let roots = RootTable::new(d)?;

    // Column of |0...0⟩ fixes the X part and the global phase.
    let col0 = u.column(0);
    let mut shift_idx = None;
    for (r, v) in col0.iter().enumerate() {
        if v.norm() > 0.5 {
            shift_idx = Some(r);
        } else if v.norm() > tol {
            return Ok(None);
        }
    }
    let Some(shift_idx) = shift_idx else { return Ok(None) };
    let x_powers: Vec<u64> = reg.decode(shift_idx as u128)?.iter().map(|&v| v as u64).collect();
    let phase = col0[shift_idx];
    if (phase.norm() - 1.0).abs() > tol {
        return Ok(None);
    }

    // Column of each unit vector fixes the Z part.
    let mut z_powers = vec![0u64; n];
    for w in 0..n {
        let mut digits = vec![0usize; n];
        digits[w] = 1;
        let col_idx = reg.encode(&digits)? as usize;
        let mut expected_digits = digits.clone();
        for (i, &a) in x_powers.iter().enumerate() {
            expected_digits[i] = (expected_digits[i] + a as usize) % d;
        }
        let row = reg.encode(&expected_digits)? as usize;
        let v = u[(row, col_idx)];
        if v.norm() < 0.5 {
            return Ok(None);
        }
        let ratio = v / phase;
        let mut found = None;
        for b in 0..d as i64 {
            if (ratio - roots.omega_pow(b)).norm() < 10.0 * tol {
                found = Some(b as u64);
                break;
            }
        }
        let Some(b) = found else { return Ok(None) };
        z_powers[w] = b;
    }

    // Full verification of every entry.
    for c in 0..dim {
        let digits = reg.decode(c as u128)?;
        let mut out = digits.clone();
        for (i, &a) in x_powers.iter().enumerate() {
            out[i] = (out[i] + a as usize) % d;
        }
        let row = reg.encode(&out)? as usize;
        let zexp: i64 = digits
            .iter()
            .zip(&z_powers)
            .map(|(&x, &b)| x as i64 * b as i64)
            .sum();
        let expected = phase * roots.omega_pow(zexp);
        for r in 0..dim {
            let want = if r == row { expected } else { Complex64::new(0.0, 0.0) };
            if (u[(r, c)] - want).norm() > 10.0 * tol {
                return Ok(None);
            }
        }
    }

    Ok(Some(PauliWord { d, x_powers, z_powers }))
}

/// One Pauli generator: X or Z on a single wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub wire: usize,
    pub z: bool,
}

fn generator_matrix(gen: Generator, d: usize, n: usize) -> Result<CMat> {
    let g = if gen.z { GateSpec::z(d) } else { GateSpec::x(d) }.matrix()?;
    let mut out = identity(1);
    for w in 0..n {
        let f = if w == gen.wire { g.clone() } else { identity(d) };
        out = kron(&out, &f);
    }
    Ok(out)
}

fn generators(n: usize) -> Vec<Generator> {
    let mut gens = Vec::with_capacity(2 * n);
    for wire in 0..n {
        gens.push(Generator { wire, z: false });
        gens.push(Generator { wire, z: true });
    }
    gens
}

/// Clifford test: U conjugates every Pauli generator to a projective Pauli.
/// On success returns the witness map generator → word.
pub fn is_clifford(u: &CMat, d: usize, tol: f64) -> Result<Option<Vec<(Generator, PauliWord)>>> {
    check_unitary(u, 1e-9)?;
    let n = infer_wires(u.nrows(), d)?;
    let udag = crate::linalg::dagger(u);
    let mut witness = Vec::new();
    for gen in generators(n) {
        let p = generator_matrix(gen, d, n)?;
        let conj = u.dot(&p).dot(&udag);
        match is_pauli(&conj, d, tol)? {
            Some(word) => witness.push((gen, word)),
            None => return Ok(None),
        }
    }
    Ok(Some(witness))
}

/// Result of a Clifford-hierarchy query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelResult {
    /// Smallest n with U ∈ C_n.
    Level(u32),
    /// Membership could not be certified within the given bound.
    ExceedsBound(u32),
}

/// Cap on the dense dimension accepted by the hierarchy classifier.
pub const HIERARCHY_DIM_CAP: usize = 4096;
/// Hard cap on the recursion depth; all interesting targets sit at level ≤ 5.
pub const MAX_HIERARCHY_LEVEL: u32 = 8;

struct LevelCache {
    entries: Vec<(CMat, u32)>,
    tol: f64,
}

impl LevelCache {
    fn lookup(&self, m: &CMat) -> Option<u32> {
        self.entries
            .iter()
            .find(|(e, _)| crate::linalg::global_phase_distance(e, m) < self.tol)
            .map(|&(_, lvl)| lvl)
    }

    fn insert(&mut self, m: CMat, lvl: u32) {
        self.entries.push((m, lvl));
    }
}

fn min_level(u: &CMat, d: usize, n: usize, budget: u32, cache: &mut LevelCache) -> Result<Option<u32>> {
    if let Some(lvl) = cache.lookup(u) {
        return Ok(if lvl <= budget { Some(lvl) } else { None });
    }
    if is_pauli(u, d, cache.tol)?.is_some() {
        cache.insert(u.clone(), 1);
        return Ok(Some(1));
    }
    if budget <= 1 {
        return Ok(None);
    }
    let udag = crate::linalg::dagger(u);
    let mut worst = 0u32;
    for gen in generators(n) {
        let p = generator_matrix(gen, d, n)?;
        let conj = u.dot(&p).dot(&udag);
        match min_level(&conj, d, n, budget - 1, cache)? {
            Some(m) => worst = worst.max(m),
            None => return Ok(None),
        }
    }
    let lvl = worst + 1;
    cache.insert(u.clone(), lvl);
    Ok(Some(lvl))
}

/// Smallest hierarchy level of `u` under the recursive definition with
/// C₁ the projective Pauli group, or an explicit bound marker.
pub fn hierarchy_level(u: &CMat, d: usize, max_level: u32, tol: f64) -> Result<LevelResult> {
    if u.nrows() > HIERARCHY_DIM_CAP {
        return Err(Error::ResourceLimit(format!(
            "dimension {} exceeds hierarchy cap {HIERARCHY_DIM_CAP}",
            u.nrows()
        )));
    }
    let max_level = max_level.min(MAX_HIERARCHY_LEVEL);
    check_unitary(u, 1e-9)?;
    let n = infer_wires(u.nrows(), d)?;
    let mut cache = LevelCache { entries: Vec::new(), tol };
    match min_level(u, d, n, max_level, &mut cache)? {
        Some(lvl) => Ok(LevelResult::Level(lvl)),
        None => Ok(LevelResult::ExceedsBound(max_level)),
    }
}
