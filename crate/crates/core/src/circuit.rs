//! Circuit intermediate representation over mixed-radix registers: resource
//! counting, depth, macro expansion, and the JSON document format.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gates::{GateKind, GateParams, GateSpec, Granularity, PhaseVector};
use crate::linalg::{dagger, CMat};
use crate::radix::RadixRegister;

/// Named macro gates. Each is registered by the synthesis module with an
/// expansion into primitives (plus fresh ancilla wires where needed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MacroKind {
    Zcx,
    Kcx,
    Cgp,
    Ch,
    Och,
    Kch,
    Cztau,
    PointPhase,
    Gadget,
    WPrime,
    Spread,
    QSpread,
    WTree,
    QWTree,
    MixedTree,
}

impl MacroKind {
    pub fn name(&self) -> &'static str {
        match self {
            MacroKind::Zcx => "ZCX",
            MacroKind::Kcx => "KCX",
            MacroKind::Cgp => "CGP",
            MacroKind::Ch => "CH",
            MacroKind::Och => "OCH",
            MacroKind::Kch => "KCH",
            MacroKind::Cztau => "CZTAU",
            MacroKind::PointPhase => "POINTPHASE",
            MacroKind::Gadget => "GADGET",
            MacroKind::WPrime => "WPRIME",
            MacroKind::Spread => "SPREAD",
            MacroKind::QSpread => "QSPREAD",
            MacroKind::WTree => "WTREE",
            MacroKind::QWTree => "QWTREE",
            MacroKind::MixedTree => "MIXEDTREE",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "ZCX" => MacroKind::Zcx,
            "KCX" => MacroKind::Kcx,
            "CGP" => MacroKind::Cgp,
            "CH" => MacroKind::Ch,
            "OCH" => MacroKind::Och,
            "KCH" => MacroKind::Kch,
            "CZTAU" => MacroKind::Cztau,
            "POINTPHASE" => MacroKind::PointPhase,
            "GADGET" => MacroKind::Gadget,
            "WPRIME" => MacroKind::WPrime,
            "SPREAD" => MacroKind::Spread,
            "QSPREAD" => MacroKind::QSpread,
            "WTREE" => MacroKind::WTree,
            "QWTREE" => MacroKind::QWTree,
            "MIXEDTREE" => MacroKind::MixedTree,
            _ => return None,
        })
    }
}

/// Parameters a macro instance may carry. Unused fields stay `None` and are
/// omitted from documents.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MacroParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
    /// Control known to lie in the {|0⟩,|1⟩} subspace; controlled-X
    /// collapses to Clifford form.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subspace: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cval: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tval: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<PhaseVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<usize>>,
}

/// Either a primitive gate or a macro instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum OpKind {
    Prim(GateSpec),
    Macro(MacroKind, MacroParams),
}

/// One gate placement: the operation, the wires it acts on, and a dagger
/// flag. Dagger is a flag rather than a distinct gate so that G and G†
/// count identically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateInstance {
    pub op: OpKind,
    pub wires: Vec<usize>,
    pub dag: bool,
}

impl GateInstance {
    pub fn prim(spec: GateSpec, wires: Vec<usize>) -> Self {
        GateInstance { op: OpKind::Prim(spec), wires, dag: false }
    }

    pub fn prim_dag(spec: GateSpec, wires: Vec<usize>) -> Self {
        GateInstance { op: OpKind::Prim(spec), wires, dag: true }
    }

    pub fn mac(kind: MacroKind, params: MacroParams, wires: Vec<usize>) -> Self {
        GateInstance { op: OpKind::Macro(kind, params), wires, dag: false }
    }

    pub fn name(&self) -> &'static str {
        match &self.op {
            OpKind::Prim(spec) => spec.kind.name(),
            OpKind::Macro(kind, _) => kind.name(),
        }
    }

    pub fn daggered(mut self) -> Self {
        self.dag = !self.dag;
        self
    }

    /// The matrix of a primitive instance, dagger applied.
    pub fn matrix(&self) -> Result<CMat> {
        match &self.op {
            OpKind::Prim(spec) => {
                let m = spec.matrix()?;
                Ok(if self.dag { dagger(&m) } else { m })
            }
            OpKind::Macro(kind, _) => Err(Error::UnexpandedMacro(kind.name().into())),
        }
    }
}

/// Per-dimension non-Clifford tallies plus structural counts.
///
/// `sqrtz` counts SQRTZ instances (daggers included) on wires of each
/// dimension; `t` counts qubit T instances. For odd d the sqrtz tally is the
/// non-Clifford count; at d = 2 the SQRTZ instance is the Clifford S, so the
/// non-Clifford count there is the T tally.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResourceReport {
    pub sqrtz: BTreeMap<usize, usize>,
    pub t: usize,
    pub two_qudit: usize,
    pub total_gates: usize,
    pub depth: usize,
    pub ancillas: usize,
}

impl ResourceReport {
    /// SQRTZ instances on wires of dimension `d`.
    pub fn sqrtz_count(&self, d: usize) -> usize {
        self.sqrtz.get(&d).copied().unwrap_or(0)
    }

    /// Non-Clifford count for dimension `d`: SQRTZ for odd d, T for d = 2.
    pub fn non_clifford(&self, d: usize) -> usize {
        if d == 2 {
            self.t
        } else {
            self.sqrtz_count(d)
        }
    }

    /// Fieldwise sum of the count fields. Depth is not additive and is left
    /// at the max of the two (a composition bound, recomputed by callers
    /// that need the exact value).
    pub fn add(&self, other: &ResourceReport) -> ResourceReport {
        let mut sqrtz = self.sqrtz.clone();
        for (&d, &c) in &other.sqrtz {
            *sqrtz.entry(d).or_insert(0) += c;
        }
        ResourceReport {
            sqrtz,
            t: self.t + other.t,
            two_qudit: self.two_qudit + other.two_qudit,
            total_gates: self.total_gates + other.total_gates,
            depth: self.depth.max(other.depth),
            ancillas: self.ancillas + other.ancillas,
        }
    }
}

/// An ordered gate list over a mixed-radix register, with ancilla wires
/// marked clean-in/clean-out and optional {|0⟩,|1⟩} subspace annotations.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    pub register: RadixRegister,
    pub gates: Vec<GateInstance>,
    pub ancilla_wires: BTreeSet<usize>,
    pub control_subspace: BTreeSet<usize>,
}

impl Circuit {
    pub fn new(register: RadixRegister) -> Self {
        Circuit {
            register,
            gates: Vec::new(),
            ancilla_wires: BTreeSet::new(),
            control_subspace: BTreeSet::new(),
        }
    }

    pub fn push(&mut self, inst: GateInstance) -> Result<()> {
        self.validate_instance(&inst)?;
        self.gates.push(inst);
        Ok(())
    }

    fn validate_instance(&self, inst: &GateInstance) -> Result<()> {
        let n = self.register.num_wires();
        let mut seen = BTreeSet::new();
        for &w in &inst.wires {
            if w >= n {
                return Err(Error::invalid(format!(
                    "wire {w} out of range for {}-wire register",
                    n
                )));
            }
            if !seen.insert(w) {
                return Err(Error::invalid(format!("duplicate wire {w} in {}", inst.name())));
            }
        }
        if let OpKind::Prim(spec) = &inst.op {
            if spec.num_wires() != inst.wires.len() {
                return Err(Error::invalid(format!(
                    "{} expects {} wires, got {}",
                    spec.kind.name(),
                    spec.num_wires(),
                    inst.wires.len()
                )));
            }
            for (i, &w) in inst.wires.iter().enumerate() {
                if spec.dims[i] != self.register.dim(w) {
                    return Err(Error::invalid(format!(
                        "{} dimension {} does not match wire {w} of dimension {}",
                        spec.kind.name(),
                        spec.dims[i],
                        self.register.dim(w)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn mark_ancilla(&mut self, wire: usize) {
        self.ancilla_wires.insert(wire);
    }

    pub fn mark_control_subspace(&mut self, wire: usize) {
        self.control_subspace.insert(wire);
    }

    pub fn is_expanded(&self) -> bool {
        self.gates.iter().all(|g| matches!(g.op, OpKind::Prim(_)))
    }

    /// Concatenation. Registers must agree exactly.
    pub fn compose(&self, other: &Circuit) -> Result<Circuit> {
        if self.register != other.register {
            return Err(Error::RegisterMismatch(format!(
                "{:?} vs {:?}",
                self.register.dims(),
                other.register.dims()
            )));
        }
        let mut out = self.clone();
        out.gates.extend(other.gates.iter().cloned());
        out.ancilla_wires.extend(&other.ancilla_wires);
        out.control_subspace.extend(&other.control_subspace);
        Ok(out)
    }

    /// Reverse gate order and dagger every gate.
    pub fn inverse(&self) -> Circuit {
        let mut out = self.clone();
        out.gates = self.gates.iter().rev().cloned().map(GateInstance::daggered).collect();
        out
    }

    /// Tally resources of a fully expanded circuit.
    pub fn count_resources(&self) -> Result<ResourceReport> {
        let mut report = ResourceReport::default();
        for g in &self.gates {
            let spec = match &g.op {
                OpKind::Prim(spec) => spec,
                OpKind::Macro(kind, _) => return Err(Error::UnexpandedMacro(kind.name().into())),
            };
            report.total_gates += 1;
            if g.wires.len() == 2 {
                report.two_qudit += 1;
            }
            match spec.kind {
                GateKind::SqrtZ => {
                    *report.sqrtz.entry(spec.dims[0]).or_insert(0) += 1;
                }
                GateKind::T2 => report.t += 1,
                _ => {}
            }
        }
        report.depth = self.depth();
        report.ancillas = self.ancilla_wires.len();
        Ok(report)
    }

    /// Greedy as-soon-as-possible layering: two gates share a layer iff they
    /// touch disjoint wires.
    pub fn depth(&self) -> usize {
        let mut front = vec![0usize; self.register.num_wires()];
        let mut depth = 0;
        for g in &self.gates {
            let layer = g.wires.iter().map(|&w| front[w]).max().unwrap_or(0) + 1;
            for &w in &g.wires {
                front[w] = layer;
            }
            depth = depth.max(layer);
        }
        depth
    }

    /// Replace macro instances using `resolver` until only primitives remain.
    pub fn expand(&self, resolver: &dyn MacroResolver) -> Result<Circuit> {
        let mut current = self.clone();
        for _pass in 0..32 {
            if current.is_expanded() {
                return Ok(current);
            }
            let mut next = Circuit::new(current.register.clone());
            next.ancilla_wires = current.ancilla_wires.clone();
            next.control_subspace = current.control_subspace.clone();
            for inst in &current.gates {
                match &inst.op {
                    OpKind::Prim(_) => next.push(inst.clone())?,
                    OpKind::Macro(..) => {
                        let fragment = resolver.expand_instance(inst, &next.register)?;
                        // ancillas are appended to the register; fragment
                        // gates address them as register.len()..len()+k
                        let base = next.register.num_wires();
                        for (i, &dim) in fragment.ancilla_dims.iter().enumerate() {
                            let w = next.register.push_wire(dim)?;
                            debug_assert_eq!(w, base + i);
                            next.ancilla_wires.insert(w);
                        }
                        let mut frag_gates = fragment.gates;
                        if inst.dag {
                            frag_gates = frag_gates.into_iter().rev().map(GateInstance::daggered).collect();
                        }
                        for g in frag_gates {
                            next.push(g)?;
                        }
                    }
                }
            }
            current = next;
        }
        Err(Error::invalid("macro expansion did not terminate after 32 passes"))
    }
}

/// One level of macro expansion: replacement gates plus the dimensions of
/// fresh ancilla wires those gates address (indexed after the current
/// register, in order).
pub struct Fragment {
    pub gates: Vec<GateInstance>,
    pub ancilla_dims: Vec<usize>,
}

pub trait MacroResolver {
    fn expand_instance(&self, inst: &GateInstance, register: &RadixRegister) -> Result<Fragment>;
}

// --- document format -------------------------------------------------------
//
// {"version":1,"dims":[...],"ancillas":[...],"gates":[{"g":...,"w":[...],
//  "p":{...},"dag":bool}, ...]}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CircuitDoc {
    version: u32,
    dims: Vec<usize>,
    ancillas: Vec<usize>,
    gates: Vec<GateDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GateDoc {
    g: String,
    w: Vec<usize>,
    #[serde(default, skip_serializing_if = "ParamDoc::is_empty")]
    p: ParamDoc,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    dag: bool,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    power: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    subspace: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cval: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tval: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    granularity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    factors: Option<Vec<usize>>,
}

impl ParamDoc {
    fn is_empty(&self) -> bool {
        self.k.is_none()
            && self.power.is_none()
            && self.exact.is_none()
            && self.subspace.is_none()
            && self.cval.is_none()
            && self.tval.is_none()
            && self.b.is_none()
            && self.m.is_none()
            && self.a.is_none()
            && self.n.is_none()
            && self.alpha.is_none()
            && self.granularity.is_none()
            && self.factors.is_none()
    }
}

fn phase_vector_to_doc(p: &ParamDoc, v: &PhaseVector) -> ParamDoc {
    let mut out = ParamDoc {
        alpha: Some(v.exponents.clone()),
        granularity: match v.granularity {
            Granularity::Omega => None, // omega is the default granularity
            Granularity::Zeta => Some("zeta".into()),
        },
        ..Default::default()
    };
    out.k = p.k;
    out.power = p.power;
    out.exact = p.exact;
    out.subspace = p.subspace;
    out.cval = p.cval;
    out.tval = p.tval;
    out.b = p.b;
    out.m = p.m;
    out.a = p.a;
    out.n = p.n;
    out.factors = p.factors.clone();
    out
}

fn phase_vector_from_doc(path: &str, d: usize, p: &ParamDoc) -> Result<PhaseVector> {
    let exps = p
        .alpha
        .as_ref()
        .ok_or_else(|| Error::document(path, "missing phase vector `alpha`"))?;
    let granularity = match p.granularity.as_deref() {
        None | Some("omega") => Granularity::Omega,
        Some("zeta") => Granularity::Zeta,
        Some(other) => {
            return Err(Error::document(path, format!("unknown granularity `{other}`")));
        }
    };
    PhaseVector::new(d, exps.iter().map(|&e| e as i64).collect(), granularity)
        .map_err(|e| Error::document(path, e.to_string()))
}

fn instance_to_doc(inst: &GateInstance) -> GateDoc {
    let mut p = ParamDoc::default();
    match &inst.op {
        OpKind::Prim(spec) => {
            p.k = spec.params.k;
            p.power = spec.params.power;
            p.m = spec.params.m;
            p.a = spec.params.a;
            if let Some(alpha) = &spec.params.alpha {
                p = phase_vector_to_doc(&p, alpha);
            }
        }
        OpKind::Macro(_, mp) => {
            p.k = mp.k;
            p.power = mp.power;
            p.exact = mp.exact;
            p.subspace = mp.subspace;
            p.cval = mp.cval;
            p.tval = mp.tval;
            p.b = mp.b;
            p.n = mp.n;
            p.factors = mp.factors.clone();
            if let Some(alpha) = &mp.alpha {
                p = phase_vector_to_doc(&p, alpha);
            }
        }
    }
    GateDoc { g: inst.name().to_string(), w: inst.wires.clone(), p, dag: inst.dag }
}

fn instance_from_doc(doc: &GateDoc, register: &RadixRegister, idx: usize) -> Result<GateInstance> {
    let path = format!("gates[{idx}]");
    for &w in &doc.w {
        if w >= register.num_wires() {
            return Err(Error::document(&path, format!("wire {w} out of range")));
        }
    }
    let dims: Vec<usize> = doc.w.iter().map(|&w| register.dim(w)).collect();
    let op = if let Some(kind) = GateKind::from_name(&doc.g) {
        if dims.len() != kind.num_wires() {
            return Err(Error::document(
                &path,
                format!("{} expects {} wires, got {}", doc.g, kind.num_wires(), dims.len()),
            ));
        }
        let mut params = GateParams {
            power: doc.p.power,
            k: doc.p.k,
            m: doc.p.m,
            a: doc.p.a,
            alpha: None,
        };
        if kind == GateKind::ZAlpha {
            params.alpha = Some(phase_vector_from_doc(&path, dims[0], &doc.p)?);
        }
        OpKind::Prim(GateSpec { kind, dims, params })
    } else if let Some(kind) = MacroKind::from_name(&doc.g) {
        let alpha = if doc.p.alpha.is_some() {
            Some(phase_vector_from_doc(&path, dims[0], &doc.p)?)
        } else {
            None
        };
        OpKind::Macro(
            kind,
            MacroParams {
                k: doc.p.k,
                power: doc.p.power,
                exact: doc.p.exact,
                subspace: doc.p.subspace,
                cval: doc.p.cval,
                tval: doc.p.tval,
                b: doc.p.b,
                alpha,
                n: doc.p.n,
                factors: doc.p.factors.clone(),
            },
        )
    } else {
        return Err(Error::document(&path, format!("unknown gate name `{}`", doc.g)));
    };
    Ok(GateInstance { op, wires: doc.w.clone(), dag: doc.dag })
}

impl Circuit {
    /// Serialize to the document format. Field order is stable so identical
    /// circuits produce identical bytes.
    pub fn serialize(&self) -> String {
        let doc = CircuitDoc {
            version: 1,
            dims: self.register.dims().to_vec(),
            ancillas: self.ancilla_wires.iter().copied().collect(),
            gates: self.gates.iter().map(instance_to_doc).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("document serialization cannot fail")
    }

    pub fn parse(text: &str) -> Result<Circuit> {
        let doc: CircuitDoc =
            serde_json::from_str(text).map_err(|e| Error::document("document", e.to_string()))?;
        if doc.version != 1 {
            return Err(Error::document("version", format!("unsupported version {}", doc.version)));
        }
        let register = RadixRegister::new(doc.dims).map_err(|e| Error::document("dims", e.to_string()))?;
        let mut circuit = Circuit::new(register);
        for &w in &doc.ancillas {
            if w >= circuit.register.num_wires() {
                return Err(Error::document("ancillas", format!("wire {w} out of range")));
            }
            circuit.mark_ancilla(w);
        }
        for (i, g) in doc.gates.iter().enumerate() {
            let inst = instance_from_doc(g, &circuit.register, i)?;
            circuit.push(inst).map_err(|e| Error::document(format!("gates[{i}]"), e.to_string()))?;
        }
        Ok(circuit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_qutrit() -> Circuit {
        Circuit::new(RadixRegister::uniform(3, 2).unwrap())
    }

    #[test]
    fn push_validates_wires() {
        let mut c = two_qutrit();
        assert!(c.push(GateInstance::prim(GateSpec::h(3), vec![0])).is_ok());
        assert!(c.push(GateInstance::prim(GateSpec::h(3), vec![5])).is_err());
        assert!(c.push(GateInstance::prim(GateSpec::cx(3, 3), vec![1, 1])).is_err());
        assert!(c.push(GateInstance::prim(GateSpec::h(2), vec![0])).is_err());
    }

    #[test]
    fn compose_requires_same_register() {
        let a = two_qutrit();
        let b = Circuit::new(RadixRegister::uniform(3, 3).unwrap());
        assert!(a.compose(&b).is_err());
        let empty = two_qutrit();
        let composed = a.compose(&empty).unwrap();
        assert_eq!(composed.gates.len(), 0);
    }

    #[test]
    fn depth_examples() {
        let mut c = two_qutrit();
        c.push(GateInstance::prim(GateSpec::h(3), vec![0])).unwrap();
        assert_eq!(c.depth(), 1);
        c.push(GateInstance::prim(GateSpec::h(3), vec![1])).unwrap();
        assert_eq!(c.depth(), 1, "disjoint gates share a layer");
        c.push(GateInstance::prim(GateSpec::cx(3, 3), vec![0, 1])).unwrap();
        assert_eq!(c.depth(), 2);
        assert!(c.depth() <= c.gates.len());
    }

    #[test]
    fn counts() {
        let mut c = two_qutrit();
        assert_eq!(c.count_resources().unwrap(), ResourceReport::default());
        c.push(GateInstance::prim(GateSpec::sqrt_z(3), vec![0])).unwrap();
        c.push(GateInstance::prim_dag(GateSpec::sqrt_z(3), vec![1])).unwrap();
        c.push(GateInstance::prim(GateSpec::cx(3, 3), vec![0, 1])).unwrap();
        let r = c.count_resources().unwrap();
        assert_eq!(r.sqrtz_count(3), 2, "daggers count equally");
        assert_eq!(r.two_qudit, 1);
        assert_eq!(r.non_clifford(3), 2);
    }

    #[test]
    fn count_rejects_macros() {
        let mut c = two_qutrit();
        c.push(GateInstance::mac(MacroKind::Zcx, MacroParams::default(), vec![0, 1])).unwrap();
        assert!(matches!(c.count_resources(), Err(Error::UnexpandedMacro(_))));
    }

    #[test]
    fn report_addition() {
        let mut a = ResourceReport::default();
        a.sqrtz.insert(3, 2);
        a.t = 1;
        let mut b = ResourceReport::default();
        b.sqrtz.insert(3, 1);
        b.sqrtz.insert(5, 4);
        let sum = a.add(&b);
        assert_eq!(sum.sqrtz_count(3), 3);
        assert_eq!(sum.sqrtz_count(5), 4);
        assert_eq!(sum.t, 1);
    }

    #[test]
    fn document_roundtrip() {
        let mut c = Circuit::new(RadixRegister::new(vec![2, 3]).unwrap());
        c.push(GateInstance::prim(GateSpec::h(2), vec![0])).unwrap();
        c.push(GateInstance::prim(GateSpec::cx(2, 3), vec![0, 1])).unwrap();
        c.push(GateInstance::prim_dag(GateSpec::sqrt_z(3), vec![1])).unwrap();
        c.push(GateInstance::mac(
            MacroKind::Zcx,
            MacroParams { k: Some(0), power: Some(1), exact: Some(true), ..Default::default() },
            vec![0, 1],
        ))
        .unwrap();
        let text = c.serialize();
        let back = Circuit::parse(&text).unwrap();
        assert_eq!(c, back);
        assert_eq!(text, back.serialize(), "serialization is stable");
    }

    #[test]
    fn parse_rejects_unknown_gate() {
        let text = r#"{"version":1,"dims":[3],"ancillas":[],"gates":[{"g":"BOGUS","w":[0]}]}"#;
        let err = Circuit::parse(text).unwrap_err();
        assert!(err.to_string().contains("BOGUS"), "{err}");
    }

    #[test]
    fn parse_rejects_unknown_fields() {
        let text = r#"{"version":1,"dims":[3],"ancillas":[],"gates":[],"extra":1}"#;
        assert!(Circuit::parse(text).is_err());
    }

    #[test]
    fn parse_rejects_bad_wires() {
        let text = r#"{"version":1,"dims":[3],"ancillas":[],"gates":[{"g":"H","w":[4]}]}"#;
        let err = Circuit::parse(text).unwrap_err();
        assert!(err.to_string().contains("gates[0]"));
    }
}
