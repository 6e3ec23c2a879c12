//! The macro resolver: every named macro expands here, one level at a time,
//! into primitives and further macros.

use crate::circuit::{Fragment, GateInstance, MacroKind, MacroParams, MacroResolver, OpKind};
use crate::error::{Error, Result};
use crate::gates::Granularity;
use crate::radix::RadixRegister;

use super::build::{
    cgp_gates, ch_gates, cztau_gates, kch_gates, kcx_gates, kcx_subspace_gates, point_phase_gates,
    qspread_gates, spread_gates, w_prime_gates, FragmentBuilder,
};

/// Tree node layout: for each layer, the list of nodes, each node being the
/// local indices (into the instance's wire list) it spans. Layer i of a
/// factor list [N1..Nf] holds N1·...·N_{i−1} nodes of N_i wires each.
pub(crate) fn tree_nodes(factors: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut layers = Vec::with_capacity(factors.len());
    let mut stride: usize = factors.iter().product();
    let mut nodes_in_layer = 1usize;
    for &f in factors {
        stride /= f;
        let mut layer = Vec::with_capacity(nodes_in_layer);
        for g in 0..nodes_in_layer {
            let base = g * f * stride;
            layer.push((0..f).map(|i| base + i * stride).collect());
        }
        layers.push(layer);
        nodes_in_layer *= f;
    }
    layers
}

/// Wire dimensions of a tree register: each wire takes the factor of the
/// first layer whose grid it sits on.
pub(crate) fn tree_dims(factors: &[usize]) -> Vec<usize> {
    let total: usize = factors.iter().product();
    let mut dims = vec![0usize; total];
    let mut stride = total;
    for &f in factors {
        stride /= f;
        for w in (0..total).step_by(stride) {
            if dims[w] == 0 {
                dims[w] = f;
            }
        }
    }
    dims
}

/// Stateless resolver for all registered macros.
#[derive(Debug, Default, Clone, Copy)]
pub struct Registry;

impl Registry {
    pub fn new() -> Self {
        Registry
    }
}

fn want(opt: Option<u64>, what: &str, mac: &str) -> Result<u64> {
    opt.ok_or_else(|| Error::invalid(format!("{mac} needs parameter `{what}`")))
}

fn wire_dims(register: &RadixRegister, wires: &[usize]) -> Vec<usize> {
    wires.iter().map(|&w| register.dim(w)).collect()
}

fn expect_wires(mac: &str, wires: &[usize], n: usize) -> Result<()> {
    if wires.len() != n {
        return Err(Error::invalid(format!("{mac} expects {n} wires, got {}", wires.len())));
    }
    Ok(())
}

impl MacroResolver for Registry {
    fn expand_instance(&self, inst: &GateInstance, register: &RadixRegister) -> Result<Fragment> {
        let (kind, params) = match &inst.op {
            OpKind::Macro(kind, params) => (*kind, params.clone()),
            OpKind::Prim(_) => return Err(Error::invalid("primitive gates do not expand")),
        };
        let wires = &inst.wires;
        let dims = wire_dims(register, wires);
        let mut b = FragmentBuilder::new(register.num_wires());
        match kind {
            MacroKind::Zcx | MacroKind::Kcx => {
                expect_wires(kind.name(), wires, 2)?;
                let k = if kind == MacroKind::Zcx { params.k.unwrap_or(0) } else { want(params.k, "k", "KCX")? };
                let p = params.power.unwrap_or(1);
                if params.subspace.unwrap_or(false) {
                    kcx_subspace_gates(&mut b, dims[0], dims[1], k, p, wires[0], wires[1])?;
                } else {
                    let exact = params.exact.unwrap_or(false);
                    kcx_gates(&mut b, dims[0], dims[1], k, p, exact, wires[0], wires[1])?;
                }
            }
            MacroKind::Cgp => {
                expect_wires("CGP", wires, 1)?;
                cgp_gates(&mut b, dims[0], wires[0]);
            }
            MacroKind::Ch => {
                expect_wires("CH", wires, 2)?;
                ch_gates(&mut b, dims[0], dims[1], wires[0], wires[1])?;
            }
            MacroKind::Och => {
                expect_wires("OCH", wires, 2)?;
                kch_gates(&mut b, dims[0], dims[1], 1, wires[0], wires[1])?;
            }
            MacroKind::Kch => {
                expect_wires("KCH", wires, 2)?;
                let k = want(params.k, "k", "KCH")?;
                kch_gates(&mut b, dims[0], dims[1], k, wires[0], wires[1])?;
            }
            MacroKind::Cztau => {
                expect_wires("CZTAU", wires, 2)?;
                cztau_gates(&mut b, dims[0], dims[1], wires[0], wires[1], None)?;
            }
            MacroKind::PointPhase => {
                expect_wires("POINTPHASE", wires, 2)?;
                let cval = want(params.cval, "cval", "POINTPHASE")?;
                let tval = want(params.tval, "tval", "POINTPHASE")?;
                let power = params.power.unwrap_or(1);
                let subspace = params.subspace.unwrap_or(false);
                point_phase_gates(
                    &mut b, dims[0], dims[1], cval, tval, power, subspace, wires[0], wires[1], None,
                )?;
            }
            MacroKind::Gadget => {
                expect_wires("GADGET", wires, 2)?;
                let alpha = params
                    .alpha
                    .clone()
                    .ok_or_else(|| Error::invalid("GADGET needs a phase vector `alpha`"))?;
                if alpha.granularity != Granularity::Omega {
                    return Err(Error::invalid("GADGET phase vector must have ω granularity"));
                }
                if alpha.d != dims[1] {
                    return Err(Error::invalid("GADGET phase vector dimension mismatch"));
                }
                let bpow = params.b.unwrap_or(1) as i64;
                if bpow.rem_euclid(dims[1] as i64) == 0 {
                    return Err(Error::invalid("GADGET direction b must be nonzero mod d"));
                }
                b.push(GateInstance::prim(
                    crate::gates::GateSpec::cx_pow(dims[0], dims[1], bpow),
                    vec![wires[0], wires[1]],
                ));
                b.zalpha_chain(&alpha, wires[1])?;
                b.push(GateInstance::prim_dag(
                    crate::gates::GateSpec::cx_pow(dims[0], dims[1], bpow),
                    vec![wires[0], wires[1]],
                ));
            }
            MacroKind::WPrime => {
                let d = dims[0];
                if dims.iter().any(|&x| x != d) {
                    return Err(Error::invalid("WPRIME needs a uniform register"));
                }
                w_prime_gates(&mut b, d, wires)?;
            }
            MacroKind::Spread => {
                spread_gates(&mut b, &dims, wires)?;
            }
            MacroKind::QSpread => {
                let d = dims[0];
                if dims.iter().any(|&x| x != d) {
                    return Err(Error::invalid("QSPREAD needs a uniform register"));
                }
                qspread_gates(&mut b, d, wires)?;
            }
            MacroKind::WTree | MacroKind::QWTree => {
                let d = dims[0];
                if dims.iter().any(|&x| x != d) {
                    return Err(Error::invalid(format!("{} needs a uniform register", kind.name())));
                }
                let n = want(params.n.map(u64::from), "n", kind.name())? as u32;
                let expected: usize = d.pow(n);
                expect_wires(kind.name(), wires, expected)?;
                let layers = tree_nodes(&vec![d; n as usize]);
                for (li, layer) in layers.iter().enumerate() {
                    for node in layer {
                        let node_wires: Vec<usize> = node.iter().map(|&i| wires[i]).collect();
                        if kind == MacroKind::QWTree {
                            b.mac(MacroKind::QSpread, MacroParams::default(), node_wires);
                        } else if li == 0 {
                            b.mac(MacroKind::WPrime, MacroParams::default(), node_wires);
                        } else {
                            b.mac(MacroKind::Spread, MacroParams::default(), node_wires);
                        }
                    }
                }
            }
            MacroKind::MixedTree => {
                let factors = params
                    .factors
                    .clone()
                    .ok_or_else(|| Error::invalid("MIXEDTREE needs `factors`"))?;
                if factors.is_empty() {
                    return Err(Error::invalid("MIXEDTREE needs at least one factor"));
                }
                for &f in &factors {
                    if !crate::radix::is_prime(f) {
                        return Err(Error::NotPrime(f));
                    }
                }
                let total: usize = factors.iter().product();
                expect_wires("MIXEDTREE", wires, total)?;
                let expect_dims = tree_dims(&factors);
                for (i, (&have, want)) in dims.iter().zip(expect_dims).enumerate() {
                    if have != want {
                        return Err(Error::invalid(format!(
                            "MIXEDTREE wire {i} has dimension {have}, layout needs {want}"
                        )));
                    }
                }
                let layers = tree_nodes(&factors);
                for (li, layer) in layers.iter().enumerate() {
                    for node in layer {
                        let node_wires: Vec<usize> = node.iter().map(|&i| wires[i]).collect();
                        if li == 0 {
                            b.mac(MacroKind::WPrime, MacroParams::default(), node_wires);
                        } else {
                            b.mac(MacroKind::Spread, MacroParams::default(), node_wires);
                        }
                    }
                }
            }
        }
        Ok(b.finish())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_uniform() {
        let layers = tree_nodes(&[3, 3]);
        assert_eq!(layers.len(), 2);
        assert_eq!(layers[0], vec![vec![0, 3, 6]]);
        assert_eq!(layers[1], vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);
    }

    #[test]
    fn layout_mixed() {
        assert_eq!(tree_dims(&[2, 3]), vec![2, 3, 3, 2, 3, 3]);
        assert_eq!(tree_dims(&[3, 2]), vec![3, 2, 3, 2, 3, 2]);
        let layers = tree_nodes(&[2, 3]);
        assert_eq!(layers[0], vec![vec![0, 3]]);
        assert_eq!(layers[1], vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }
}
