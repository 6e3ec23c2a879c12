//! Mixed-radix registers, modular arithmetic, and roots of unity.
//!
//! Everything that touches wire indexing goes through [`RadixRegister`].
//! Flat indices place wire 0 as the most significant digit.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Deterministic primality check by trial division. Register dimensions are
/// desk-scale, so this is never a bottleneck.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Multiplicative inverse of `a` modulo a prime `d`.
pub fn mod_inverse(a: i64, d: usize) -> Result<u64> {
    if !is_prime(d) {
        return Err(Error::NotPrime(d));
    }
    let m = d as i64;
    let a = a.rem_euclid(m);
    if a == 0 {
        return Err(Error::invalid(format!("0 has no inverse mod {d}")));
    }
    // Extended Euclid on (a, m); m prime so gcd is 1.
    let (mut r0, mut r1) = (a, m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    Ok(s0.rem_euclid(m) as u64)
}

/// An ordered list of per-wire dimensions, each a prime ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadixRegister {
    dims: Vec<usize>,
}

impl RadixRegister {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::invalid("register needs at least one wire"));
        }
        for &d in &dims {
            if !is_prime(d) {
                return Err(Error::NotPrime(d));
            }
        }
        Ok(RadixRegister { dims })
    }

    /// Register of `n` wires, all of dimension `d`.
    pub fn uniform(d: usize, n: usize) -> Result<Self> {
        Self::new(vec![d; n])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn num_wires(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self, wire: usize) -> usize {
        self.dims[wire]
    }

    /// Product of all wire dimensions. u128 so that large sparse-only
    /// registers still report a meaningful total.
    pub fn total_dim(&self) -> u128 {
        self.dims.iter().map(|&d| d as u128).product()
    }

    /// Total dimension as usize, or an error when it exceeds `cap`.
    /// Dense-matrix paths call this with their size cap.
    pub fn dense_dim(&self, cap: usize) -> Result<usize> {
        let t = self.total_dim();
        if t > cap as u128 {
            return Err(Error::ResourceLimit(format!(
                "total dimension {t} exceeds dense cap {cap}"
            )));
        }
        Ok(t as usize)
    }

    /// If every wire has the same dimension, return it.
    pub fn uniform_dim(&self) -> Option<usize> {
        let d = self.dims[0];
        self.dims.iter().all(|&x| x == d).then_some(d)
    }

    /// Flat index of a digit tuple; wire 0 is the most significant digit.
    pub fn encode(&self, digits: &[usize]) -> Result<u128> {
        if digits.len() != self.dims.len() {
            return Err(Error::invalid(format!(
                "expected {} digits, got {}",
                self.dims.len(),
                digits.len()
            )));
        }
        let mut idx: u128 = 0;
        for (i, (&x, &d)) in digits.iter().zip(&self.dims).enumerate() {
            if x >= d {
                return Err(Error::invalid(format!(
                    "digit {x} out of range for wire {i} of dimension {d}"
                )));
            }
            idx = idx * d as u128 + x as u128;
        }
        Ok(idx)
    }

    /// Inverse of [`encode`](Self::encode).
    pub fn decode(&self, mut idx: u128) -> Result<Vec<usize>> {
        if idx >= self.total_dim() {
            return Err(Error::invalid(format!("index {idx} out of range")));
        }
        let mut digits = vec![0usize; self.dims.len()];
        for (i, &d) in self.dims.iter().enumerate().rev() {
            digits[i] = (idx % d as u128) as usize;
            idx /= d as u128;
        }
        Ok(digits)
    }

    /// Append a wire (used for ancilla allocation during macro expansion).
    pub fn push_wire(&mut self, dim: usize) -> Result<usize> {
        if !is_prime(dim) {
            return Err(Error::NotPrime(dim));
        }
        self.dims.push(dim);
        Ok(self.dims.len() - 1)
    }
}

/// Roots of unity for one dimension: ω = exp(2πi/d) and ζ = exp(2πi/d²),
/// with all integer powers cached.
#[derive(Debug, Clone)]
pub struct RootTable {
    d: usize,
    omega_pows: Vec<Complex64>,
    zeta_pows: Vec<Complex64>,
}

fn unit_root(num: i64, den: usize) -> Complex64 {
    let r = num.rem_euclid(den as i64) as f64;
    let angle = 2.0 * std::f64::consts::PI * r / den as f64;
    Complex64::new(angle.cos(), angle.sin())
}

impl RootTable {
    pub fn new(d: usize) -> Result<Self> {
        if !is_prime(d) {
            return Err(Error::NotPrime(d));
        }
        let omega_pows = (0..d as i64).map(|k| unit_root(k, d)).collect();
        let zeta_pows = (0..(d * d) as i64).map(|k| unit_root(k, d * d)).collect();
        Ok(RootTable { d, omega_pows, zeta_pows })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn omega(&self) -> Complex64 {
        self.omega_pows[1 % self.d]
    }

    pub fn zeta(&self) -> Complex64 {
        self.zeta_pows[1 % (self.d * self.d)]
    }

    /// ω^k for any integer k.
    pub fn omega_pow(&self, k: i64) -> Complex64 {
        self.omega_pows[k.rem_euclid(self.d as i64) as usize]
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> Complex64 {
        self.zeta_pows[k.rem_euclid((self.d * self.d) as i64) as usize]
    }
}
