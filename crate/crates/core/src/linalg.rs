//! Small dense-matrix helpers on top of ndarray.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMat = Array2<Complex64>;

pub fn identity(n: usize) -> CMat {
    Array2::from_diag_elem(n, Complex64::new(1.0, 0.0))
}

pub fn dagger(m: &CMat) -> CMat {
    m.t().mapv(|z| z.conj())
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    let mut out = Array2::zeros((ar * br, ac * bc));
    for ((i, j), &av) in a.indexed_iter() {
        for ((k, l), &bv) in b.indexed_iter() {
            out[(i * br + k, j * bc + l)] = av * bv;
        }
    }
    out
}

/// Largest entrywise modulus of a - b.
pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// max |U†U - I|.
pub fn unitarity_deviation(u: &CMat) -> f64 {
    let n = u.nrows();
    max_abs_diff(&dagger(u).dot(u), &identity(n))
}

pub fn check_unitary(u: &CMat, tol: f64) -> Result<()> {
    if u.nrows() != u.ncols() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} matrix is not square",
            u.nrows(),
            u.ncols()
        )));
    }
    let dev = unitarity_deviation(u);
    if dev > tol {
        return Err(Error::NonUnitary(dev));
    }
    Ok(())
}

/// Phase that aligns `b` onto `a`, taken at the largest-modulus entry of `a`
/// so repeated comparisons are reproducible. Returns `None` when that entry
/// of `b` is numerically zero (the matrices cannot be phase-aligned there).
pub fn alignment_phase(a: &CMat, b: &CMat) -> Option<Complex64> {
    let mut best = 0.0;
    let mut at = (0, 0);
    for ((i, j), v) in a.indexed_iter() {
        if v.norm() > best {
            best = v.norm();
            at = (i, j);
        }
    }
    let (x, y) = (a[at], b[at]);
    if y.norm() < 1e-14 || x.norm() < 1e-14 {
        return None;
    }
    let p = x / y;
    Some(p / p.norm())
}

/// Entrywise distance after optimal global-phase alignment.
pub fn global_phase_distance(a: &CMat, b: &CMat) -> f64 {
    match alignment_phase(a, b) {
        Some(p) => max_abs_diff(a, &b.mapv(|z| z * p)),
        None => f64::INFINITY,
    }
}
