//! Dense-matrix oracle for small systems.
//!
//! Builds explicit `q^n × q^n` matrices for Pauli operators and Clifford gates
//! so that the symplectic rules can be checked against matrix conjugation.
//! Comparisons are phase-insensitive throughout. Qudit 0 is the most
//! significant digit of a basis index.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::clifford::{CliffordCircuit, CliffordGate};
use crate::field::PrimeDimension;
use crate::pauli::{PauliOperator, PauliSet};
use crate::{Error, Result};

/// Largest `q^n` the oracle will build.
pub const DIMENSION_CAP: u64 = 256;

/// Entrywise tolerance for all comparisons.
pub const TOLERANCE: f64 = 1e-9;

/// `ω_q^k = e^{2πik/q}`.
pub fn root_of_unity(q: PrimeDimension, k: u64) -> Complex64 {
    let k = k % q.get() as u64;
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / q.get() as f64)
}

/// A square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix { dim, data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = DenseMatrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        DenseMatrix { dim, data: rows.iter().flat_map(|r| r.iter().copied()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> DenseMatrix {
        let n = self.dim;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        out
    }

    /// `U U† = I` within `tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.mul(&self.adjoint()).approx_eq(&DenseMatrix::identity(self.dim), tol)
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| i == j || self.data[i * n + j].norm() < tol))
    }

    pub fn approx_eq(&self, other: &DenseMatrix, tol: f64) -> bool {
        self.dim == other.dim && self.data.iter().zip(&other.data).all(|(a, b)| (a - b).norm() < tol)
    }

    /// `other = λ·self` for some `|λ| = 1`. `λ` is read off the first entry
    /// of `self` with nonzero magnitude.
    pub fn equal_up_to_phase(&self, other: &DenseMatrix, tol: f64) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let Some(k) = self.data.iter().position(|a| a.norm() > tol) else {
            return other.data.iter().all(|b| b.norm() < tol);
        };
        let phase = other.data[k] / self.data[k];
        if (phase.norm() - 1.0).abs() > tol {
            return false;
        }
        self.data.iter().zip(&other.data).all(|(a, b)| (a * phase - b).norm() < tol)
    }

    /// `A B = B A` within `tol`.
    pub fn commutes_with(&self, other: &DenseMatrix, tol: f64) -> bool {
        self.mul(other).approx_eq(&other.mul(self), tol)
    }
}

impl core::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

fn checked_dim(q: PrimeDimension, n: usize, cap: u64) -> Result<usize> {
    let dim = u32::try_from(n).ok().and_then(|n| q.checked_power(n)).unwrap_or(u64::MAX);
    if dim > cap {
        return Err(Error::MatrixTooLarge { dim, cap });
    }
    Ok(dim as usize)
}

/// Base-`q` digits of `index`, qudit 0 first.
fn digits(q: usize, n: usize, mut index: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for slot in d.iter_mut().rev() {
        *slot = index % q;
        index /= q;
    }
    d
}

/// `⊗_i X^{x_i} Z^{z_i}` with `X|k⟩ = |k+1⟩` and `Z|k⟩ = ω^k|k⟩`.
pub fn pauli_matrix(p: &PauliOperator) -> Result<DenseMatrix> {
    pauli_matrix_capped(p, DIMENSION_CAP)
}

pub fn pauli_matrix_capped(p: &PauliOperator, cap: u64) -> Result<DenseMatrix> {
    let q = p.q();
    let qs = q.get() as usize;
    let n = p.len();
    let dim = checked_dim(q, n, cap)?;
    let mut m = DenseMatrix::zeros(dim);
    for col in 0..dim {
        let k = digits(qs, n, col);
        let mut row = 0;
        let mut phase = 0u64;
        for (i, &ki) in k.iter().enumerate() {
            row = row * qs + (ki + p.x()[i] as usize) % qs;
            phase += p.z()[i] as u64 * ki as u64;
        }
        m[(row, col)] = root_of_unity(q, phase);
    }
    Ok(m)
}

/// The `q × q` matrix of a single-qudit gate.
fn single_qudit_matrix(gate: &CliffordGate, q: PrimeDimension) -> Vec<Complex64> {
    let qs = q.get() as usize;
    let mut u = vec![Complex64::new(0.0, 0.0); qs * qs];
    match *gate {
        CliffordGate::F { .. } => {
            let norm = 1.0 / libm::sqrt(qs as f64);
            for j in 0..qs {
                for k in 0..qs {
                    u[j * qs + k] = root_of_unity(q, (j * k) as u64) * norm;
                }
            }
        }
        CliffordGate::R { power, .. } => {
            for j in 0..qs {
                let base = if qs == 2 {
                    if j == 0 {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 1.0)
                    }
                } else {
                    root_of_unity(q, (j * j.saturating_sub(1) / 2) as u64)
                };
                u[j * qs + j] = base.powu(power);
            }
        }
        CliffordGate::Sum { .. } => unreachable!("SUM acts on two qudits"),
    }
    u
}

/// Replaces `m` with `G·m` for a gate acting on `n` qudits.
fn apply_gate_left(m: &mut DenseMatrix, gate: &CliffordGate, q: PrimeDimension, n: usize) {
    let qs = q.get() as usize;
    let dim = m.dim;
    let stride = |t: usize| qs.pow((n - 1 - t) as u32);
    match *gate {
        CliffordGate::F { target } | CliffordGate::R { target, .. } => {
            let u = single_qudit_matrix(gate, q);
            let s = stride(target);
            let mut gathered = vec![Complex64::new(0.0, 0.0); qs];
            for base in (0..dim).filter(|&i| (i / s) % qs == 0) {
                for col in 0..dim {
                    for (e, g) in gathered.iter_mut().enumerate() {
                        *g = m[(base + e * s, col)];
                    }
                    for d in 0..qs {
                        let mut acc = Complex64::new(0.0, 0.0);
                        for e in 0..qs {
                            acc += u[d * qs + e] * gathered[e];
                        }
                        m[(base + d * s, col)] = acc;
                    }
                }
            }
        }
        CliffordGate::Sum { control, target } => {
            let (sc, st) = (stride(control), stride(target));
            let mut out = DenseMatrix::zeros(dim);
            for i in 0..dim {
                let c = (i / sc) % qs;
                let t = (i / st) % qs;
                let image = i - t * st + ((t + c) % qs) * st;
                out.data[image * dim..(image + 1) * dim].copy_from_slice(&m.data[i * dim..(i + 1) * dim]);
            }
            *m = out;
        }
    }
}

/// Explicit unitary of a gate on `n` qudits.
///
/// `F` is the Fourier matrix `ω^{jk}/√q`; `R` is `diag(ω^{j(j−1)/2})` for odd
/// `q` and `diag(1, i)` for `q = 2`, raised to the gate's power; `SUM` is the
/// permutation `|c, t⟩ ↦ |c, t + c⟩`.
pub fn gate_matrix(gate: &CliffordGate, q: PrimeDimension, n: usize) -> Result<DenseMatrix> {
    gate.validate(q, n)?;
    let mut m = DenseMatrix::identity(checked_dim(q, n, DIMENSION_CAP)?);
    apply_gate_left(&mut m, gate, q, n);
    Ok(m)
}

/// `U = G_last ⋯ G_first`, so that `U P U†` matches conjugating by the gates in
/// list order.
pub fn circuit_unitary(c: &CliffordCircuit) -> Result<DenseMatrix> {
    let mut m = DenseMatrix::identity(checked_dim(c.q(), c.qudits(), DIMENSION_CAP)?);
    for g in c.gates() {
        apply_gate_left(&mut m, g, c.q(), c.qudits());
    }
    Ok(m)
}

fn conjugate_matrix(u: &DenseMatrix, p: &DenseMatrix) -> DenseMatrix {
    u.mul(p).mul(&u.adjoint())
}

/// The symplectic image of `p` under `gate` matches `G P G†` up to phase.
pub fn verify_conjugation(gate: &CliffordGate, p: &PauliOperator) -> Result<bool> {
    let image = gate.conjugate(p)?;
    let u = gate_matrix(gate, p.q(), p.len())?;
    let lhs = conjugate_matrix(&u, &pauli_matrix(p)?);
    Ok(pauli_matrix(&image)?.equal_up_to_phase(&lhs, TOLERANCE))
}

/// Every `U_c P U_c†`, `P ∈ set`, is diagonal.
pub fn verify_diagonal(c: &CliffordCircuit, set: &PauliSet) -> Result<bool> {
    if set.q() != c.q() {
        return Err(Error::DimensionMismatch { left: c.q().get(), right: set.q().get() });
    }
    if set.qudits() != c.qudits() {
        return Err(Error::LengthMismatch { left: c.qudits(), right: set.qudits() });
    }
    let u = circuit_unitary(c)?;
    for p in set {
        if !conjugate_matrix(&u, &pauli_matrix(p)?).is_diagonal(TOLERANCE) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dense check that `[A, B] = 0`.
pub fn matrices_commute(a: &PauliOperator, b: &PauliOperator) -> Result<bool> {
    Ok(pauli_matrix(a)?.commutes_with(&pauli_matrix(b)?, TOLERANCE))
}
