//! Clifford gates acting on Pauli operators by conjugation, and synthesis of
//! circuits that simultaneously diagonalize a commuting set.
//!
//! Gate actions on one qudit's exponents `(x, z)` (phases dropped):
//!
//! | gate        | `X ↦`      | `Z ↦`        | symplectic update                |
//! |-------------|------------|--------------|----------------------------------|
//! | `F`         | `Z`        | `X^{-1}`     | `(x, z) ← (−z, x)`               |
//! | `R^k`       | `X Z^k`    | `Z`          | `(x, z) ← (x, z + k·x)`          |
//! | `SUM(c, t)` | `X_c X_t` (from `X_c`) | `Z_c^{-1} Z_t` (from `Z_t`) | `x_t += x_c`, `z_c −= z_t` |

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::field::PrimeDimension;
use crate::pauli::{PauliOperator, PauliSet};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CliffordGate {
    /// Fourier gate.
    F { target: usize },
    /// Phase gate raised to `power`, `1 ≤ power < q`.
    R { target: usize, power: u32 },
    /// Controlled addition `|c, t⟩ ↦ |c, t + c⟩`.
    Sum { control: usize, target: usize },
}

impl CliffordGate {
    pub fn validate(&self, q: PrimeDimension, n: usize) -> Result<()> {
        let check = |index: usize| {
            if index < n {
                Ok(())
            } else {
                Err(Error::QuditOutOfRange { index, n })
            }
        };
        match *self {
            CliffordGate::F { target } => check(target),
            CliffordGate::R { target, power } => {
                check(target)?;
                if power == 0 || power >= q.get() {
                    return Err(Error::InvalidGate(format!("R exponent {power} must lie in 1..{}", q.get())));
                }
                Ok(())
            }
            CliffordGate::Sum { control, target } => {
                check(control)?;
                check(target)?;
                if control == target {
                    return Err(Error::InvalidGate(format!("SUM control and target are both {control}")));
                }
                Ok(())
            }
        }
    }

    /// Applies the symplectic update in place. The gate must be valid for
    /// the operator.
    pub(crate) fn apply(&self, p: &mut PauliOperator) {
        let q = p.q();
        match *self {
            CliffordGate::F { target } => {
                let (x, z) = p.qudit(target);
                p.set_qudit(target, q.neg(z), x);
            }
            CliffordGate::R { target, power } => {
                let (x, z) = p.qudit(target);
                p.set_qudit(target, x, q.add(z, q.mul(power, x)));
            }
            CliffordGate::Sum { control, target } => {
                let (xc, zc) = p.qudit(control);
                let (xt, zt) = p.qudit(target);
                p.set_qudit(target, q.add(xt, xc), zt);
                p.set_qudit(control, xc, q.sub(zc, zt));
            }
        }
    }

    /// `G P G†` up to phase.
    pub fn conjugate(&self, p: &PauliOperator) -> Result<PauliOperator> {
        self.validate(p.q(), p.len())?;
        let mut out = p.clone();
        self.apply(&mut out);
        Ok(out)
    }

    /// Gates whose combined action undoes this gate.
    pub fn inverse(&self, q: PrimeDimension) -> Vec<CliffordGate> {
        match *self {
            CliffordGate::F { .. } => alloc::vec![*self; 3],
            CliffordGate::R { target, power } => {
                alloc::vec![CliffordGate::R { target, power: q.get() - power }]
            }
            CliffordGate::Sum { .. } => alloc::vec![*self; q.get() as usize - 1],
        }
    }

    pub fn is_sum(&self) -> bool {
        matches!(self, CliffordGate::Sum { .. })
    }
}

/// Text form used by the circuit file format: `F t`, `R t k`, `SUM c t`.
impl fmt::Display for CliffordGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CliffordGate::F { target } => write!(f, "F {target}"),
            CliffordGate::R { target, power } => write!(f, "R {target} {power}"),
            CliffordGate::Sum { control, target } => write!(f, "SUM {control} {target}"),
        }
    }
}

/// An ordered gate list over `n` qudits of dimension `q`. Conjugating a Pauli
/// applies the gates in list order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordCircuit {
    q: PrimeDimension,
    n: usize,
    gates: Vec<CliffordGate>,
}

impl CliffordCircuit {
    pub fn new(q: PrimeDimension, n: usize) -> Self {
        CliffordCircuit { q, n, gates: Vec::new() }
    }

    pub fn from_gates(q: PrimeDimension, n: usize, gates: Vec<CliffordGate>) -> Result<Self> {
        for g in &gates {
            g.validate(q, n)?;
        }
        Ok(CliffordCircuit { q, n, gates })
    }

    pub fn q(&self) -> PrimeDimension {
        self.q
    }

    pub fn qudits(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[CliffordGate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: CliffordGate) -> Result<()> {
        gate.validate(self.q, self.n)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn sum_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_sum()).count()
    }

    fn check(&self, p: &PauliOperator) -> Result<()> {
        if p.q() != self.q {
            return Err(Error::DimensionMismatch { left: self.q.get(), right: p.q().get() });
        }
        if p.len() != self.n {
            return Err(Error::LengthMismatch { left: self.n, right: p.len() });
        }
        Ok(())
    }

    pub fn conjugate(&self, p: &PauliOperator) -> Result<PauliOperator> {
        self.check(p)?;
        let mut out = p.clone();
        for g in &self.gates {
            g.apply(&mut out);
        }
        Ok(out)
    }

    pub fn conjugate_set(&self, set: &PauliSet) -> Result<PauliSet> {
        let ops = set.iter().map(|p| self.conjugate(p)).collect::<Result<Vec<_>>>()?;
        PauliSet::new(set.q(), set.qudits(), ops)
    }

    /// The circuit undoing this one.
    pub fn inverse(&self) -> CliffordCircuit {
        let gates = self.gates.iter().rev().flat_map(|g| g.inverse(self.q)).collect();
        CliffordCircuit { q: self.q, n: self.n, gates }
    }
}

/// True iff every operator is `Z`-type (all `x` exponents zero).
pub fn is_diagonalized(set: &PauliSet) -> bool {
    set.iter().all(PauliOperator::is_z_type)
}

/// Working state for synthesis: the circuit so far and the conjugated set.
struct Synthesis {
    circuit: CliffordCircuit,
    ops: Vec<PauliOperator>,
}

impl Synthesis {
    fn emit(&mut self, gate: CliffordGate) {
        debug_assert!(gate.validate(self.circuit.q, self.circuit.n).is_ok());
        for p in &mut self.ops {
            gate.apply(p);
        }
        self.circuit.gates.push(gate);
    }

    /// `SUM(control, target)` listed `times` times.
    fn emit_sum(&mut self, control: usize, target: usize, times: u32) {
        for _ in 0..times {
            self.emit(CliffordGate::Sum { control, target });
        }
    }

    /// Single-qudit step: with `(a, b) = (x_t, z_t)` of operator `pivot`,
    /// `a ≠ 0`, emits `R^{a^{-1}(q-b)}` (clearing `z_t`) then `F`, leaving
    /// `Z^a` on qudit `t`.
    fn diagonalize_qudit(&mut self, pivot: usize, t: usize) {
        let q = self.circuit.q;
        let (a, b) = self.ops[pivot].qudit(t);
        let a_inv = q.inv(a).expect("pivot has an X component");
        let power = q.mul(a_inv, q.neg(b));
        if power != 0 {
            self.emit(CliffordGate::R { target: t, power });
        }
        self.emit(CliffordGate::F { target: t });
    }
}

/// Synthesizes a circuit mapping every operator of a commuting set to a
/// `Z`-type operator.
///
/// Qudits are processed left to right. On working qudit `w`, the first
/// operator `P` with an `X` component on some qudit `≥ w` is reduced to
/// `Z^a ⊗ I`:
///
/// 1. if `P` has no `X` on `w`, a `SUM` from a qudit carrying `X` moves one there;
/// 2. `R` and `F` on `w` turn `X^a Z^b` into `Z^a`;
/// 3. `Z` components on other qudits are removed, by `R` where that qudit
///    still carries `X`, and by `SUM(j, w)` repeated `z_j·a^{-1}` times where
///    it is pure `Z`;
/// 4. `F` turns the remaining `X`-only qudits into `Z`-only ones;
/// 5. `SUM(j, w)` repetitions clear those `Z` components.
///
/// Every other operator commutes with `Z^a ⊗ I` and therefore has no `X` on
/// `w`, so the remaining qudits can be handled independently.
pub fn diagonalize(set: &PauliSet) -> Result<CliffordCircuit> {
    if let Some((first, second)) = set.find_non_commuting_pair() {
        return Err(Error::NonCommuting { first, second });
    }
    let q = set.q();
    let n = set.qudits();
    let mut s = Synthesis { circuit: CliffordCircuit::new(q, n), ops: set.operators().to_vec() };
    for w in 0..n {
        let Some(pivot) = s.ops.iter().position(|p| p.x()[w..].iter().any(|&x| x != 0)) else {
            break;
        };
        if s.ops[pivot].x()[w] == 0 {
            let j = (w + 1..n).find(|&j| s.ops[pivot].x()[j] != 0).expect("pivot has X beyond w");
            s.emit(CliffordGate::Sum { control: j, target: w });
        }
        s.diagonalize_qudit(pivot, w);
        let a_inv = q.inv(s.ops[pivot].z()[w]).expect("working qudit holds Z^a, a != 0");
        for j in w + 1..n {
            let (x, z) = s.ops[pivot].qudit(j);
            if z == 0 {
                continue;
            }
            if x != 0 {
                let power = q.mul(q.neg(z), q.inv(x).expect("nonzero"));
                s.emit(CliffordGate::R { target: j, power });
            } else {
                s.emit_sum(j, w, q.mul(z, a_inv));
            }
        }
        for j in w + 1..n {
            if s.ops[pivot].x()[j] != 0 {
                s.emit(CliffordGate::F { target: j });
            }
        }
        for j in w + 1..n {
            let z = s.ops[pivot].z()[j];
            if z != 0 {
                s.emit_sum(j, w, q.mul(z, a_inv));
            }
        }
        debug_assert!((w + 1..n).all(|j| s.ops[pivot].qudit(j) == (0, 0)));
        debug_assert!(s.ops.iter().all(|p| p.x()[w] == 0));
    }
    debug_assert!(s.ops.iter().all(PauliOperator::is_z_type));
    Ok(s.circuit)
}

/// Diagonalizes a quditwise-commuting set with single-qudit gates only: on
/// each qudit, the base step is applied for the first operator with an `X`
/// component there.
pub fn diagonalize_single_qudit(set: &PauliSet) -> Result<CliffordCircuit> {
    if let Some((first, second)) = set.find_non_quditwise_pair() {
        return Err(Error::NotQuditwiseCommuting { first, second });
    }
    let mut s = Synthesis { circuit: CliffordCircuit::new(set.q(), set.qudits()), ops: set.operators().to_vec() };
    for t in 0..set.qudits() {
        if let Some(pivot) = s.ops.iter().position(|p| p.x()[t] != 0) {
            s.diagonalize_qudit(pivot, t);
        }
    }
    debug_assert!(s.ops.iter().all(PauliOperator::is_z_type));
    Ok(s.circuit)
}
