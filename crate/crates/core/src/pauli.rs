//! Generalized Pauli operators in symplectic form.
//!
//! A length-`n` operator over prime dimension `q` is the tensor product
//! `X^{x_0} Z^{z_0} ⊗ … ⊗ X^{x_{n-1}} Z^{z_{n-1}}`, stored as the two exponent
//! vectors. Global phases are never tracked, so the product of two operators
//! is only defined up to phase.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::PrimeDimension;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliOperator {
    q: PrimeDimension,
    x: Vec<u32>,
    z: Vec<u32>,
}

impl PauliOperator {
    pub fn new(q: PrimeDimension, x: Vec<u32>, z: Vec<u32>) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::RaggedExponents { x: x.len(), z: z.len() });
        }
        if x.is_empty() {
            return Err(Error::EmptyOperator);
        }
        if let Some(&value) = x.iter().chain(&z).find(|&&v| v >= q.get()) {
            return Err(Error::ExponentOutOfRange { value, q: q.get() });
        }
        Ok(PauliOperator { q, x, z })
    }

    /// Builds an operator from exponents that may be out of range; they are
    /// reduced mod `q`.
    pub fn from_unreduced(q: PrimeDimension, x: &[u64], z: &[u64]) -> Result<Self> {
        let reduce = |v: &[u64]| v.iter().map(|&e| q.reduce(e)).collect();
        PauliOperator::new(q, reduce(x), reduce(z))
    }

    pub fn identity(q: PrimeDimension, n: usize) -> Result<Self> {
        PauliOperator::new(q, vec![0; n], vec![0; n])
    }

    /// `X^x Z^z` acting on qudit `qudit` of an otherwise-identity operator.
    pub fn single(q: PrimeDimension, n: usize, qudit: usize, x: u32, z: u32) -> Result<Self> {
        if qudit >= n {
            return Err(Error::QuditOutOfRange { index: qudit, n });
        }
        let mut xs = vec![0; n];
        let mut zs = vec![0; n];
        xs[qudit] = x;
        zs[qudit] = z;
        PauliOperator::new(q, xs, zs)
    }

    /// Decodes the `index`-th element of `P_q[n]` in the ordering where the
    /// exponents `x_0..x_{n-1}, z_0..z_{n-1}` are base-`q` digits, most
    /// significant first. Index 0 is the identity.
    pub fn from_index(q: PrimeDimension, n: usize, mut index: u64) -> Result<Self> {
        let base = q.get() as u64;
        let mut digits = vec![0u32; 2 * n];
        for d in digits.iter_mut().rev() {
            *d = (index % base) as u32;
            index /= base;
        }
        let z = digits.split_off(n);
        PauliOperator::new(q, digits, z)
    }

    #[inline]
    pub fn q(&self) -> PrimeDimension {
        self.q
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.x.len()
    }

    /// Always false; operators have at least one qudit.
    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    #[inline]
    pub fn x(&self) -> &[u32] {
        &self.x
    }

    #[inline]
    pub fn z(&self) -> &[u32] {
        &self.z
    }

    /// Exponents `(x_i, z_i)` on qudit `i`.
    #[inline]
    pub fn qudit(&self, i: usize) -> (u32, u32) {
        (self.x[i], self.z[i])
    }

    pub(crate) fn set_qudit(&mut self, i: usize, x: u32, z: u32) {
        self.x[i] = x;
        self.z[i] = z;
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&v| v == 0)
    }

    /// True iff every `x` exponent is zero, i.e. the operator is diagonal.
    pub fn is_z_type(&self) -> bool {
        self.x.iter().all(|&v| v == 0)
    }

    /// Number of qudits on which the operator acts non-trivially.
    pub fn weight(&self) -> usize {
        self.x.iter().zip(&self.z).filter(|(&x, &z)| x != 0 || z != 0).count()
    }

    /// Right-pads with identity qudits up to length `n`.
    pub fn padded(&self, n: usize) -> Result<Self> {
        if n < self.len() {
            return Err(Error::OperatorTooLong { len: self.len(), n });
        }
        let mut p = self.clone();
        p.x.resize(n, 0);
        p.z.resize(n, 0);
        Ok(p)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::DimensionMismatch { left: self.q.get(), right: other.q.get() });
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(())
    }

    /// Symplectic contribution of a single qudit, `x_a z_b - z_a x_b mod q`.
    #[inline]
    fn qudit_form(&self, other: &Self, i: usize) -> u32 {
        let q = self.q;
        q.sub(q.mul(self.x[i], other.z[i]), q.mul(self.z[i], other.x[i]))
    }

    /// `Σ_i (x_a[i] z_b[i] − z_a[i] x_b[i]) mod q`. Zero iff the operators
    /// commute as matrices up to phase.
    pub fn symplectic_inner_product(&self, other: &Self) -> Result<u32> {
        self.check_compatible(other)?;
        let q = self.q;
        let mut sum = 0u64;
        for i in 0..self.len() {
            sum += self.qudit_form(other, i) as u64;
        }
        Ok(q.reduce(sum))
    }

    pub fn commutes(&self, other: &Self) -> Result<bool> {
        Ok(self.symplectic_inner_product(other)? == 0)
    }

    /// Commutation on every tensor factor separately.
    pub fn quditwise_commutes(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok((0..self.len()).all(|i| self.qudit_form(other, i) == 0))
    }

    /// Phase-free product: exponents add componentwise.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let q = self.q;
        let add = |a: &[u32], b: &[u32]| a.iter().zip(b).map(|(&u, &v)| q.add(u, v)).collect();
        Ok(PauliOperator { q, x: add(&self.x, &other.x), z: add(&self.z, &other.z) })
    }

    /// The operator raised to power `k` (exponents scaled by `k`).
    pub fn power(&self, k: u32) -> Self {
        let q = self.q;
        let scale = |v: &[u32]| v.iter().map(|&e| q.mul(e, k % q.get())).collect();
        PauliOperator { q, x: scale(&self.x), z: scale(&self.z) }
    }

    /// The `2n` symplectic coordinates `x ‖ z`.
    pub fn symplectic_vector(&self) -> Vec<u32> {
        self.x.iter().chain(&self.z).copied().collect()
    }
}

/// Single-qubit operators print as `I`, `X`, `Y`, `Z` when `q = 2`; otherwise
/// each qudit prints as `X<a>Z<b>` and qudits are separated by `.`.
impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.get() == 2 {
            for (&x, &z) in self.x.iter().zip(&self.z) {
                let c = match (x, z) {
                    (0, 0) => 'I',
                    (1, 0) => 'X',
                    (1, 1) => 'Y',
                    _ => 'Z',
                };
                fmt::Write::write_char(f, c)?;
            }
            return Ok(());
        }
        for (i, (&x, &z)) in self.x.iter().zip(&self.z).enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "X{x}Z{z}")?;
        }
        Ok(())
    }
}

/// An ordered collection of operators sharing `q` and length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliSet {
    q: PrimeDimension,
    n: usize,
    operators: Vec<PauliOperator>,
}

impl PauliSet {
    /// Pads every operator to length `n`; operators longer than `n` or with a
    /// different `q` are rejected.
    pub fn new(q: PrimeDimension, n: usize, operators: Vec<PauliOperator>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOperator);
        }
        let operators = operators
            .into_iter()
            .map(|p| {
                if p.q != q {
                    return Err(Error::DimensionMismatch { left: q.get(), right: p.q.get() });
                }
                if p.len() == n {
                    Ok(p)
                } else {
                    p.padded(n)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PauliSet { q, n, operators })
    }

    /// Pads to the longest operator. An empty list yields an empty set of
    /// length 1.
    pub fn from_operators(q: PrimeDimension, operators: Vec<PauliOperator>) -> Result<Self> {
        let n = operators.iter().map(PauliOperator::len).max().unwrap_or(1);
        PauliSet::new(q, n, operators)
    }

    /// All `q^{2n} - 1` non-identity operators of `P_q[n]` in index order.
    pub fn all_non_identity(q: PrimeDimension, n: usize) -> Result<Self> {
        let total = q
            .checked_power(2 * n as u32)
            .filter(|&t| t <= 1 << 24)
            .ok_or_else(|| Error::InvalidArgument("Pauli group too large to enumerate".into()))?;
        let operators = (1..total).map(|i| PauliOperator::from_index(q, n, i)).collect::<Result<Vec<_>>>()?;
        PauliSet::new(q, n, operators)
    }

    #[inline]
    pub fn q(&self) -> PrimeDimension {
        self.q
    }

    /// Common operator length.
    #[inline]
    pub fn qudits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    pub fn operators(&self) -> &[PauliOperator] {
        &self.operators
    }

    pub fn iter(&self) -> core::slice::Iter<'_, PauliOperator> {
        self.operators.iter()
    }

    pub fn into_operators(self) -> Vec<PauliOperator> {
        self.operators
    }

    /// First pair `(i, j)`, `i < j`, that fails to commute.
    pub fn find_non_commuting_pair(&self) -> Option<(usize, usize)> {
        self.find_pair(|a, b| a.symplectic_inner_product(b).map(|v| v == 0).unwrap_or(false))
    }

    /// First pair `(i, j)`, `i < j`, that fails to commute on some qudit.
    pub fn find_non_quditwise_pair(&self) -> Option<(usize, usize)> {
        self.find_pair(|a, b| a.quditwise_commutes(b).unwrap_or(false))
    }

    fn find_pair(&self, ok: impl Fn(&PauliOperator, &PauliOperator) -> bool) -> Option<(usize, usize)> {
        let ops = &self.operators;
        for i in 0..ops.len() {
            for j in i + 1..ops.len() {
                if !ok(&ops[i], &ops[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Rank of the symplectic vectors over `Z_q`.
    pub fn rank(&self) -> usize {
        let rows = self.operators.iter().map(PauliOperator::symplectic_vector).collect();
        rank_mod_q(self.q, rows)
    }

    /// True iff the `x ‖ z` vectors are linearly independent over `Z_q`.
    pub fn is_linearly_independent(&self) -> bool {
        self.rank() == self.operators.len()
    }
}

impl<'a> IntoIterator for &'a PauliSet {
    type Item = &'a PauliOperator;
    type IntoIter = core::slice::Iter<'a, PauliOperator>;

    fn into_iter(self) -> Self::IntoIter {
        self.operators.iter()
    }
}

/// Gaussian elimination over the prime field.
pub(crate) fn rank_mod_q(q: PrimeDimension, mut rows: Vec<Vec<u32>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = q.inv(rows[rank][col]).expect("pivot is nonzero");
        for v in rows[rank].iter_mut() {
            *v = q.mul(*v, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (v, p) in row[col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                    *v = q.sub(*v, q.mul(factor, *p));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
