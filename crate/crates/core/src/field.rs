//! Prime dimensions and arithmetic in `Z_q`.
//!
//! Every exponent in this crate is stored as its canonical representative in
//! `0..q` and reduced immediately after each operation.

use core::fmt;

use crate::{Error, Result};

/// A prime qudit dimension `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeDimension(u32);

impl PrimeDimension {
    pub const QUBIT: PrimeDimension = PrimeDimension(2);

    pub fn new(q: u32) -> Result<Self> {
        if is_prime(q) {
            Ok(PrimeDimension(q))
        } else {
            Err(Error::NotPrime(q))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn reduce(self, value: u64) -> u32 {
        (value % self.0 as u64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 + b as u64)
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 + self.0 as u64 - b as u64)
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        self.sub(0, a)
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 * b as u64)
    }

    /// Multiplicative inverse by Fermat's little theorem; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        let a = a % self.0;
        if a == 0 {
            return None;
        }
        Some(self.pow(a, self.0 - 2))
    }

    pub fn pow(self, base: u32, mut exp: u32) -> u32 {
        let mut result = 1 % self.0;
        let mut base = base % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        result
    }

    /// `q^exp` as an integer, or `None` on overflow.
    pub fn checked_power(self, exp: u32) -> Option<u64> {
        (self.0 as u64).checked_pow(exp)
    }
}

impl fmt::Display for PrimeDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<u32> for PrimeDimension {
    type Error = Error;

    fn try_from(q: u32) -> Result<Self> {
        PrimeDimension::new(q)
    }
}

/// Trial division.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
