//! Exact integer arithmetic modulo `n`.
//!
//! Every value handled by the crate stays below `n^5` with `n <= MAX_MODULUS`,
//! so plain 64-bit integers never overflow.

use std::fmt;

use crate::error::{Error, Result};

/// Largest modulus accepted anywhere in the crate.
pub const MAX_MODULUS: u64 = 1000;

/// A canonical residue `0 <= value < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Reduces `value` into `[0, modulus)`. Negative inputs wrap, so `-8 mod 17 = 9`.
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ModulusTooSmall { modulus, min: 1 });
        }
        Ok(Self {
            value: reduce(value, modulus),
            modulus,
        })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_unit(self) -> bool {
        gcd(self.value, self.modulus) == Ok(1)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Canonical representative of `value` in `[0, modulus)`.
///
/// Panics if `modulus` is zero.
#[inline]
pub fn reduce(value: i64, modulus: u64) -> u64 {
    assert!(modulus > 0, "modulus must be positive");
    value.rem_euclid(modulus as i64) as u64
}

/// Greatest common divisor. `gcd(a, 0) = a`; `gcd(0, 0)` is an error.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::UndefinedGcd);
    }
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    Ok(a)
}

/// Whether `value` (reduced mod `modulus`) is coprime to `modulus`.
#[inline]
pub fn is_coprime(value: i64, modulus: u64) -> bool {
    gcd(reduce(value, modulus), modulus) == Ok(1)
}

/// Multiplicative inverse of `a` modulo `n` via the extended Euclidean algorithm.
pub fn mod_inverse(a: i64, n: u64) -> Result<Residue> {
    if n < 2 {
        return Err(Error::ModulusTooSmall { modulus: n, min: 2 });
    }
    let reduced = reduce(a, n) as i64;
    let (mut old_r, mut r) = (reduced, n as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotInvertible { value: a, modulus: n });
    }
    Residue::new(old_s, n)
}
