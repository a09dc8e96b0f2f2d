use serde::Serialize;

use super::FfError;

/// Arithmetic context for the prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FieldCtx {
    p: u32,
}

const MAX_PRIME: u64 = (1 << 31) - 1;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldCtx {
    /// Validates `p` and builds the context. Moduli above 2^31 are refused so
    /// that products of two residues always fit in a `u64`.
    pub fn new(p: u64) -> Result<Self, FfError> {
        if p > MAX_PRIME {
            return Err(FfError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FfError::NotPrime(p));
        }
        Ok(FieldCtx { p: p as u32 })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Residues below 2^16 let dot products accumulate unreduced in a `u64`.
    #[inline]
    pub(crate) fn small(&self) -> bool {
        self.p < (1 << 16)
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u32 {
        (x % self.p as u64) as u32
    }

    /// Image of an integer under Z -> GF(p).
    #[inline]
    pub fn from_int(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(a, self.p as u64 - 2))
        }
    }

    /// `a + c*b`, the elimination step.
    #[inline]
    pub fn axpy(&self, a: u32, c: u32, b: u32) -> u32 {
        ((a as u64 + c as u64 * b as u64) % self.p as u64) as u32
    }

    /// p-adic valuation of a positive integer.
    pub fn valuation(&self, mut k: u64) -> u32 {
        assert!(k > 0, "valuation of zero");
        let p = self.p as u64;
        let mut v = 0;
        while k % p == 0 {
            k /= p;
            v += 1;
        }
        v
    }

    pub fn divides(&self, k: u64) -> bool {
        k % self.p as u64 == 0
    }
}
