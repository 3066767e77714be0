use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An odd prime `p >= 5`, the characteristic of the ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u32);

impl Prime {
    /// Upper bound on accepted primes. Objects of `Ver_p` are stored as dense
    /// vectors of length `p - 1`, so anything much larger is a typo.
    pub const MAX: u32 = 1 << 16;

    pub fn new(p: u32) -> Result<Self> {
        if !(5..=Self::MAX).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p as u64));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn as_usize(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn as_i64(self) -> i64 {
        self.0 as i64
    }

    /// `p^e` as an `i64`, or `None` on overflow.
    pub fn checked_pow(self, e: u32) -> Option<i64> {
        (self.0 as i64).checked_pow(e)
    }
}

impl TryFrom<u32> for Prime {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_same(a: Prime, b: Prime) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::MismatchedPrime(a.get(), b.get()))
    }
}
