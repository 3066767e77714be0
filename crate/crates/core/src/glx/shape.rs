use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::Prime;

/// `X = ⊕_k L_k^{n_k}` in `Ver_p`, with summands ordered so that isomorphic
/// simples are consecutive: all copies of `L_1`, then `L_2`, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawShape", into = "RawShape")]
pub struct GLXShape {
    p: Prime,
    mults: Vec<usize>,
    summands: Vec<usize>,
}

/// One `GL(n_k)` factor of `GL(X)_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    /// The simple `L_k` this block is made of.
    pub label: usize,
    /// `n_k`.
    pub size: usize,
    /// Index of the block's first summand in `X_1, …, X_n`.
    pub offset: usize,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.size
    }
}

#[derive(Serialize, Deserialize)]
struct RawShape {
    p: u32,
    mults: Vec<usize>,
}

impl TryFrom<RawShape> for GLXShape {
    type Error = Error;
    fn try_from(r: RawShape) -> Result<Self> {
        GLXShape::new(Prime::new(r.p)?, r.mults)
    }
}

impl From<GLXShape> for RawShape {
    fn from(s: GLXShape) -> Self {
        RawShape { p: s.p.get(), mults: s.mults }
    }
}

impl fmt::Display for GLXShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks().map(|b| format!("L{}:{}", b.label, b.size)).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl GLXShape {
    /// `mults[k - 1] = n_k`. Shorter vectors are padded with zeros.
    pub fn new(p: Prime, mut mults: Vec<usize>) -> Result<Self> {
        let width = p.as_usize() - 1;
        if mults.len() > width {
            if mults[width..].iter().any(|&m| m > 0) {
                return Err(Error::invalid(format!("labels above p - 1 = {width} in shape")));
            }
            mults.truncate(width);
        }
        mults.resize(width, 0);
        if mults.iter().all(|&m| m == 0) {
            return Err(Error::invalid("X must be nonzero"));
        }
        let summands = mults.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m)).collect();
        Ok(GLXShape { p, mults, summands })
    }

    /// Parse `L<k>:<mult>[,L<k>:<mult>...]`.
    pub fn parse(p: Prime, s: &str) -> Result<Self> {
        let mut mults = vec![0usize; p.as_usize() - 1];
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (label, count) = item
                .strip_prefix('L')
                .and_then(|rest| rest.split_once(':'))
                .ok_or_else(|| Error::invalid(format!("bad shape item {item:?}, want L<k>:<mult>")))?;
            let k: usize = label.parse().map_err(|_| Error::invalid(format!("bad label in {item:?}")))?;
            let m: usize =
                count.parse().map_err(|_| Error::invalid(format!("bad multiplicity in {item:?}")))?;
            if k == 0 || k >= p.as_usize() {
                return Err(Error::OutOfRange { index: k as i64, lo: 1, hi: p.as_i64() - 1 });
            }
            mults[k - 1] += m;
        }
        Self::new(p, mults)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    /// `n = Σ n_k`.
    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    /// Labels of `X_1, …, X_n`.
    pub fn summands(&self) -> &[usize] {
        &self.summands
    }

    /// Nonempty blocks in label order.
    pub fn blocks(&self) -> impl Iterator<Item = Block> + '_ {
        let mut offset = 0;
        self.mults.iter().enumerate().filter(|(_, &m)| m > 0).map(move |(i, &m)| {
            let b = Block { label: i + 1, size: m, offset };
            offset += m;
            b
        })
    }

    /// `dim GL(X)_0 = Σ n_k²`.
    pub fn even_dim(&self) -> u64 {
        self.mults.iter().map(|&m| (m * m) as u64).sum()
    }

    /// Whether every summand is `L_1`, i.e. `GL(X)` is an ordinary `GL(n)`.
    pub fn is_ordinary(&self) -> bool {
        self.summands.iter().all(|&k| k == 1)
    }
}
