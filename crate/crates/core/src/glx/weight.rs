use std::fmt;

use serde::{Deserialize, Serialize};

use super::shape::GLXShape;
use crate::error::{Error, Result};

/// A character of the diagonal torus of `GL(X)_0`, stored as `Z^n` in the
/// summand order of the shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWeight", into = "RawWeight")]
pub struct GWeight {
    shape: GLXShape,
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawWeight {
    shape: GLXShape,
    entries: Vec<i64>,
}

impl TryFrom<RawWeight> for GWeight {
    type Error = Error;
    fn try_from(r: RawWeight) -> Result<Self> {
        GWeight::new(&r.shape, r.entries)
    }
}

impl From<GWeight> for RawWeight {
    fn from(w: GWeight) -> Self {
        RawWeight { shape: w.shape, entries: w.entries }
    }
}

/// Block syntax: `,` within a block, `|` between blocks.
impl fmt::Display for GWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .shape
            .blocks()
            .map(|b| self.entries[b.range()].iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

impl GWeight {
    pub fn new(shape: &GLXShape, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != shape.rank() {
            return Err(Error::invalid(format!(
                "weight has {} entries but X has {} summands",
                entries.len(),
                shape.rank()
            )));
        }
        Ok(GWeight { shape: shape.clone(), entries })
    }

    pub fn zero(shape: &GLXShape) -> Self {
        GWeight { shape: shape.clone(), entries: vec![0; shape.rank()] }
    }

    /// `ε_i - ε_j`.
    pub fn root(shape: &GLXShape, i: usize, j: usize) -> Self {
        let mut w = Self::zero(shape);
        w.entries[i] += 1;
        w.entries[j] -= 1;
        w
    }

    /// Parse block syntax such as `12,3|0`. A flat comma list is accepted as
    /// long as it has the right total length.
    pub fn parse(shape: &GLXShape, s: &str) -> Result<Self> {
        let s = s.trim();
        let entries: Vec<i64> = if s.contains('|') {
            let groups: Vec<&str> = s.split('|').collect();
            let blocks: Vec<_> = shape.blocks().collect();
            if groups.len() != blocks.len() {
                return Err(Error::invalid(format!(
                    "weight {s:?} has {} blocks, shape {shape} has {}",
                    groups.len(),
                    blocks.len()
                )));
            }
            let mut v = Vec::with_capacity(shape.rank());
            for (g, b) in groups.iter().zip(&blocks) {
                let part = parse_ints(g)?;
                if part.len() != b.size {
                    return Err(Error::invalid(format!(
                        "block for L{} needs {} entries, got {}",
                        b.label,
                        b.size,
                        part.len()
                    )));
                }
                v.extend(part);
            }
            v
        } else {
            parse_ints(s)?
        };
        Self::new(shape, entries)
    }

    pub fn shape(&self) -> &GLXShape {
        &self.shape
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    fn check_shape(&self, other: &GWeight) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::Mismatch(format!("shapes {} and {}", self.shape, other.shape)))
        }
    }

    pub fn add(&self, other: &GWeight) -> Result<GWeight> {
        self.check_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(GWeight { shape: self.shape.clone(), entries })
    }

    pub fn sub(&self, other: &GWeight) -> Result<GWeight> {
        self.check_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(GWeight { shape: self.shape.clone(), entries })
    }

    pub fn scale(&self, s: i64) -> GWeight {
        GWeight { shape: self.shape.clone(), entries: self.entries.iter().map(|x| x * s).collect() }
    }

    /// Entries of each block, in block order.
    pub fn block_entries(&self) -> impl Iterator<Item = &[i64]> + '_ {
        self.shape.blocks().map(move |b| &self.entries[b.range()])
    }

    /// `λ_1 >= λ_2 >= …` inside every block.
    pub fn is_dominant(&self) -> bool {
        self.block_entries().all(|b| b.windows(2).all(|w| w[0] >= w[1]))
    }

    /// `0 <= λ_i - λ_{i+1} < p^r` inside every block. Blocks of size one
    /// carry no condition. Only `r = 1` is standard for `GL(X)`; the bound
    /// `p^r` for higher levels is carried over from ordinary `GL(n)`.
    pub fn is_restricted(&self, r: u32) -> bool {
        let bound = self.shape.prime().checked_pow(r);
        self.block_entries().all(|b| {
            b.windows(2).all(|w| {
                let d = w[0] - w[1];
                d >= 0 && bound.is_none_or(|q| d < q)
            })
        })
    }

    /// Canonical `λ = λ0 + p·μ` with `λ0` restricted, `μ` dominant, and the
    /// last entry of every block of `λ0` in `[0, p)`.
    pub fn padic_decompose(&self) -> Result<(GWeight, GWeight)> {
        if !self.is_dominant() {
            return Err(Error::invalid(format!("{self} is not dominant")));
        }
        let p = self.shape.prime().as_i64();
        let mut base = Self::zero(&self.shape);
        let mut mu = Self::zero(&self.shape);
        for b in self.shape.blocks() {
            let r = b.range();
            let last = r.end - 1;
            base.entries[last] = self.entries[last].rem_euclid(p);
            mu.entries[last] = self.entries[last].div_euclid(p);
            for i in (r.start..last).rev() {
                let d = self.entries[i] - self.entries[i + 1];
                base.entries[i] = base.entries[i + 1] + d % p;
                mu.entries[i] = mu.entries[i + 1] + d / p;
            }
        }
        Ok((base, mu))
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::invalid(format!("bad integer {t:?}"))))
        .collect()
}
