//! Harish-Chandra descriptors for the standard subgroups of `GL(X)` and the
//! coordinate-ring dimensions of its Frobenius kernels.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::roots::{diagonal_space, gl_content, root_space, roots, Root, RootClass};
use super::shape::GLXShape;
use crate::error::{Error, Result};
use crate::verp::{sym_algebra_dims, VerpObject};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Selector {
    G,
    T,
    B,
    NMinus,
    P,
    Kernel(u32),
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::G => write!(f, "G"),
            Selector::T => write!(f, "T"),
            Selector::B => write!(f, "B"),
            Selector::NMinus => write!(f, "N-"),
            Selector::P => write!(f, "P"),
            Selector::Kernel(r) => write!(f, "kernel({r})"),
        }
    }
}

impl FromStr for Selector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Ok(match s {
            "G" => Selector::G,
            "T" => Selector::T,
            "B" => Selector::B,
            "N-" | "N" => Selector::NMinus,
            "P" => Selector::P,
            _ => {
                let r = s
                    .strip_prefix("kernel(")
                    .and_then(|t| t.strip_suffix(')'))
                    .and_then(|t| t.parse::<u32>().ok())
                    .filter(|&r| r > 0)
                    .ok_or_else(|| Error::invalid(format!("unknown subgroup {s:?}")))?;
                Selector::Kernel(r)
            }
        })
    }
}

/// The even part restricted to one `GL(n_k)` block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvenFactor {
    Full,
    UpperTriangular,
    Diagonal,
    StrictlyLower,
}

impl EvenFactor {
    pub fn dim(self, m: usize) -> u64 {
        let m = m as u64;
        match self {
            EvenFactor::Full => m * m,
            EvenFactor::UpperTriangular => m * (m + 1) / 2,
            EvenFactor::Diagonal => m,
            EvenFactor::StrictlyLower => m * m.saturating_sub(1) / 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LieSlot {
    Diagonal(usize),
    Root(usize, usize),
}

/// An even group together with the Lie algebra content of the subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HCPair {
    pub shape: GLXShape,
    pub selector: Selector,
    /// One factor per nonempty block.
    pub even: Vec<EvenFactor>,
    /// Set for Frobenius kernels.
    pub kernel_level: Option<u32>,
    pub content: Vec<(LieSlot, VerpObject)>,
}

impl HCPair {
    pub fn even_dim(&self) -> u64 {
        self.shape.blocks().zip(&self.even).map(|(b, f)| f.dim(b.size)).sum()
    }

    pub fn lie_total(&self) -> Result<VerpObject> {
        self.content
            .iter()
            .map(|(_, o)| o)
            .try_fold(VerpObject::zero(self.shape.prime()), |acc, o| acc.direct_sum(o))
    }

    pub fn odd_part(&self) -> Result<VerpObject> {
        Ok(self.lie_total()?.without_unit())
    }
}

fn in_selector(sel: Selector, r: &Root) -> bool {
    match sel {
        Selector::G | Selector::Kernel(_) => true,
        Selector::T => false,
        Selector::B => r.is_positive(),
        Selector::NMinus => !r.is_positive(),
        Selector::P => r.is_positive() || r.class == RootClass::Ordinary,
    }
}

pub fn hc_pair(shape: &GLXShape, selector: Selector) -> Result<HCPair> {
    let factor = match selector {
        Selector::G | Selector::P | Selector::Kernel(_) => EvenFactor::Full,
        Selector::T => EvenFactor::Diagonal,
        Selector::B => EvenFactor::UpperTriangular,
        Selector::NMinus => EvenFactor::StrictlyLower,
    };
    let mut content = Vec::new();
    if selector != Selector::NMinus {
        for i in 0..shape.rank() {
            content.push((LieSlot::Diagonal(i), diagonal_space(shape, i)?));
        }
    }
    for r in roots(shape).iter().filter(|r| in_selector(selector, r)) {
        content.push((LieSlot::Root(r.i, r.j), root_space(shape, r)?));
    }
    let pair = HCPair {
        shape: shape.clone(),
        selector,
        even: shape.blocks().map(|_| factor).collect(),
        kernel_level: match selector {
            Selector::Kernel(r) => Some(r),
            _ => None,
        },
        content,
    };
    let unit = pair.lie_total()?.unit_multiplicity();
    if unit != pair.even_dim() {
        return Err(Error::Mismatch(format!(
            "{selector} on {shape}: unit part {unit} but even group has dimension {}",
            pair.even_dim()
        )));
    }
    Ok(pair)
}

/// `dim O(G_(r)) = p^{even_exponent} · Σ_d sym_dims[d]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelDims {
    pub even_exponent: u64,
    pub sym_dims: Vec<u64>,
}

impl KernelDims {
    pub fn sym_total(&self) -> u64 {
        self.sym_dims.iter().sum()
    }

    pub fn total(&self, p: u32) -> BigUint {
        BigUint::from(p).pow(self.even_exponent as u32) * BigUint::from(self.sym_total())
    }
}

/// Factored dimension of the coordinate ring of the `r`-th Frobenius kernel.
pub fn kernel_coord_dims(shape: &GLXShape, r: u32) -> Result<KernelDims> {
    if r == 0 {
        return Err(Error::invalid("kernel level must be positive"));
    }
    let g = gl_content(shape)?;
    let odd = g.without_unit();
    let sym_dims = if odd.is_zero() {
        vec![1]
    } else {
        sym_algebra_dims(&odd)?.iter().map(VerpObject::underlying_dim).collect()
    };
    Ok(KernelDims { even_exponent: r as u64 * g.unit_multiplicity(), sym_dims })
}
