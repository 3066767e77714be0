//! Steinberg factorization of simple-module labels:
//! `L(λ0 + p·λ1 + p²·λ2 + …, V) ≅ L(λ0, V) ⊗ L_0(λ1)^{[1]} ⊗ L_0(λ2)^{[2]} ⊗ …`.

use serde::{Deserialize, Serialize};

use super::vtuple::SimpleIndex;
use super::weight::GWeight;
use crate::error::{Error, Result};

/// One step: `L(λ, V) ≅ L(λ0, V) ⊗ Fr(L_0(μ))`. A restricted label is
/// returned unchanged with `μ = 0`.
pub fn steinberg_step(idx: &SimpleIndex) -> Result<(SimpleIndex, GWeight)> {
    let lambda = idx.lambda();
    if lambda.is_restricted(1) {
        return Ok((idx.clone(), GWeight::zero(lambda.shape())));
    }
    let (base, mu) = lambda.padic_decompose()?;
    Ok((SimpleIndex::new(base, idx.v().clone())?, mu))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub base: SimpleIndex,
    /// `twists[i]` is inflated through the `(i + 1)`-th Frobenius twist.
    pub twists: Vec<GWeight>,
}

impl Factorization {
    /// `base.λ + Σ_i p^{i+1} · twists[i]`.
    pub fn reassemble(&self) -> Result<GWeight> {
        let shape = self.base.shape();
        let p = shape.prime().as_i64();
        let mut out = self.base.lambda().clone();
        let mut scale = 1i64;
        for t in &self.twists {
            scale =
                scale.checked_mul(p).ok_or_else(|| Error::Unsupported("twist depth overflows i64".into()))?;
            out = out.add(&t.scale(scale))?;
        }
        Ok(out)
    }

    /// Dimensions of the even simples `L_0(twists[i])`, where known.
    pub fn twist_dims(&self) -> Option<Vec<u64>> {
        self.twists.iter().map(restricted_dim).collect()
    }

    /// Factor by which the twists multiply the length of the base module.
    pub fn length_multiplier(&self) -> Option<u64> {
        self.twist_dims()?.into_iter().try_fold(1u64, |acc, d| acc.checked_mul(d))
    }
}

/// Dimension of the simple `∏ GL(n_k)`-module of a restricted highest weight,
/// known here for blocks of size at most two.
pub fn restricted_dim(mu: &GWeight) -> Option<u64> {
    if !mu.is_restricted(1) {
        return None;
    }
    mu.block_entries().try_fold(1u64, |acc, b| match b.len() {
        1 => Some(acc),
        2 => acc.checked_mul((b[0] - b[1]) as u64 + 1),
        _ => None,
    })
}

/// Iterate `steinberg_step` on the twist until every piece is restricted.
pub fn steinberg_factorize(idx: &SimpleIndex) -> Result<Factorization> {
    let (base, mut mu) = steinberg_step(idx)?;
    let mut twists = Vec::new();
    if !idx.lambda().is_restricted(1) {
        while !mu.is_restricted(1) {
            let (piece, rest) = mu.padic_decompose()?;
            twists.push(piece);
            mu = rest;
        }
        twists.push(mu);
    }
    Ok(Factorization { base, twists })
}
