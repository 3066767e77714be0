//! Independent character oracles for the even part of the factorization.
//!
//! Everything here is computed by brute force over `F_p`: simple modules are
//! quotients of baby Verma modules by their maximal submodules, and the
//! Steinberg tensor product is built from explicit matrices. None of it
//! calls into the factorization engine it is used to check.

pub mod laurent;
pub mod sl2;

pub use laurent::{schur_char, LaurentChar};
pub use sl2::{
    baby_verma_sl2, dist2_baby_verma, dist2_simple_sl2, restricted_simple_sl2, steinberg_sl2_check,
    steinberg_tensor, u_simplicity_check, Dist2Module, SL2Module,
};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::glx::{steinberg_factorize, GWeight, SimpleIndex};
use crate::prime::Prime;

/// `GL(2)` character from an `SL(2)` weight multiset and the determinant
/// part: weight `w` of total degree `tot` becomes `((tot + w)/2, (tot - w)/2)`.
fn gl2_from_sl2(ch: &BTreeMap<i64, u64>, tot: i64) -> LaurentChar {
    let mut out = LaurentChar::zero(2);
    for (&w, &m) in ch {
        debug_assert_eq!((tot + w) % 2, 0);
        out.add_term(vec![(tot + w) / 2, (tot - w) / 2], m);
    }
    out
}

fn check_supported(lambda: &GWeight) -> Result<()> {
    let shape = lambda.shape();
    if !shape.is_ordinary() {
        return Err(Error::Unsupported(format!("character oracle needs L1 summands only, got {shape}")));
    }
    if shape.blocks().any(|b| b.size > 2) {
        return Err(Error::Unsupported(format!("character oracle needs blocks of size <= 2, got {shape}")));
    }
    Ok(())
}

/// `ch L(λ)` computed directly from the level-two simple `SL(2)` modules.
pub fn direct_char(p: Prime, lambda: &GWeight) -> Result<LaurentChar> {
    check_supported(lambda)?;
    let q = p.as_i64();
    let mut out = LaurentChar::one(0);
    for b in lambda.block_entries() {
        let piece = match b {
            [a] => LaurentChar::monomial(vec![*a], 1),
            [a, c] => {
                let d = a - c;
                if d >= q * q {
                    return Err(Error::Unsupported(format!("difference {d} needs level three or more")));
                }
                gl2_from_sl2(&dist2_simple_sl2(p, d as u32)?.character(), a + c)
            }
            _ => unreachable!("block sizes checked"),
        };
        out = out.outer(&piece);
    }
    Ok(out)
}

/// `ch L_0(μ)` for a restricted weight, from the level-one simples.
pub fn restricted_char(p: Prime, mu: &GWeight) -> Result<LaurentChar> {
    check_supported(mu)?;
    if !mu.is_restricted(1) {
        return Err(Error::invalid(format!("{mu} is not restricted")));
    }
    let mut out = LaurentChar::one(0);
    for b in mu.block_entries() {
        let piece = match b {
            [a] => LaurentChar::monomial(vec![*a], 1),
            [a, c] => gl2_from_sl2(&restricted_simple_sl2(p, (a - c) as u32)?.character(), a + c),
            _ => unreachable!("block sizes checked"),
        };
        out = out.outer(&piece);
    }
    Ok(out)
}

/// `ch L(λ0) · Π_i dilate(ch L_0(λ_i), p^i)` from the factorization engine.
pub fn factorized_char(idx: &SimpleIndex) -> Result<LaurentChar> {
    let p = idx.shape().prime();
    let f = steinberg_factorize(idx)?;
    let mut out = restricted_char(p, f.base.lambda())?;
    let mut q = 1i64;
    for t in &f.twists {
        q *= p.as_i64();
        out = out.mul(&restricted_char(p, t)?.dilate(q))?;
    }
    Ok(out)
}

/// `ch L(λ) = ch L(λ0) · dilate(ch L(μ))` on ordinary shapes with blocks of
/// size at most two and in-block differences below `p²`.
pub fn verify_factorization_chars(idx: &SimpleIndex) -> Result<bool> {
    let p = idx.shape().prime();
    let lhs = direct_char(p, idx.lambda())?;
    let rhs = factorized_char(idx)?;
    Ok(lhs == rhs)
}
