//! Exact computations in the Verlinde categories `Ver_p` and `Ver_p(SL(n))`,
//! weight combinatorics for `GL(X)` with `X` an object of `Ver_p`, and a
//! Steinberg tensor-product factorization engine.
//!
//! Every decision procedure in this crate is exact: cyclotomic numbers are
//! kept as rational coefficient vectors, Jordan types come from rank
//! sequences over `F_p`, and the `SL(2)` oracles in [`charoracle`] build
//! modules from explicit matrices.

pub mod charoracle;
pub mod cli;
pub mod error;
pub mod fp;
pub mod glx;
pub mod prime;
pub mod qcyclo;
pub mod verp;
pub mod versln;

pub use error::{Error, Result};
pub use prime::Prime;
