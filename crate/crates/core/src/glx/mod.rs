//! Combinatorics of the general linear group `GL(X)` of an object `X` of
//! `Ver_p`: shapes, weights, roots, subgroup descriptors, simple-module
//! labels and the Steinberg factorization of those labels.

pub mod hc;
pub mod roots;
pub mod shape;
pub mod steinberg;
pub mod vtuple;
pub mod weight;

pub use hc::{hc_pair, kernel_coord_dims, EvenFactor, HCPair, KernelDims, LieSlot, Selector};
pub use roots::{
    diagonal_space, gl_content, positive_roots, root_space, roots, simple_roots, Root, RootClass, TensorSlot,
};
pub use shape::{Block, GLXShape};
pub use steinberg::{restricted_dim, steinberg_factorize, steinberg_step, Factorization};
pub use vtuple::{frobkernel_equiv, plus_labels, SimpleIndex, VTuple};
pub use weight::GWeight;
