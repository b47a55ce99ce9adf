//! Exact algebra of symmetric tensors and tensor-valued polynomial fields.
//!
//! The crate has two layers:
//!
//! * [`symtensor`] — dense symmetric tensors in compressed (sorted multi-index)
//!   storage, the symmetric product, the multiplication/contraction pairs
//!   `i_u`/`j_u` and `i`/`j`, and the algebraic Saint Venant symbol acting on
//!   frequency vectors.
//! * [`polyfield`] — symmetric-tensor-valued polynomials with exact
//!   coefficients, the inner derivative, divergence, position contraction,
//!   the Saint Venant operator, and the inversion operator that combines them.
//!
//! Everything is generic over a [`scalar::Scalar`], so the same code runs over
//! exact rationals (for identity verification) and over `f64` (for numerics).
//! All values are immutable after construction and all operations are pure
//! functions; sharing across threads is safe.
//!
//! `no_std` builds (with `alloc`) are supported by disabling the default
//! `std` feature.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod comb;
pub mod polyfield;
pub mod scalar;
pub mod symtensor;

pub use polyfield::{BiSymPolyField, PolyTensorField};
pub use scalar::{Rational, Rational128, Scalar};
pub use symtensor::{BiSymTensor, IndexTable, SymIndex, SymTensor};
