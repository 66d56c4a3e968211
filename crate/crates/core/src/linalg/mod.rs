//! Sparse exact linear algebra over the rationals.

mod complex;
mod matrix;
mod rank;
mod rref;

pub use complex::ChainComplexSlice;
pub use matrix::{RationalMatrix, SparseVec};
pub use rank::rank;
pub use rref::{in_span, kernel_basis, Rref};
