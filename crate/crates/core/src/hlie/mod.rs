//! The weak modular operad `H_Lie` truncated to genus at most one.
//!
//! Genus zero spaces are one dimensional in degree 0 (commutative products).
//! The degree `i` genus one space on a flag set `F` is modelled as
//! `Λ^i Q^F / (u ∧ Λ^{i-1} Q^F)` with `u` the sum of all flags; this is the
//! span of the orbit of the basic composition relation. Classes are kept
//! in normal form: no monomial contains the largest flag.

mod classes;
mod compose;
mod massey;
mod model;
mod mu;

pub use classes::{alpha, kernel_identity, loop_sum, m_t, x_class, KernelIdentity};
pub use compose::{compose_edge, self_glue, OperadElement};
pub use massey::{massey_closed_form, massey_polygon, BlowUpOrder, LabeledPolygon};
pub use model::{model_dimension, relation_basis, GenusOneClass};
pub use mu::{mu, mu_on_nest};
