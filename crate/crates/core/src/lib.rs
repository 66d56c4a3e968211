//! Exact computations with graph complexes and the genus-one truncation of
//! Lie graph homology.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: modular graphs, canonical forms, automorphisms, nests and
//!   isomorphism-free enumeration.
//! * [`orientation`]: mod-2 edge orders and the signs they produce.
//! * [`linalg`]: sparse exact rational linear algebra.
//! * [`symrep`]: characters of symmetric groups and the restrictions used to
//!   analyse hooks.
//! * [`hlie`]: the weak modular operad `H_Lie` in genus at most one, including
//!   the odd polygon Massey products.
//! * [`feynman`]: the co-Feynman transform as an explicit based chain complex,
//!   wheel and theta graphs, and the `GC_2` slices.
//! * [`verify`]: certificate producing checks built on top of everything else.

pub mod error;
pub mod feynman;
pub mod graph;
pub mod hlie;
pub mod linalg;
pub mod orientation;
pub mod rational;
pub mod symrep;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Q;
