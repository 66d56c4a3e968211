//! Feynman transforms `B(P)` for `P = Com` and `P = H_Lie`.
//!
//! A basis element is a canonical stable graph, the increasing order of its
//! edges, and a coinvariant label. The differential contracts a nest and
//! composes the labels on it with the operation of the nest.

mod chain;
mod complex;
mod differential;
mod gc2;
mod summand;
mod wheel;

use std::fmt;
use std::str::FromStr;

pub use chain::{BasisRef, ChainJson, LabeledChain, TermJson};
pub use complex::{build_complex, ComplexOptions, FeynmanComplex};
pub use differential::{odd_cycles, DifferentialMode, FeynmanTransform, GraphPredicate};
pub use gc2::{gc2_graphs, gc2_slice, Gc2Slice};
pub use summand::{LabelTuple, Summand, SummandKey};
pub use wheel::{
    beta, omega_chain, omega_graph, polygon_count_formula, theta_coefficient, theta_graph, x_labeled_polygon_legs,
    x_labeled_polygons, ThetaCoefficient,
};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Operad {
    Com,
    HLie,
}

impl Operad {
    /// Largest vertex genus carrying a nonzero label.
    pub fn max_vertex_genus(self) -> u32 {
        match self {
            Operad::Com => 0,
            Operad::HLie => 1,
        }
    }
}

impl fmt::Display for Operad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operad::Com => "Com",
            Operad::HLie => "HLie",
        })
    }
}

impl FromStr for Operad {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "com" => Ok(Operad::Com),
            "hlie" | "h_lie" => Ok(Operad::HLie),
            _ => Err(Error::Parse(format!("unknown operad {s:?}"))),
        }
    }
}
