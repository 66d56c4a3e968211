use std::collections::BTreeMap;

use super::{rank, RationalMatrix};
use crate::error::{Error, Result};

/// A window of a chain complex: dimensions per degree and boundary maps
/// `d: C_k -> C_{k-1}` stored under `k`.
#[derive(Clone, Debug, Default)]
pub struct ChainComplexSlice {
    pub dims: BTreeMap<i64, usize>,
    pub boundaries: BTreeMap<i64, RationalMatrix>,
}

impl ChainComplexSlice {
    pub fn dim(&self, k: i64) -> usize {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    fn boundary_rank(&self, k: i64) -> usize {
        self.boundaries.get(&k).map_or(0, rank)
    }

    /// Checks `d_k ∘ d_{k+1} = 0`.
    pub fn check_square_zero(&self, k: i64) -> Result<()> {
        if let (Some(a), Some(b)) = (self.boundaries.get(&k), self.boundaries.get(&(k + 1))) {
            if !a.mul(b)?.is_zero() {
                return Err(Error::NotAComplex { degree: k });
            }
        }
        Ok(())
    }

    pub fn homology_rank(&self, k: i64) -> Result<usize> {
        self.check_square_zero(k)?;
        let out = self.boundary_rank(k);
        let inc = self.boundary_rank(k + 1);
        Ok(self.dim(k) - out - inc)
    }
}
