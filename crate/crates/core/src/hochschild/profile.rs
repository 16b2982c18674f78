use alloc::string::String;
use alloc::vec::Vec;

use super::HochschildError;

/// A Hochschild cohomology value at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HHValue {
    Dimension(usize),
    /// One dimension per internal degree `0..=bound`.
    Degreewise(Vec<usize>),
    /// Coefficients exhausted by a tower of finite stages.
    Tower {
        per_stage: Vec<usize>,
        lower_bound: usize,
        stabilized: Option<usize>,
    },
}

impl HHValue {
    /// Certified nonvanishing.
    pub fn is_nonzero(&self) -> bool {
        match self {
            HHValue::Dimension(d) => *d > 0,
            HHValue::Degreewise(ds) => ds.iter().any(|&d| d > 0),
            HHValue::Tower { lower_bound, .. } => *lower_bound > 0,
        }
    }

    /// Every computed number is zero.
    pub fn is_zero(&self) -> bool {
        match self {
            HHValue::Dimension(d) => *d == 0,
            HHValue::Degreewise(ds) => ds.iter().all(|&d| d == 0),
            HHValue::Tower { per_stage, .. } => per_stage.iter().all(|&d| d == 0),
        }
    }
}

/// Hochschild cohomology of one algebra with one coefficient bimodule over a
/// range of levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HHProfile {
    pub algebra: String,
    pub coefficients: String,
    pub dims: Vec<(usize, HHValue)>,
    /// Length of the resolution used; every level above it is zero.
    pub structural_vanishing_above: usize,
}

impl HHProfile {
    pub fn new(
        algebra: String,
        coefficients: String,
        dims: Vec<(usize, HHValue)>,
        structural_vanishing_above: usize,
    ) -> Result<Self, HochschildError> {
        if let Some((level, _)) = dims
            .iter()
            .find(|(n, v)| *n > structural_vanishing_above && !v.is_zero())
        {
            return Err(HochschildError::StructuralViolation {
                level: *level,
                bound: structural_vanishing_above,
            });
        }
        Ok(HHProfile {
            algebra,
            coefficients,
            dims,
            structural_vanishing_above,
        })
    }

    /// Largest level with certified nonzero cohomology.
    pub fn top_nonzero(&self) -> Option<usize> {
        self.dims.iter().filter(|(_, v)| v.is_nonzero()).map(|(n, _)| *n).max()
    }

    pub fn value(&self, n: usize) -> Option<&HHValue> {
        self.dims.iter().find(|(k, _)| *k == n).map(|(_, v)| v)
    }
}
