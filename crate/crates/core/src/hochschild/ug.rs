use alloc::string::String;
use alloc::vec::Vec;

use super::{HHProfile, HHValue, HochschildError};
use crate::lie::{ce_cohomology_dims, tower_colimit_ranks, GModule, LieAlgebra, ModuleTower, TowerProfile};

/// Coefficients for `HH^•(U(g), −)`, already in commutator form.
#[derive(Debug, Clone, Copy)]
pub enum UgCoefficients<'a> {
    Module(&'a GModule),
    Tower(&'a ModuleTower),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UgValue {
    /// `structural` is set when `n > dim g`, where no cochains exist.
    Dimension {
        dim: usize,
        structural: bool,
    },
    Tower(TowerProfile),
}

/// `HH^n(U(g), M)` computed as `H^n(g, M_ad)` from the Chevalley–Eilenberg
/// complex, whose length is `dim g`.
pub fn hh_ug(g: &LieAlgebra, coeff: UgCoefficients<'_>, n: usize) -> Result<UgValue, HochschildError> {
    match coeff {
        UgCoefficients::Module(v) => {
            if n > g.dim() {
                return Ok(UgValue::Dimension {
                    dim: 0,
                    structural: true,
                });
            }
            let dims = ce_cohomology_dims(g, v, n)?;
            Ok(UgValue::Dimension {
                dim: dims[n],
                structural: false,
            })
        }
        UgCoefficients::Tower(t) => Ok(UgValue::Tower(tower_colimit_ranks(g, t, n)?)),
    }
}

/// Profile of `HH^n(U(g), M)` for `n = 0..=n_max`.
pub fn ug_profile(
    algebra: &str,
    coefficients: &str,
    g: &LieAlgebra,
    coeff: UgCoefficients<'_>,
    n_max: usize,
) -> Result<HHProfile, HochschildError> {
    let dims = match coeff {
        UgCoefficients::Module(v) => ce_cohomology_dims(g, v, n_max)?
            .into_iter()
            .enumerate()
            .map(|(n, d)| (n, HHValue::Dimension(d)))
            .collect::<Vec<_>>(),
        UgCoefficients::Tower(t) => (0..=n_max)
            .map(|n| {
                let p = tower_colimit_ranks(g, t, n)?;
                Ok((
                    n,
                    HHValue::Tower {
                        per_stage: p.per_stage,
                        lower_bound: p.lower_bound,
                        stabilized: p.stabilized,
                    },
                ))
            })
            .collect::<Result<Vec<_>, HochschildError>>()?,
    };
    HHProfile::new(String::from(algebra), String::from(coefficients), dims, g.dim())
}
