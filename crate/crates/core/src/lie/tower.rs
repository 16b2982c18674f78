use alloc::vec::Vec;

use super::{ce_complex, cochain_map, LieAlgebra, LieError, ModuleTower};
use crate::linalg::induced_cohomology_rank;

/// Cohomology of a module tower at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerProfile {
    pub level: usize,
    /// `dim H^level(g, stage_k)` for every stage.
    pub per_stage: Vec<usize>,
    /// `composite_ranks[j]` is the rank of `H^level(stage_j) -> H^level(last stage)`
    /// for every stage `j` before the last.
    pub composite_ranks: Vec<usize>,
    /// Largest composite rank: classes that survive into the last stage.
    pub lower_bound: usize,
    /// Set when the last three windows inject isomorphically into the last
    /// stage and all four stage dimensions agree.
    pub stabilized: Option<usize>,
    /// The level is above `dim g`, so every entry is zero for structural
    /// reasons.
    pub structural_zero: bool,
}

/// Per-stage `H^n` dimensions of a tower and ranks of the maps from every
/// stage into the last one.
pub fn tower_colimit_ranks(g: &LieAlgebra, tower: &ModuleTower, n: usize) -> Result<TowerProfile, LieError> {
    let stages = tower.stages();
    if stages.len() < 2 {
        return Err(LieError::TowerTooShort);
    }
    let structural_zero = n > g.dim();
    let complexes = stages.iter().map(|v| ce_complex(g, v)).collect::<Result<Vec<_>, _>>()?;
    let per_stage: Vec<usize> = complexes
        .iter()
        .map(|c| c.cohomology_dims().get(n).copied().unwrap_or(0))
        .collect();
    let last = stages.len() - 1;
    let mut composite_ranks = Vec::with_capacity(last);
    for j in 0..last {
        let f = tower.inclusion_between(j, last)?;
        let maps = cochain_map(g, &f)?;
        composite_ranks.push(induced_cohomology_rank(&complexes[j], &complexes[last], &maps, n)?);
    }
    let lower_bound = composite_ranks.iter().copied().max().unwrap_or(0);
    let stabilized = (last >= 3
        && (last - 3..last).all(|j| composite_ranks[j] == per_stage[j] && per_stage[j] == per_stage[last]))
    .then_some(per_stage[last]);
    Ok(TowerProfile {
        level: n,
        per_stage,
        composite_ranks,
        lower_bound,
        stabilized,
        structural_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::adjoint_tower;
    use crate::linalg::rat;
    use crate::ncalg::{complete_groebner, family_presentation, MonomialOrder};

    fn a1_tower(top: usize) -> (LieAlgebra, ModuleTower) {
        let g = LieAlgebra::nonabelian_2d();
        let gb = complete_groebner(&family_presentation(&rat(1, 1)), &MonomialOrder::deglex(2), 12).unwrap();
        let t = adjoint_tower(&gb, &g, top).unwrap();
        (g, t)
    }

    #[test]
    fn center_is_the_scalars() {
        let (g, t) = a1_tower(6);
        let p = tower_colimit_ranks(&g, &t, 0).unwrap();
        assert!(p.per_stage.iter().all(|&d| d == 1));
        assert_eq!(p.lower_bound, 1);
        assert_eq!(p.stabilized, Some(1));
    }

    #[test]
    fn derivation_class_survives() {
        let (g, t) = a1_tower(6);
        let p = tower_colimit_ranks(&g, &t, 1).unwrap();
        assert!(p.lower_bound >= 1, "{p:?}");
    }

    #[test]
    fn level_three_vanishes_structurally() {
        let (g, t) = a1_tower(3);
        let p = tower_colimit_ranks(&g, &t, 3).unwrap();
        assert!(p.structural_zero);
        assert!(p.per_stage.iter().all(|&d| d == 0));
        assert_eq!(p.lower_bound, 0);
    }

    #[test]
    fn single_stage_is_rejected() {
        let (g, t) = a1_tower(0);
        assert_eq!(tower_colimit_ranks(&g, &t, 0), Err(LieError::TowerTooShort));
    }
}
