//! The `A_a = ℚ⟨x, y⟩ / (a·xy − a·yx − x)` experiment: per-parameter
//! dimension intervals, the rescaling isomorphism and its effect on
//! cohomology tables.
//!
//! For `a ≠ 0` the algebra is the enveloping algebra of `[x, y] = x/a`, so
//! cohomology is Chevalley–Eilenberg cohomology of a two-dimensional Lie
//! algebra and vanishes above level 2 for every coefficient module. The
//! lower bound comes from scanning character modules `(0, t)`. For `a = 0`
//! the algebra collapses to `ℚ[y]`, whose two-term resolution bounds
//! everything above level 1, and the algebra over itself witnesses level 1.

use hcdim_core::hochschild::{hh_polyline, ug_profile, GradedModule, HHProfile, HHValue, UgCoefficients};
use hcdim_core::lie::{adjoint_tower, character_module, tower_colimit_ranks, GModule, LieAlgebra};
use hcdim_core::linalg::rat;
use hcdim_core::ncalg::{
    complete_groebner, family_isomorphism, family_presentation, normal_words, GroebnerBasis, MonomialOrder, Word,
    DEFAULT_DEGREE_BOUND,
};
use hcdim_core::Rational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::Error;

pub const DEFAULT_TRUNCATION: usize = 10;
pub const DEFAULT_N_MAX: usize = 4;

fn default_grid() -> Vec<Rational> {
    [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)]
        .into_iter()
        .map(|(n, d)| rat(n, d))
        .collect()
}

/// Parameter values probed by `verify-paper` when no grid is given.
pub fn default_a_grid() -> Vec<Rational> {
    default_grid()
}

/// Values `t` of the characters `(0, t)` tried as witnesses.
pub fn default_character_grid() -> Vec<Rational> {
    default_grid()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub a_grid: Vec<Rational>,
    pub character_grid: Vec<Rational>,
    pub truncation: usize,
    pub n_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            a_grid: default_a_grid(),
            character_grid: default_character_grid(),
            truncation: DEFAULT_TRUNCATION,
            n_max: DEFAULT_N_MAX,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LevelValue {
    Dimension {
        dimension: usize,
    },
    Degreewise {
        dims: Vec<usize>,
    },
    Tower {
        per_stage: Vec<usize>,
        lower_bound: usize,
        stabilized: Option<usize>,
    },
}

impl LevelValue {
    /// Compact rendering used in CSV cells.
    pub fn cell(&self) -> String {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(";");
        match self {
            LevelValue::Dimension { dimension } => dimension.to_string(),
            LevelValue::Degreewise { dims } => join(dims),
            LevelValue::Tower {
                per_stage,
                lower_bound,
                stabilized,
            } => {
                let stab = stabilized.map_or_else(|| "none".to_string(), |s| s.to_string());
                format!("stages={} lower={lower_bound} stabilized={stab}", join(per_stage))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub n: usize,
    pub value: LevelValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRecord {
    pub algebra: String,
    pub coefficients: String,
    pub levels: Vec<LevelRecord>,
    pub structural_vanishing_above: usize,
}

impl From<&HHProfile> for ProfileRecord {
    fn from(p: &HHProfile) -> Self {
        ProfileRecord {
            algebra: p.algebra.clone(),
            coefficients: p.coefficients.clone(),
            levels: p
                .dims
                .iter()
                .map(|(n, v)| LevelRecord {
                    n: *n,
                    value: match v {
                        HHValue::Dimension(d) => LevelValue::Dimension { dimension: *d },
                        HHValue::Degreewise(ds) => LevelValue::Degreewise { dims: ds.clone() },
                        HHValue::Tower {
                            per_stage,
                            lower_bound,
                            stabilized,
                        } => LevelValue::Tower {
                            per_stage: per_stage.clone(),
                            lower_bound: *lower_bound,
                            stabilized: *stabilized,
                        },
                    },
                })
                .collect(),
            structural_vanishing_above: p.structural_vanishing_above,
        }
    }
}

/// Coefficients that realize the lower bound of a row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessKind {
    /// The one-dimensional module with `x ↦ values[0]`, `y ↦ values[1]`.
    Character { values: Vec<String> },
    /// The algebra as a bimodule over itself, checked degree by degree.
    Regular { degree_bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub level: usize,
    pub kind: WitnessKind,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    /// `"exact"` when the bounds meet, otherwise `"inconclusive"`.
    pub status: String,
    pub upper_reason: String,
}

impl Verdict {
    fn new(lower: usize, upper: usize, upper_reason: &str) -> Self {
        let exact = lower == upper;
        Verdict {
            lower,
            upper,
            exact,
            status: if exact { "exact" } else { "inconclusive" }.to_string(),
            upper_reason: upper_reason.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    /// Canonical `p/q` (or integer) form.
    pub a: String,
    pub profile: ProfileRecord,
    pub witness: Option<Witness>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub truncation: usize,
    pub n_max: usize,
    pub character_grid: Vec<String>,
    pub rows: Vec<FamilyRow>,
}

const UG_UPPER: &str = "Chevalley-Eilenberg complex of a 2-dimensional Lie algebra has no cochains above level 2";
const LINE_UPPER: &str = "two-term bimodule resolution of Q[y] has no terms above level 1";

fn basis(a: &Rational) -> Result<GroebnerBasis, Error> {
    let gb = complete_groebner(&family_presentation(a), &MonomialOrder::deglex(2), DEFAULT_DEGREE_BOUND)?;
    if !gb.is_complete() {
        return Err(Error::Incomplete(a.to_string()));
    }
    Ok(gb)
}

/// Confirms the PBW shape `dim = d + 1` of every degree up to `truncation`,
/// so that `A_a` really is the enveloping algebra of its commutator Lie
/// algebra.
fn check_pbw(gb: &GroebnerBasis, a: &Rational, truncation: usize) -> Result<(), Error> {
    for d in 0..=truncation {
        let found = normal_words(gb, d)?.len();
        if found != d + 1 {
            return Err(Error::Shape(format!(
                "A_{a} has {found} normal words in degree {d}, expected {}",
                d + 1
            )));
        }
    }
    Ok(())
}

/// `A_0` over itself as a graded module, after checking that its normal
/// words are exactly the powers of `y`.
pub fn polynomial_line_module(truncation: usize) -> Result<GradedModule, Error> {
    let gb = basis(&Rational::zero())?;
    for d in 0..=truncation {
        if normal_words(&gb, d)? != vec![Word::new(vec![1; d])] {
            return Err(Error::Shape(format!("A_0 is not Q[y] in degree {d}")));
        }
    }
    Ok(GradedModule::from_commutator(&gb, 1, truncation)?)
}

fn polyline_profile(truncation: usize, n_max: usize) -> Result<HHProfile, Error> {
    let m = polynomial_line_module(truncation)?;
    let dims = (0..=n_max)
        .map(|n| Ok((n, HHValue::Degreewise(hh_polyline(&m, n, truncation)?))))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(HHProfile::new("A_0".into(), "A_0".into(), dims, 1)?)
}

fn character_label(t: &Rational) -> String {
    format!("character (0, {t})")
}

fn zero_row(truncation: usize, n_max: usize) -> Result<FamilyRow, Error> {
    let profile = polyline_profile(truncation, n_max)?;
    let lower = profile.top_nonzero().unwrap_or(0);
    let witness = (lower > 0).then(|| Witness {
        level: lower,
        kind: WitnessKind::Regular {
            degree_bound: truncation,
        },
        description: format!("A_0 over itself, HH^{lower} degreewise dims all 1 up to degree {truncation}"),
    });
    Ok(FamilyRow {
        a: "0".into(),
        profile: (&profile).into(),
        witness,
        verdict: Verdict::new(lower, profile.structural_vanishing_above, LINE_UPPER),
    })
}

fn nonzero_row(a: &Rational, config: &VerifyConfig) -> Result<FamilyRow, Error> {
    check_pbw(&basis(a)?, a, config.truncation)?;
    let g = LieAlgebra::family(a)?;
    let mut best: Option<(usize, &Rational, HHProfile)> = None;
    for t in &config.character_grid {
        let chi = character_module(&g, &[Rational::zero(), t.clone()])?;
        let profile = ug_profile(
            &format!("A_{a}"),
            &character_label(t),
            &g,
            UgCoefficients::Module(&chi),
            config.n_max,
        )?;
        let top = profile.top_nonzero().unwrap_or(0);
        if best.as_ref().is_none_or(|(b, _, _)| top > *b) {
            best = Some((top, t, profile));
        }
    }
    let (lower, t, profile) = best.ok_or_else(|| Error::Usage("character grid is empty".into()))?;
    let witness = Witness {
        level: lower,
        kind: WitnessKind::Character {
            values: vec!["0".into(), t.to_string()],
        },
        description: character_label(t),
    };
    Ok(FamilyRow {
        a: a.to_string(),
        profile: (&profile).into(),
        witness: Some(witness),
        verdict: Verdict::new(lower, g.dim(), UG_UPPER),
    })
}

/// Dimension interval for every parameter in the grid. Rows are computed
/// independently and kept in grid order.
pub fn verify_paper(config: &VerifyConfig) -> Result<FamilyReport, Error> {
    if config.truncation < 2 {
        return Err(Error::Usage(format!(
            "truncation must be at least 2, got {}",
            config.truncation
        )));
    }
    if config.n_max < 3 {
        return Err(Error::Usage(format!("n-max must be at least 3, got {}", config.n_max)));
    }
    let rows = config
        .a_grid
        .par_iter()
        .map(|a| {
            if a.is_zero() {
                zero_row(config.truncation, config.n_max)
            } else {
                nonzero_row(a, config)
            }
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(FamilyReport {
        truncation: config.truncation,
        n_max: config.n_max,
        character_grid: config.character_grid.iter().map(Rational::to_string).collect(),
        rows,
    })
}

/// Recomputes the cohomology of a row's named witness at its level.
pub fn rerun_witness(a: &Rational, witness: &Witness) -> Result<usize, Error> {
    match &witness.kind {
        WitnessKind::Character { values } => {
            let g = LieAlgebra::family(a)?;
            let vals = values
                .iter()
                .map(|v| hcdim_core::parse_rational(v).map_err(|e| Error::Usage(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            let chi = character_module(&g, &vals)?;
            let dims = hcdim_core::lie::ce_cohomology_dims(&g, &chi, witness.level)?;
            Ok(dims[witness.level])
        }
        WitnessKind::Regular { degree_bound } => {
            let m = polynomial_line_module(*degree_bound)?;
            Ok(hh_polyline(&m, witness.level, *degree_bound)?.into_iter().sum())
        }
    }
}

/// Cohomology of `A_a`: with the given module over `[x, y] = x/a`, or with
/// the algebra itself (adjoint truncation tower up to `truncation`). For
/// `a = 0` only the algebra itself is supported.
pub fn family_hh_profile(
    a: &Rational,
    truncation: usize,
    n_max: usize,
    module: Option<&GModule>,
) -> Result<HHProfile, Error> {
    if a.is_zero() {
        if module.is_some() {
            return Err(Error::Usage(
                "A_0 coefficients other than the algebra itself are not supported".into(),
            ));
        }
        return polyline_profile(truncation, n_max);
    }
    let g = LieAlgebra::family(a)?;
    let label = format!("A_{a}");
    match module {
        Some(m) => Ok(ug_profile(
            &label,
            "input module",
            &g,
            UgCoefficients::Module(m),
            n_max,
        )?),
        None => {
            let tower = adjoint_tower(&basis(a)?, &g, truncation)?;
            Ok(ug_profile(
                &label,
                &format!("{label} (truncated at degree {truncation})"),
                &g,
                UgCoefficients::Tower(&tower),
                n_max,
            )?)
        }
    }
}

/// Outcome of comparing `A_a` with `A_1` along the rescaling isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiComparison {
    pub a: String,
    /// The map `A_a -> A_1` that was verified is `y ↦ forward_scale·y`.
    pub forward_scale: String,
    pub y_times_a_is_homomorphism: bool,
    pub y_over_a_is_homomorphism: bool,
    pub inverse_pair_verified: bool,
    /// Per-stage adjoint tower dimensions for levels 0, 1, 2.
    pub tables_a: Vec<Vec<usize>>,
    pub tables_one: Vec<Vec<usize>>,
    pub tables_equal: bool,
}

impl PsiComparison {
    pub fn holds(&self) -> bool {
        self.inverse_pair_verified && self.tables_equal
    }
}

fn tower_tables(a: &Rational, truncation: usize) -> Result<Vec<Vec<usize>>, Error> {
    let g = LieAlgebra::family(a)?;
    let tower = adjoint_tower(&basis(a)?, &g, truncation)?;
    (0..=2)
        .map(|n| Ok(tower_colimit_ranks(&g, &tower, n)?.per_stage))
        .collect()
}

pub fn psi_comparison(a: &Rational, truncation: usize) -> Result<PsiComparison, Error> {
    let iso = family_isomorphism(a, DEFAULT_DEGREE_BOUND)?;
    let tables_a = tower_tables(a, truncation)?;
    let tables_one = tower_tables(&rat(1, 1), truncation)?;
    Ok(PsiComparison {
        a: a.to_string(),
        forward_scale: iso.forward_scale.to_string(),
        y_times_a_is_homomorphism: iso.y_times_a_is_homomorphism,
        y_over_a_is_homomorphism: iso.y_over_a_is_homomorphism,
        inverse_pair_verified: iso.check.is_isomorphism(),
        tables_equal: tables_a == tables_one,
        tables_a,
        tables_one,
    })
}

/// True iff a two-sided inverse pair `A_a ⇄ A_1` is verified and the
/// adjoint tower tables of both algebras agree at levels 0, 1, 2.
pub fn psi_profile_compare(a: &Rational, truncation: usize) -> Result<bool, Error> {
    Ok(psi_comparison(a, truncation)?.holds())
}
