use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{LieAlgebra, LieError};
use crate::linalg::{rank, Rational, SparseMatrix};
use crate::ncalg::{normal_form, normal_words_up_to, GroebnerBasis, NcPolynomial, Word};

/// Finite-dimensional module over a Lie algebra: one `dim x dim` action
/// matrix per basis element of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GModule {
    dim: usize,
    actions: Vec<SparseMatrix>,
}

impl GModule {
    /// Checks `rho([e_i, e_j]) = rho(e_i) rho(e_j) - rho(e_j) rho(e_i)` for
    /// every pair of basis elements.
    pub fn new(g: &LieAlgebra, dim: usize, actions: Vec<SparseMatrix>) -> Result<Self, LieError> {
        if actions.len() != g.dim() || actions.iter().any(|a| a.rows() != dim || a.cols() != dim) {
            return Err(LieError::Shape);
        }
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let comm = actions[i].mul(&actions[j])?.sub(&actions[j].mul(&actions[i])?)?;
                let mut bracket = SparseMatrix::zeros(dim, dim);
                for (k, c) in g.bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        bracket = bracket.add(&actions[k].scale(c))?;
                    }
                }
                if comm != bracket {
                    return Err(LieError::ModuleAxiom(i, j));
                }
            }
        }
        Ok(GModule { dim, actions })
    }

    pub fn trivial(g: &LieAlgebra, dim: usize) -> Self {
        GModule {
            dim,
            actions: (0..g.dim()).map(|_| SparseMatrix::zeros(dim, dim)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[SparseMatrix] {
        &self.actions
    }

    pub fn action(&self, i: usize) -> &SparseMatrix {
        &self.actions[i]
    }
}

/// One-dimensional module `e_i ↦ values[i]`. The values must vanish on every
/// bracket, since scalars commute.
pub fn character_module(g: &LieAlgebra, values: &[Rational]) -> Result<GModule, LieError> {
    if values.len() != g.dim() {
        return Err(LieError::Shape);
    }
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let on_bracket: Rational = g.bracket(i, j).iter().zip(values).map(|(c, v)| c * v).sum();
            if !on_bracket.is_zero() {
                return Err(LieError::NotACharacter(i, j));
            }
        }
    }
    let actions = values
        .iter()
        .map(|v| SparseMatrix::from_triplets(1, 1, [(0, 0, v.clone())]))
        .collect::<Result<Vec<_>, _>>()?;
    GModule::new(g, 1, actions)
}

/// [`adjoint_truncation`] together with its basis of normal words, ordered
/// by degree and then by the basis order.
pub fn adjoint_truncation_with_basis(
    gb: &GroebnerBasis,
    g: &LieAlgebra,
    max_degree: usize,
) -> Result<(Vec<Word>, GModule), LieError> {
    if g.dim() != gb.generator_count() {
        return Err(LieError::GeneratorMismatch {
            lie: g.dim(),
            algebra: gb.generator_count(),
        });
    }
    let basis = normal_words_up_to(gb, max_degree)?;
    let index: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let n = basis.len();
    let mut actions = Vec::with_capacity(g.dim());
    for gen in 0..g.dim() {
        let letter = Word::letter(gen);
        let mut m = SparseMatrix::zeros(n, n);
        for (col, w) in basis.iter().enumerate() {
            let comm = NcPolynomial::from_terms([
                (letter.concat(w), Rational::from_integer(1.into())),
                (w.concat(&letter), Rational::from_integer((-1).into())),
            ]);
            for (tw, c) in normal_form(&comm, gb).terms() {
                let row = *index.get(tw).ok_or_else(|| LieError::ClosureViolation {
                    generator: gen,
                    word: tw.clone(),
                })?;
                m.set(row, col, c.clone())?;
            }
        }
        actions.push(m);
    }
    let module = GModule::new(g, n, actions)?;
    Ok((basis, module))
}

/// The span of normal words of degree `<= max_degree` in the quotient
/// described by `gb`, as a module over `g` through commutators with the
/// generators (`e_i` acts as `[generator i, -]`).
pub fn adjoint_truncation(gb: &GroebnerBasis, g: &LieAlgebra, max_degree: usize) -> Result<GModule, LieError> {
    adjoint_truncation_with_basis(gb, g, max_degree).map(|(_, m)| m)
}

/// An increasing chain of modules `stages[0] ⊂ stages[1] ⊂ ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleTower {
    stages: Vec<GModule>,
    inclusions: Vec<SparseMatrix>,
}

impl ModuleTower {
    /// `inclusions[k]` maps stage `k` into stage `k + 1`; each must be
    /// injective and commute with every action.
    pub fn new(g: &LieAlgebra, stages: Vec<GModule>, inclusions: Vec<SparseMatrix>) -> Result<Self, LieError> {
        if stages.is_empty() || inclusions.len() + 1 != stages.len() {
            return Err(LieError::Shape);
        }
        for (k, inc) in inclusions.iter().enumerate() {
            let (src, dst) = (&stages[k], &stages[k + 1]);
            if inc.cols() != src.dim() || inc.rows() != dst.dim() || rank(inc) != src.dim() {
                return Err(LieError::NotAnInclusion(k));
            }
            for i in 0..g.dim() {
                if inc.mul(src.action(i))? != dst.action(i).mul(inc)? {
                    return Err(LieError::NotAnInclusion(k));
                }
            }
        }
        Ok(ModuleTower { stages, inclusions })
    }

    pub fn stages(&self) -> &[GModule] {
        &self.stages
    }

    pub fn inclusions(&self) -> &[SparseMatrix] {
        &self.inclusions
    }

    /// Composite inclusion of stage `from` into stage `to` (`from <= to`).
    pub fn inclusion_between(&self, from: usize, to: usize) -> Result<SparseMatrix, LieError> {
        let mut m = SparseMatrix::identity(self.stages[from].dim());
        for k in from..to {
            m = self.inclusions[k].mul(&m)?;
        }
        Ok(m)
    }
}

/// Adjoint truncations for degrees `0..=top`, included into each other.
pub fn adjoint_tower(gb: &GroebnerBasis, g: &LieAlgebra, top: usize) -> Result<ModuleTower, LieError> {
    let stages = (0..=top)
        .map(|n| adjoint_truncation(gb, g, n))
        .collect::<Result<Vec<_>, _>>()?;
    let inclusions = stages
        .windows(2)
        .map(|w| {
            // Each basis extends the previous one, so the inclusion is a
            // coordinate embedding.
            SparseMatrix::from_triplets(
                w[1].dim(),
                w[0].dim(),
                (0..w[0].dim()).map(|i| (i, i, Rational::from_integer(1.into()))),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    ModuleTower::new(g, stages, inclusions)
}
