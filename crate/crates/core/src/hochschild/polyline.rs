use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::HochschildError;
use crate::linalg::{kernel_basis, rank, Rational, SparseMatrix};
use crate::ncalg::{normal_form, normal_words, GroebnerBasis, NcPolynomial, Word};

/// A graded bimodule over the polynomial line `ℚ[t]`, recorded degree by
/// degree through the commutator action `m ↦ tm − mt` on each piece. The
/// action must preserve the degree, so each piece is a square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModule {
    pieces: Vec<SparseMatrix>,
}

impl GradedModule {
    pub fn new(pieces: Vec<SparseMatrix>) -> Result<Self, HochschildError> {
        for (d, p) in pieces.iter().enumerate() {
            if p.rows() != p.cols() {
                return Err(HochschildError::GradingViolation(d));
            }
        }
        Ok(GradedModule { pieces })
    }

    /// `ℚ[t]` over itself for degrees `0..=max_degree`: one basis vector per
    /// degree, commutator zero.
    pub fn regular(max_degree: usize) -> Self {
        GradedModule {
            pieces: vec![SparseMatrix::zeros(1, 1); max_degree + 1],
        }
    }

    pub fn zero(max_degree: usize) -> Self {
        GradedModule {
            pieces: vec![SparseMatrix::zeros(0, 0); max_degree + 1],
        }
    }

    /// A quotient algebra with one surviving generator, as a bimodule over
    /// itself: degree `d` is spanned by the normal words of length `d`, and
    /// `generator` acts by commutators. Fails if a commutator leaves its
    /// degree.
    pub fn from_commutator(gb: &GroebnerBasis, generator: usize, max_degree: usize) -> Result<Self, HochschildError> {
        let letter = Word::letter(generator);
        let mut pieces = Vec::with_capacity(max_degree + 1);
        for d in 0..=max_degree {
            let words = normal_words(gb, d)?;
            let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let mut m = SparseMatrix::zeros(words.len(), words.len());
            for (col, w) in words.iter().enumerate() {
                let comm = NcPolynomial::from_terms([
                    (letter.concat(w), Rational::from_integer(1.into())),
                    (w.concat(&letter), Rational::from_integer((-1).into())),
                ]);
                for (tw, c) in normal_form(&comm, gb).terms() {
                    let row = *index.get(tw).ok_or(HochschildError::GradingViolation(d))?;
                    m.set(row, col, c.clone())?;
                }
            }
            pieces.push(m);
        }
        Ok(GradedModule { pieces })
    }

    pub fn pieces(&self) -> &[SparseMatrix] {
        &self.pieces
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.pieces.len().checked_sub(1)
    }

    fn upto(&self, degree_bound: usize) -> Result<&[SparseMatrix], HochschildError> {
        if degree_bound >= self.pieces.len() {
            return Err(HochschildError::DegreeOutOfRange {
                requested: degree_bound,
                available: self.pieces.len().saturating_sub(1),
            });
        }
        Ok(&self.pieces[..=degree_bound])
    }
}

/// Degreewise `dim HH^n(ℚ[t], M)` for degrees `0..=degree_bound`.
pub fn hh_polyline(coeff: &GradedModule, n: usize, degree_bound: usize) -> Result<Vec<usize>, HochschildError> {
    let pieces = coeff.upto(degree_bound)?;
    Ok(match n {
        // HH^0 = kernel of the commutator, HH^1 = its cokernel.
        0 => pieces.iter().map(|p| kernel_basis(p).len()).collect(),
        1 => pieces.iter().map(|p| p.rows() - rank(p)).collect(),
        _ => vec![0; pieces.len()],
    })
}

/// Degreewise `dim HH_0(ℚ[t], M) = dim M / [t, M]`, computed as the kernel of
/// the transposed action.
pub fn hh0_homology_polyline(coeff: &GradedModule, degree_bound: usize) -> Result<Vec<usize>, HochschildError> {
    let pieces = coeff.upto(degree_bound)?;
    Ok(pieces.iter().map(|p| kernel_basis(&p.transpose()).len()).collect())
}

/// Compares `HH^1(M)` with `HH_0(M)` degree by degree (duality of dimension
/// one with trivial twist).
pub fn vdb_duality_check(coeff: &GradedModule, degree_bound: usize) -> Result<bool, HochschildError> {
    Ok(hh_polyline(coeff, 1, degree_bound)? == hh0_homology_polyline(coeff, degree_bound)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::ncalg::{complete_groebner, family_presentation, MonomialOrder};

    #[test]
    fn regular_module() {
        let m = GradedModule::regular(12);
        assert_eq!(hh_polyline(&m, 0, 12).unwrap(), vec![1; 13]);
        assert_eq!(hh_polyline(&m, 1, 12).unwrap(), vec![1; 13]);
        assert_eq!(hh_polyline(&m, 2, 12).unwrap(), vec![0; 13]);
        assert_eq!(hh0_homology_polyline(&m, 12).unwrap(), vec![1; 13]);
        assert!(vdb_duality_check(&m, 12).unwrap());
    }

    #[test]
    fn zero_module() {
        let m = GradedModule::zero(5);
        assert_eq!(hh0_homology_polyline(&m, 5).unwrap(), vec![0; 6]);
        assert!(vdb_duality_check(&m, 5).unwrap());
    }

    #[test]
    fn twisted_by_degree() {
        let pieces = (0..6)
            .map(|d| SparseMatrix::from_triplets(1, 1, [(0, 0, rat(d, 1))]).unwrap())
            .collect();
        let m = GradedModule::new(pieces).unwrap();
        assert_eq!(hh0_homology_polyline(&m, 5).unwrap(), vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn a0_from_its_presentation() {
        let gb = complete_groebner(&family_presentation(&rat(0, 1)), &MonomialOrder::deglex(2), 12).unwrap();
        let m = GradedModule::from_commutator(&gb, 1, 12).unwrap();
        assert_eq!(m, GradedModule::regular(12));
    }

    #[test]
    fn errors() {
        assert_eq!(
            GradedModule::new(vec![SparseMatrix::zeros(1, 2)]),
            Err(HochschildError::GradingViolation(0))
        );
        assert!(matches!(
            hh_polyline(&GradedModule::regular(3), 0, 4),
            Err(HochschildError::DegreeOutOfRange { .. })
        ));
        let gb1 = complete_groebner(&family_presentation(&rat(1, 1)), &MonomialOrder::deglex(2), 12).unwrap();
        // [x, y^2] = 2yx + x has a degree-1 term in degree 2.
        assert_eq!(
            GradedModule::from_commutator(&gb1, 0, 2),
            Err(HochschildError::GradingViolation(2))
        );
    }
}
