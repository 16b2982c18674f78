use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{
    family_presentation, normal_form, GroebnerBasis, MonomialOrder, NcError, NcPolynomial, Presentation,
    QuotientAlgebra,
};
use crate::linalg::Rational;

/// Algebra map out of a free algebra, given by the image of each generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMap {
    pub images: Vec<NcPolynomial>,
}

impl GeneratorMap {
    pub fn new(images: Vec<NcPolynomial>) -> Self {
        GeneratorMap { images }
    }

    pub fn identity(generators: usize) -> Self {
        GeneratorMap::new((0..generators).map(NcPolynomial::generator).collect())
    }

    /// Substitutes generator images into `p`. `p` must only use generators
    /// that have an image.
    pub fn apply(&self, p: &NcPolynomial) -> NcPolynomial {
        let mut out = NcPolynomial::zero();
        for (w, c) in p.terms() {
            let mut term = NcPolynomial::constant(c.clone());
            for &g in w.letters() {
                term = &term * &self.images[g];
            }
            out = &out + &term;
        }
        out
    }
}

fn check_arity(map: &GeneratorMap, source: &Presentation, target_generators: usize) -> Result<(), NcError> {
    if map.images.len() != source.generator_count() {
        return Err(NcError::ArityMismatch {
            expected: source.generator_count(),
            found: map.images.len(),
        });
    }
    for img in &map.images {
        if let Some(g) = img.max_generator() {
            if g >= target_generators {
                return Err(NcError::GeneratorOutOfRange {
                    index: g,
                    count: target_generators,
                });
            }
        }
    }
    Ok(())
}

/// True iff every relation of `source` maps to zero in the quotient
/// described by `target_gb`, i.e. the map descends to the quotients.
pub fn check_homomorphism(
    map: &GeneratorMap,
    source: &Presentation,
    target_gb: &GroebnerBasis,
) -> Result<bool, NcError> {
    if !target_gb.is_complete() {
        return Err(NcError::IncompleteBasis);
    }
    check_arity(map, source, target_gb.generator_count())?;
    Ok(source
        .relations()
        .iter()
        .all(|r| normal_form(&map.apply(r), target_gb).is_zero()))
}

/// Outcome of checking a candidate pair `forward: S -> T`, `backward: T -> S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InverseCheck {
    pub forward_is_homomorphism: bool,
    pub backward_is_homomorphism: bool,
    /// `backward ∘ forward` fixes every generator of `S` modulo its ideal.
    pub backward_after_forward_is_identity: bool,
    /// `forward ∘ backward` fixes every generator of `T` modulo its ideal.
    pub forward_after_backward_is_identity: bool,
}

impl InverseCheck {
    pub fn is_isomorphism(&self) -> bool {
        self.forward_is_homomorphism
            && self.backward_is_homomorphism
            && self.backward_after_forward_is_identity
            && self.forward_after_backward_is_identity
    }
}

fn composes_to_identity(first: &GeneratorMap, second: &GeneratorMap, algebra: &QuotientAlgebra) -> bool {
    first.images.iter().enumerate().all(|(g, img)| {
        let back = second.apply(img);
        let diff = &back - &NcPolynomial::generator(g);
        algebra.normal_form(&diff).is_zero()
    })
}

pub fn check_inverse_pair(
    forward: &GeneratorMap,
    backward: &GeneratorMap,
    source: &QuotientAlgebra,
    target: &QuotientAlgebra,
) -> Result<InverseCheck, NcError> {
    if !source.basis.is_complete() {
        return Err(NcError::IncompleteBasis);
    }
    let forward_is_homomorphism = check_homomorphism(forward, &source.presentation, &target.basis)?;
    let backward_is_homomorphism = check_homomorphism(backward, &target.presentation, &source.basis)?;
    Ok(InverseCheck {
        forward_is_homomorphism,
        backward_is_homomorphism,
        backward_after_forward_is_identity: composes_to_identity(forward, backward, source),
        forward_after_backward_is_identity: composes_to_identity(backward, forward, target),
    })
}

/// `x ↦ x`, `y ↦ scale·y`.
fn rescale_y(scale: &Rational) -> GeneratorMap {
    GeneratorMap::new(vec![
        NcPolynomial::generator(0),
        NcPolynomial::generator(1).scale(scale),
    ])
}

/// The comparison of `A_a` with `A_1` by rescaling `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyIsomorphism {
    pub a: Rational,
    /// Whether `y ↦ a·y` is an algebra map `A_a -> A_1`.
    pub y_times_a_is_homomorphism: bool,
    /// Whether `y ↦ y/a` is an algebra map `A_a -> A_1`.
    pub y_over_a_is_homomorphism: bool,
    /// Scale factor of the forward map actually used.
    pub forward_scale: Rational,
    pub forward: GeneratorMap,
    pub backward: GeneratorMap,
    pub check: InverseCheck,
}

/// Tries both rescalings `y ↦ a·y` and `y ↦ y/a` as maps `A_a -> A_1` and
/// verifies the one that works (the first, if both do) against its inverse
/// rescaling.
pub fn family_isomorphism(a: &Rational, degree_bound: usize) -> Result<FamilyIsomorphism, NcError> {
    if a.is_zero() {
        return Err(NcError::ZeroParameter);
    }
    let order = MonomialOrder::deglex(2);
    let source = QuotientAlgebra::new(family_presentation(a), order.clone(), degree_bound)?;
    let target = QuotientAlgebra::new(family_presentation(&Rational::one()), order, degree_bound)?;
    let times = check_homomorphism(&rescale_y(a), &source.presentation, &target.basis)?;
    let inv = Rational::one() / a;
    let over = check_homomorphism(&rescale_y(&inv), &source.presentation, &target.basis)?;
    let forward_scale = if times || !over { a.clone() } else { inv };
    let forward = rescale_y(&forward_scale);
    let backward = rescale_y(&(Rational::one() / &forward_scale));
    let check = check_inverse_pair(&forward, &backward, &source, &target)?;
    Ok(FamilyIsomorphism {
        a: a.clone(),
        y_times_a_is_homomorphism: times,
        y_over_a_is_homomorphism: over,
        forward_scale,
        forward,
        backward,
        check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::ncalg::complete_groebner;

    fn qa(a: Rational) -> QuotientAlgebra {
        QuotientAlgebra::new(family_presentation(&a), MonomialOrder::deglex(2), 6).unwrap()
    }

    #[test]
    fn identity_on_a1() {
        let a1 = qa(rat(1, 1));
        assert!(check_homomorphism(&GeneratorMap::identity(2), &a1.presentation, &a1.basis).unwrap());
    }

    #[test]
    fn a2_to_a1_directions() {
        let a1 = qa(rat(1, 1));
        let a2 = family_presentation(&rat(2, 1));
        assert!(check_homomorphism(&rescale_y(&rat(1, 2)), &a2, &a1.basis).unwrap());
        assert!(!check_homomorphism(&GeneratorMap::identity(2), &a2, &a1.basis).unwrap());
        assert!(!check_homomorphism(&rescale_y(&rat(2, 1)), &a2, &a1.basis).unwrap());
    }

    #[test]
    fn arity_is_checked() {
        let a1 = qa(rat(1, 1));
        let map = GeneratorMap::new(vec![NcPolynomial::generator(0)]);
        assert_eq!(
            check_homomorphism(&map, &a1.presentation, &a1.basis),
            Err(NcError::ArityMismatch { expected: 2, found: 1 })
        );
        let map = GeneratorMap::new(vec![NcPolynomial::generator(0), NcPolynomial::generator(5)]);
        assert!(check_homomorphism(&map, &a1.presentation, &a1.basis).is_err());
    }

    #[test]
    fn family_isomorphism_resolves_direction() {
        let iso = family_isomorphism(&rat(2, 1), 6).unwrap();
        assert!(!iso.y_times_a_is_homomorphism);
        assert!(iso.y_over_a_is_homomorphism);
        assert_eq!(iso.forward_scale, rat(1, 2));
        assert!(iso.check.is_isomorphism());
        // For a = -1 both labelings coincide.
        let iso = family_isomorphism(&rat(-1, 1), 6).unwrap();
        assert!(iso.y_times_a_is_homomorphism && iso.y_over_a_is_homomorphism);
        assert_eq!(family_isomorphism(&rat(0, 1), 6), Err(NcError::ZeroParameter));
    }

    #[test]
    fn a1_onto_a0_is_not_an_isomorphism() {
        // y ↦ 0 sends xy - yx - x to -x, which vanishes in A_0, but nothing
        // maps back onto y.
        let a0 = qa(rat(0, 1));
        let a1 = qa(rat(1, 1));
        let to_a0 = rescale_y(&rat(0, 1));
        assert!(check_homomorphism(&to_a0, &a1.presentation, &a0.basis).unwrap());
        let check = check_inverse_pair(&to_a0, &GeneratorMap::identity(2), &a1, &a0).unwrap();
        assert!(!check.is_isomorphism());
        let gb = complete_groebner(&a1.presentation, &MonomialOrder::deglex(2), 6).unwrap();
        assert!(!check_homomorphism(&GeneratorMap::identity(2), &a0.presentation, &gb).unwrap());
    }
}
