use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{NcError, NcPolynomial, Word};
use crate::linalg::Rational;

/// Generators and relations of `ℚ⟨generators⟩ / (relations)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relations: Vec<NcPolynomial>,
}

impl Presentation {
    /// Rejects duplicate generator names, zero relations and relations that
    /// mention generators outside the list.
    pub fn new(generators: Vec<String>, relations: Vec<NcPolynomial>) -> Result<Self, NcError> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(NcError::DuplicateGenerator(g.clone()));
            }
        }
        for (i, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(NcError::ZeroRelation(i));
            }
            if let Some(m) = r.max_generator() {
                if m >= generators.len() {
                    return Err(NcError::GeneratorOutOfRange {
                        index: m,
                        count: generators.len(),
                    });
                }
            }
        }
        Ok(Presentation { generators, relations })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relations(&self) -> &[NcPolynomial] {
        &self.relations
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }
}

/// `ℚ⟨x, y⟩ / (a·xy − a·yx − x)`.
pub fn family_presentation(a: &Rational) -> Presentation {
    let rel = NcPolynomial::from_terms([
        (Word::new(vec![0, 1]), a.clone()),
        (Word::new(vec![1, 0]), -a.clone()),
        (Word::letter(0), -Rational::from_integer(1.into())),
    ]);
    Presentation::new(vec!["x".into(), "y".into()], vec![rel]).expect("family presentation is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use alloc::string::ToString;

    #[test]
    fn family_relations() {
        let show = |a| {
            let p = family_presentation(&a);
            p.relations()[0].display(p.generators()).to_string()
        };
        assert_eq!(show(rat(1, 1)), "xy - yx - x");
        assert_eq!(show(rat(0, 1)), "-x");
        assert_eq!(show(rat(1, 2)), "(1/2)xy - (1/2)yx - x");
    }

    #[test]
    fn validation() {
        let names = vec!["x".to_string(), "x".to_string()];
        assert_eq!(
            Presentation::new(names, vec![]),
            Err(NcError::DuplicateGenerator("x".into()))
        );
        let names = vec!["x".to_string()];
        assert_eq!(
            Presentation::new(names.clone(), vec![NcPolynomial::zero()]),
            Err(NcError::ZeroRelation(0))
        );
        assert!(Presentation::new(names, vec![NcPolynomial::generator(1)]).is_err());
    }
}
