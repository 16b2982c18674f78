use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{MonomialOrder, Word};
use crate::linalg::Rational;

/// Element of the free algebra ℚ⟨generators⟩. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NcPolynomial {
    terms: BTreeMap<Word, Rational>,
}

impl NcPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Word::unit(), c)
    }

    pub fn monomial(w: Word, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn generator(g: usize) -> Self {
        Self::monomial(Word::letter(g), Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    /// Maximum word length, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::degree).max()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.terms.keys().flat_map(|w| w.letters().iter().copied()).max()
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Word, &Rational)> {
        self.terms.iter().max_by(|(a, _), (b, _)| order.compare(a, b))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        NcPolynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    /// `left * self * right` for words `left`, `right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Self {
        NcPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

impl Add<&NcPolynomial> for &NcPolynomial {
    type Output = NcPolynomial;
    fn add(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&NcPolynomial> for &NcPolynomial {
    type Output = NcPolynomial;
    fn sub(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &NcPolynomial {
    type Output = NcPolynomial;
    fn neg(self) -> NcPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul<&NcPolynomial> for &NcPolynomial {
    type Output = NcPolynomial;
    fn mul(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut out = NcPolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }
}

/// Renders a polynomial with named generators, terms in descending deglex
/// (generator `0` largest), e.g. `xy - yx - x`.
pub struct PolyDisplay<'a> {
    poly: &'a NcPolynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let order = MonomialOrder::deglex(self.names.len().max(self.poly.max_generator().map_or(0, |g| g + 1)));
        let mut terms: alloc::vec::Vec<_> = self.poly.terms().collect();
        terms.sort_by(|(a, _), (b, _)| order.compare(b, a));
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit_coeff = abs.is_one();
            if !unit_coeff || w.is_unit() {
                if abs.is_integer() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
            }
            for &g in w.letters() {
                match self.names.get(g) {
                    Some(n) if n.chars().count() == 1 => f.write_str(n)?,
                    Some(n) => write!(f, "{n} ")?,
                    None => write!(f, "g{g}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn noncommutative_product() {
        let x = NcPolynomial::generator(0);
        let y = NcPolynomial::generator(1);
        let comm = &(&x * &y) - &(&y * &x);
        assert_eq!(comm.len(), 2);
        assert!((&comm + &(&(&y * &x) - &(&x * &y))).is_zero());
    }

    #[test]
    fn display_with_names() {
        let names = vec!["x".to_string(), "y".to_string()];
        let p = NcPolynomial::from_terms([
            (Word::new(vec![0, 1]), rat(1, 2)),
            (Word::new(vec![1, 0]), rat(-1, 2)),
            (Word::letter(0), rat(-1, 1)),
        ]);
        assert_eq!(p.display(&names).to_string(), "(1/2)xy - (1/2)yx - x");
        assert_eq!(NcPolynomial::one().display(&names).to_string(), "1");
    }
}
