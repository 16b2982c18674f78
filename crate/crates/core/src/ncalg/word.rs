use alloc::vec::Vec;
use core::cmp::Ordering;

use super::NcError;

/// A monomial of the free algebra: a sequence of generator indices. The
/// empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letter(g: usize) -> Self {
        Word(alloc::vec![g])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Leftmost position at which `pattern` occurs as a contiguous subword.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        let p = pattern.0.len();
        if p > self.0.len() {
            return None;
        }
        (0..=self.0.len() - p).find(|&i| self.0[i..i + p] == pattern.0[..])
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        self.find(pattern).is_some()
    }

    pub fn ends_with(&self, pattern: &Word) -> bool {
        self.0.ends_with(&pattern.0)
    }

    /// Splits off `[..at]` and `[at + len..]`.
    pub(crate) fn around(&self, at: usize, len: usize) -> (Word, Word) {
        (Word(self.0[..at].to_vec()), Word(self.0[at + len..].to_vec()))
    }

    pub(crate) fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// Degree-lexicographic order: longer words are larger; words of equal length
/// compare letter by letter from the left using the generator precedence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    /// Generators from largest to smallest.
    precedence: Vec<usize>,
    /// `weight[g]` is larger for generators earlier in `precedence`.
    weight: Vec<usize>,
}

impl MonomialOrder {
    /// Deglex with generator `0` largest, then `1`, and so on.
    pub fn deglex(generators: usize) -> Self {
        Self::with_precedence((0..generators).collect()).expect("identity is a permutation")
    }

    /// `precedence` lists every generator exactly once, largest first.
    pub fn with_precedence(precedence: Vec<usize>) -> Result<Self, NcError> {
        let n = precedence.len();
        let mut weight = alloc::vec![usize::MAX; n];
        for (pos, &g) in precedence.iter().enumerate() {
            if g >= n || weight[g] != usize::MAX {
                return Err(NcError::InvalidPrecedence);
            }
            weight[g] = n - 1 - pos;
        }
        Ok(MonomialOrder { precedence, weight })
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn generator_count(&self) -> usize {
        self.precedence.len()
    }

    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            a.letters()
                .iter()
                .map(|&g| self.weight[g])
                .cmp(b.letters().iter().map(|&g| self.weight[g]))
        })
    }

    /// Sort key whose natural `Ord` agrees with [`MonomialOrder::compare`].
    pub(crate) fn key(&self, w: &Word) -> (usize, Vec<usize>) {
        (w.degree(), w.letters().iter().map(|&g| self.weight[g]).collect())
    }
}
