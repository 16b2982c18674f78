use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{LinalgError, Rational};

/// A `rows x cols` matrix over ℚ holding only its nonzero entries.
///
/// Matrices act on column vectors: a matrix representing a linear map
/// `V -> W` has `cols = dim V` and `rows = dim W`.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Rational::one());
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triplets. Repeated positions
    /// are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.check_bounds(r, c)?;
            m.add_at(r, c, &v);
        }
        Ok(m)
    }

    /// Builds a matrix from dense rows. All rows must have length `cols`.
    pub fn from_dense(cols: usize, data: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(data.len(), cols);
        for (r, row) in data.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::Shape {
                    context: "dense row length differs from column count",
                });
            }
            for (c, v) in row.iter().enumerate() {
                m.add_at(r, c, v);
            }
        }
        Ok(m)
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::Shape {
                    context: "column vector length differs from row count",
                });
            }
            for (r, v) in col.iter().enumerate() {
                m.add_at(r, c, v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) -> Result<(), LinalgError> {
        self.check_bounds(row, col)?;
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub(crate) fn add_at(&mut self, row: usize, col: usize, v: &Rational) {
        if v.is_zero() {
            return;
        }
        let key = (row, col);
        let sum = match self.entries.get(&key) {
            Some(old) => old + v,
            None => v.clone(),
        };
        if sum.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, sum);
        }
    }

    fn check_bounds(&self, row: usize, col: usize) -> Result<(), LinalgError> {
        if row >= self.rows || col >= self.cols {
            return Err(LinalgError::OutOfBounds {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Nonzero entries grouped by row, columns ascending.
    pub(crate) fn row_lists(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut out = vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            out[r].push((c, v.clone()));
        }
        out
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(r, c), v)| ((c, r), v.clone())).collect(),
        }
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Shape {
                context: "inner dimensions of a product differ",
            });
        }
        let rhs_rows = rhs.row_lists();
        let mut out = SparseMatrix::zeros(self.rows, rhs.cols);
        for (&(i, k), a) in &self.entries {
            for (j, b) in &rhs_rows[k] {
                out.add_at(i, *j, &(a * b));
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::Shape {
                context: "summands have different shapes",
            });
        }
        let mut out = self.clone();
        for (&(r, c), v) in &rhs.entries {
            out.add_at(r, c, v);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        self.add(&rhs.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> SparseMatrix {
        if s.is_zero() {
            return SparseMatrix::zeros(self.rows, self.cols);
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|(&k, v)| (k, v * s)).collect(),
        }
    }

    /// `[self, other]`: columns of `other` appended after those of `self`.
    pub fn hconcat(&self, other: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::Shape {
                context: "horizontal concatenation needs equal row counts",
            });
        }
        let mut out = SparseMatrix::zeros(self.rows, self.cols + other.cols);
        out.entries = self.entries.clone();
        for (&(r, c), v) in &other.entries {
            out.entries.insert((r, c + self.cols), v.clone());
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Shape {
                context: "vector length differs from column count",
            });
        }
        let mut out = vec![Rational::zero(); self.rows];
        for (&(r, c), a) in &self.entries {
            if !v[c].is_zero() {
                out[r] += a * &v[c];
            }
        }
        Ok(out)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            out[r][c] = v.clone();
        }
        out
    }

    /// Relabels rows and columns: entry `(r, c)` moves to
    /// `(row_perm[r], col_perm[c])`.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> Result<SparseMatrix, LinalgError> {
        if row_perm.len() != self.rows || col_perm.len() != self.cols {
            return Err(LinalgError::Shape {
                context: "permutation length differs from matrix dimension",
            });
        }
        let mut out = SparseMatrix::zeros(self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            out.check_bounds(row_perm[r], col_perm[c])?;
            out.entries.insert((row_perm[r], col_perm[c]), v.clone());
        }
        Ok(out)
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{})[", self.rows, self.cols)?;
        for (i, (&(r, c), v)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({r},{c})={v}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn zero_entries_are_never_stored() {
        let m = SparseMatrix::from_triplets(2, 2, [(0, 0, rat(1, 1)), (0, 0, rat(-1, 1))]).unwrap();
        assert!(m.is_zero());
        let mut m = SparseMatrix::identity(2);
        m.set(1, 1, rat(0, 1)).unwrap();
        assert_eq!(m.nnz(), 1);
    }

    #[test]
    fn out_of_bounds_is_rejected() {
        assert!(SparseMatrix::from_triplets(2, 2, [(2, 0, rat(1, 1))]).is_err());
    }

    #[test]
    fn product_and_transpose() {
        let a = SparseMatrix::from_dense(2, &[vec![rat(1, 1), rat(2, 1)], vec![rat(0, 1), rat(1, 2)]]).unwrap();
        let b = a.transpose();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.get(0, 0), rat(5, 1));
        assert_eq!(ab.get(0, 1), rat(1, 1));
        assert_eq!(ab.get(1, 1), rat(1, 4));
        assert!(a.mul(&SparseMatrix::zeros(3, 1)).is_err());
    }
}
