#![allow(dead_code)]

use hcdim_core::lie::{GModule, LieAlgebra};
use hcdim_core::linalg::rat;
use hcdim_core::{Rational, SparseMatrix};
use num_traits::Zero;

/// Plain row reduction on a dense copy, kept separate from the library's
/// elimination code.
pub fn dense_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rational::from_integer(1.into()) / a[r][c].clone();
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

pub fn sparse_to_dense(m: &SparseMatrix) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![Rational::zero(); m.cols()]; m.rows()];
    for (r, c, v) in m.iter() {
        out[r][c] = v.clone();
    }
    out
}

/// Modules over `[x, y] = x` built from eigenvalues: `y` acts diagonally by
/// integers `lambda` and `x` may only map the `lambda_j` eigenline into the
/// `lambda_j - 1` eigenline, which is exactly the bracket relation.
pub fn weight_module(lambda: &[i64], x_entries: &[i64]) -> GModule {
    let g = LieAlgebra::nonabelian_2d();
    let m = lambda.len();
    let mut x = Vec::new();
    let mut k = 0;
    for i in 0..m {
        for j in 0..m {
            if lambda[j] - lambda[i] == 1 {
                let v = x_entries[k % x_entries.len().max(1)];
                k += 1;
                if v != 0 {
                    x.push((i, j, rat(v, 1)));
                }
            }
        }
    }
    let y = (0..m).map(|i| (i, i, rat(lambda[i], 1)));
    let x = SparseMatrix::from_triplets(m, m, x).unwrap();
    let y = SparseMatrix::from_triplets(m, m, y).unwrap();
    GModule::new(&g, m, vec![x, y]).unwrap()
}
