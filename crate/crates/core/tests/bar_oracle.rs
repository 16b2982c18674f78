//! The reduced bar engine against the full (unreduced) Hochschild complex,
//! assembled here from scratch and reduced with plain row elimination.

mod common;

use common::{dense_rank, sparse_to_dense};
use hcdim_core::hochschild::{bar_complex, bar_hh_dims, Bimodule, FiniteDimAlgebra};
use hcdim_core::{Rational, SparseMatrix};
use num_traits::Zero;

fn tuple(mut idx: usize, n: usize, m: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for s in t.iter_mut().rev() {
        *s = idx % m;
        idx /= m;
    }
    t
}

fn index(t: &[usize], m: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * m + x)
}

/// Matrix of `d: Hom(A^{⊗n}, M) -> Hom(A^{⊗(n+1)}, M)` with
/// `(df)(a_1..a_{n+1}) = a_1 f(a_2..) + Σ_i (−1)^i f(..a_i a_{i+1}..) + (−1)^{n+1} f(a_1..a_n) a_{n+1}`.
fn unreduced_differential(alg: &FiniteDimAlgebra, bm: &Bimodule, n: usize) -> Vec<Vec<Rational>> {
    let m = alg.dim();
    let p = bm.dim();
    let left: Vec<_> = bm.left().iter().map(sparse_to_dense).collect();
    let right: Vec<_> = bm.right().iter().map(sparse_to_dense).collect();
    let src = m.pow(n as u32) * p;
    let dst = m.pow(n as u32 + 1) * p;
    let mut d = vec![vec![Rational::zero(); src]; dst];
    for ti in 0..m.pow(n as u32 + 1) {
        let t = tuple(ti, n + 1, m);
        let head = index(&t[1..], m);
        for bo in 0..p {
            for bi in 0..p {
                let row = ti * p + bo;
                let l = &left[t[0]][bo][bi];
                d[row][head * p + bi] += l;
                let r = &right[t[n]][bo][bi];
                let tail = index(&t[..n], m);
                if n.is_multiple_of(2) {
                    d[row][tail * p + bi] -= r;
                } else {
                    d[row][tail * p + bi] += r;
                }
            }
        }
        for pos in 0..n {
            for k in 0..m {
                let c = &alg.structure()[t[pos]][t[pos + 1]][k];
                if c.is_zero() {
                    continue;
                }
                let mut s = t[..pos].to_vec();
                s.push(k);
                s.extend_from_slice(&t[pos + 2..]);
                let si = index(&s, m);
                for b in 0..p {
                    if pos % 2 == 0 {
                        d[ti * p + b][si * p + b] -= c;
                    } else {
                        d[ti * p + b][si * p + b] += c;
                    }
                }
            }
        }
    }
    d
}

fn oracle_hh(alg: &FiniteDimAlgebra, bm: &Bimodule, n_max: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=n_max)
        .map(|n| dense_rank(&unreduced_differential(alg, bm, n)))
        .collect();
    (0..=n_max)
        .map(|n| {
            let dim = alg.dim().pow(n as u32) * bm.dim();
            dim - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] }
        })
        .collect()
}

/// `Q` as a bimodule over the dual numbers, with `ε` acting by zero.
fn dual_numbers_augmentation(alg: &FiniteDimAlgebra) -> Bimodule {
    let act = vec![SparseMatrix::identity(1), SparseMatrix::zeros(1, 1)];
    Bimodule::new(alg, 1, act.clone(), act).unwrap()
}

#[test]
fn scalars() {
    let a = FiniteDimAlgebra::scalars();
    let m = Bimodule::regular(&a);
    assert_eq!(oracle_hh(&a, &m, 3), vec![1, 0, 0, 0]);
    assert_eq!(bar_hh_dims(&a, &m, 3).unwrap(), vec![1, 0, 0, 0]);
}

#[test]
fn dual_numbers() {
    let a = FiniteDimAlgebra::dual_numbers();
    let m = Bimodule::regular(&a);
    assert_eq!(oracle_hh(&a, &m, 3), vec![2, 1, 1, 1]);
    assert_eq!(bar_hh_dims(&a, &m, 3).unwrap(), vec![2, 1, 1, 1]);
    let k = dual_numbers_augmentation(&a);
    assert_eq!(oracle_hh(&a, &k, 3), bar_hh_dims(&a, &k, 3).unwrap());
    assert_eq!(bar_hh_dims(&a, &k, 3).unwrap(), vec![1, 1, 1, 1]);
}

#[test]
fn truncated_polynomial_cubic() {
    // Q[x]/(x^3) over itself: 3 in degree 0, then 2 in every degree.
    let a = FiniteDimAlgebra::truncated_polynomial(3);
    let m = Bimodule::regular(&a);
    let oracle = oracle_hh(&a, &m, 3);
    assert_eq!(oracle, vec![3, 2, 2, 2]);
    assert_eq!(bar_hh_dims(&a, &m, 3).unwrap(), oracle);
}

#[test]
fn upper_triangular() {
    let a = FiniteDimAlgebra::upper_triangular_2x2();
    let m = Bimodule::regular(&a);
    let oracle = oracle_hh(&a, &m, 3);
    assert_eq!(oracle, vec![1, 0, 0, 0]);
    assert_eq!(bar_hh_dims(&a, &m, 3).unwrap(), oracle);
}

#[test]
fn separable_algebras() {
    for a in [FiniteDimAlgebra::diagonal(2), FiniteDimAlgebra::matrices_2x2()] {
        let m = Bimodule::regular(&a);
        let oracle = oracle_hh(&a, &m, 2);
        assert_eq!(&oracle[1..], &[0, 0]);
        assert_eq!(bar_hh_dims(&a, &m, 2).unwrap(), oracle);
    }
}

#[test]
fn bar_complexes_are_complexes_with_euler_identity() {
    for a in [
        FiniteDimAlgebra::dual_numbers(),
        FiniteDimAlgebra::truncated_polynomial(3),
        FiniteDimAlgebra::upper_triangular_2x2(),
    ] {
        let m = Bimodule::regular(&a);
        let c = bar_complex(&a, &m, 3, 20_000).unwrap();
        let chi: i64 = c
            .cohomology_dims()
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum();
        assert_eq!(c.euler_characteristic(), chi);
    }
}
