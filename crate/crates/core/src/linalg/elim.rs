//! Fraction-free elimination.
//!
//! Each rational row is scaled to a primitive integer row before elimination.
//! Pivots are chosen column by column: the pivot of a column is the first
//! remaining row (by index) with a nonzero entry there. Small matrices go
//! through a dense Bareiss pass for the rank, larger ones through a sparse
//! pass that keeps rows primitive. Both produce the same rank.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::mem;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, SparseMatrix};

/// Below this size in both dimensions the rank is computed densely.
const DENSE_LIMIT: usize = 64;

type IntRow = BTreeMap<usize, BigInt>;

/// Rank over ℚ.
pub fn rank(m: &SparseMatrix) -> usize {
    if m.rows() < DENSE_LIMIT && m.cols() < DENSE_LIMIT {
        rank_dense(m)
    } else {
        rank_sparse(m)
    }
}

/// Basis of the null space `{v : m v = 0}`, one vector per non-pivot column
/// in increasing column order. The vector for free column `f` has a `1` in
/// position `f` and zeros at every other free column.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<Vec<Rational>> {
    let pivots = echelon(m, true);
    let mut is_pivot = vec![false; m.cols()];
    for (c, _) in &pivots {
        is_pivot[*c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols()).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); m.cols()];
        v[free] = Rational::one();
        for (pc, row) in &pivots {
            if let Some(a) = row.get(&free) {
                v[*pc] = -Rational::new(a.clone(), row[pc].clone());
            }
        }
        basis.push(v);
    }
    basis
}

pub(crate) fn rank_sparse(m: &SparseMatrix) -> usize {
    echelon(m, false).len()
}

fn integer_rows(m: &SparseMatrix) -> Vec<IntRow> {
    m.row_lists()
        .into_iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
            let mut out: IntRow = row
                .into_iter()
                .map(|(c, v)| (c, v.numer() * (&lcm / v.denom())))
                .collect();
            make_primitive(&mut out);
            out
        })
        .collect()
}

fn make_primitive(row: &mut IntRow) {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
}

/// `target := (p/g) target - (a/g) pivot` where `p` is the pivot entry, `a`
/// the entry of `target` in the pivot column and `g = gcd(p, a)`; the result
/// is made primitive.
fn eliminate(target: &mut IntRow, pivot: &IntRow, col: usize) {
    let Some(a) = target.get(&col).cloned() else {
        return;
    };
    let p = &pivot[&col];
    let g = p.gcd(&a);
    let ps = p / &g;
    let as_ = &a / &g;
    let mut out = IntRow::new();
    let old = mem::take(target);
    let mut lhs = old.into_iter().peekable();
    let mut rhs = pivot.iter().peekable();
    loop {
        let (c, v) = match (lhs.peek(), rhs.peek()) {
            (None, None) => break,
            (Some((lc, _)), Some((rc, _))) if lc == *rc => {
                let (c, lv) = lhs.next().unwrap();
                let (_, rv) = rhs.next().unwrap();
                (c, &ps * lv - &as_ * rv)
            }
            (Some((lc, _)), Some((rc, _))) if lc < *rc => {
                let (c, lv) = lhs.next().unwrap();
                (c, &ps * lv)
            }
            (Some(_), None) => {
                let (c, lv) = lhs.next().unwrap();
                (c, &ps * lv)
            }
            _ => {
                let (c, rv) = rhs.next().unwrap();
                (*c, -(&as_ * rv))
            }
        };
        if !v.is_zero() {
            out.insert(c, v);
        }
    }
    make_primitive(&mut out);
    *target = out;
}

/// Row echelon form as a list of `(pivot column, primitive row)` in pivot
/// order. With `reduce_above` the form is fully reduced: each pivot column
/// is zero in every other pivot row.
fn echelon(m: &SparseMatrix, reduce_above: bool) -> Vec<(usize, IntRow)> {
    let mut remaining: Vec<IntRow> = integer_rows(m).into_iter().filter(|r| !r.is_empty()).collect();
    let mut pivots: Vec<(usize, IntRow)> = Vec::new();
    while !remaining.is_empty() {
        // Remaining rows have no entries in earlier columns, so the next pivot
        // column is the smallest leading column.
        let col = remaining
            .iter()
            .filter_map(|r| r.keys().next().copied())
            .min()
            .expect("remaining rows are nonempty");
        let idx = remaining
            .iter()
            .position(|r| r.keys().next() == Some(&col))
            .expect("some row leads at the pivot column");
        let mut pivot = remaining.remove(idx);
        if pivot[&col].is_negative() {
            for v in pivot.values_mut() {
                *v = -mem::take(v);
            }
        }
        for r in remaining.iter_mut() {
            eliminate(r, &pivot, col);
        }
        remaining.retain(|r| !r.is_empty());
        if reduce_above {
            for (_, r) in pivots.iter_mut() {
                eliminate(r, &pivot, col);
            }
        }
        pivots.push((col, pivot));
    }
    pivots
}

/// Dense Bareiss elimination with column skipping. Every division is exact.
pub(crate) fn rank_dense(m: &SparseMatrix) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = vec![vec![BigInt::zero(); cols]; rows];
    for (r, row) in integer_rows(m).into_iter().enumerate() {
        for (c, v) in row {
            a[r][c] = v;
        }
    }
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}
