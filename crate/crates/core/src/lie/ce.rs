//! Chevalley–Eilenberg cochains `C^k(g, V) = Hom(Λ^k g, V)`.
//!
//! A basis cochain is a pair `(S, b)`: it sends `e_S = e_{s_0} ∧ … ∧ e_{s_{k-1}}`
//! (with `s_0 < … < s_{k-1}`) to the basis vector `v_b` and every other basis
//! wedge to zero. Its coordinate is `index(S) * dim V + b`, where `index`
//! enumerates `k`-subsets in lexicographic order.
//!
//! The differential is
//!
//! ```text
//! (d f)(x_0 ∧ … ∧ x_k) = Σ_i (−1)^i x_i · f(… x̂_i …)
//!                      + Σ_{i<j} (−1)^{i+j} f([x_i, x_j] ∧ … x̂_i … x̂_j …)
//! ```

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{GModule, LieAlgebra, LieError};
use crate::linalg::{CochainComplex, Rational, SparseMatrix};

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn sign(parity: usize) -> Rational {
    Rational::from_integer(if parity.is_multiple_of(2) { 1 } else { -1 }.into())
}

fn differential(g: &LieAlgebra, v: &GModule, k: usize) -> Result<SparseMatrix, LieError> {
    let n = g.dim();
    let m = v.dim();
    let src = subsets(n, k);
    let dst = subsets(n, k + 1);
    let src_index: BTreeMap<&[usize], usize> = src.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut d = SparseMatrix::zeros(dst.len() * m, src.len() * m);
    for (t_idx, t) in dst.iter().enumerate() {
        // Module term.
        for i in 0..t.len() {
            let mut rest = t.clone();
            rest.remove(i);
            let s_idx = src_index[rest.as_slice()];
            let sg = sign(i);
            for (out, b, val) in v.action(t[i]).iter() {
                d.add_at(t_idx * m + out, s_idx * m + b, &(&sg * val));
            }
        }
        // Bracket term.
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let rest: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != i && p != j)
                    .map(|(_, &e)| e)
                    .collect();
                for (l, c) in g.bracket(t[i], t[j]).iter().enumerate() {
                    if c.is_zero() || rest.contains(&l) {
                        continue;
                    }
                    // Moving e_l from the front to its sorted slot passes
                    // `pos` wedge factors.
                    let pos = rest.iter().filter(|&&r| r < l).count();
                    let mut u = rest.clone();
                    u.insert(pos, l);
                    let u_idx = src_index[u.as_slice()];
                    let coeff = sign(i + j + pos) * c;
                    for b in 0..m {
                        d.add_at(t_idx * m + b, u_idx * m + b, &coeff);
                    }
                }
            }
        }
    }
    Ok(d)
}

/// The Chevalley–Eilenberg complex of `g` with coefficients in `v`, levels
/// `0..=dim g`. Construction verifies `d ∘ d = 0`.
pub fn ce_complex(g: &LieAlgebra, v: &GModule) -> Result<CochainComplex, LieError> {
    if v.actions().len() != g.dim() {
        return Err(LieError::Shape);
    }
    let n = g.dim();
    let levels: Vec<usize> = (0..=n).map(|k| subsets(n, k).len() * v.dim()).collect();
    let diffs = (0..n).map(|k| differential(g, v, k)).collect::<Result<Vec<_>, _>>()?;
    Ok(CochainComplex::new(levels, diffs)?)
}

/// `dim H^k(g, v)` for `k = 0..=n_max`; levels above `dim g` are zero.
pub fn ce_cohomology_dims(g: &LieAlgebra, v: &GModule, n_max: usize) -> Result<Vec<usize>, LieError> {
    let mut dims = ce_complex(g, v)?.cohomology_dims();
    dims.resize(n_max + 1, 0);
    Ok(dims)
}

/// Cochain map `C^•(g, V) -> C^•(g, W)` induced by a module map `f: V -> W`
/// (applied wedge by wedge).
pub fn cochain_map(g: &LieAlgebra, f: &SparseMatrix) -> Result<Vec<SparseMatrix>, LieError> {
    let n = g.dim();
    (0..=n)
        .map(|k| {
            let blocks = subsets(n, k).len();
            let mut out = SparseMatrix::zeros(blocks * f.rows(), blocks * f.cols());
            for s in 0..blocks {
                for (r, c, v) in f.iter() {
                    out.set(s * f.rows() + r, s * f.cols() + c, v.clone())?;
                }
            }
            Ok(out)
        })
        .collect()
}
