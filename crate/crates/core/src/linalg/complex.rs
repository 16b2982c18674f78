use alloc::vec::Vec;

use super::{kernel_basis, rank, LinalgError, SparseMatrix};

/// A bounded cochain complex `C^0 -> C^1 -> ... -> C^top` of finite
/// dimensional ℚ-vector spaces. Construction checks every shape and that
/// consecutive differentials compose to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainComplex {
    levels: Vec<usize>,
    differentials: Vec<SparseMatrix>,
}

impl CochainComplex {
    /// `differentials[k]` maps level `k` to level `k + 1`, so there must be
    /// exactly one fewer differential than levels.
    pub fn new(levels: Vec<usize>, differentials: Vec<SparseMatrix>) -> Result<Self, LinalgError> {
        if differentials.len() + 1 != levels.len().max(1) {
            return Err(LinalgError::Shape {
                context: "a complex needs one differential between each pair of levels",
            });
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.cols() != levels[k] || d.rows() != levels[k + 1] {
                return Err(LinalgError::Shape {
                    context: "differential shape does not match the level dimensions",
                });
            }
        }
        for k in 1..differentials.len() {
            if !differentials[k].mul(&differentials[k - 1])?.is_zero() {
                return Err(LinalgError::CompositeNonzero { level: k });
            }
        }
        Ok(CochainComplex { levels, differentials })
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn differentials(&self) -> &[SparseMatrix] {
        &self.differentials
    }

    /// Dimension of level `k`; zero outside the stored range.
    pub fn dim(&self, k: usize) -> usize {
        self.levels.get(k).copied().unwrap_or(0)
    }

    /// The differential leaving level `k` (a zero map at the top level).
    pub fn outgoing(&self, k: usize) -> SparseMatrix {
        match self.differentials.get(k) {
            Some(d) => d.clone(),
            None => SparseMatrix::zeros(self.dim(k + 1), self.dim(k)),
        }
    }

    /// The differential arriving at level `k` (a zero map at level 0).
    pub fn incoming(&self, k: usize) -> SparseMatrix {
        if k == 0 {
            return SparseMatrix::zeros(self.dim(0), 0);
        }
        self.outgoing(k - 1)
    }

    /// `dim H^k` for every stored level.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(rank).collect();
        (0..self.levels.len())
            .map(|k| {
                let out = ranks.get(k).copied().unwrap_or(0);
                let inc = if k == 0 { 0 } else { ranks[k - 1] };
                self.levels[k] - out - inc
            })
            .collect()
    }

    /// Alternating sum of the level dimensions.
    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.levels)
    }
}

pub(crate) fn alternating_sum(dims: &[usize]) -> i64 {
    dims.iter()
        .enumerate()
        .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

/// `dim ker(d_out) - rank(d_in)` for `d_in: C^{k-1} -> C^k` and
/// `d_out: C^k -> C^{k+1}`. Fails if the two maps do not compose to zero.
pub fn cohomology_dim(d_in: &SparseMatrix, d_out: &SparseMatrix) -> Result<usize, LinalgError> {
    if d_in.rows() != d_out.cols() {
        return Err(LinalgError::Shape {
            context: "d_in codomain differs from d_out domain",
        });
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(LinalgError::CompositeNonzero { level: 1 });
    }
    Ok(d_out.cols() - rank(d_out) - rank(d_in))
}

/// Rank of the map `H^n(a) -> H^n(b)` induced by a chain map given as one
/// matrix per level (`chain_map[k]: a_k -> b_k`).
///
/// Cocycle representatives of `H^n(a)` are pushed forward and reduced modulo
/// the coboundaries of `b`.
pub fn induced_cohomology_rank(
    a: &CochainComplex,
    b: &CochainComplex,
    chain_map: &[SparseMatrix],
    n: usize,
) -> Result<usize, LinalgError> {
    if chain_map.len() != a.levels.len() || a.levels.len() != b.levels.len() {
        return Err(LinalgError::Shape {
            context: "chain map needs one matrix per level of equally long complexes",
        });
    }
    for (k, f) in chain_map.iter().enumerate() {
        if f.cols() != a.dim(k) || f.rows() != b.dim(k) {
            return Err(LinalgError::Shape {
                context: "chain map component has the wrong shape",
            });
        }
    }
    for k in 0..a.differentials.len() {
        let lhs = chain_map[k + 1].mul(&a.differentials[k])?;
        let rhs = b.differentials[k].mul(&chain_map[k])?;
        if lhs != rhs {
            return Err(LinalgError::NotChainMap { level: k });
        }
    }
    if n >= a.levels.len() {
        return Ok(0);
    }
    let cocycles = kernel_basis(&a.outgoing(n));
    let pushed: Vec<_> = cocycles
        .iter()
        .map(|z| chain_map[n].mul_vec(z))
        .collect::<Result<_, _>>()?;
    let boundaries = b.incoming(n);
    let images = SparseMatrix::from_columns(b.dim(n), &pushed)?;
    Ok(rank(&boundaries.hconcat(&images)?) - rank(&boundaries))
}
