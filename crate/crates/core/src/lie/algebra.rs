use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::LieError;
use crate::linalg::Rational;

/// A finite-dimensional Lie algebra given by structure constants:
/// `[e_i, e_j] = Σ_k structure[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    structure: Vec<Vec<Vec<Rational>>>,
}

impl LieAlgebra {
    /// Validates the shape, antisymmetry and the Jacobi identity exactly.
    pub fn new(structure: Vec<Vec<Vec<Rational>>>) -> Result<Self, LieError> {
        let n = structure.len();
        if structure
            .iter()
            .any(|row| row.len() != n || row.iter().any(|v| v.len() != n))
        {
            return Err(LieError::Shape);
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if structure[i][j][k] != -structure[j][i][k].clone() {
                        return Err(LieError::Antisymmetry(i, j));
                    }
                }
            }
        }
        let g = LieAlgebra { structure };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut sum = g.bracket_vec(&g.bracket_vec(&g.unit(i), &g.unit(j)), &g.unit(k));
                    let t2 = g.bracket_vec(&g.bracket_vec(&g.unit(j), &g.unit(k)), &g.unit(i));
                    let t3 = g.bracket_vec(&g.bracket_vec(&g.unit(k), &g.unit(i)), &g.unit(j));
                    for l in 0..n {
                        sum[l] += &t2[l] + &t3[l];
                    }
                    if sum.iter().any(|v| !v.is_zero()) {
                        return Err(LieError::Jacobi(i, j, k));
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            structure: vec![vec![vec![Rational::zero(); n]; n]; n],
        }
    }

    /// Basis `(x, y)` with `[x, y] = c·x`.
    pub fn two_dim_solvable(c: Rational) -> Self {
        let mut s = vec![vec![vec![Rational::zero(); 2]; 2]; 2];
        s[0][1][0] = c.clone();
        s[1][0][0] = -c;
        LieAlgebra { structure: s }
    }

    /// `[x, y] = x`.
    pub fn nonabelian_2d() -> Self {
        Self::two_dim_solvable(Rational::one())
    }

    /// The Lie algebra spanned by `x, y` inside `A_a` for `a ≠ 0`:
    /// `a·xy − a·yx = x` gives `[x, y] = x / a`.
    pub fn family(a: &Rational) -> Result<Self, LieError> {
        if a.is_zero() {
            return Err(LieError::ZeroParameter);
        }
        Ok(Self::two_dim_solvable(Rational::one() / a))
    }

    pub fn dim(&self) -> usize {
        self.structure.len()
    }

    pub fn structure(&self) -> &[Vec<Vec<Rational>>] {
        &self.structure
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &[Rational] {
        &self.structure[i][j]
    }

    fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn bracket_vec(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let s = &u[i] * &v[j];
                for k in 0..n {
                    if !self.structure[i][j][k].is_zero() {
                        out[k] += &s * &self.structure[i][j][k];
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn builtin_algebras_validate() {
        for g in [
            LieAlgebra::abelian(3),
            LieAlgebra::nonabelian_2d(),
            LieAlgebra::family(&rat(-3, 1)).unwrap(),
        ] {
            assert_eq!(LieAlgebra::new(g.structure().to_vec()).unwrap(), g);
        }
        assert_eq!(
            LieAlgebra::family(&rat(2, 1)).unwrap().bracket(0, 1),
            &[rat(1, 2), rat(0, 1)]
        );
    }

    #[test]
    fn rejects_non_lie_brackets() {
        let mut s = LieAlgebra::nonabelian_2d().structure().to_vec();
        s[1][0][0] = rat(0, 1);
        assert_eq!(LieAlgebra::new(s), Err(LieError::Antisymmetry(0, 1)));
        // [e0,e1] = e2, [e1,e2] = e1, [e0,e2] = 0: Jacobi fails.
        let z = || rat(0, 1);
        let mut s = vec![vec![vec![z(), z(), z()]; 3]; 3];
        s[0][1][2] = rat(1, 1);
        s[1][0][2] = rat(-1, 1);
        s[1][2][1] = rat(1, 1);
        s[2][1][1] = rat(-1, 1);
        assert!(matches!(LieAlgebra::new(s), Err(LieError::Jacobi(..))));
        assert_eq!(LieAlgebra::family(&rat(0, 1)), Err(LieError::ZeroParameter));
    }
}
