use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::HochschildError;
use crate::linalg::{kernel_basis, CochainComplex, Rational, SparseMatrix};

/// Default cap on the dimension of any cochain space in the bar complex.
pub const DEFAULT_COCHAIN_CAP: usize = 20_000;

/// Finite-dimensional associative unital algebra with basis `e_0..e_{m-1}`:
/// `e_i e_j = Σ_k mult[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDimAlgebra {
    mult: Vec<Vec<Vec<Rational>>>,
    unit: Vec<Rational>,
}

fn zero_tensor(m: usize) -> Vec<Vec<Vec<Rational>>> {
    vec![vec![vec![Rational::zero(); m]; m]; m]
}

impl FiniteDimAlgebra {
    pub fn new(mult: Vec<Vec<Vec<Rational>>>, unit: Vec<Rational>) -> Result<Self, HochschildError> {
        let m = unit.len();
        if mult.len() != m || mult.iter().any(|r| r.len() != m || r.iter().any(|v| v.len() != m)) {
            return Err(HochschildError::Shape);
        }
        let alg = FiniteDimAlgebra { mult, unit };
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let left = alg.product(&alg.product(&alg.basis(i), &alg.basis(j)), &alg.basis(k));
                    let right = alg.product(&alg.basis(i), &alg.product(&alg.basis(j), &alg.basis(k)));
                    if left != right {
                        return Err(HochschildError::Associativity(i, j, k));
                    }
                }
            }
        }
        for i in 0..m {
            let e = alg.basis(i);
            if alg.product(&alg.unit, &e) != e || alg.product(&e, &alg.unit) != e {
                return Err(HochschildError::Unit);
            }
        }
        Ok(alg)
    }

    /// Builds from `(i, j, k, value)` structure constants.
    pub fn from_quadruples<I>(dim: usize, entries: I, unit: Vec<Rational>) -> Result<Self, HochschildError>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let mut mult = zero_tensor(dim);
        for (i, j, k, v) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(HochschildError::Shape);
            }
            mult[i][j][k] += v;
        }
        Self::new(mult, unit)
    }

    /// ℚ itself.
    pub fn scalars() -> Self {
        Self::truncated_polynomial(1)
    }

    /// `ℚ[t]/(t^n)` with basis `1, t, …, t^{n-1}`.
    pub fn truncated_polynomial(n: usize) -> Self {
        let mut mult = zero_tensor(n);
        for i in 0..n {
            for j in 0..n - i {
                mult[i][j][i + j] = Rational::one();
            }
        }
        let mut unit = vec![Rational::zero(); n];
        unit[0] = Rational::one();
        FiniteDimAlgebra { mult, unit }
    }

    /// `ℚ[ε]/(ε²)`.
    pub fn dual_numbers() -> Self {
        Self::truncated_polynomial(2)
    }

    /// `ℚ^n` with componentwise product.
    pub fn diagonal(n: usize) -> Self {
        let mut mult = zero_tensor(n);
        for i in 0..n {
            mult[i][i][i] = Rational::one();
        }
        FiniteDimAlgebra {
            mult,
            unit: vec![Rational::one(); n],
        }
    }

    /// Upper triangular 2x2 matrices, basis `e11, e12, e22`.
    pub fn upper_triangular_2x2() -> Self {
        let one = Rational::one;
        let mut mult = zero_tensor(3);
        mult[0][0][0] = one(); // e11 e11 = e11
        mult[0][1][1] = one(); // e11 e12 = e12
        mult[1][2][1] = one(); // e12 e22 = e12
        mult[2][2][2] = one(); // e22 e22 = e22
        FiniteDimAlgebra {
            mult,
            unit: vec![one(), Rational::zero(), one()],
        }
    }

    /// Full 2x2 matrices, basis `e11, e12, e21, e22`.
    pub fn matrices_2x2() -> Self {
        let mut mult = zero_tensor(4);
        let idx = |r: usize, c: usize| 2 * r + c;
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    mult[idx(a, b)][idx(b, c)][idx(a, c)] = Rational::one();
                }
            }
        }
        let mut unit = vec![Rational::zero(); 4];
        unit[0] = Rational::one();
        unit[3] = Rational::one();
        FiniteDimAlgebra { mult, unit }
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn structure(&self) -> &[Vec<Vec<Rational>>] {
        &self.mult
    }

    fn basis(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn product(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let m = self.dim();
        let mut out = vec![Rational::zero(); m];
        for i in (0..m).filter(|&i| !a[i].is_zero()) {
            for j in (0..m).filter(|&j| !b[j].is_zero()) {
                let s = &a[i] * &b[j];
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &s * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `v ↦ e_i v`.
    pub fn left_multiplication(&self, i: usize) -> SparseMatrix {
        let m = self.dim();
        let mut out = SparseMatrix::zeros(m, m);
        for j in 0..m {
            for (k, c) in self.mult[i][j].iter().enumerate() {
                out.add_at(k, j, c);
            }
        }
        out
    }

    /// Matrix of `v ↦ v e_i`.
    pub fn right_multiplication(&self, i: usize) -> SparseMatrix {
        let m = self.dim();
        let mut out = SparseMatrix::zeros(m, m);
        for j in 0..m {
            for (k, c) in self.mult[j][i].iter().enumerate() {
                out.add_at(k, j, c);
            }
        }
        out
    }
}

/// Bimodule over a [`FiniteDimAlgebra`]: `left[i]` is `m ↦ e_i m` and
/// `right[i]` is `m ↦ m e_i`, both as matrices on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    dim: usize,
    left: Vec<SparseMatrix>,
    right: Vec<SparseMatrix>,
}

fn combination(mats: &[SparseMatrix], coeffs: &[Rational], dim: usize) -> Result<SparseMatrix, HochschildError> {
    let mut out = SparseMatrix::zeros(dim, dim);
    for (m, c) in mats.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&m.scale(c))?;
        }
    }
    Ok(out)
}

impl Bimodule {
    pub fn new(
        alg: &FiniteDimAlgebra,
        dim: usize,
        left: Vec<SparseMatrix>,
        right: Vec<SparseMatrix>,
    ) -> Result<Self, HochschildError> {
        let m = alg.dim();
        let square = |v: &[SparseMatrix]| v.len() == m && v.iter().all(|a| a.rows() == dim && a.cols() == dim);
        if !square(&left) || !square(&right) {
            return Err(HochschildError::Shape);
        }
        let id = SparseMatrix::identity(dim);
        if combination(&left, alg.unit(), dim)? != id {
            return Err(HochschildError::BimoduleAxiom(
                "unit does not act as the identity on the left",
            ));
        }
        if combination(&right, alg.unit(), dim)? != id {
            return Err(HochschildError::BimoduleAxiom(
                "unit does not act as the identity on the right",
            ));
        }
        for i in 0..m {
            for j in 0..m {
                let prod = &alg.structure()[i][j];
                if left[i].mul(&left[j])? != combination(&left, prod, dim)? {
                    return Err(HochschildError::BimoduleAxiom("left action is not associative"));
                }
                if right[j].mul(&right[i])? != combination(&right, prod, dim)? {
                    return Err(HochschildError::BimoduleAxiom("right action is not associative"));
                }
                if left[i].mul(&right[j])? != right[j].mul(&left[i])? {
                    return Err(HochschildError::BimoduleAxiom("left and right actions do not commute"));
                }
            }
        }
        Ok(Bimodule { dim, left, right })
    }

    /// The algebra as a bimodule over itself.
    pub fn regular(alg: &FiniteDimAlgebra) -> Self {
        Bimodule {
            dim: alg.dim(),
            left: (0..alg.dim()).map(|i| alg.left_multiplication(i)).collect(),
            right: (0..alg.dim()).map(|i| alg.right_multiplication(i)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self) -> &[SparseMatrix] {
        &self.left
    }

    pub fn right(&self) -> &[SparseMatrix] {
        &self.right
    }
}

/// `dim {m : e_i m = m e_i for all i}`, computed directly as a kernel.
pub fn center_dim(alg: &FiniteDimAlgebra, m: &Bimodule) -> Result<usize, HochschildError> {
    let p = m.dim();
    let mut stacked = SparseMatrix::zeros(alg.dim() * p, p);
    for i in 0..alg.dim() {
        let diff = m.left[i].sub(&m.right[i])?;
        for (r, c, v) in diff.iter() {
            stacked.add_at(i * p + r, c, v);
        }
    }
    Ok(kernel_basis(&stacked).len())
}

/// Encodes the normalized cochain basis: a tuple of reduced-basis indices
/// (most significant first) times the coefficient coordinate.
struct BarBasis {
    reduced: usize,
    coeff: usize,
}

impl BarBasis {
    fn tuples(&self, n: usize) -> usize {
        self.reduced.pow(n as u32)
    }

    fn index(&self, tuple: &[usize], b: usize) -> usize {
        tuple.iter().fold(0, |acc, &t| acc * self.reduced + t) * self.coeff + b
    }

    fn decode(&self, mut idx: usize, n: usize) -> Vec<usize> {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = idx % self.reduced;
            idx /= self.reduced;
        }
        t
    }
}

/// Reduced bar cochain complex `Hom(Ā^{⊗n}, M)` for `n = 0..=top`, where
/// `Ā = A / ℚ·1`.
///
/// `Ā` gets the basis `e_i` for `i ≠ i0`, with `i0` the first coordinate
/// where the unit is nonzero; products are projected along the unit.
pub fn bar_complex(
    alg: &FiniteDimAlgebra,
    m: &Bimodule,
    top: usize,
    cap: usize,
) -> Result<CochainComplex, HochschildError> {
    let dim = alg.dim();
    let i0 = alg
        .unit()
        .iter()
        .position(|u| !u.is_zero())
        .ok_or(HochschildError::Unit)?;
    let lifts: Vec<usize> = (0..dim).filter(|&i| i != i0).collect();
    let bb = BarBasis {
        reduced: lifts.len(),
        coeff: m.dim(),
    };
    let levels: Vec<usize> = (0..=top).map(|n| bb.tuples(n) * bb.coeff).collect();
    if let Some(&big) = levels.iter().find(|&&d| d > cap) {
        return Err(HochschildError::CochainCap { dim: big, cap });
    }
    let project = |v: &[Rational]| -> Vec<Rational> {
        let s = &v[i0] / &alg.unit()[i0];
        lifts.iter().map(|&i| &v[i] - &s * &alg.unit()[i]).collect()
    };
    // products[a][b] = projection of e_{lifts[a]} e_{lifts[b]}.
    let products: Vec<Vec<Vec<Rational>>> = lifts
        .iter()
        .map(|&i| lifts.iter().map(|&j| project(&alg.structure()[i][j])).collect())
        .collect();
    let sign = |k: usize| {
        if k.is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        }
    };
    let mut diffs = Vec::with_capacity(top);
    for n in 0..top {
        let mut d = SparseMatrix::zeros(levels[n + 1], levels[n]);
        for t in 0..bb.tuples(n + 1) {
            let tuple = bb.decode(t, n + 1);
            // a_1 · f(a_2, …)
            for (out, b, v) in m.left[lifts[tuple[0]]].iter() {
                d.add_at(bb.index(&tuple, out), bb.index(&tuple[1..], b), v);
            }
            // (−1)^i f(…, a_i a_{i+1}, …)
            for i in 1..=n {
                let prod = &products[tuple[i - 1]][tuple[i]];
                for (k, c) in prod.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut merged = Vec::with_capacity(n);
                    merged.extend_from_slice(&tuple[..i - 1]);
                    merged.push(k);
                    merged.extend_from_slice(&tuple[i + 1..]);
                    let coeff = sign(i) * c;
                    for b in 0..bb.coeff {
                        d.add_at(bb.index(&tuple, b), bb.index(&merged, b), &coeff);
                    }
                }
            }
            // (−1)^{n+1} f(…, a_n) · a_{n+1}
            let s = sign(n + 1);
            for (out, b, v) in m.right[lifts[tuple[n]]].iter() {
                d.add_at(bb.index(&tuple, out), bb.index(&tuple[..n], b), &(&s * v));
            }
        }
        diffs.push(d);
    }
    Ok(CochainComplex::new(levels, diffs)?)
}

/// `dim HH^n(A, M)` for `n = 0..=n_max` from the reduced bar complex.
pub fn bar_hh_dims(alg: &FiniteDimAlgebra, m: &Bimodule, n_max: usize) -> Result<Vec<usize>, HochschildError> {
    bar_hh_dims_with_cap(alg, m, n_max, DEFAULT_COCHAIN_CAP)
}

pub fn bar_hh_dims_with_cap(
    alg: &FiniteDimAlgebra,
    m: &Bimodule,
    n_max: usize,
    cap: usize,
) -> Result<Vec<usize>, HochschildError> {
    let mut dims = bar_complex(alg, m, n_max + 1, cap)?.cohomology_dims();
    dims.truncate(n_max + 1);
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn oracle_values() {
        let cases = [
            (FiniteDimAlgebra::scalars(), vec![1, 0, 0, 0]),
            (FiniteDimAlgebra::dual_numbers(), vec![2, 1, 1, 1]),
            (FiniteDimAlgebra::upper_triangular_2x2(), vec![1, 0, 0, 0]),
        ];
        for (alg, expected) in cases {
            let m = Bimodule::regular(&alg);
            assert_eq!(bar_hh_dims(&alg, &m, 3).unwrap(), expected);
        }
    }

    #[test]
    fn builtin_algebras_are_valid() {
        for alg in [
            FiniteDimAlgebra::scalars(),
            FiniteDimAlgebra::truncated_polynomial(3),
            FiniteDimAlgebra::diagonal(2),
            FiniteDimAlgebra::upper_triangular_2x2(),
            FiniteDimAlgebra::matrices_2x2(),
        ] {
            let checked = FiniteDimAlgebra::new(alg.structure().to_vec(), alg.unit().to_vec()).unwrap();
            assert_eq!(checked, alg);
            let reg = Bimodule::regular(&alg);
            assert!(Bimodule::new(&alg, reg.dim(), reg.left().to_vec(), reg.right().to_vec()).is_ok());
        }
    }

    #[test]
    fn invalid_algebras_are_rejected() {
        // e0 e0 = e1 with unit e0 breaks the unit law.
        let err = FiniteDimAlgebra::from_quadruples(2, [(0, 0, 1, rat(1, 1))], vec![rat(1, 1), rat(0, 1)]);
        assert!(err.is_err());
        let err = FiniteDimAlgebra::from_quadruples(2, [(0, 0, 5, rat(1, 1))], vec![rat(1, 1), rat(0, 1)]);
        assert_eq!(err, Err(HochschildError::Shape));
    }

    #[test]
    fn center_matches_hh0() {
        for alg in [
            FiniteDimAlgebra::matrices_2x2(),
            FiniteDimAlgebra::upper_triangular_2x2(),
            FiniteDimAlgebra::diagonal(3),
        ] {
            let m = Bimodule::regular(&alg);
            assert_eq!(bar_hh_dims(&alg, &m, 0).unwrap()[0], center_dim(&alg, &m).unwrap());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let alg = FiniteDimAlgebra::matrices_2x2();
        let m = Bimodule::regular(&alg);
        assert!(matches!(
            bar_hh_dims_with_cap(&alg, &m, 4, 100),
            Err(HochschildError::CochainCap { .. })
        ));
    }
}
