//! Symmetric bilinear forms, their orthogonal groups, and the explicit
//! orthogonal elements used to seed the cycle construction.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::field::ensure_prime;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A non-singular symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch(
                "Gram matrix must be square".into(),
            ));
        }
        if !gram.is_symmetric() {
            return Err(Error::SpecInvalid("Gram matrix is not symmetric".into()));
        }
        if !gram.is_invertible() {
            return Err(Error::Singular);
        }
        Ok(Self { gram })
    }

    /// The standard dot product on `(Z/(p))^dim`.
    pub fn standard(dim: usize, p: u32) -> Result<Self> {
        Self::new(Matrix::identity(dim, p)?)
    }

    /// The form with Gram matrix `[[0, I], [I, 0]]` on `(Z/(p))^(2·half)`.
    pub fn hyperbolic(half: usize, p: u32) -> Result<Self> {
        ensure_prime(p)?;
        let n = 2 * half;
        let mut g = Matrix::zeros(n, n, p);
        for i in 0..half {
            g.set(i, half + i, 1);
            g.set(half + i, i, 1);
        }
        Self::new(g)
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn modulus(&self) -> u32 {
        self.gram.modulus()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn eval(&self, u: &[u32], v: &[u32]) -> u32 {
        self.gram.bilinear(u, v)
    }

    /// Whether `b(x, x) = 0` for every basis vector (alternating in characteristic 2).
    pub fn is_alternating(&self) -> bool {
        (0..self.dim()).all(|i| self.gram.at(i, i) == 0)
    }
}

/// `fᵀ · gram · f = gram`.
pub fn is_orthogonal(f: &Matrix, form: &BilinearForm) -> Result<bool> {
    if !f.is_square() || f.rows() != form.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} map against a form of dimension {}",
            f.rows(),
            f.cols(),
            form.dim()
        )));
    }
    if f.modulus() != form.modulus() {
        return Err(Error::ModulusMismatch {
            left: f.modulus(),
            right: form.modulus(),
        });
    }
    let lhs = f.transpose().mul_unchecked(form.gram()).mul_unchecked(f);
    Ok(&lhs == form.gram())
}

/// Least `e ≥ 1` with `f^e = I`, refusing to look past `cap`.
pub fn matrix_order(f: &Matrix, cap: u64) -> Result<u64> {
    if !f.is_square() {
        return Err(Error::DimensionMismatch(
            "order of a non-square matrix".into(),
        ));
    }
    if !f.is_invertible() {
        return Err(Error::NotInvertible);
    }
    let mut power = f.clone();
    for e in 1..=cap {
        if power.is_identity() {
            return Ok(e);
        }
        power = power.mul_unchecked(f);
    }
    Err(Error::CapExceeded { cap })
}

/// `det(f − I) ≠ 0`.
pub fn minus_id_bijective(f: &Matrix) -> bool {
    f.minus_identity()
        .map(|d| d.is_invertible())
        .unwrap_or(false)
}

/// An element of `O(V, b)` together with its cached multiplicative order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalMap {
    matrix: Matrix,
    form: BilinearForm,
    order: u64,
}

impl OrthogonalMap {
    /// Verifies orthogonality and computes the order (bounded by `cap`).
    pub fn new(matrix: Matrix, form: BilinearForm, cap: u64) -> Result<Self> {
        if !is_orthogonal(&matrix, &form)? {
            return Err(Error::SpecInvalid("map does not preserve the form".into()));
        }
        let order = matrix_order(&matrix, cap)?;
        Ok(Self {
            matrix,
            form,
            order,
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn minus_id_bijective(&self) -> bool {
        minus_id_bijective(&self.matrix)
    }
}

/// Companion matrix of the monic polynomial with low-order coefficients
/// `coeffs` (`x^k + c_{k-1}x^{k-1} + … + c_0`): ones on the subdiagonal and
/// `−c_0, …, −c_{k−1}` down the last column.
pub fn companion(coeffs: &[u32], p: u32) -> Result<Matrix> {
    ensure_prime(p)?;
    let k = coeffs.len();
    if k == 0 {
        return Err(Error::DimensionMismatch(
            "companion of a constant polynomial".into(),
        ));
    }
    let mut c = Matrix::zeros(k, k, p);
    for i in 1..k {
        c.set(i, i - 1, 1);
    }
    for (i, &a) in coeffs.iter().enumerate() {
        c.set(i, k - 1, (p - a % p) % p);
    }
    Ok(c)
}

/// Companion matrix of `x^{q−1} + … + x + 1` over `Z/(p)`.
pub fn companion_cyclotomic(q: u32, p: u32) -> Result<Matrix> {
    ensure_prime(q)?;
    ensure_prime(p)?;
    if q == p {
        return Err(Error::EqualPrimes(q));
    }
    companion(&vec![1; (q - 1) as usize], p)
}

/// The one-dimensional witness `([1], [−1])` for order 2.
pub fn negation_witness(p: u32) -> Result<(BilinearForm, OrthogonalMap)> {
    if p == 2 {
        return Err(Error::EqualPrimes(2));
    }
    let form = BilinearForm::standard(1, p)?;
    let f = Matrix::new(1, 1, p, &[-1])?;
    let map = OrthogonalMap::new(f, form.clone(), 2)?;
    Ok((form, map))
}

/// Hyperbolic witness of order `q` over `Z/(p)`: Gram `[[0, I], [I, 0]]`
/// and `f = diag(C, (C⁻¹)ᵀ)` with `C` the cyclotomic companion matrix.
/// For `q = 2` this is the one-dimensional negation witness.
pub fn hyperbolic_witness(q: u32, p: u32) -> Result<(BilinearForm, OrthogonalMap)> {
    ensure_prime(q)?;
    ensure_prime(p)?;
    if q == p {
        return Err(Error::EqualPrimes(q));
    }
    if q == 2 {
        return negation_witness(p);
    }
    let c = companion_cyclotomic(q, p)?;
    let dual = c.inverse()?.transpose();
    let f = Matrix::block_diagonal(&c, &dual)?;
    let form = BilinearForm::hyperbolic((q - 1) as usize, p)?;
    let map = OrthogonalMap::new(f, form.clone(), q as u64)?;
    if map.order() != q as u64 || !map.minus_id_bijective() {
        return Err(Error::NoWitness(format!(
            "hyperbolic construction failed for q={q}, p={p}"
        )));
    }
    Ok((form, map))
}

/// Basis of the space of symmetric matrices `G` with `fᵀ G f = G`.
pub fn invariant_symmetric_forms(f: &Matrix) -> Vec<Matrix> {
    let n = f.rows();
    let p = f.modulus();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let unknown = |i: usize, j: usize| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        pairs.iter().position(|&x| x == (a, b)).unwrap()
    };
    // One equation per (a, b), a ≤ b: Σ_{i,j} f_{ia} G_{ij} f_{jb} − G_{ab} = 0.
    let mut system = Matrix::zeros(pairs.len(), pairs.len(), p);
    for (row, &(a, b)) in pairs.iter().enumerate() {
        let mut coeff = vec![0u64; pairs.len()];
        for i in 0..n {
            for j in 0..n {
                let w = f.at(i, a) as u64 * f.at(j, b) as u64 % p as u64;
                coeff[unknown(i, j)] += w;
            }
        }
        coeff[unknown(a, b)] += (p - 1) as u64;
        for (col, c) in coeff.into_iter().enumerate() {
            system.set(row, col, (c % p as u64) as u32);
        }
    }
    system
        .kernel()
        .into_iter()
        .map(|v| {
            let mut g = Matrix::zeros(n, n, p);
            for (&(i, j), &x) in pairs.iter().zip(&v) {
                g.set(i, j, x);
                g.set(j, i, x);
            }
            g
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u32, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(p, rows).unwrap()
    }

    #[test]
    fn orthogonality_examples() {
        let alt = BilinearForm::new(m(2, &[&[0, 1], &[1, 0]])).unwrap();
        assert!(is_orthogonal(&m(2, &[&[0, 1], &[1, 1]]), &alt).unwrap());
        let one = BilinearForm::standard(1, 5).unwrap();
        assert!(is_orthogonal(&m(5, &[&[-1]]), &one).unwrap());
        let id3 = BilinearForm::standard(2, 3).unwrap();
        assert!(!is_orthogonal(&m(3, &[&[1, 1], &[0, 1]]), &id3).unwrap());
        assert!(is_orthogonal(&m(3, &[&[1]]), &id3).is_err());
    }

    #[test]
    fn form_validation() {
        assert_eq!(
            BilinearForm::new(m(3, &[&[1, 1], &[1, 1]])),
            Err(Error::Singular)
        );
        assert!(matches!(
            BilinearForm::new(m(3, &[&[1, 1], &[0, 1]])),
            Err(Error::SpecInvalid(_))
        ));
    }

    #[test]
    fn order_examples() {
        assert_eq!(matrix_order(&m(2, &[&[0, 1], &[1, 1]]), 10).unwrap(), 3);
        assert_eq!(
            matrix_order(&Matrix::identity(3, 5).unwrap(), 10).unwrap(),
            1
        );
        assert_eq!(matrix_order(&m(3, &[&[-1]]), 10).unwrap(), 2);
        assert_eq!(
            matrix_order(&m(2, &[&[1, 1], &[1, 1]]), 10),
            Err(Error::NotInvertible)
        );
        assert_eq!(
            matrix_order(&m(2, &[&[0, 1], &[1, 1]]), 2),
            Err(Error::CapExceeded { cap: 2 })
        );
    }

    #[test]
    fn companion_examples() {
        assert_eq!(
            companion_cyclotomic(3, 2).unwrap(),
            m(2, &[&[0, 1], &[1, 1]])
        );
        assert_eq!(companion_cyclotomic(2, 5).unwrap(), m(5, &[&[4]]));
        assert_eq!(
            companion_cyclotomic(3, 7).unwrap(),
            m(7, &[&[0, 6], &[1, 6]])
        );
        assert_eq!(companion_cyclotomic(3, 3), Err(Error::EqualPrimes(3)));
    }

    #[test]
    fn companion_has_order_q() {
        for (q, p) in [(3, 2), (5, 2), (7, 3), (3, 7), (5, 3), (11, 2), (2, 3)] {
            let c = companion_cyclotomic(q, p).unwrap();
            assert_eq!(matrix_order(&c, q as u64).unwrap(), q as u64, "q={q} p={p}");
        }
    }

    #[test]
    fn minus_id_examples() {
        assert!(minus_id_bijective(&m(2, &[&[0, 1], &[1, 1]])));
        assert!(!minus_id_bijective(&Matrix::identity(3, 5).unwrap()));
        assert!(!minus_id_bijective(&m(3, &[&[-1, 0], &[0, 1]])));
    }

    #[test]
    fn hyperbolic_examples() {
        let (form, f) = hyperbolic_witness(3, 7).unwrap();
        assert_eq!(form.dim(), 4);
        assert_eq!(matrix_order(f.matrix(), 3).unwrap(), 3);
        assert!(minus_id_bijective(f.matrix()));
        let (form, f) = hyperbolic_witness(3, 5).unwrap();
        assert!(is_orthogonal(f.matrix(), &form).unwrap());
        let (form, f) = hyperbolic_witness(2, 3).unwrap();
        assert_eq!(form.gram(), &m(3, &[&[1]]));
        assert_eq!(f.matrix(), &m(3, &[&[-1]]));
        assert_eq!(hyperbolic_witness(5, 5), Err(Error::EqualPrimes(5)));
    }

    #[test]
    fn hyperbolic_witness_is_always_verified() {
        for q in [3u32, 5, 7, 11, 13] {
            for p in [2u32, 3, 5, 7, 11, 13] {
                if p == q {
                    continue;
                }
                let (form, f) = hyperbolic_witness(q, p).unwrap();
                assert!(is_orthogonal(f.matrix(), &form).unwrap());
                assert_eq!(matrix_order(f.matrix(), q as u64).unwrap(), q as u64);
                assert!(minus_id_bijective(f.matrix()));
            }
        }
    }

    #[test]
    fn invariant_forms_of_order_three_element() {
        let f = m(2, &[&[0, 1], &[1, 1]]);
        let forms = invariant_symmetric_forms(&f);
        assert_eq!(forms, vec![m(2, &[&[0, 1], &[1, 0]])]);
    }
}
