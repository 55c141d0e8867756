//! Dense matrices over `Z/(p)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::field::{ensure_prime, inv_mod, reduce, Residue};
use crate::error::{Error, Result};

/// A rectangular matrix over `Z/(p)`, entries row-major in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    modulus: u32,
    data: Vec<u32>,
}

impl Matrix {
    /// Builds a matrix from row-major integers, reducing each entry mod `p`.
    pub fn new(rows: usize, cols: usize, modulus: u32, entries: &[i64]) -> Result<Self> {
        ensure_prime(modulus)?;
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "empty {rows}x{cols} matrix"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let data = entries.iter().map(|&v| reduce(v, modulus)).collect();
        Ok(Self {
            rows,
            cols,
            modulus,
            data,
        })
    }

    /// Builds a matrix from a list of rows.
    pub fn from_rows<R: AsRef<[i64]>>(modulus: u32, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let flat: Vec<i64> = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        Self::new(rows.len(), cols, modulus, &flat)
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, modulus: u32, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&v| v < modulus));
        Self {
            rows,
            cols,
            modulus,
            data,
        }
    }

    pub fn identity(n: usize, modulus: u32) -> Result<Self> {
        ensure_prime(modulus)?;
        Ok(Self::identity_raw(n, modulus))
    }

    pub(crate) fn identity_raw(n: usize, modulus: u32) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1 % modulus;
        }
        Self {
            rows: n,
            cols: n,
            modulus,
            data,
        }
    }

    pub(crate) fn zeros(rows: usize, cols: usize, modulus: u32) -> Self {
        Self {
            rows,
            cols,
            modulus,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn get(&self, r: usize, c: usize) -> Residue {
        Residue::raw(self.at(r, c), self.modulus)
    }

    #[inline]
    pub(crate) fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.modulus;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Rows as signed integers, the shape used by spec files.
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&v| v as i64).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows, self.modulus);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.at(r, c);
            }
        }
        out
    }

    fn check_same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let p = self.modulus as u64;
        let mut out = Self::zeros(self.rows, other.cols, self.modulus);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = ((out.data[idx] as u64 + a * other.at(k, c) as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(
                "addition of differently shaped matrices".into(),
            ));
        }
        let p = self.modulus;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(Self { data, ..*self })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(
                "subtraction of differently shaped matrices".into(),
            ));
        }
        let p = self.modulus;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Ok(Self { data, ..*self })
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "f - id of a non-square matrix".into(),
            ));
        }
        self.sub(&Self::identity_raw(self.rows, self.modulus))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.at(r, c) == u32::from(r == c)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.at(r, c) == self.at(c, r)))
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.rows];
        self.apply_into(v, &mut out);
        out
    }

    #[inline]
    pub(crate) fn apply_into(&self, v: &[u32], out: &mut [u32]) {
        debug_assert_eq!(v.len(), self.cols);
        let p = self.modulus as u64;
        for (r, slot) in out.iter_mut().enumerate().take(self.rows) {
            let mut acc = 0u64;
            for (c, &x) in v.iter().enumerate() {
                acc += self.at(r, c) as u64 * x as u64;
            }
            *slot = (acc % p) as u32;
        }
    }

    /// `uᵀ · self · v`.
    pub fn bilinear(&self, u: &[u32], v: &[u32]) -> u32 {
        let p = self.modulus as u64;
        let mut acc = 0u64;
        for (r, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mut row = 0u64;
            for (c, &b) in v.iter().enumerate() {
                row += self.at(r, c) as u64 * b as u64;
            }
            acc += a as u64 * (row % p);
        }
        (acc % p) as u32
    }

    pub fn pow(&self, mut exp: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "power of a non-square matrix".into(),
            ));
        }
        let mut result = Self::identity_raw(self.rows, self.modulus);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            exp >>= 1;
        }
        Ok(result)
    }

    /// Row-reduces a copy, returning the echelon form, the pivot columns and
    /// the determinant of the leading square block (when square).
    fn eliminate(&self) -> (Self, Vec<usize>, u32) {
        let p = self.modulus as u64;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det: u64 = 1;
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot) = (row..m.rows).find(|&r| m.at(r, col) != 0) else {
                det = 0;
                continue;
            };
            if pivot != row {
                for c in 0..m.cols {
                    m.data.swap(pivot * m.cols + c, row * m.cols + c);
                }
                det = (p - det) % p;
            }
            let pv = m.at(row, col);
            det = det * pv as u64 % p;
            let inv = inv_mod(pv, m.modulus) as u64;
            for c in 0..m.cols {
                let v = m.at(row, c) as u64 * inv % p;
                m.set(row, c, v as u32);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.at(r, col) as u64;
                if factor == 0 {
                    continue;
                }
                for c in 0..m.cols {
                    let v = (m.at(r, c) as u64 + p * p - factor * m.at(row, c) as u64) % p;
                    m.set(r, c, v as u32);
                }
            }
            pivots.push(col);
            row += 1;
        }
        if pivots.len() < m.rows.min(m.cols) {
            det = 0;
        }
        (m, pivots, det as u32)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().1.len()
    }

    pub fn determinant(&self) -> Result<Residue> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        Ok(Residue::raw(self.eliminate().2, self.modulus))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.eliminate().2 != 0
    }

    /// Inverse by Gauss-Jordan elimination with first-nonzero pivoting.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "inverse of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n, self.modulus);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let (reduced, pivots, _) = aug.eliminate();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut out = Self::zeros(n, n, self.modulus);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, reduced.at(r, n + c));
            }
        }
        Ok(out)
    }

    /// Basis of the right kernel `{x : self·x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let p = self.modulus;
        let (reduced, pivots, _) = self.eliminate();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u32; self.cols];
                v[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - reduced.at(r, fc)) % p;
                }
                v
            })
            .collect()
    }

    /// Echelon basis of the column space, usable for membership tests.
    pub fn column_space(&self) -> Subspace {
        Subspace::spanned_by(
            self.modulus,
            self.rows,
            (0..self.cols).map(|c| (0..self.rows).map(|r| self.at(r, c)).collect::<Vec<_>>()),
        )
    }

    /// Block-diagonal matrix `diag(a, b)`.
    pub fn block_diagonal(a: &Self, b: &Self) -> Result<Self> {
        a.check_same_modulus(b)?;
        let mut out = Self::zeros(a.rows + b.rows, a.cols + b.cols, a.modulus);
        for r in 0..a.rows {
            for c in 0..a.cols {
                out.set(r, c, a.at(r, c));
            }
        }
        for r in 0..b.rows {
            for c in 0..b.cols {
                out.set(a.rows + r, a.cols + c, b.at(r, c));
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<mod {}>{:?}", self.modulus, self.to_rows())
    }
}

/// A subspace of `(Z/(p))^dim` kept in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    modulus: u32,
    dim: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn spanned_by<I: IntoIterator<Item = Vec<u32>>>(
        modulus: u32,
        dim: usize,
        vectors: I,
    ) -> Self {
        let mut s = Self {
            modulus,
            dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        };
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    fn reduce_vector(&self, mut v: Vec<u32>) -> Vec<u32> {
        let p = self.modulus as u64;
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let factor = v[pc] as u64;
            if factor != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = ((*x as u64 + p * p - factor * y as u64) % p) as u32;
                }
            }
        }
        v
    }

    /// Adds a vector; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<u32>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut r = self.reduce_vector(v);
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let p = self.modulus as u64;
        let inv = inv_mod(r[pc], self.modulus) as u64;
        for x in r.iter_mut() {
            *x = (*x as u64 * inv % p) as u32;
        }
        for b in self.basis.iter_mut() {
            let factor = b[pc] as u64;
            if factor != 0 {
                for (x, &y) in b.iter_mut().zip(&r) {
                    *x = ((*x as u64 + p * p - factor * y as u64) % p) as u32;
                }
            }
        }
        self.basis.push(r);
        self.pivots.push(pc);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce_vector(v.to_vec()).iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u32, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(p, rows).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let a = m(2, &[&[0, 1], &[1, 1]]);
        assert_eq!(a.mul(&a).unwrap(), m(2, &[&[1, 1], &[1, 0]]));
        let id = Matrix::identity(2, 2).unwrap();
        assert_eq!(id.mul(&a).unwrap(), a);
        assert_eq!(m(3, &[&[2]]).mul(&m(3, &[&[2]])).unwrap(), m(3, &[&[1]]));
    }

    #[test]
    fn multiplication_errors() {
        let a = m(2, &[&[0, 1], &[1, 1]]);
        let b = m(3, &[&[0, 1], &[1, 1]]);
        assert!(matches!(a.mul(&b), Err(Error::ModulusMismatch { .. })));
        let c = m(2, &[&[1, 1, 1]]);
        assert!(matches!(a.mul(&c), Err(Error::DimensionMismatch(_))));
        assert_eq!(Matrix::new(1, 1, 4, &[1]), Err(Error::NotPrime(4)));
    }

    #[test]
    fn inverse_examples() {
        let a = m(2, &[&[0, 1], &[1, 1]]);
        assert_eq!(a.inverse().unwrap(), m(2, &[&[1, 1], &[1, 0]]));
        let id = Matrix::identity(4, 7).unwrap();
        assert_eq!(id.inverse().unwrap(), id);
        assert_eq!(m(2, &[&[1, 1], &[1, 1]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn determinant_and_rank() {
        assert_eq!(m(7, &[&[1, 2], &[3, 4]]).determinant().unwrap().value(), 5);
        assert_eq!(m(7, &[&[0, 1], &[1, 0]]).determinant().unwrap().value(), 6);
        assert_eq!(m(3, &[&[1, 2], &[2, 1]]).rank(), 1);
    }

    #[test]
    fn kernel_and_column_space() {
        let a = m(3, &[&[1, 2], &[2, 1]]);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).iter().all(|&x| x == 0));
        let cs = m(3, &[&[1, 0], &[0, 0]]).column_space();
        assert_eq!(cs.dimension(), 1);
        assert!(cs.contains(&[2, 0]));
        assert!(!cs.contains(&[0, 1]));
    }
}
