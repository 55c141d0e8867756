//! Orthogonal group orders, divisibility rules, minimal witness dimensions
//! and the exponent bounds for the cycle family.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::field::ensure_prime;
use crate::algebra::poly::cyclotomic_factor;
use crate::algebra::{
    companion, hyperbolic_witness, invariant_symmetric_forms, is_orthogonal, matrix_order,
    minus_id_bijective, unit_order, BilinearForm, Matrix, OrthogonalMap,
};
use crate::error::{Error, Result};

/// Default ceiling on `p^{dim²}` for exhaustive witness search.
pub const SEARCH_BUDGET: u128 = 1 << 20;

pub fn nu(k: u64) -> u64 {
    if k.is_multiple_of(2) {
        1
    } else {
        2
    }
}

/// The orthogonal groups whose orders are tabulated. For `Sp2` the
/// dimension is `2m`; for `OOdd2` and `OEven2` it is `2t + 1` and `2t`,
/// with `t` passed as `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrthoKind {
    GoOdd,
    GoPlus,
    GoMinus,
    Sp2,
    OOdd2,
    OEven2,
}

impl OrthoKind {
    pub const ALL: [OrthoKind; 6] = [
        OrthoKind::GoOdd,
        OrthoKind::GoPlus,
        OrthoKind::GoMinus,
        OrthoKind::Sp2,
        OrthoKind::OOdd2,
        OrthoKind::OEven2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrthoKind::GoOdd => "GO_odd",
            OrthoKind::GoPlus => "GO_plus",
            OrthoKind::GoMinus => "GO_minus",
            OrthoKind::Sp2 => "Sp2",
            OrthoKind::OOdd2 => "O_odd2",
            OrthoKind::OEven2 => "O_even2",
        }
    }

    fn over_two(self) -> bool {
        matches!(self, OrthoKind::Sp2 | OrthoKind::OOdd2 | OrthoKind::OEven2)
    }

    fn check_prime(self, p: u32) -> Result<()> {
        if self.over_two() != (p == 2) {
            let expected = if self.over_two() {
                "p = 2"
            } else {
                "an odd prime p"
            };
            return Err(Error::KindPrimeMismatch {
                kind: self.name(),
                expected,
            });
        }
        Ok(())
    }
}

fn checked_pow(p: u128, e: u64) -> Result<u128> {
    let e = u32::try_from(e).map_err(|_| Error::Overflow("exponent"))?;
    p.checked_pow(e).ok_or(Error::Overflow("group order"))
}

/// `∏_{i=1}^{count} (p^{2i} − 1)`.
fn even_power_product(p: u128, count: u64) -> Result<u128> {
    let mut acc: u128 = 1;
    for i in 1..=count {
        let term = checked_pow(p, 2 * i)? - 1;
        acc = acc
            .checked_mul(term)
            .ok_or(Error::Overflow("group order"))?;
    }
    Ok(acc)
}

pub fn orthogonal_group_order(kind: OrthoKind, m: u64, p: u32) -> Result<u128> {
    ensure_prime(p)?;
    kind.check_prime(p)?;
    if m == 0 {
        return Err(Error::DimensionMismatch("m must be positive".into()));
    }
    let q = p as u128;
    let mul = |a: u128, b: u128| a.checked_mul(b).ok_or(Error::Overflow("group order"));
    match kind {
        OrthoKind::GoOdd => mul(2 * checked_pow(q, m * m)?, even_power_product(q, m)?),
        OrthoKind::GoPlus | OrthoKind::GoMinus => {
            let head = mul(
                2 * checked_pow(q, m * (m - 1))?,
                even_power_product(q, m - 1)?,
            )?;
            let pm = checked_pow(q, m)?;
            mul(
                head,
                if kind == OrthoKind::GoPlus {
                    pm - 1
                } else {
                    pm + 1
                },
            )
        }
        OrthoKind::Sp2 | OrthoKind::OOdd2 => mul(checked_pow(2, m * m)?, even_power_product(2, m)?),
        OrthoKind::OEven2 => mul(checked_pow(2, m * m)?, even_power_product(2, m - 1)?),
    }
}

/// Whether the odd prime `p1` divides the order of the group, decided by
/// comparing `k = ord_{p1}(p)` with `m`.
pub fn divides_orthogonal_order(p1: u32, p: u32, kind: OrthoKind, m: u64) -> Result<bool> {
    ensure_prime(p1)?;
    ensure_prime(p)?;
    kind.check_prime(p)?;
    if p1 == 2 {
        return Err(Error::KindPrimeMismatch {
            kind: kind.name(),
            expected: "an odd prime p1",
        });
    }
    if p1 == p {
        return Err(Error::EqualPrimes(p));
    }
    let k = unit_order(p as u64, p1 as u64)?;
    let m = m as i64;
    let k = k as i64;
    let bound = match (kind, k % 2 == 1) {
        (OrthoKind::GoOdd, true)
        | (OrthoKind::GoPlus, true)
        | (OrthoKind::Sp2, true)
        | (OrthoKind::OOdd2, true) => m,
        (OrthoKind::GoMinus, true) | (OrthoKind::OEven2, true) => m - 1,
        (OrthoKind::GoOdd, false)
        | (OrthoKind::GoMinus, false)
        | (OrthoKind::Sp2, false)
        | (OrthoKind::OOdd2, false) => 2 * m,
        (OrthoKind::GoPlus, false) | (OrthoKind::OEven2, false) => 2 * m - 2,
    };
    Ok(k <= bound)
}

/// Least dimension of a space over `Z/(p)` carrying a non-singular
/// symmetric form and an orthogonal `f` of order `p1` with `f − id`
/// bijective.
pub fn minimal_witness_dimension(p: u32, p1: u32) -> Result<usize> {
    ensure_prime(p)?;
    ensure_prime(p1)?;
    if p == p1 {
        return Err(Error::EqualPrimes(p));
    }
    if p1 == 2 {
        return Ok(1);
    }
    let k = unit_order(p as u64, p1 as u64)?;
    Ok((nu(k) * k) as usize)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsRow {
    pub p: u32,
    pub p_prev: u32,
    pub k: u64,
    pub nu_k: u64,
    pub minimal_dim: usize,
    pub l: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub rows: Vec<BoundsRow>,
}

impl BoundsReport {
    pub fn k(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.k).collect()
    }

    pub fn l(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.l).collect()
    }
}

/// `k_z = ord_{p_{z−1}}(p_z)` and the exponent bound `l_z`, indices cyclic.
pub fn theorem_main2_bounds(primes: &[u32]) -> Result<BoundsReport> {
    let n = primes.len();
    if n < 2 {
        return Err(Error::DimensionMismatch(
            "at least two primes are needed".into(),
        ));
    }
    for (i, &p) in primes.iter().enumerate() {
        ensure_prime(p)?;
        if primes[..i].contains(&p) {
            return Err(Error::EqualPrimes(p));
        }
    }
    let k: Vec<u64> = (0..n)
        .map(|z| unit_order(primes[z] as u64, primes[(z + n - 1) % n] as u64))
        .collect::<Result<_>>()?;
    let rows = (0..n)
        .map(|z| {
            let prev = (z + n - 1) % n;
            let here = nu(k[z]) * k[z];
            let before = nu(k[prev]) * k[prev];
            let l = if primes[prev] != 2 {
                here.max(before) * (here + 1)
            } else {
                2 * before
            };
            Ok(BoundsRow {
                p: primes[z],
                p_prev: primes[prev],
                k: k[z],
                nu_k: nu(k[z]),
                minimal_dim: minimal_witness_dimension(primes[z], primes[prev])?,
                l,
            })
        })
        .collect::<Result<_>>()?;
    Ok(BoundsReport { rows })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Use a construction when one applies, else search exhaustively.
    Auto,
    Exhaustive,
}

/// An orthogonal `f` of order `p1` over `Z/(p)` in dimension `dim`, with
/// `f − id` bijective. Every returned witness is re-verified.
pub fn find_orthogonal_element(
    p: u32,
    p1: u32,
    dim: usize,
    strategy: SearchStrategy,
    budget: u128,
) -> Result<OrthogonalMap> {
    ensure_prime(p)?;
    ensure_prime(p1)?;
    if p == p1 {
        return Err(Error::EqualPrimes(p));
    }
    if dim == 0 {
        return Err(Error::DimensionMismatch(
            "dimension must be positive".into(),
        ));
    }
    if strategy == SearchStrategy::Auto {
        if let Some(w) = constructive(p, p1, dim)? {
            return verified(w, p1);
        }
    }
    let needed = checked_pow(p as u128, (dim * dim) as u64).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    match exhaustive(p, p1, dim) {
        Some(w) => verified(w, p1),
        None => Err(Error::NoWitness(format!("no orthogonal element of order {p1} with f − id bijective in dimension {dim} over Z/({p})"))),
    }
}

fn verified(w: OrthogonalMap, p1: u32) -> Result<OrthogonalMap> {
    let ok =
        is_orthogonal(w.matrix(), w.form())? && w.order() == p1 as u64 && w.minus_id_bijective();
    if !ok {
        return Err(Error::NoWitness("candidate failed verification".into()));
    }
    Ok(w)
}

fn constructive(p: u32, p1: u32, dim: usize) -> Result<Option<OrthogonalMap>> {
    if p1 == 2 {
        let form = BilinearForm::standard(dim, p)?;
        let entries: Vec<i64> = (0..dim * dim)
            .map(|i| if i % (dim + 1) == 0 { -1 } else { 0 })
            .collect();
        let minus = Matrix::new(dim, dim, p, &entries)?;
        return Ok(Some(OrthogonalMap::new(minus, form, 2)?));
    }
    let k = unit_order(p as u64, p1 as u64)? as usize;
    if dim == nu(k as u64) as usize * k {
        let Some(q) = cyclotomic_factor(p1, p, k) else {
            return Ok(None);
        };
        let c = companion(&q, p)?;
        if k.is_multiple_of(2) {
            for g in invariant_symmetric_forms(&c) {
                if let Ok(form) = BilinearForm::new(g) {
                    return Ok(Some(OrthogonalMap::new(c, form, p1 as u64)?));
                }
            }
            return Ok(None);
        }
        let f = Matrix::block_diagonal(&c, &c.inverse()?.transpose())?;
        let form = BilinearForm::hyperbolic(k, p)?;
        return Ok(Some(OrthogonalMap::new(f, form, p1 as u64)?));
    }
    if dim == 2 * (p1 as usize - 1) {
        return Ok(Some(hyperbolic_witness(p1, p)?.1));
    }
    Ok(None)
}

/// First matrix in lexicographic row-major order that works, paired with
/// the first non-singular invariant form in lexicographic coefficient order.
fn exhaustive(p: u32, p1: u32, dim: usize) -> Option<OrthogonalMap> {
    let cells = dim * dim;
    let mut digits = alloc::vec![0u32; cells];
    loop {
        let f = Matrix::from_raw(dim, dim, p, digits.clone());
        if f.is_invertible()
            && !f.is_identity()
            && minus_id_bijective(&f)
            && matrix_order(&f, p1 as u64) == Ok(p1 as u64)
        {
            if let Some(form) = nonsingular_invariant_form(&f) {
                if let Ok(w) = OrthogonalMap::new(f, form, p1 as u64) {
                    return Some(w);
                }
            }
        }
        let mut i = cells;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

fn nonsingular_invariant_form(f: &Matrix) -> Option<BilinearForm> {
    let basis = invariant_symmetric_forms(f);
    let p = f.modulus();
    let n = f.rows();
    let mut coeffs = alloc::vec![0u32; basis.len()];
    loop {
        let mut i = coeffs.len();
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
        }
        let mut g = Matrix::from_raw(n, n, p, alloc::vec![0; n * n]);
        for (&c, b) in coeffs.iter().zip(&basis) {
            for _ in 0..c {
                g = g.add(b).ok()?;
            }
        }
        if let Ok(form) = BilinearForm::new(g) {
            return Some(form);
        }
    }
}
