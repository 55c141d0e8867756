//! Just enough polynomial arithmetic over `Z/(p)` to split cyclotomic
//! polynomials. Coefficients are stored low degree first.

use alloc::vec;
use alloc::vec::Vec;

use super::field::inv_mod;

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

/// Remainder of `num` divided by the nonzero polynomial `den`.
pub fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let den = trim(den.to_vec());
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return trim(rem);
    }
    let p64 = p as u64;
    let lead_inv = inv_mod(den[dd], p) as u64;
    for top in (dd..rem.len()).rev() {
        let factor = rem[top] as u64 * lead_inv % p64;
        if factor == 0 {
            continue;
        }
        let shift = top - dd;
        for (i, &d) in den.iter().enumerate() {
            let idx = shift + i;
            rem[idx] = ((rem[idx] as u64 + p64 * p64 - factor * d as u64) % p64) as u32;
        }
    }
    rem.truncate(dd.max(1));
    trim(rem)
}

pub fn divides(den: &[u32], num: &[u32], p: u32) -> bool {
    poly_rem(num, den, p).iter().all(|&c| c == 0)
}

/// `x^{q−1} + … + x + 1`.
pub fn cyclotomic_prime(q: u32) -> Vec<u32> {
    vec![1; q as usize]
}

/// First monic degree-`k` divisor of `x^{q−1} + … + 1` over `Z/(p)`, scanning
/// the non-leading coefficients as a base-`p` counter (lowest coefficient
/// fastest). Returns the low-order coefficients `c_0, …, c_{k−1}`.
pub fn cyclotomic_factor(q: u32, p: u32, k: usize) -> Option<Vec<u32>> {
    let target = cyclotomic_prime(q);
    let mut coeffs = vec![0u32; k];
    loop {
        let mut poly = coeffs.clone();
        poly.push(1);
        if divides(&poly, &target, p) {
            return Some(coeffs);
        }
        let mut i = 0;
        loop {
            if i == k {
                return None;
            }
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remainder() {
        // (x + 2)^2 = x^2 + x + 1 over Z/3.
        assert!(divides(&[2, 1], &[1, 1, 1], 3));
        assert!(!divides(&[1, 1], &[1, 1, 1], 3));
        assert_eq!(poly_rem(&[1, 0, 1], &[1, 1], 2), vec![0]);
    }

    #[test]
    fn factors_of_cyclotomics() {
        // x^2 + x + 1 is irreducible over Z/2.
        assert_eq!(cyclotomic_factor(3, 2, 2), Some(vec![1, 1]));
        assert_eq!(cyclotomic_factor(3, 2, 1), None);
        // Over Z/7 the cube roots of unity are 2 and 4; x + 3 = x − 4 is
        // reached before x + 5 = x − 2.
        assert_eq!(cyclotomic_factor(3, 7, 1), Some(vec![3]));
        // Φ_7 is irreducible over Z/3.
        assert_eq!(cyclotomic_factor(7, 3, 6), Some(vec![1; 6]));
        // Over Z/2, Φ_7 = (x^3 + x + 1)(x^3 + x^2 + 1).
        assert_eq!(cyclotomic_factor(7, 2, 3), Some(vec![1, 1, 0]));
    }
}
