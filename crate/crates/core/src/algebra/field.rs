//! Scalars of the prime field `Z/(p)`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Trial-division primality test. Moduli in this crate are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn ensure_prime(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p as u64))
    }
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> alloc::vec::Vec<u64> {
    let mut out = alloc::vec::Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut result = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    result
}

/// Inverse of `a` modulo the prime `p` (Fermat). `a` must be nonzero mod `p`.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a as u64, p as u64 - 2, p as u64) as u32
}

pub(crate) fn reduce(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// Multiplicative order of `a` in `(Z/(p))^*`.
pub fn unit_order(a: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let a = a % p;
    if a == 0 {
        return Err(Error::NotAUnit {
            value: a,
            modulus: p,
        });
    }
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = x * a % p;
        k += 1;
    }
    Ok(k)
}

/// An element of `Z/(p)` stored as its canonical representative.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u32,
    modulus: u32,
}

impl Residue {
    pub fn new(value: i64, modulus: u32) -> Result<Self> {
        ensure_prime(modulus)?;
        Ok(Self {
            value: reduce(value, modulus),
            modulus,
        })
    }

    pub(crate) fn raw(value: u32, modulus: u32) -> Self {
        Self {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, exp: u64) -> Self {
        Self::raw(
            pow_mod(self.value as u64, exp, self.modulus as u64) as u32,
            self.modulus,
        )
    }

    pub fn inverse(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::NotAUnit {
                value: 0,
                modulus: self.modulus as u64,
            });
        }
        Ok(Self::raw(inv_mod(self.value, self.modulus), self.modulus))
    }

    pub fn order(self) -> Result<u64> {
        unit_order(self.value as u64, self.modulus as u64)
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue::raw((self.value + rhs.value) % self.modulus, self.modulus)
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue::raw(
            (self.value + self.modulus - rhs.value) % self.modulus,
            self.modulus,
        )
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let v = self.value as u64 * rhs.value as u64 % self.modulus as u64;
        Residue::raw(v as u32, self.modulus)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue::raw((self.modulus - self.value) % self.modulus, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: alloc::vec::Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn unit_orders() {
        assert_eq!(unit_order(3, 7).unwrap(), 6);
        assert_eq!(unit_order(7, 3).unwrap(), 1);
        assert_eq!(unit_order(2, 3).unwrap(), 2);
        assert_eq!(
            unit_order(14, 7),
            Err(Error::NotAUnit {
                value: 0,
                modulus: 7
            })
        );
        assert_eq!(unit_order(2, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn unit_order_divides_p_minus_one() {
        for p in (2..60u64).filter(|&p| is_prime(p)) {
            for a in 1..p {
                assert_eq!((p - 1) % unit_order(a, p).unwrap(), 0);
            }
        }
    }

    #[test]
    fn residue_arithmetic() {
        let a = Residue::new(-1, 5).unwrap();
        assert_eq!(a.value(), 4);
        assert_eq!((a * a).value(), 1);
        assert_eq!((a + Residue::new(3, 5).unwrap()).value(), 2);
        assert_eq!((-a).value(), 1);
        assert_eq!(Residue::new(3, 7).unwrap().inverse().unwrap().value(), 5);
        assert!(Residue::new(1, 4).is_err());
    }

    #[test]
    fn factorization() {
        assert_eq!(prime_factors(92160), [2, 3, 5]);
        assert_eq!(prime_factors(1), alloc::vec::Vec::<u64>::new());
    }
}
