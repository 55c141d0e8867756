use alloc::vec::Vec;

use crate::algebra::field::ensure_prime;
use crate::brace::{Brace, Carrier, Element};
use crate::error::{Error, Result};

/// Trivial brace on `Z/(p_1) × ⋯ × Z/(p_d)`: multiplication equals addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialBrace {
    carrier: Carrier,
}

impl TrivialBrace {
    /// One coordinate per listed prime.
    pub fn new(primes: &[u32]) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::DimensionMismatch(
                "trivial brace needs at least one coordinate".into(),
            ));
        }
        for &p in primes {
            ensure_prime(p)?;
        }
        Ok(Self {
            carrier: Carrier::new(primes.to_vec())?,
        })
    }
}

/// `(Z/(p))^d` as a trivial brace.
pub fn trivial_brace(p: u32, d: usize) -> Result<TrivialBrace> {
    if d == 0 {
        return Err(Error::DimensionMismatch(
            "dimension must be positive".into(),
        ));
    }
    TrivialBrace::new(&alloc::vec![p; d])
}

pub(crate) fn add_coords(radices: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .zip(b)
        .zip(radices)
        .map(|((&x, &y), &r)| (x + y) % r)
        .collect()
}

pub(crate) fn neg_coords(radices: &[u32], a: &[u32]) -> Vec<u32> {
    a.iter().zip(radices).map(|(&x, &r)| (r - x) % r).collect()
}

impl Brace for TrivialBrace {
    fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    fn add(&self, a: &Element, b: &Element) -> Element {
        Element::new(add_coords(self.carrier.radices(), a.coords(), b.coords()))
    }

    fn neg(&self, a: &Element) -> Element {
        Element::new(neg_coords(self.carrier.radices(), a.coords()))
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        self.add(a, b)
    }

    fn inv(&self, a: &Element) -> Element {
        self.neg(a)
    }
}
