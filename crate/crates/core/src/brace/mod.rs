//! Finite left braces: carriers, elements, the operation contract and the
//! deciders built on top of it.

mod axioms;
mod bitset;
mod ideal;
mod span;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub use axioms::{check_axioms, AxiomCheck, AxiomMode, AxiomReport, Counterexample};
pub use bitset::BitSet;
pub use ideal::{
    complete_lattice, ideal_closure, ideal_closure_with, is_ideal, is_left_ideal, is_prime,
    is_simple, list_ideals, star_span, star_span_is_zero, Certificate, ClosureMode, IdealRecord,
    Simplicity,
};
pub use span::additive_span;

/// Default ceiling on carrier sizes for closure-based deciders.
pub const CLOSURE_BUDGET: usize = 100_000;
/// Default ceiling on carrier sizes for exhaustive triple loops.
pub const AXIOM_BUDGET: usize = 200;

/// A brace element: coordinates in the canonical mixed-radix layout of its
/// carrier. The zero element is the all-zero tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Vec<u32>);

impl Element {
    pub fn new(coords: Vec<u32>) -> Self {
        Self(coords)
    }

    pub fn zero(len: usize) -> Self {
        Self(vec![0; len])
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl From<Vec<u32>> for Element {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Mixed-radix layout of a carrier. Coordinate `i` lives in `Z/(radix_i)`;
/// the first coordinate varies fastest in the canonical index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    radices: Vec<u32>,
    strides: Vec<usize>,
    size: usize,
}

impl Carrier {
    pub fn new(radices: Vec<u32>) -> Result<Self> {
        let mut strides = Vec::with_capacity(radices.len());
        let mut size: usize = 1;
        for &r in &radices {
            if r < 2 {
                return Err(Error::DimensionMismatch(format!("radix {r} is too small")));
            }
            strides.push(size);
            size = size
                .checked_mul(r as usize)
                .ok_or(Error::Overflow("carrier size"))?;
        }
        Ok(Self {
            radices,
            strides,
            size,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn radices(&self) -> &[u32] {
        &self.radices
    }

    pub fn len(&self) -> usize {
        self.radices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radices.is_empty()
    }

    pub fn contains(&self, e: &Element) -> bool {
        e.0.len() == self.radices.len() && e.0.iter().zip(&self.radices).all(|(&c, &r)| c < r)
    }

    pub fn index_of(&self, e: &Element) -> Result<usize> {
        if !self.contains(e) {
            return Err(Error::NotInCarrier(format!("{e:?}")));
        }
        Ok(self.index(e))
    }

    #[inline]
    pub(crate) fn index(&self, e: &Element) -> usize {
        e.0.iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    }

    pub fn element_at(&self, i: usize) -> Result<Element> {
        if i >= self.size {
            return Err(Error::OutOfRange {
                index: i,
                size: self.size,
            });
        }
        Ok(self.element(i))
    }

    #[inline]
    pub(crate) fn element(&self, mut i: usize) -> Element {
        let mut coords = Vec::with_capacity(self.radices.len());
        for &r in &self.radices {
            coords.push((i % r as usize) as u32);
            i /= r as usize;
        }
        Element(coords)
    }

    /// One-hot elements, one per coordinate.
    pub fn unit_vectors(&self) -> Vec<Element> {
        (0..self.radices.len())
            .map(|i| {
                let mut e = Element::zero(self.radices.len());
                e.0[i] = 1;
                e
            })
            .collect()
    }
}

/// The operation contract of a finite left brace.
///
/// `(carrier, add)` must be an abelian group and `(carrier, mul)` a group,
/// both with the all-zero tuple as identity, and
/// `a·(b+c) + a = a·b + a·c`. Implementations are trusted to produce
/// elements of their carrier; [`check_axioms`] verifies the rest.
pub trait Brace {
    fn carrier(&self) -> &Carrier;
    fn add(&self, a: &Element, b: &Element) -> Element;
    fn neg(&self, a: &Element) -> Element;
    fn mul(&self, a: &Element, b: &Element) -> Element;
    fn inv(&self, a: &Element) -> Element;

    /// A generating set of the multiplicative group.
    fn mul_generators(&self) -> Vec<Element> {
        self.carrier().unit_vectors()
    }

    fn order(&self) -> usize {
        self.carrier().size()
    }

    fn zero(&self) -> Element {
        Element::zero(self.carrier().len())
    }

    fn sub(&self, a: &Element, b: &Element) -> Element {
        self.add(a, &self.neg(b))
    }

    /// `λ_a(b) = ab − a`.
    fn lambda(&self, a: &Element, b: &Element) -> Element {
        self.sub(&self.mul(a, b), a)
    }

    /// `a * b = ab − a − b`.
    fn star(&self, a: &Element, b: &Element) -> Element {
        self.sub(&self.sub(&self.mul(a, b), a), b)
    }

    /// `g⁻¹ x g`.
    fn conjugate(&self, g: &Element, x: &Element) -> Element {
        self.mul(&self.inv(g), &self.mul(x, g))
    }

    fn element_at(&self, i: usize) -> Result<Element> {
        self.carrier().element_at(i)
    }

    fn index_of(&self, x: &Element) -> Result<usize> {
        self.carrier().index_of(x)
    }
}

impl<B: Brace + ?Sized> Brace for &B {
    fn carrier(&self) -> &Carrier {
        (**self).carrier()
    }
    fn add(&self, a: &Element, b: &Element) -> Element {
        (**self).add(a, b)
    }
    fn neg(&self, a: &Element) -> Element {
        (**self).neg(a)
    }
    fn mul(&self, a: &Element, b: &Element) -> Element {
        (**self).mul(a, b)
    }
    fn inv(&self, a: &Element) -> Element {
        (**self).inv(a)
    }
    fn mul_generators(&self) -> Vec<Element> {
        (**self).mul_generators()
    }
}

pub(crate) fn ensure_budget(size: usize, budget: usize) -> Result<()> {
    if size > budget {
        return Err(Error::BudgetExceeded {
            needed: size as u128,
            budget: budget as u128,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_radix_round_trip() {
        let c = Carrier::new(vec![2, 2, 2, 3, 3]).unwrap();
        assert_eq!(c.size(), 72);
        assert_eq!(c.index_of(&Element::zero(5)).unwrap(), 0);
        assert_eq!(c.element_at(71).unwrap().coords(), &[1, 1, 1, 2, 2]);
        assert_eq!(c.element_at(1).unwrap().coords(), &[1, 0, 0, 0, 0]);
        for i in 0..72 {
            assert_eq!(c.index_of(&c.element_at(i).unwrap()).unwrap(), i);
        }
        assert_eq!(
            c.element_at(72),
            Err(Error::OutOfRange {
                index: 72,
                size: 72
            })
        );
        assert!(c.index_of(&Element::new(vec![2, 0, 0, 0, 0])).is_err());
    }
}
