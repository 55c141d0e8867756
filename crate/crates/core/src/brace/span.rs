//! Incremental additive subgroups of a brace.

use alloc::vec::Vec;

use super::{BitSet, Brace, Element};

/// An additive subgroup grown one generator at a time. Each new generator
/// `x` adds the cosets `H + x, H + 2x, …` until a multiple of `x` falls
/// back into `H`, so the total work is linear in the final size.
pub(crate) struct AdditiveSpan<'a, B: Brace + ?Sized> {
    brace: &'a B,
    pub(crate) members: BitSet,
    pub(crate) indices: Vec<usize>,
    pub(crate) elements: Vec<Element>,
    /// Elements that enlarged the span, in insertion order.
    pub(crate) generators: Vec<Element>,
}

impl<'a, B: Brace + ?Sized> AdditiveSpan<'a, B> {
    pub(crate) fn new(brace: &'a B) -> Self {
        let zero = brace.zero();
        let mut members = BitSet::new(brace.order());
        members.insert(0);
        Self {
            brace,
            members,
            indices: alloc::vec![0],
            elements: alloc::vec![zero],
            generators: Vec::new(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.indices.len()
    }

    pub(crate) fn is_full(&self) -> bool {
        self.len() == self.brace.order()
    }

    /// Adds `x` to the span. Returns whether the span grew.
    pub(crate) fn extend(&mut self, x: &Element) -> bool {
        let carrier = self.brace.carrier();
        if self.members.contains(carrier.index(x)) {
            return false;
        }
        self.generators.push(x.clone());
        let base = self.len();
        let mut multiple = x.clone();
        loop {
            for j in 0..base {
                let s = self.brace.add(&self.elements[j], &multiple);
                let si = carrier.index(&s);
                if self.members.insert(si) {
                    self.indices.push(si);
                    self.elements.push(s);
                }
            }
            multiple = self.brace.add(&multiple, x);
            if self.members.contains(carrier.index(&multiple)) {
                break;
            }
        }
        true
    }

    pub(crate) fn sorted_indices(&self) -> Vec<usize> {
        let mut v = self.indices.clone();
        v.sort_unstable();
        v
    }
}

/// Sorted indices of the additive subgroup generated by `elements`.
pub fn additive_span<B: Brace + ?Sized>(brace: &B, elements: &[Element]) -> Vec<usize> {
    let mut span = AdditiveSpan::new(brace);
    for e in elements {
        span.extend(e);
    }
    span.sorted_indices()
}
