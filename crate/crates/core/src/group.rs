//! Structure of the multiplicative group: derived subgroup, metabelian and
//! A-group predicates, and the additive Sylow blocks.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::field::{is_prime, prime_factors};
use crate::brace::{ensure_budget, is_ideal, is_left_ideal, BitSet, Brace, Element, IdealRecord};
use crate::error::Result;

/// A subgroup of `(B, ·)` grown by adding generators.
struct Subgroup<'a, B: Brace + ?Sized> {
    brace: &'a B,
    set: BitSet,
    elements: Vec<Element>,
    gens: Vec<Element>,
}

impl<'a, B: Brace + ?Sized> Subgroup<'a, B> {
    fn trivial(brace: &'a B) -> Self {
        let mut set = BitSet::new(brace.order());
        set.insert(0);
        Self {
            brace,
            set,
            elements: vec![brace.zero()],
            gens: Vec::new(),
        }
    }

    fn contains(&self, x: &Element) -> bool {
        self.set.contains(self.brace.carrier().index(x))
    }

    fn add_generator(&mut self, x: Element) -> bool {
        if self.contains(&x) {
            return false;
        }
        self.gens.push(x.clone());
        let old = self.elements.len();
        for i in 0..old {
            let y = self.brace.mul(&self.elements[i], &x);
            self.push(y);
        }
        let mut cursor = old;
        while cursor < self.elements.len() {
            let h = self.elements[cursor].clone();
            cursor += 1;
            for g in 0..self.gens.len() {
                let y = self.brace.mul(&h, &self.gens[g]);
                self.push(y);
            }
        }
        true
    }

    fn push(&mut self, y: Element) {
        if self.set.insert(self.brace.carrier().index(&y)) {
            self.elements.push(y);
        }
    }

    fn sorted_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .elements
            .iter()
            .map(|e| self.brace.carrier().index(e))
            .collect();
        v.sort_unstable();
        v
    }
}

fn commutator<B: Brace + ?Sized>(b: &B, x: &Element, y: &Element) -> Element {
    b.mul(&b.mul(&b.inv(x), &b.inv(y)), &b.mul(x, y))
}

fn commute<B: Brace + ?Sized>(b: &B, x: &Element, y: &Element) -> bool {
    b.mul(x, y) == b.mul(y, x)
}

fn pairwise_commute<B: Brace + ?Sized>(b: &B, xs: &[Element]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, x)| xs[i + 1..].iter().all(|y| commute(b, x, y)))
}

/// `[B, B]` as the normal closure of the commutators of a generating set,
/// together with the generators of that subgroup.
fn derived<'a, B: Brace + ?Sized>(b: &'a B, gens: &[Element]) -> Subgroup<'a, B> {
    let mut sub = Subgroup::trivial(b);
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            sub.add_generator(commutator(b, x, y));
        }
    }
    let inverses: Vec<Element> = gens.iter().map(|g| b.inv(g)).collect();
    let mut cursor = 0;
    while cursor < sub.gens.len() {
        let h = sub.gens[cursor].clone();
        cursor += 1;
        for (g, gi) in gens.iter().zip(&inverses) {
            sub.add_generator(b.mul(gi, &b.mul(&h, g)));
        }
    }
    sub
}

/// Sorted indices of the derived subgroup of `(B, ·)`.
pub fn derived_subgroup<B: Brace + ?Sized>(b: &B, budget: usize) -> Result<Vec<usize>> {
    ensure_budget(b.order(), budget)?;
    Ok(derived(b, &b.mul_generators()).sorted_indices())
}

pub fn is_abelian<B: Brace + ?Sized>(b: &B) -> bool {
    pairwise_commute(b, &b.mul_generators())
}

/// Whether `[B, B]` is abelian.
pub fn is_metabelian<B: Brace + ?Sized>(b: &B, budget: usize) -> Result<bool> {
    ensure_budget(b.order(), budget)?;
    let d = derived(b, &b.mul_generators());
    Ok(pairwise_commute(b, &d.gens))
}

/// Additive Sylow subgroups, one per prime dividing the order. When every
/// radix of the carrier is prime these are read off the coordinates;
/// otherwise elements are sieved by additive order.
pub fn sylow_left_ideals<B: Brace + ?Sized>(b: &B) -> Result<Vec<(u32, IdealRecord)>> {
    let carrier = b.carrier();
    let n = b.order();
    let mut blocks: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    if carrier.radices().iter().all(|&r| is_prime(r as u64)) {
        for &p in carrier.radices() {
            blocks.entry(p).or_default();
        }
        for i in 0..n {
            let e = carrier.element(i);
            let support: Vec<u32> = e
                .coords()
                .iter()
                .zip(carrier.radices())
                .filter(|(&c, _)| c != 0)
                .map(|(_, &r)| r)
                .collect();
            match support.first() {
                None => blocks.values_mut().for_each(|v| v.push(i)),
                Some(&p) if support.iter().all(|&q| q == p) => blocks.get_mut(&p).unwrap().push(i),
                _ => {}
            }
        }
    } else {
        for p in prime_factors(n as u64) {
            blocks.entry(p as u32).or_default();
        }
        for i in 0..n {
            let ord = additive_order(b, &carrier.element(i));
            let ps = prime_factors(ord as u64);
            match ps.as_slice() {
                [] => blocks.values_mut().for_each(|v| v.push(i)),
                [p] => blocks.get_mut(&(*p as u32)).unwrap().push(i),
                _ => {}
            }
        }
    }
    let mut out = Vec::new();
    for (p, members) in blocks {
        out.push((
            p,
            IdealRecord {
                is_left_ideal: is_left_ideal(b, &members)?,
                is_ideal: is_ideal(b, &members)?,
                generators: Vec::new(),
                members,
            },
        ));
    }
    Ok(out)
}

fn additive_order<B: Brace + ?Sized>(b: &B, x: &Element) -> usize {
    let mut k = 1;
    let mut y = x.clone();
    while !y.is_zero() {
        y = b.add(&y, x);
        k += 1;
    }
    k
}

/// Multiplicative generators of a block, chosen greedily in index order.
/// Returns `None` when the block is not closed under multiplication.
fn block_generators<B: Brace + ?Sized>(b: &B, block: &IdealRecord) -> Option<Vec<Element>> {
    let mut sub = Subgroup::trivial(b);
    for &i in &block.members {
        let x = b.carrier().element(i);
        if !sub.contains(&x) {
            sub.add_generator(x);
            if sub.elements.len() > block.len() {
                return None;
            }
        }
    }
    if sub.elements.len() != block.len()
        || !sub
            .elements
            .iter()
            .all(|e| block.contains(b.carrier().index(e)))
    {
        return None;
    }
    Some(sub.gens)
}

/// Whether each Sylow block is a subgroup of `(B, ·)`.
pub fn sylow_blocks_closed<B: Brace + ?Sized>(b: &B, blocks: &[(u32, IdealRecord)]) -> bool {
    blocks
        .iter()
        .all(|(_, blk)| block_generators(b, blk).is_some())
}

/// Whether every Sylow block is an abelian subgroup of `(B, ·)`. Decided
/// exactly: the block is rebuilt from greedily chosen generators, which
/// must then commute pairwise.
pub fn is_a_group<B: Brace + ?Sized>(b: &B, blocks: &[(u32, IdealRecord)]) -> bool {
    blocks
        .iter()
        .all(|(_, blk)| block_generators(b, blk).is_some_and(|g| pairwise_commute(b, &g)))
}

/// Whether every element is uniquely a sum of one element per block.
pub fn additive_decomposition_unique<B: Brace + ?Sized>(
    b: &B,
    blocks: &[(u32, IdealRecord)],
) -> bool {
    let n = b.order();
    if blocks.iter().map(|(_, blk)| blk.len()).product::<usize>() != n {
        return false;
    }
    let mut hit = BitSet::new(n);
    let mut partial = vec![b.zero()];
    for (_, blk) in blocks {
        let elems: Vec<Element> = blk
            .members
            .iter()
            .map(|&i| b.carrier().element(i))
            .collect();
        partial = partial
            .iter()
            .flat_map(|s| elems.iter().map(move |e| (s, e)))
            .map(|(s, e)| b.add(s, e))
            .collect();
    }
    partial.iter().all(|s| hit.insert(b.carrier().index(s))) && hit.len() == n
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupReport {
    pub is_abelian: bool,
    pub is_metabelian: bool,
    pub is_a_group: bool,
    pub derived_size: usize,
    pub sylow_sizes: Vec<(u32, usize)>,
}

pub fn group_report<B: Brace + ?Sized>(b: &B, budget: usize) -> Result<GroupReport> {
    ensure_budget(b.order(), budget)?;
    let gens = b.mul_generators();
    let d = derived(b, &gens);
    let blocks = sylow_left_ideals(b)?;
    Ok(GroupReport {
        is_abelian: pairwise_commute(b, &gens),
        is_metabelian: pairwise_commute(b, &d.gens),
        is_a_group: is_a_group(b, &blocks),
        derived_size: d.elements.len(),
        sylow_sizes: blocks.iter().map(|(p, blk)| (*p, blk.len())).collect(),
    })
}
