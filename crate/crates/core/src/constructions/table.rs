use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::brace::{BitSet, Brace, Carrier, Element};
use crate::error::{Error, Result};

/// A brace given by explicit addition and multiplication tables on
/// `0..n`, with `0` as the shared identity. Elements are single
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableBrace {
    carrier: Carrier,
    n: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<Element>,
}

impl TableBrace {
    /// Row-major `n × n` tables. Only checks that entries are in range and
    /// that `0` has inverses; the axioms are left to `check_axioms`.
    pub fn new(n: usize, add: Vec<u32>, mul: Vec<u32>) -> Result<Self> {
        if n < 2 || add.len() != n * n || mul.len() != n * n {
            return Err(Error::DimensionMismatch(format!("tables for n = {n}")));
        }
        if let Some(&bad) = add.iter().chain(&mul).find(|&&v| v as usize >= n) {
            return Err(Error::OutOfRange {
                index: bad as usize,
                size: n,
            });
        }
        let inverse_in =
            |t: &[u32], i: usize| (0..n).find(|&j| t[i * n + j] == 0).unwrap_or(0) as u32;
        let neg = (0..n).map(|i| inverse_in(&add, i)).collect();
        let inv = (0..n).map(|i| inverse_in(&mul, i)).collect();
        let carrier = Carrier::new(vec![n as u32])?;
        let mut b = Self {
            carrier,
            n,
            add,
            mul,
            neg,
            inv,
            gens: Vec::new(),
        };
        b.gens = b.greedy_generators();
        Ok(b)
    }

    /// Tabulates any brace in canonical index order.
    pub fn from_brace<B: Brace + ?Sized>(brace: &B) -> Result<Self> {
        let n = brace.order();
        let elems: Vec<Element> = (0..n).map(|i| brace.carrier().element(i)).collect();
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * n + j] = brace.index_of(&brace.add(a, b))? as u32;
                mul[i * n + j] = brace.index_of(&brace.mul(a, b))? as u32;
            }
        }
        Self::new(n, add, mul)
    }

    /// Overwrites one multiplication entry.
    pub fn with_mul_entry(mut self, i: usize, j: usize, value: u32) -> Result<Self> {
        if i >= self.n || j >= self.n || value as usize >= self.n {
            return Err(Error::OutOfRange {
                index: i.max(j),
                size: self.n,
            });
        }
        self.mul[i * self.n + j] = value;
        Self::new(self.n, self.add, self.mul)
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }

    fn greedy_generators(&self) -> Vec<Element> {
        let mut gens = Vec::new();
        let mut seen = BitSet::new(self.n);
        seen.insert(0);
        let mut members = vec![0usize];
        for x in 1..self.n {
            if seen.contains(x) {
                continue;
            }
            gens.push(x);
            let mut cursor = 0;
            let mut queue = members.clone();
            while cursor < queue.len() {
                let h = queue[cursor];
                cursor += 1;
                for &g in &gens {
                    let y = self.mul[h * self.n + g] as usize;
                    if seen.insert(y) {
                        queue.push(y);
                    }
                }
            }
            members = queue;
            if members.len() == self.n {
                break;
            }
        }
        gens.into_iter()
            .map(|g| Element::new(vec![g as u32]))
            .collect()
    }

    fn at(&self, t: &[u32], a: &Element, b: &Element) -> Element {
        Element::new(vec![
            t[a.coords()[0] as usize * self.n + b.coords()[0] as usize],
        ])
    }
}

impl Brace for TableBrace {
    fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    fn add(&self, a: &Element, b: &Element) -> Element {
        self.at(&self.add, a, b)
    }

    fn neg(&self, a: &Element) -> Element {
        Element::new(vec![self.neg[a.coords()[0] as usize]])
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        self.at(&self.mul, a, b)
    }

    fn inv(&self, a: &Element) -> Element {
        Element::new(vec![self.inv[a.coords()[0] as usize]])
    }

    fn mul_generators(&self) -> Vec<Element> {
        self.gens.clone()
    }
}
