//! Verification of the left brace axioms.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ensure_budget, Brace, Element};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomMode {
    /// Every pair and triple of the carrier.
    Exhaustive,
    /// `trials` random triples drawn from a seeded generator.
    Sampled { seed: u64, trials: usize },
}

/// Indices of the elements witnessing a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub law: &'static str,
    pub elements: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl AxiomCheck {
    fn pass() -> Self {
        Self {
            holds: true,
            counterexample: None,
        }
    }

    fn fail(&mut self, law: &'static str, elements: &[usize]) {
        if self.holds {
            self.holds = false;
            self.counterexample = Some(Counterexample {
                law,
                elements: elements.to_vec(),
            });
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub order: usize,
    pub mode: AxiomMode,
    pub additive_group: AxiomCheck,
    pub multiplicative_group: AxiomCheck,
    pub compatibility: AxiomCheck,
    pub shared_identity: AxiomCheck,
    pub triples_checked: u64,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.additive_group.holds
            && self.multiplicative_group.holds
            && self.compatibility.holds
            && self.shared_identity.holds
    }
}

/// Checks the brace axioms. Exhaustive mode requires `order ≤ budget`.
pub fn check_axioms<B: Brace + ?Sized>(
    brace: &B,
    mode: AxiomMode,
    budget: usize,
) -> Result<AxiomReport> {
    match mode {
        AxiomMode::Exhaustive => {
            ensure_budget(brace.order(), budget)?;
            Ok(exhaustive(brace))
        }
        AxiomMode::Sampled { seed, trials } => Ok(sampled(brace, seed, trials)),
    }
}

struct Tables {
    n: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
}

/// Sentinel for an operation result outside the carrier.
const OUTSIDE: usize = usize::MAX;

fn tabulate<B: Brace + ?Sized>(brace: &B) -> Tables {
    let n = brace.order();
    let carrier = brace.carrier();
    let idx = |e: &Element| carrier.index_of(e).unwrap_or(OUTSIDE);
    let elems: Vec<Element> = (0..n).map(|i| carrier.element(i)).collect();
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            add[i * n + j] = idx(&brace.add(a, b));
            mul[i * n + j] = idx(&brace.mul(a, b));
        }
    }
    let neg = elems.iter().map(|a| idx(&brace.neg(a))).collect();
    let inv = elems.iter().map(|a| idx(&brace.inv(a))).collect();
    Tables {
        n,
        add,
        mul,
        neg,
        inv,
    }
}

fn exhaustive<B: Brace + ?Sized>(brace: &B) -> AxiomReport {
    let t = tabulate(brace);
    let n = t.n;
    let mut additive = AxiomCheck::pass();
    let mut multiplicative = AxiomCheck::pass();
    let mut compat = AxiomCheck::pass();
    let mut identity = AxiomCheck::pass();

    for i in 0..n {
        if t.neg[i] == OUTSIDE {
            additive.fail("negation closed", &[i]);
        } else if t.add[i * n + t.neg[i]] != 0 {
            additive.fail("additive inverse", &[i]);
        }
        if t.inv[i] == OUTSIDE {
            multiplicative.fail("inverse closed", &[i]);
        } else if t.mul[i * n + t.inv[i]] != 0 || t.mul[t.inv[i] * n + i] != 0 {
            multiplicative.fail("multiplicative inverse", &[i]);
        }
        if t.add[i * n] != i || t.add[i] != i {
            identity.fail("zero is additive identity", &[i]);
        }
        if t.mul[i * n] != i || t.mul[i] != i {
            identity.fail("zero is multiplicative identity", &[i]);
        }
        for j in 0..n {
            if t.add[i * n + j] == OUTSIDE {
                additive.fail("addition closed", &[i, j]);
            } else if t.add[i * n + j] != t.add[j * n + i] {
                additive.fail("commutativity", &[i, j]);
            }
            if t.mul[i * n + j] == OUTSIDE {
                multiplicative.fail("multiplication closed", &[i, j]);
            }
        }
    }
    if !(additive.holds && multiplicative.holds) {
        return AxiomReport {
            order: n,
            mode: AxiomMode::Exhaustive,
            additive_group: additive,
            multiplicative_group: multiplicative,
            compatibility: AxiomCheck {
                holds: false,
                counterexample: None,
            },
            shared_identity: identity,
            triples_checked: 0,
        };
    }
    for a in 0..n {
        for b in 0..n {
            let ab_add = t.add[a * n + b];
            let ab_mul = t.mul[a * n + b];
            for c in 0..n {
                if t.add[ab_add * n + c] != t.add[a * n + t.add[b * n + c]] {
                    additive.fail("associativity", &[a, b, c]);
                }
                if t.mul[ab_mul * n + c] != t.mul[a * n + t.mul[b * n + c]] {
                    multiplicative.fail("associativity", &[a, b, c]);
                }
                let lhs = t.add[t.mul[a * n + t.add[b * n + c]] * n + a];
                let rhs = t.add[ab_mul * n + t.mul[a * n + c]];
                if lhs != rhs {
                    compat.fail("a(b+c)+a = ab+ac", &[a, b, c]);
                }
            }
        }
    }
    AxiomReport {
        order: n,
        mode: AxiomMode::Exhaustive,
        additive_group: additive,
        multiplicative_group: multiplicative,
        compatibility: compat,
        shared_identity: identity,
        triples_checked: (n as u64).pow(3),
    }
}

fn sampled<B: Brace + ?Sized>(brace: &B, seed: u64, trials: usize) -> AxiomReport {
    let n = brace.order();
    let carrier = brace.carrier();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut additive = AxiomCheck::pass();
    let mut multiplicative = AxiomCheck::pass();
    let mut compat = AxiomCheck::pass();
    let mut identity = AxiomCheck::pass();
    let zero = brace.zero();
    for _ in 0..trials {
        let (i, j, k) = (
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(0..n),
        );
        let (a, b, c) = (carrier.element(i), carrier.element(j), carrier.element(k));
        let ab = brace.add(&a, &b);
        let a_b = brace.mul(&a, &b);
        if !carrier.contains(&ab) || !carrier.contains(&brace.neg(&a)) {
            additive.fail("addition closed", &[i, j]);
            continue;
        }
        if !carrier.contains(&a_b) || !carrier.contains(&brace.inv(&a)) {
            multiplicative.fail("multiplication closed", &[i, j]);
            continue;
        }
        if ab != brace.add(&b, &a) {
            additive.fail("commutativity", &[i, j]);
        }
        if brace.add(&ab, &c) != brace.add(&a, &brace.add(&b, &c)) {
            additive.fail("associativity", &[i, j, k]);
        }
        if !brace.add(&a, &brace.neg(&a)).is_zero() {
            additive.fail("additive inverse", &[i]);
        }
        if brace.mul(&a_b, &c) != brace.mul(&a, &brace.mul(&b, &c)) {
            multiplicative.fail("associativity", &[i, j, k]);
        }
        let a_inv = brace.inv(&a);
        if !brace.mul(&a, &a_inv).is_zero() || !brace.mul(&a_inv, &a).is_zero() {
            multiplicative.fail("multiplicative inverse", &[i]);
        }
        if brace.add(&a, &zero) != a || brace.add(&zero, &a) != a {
            identity.fail("zero is additive identity", &[i]);
        }
        if brace.mul(&a, &zero) != a || brace.mul(&zero, &a) != a {
            identity.fail("zero is multiplicative identity", &[i]);
        }
        let lhs = brace.add(&brace.mul(&a, &brace.add(&b, &c)), &a);
        let rhs = brace.add(&a_b, &brace.mul(&a, &c));
        if lhs != rhs {
            compat.fail("a(b+c)+a = ab+ac", &[i, j, k]);
        }
    }
    AxiomReport {
        order: n,
        mode: AxiomMode::Sampled { seed, trials },
        additive_group: additive,
        multiplicative_group: multiplicative,
        compatibility: compat,
        shared_identity: identity,
        triples_checked: trials as u64,
    }
}
