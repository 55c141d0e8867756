//! Left ideals, ideals, and the deciders built on ideal closure.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::span::AdditiveSpan;
use super::{ensure_budget, BitSet, Brace, Element};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    /// Closed under `λ_g` for every generator `g`.
    Left,
    /// Additionally closed under conjugation by every generator.
    TwoSided,
}

/// A subset of a carrier, stored as sorted indices, with ideal flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealRecord {
    pub members: Vec<usize>,
    pub is_left_ideal: bool,
    pub is_ideal: bool,
    /// Indices of the seeds the record was generated from.
    pub generators: Vec<usize>,
}

impl IdealRecord {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn is_zero(&self) -> bool {
        self.members == [0]
    }

    pub fn is_subset_of(&self, other: &IdealRecord) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn zero() -> Self {
        Self {
            members: alloc::vec![0],
            is_left_ideal: true,
            is_ideal: true,
            generators: Vec::new(),
        }
    }

    pub fn full(order: usize) -> Self {
        Self {
            members: (0..order).collect(),
            is_left_ideal: true,
            is_ideal: true,
            generators: Vec::new(),
        }
    }
}

fn seed_indices<B: Brace + ?Sized>(brace: &B, seeds: &[Element]) -> Result<Vec<usize>> {
    seeds.iter().map(|s| brace.index_of(s)).collect()
}

/// Least (left) ideal containing `seeds`, using the brace's own
/// multiplicative generating set.
pub fn ideal_closure<B: Brace + ?Sized>(
    brace: &B,
    seeds: &[Element],
    mode: ClosureMode,
) -> Result<IdealRecord> {
    ideal_closure_with(brace, seeds, mode, &brace.mul_generators())
}

/// Least (left) ideal containing `seeds`, closing under `λ_g` (and
/// conjugation by `g`) for each `g` in `generators`, which must generate
/// the multiplicative group.
///
/// `λ_g` is additive, so it only has to be applied to the elements that
/// enlarged the additive span; conjugation is not, so in two-sided mode
/// every member is conjugated.
pub fn ideal_closure_with<B: Brace + ?Sized>(
    brace: &B,
    seeds: &[Element],
    mode: ClosureMode,
    generators: &[Element],
) -> Result<IdealRecord> {
    let seed_idx = seed_indices(brace, seeds)?;
    for g in generators {
        brace.index_of(g)?;
    }
    let inverses: Vec<Element> = generators.iter().map(|g| brace.inv(g)).collect();
    let mut span = AdditiveSpan::new(brace);
    for s in seeds {
        span.extend(s);
    }
    let mut lambda_cursor = 0;
    let mut conj_cursor = 0;
    while !span.is_full() {
        if lambda_cursor < span.generators.len() {
            let x = span.generators[lambda_cursor].clone();
            lambda_cursor += 1;
            for g in generators {
                let y = brace.lambda(g, &x);
                span.extend(&y);
            }
        } else if mode == ClosureMode::TwoSided && conj_cursor < span.len() {
            let x = span.elements[conj_cursor].clone();
            conj_cursor += 1;
            for (g, g_inv) in generators.iter().zip(&inverses) {
                let y = brace.mul(g_inv, &brace.mul(&x, g));
                span.extend(&y);
            }
        } else {
            break;
        }
    }
    Ok(IdealRecord {
        members: span.sorted_indices(),
        is_left_ideal: true,
        is_ideal: mode == ClosureMode::TwoSided,
        generators: seed_idx,
    })
}

/// The additive span of `subset` if it equals `subset`.
fn as_subgroup<'a, B: Brace + ?Sized>(
    brace: &'a B,
    subset: &[usize],
) -> Result<Option<(BitSet, AdditiveSpan<'a, B>)>> {
    let order = brace.order();
    if let Some(&bad) = subset.iter().find(|&&i| i >= order) {
        return Err(Error::OutOfRange {
            index: bad,
            size: order,
        });
    }
    let set = BitSet::from_indices(order, subset);
    if !set.contains(0) {
        return Ok(None);
    }
    let mut span = AdditiveSpan::new(brace);
    for &i in subset {
        span.extend(&brace.carrier().element(i));
        if span.len() > set.len() {
            return Ok(None);
        }
    }
    Ok(Some((set, span)))
}

fn lambda_invariant<B: Brace + ?Sized>(
    brace: &B,
    set: &BitSet,
    span: &AdditiveSpan<'_, B>,
    gens: &[Element],
) -> bool {
    let carrier = brace.carrier();
    span.generators.iter().all(|x| {
        gens.iter()
            .all(|g| set.contains(carrier.index(&brace.lambda(g, x))))
    })
}

/// Additive subgroup invariant under every `λ_b`.
pub fn is_left_ideal<B: Brace + ?Sized>(brace: &B, subset: &[usize]) -> Result<bool> {
    let Some((set, span)) = as_subgroup(brace, subset)? else {
        return Ok(false);
    };
    Ok(lambda_invariant(
        brace,
        &set,
        &span,
        &brace.mul_generators(),
    ))
}

/// Left ideal that is also normal in the multiplicative group.
pub fn is_ideal<B: Brace + ?Sized>(brace: &B, subset: &[usize]) -> Result<bool> {
    let Some((set, span)) = as_subgroup(brace, subset)? else {
        return Ok(false);
    };
    let gens = brace.mul_generators();
    if !lambda_invariant(brace, &set, &span, &gens) {
        return Ok(false);
    }
    let carrier = brace.carrier();
    let inverses: Vec<Element> = gens.iter().map(|g| brace.inv(g)).collect();
    Ok(span.elements.iter().all(|x| {
        gens.iter()
            .zip(&inverses)
            .all(|(g, gi)| set.contains(carrier.index(&brace.mul(gi, &brace.mul(x, g)))))
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Every nonzero singleton generates the whole brace.
    AllClosuresFull { closures: usize },
    /// A nonzero proper ideal.
    ProperIdeal(IdealRecord),
    /// The zero brace is not simple by definition.
    ZeroBrace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplicity {
    pub simple: bool,
    pub certificate: Certificate,
}

/// Decides simplicity by closing every nonzero singleton.
pub fn is_simple<B: Brace + ?Sized>(brace: &B, budget: usize) -> Result<Simplicity> {
    let order = brace.order();
    ensure_budget(order, budget)?;
    if order == 1 {
        return Ok(Simplicity {
            simple: false,
            certificate: Certificate::ZeroBrace,
        });
    }
    let gens = brace.mul_generators();
    for i in 1..order {
        let seed = brace.carrier().element(i);
        let ideal = ideal_closure_with(brace, &[seed], ClosureMode::TwoSided, &gens)?;
        if ideal.len() != order {
            return Ok(Simplicity {
                simple: false,
                certificate: Certificate::ProperIdeal(ideal),
            });
        }
    }
    Ok(Simplicity {
        simple: true,
        certificate: Certificate::AllClosuresFull {
            closures: order - 1,
        },
    })
}

/// Every ideal: the distinct closures of all singletons, closed under joins.
pub fn list_ideals<B: Brace + ?Sized>(brace: &B, budget: usize) -> Result<Vec<IdealRecord>> {
    ensure_budget(brace.order(), budget)?;
    let gens = brace.mul_generators();
    let closures = (1..brace.order())
        .map(|i| {
            ideal_closure_with(
                brace,
                &[brace.carrier().element(i)],
                ClosureMode::TwoSided,
                &gens,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    complete_lattice(brace, closures)
}

/// Closes a family of ideals (normally every singleton closure) under
/// joins, adds `{0}`, drops duplicates and sorts by size then members.
pub fn complete_lattice<B: Brace + ?Sized>(
    brace: &B,
    closures: Vec<IdealRecord>,
) -> Result<Vec<IdealRecord>> {
    let gens = brace.mul_generators();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut ideals = Vec::new();
    let zero = IdealRecord::zero();
    seen.insert(zero.members.clone());
    ideals.push(zero);
    for ideal in closures {
        if seen.insert(ideal.members.clone()) {
            ideals.push(ideal);
        }
    }
    let mut checked = 0;
    loop {
        let mut fresh = Vec::new();
        for b in checked.max(1)..ideals.len() {
            for a in 0..b {
                let (x, y) = (&ideals[a], &ideals[b]);
                if x.is_subset_of(y) || y.is_subset_of(x) {
                    continue;
                }
                let seeds: Vec<Element> = x
                    .generators
                    .iter()
                    .chain(&y.generators)
                    .map(|&i| brace.carrier().element(i))
                    .collect();
                let join = ideal_closure_with(brace, &seeds, ClosureMode::TwoSided, &gens)?;
                if seen.insert(join.members.clone()) {
                    fresh.push(join);
                }
            }
        }
        checked = ideals.len();
        if fresh.is_empty() {
            break;
        }
        ideals.extend(fresh);
    }
    ideals.sort_by(|a, b| (a.len(), &a.members).cmp(&(b.len(), &b.members)));
    Ok(ideals)
}

fn additive_generators<B: Brace + ?Sized>(brace: &B, subset: &[usize]) -> Vec<Element> {
    let mut span = AdditiveSpan::new(brace);
    for &i in subset {
        span.extend(&brace.carrier().element(i));
    }
    span.generators
}

/// Additive subgroup generated by `{a * b : a ∈ left, b ∈ right}`.
///
/// `a * b = λ_a(b) − b` is additive in `b`, so `b` only ranges over an
/// additive generating set of `right` (which must be a subgroup).
pub fn star_span<B: Brace + ?Sized>(brace: &B, left: &[usize], right: &[usize]) -> Vec<usize> {
    let right_gens = additive_generators(brace, right);
    let mut span = AdditiveSpan::new(brace);
    for &i in left {
        let a = brace.carrier().element(i);
        for b in &right_gens {
            span.extend(&brace.star(&a, b));
        }
    }
    span.sorted_indices()
}

/// Whether `left * right = 0`, stopping at the first nonzero product.
pub fn star_span_is_zero<B: Brace + ?Sized>(brace: &B, left: &[usize], right: &[usize]) -> bool {
    let right_gens = additive_generators(brace, right);
    left.iter().all(|&i| {
        let a = brace.carrier().element(i);
        right_gens.iter().all(|b| brace.star(&a, b).is_zero())
    })
}

/// Number of singleton closures used to spot-check a claimed lattice.
const LATTICE_SPOT_CHECKS: usize = 8;

/// Primeness relative to a complete ideal lattice: `I * J ≠ 0` for all
/// nonzero ideals `I`, `J`.
pub fn is_prime<B: Brace + ?Sized>(brace: &B, lattice: &[IdealRecord]) -> Result<bool> {
    let order = brace.order();
    if !lattice.iter().any(IdealRecord::is_zero) {
        return Err(Error::IncompleteLattice("zero ideal missing".into()));
    }
    if !lattice.iter().any(|i| i.len() == order) {
        return Err(Error::IncompleteLattice("full carrier missing".into()));
    }
    if let Some(bad) = lattice.iter().find(|i| !i.is_ideal) {
        return Err(Error::IncompleteLattice(format!(
            "entry of size {} is not flagged as an ideal",
            bad.len()
        )));
    }
    if order > 1 {
        let step = ((order - 1) / LATTICE_SPOT_CHECKS).max(1);
        for i in (1..order).step_by(step).take(LATTICE_SPOT_CHECKS) {
            let seed = brace.carrier().element(i);
            let closure = ideal_closure(brace, &[seed], ClosureMode::TwoSided)?;
            if !lattice.iter().any(|l| l.members == closure.members) {
                return Err(Error::IncompleteLattice(format!(
                    "closure of element {i} (size {}) is not listed",
                    closure.len()
                )));
            }
        }
    }
    let nonzero: Vec<&IdealRecord> = lattice.iter().filter(|i| !i.is_zero()).collect();
    for a in &nonzero {
        for b in &nonzero {
            if star_span_is_zero(brace, &a.members, &b.members) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
