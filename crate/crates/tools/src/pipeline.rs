//! Verification pipelines shared by the command line and the tests.
//! Closures over independent seeds run on the rayon pool; results are
//! merged in seed order, so output does not depend on the thread count.

use brace_core::bounds::BoundsReport;
use brace_core::brace::{
    check_axioms, complete_lattice, ideal_closure_with, is_ideal, is_prime, star_span, AxiomMode,
    AxiomReport, Certificate, ClosureMode, IdealRecord, Simplicity, AXIOM_BUDGET,
};
use brace_core::constructions::{build_prime_example, simplicity_witness_j, FamilyBrace};
use brace_core::group::{group_report, sylow_left_ideals};
use brace_core::ybe::{
    check_solution_with, solution_from_brace, BraidCheck, SolutionReport, SolutionTable,
};
use brace_core::{Brace, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, ToolError};
use crate::spec::FamilySpec;

/// Seeds closed per parallel batch before checking for an early exit.
const BATCH: usize = 512;
/// Triples drawn when the carrier is too large for an exhaustive check.
pub const SAMPLED_TRIPLES: usize = 100_000;

pub fn thread_pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    builder.build().map_err(|e| ToolError::Usage(e.to_string()))
}

fn ensure_budget(order: usize, budget: usize) -> Result<()> {
    if order > budget {
        return Err(Error::BudgetExceeded {
            needed: order as u128,
            budget: budget as u128,
        }
        .into());
    }
    Ok(())
}

fn closures<B: Brace + Sync + ?Sized>(b: &B, seeds: &[usize]) -> Result<Vec<IdealRecord>> {
    let gens = b.mul_generators();
    let out: brace_core::Result<Vec<_>> = seeds
        .par_iter()
        .map(|&i| ideal_closure_with(b, &[b.element_at(i)?], ClosureMode::TwoSided, &gens))
        .collect();
    Ok(out?)
}

/// Parallel simplicity test; the certificate is the closure of the
/// smallest-index seed that falls short of the carrier.
pub fn par_is_simple<B: Brace + Sync + ?Sized>(b: &B, budget: usize) -> Result<Simplicity> {
    let n = b.order();
    ensure_budget(n, budget)?;
    if n == 1 {
        return Ok(Simplicity {
            simple: false,
            certificate: Certificate::ZeroBrace,
        });
    }
    let mut start = 1;
    while start < n {
        let seeds: Vec<usize> = (start..(start + BATCH).min(n)).collect();
        if let Some(ideal) = closures(b, &seeds)?.into_iter().find(|c| c.len() != n) {
            return Ok(Simplicity {
                simple: false,
                certificate: Certificate::ProperIdeal(ideal),
            });
        }
        start += BATCH;
    }
    Ok(Simplicity {
        simple: true,
        certificate: Certificate::AllClosuresFull { closures: n - 1 },
    })
}

pub fn par_list_ideals<B: Brace + Sync + ?Sized>(b: &B, budget: usize) -> Result<Vec<IdealRecord>> {
    ensure_budget(b.order(), budget)?;
    let seeds: Vec<usize> = (1..b.order()).collect();
    Ok(complete_lattice(b, closures(b, &seeds)?)?)
}

/// Exhaustive up to the axiom budget, otherwise sampled.
pub fn axiom_mode(order: usize, seed: u64) -> AxiomMode {
    if order <= AXIOM_BUDGET {
        AxiomMode::Exhaustive
    } else {
        AxiomMode::Sampled {
            seed,
            trials: SAMPLED_TRIPLES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomSummary {
    pub mode: &'static str,
    pub triples: u64,
    pub holds: bool,
    pub failed_law: Option<&'static str>,
    pub counterexample: Option<Vec<usize>>,
}

impl From<&AxiomReport> for AxiomSummary {
    fn from(r: &AxiomReport) -> Self {
        let failed = [
            &r.additive_group,
            &r.multiplicative_group,
            &r.compatibility,
            &r.shared_identity,
        ]
        .into_iter()
        .find_map(|c| c.counterexample.as_ref());
        Self {
            mode: match r.mode {
                AxiomMode::Exhaustive => "exhaustive",
                AxiomMode::Sampled { .. } => "sampled",
            },
            triples: r.triples_checked,
            holds: r.all_hold(),
            failed_law: failed.map(|c| c.law),
            counterexample: failed.map(|c| c.elements.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BuildReport {
    pub family: &'static str,
    pub order: usize,
    pub radices: Vec<u32>,
    pub block_primes: Vec<u32>,
    pub minus_id_bijective: Vec<bool>,
    pub predicts_simple: bool,
}

pub fn build_report(spec: &FamilySpec, b: &FamilyBrace) -> BuildReport {
    let rep = spec.validate();
    BuildReport {
        family: spec.family_name(),
        order: b.order(),
        radices: b.carrier().radices().to_vec(),
        block_primes: (0..b.block_count()).map(|z| b.block_prime(z)).collect(),
        predicts_simple: rep.predicts_simple(),
        minus_id_bijective: rep.minus_id_bijective,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealSummary {
    pub size: usize,
    pub generators: Vec<usize>,
}

impl From<&IdealRecord> for IdealSummary {
    fn from(r: &IdealRecord) -> Self {
        Self {
            size: r.len(),
            generators: r.generators.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub build: BuildReport,
    pub axioms: AxiomSummary,
    pub simple: bool,
    /// `all-closures-full` or `proper-ideal`.
    pub certificate: &'static str,
    pub closures_checked: usize,
    pub proper_ideal: Option<IdealSummary>,
    /// Size of the witness ideal `J` when some `f_z − id` is singular.
    pub witness_j: Option<usize>,
    pub certificate_inside_j: Option<bool>,
    /// Sizes of all ideals, smallest first.
    pub lattice: Vec<usize>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.axioms.holds
    }
}

pub fn verify(spec: &FamilySpec, budget: usize, seed: u64) -> Result<VerifyReport> {
    let b = spec.build()?;
    let build = build_report(spec, &b);
    let axioms = check_axioms(&b, axiom_mode(b.order(), seed), AXIOM_BUDGET)?;
    let simplicity = par_is_simple(&b, budget)?;
    let j = match simplicity_witness_j(&b) {
        Ok(j) => Some(j),
        Err(Error::NoWitness(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let (certificate, closures_checked, proper) = match &simplicity.certificate {
        Certificate::AllClosuresFull { closures } => ("all-closures-full", *closures, None),
        Certificate::ProperIdeal(i) => ("proper-ideal", 0, Some(i.clone())),
        Certificate::ZeroBrace => ("zero-brace", 0, None),
    };
    let lattice = if simplicity.simple {
        vec![1, b.order()]
    } else {
        par_list_ideals(&b, budget)?
            .iter()
            .map(IdealRecord::len)
            .collect()
    };
    Ok(VerifyReport {
        build,
        axioms: (&axioms).into(),
        simple: simplicity.simple,
        certificate,
        closures_checked,
        certificate_inside_j: match (&proper, &j) {
            (Some(p), Some(j)) => Some(p.is_subset_of(j)),
            _ => None,
        },
        proper_ideal: proper.as_ref().map(Into::into),
        witness_j: j.map(|j| j.len()),
        lattice,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SylowSummary {
    pub prime: u32,
    pub size: usize,
    pub left_ideal: bool,
    pub ideal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub order: usize,
    pub is_abelian: bool,
    pub is_metabelian: bool,
    pub is_a_group: bool,
    pub derived_size: usize,
    pub sylow: Vec<SylowSummary>,
}

pub fn analyze<B: Brace + ?Sized>(b: &B, budget: usize) -> Result<AnalyzeReport> {
    let g = group_report(b, budget)?;
    let sylow = sylow_left_ideals(b)?
        .iter()
        .map(|(p, blk)| SylowSummary {
            prime: *p,
            size: blk.len(),
            left_ideal: blk.is_left_ideal,
            ideal: blk.is_ideal,
        })
        .collect();
    Ok(AnalyzeReport {
        order: b.order(),
        is_abelian: g.is_abelian,
        is_metabelian: g.is_metabelian,
        is_a_group: g.is_a_group,
        derived_size: g.derived_size,
        sylow,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsRowOut {
    pub p: u32,
    pub p_prev: u32,
    pub k: u64,
    pub nu_k: u64,
    pub minimal_dim: usize,
    pub l: u64,
}

pub fn bounds_rows(r: &BoundsReport) -> Vec<BoundsRowOut> {
    r.rows
        .iter()
        .map(|row| BoundsRowOut {
            p: row.p,
            p_prev: row.p_prev,
            k: row.k,
            nu_k: row.nu_k,
            minimal_dim: row.minimal_dim,
            l: row.l,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionSummary {
    pub size: usize,
    pub braid: bool,
    pub braid_mode: &'static str,
    pub braid_triples: u64,
    pub involutive: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
}

impl From<&SolutionReport> for SolutionSummary {
    fn from(r: &SolutionReport) -> Self {
        Self {
            size: 0,
            braid: r.braid,
            braid_mode: match r.braid_mode {
                BraidCheck::Exhaustive => "exhaustive",
                BraidCheck::Sampled { .. } => "sampled",
            },
            braid_triples: r.braid_triples,
            involutive: r.involutive,
            left_nondegenerate: r.left_nondegenerate,
            right_nondegenerate: r.right_nondegenerate,
        }
    }
}

/// Builds and checks the solution of `b`. Braid triples are sampled with
/// `seed` above the exhaustive limit.
pub fn solution<B: Brace + ?Sized>(b: &B, seed: u64) -> Result<(SolutionTable, SolutionSummary)> {
    let axioms = check_axioms(b, axiom_mode(b.order(), seed), AXIOM_BUDGET)?;
    let table = solution_from_brace(b, &axioms)?;
    let mode = match BraidCheck::default_for(table.size()) {
        BraidCheck::Sampled { triples, .. } => BraidCheck::Sampled { seed, triples },
        m => m,
    };
    let mut summary = SolutionSummary::from(&check_solution_with(&table, mode));
    summary.size = table.size();
    Ok((table, summary))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeExampleReport {
    pub order: usize,
    pub left_factor_size: usize,
    pub left_factor_is_ideal: bool,
    pub star_square_is_left_factor: bool,
    pub seeds_outside: usize,
    pub outside_closures_full: usize,
    pub seeds_inside: usize,
    pub inside_closures_left_factor: usize,
    pub simple: bool,
    pub prime: bool,
    /// `sampled` for the lattice `{0, A×{0}, B}`, `exhaustive` with `--full`.
    pub lattice_mode: &'static str,
    pub lattice: Vec<usize>,
}

impl PrimeExampleReport {
    pub fn passed(&self) -> bool {
        self.left_factor_is_ideal
            && self.star_square_is_left_factor
            && self.outside_closures_full == self.seeds_outside
            && self.inside_closures_left_factor == self.seeds_inside
            && !self.simple
            && self.prime
    }
}

fn record(members: Vec<usize>) -> IdealRecord {
    IdealRecord {
        members,
        is_left_ideal: true,
        is_ideal: true,
        generators: Vec::new(),
    }
}

/// The order-92160 example: `A × {0}` is a proper ideal with nonzero
/// `*`-square, random seeds on either side of it close as expected, and
/// the brace is prime relative to `{0, A × {0}, B}` (or to the exhaustive
/// lattice when `full` is set).
pub fn prime_example(
    samples: usize,
    seed: u64,
    full: bool,
    budget: usize,
) -> Result<PrimeExampleReport> {
    let b = build_prime_example(5)?;
    let n = b.order();
    let a = b.left_ideal_indices();
    let left_factor_is_ideal = is_ideal(&b, &a)?;
    let star_square_is_left_factor = star_span(&b, &a, &a) == a;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outside: Vec<usize> = (0..samples).map(|_| rng.gen_range(a.len()..n)).collect();
    let inside: Vec<usize> = (0..samples).map(|_| rng.gen_range(1..a.len())).collect();
    let outside_closures_full = closures(&b, &outside)?
        .iter()
        .filter(|c| c.len() == n)
        .count();
    let inside_closures_left_factor = closures(&b, &inside)?
        .iter()
        .filter(|c| c.members == a)
        .count();

    let (lattice_mode, lattice) = if full {
        ("exhaustive", par_list_ideals(&b, budget.max(n))?)
    } else {
        (
            "sampled",
            vec![IdealRecord::zero(), record(a.clone()), IdealRecord::full(n)],
        )
    };
    let prime = is_prime(&b, &lattice)?;
    let simple = !(left_factor_is_ideal && !a.is_empty() && a.len() < n);
    Ok(PrimeExampleReport {
        order: n,
        left_factor_size: a.len(),
        left_factor_is_ideal,
        star_square_is_left_factor,
        seeds_outside: samples,
        outside_closures_full,
        seeds_inside: samples,
        inside_closures_left_factor,
        simple,
        prime,
        lattice_mode,
        lattice: lattice.iter().map(IdealRecord::len).collect(),
    })
}
