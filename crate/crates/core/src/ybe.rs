//! The involutive non-degenerate solution `r(x, y) = (λ_x(y), λ_{λ_x(y)}⁻¹(x))`
//! of a brace, tabulated over canonical indices.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::brace::{AxiomReport, BitSet, Brace};
use crate::error::{Error, Result};

/// Above this size the braid relation is sampled.
pub const BRAID_EXHAUSTIVE_LIMIT: usize = 200;
/// Sampled triples for large tables.
pub const BRAID_SAMPLES: usize = 1_000_000;

/// `r(x, y) = (sigma[x][y], gamma[x][y])`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionTable {
    n: usize,
    sigma: Vec<u32>,
    gamma: Vec<u32>,
}

impl SolutionTable {
    pub fn new(n: usize, sigma: Vec<u32>, gamma: Vec<u32>) -> Result<Self> {
        if n == 0 || sigma.len() != n * n || gamma.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "tables of size {} and {} for N = {n}",
                sigma.len(),
                gamma.len()
            )));
        }
        if let Some(&bad) = sigma.iter().chain(&gamma).find(|&&v| v as usize >= n) {
            return Err(Error::OutOfRange {
                index: bad as usize,
                size: n,
            });
        }
        Ok(Self { n, sigma, gamma })
    }

    /// `r(x, y) = (y, x)`.
    pub fn flip(n: usize) -> Self {
        let sigma = (0..n * n).map(|i| (i % n) as u32).collect();
        let gamma = (0..n * n).map(|i| (i / n) as u32).collect();
        Self { n, sigma, gamma }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.sigma[x * self.n + y] as usize
    }

    pub fn gamma(&self, x: usize, y: usize) -> usize {
        self.gamma[x * self.n + y] as usize
    }

    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma(x, y), self.gamma(x, y))
    }

    pub fn sigma_row(&self, x: usize) -> &[u32] {
        &self.sigma[x * self.n..(x + 1) * self.n]
    }

    pub fn gamma_row(&self, x: usize) -> &[u32] {
        &self.gamma[x * self.n..(x + 1) * self.n]
    }

    pub fn is_flip(&self) -> bool {
        *self == Self::flip(self.n)
    }
}

/// Tabulates the solution of a brace whose axioms passed in `report`.
pub fn solution_from_brace<B: Brace + ?Sized>(
    brace: &B,
    report: &AxiomReport,
) -> Result<SolutionTable> {
    if !report.all_hold() || report.order != brace.order() {
        return Err(Error::AxiomsNotVerified);
    }
    let n = brace.order();
    let carrier = brace.carrier();
    let elems: Vec<_> = (0..n).map(|i| carrier.element(i)).collect();
    let inverses: Vec<_> = elems.iter().map(|x| brace.inv(x)).collect();
    let mut sigma = vec![0u32; n * n];
    let mut gamma = vec![0u32; n * n];
    for (x, ex) in elems.iter().enumerate() {
        for (y, ey) in elems.iter().enumerate() {
            let s = brace.lambda(ex, ey);
            let si = carrier.index(&s);
            let g = brace.lambda(&inverses[si], ex);
            sigma[x * n + y] = si as u32;
            gamma[x * n + y] = carrier.index(&g) as u32;
        }
    }
    SolutionTable::new(n, sigma, gamma)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidCheck {
    Exhaustive,
    Sampled { seed: u64, triples: usize },
}

impl BraidCheck {
    /// Exhaustive up to [`BRAID_EXHAUSTIVE_LIMIT`], sampled with seed 0 above.
    pub fn default_for(n: usize) -> Self {
        if n <= BRAID_EXHAUSTIVE_LIMIT {
            BraidCheck::Exhaustive
        } else {
            BraidCheck::Sampled {
                seed: 0,
                triples: BRAID_SAMPLES,
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionReport {
    pub braid: bool,
    pub braid_mode: BraidCheck,
    pub braid_triples: u64,
    pub braid_counterexample: Option<(usize, usize, usize)>,
    pub involutive: bool,
    pub involution_counterexample: Option<(usize, usize)>,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
}

impl SolutionReport {
    pub fn all_pass(&self) -> bool {
        self.braid && self.involutive && self.left_nondegenerate && self.right_nondegenerate
    }
}

pub fn check_solution(t: &SolutionTable) -> SolutionReport {
    check_solution_with(t, BraidCheck::default_for(t.n))
}

fn braid_holds(t: &SolutionTable, x: usize, y: usize, z: usize) -> bool {
    // r12 r23 r12
    let (a, b) = t.apply(x, y);
    let (b, c) = t.apply(b, z);
    let (a, b) = t.apply(a, b);
    let lhs = (a, b, c);
    // r23 r12 r23
    let (q, w) = t.apply(y, z);
    let (p, q) = t.apply(x, q);
    let (q, w) = t.apply(q, w);
    lhs == (p, q, w)
}

pub fn check_solution_with(t: &SolutionTable, mode: BraidCheck) -> SolutionReport {
    let n = t.n;
    let mut involution_counterexample = None;
    'outer: for x in 0..n {
        for y in 0..n {
            let (a, b) = t.apply(x, y);
            if t.apply(a, b) != (x, y) {
                involution_counterexample = Some((x, y));
                break 'outer;
            }
        }
    }
    let is_perm = |f: &dyn Fn(usize) -> usize| {
        let mut seen = BitSet::new(n);
        (0..n).all(|i| seen.insert(f(i)))
    };
    let left = (0..n).all(|x| is_perm(&|y| t.sigma(x, y)));
    let right = (0..n).all(|y| is_perm(&|x| t.gamma(x, y)));

    let mut braid_counterexample = None;
    let braid_triples = match mode {
        BraidCheck::Exhaustive => {
            'braid: for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !braid_holds(t, x, y, z) {
                            braid_counterexample = Some((x, y, z));
                            break 'braid;
                        }
                    }
                }
            }
            (n as u64).pow(3)
        }
        BraidCheck::Sampled { seed, triples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..triples {
                let (x, y, z) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if !braid_holds(t, x, y, z) {
                    braid_counterexample = Some((x, y, z));
                    break;
                }
            }
            triples as u64
        }
    };
    SolutionReport {
        braid: braid_counterexample.is_none(),
        braid_mode: mode,
        braid_triples,
        braid_counterexample,
        involutive: involution_counterexample.is_none(),
        involution_counterexample,
        left_nondegenerate: left,
        right_nondegenerate: right,
    }
}
