//! Cycle and matrix families of asymmetric products over a cyclic chain of
//! primes. Both share one engine: `T_z` is a list of slots, each a copy of
//! `V_z`, and every slot knows which coordinates of `S_z` receive its form
//! value and which coordinates of `S_{z−1}` enter the exponent of `f_z`.
//!
//! Blocks are indexed from 0; block `z` acts through block `z − 1 mod n`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::algebra::field::is_prime;
use crate::algebra::{matrix_order, minus_id_bijective, Matrix, Subspace};
use crate::brace::{additive_span, is_ideal, is_left_ideal, Brace, Carrier, Element, IdealRecord};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBlock {
    pub p: u32,
    pub gram: Matrix,
    pub f: Matrix,
    pub m: usize,
    pub r: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleFamilySpec {
    pub blocks: Vec<CycleBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixBlock {
    pub p: u32,
    pub gram: Matrix,
    pub f: Matrix,
    pub r: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFamilySpec {
    pub blocks: Vec<MatrixBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecCheck {
    pub constraint: &'static str,
    pub block: Option<usize>,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of validating a family spec. `minus_id_bijective` is the
/// simplicity predicate per block and is not a constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecReport {
    pub checks: Vec<SpecCheck>,
    pub minus_id_bijective: Vec<bool>,
}

impl SpecReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&SpecCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn predicts_simple(&self) -> bool {
        self.is_valid() && self.minus_id_bijective.iter().all(|&b| b)
    }

    fn push(
        &mut self,
        constraint: &'static str,
        block: Option<usize>,
        passed: bool,
        detail: String,
    ) {
        self.checks.push(SpecCheck {
            constraint,
            block,
            passed,
            detail,
        });
    }
}

/// How strictly `order(f_z) = p_{z−1}` is enforced.
#[derive(Clone, Copy, PartialEq, Eq)]
enum OrderRule {
    Exact,
    /// `f_z^{p_{z−1}} = id` suffices for the action to be well defined.
    Divides,
}

struct BlockData<'a> {
    p: u32,
    gram: &'a Matrix,
    f: &'a Matrix,
    r: usize,
    m: Option<usize>,
}

fn validate(blocks: &[BlockData<'_>], rule: OrderRule) -> SpecReport {
    let mut rep = SpecReport {
        checks: Vec::new(),
        minus_id_bijective: Vec::new(),
    };
    let n = blocks.len();
    rep.push("n > 1", None, n > 1, format!("n = {n}"));
    let mut shapes_ok = vec![false; n];
    for (z, b) in blocks.iter().enumerate() {
        rep.push(
            "p prime",
            Some(z),
            is_prime(b.p as u64),
            format!("p = {}", b.p),
        );
        let shape = b.gram.is_square()
            && b.f.is_square()
            && b.gram.rows() == b.f.rows()
            && b.gram.modulus() == b.p
            && b.f.modulus() == b.p;
        shapes_ok[z] = shape;
        rep.push(
            "gram and f are square of equal size over Z/(p)",
            Some(z),
            shape,
            format!(
                "gram {}x{}, f {}x{}",
                b.gram.rows(),
                b.gram.cols(),
                b.f.rows(),
                b.f.cols()
            ),
        );
        rep.push("r ≥ 1", Some(z), b.r >= 1, format!("r = {}", b.r));
    }
    let mut distinct = true;
    for i in 0..n {
        for j in i + 1..n {
            if blocks[i].p == blocks[j].p {
                distinct = false;
            }
        }
    }
    let primes: Vec<u32> = blocks.iter().map(|b| b.p).collect();
    rep.push(
        "distinct primes",
        None,
        distinct,
        format!("primes {primes:?}"),
    );

    for (z, b) in blocks.iter().enumerate() {
        let prev = &blocks[(z + n - 1) % n];
        if !shapes_ok[z] {
            rep.minus_id_bijective.push(false);
            continue;
        }
        rep.push(
            "gram symmetric",
            Some(z),
            b.gram.is_symmetric(),
            String::new(),
        );
        rep.push(
            "gram non-singular",
            Some(z),
            b.gram.is_invertible(),
            String::new(),
        );
        let orth = preserves_gram(b.f, b.gram);
        rep.push("f orthogonal", Some(z), orth, String::new());
        match rule {
            OrderRule::Exact => {
                let order = matrix_order(b.f, prev.p as u64);
                let ok = order == Ok(prev.p as u64);
                let detail = match order {
                    Ok(o) => format!("order {o}, expected {}", prev.p),
                    Err(e) => format!("{e}, expected {}", prev.p),
                };
                rep.push("order(f_z) = p_{z-1}", Some(z), ok, detail);
            }
            OrderRule::Divides => {
                let ok =
                    b.f.pow(prev.p as u64)
                        .map(|m| m.is_identity())
                        .unwrap_or(false);
                rep.push("f_z^{p_{z-1}} = id", Some(z), ok, String::new());
            }
        }
        if let Some(m) = b.m {
            let need = b.r.max(prev.r).max(1);
            rep.push(
                "m_z ≥ max(r_z, r_{z-1})",
                Some(z),
                m >= need,
                format!("m = {m}, r_z = {}, r_(z-1) = {}", b.r, prev.r),
            );
        }
        rep.minus_id_bijective.push(minus_id_bijective(b.f));
    }
    rep
}

fn preserves_gram(f: &Matrix, gram: &Matrix) -> bool {
    f.transpose()
        .mul(gram)
        .and_then(|x| x.mul(f))
        .map(|x| x == *gram)
        .unwrap_or(false)
}

fn cycle_data(spec: &CycleFamilySpec) -> Vec<BlockData<'_>> {
    spec.blocks
        .iter()
        .map(|b| BlockData {
            p: b.p,
            gram: &b.gram,
            f: &b.f,
            r: b.r,
            m: Some(b.m),
        })
        .collect()
}

fn matrix_data(spec: &MatrixFamilySpec) -> Vec<BlockData<'_>> {
    spec.blocks
        .iter()
        .map(|b| BlockData {
            p: b.p,
            gram: &b.gram,
            f: &b.f,
            r: b.r,
            m: None,
        })
        .collect()
}

pub fn validate_cycle_spec(spec: &CycleFamilySpec) -> SpecReport {
    validate(&cycle_data(spec), OrderRule::Exact)
}

pub fn validate_matrix_spec(spec: &MatrixFamilySpec) -> SpecReport {
    validate(&matrix_data(spec), OrderRule::Exact)
}

fn ensure_valid(report: &SpecReport) -> Result<()> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => {
            let at = c
                .block
                .map(|z| format!(" at block {z}"))
                .unwrap_or_default();
            Err(Error::SpecInvalid(format!(
                "{}{} ({})",
                c.constraint, at, c.detail
            )))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Cycle,
    Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Slot {
    /// Coordinates of `S_z` that receive `b_z(u, v)`.
    targets: Vec<usize>,
    /// `(j, w)`: coordinate `j` of `S_{z−1}` contributes `w·μ_j` to the exponent.
    weights: Vec<(usize, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Block {
    p: u32,
    dim: usize,
    gram: Matrix,
    f: Matrix,
    /// `f^0, …, f^{p_{z−1}−1}`.
    f_powers: Vec<Matrix>,
    prev: usize,
    prev_p: u32,
    slots: Vec<Slot>,
    r: usize,
    start: usize,
}

impl Block {
    fn t_start(&self) -> usize {
        self.start
    }

    fn s_start(&self) -> usize {
        self.start + self.slots.len() * self.dim
    }

    fn end(&self) -> usize {
        self.s_start() + self.r
    }

    fn slot(&self, k: usize) -> Range<usize> {
        let a = self.start + k * self.dim;
        a..a + self.dim
    }
}

/// A brace from the cycle or matrix family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyBrace {
    kind: FamilyKind,
    carrier: Carrier,
    blocks: Vec<Block>,
    t_mask: Vec<bool>,
}

fn cycle_slots(m: usize, r: usize, r_prev: usize) -> Vec<Slot> {
    (0..m)
        .map(|i| {
            let targets = if i + 1 < r {
                vec![i, r - 1]
            } else {
                vec![r - 1]
            };
            let weights = if i + 1 < r_prev {
                vec![(i, 1), (r_prev - 1, 1)]
            } else {
                vec![(r_prev - 1, 1)]
            };
            Slot { targets, weights }
        })
        .collect()
}

fn matrix_slots(r: usize, r_prev: usize) -> Vec<Slot> {
    (0..r)
        .flat_map(|i| {
            (0..r_prev).map(move |j| Slot {
                targets: vec![i],
                weights: vec![(j, 1)],
            })
        })
        .collect()
}

impl FamilyBrace {
    fn assemble(kind: FamilyKind, data: &[BlockData<'_>], slots: Vec<Vec<Slot>>) -> Result<Self> {
        let n = data.len();
        let mut blocks = Vec::with_capacity(n);
        let mut radices = Vec::new();
        for (z, (b, slots)) in data.iter().zip(slots).enumerate() {
            let prev = (z + n - 1) % n;
            let prev_p = data[prev].p;
            let mut f_powers = Vec::with_capacity(prev_p as usize);
            let mut acc = Matrix::identity(b.f.rows(), b.p)?;
            for _ in 0..prev_p {
                f_powers.push(acc.clone());
                acc = acc.mul(b.f)?;
            }
            let dim = b.f.rows();
            let start = radices.len();
            radices.extend(core::iter::repeat_n(b.p, slots.len() * dim + b.r));
            blocks.push(Block {
                p: b.p,
                dim,
                gram: b.gram.clone(),
                f: b.f.clone(),
                f_powers,
                prev,
                prev_p,
                slots,
                r: b.r,
                start,
            });
        }
        let mut t_mask = vec![false; radices.len()];
        for b in &blocks {
            t_mask[b.t_start()..b.s_start()].fill(true);
        }
        Ok(Self {
            kind,
            carrier: Carrier::new(radices)?,
            blocks,
            t_mask,
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_prime(&self, z: usize) -> u32 {
        self.blocks[z].p
    }

    pub fn block_map(&self, z: usize) -> &Matrix {
        &self.blocks[z].f
    }

    pub fn block_gram(&self, z: usize) -> &Matrix {
        &self.blocks[z].gram
    }

    /// Number of `V_z` copies in `T_z`.
    pub fn slot_count(&self, z: usize) -> usize {
        self.blocks[z].slots.len()
    }

    /// Coordinates of `(t_z, s_z)`.
    pub fn block_range(&self, z: usize) -> Range<usize> {
        self.blocks[z].start..self.blocks[z].end()
    }

    pub fn t_range(&self, z: usize) -> Range<usize> {
        self.blocks[z].t_start()..self.blocks[z].s_start()
    }

    pub fn s_range(&self, z: usize) -> Range<usize> {
        self.blocks[z].s_start()..self.blocks[z].end()
    }

    /// Coordinates of slot `k` of `T_z`.
    pub fn slot_range(&self, z: usize, k: usize) -> Range<usize> {
        self.blocks[z].slot(k)
    }

    /// `b'_z(t, t')` for `t, t' ∈ T_z` given as flat slot coordinates.
    pub fn block_form(&self, z: usize, t: &[u32], u: &[u32]) -> Vec<u32> {
        let blk = &self.blocks[z];
        let mut out = vec![0u32; blk.r];
        for (k, slot) in blk.slots.iter().enumerate() {
            let r = k * blk.dim..(k + 1) * blk.dim;
            let v = blk.gram.bilinear(&t[r.clone()], &u[r]);
            for &i in &slot.targets {
                out[i] = (out[i] + v) % blk.p;
            }
        }
        out
    }

    /// `f_s^{(z−1,z)}(t)` for `s ∈ S_{z−1}` and `t ∈ T_z`.
    pub fn block_action(&self, z: usize, s_prev: &[u32], t: &[u32]) -> Vec<u32> {
        let blk = &self.blocks[z];
        let mut out = vec![0u32; t.len()];
        for (k, slot) in blk.slots.iter().enumerate() {
            let e = exponent(slot, s_prev, blk.prev_p);
            let r = k * blk.dim..(k + 1) * blk.dim;
            blk.f_powers[e].apply_into(&t[r.clone()], &mut out[r]);
        }
        out
    }

    /// Elements supported on block `z`: the Sylow `p_z`-part `A_z`.
    pub fn sylow_block(&self, z: usize) -> Vec<usize> {
        let range = self.block_range(z);
        let gens: Vec<Element> = self
            .carrier
            .unit_vectors()
            .into_iter()
            .skip(range.start)
            .take(range.len())
            .collect();
        additive_span(self, &gens)
    }

    fn add_forms(&self, a: &[u32], b: &[u32], out: &mut [u32]) {
        for blk in &self.blocks {
            let s0 = blk.s_start();
            for (k, slot) in blk.slots.iter().enumerate() {
                let r = blk.slot(k);
                let v = blk.gram.bilinear(&a[r.clone()], &b[r]);
                if v != 0 {
                    for &i in &slot.targets {
                        out[s0 + i] = (out[s0 + i] + v) % blk.p;
                    }
                }
            }
        }
    }

    /// `out_t += α_s(t)` blockwise, reading exponents from `s`.
    fn act_into(&self, s: &[u32], t: &[u32], out: &mut [u32]) {
        let mut buf = Vec::new();
        for blk in &self.blocks {
            let prev = &self.blocks[blk.prev];
            let s_prev = &s[prev.s_start()..prev.end()];
            buf.resize(blk.dim, 0);
            for (k, slot) in blk.slots.iter().enumerate() {
                let e = exponent(slot, s_prev, blk.prev_p);
                let r = blk.slot(k);
                blk.f_powers[e].apply_into(&t[r.clone()], &mut buf);
                for (o, &v) in out[r].iter_mut().zip(&buf) {
                    *o = (*o + v) % blk.p;
                }
            }
        }
    }

    fn is_t_coord(&self, i: usize) -> bool {
        self.t_mask[i]
    }
}

#[inline]
fn exponent(slot: &Slot, s_prev: &[u32], modulus: u32) -> usize {
    let mut e = 0u64;
    for &(j, w) in &slot.weights {
        e += w as u64 * s_prev[j] as u64;
    }
    (e % modulus as u64) as usize
}

impl Brace for FamilyBrace {
    fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    fn add(&self, a: &Element, b: &Element) -> Element {
        let (x, y) = (a.coords(), b.coords());
        let radices = self.carrier.radices();
        let mut out: Vec<u32> = x
            .iter()
            .zip(y)
            .zip(radices)
            .map(|((&u, &v), &r)| (u + v) % r)
            .collect();
        self.add_forms(x, y, &mut out);
        Element::new(out)
    }

    fn neg(&self, a: &Element) -> Element {
        let x = a.coords();
        let radices = self.carrier.radices();
        let mut out: Vec<u32> = x.iter().zip(radices).map(|(&u, &r)| (r - u) % r).collect();
        self.add_forms(x, x, &mut out);
        Element::new(out)
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let (x, y) = (a.coords(), b.coords());
        let radices = self.carrier.radices();
        let mut out = x.to_vec();
        for i in 0..out.len() {
            if !self.is_t_coord(i) {
                out[i] = (out[i] + y[i]) % radices[i];
            }
        }
        self.act_into(x, y, &mut out);
        Element::new(out)
    }

    fn inv(&self, a: &Element) -> Element {
        let x = a.coords();
        let radices = self.carrier.radices();
        let mut s_inv = vec![0u32; x.len()];
        for i in 0..x.len() {
            if !self.is_t_coord(i) {
                s_inv[i] = (radices[i] - x[i]) % radices[i];
            }
        }
        let mut acted = vec![0u32; x.len()];
        self.act_into(&s_inv, x, &mut acted);
        let mut out = s_inv;
        for blk in &self.blocks {
            for i in blk.t_start()..blk.s_start() {
                out[i] = (blk.p - acted[i]) % blk.p;
            }
        }
        Element::new(out)
    }
}

/// The cycle family `T_z = V_z^{m_z}`, `S_z = (Z/(p_z))^{r_z}`.
pub fn build_cycle_family(spec: &CycleFamilySpec) -> Result<FamilyBrace> {
    ensure_valid(&validate_cycle_spec(spec))?;
    assemble_cycle(spec)
}

/// As [`build_cycle_family`], but only requires `f_z^{p_{z−1}} = id`, so
/// degenerate maps such as `f_z = id` are accepted.
pub fn build_cycle_family_relaxed(spec: &CycleFamilySpec) -> Result<FamilyBrace> {
    ensure_valid(&validate(&cycle_data(spec), OrderRule::Divides))?;
    assemble_cycle(spec)
}

fn assemble_cycle(spec: &CycleFamilySpec) -> Result<FamilyBrace> {
    let n = spec.blocks.len();
    let slots = (0..n)
        .map(|z| {
            let b = &spec.blocks[z];
            cycle_slots(b.m, b.r, spec.blocks[(z + n - 1) % n].r)
        })
        .collect();
    FamilyBrace::assemble(FamilyKind::Cycle, &cycle_data(spec), slots)
}

/// The matrix family `T_z = M_{r_z, r_{z−1}}(V_z)`, slots in row-major order.
pub fn build_matrix_family(spec: &MatrixFamilySpec) -> Result<FamilyBrace> {
    ensure_valid(&validate_matrix_spec(spec))?;
    let n = spec.blocks.len();
    let slots = (0..n)
        .map(|z| matrix_slots(spec.blocks[z].r, spec.blocks[(z + n - 1) % n].r))
        .collect();
    FamilyBrace::assemble(FamilyKind::Matrix, &matrix_data(spec), slots)
}

/// The ideal `J` of elements whose `T_z` slots all lie in `Im(f_z − id)`.
/// Fails with `NoWitness` when every `f_z − id` is bijective.
pub fn simplicity_witness_j(brace: &FamilyBrace) -> Result<IdealRecord> {
    let mut images: Vec<Subspace> = Vec::new();
    for blk in &brace.blocks {
        images.push(blk.f.minus_identity()?.column_space());
    }
    if images
        .iter()
        .zip(&brace.blocks)
        .all(|(im, b)| im.dimension() == b.dim)
    {
        return Err(Error::NoWitness("every f_z − id is bijective".into()));
    }
    let len = brace.carrier.len();
    let mut gens = Vec::new();
    for (blk, im) in brace.blocks.iter().zip(&images) {
        for k in 0..blk.slots.len() {
            let r = blk.slot(k);
            for v in im.basis() {
                let mut e = vec![0u32; len];
                e[r.clone()].copy_from_slice(v);
                gens.push(Element::new(e));
            }
        }
        for i in blk.s_start()..blk.end() {
            let mut e = vec![0u32; len];
            e[i] = 1;
            gens.push(Element::new(e));
        }
    }
    let members = additive_span(brace, &gens);
    let generators = gens.iter().map(|g| brace.carrier.index(g)).collect();
    Ok(IdealRecord {
        is_left_ideal: is_left_ideal(brace, &members)?,
        is_ideal: is_ideal(brace, &members)?,
        members,
        generators,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentSplit {
    pub m_prime: u64,
    pub r: u64,
}

/// Writes `m_z = m'_z·dim_z + r_z` with `0 < r_z ≤ dim_z` and checks
/// `m'_z ≥ max(r_z, r_{z−1})`, which is what the cycle family needs.
pub fn solve_exponents(dims: &[usize], targets: &[u64]) -> Result<Vec<ExponentSplit>> {
    if dims.len() != targets.len() || dims.is_empty() {
        return Err(Error::DimensionMismatch(format!(
            "{} dimensions for {} targets",
            dims.len(),
            targets.len()
        )));
    }
    let mut out = Vec::with_capacity(dims.len());
    for (z, (&d, &m)) in dims.iter().zip(targets).enumerate() {
        if d == 0 || m == 0 {
            return Err(Error::BelowBound {
                block: z,
                target: m,
            });
        }
        let d = d as u64;
        let r = (m - 1) % d + 1;
        out.push(ExponentSplit {
            m_prime: (m - r) / d,
            r,
        });
    }
    let n = out.len();
    for z in 0..n {
        let prev = out[(z + n - 1) % n];
        let need = out[z].r.max(prev.r);
        if out[z].m_prime < need {
            return Err(Error::BelowBound {
                block: z,
                target: targets[z],
            });
        }
    }
    Ok(out)
}
