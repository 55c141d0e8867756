//! Semidirect products of braces and the prime non-simple example.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::family::{build_cycle_family, CycleBlock, CycleFamilySpec, FamilyBrace};
use super::trivial::TrivialBrace;
use crate::algebra::Matrix;
use crate::brace::{Brace, Carrier, Element};
use crate::error::{Error, Result};

/// `(s, a) ↦ act(s)(a)`, an action of `(B, ·)` on `A` by brace automorphisms.
pub type BraceAction = Box<dyn Fn(&Element, &Element) -> Element + Send + Sync>;

/// Sampled pairs used to check the action beyond the generators.
const ACTION_SAMPLES: usize = 256;

/// `A ⋊ B`: componentwise addition, `(a, s)(a', s') = (a·act(s)(a'), ss')`.
pub struct SemidirectProduct<A: Brace, B: Brace> {
    carrier: Carrier,
    left: A,
    right: B,
    act: BraceAction,
}

impl<A: Brace, B: Brace> core::fmt::Debug for SemidirectProduct<A, B> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("SemidirectProduct")
            .field("radices", &self.carrier.radices())
            .finish()
    }
}

impl<A: Brace, B: Brace> SemidirectProduct<A, B> {
    /// Checks that `act(s)` preserves `+` and `·` for every generator `s` of
    /// `(B, ·)` (on generator pairs and a seeded sample of `A`), that
    /// `act(0) = id`, and that `act` is multiplicative on generators.
    pub fn new(left: A, right: B, act: BraceAction) -> Result<Self> {
        let mut radices = left.carrier().radices().to_vec();
        radices.extend_from_slice(right.carrier().radices());
        let carrier = Carrier::new(radices)?;
        let p = Self {
            carrier,
            left,
            right,
            act,
        };
        p.verify()?;
        Ok(p)
    }

    fn verify(&self) -> Result<()> {
        let a = &self.left;
        let ac = a.carrier();
        let mut samples: Vec<Element> = a.mul_generators();
        samples.extend(ac.unit_vectors());
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let extra: Vec<(Element, Element)> = (0..ACTION_SAMPLES)
            .map(|_| {
                (
                    ac.element(rng.gen_range(0..ac.size())),
                    ac.element(rng.gen_range(0..ac.size())),
                )
            })
            .collect();
        let s_gens = self.right.mul_generators();
        let fail = |msg| Err(Error::ActionNotAutomorphism(msg));
        let zero = self.right.zero();
        for x in &samples {
            if (self.act)(&zero, x) != *x {
                return fail(format!("act(0) moves {x:?}"));
            }
        }
        for s in &s_gens {
            let f = |x: &Element| (self.act)(s, x);
            let pairs = samples
                .iter()
                .flat_map(|x| samples.iter().map(move |y| (x.clone(), y.clone())))
                .chain(extra.iter().cloned());
            for (x, y) in pairs {
                let (fx, fy) = (f(&x), f(&y));
                if !ac.contains(&fx) {
                    return fail(format!("act({s:?}) leaves the carrier at {x:?}"));
                }
                if f(&a.add(&x, &y)) != a.add(&fx, &fy) {
                    return fail(format!("act({s:?}) is not additive at {x:?}, {y:?}"));
                }
                if f(&a.mul(&x, &y)) != a.mul(&fx, &fy) {
                    return fail(format!("act({s:?}) is not multiplicative at {x:?}, {y:?}"));
                }
            }
            for t in &s_gens {
                let st = self.right.mul(s, t);
                for x in &samples {
                    if (self.act)(&st, x) != f(&(self.act)(t, x)) {
                        return fail(format!("act is not a homomorphism at {s:?}, {t:?}"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn left(&self) -> &A {
        &self.left
    }

    pub fn right(&self) -> &B {
        &self.right
    }

    pub fn split(&self, e: &Element) -> (Element, Element) {
        let (a, b) = e.coords().split_at(self.left.carrier().len());
        (Element::new(a.to_vec()), Element::new(b.to_vec()))
    }

    pub fn pair(&self, a: &Element, b: &Element) -> Element {
        let mut v = a.coords().to_vec();
        v.extend_from_slice(b.coords());
        Element::new(v)
    }

    /// Indices of `A × {0}`. The right factor varies slowest, so this is a
    /// prefix of the canonical order.
    pub fn left_ideal_indices(&self) -> Vec<usize> {
        (0..self.left.order()).collect()
    }
}

pub fn semidirect_product<A: Brace, B: Brace>(
    left: A,
    right: B,
    act: BraceAction,
) -> Result<SemidirectProduct<A, B>> {
    SemidirectProduct::new(left, right, act)
}

impl<A: Brace, B: Brace> Brace for SemidirectProduct<A, B> {
    fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    fn add(&self, x: &Element, y: &Element) -> Element {
        let ((a, s), (b, t)) = (self.split(x), self.split(y));
        self.pair(&self.left.add(&a, &b), &self.right.add(&s, &t))
    }

    fn neg(&self, x: &Element) -> Element {
        let (a, s) = self.split(x);
        self.pair(&self.left.neg(&a), &self.right.neg(&s))
    }

    fn mul(&self, x: &Element, y: &Element) -> Element {
        let ((a, s), (b, t)) = (self.split(x), self.split(y));
        self.pair(
            &self.left.mul(&a, &(self.act)(&s, &b)),
            &self.right.mul(&s, &t),
        )
    }

    fn inv(&self, x: &Element) -> Element {
        let (a, s) = self.split(x);
        let s_inv = self.right.inv(&s);
        self.pair(&(self.act)(&s_inv, &self.left.inv(&a)), &s_inv)
    }

    fn mul_generators(&self) -> Vec<Element> {
        let zero_a = self.left.zero();
        let zero_b = self.right.zero();
        let mut gens: Vec<Element> = self
            .left
            .mul_generators()
            .iter()
            .map(|a| self.pair(a, &zero_b))
            .collect();
        gens.extend(
            self.right
                .mul_generators()
                .iter()
                .map(|s| self.pair(&zero_a, s)),
        );
        gens
    }
}

/// `A ⋊ Z/(p)` via `a ↦ β^a` for an automorphism `β` of order `p`.
pub fn extend_by_automorphism<A: Brace>(
    base: A,
    beta: Box<dyn Fn(&Element) -> Element + Send + Sync>,
    p: u32,
) -> Result<SemidirectProduct<A, TrivialBrace>> {
    let cyclic = TrivialBrace::new(&[p])?;
    let probe: Vec<Element> = base.mul_generators();
    let mut moved = false;
    for x in &probe {
        let mut y = x.clone();
        for _ in 0..p {
            y = beta(&y);
        }
        if y != *x {
            return Err(Error::ActionNotAutomorphism(format!("β^{p} moves {x:?}")));
        }
        moved |= beta(x) != *x;
    }
    if !moved {
        return Err(Error::ActionNotAutomorphism(
            "β fixes every generator".into(),
        ));
    }
    let act: BraceAction = Box::new(move |s: &Element, a: &Element| {
        let mut y = a.clone();
        for _ in 0..s.coords()[0] {
            y = beta(&y);
        }
        y
    });
    SemidirectProduct::new(base, cyclic, act)
}

/// The prime non-simple brace of order 92160.
pub type PrimeExample = SemidirectProduct<FamilyBrace, TrivialBrace>;

/// The cycle family over `(2, 3)` with `f_1 = [[0,1],[1,1]]`, `f_2 = [−1]`,
/// `m = (m1, 1)` and `r = (1, 1)`.
pub fn prime_example_base(m1: usize) -> Result<FamilyBrace> {
    let spec = CycleFamilySpec {
        blocks: vec![
            CycleBlock {
                p: 2,
                gram: Matrix::from_rows(2, &[[0, 1], [1, 0]])?,
                f: Matrix::from_rows(2, &[[0, 1], [1, 1]])?,
                m: m1,
                r: 1,
            },
            CycleBlock {
                p: 3,
                gram: Matrix::from_rows(3, &[[1]])?,
                f: Matrix::from_rows(3, &[[-1]])?,
                m: 1,
                r: 1,
            },
        ],
    };
    build_cycle_family(&spec)
}

/// `(T ⋊∘ S) ⋊ Z/(5)`, where the generator of `Z/(5)` cyclically shifts the
/// five copies of `V_1`. Only `m1 = 5` is supported.
pub fn build_prime_example(m1: usize) -> Result<PrimeExample> {
    if m1 != 5 {
        return Err(Error::UnsupportedParameter(format!(
            "m1 = {m1}; the shift needs exactly 5 copies of V_1"
        )));
    }
    let base = prime_example_base(m1)?;
    let t = base.t_range(0);
    let dim = base.slot_range(0, 0).len();
    let beta = Box::new(move |x: &Element| {
        let mut v = x.coords().to_vec();
        let src = &x.coords()[t.clone()];
        let dst = &mut v[t.clone()];
        for k in 0..m1 {
            let from = ((k + 1) % m1) * dim;
            dst[k * dim..(k + 1) * dim].copy_from_slice(&src[from..from + dim]);
        }
        Element::new(v)
    });
    extend_by_automorphism(base, beta, 5)
}
