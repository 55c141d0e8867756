//! The asymmetric product `T ⋊∘ S` of two trivial braces.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::trivial::{add_coords, neg_coords, TrivialBrace};
use crate::brace::{Brace, Carrier, Element};
use crate::error::{Error, Result};

/// Symmetric bilinear map `b: T × T → S` on coordinate slices.
pub type FormFn = Box<dyn Fn(&[u32], &[u32]) -> Vec<u32> + Send + Sync>;
/// `(s, t) ↦ α_s(t)`.
pub type ActionFn = Box<dyn Fn(&[u32], &[u32]) -> Vec<u32> + Send + Sync>;

/// Random pairs and triples tried on top of the basis checks.
const RANDOM_CHECKS: usize = 64;

pub struct AsymmetricProduct {
    carrier: Carrier,
    t: TrivialBrace,
    s: TrivialBrace,
    form: FormFn,
    action: ActionFn,
}

impl core::fmt::Debug for AsymmetricProduct {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("AsymmetricProduct")
            .field("t", &self.t.carrier().radices())
            .field("s", &self.s.carrier().radices())
            .finish()
    }
}

fn violation(condition: &'static str, detail: alloc::string::String) -> Error {
    Error::ConditionViolation { condition, detail }
}

impl AsymmetricProduct {
    /// Builds `T ⋊∘ S` after checking, on basis vectors and a seeded sample,
    /// that `b` is symmetric and bilinear, each `α_s` is additive and lies in
    /// `O(T, b)`, and `α` is a homomorphism.
    pub fn new(t: TrivialBrace, s: TrivialBrace, form: FormFn, action: ActionFn) -> Result<Self> {
        let mut radices = t.carrier().radices().to_vec();
        radices.extend_from_slice(s.carrier().radices());
        let carrier = Carrier::new(radices)?;
        let product = Self {
            carrier,
            t,
            s,
            form,
            action,
        };
        product.verify()?;
        Ok(product)
    }

    fn verify(&self) -> Result<()> {
        let tc = self.t.carrier();
        let sc = self.s.carrier();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let rand_t = |rng: &mut ChaCha8Rng| tc.element(rng.gen_range(0..tc.size()));
        let rand_s = |rng: &mut ChaCha8Rng| sc.element(rng.gen_range(0..sc.size()));

        let mut ts: Vec<Element> = tc.unit_vectors();
        let mut ss: Vec<Element> = sc.unit_vectors();
        for _ in 0..RANDOM_CHECKS / 8 {
            ts.push(rand_t(&mut rng));
            ss.push(rand_s(&mut rng));
        }
        let b = |x: &Element, y: &Element| Element::new((self.form)(x.coords(), y.coords()));
        let act = |s: &Element, x: &Element| Element::new((self.action)(s.coords(), x.coords()));

        for x in &ts {
            for y in &ts {
                let bxy = b(x, y);
                if !sc.contains(&bxy) {
                    return Err(violation(
                        "bilinear",
                        format!("b({x:?}, {y:?}) is not in S"),
                    ));
                }
                if bxy != b(y, x) {
                    return Err(violation(
                        "bilinear",
                        format!("b is not symmetric at {x:?}, {y:?}"),
                    ));
                }
                for z in &ts {
                    let lhs = b(&self.t.add(x, y), z);
                    let rhs = self.s.add(&b(x, z), &b(y, z));
                    if lhs != rhs {
                        return Err(violation(
                            "bilinear",
                            format!("b is not additive at {x:?}, {y:?}, {z:?}"),
                        ));
                    }
                }
            }
        }
        for s in &ss {
            for x in &ts {
                let ax = act(s, x);
                if !tc.contains(&ax) {
                    return Err(violation(
                        "automorphism",
                        format!("α_{s:?}({x:?}) is not in T"),
                    ));
                }
                for y in &ts {
                    if act(s, &self.t.add(x, y)) != self.t.add(&ax, &act(s, y)) {
                        return Err(violation(
                            "automorphism",
                            format!("α_{s:?} is not additive"),
                        ));
                    }
                    if b(&ax, &act(s, y)) != b(x, y) {
                        return Err(violation(
                            "(3)",
                            format!("α_{s:?} does not preserve b at {x:?}, {y:?}"),
                        ));
                    }
                }
            }
        }
        let zero_s = self.s.zero();
        for x in &ts {
            if act(&zero_s, x) != *x {
                return Err(violation("homomorphism", "α_0 is not the identity".into()));
            }
            for s1 in &ss {
                for s2 in &ss {
                    if act(&self.s.add(s1, s2), x) != act(s1, &act(s2, x)) {
                        return Err(violation(
                            "homomorphism",
                            format!("α fails at {s1:?}, {s2:?}"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn t_len(&self) -> usize {
        self.t.carrier().len()
    }

    pub fn split<'e>(&self, e: &'e Element) -> (&'e [u32], &'e [u32]) {
        e.coords().split_at(self.t_len())
    }

    pub fn pair(&self, t: &[u32], s: &[u32]) -> Element {
        let mut v = t.to_vec();
        v.extend_from_slice(s);
        Element::new(v)
    }
}

/// `T ⋊∘ S` via `b` and `α`, with the defining conditions checked.
pub fn asymmetric_product(
    t: TrivialBrace,
    s: TrivialBrace,
    form: FormFn,
    action: ActionFn,
) -> Result<AsymmetricProduct> {
    AsymmetricProduct::new(t, s, form, action)
}

impl Brace for AsymmetricProduct {
    fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    fn add(&self, a: &Element, b: &Element) -> Element {
        let (t1, s1) = self.split(a);
        let (t2, s2) = self.split(b);
        let sr = self.s.carrier().radices();
        let t = add_coords(self.t.carrier().radices(), t1, t2);
        let s = add_coords(sr, &add_coords(sr, s1, s2), &(self.form)(t1, t2));
        self.pair(&t, &s)
    }

    fn neg(&self, a: &Element) -> Element {
        let (t, s) = self.split(a);
        let sr = self.s.carrier().radices();
        let s = add_coords(sr, &neg_coords(sr, s), &(self.form)(t, t));
        self.pair(&neg_coords(self.t.carrier().radices(), t), &s)
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let (t1, s1) = self.split(a);
        let (t2, s2) = self.split(b);
        let t = add_coords(self.t.carrier().radices(), t1, &(self.action)(s1, t2));
        self.pair(&t, &add_coords(self.s.carrier().radices(), s1, s2))
    }

    fn inv(&self, a: &Element) -> Element {
        let (t, s) = self.split(a);
        let s_inv = neg_coords(self.s.carrier().radices(), s);
        let t = neg_coords(self.t.carrier().radices(), &(self.action)(&s_inv, t));
        self.pair(&t, &s_inv)
    }
}
