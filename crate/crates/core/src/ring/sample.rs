//! Random elements for property tests and verification sweeps.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng as _;
use rand::RngCore;

use super::value::{Mono, Poly, Value};
use super::{poly, Ring, RingElement, RingKind};

impl Ring {
    /// A random element with integer coefficients bounded by `size` and small degrees.
    pub fn random_element(&self, rng: &mut dyn RngCore, size: i64) -> RingElement {
        let v = self.random_v(rng, size.max(1));
        self.element(v).expect("sampled payloads are well formed")
    }

    /// A random unit; falls back to `±1` when a few draws find none.
    pub fn random_unit(&self, rng: &mut dyn RngCore, size: i64) -> RingElement {
        for _ in 0..32 {
            let x = self.random_element(rng, size);
            if !x.is_zero() && x.is_unit() {
                return x;
            }
        }
        if rng.gen_bool(0.5) {
            self.one()
        } else {
            -self.one()
        }
    }

    fn random_v(&self, rng: &mut dyn RngCore, size: i64) -> Value {
        match self.kind() {
            RingKind::Integers => Value::Int(BigInt::from(rng.gen_range(-size..=size))),
            RingKind::Rationals => {
                let n = rng.gen_range(-size..=size);
                let d = rng.gen_range(1..=size);
                Value::Rat(BigRational::new(n.into(), d.into()))
            }
            RingKind::PrimeField(_) | RingKind::Quotient { .. } if self.residue_modulus().is_some() => {
                Value::Residue(rng.gen_range(0..self.residue_modulus().unwrap()))
            }
            RingKind::Polynomial { base, vars } => {
                let mut acc = Poly::zero();
                let nterms = rng.gen_range(0..=3);
                for _ in 0..nterms {
                    let e: Vec<u32> = (0..vars.len()).map(|_| rng.gen_range(0..=2)).collect();
                    let c = base.random_v(rng, size);
                    acc = poly::add(base, &acc, &poly::monomial(base, Mono(e), c));
                }
                Value::Poly(acc)
            }
            RingKind::Quotient { base, .. } => {
                let v = base.random_v(rng, size);
                self.normalize_v(v).unwrap()
            }
            RingKind::Localization { base, .. } => {
                Value::Frac(Box::new(base.random_v(rng, size)), rng.gen_range(0..=2))
            }
            RingKind::Product(a, b) => Value::pair(a.random_v(rng, size), b.random_v(rng, size)),
            RingKind::MilnorSemidirect { base, local, .. } => {
                let r = base.random_v(rng, size);
                let mut f = Poly::zero();
                for d in 1..=rng.gen_range(0..=2u32) {
                    let c = local.random_v(rng, size);
                    f = poly::add(local, &f, &poly::monomial(local, Mono(vec![d]), c));
                }
                Value::pair(r, Value::Poly(f))
            }
            _ => unreachable!(),
        }
    }
}
