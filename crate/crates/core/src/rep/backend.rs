//! Scalar backends for matrix evaluation. Residue rings and small truncated polynomial
//! rings get machine-word arithmetic; everything else goes through the generic payloads.

use std::cell::Cell;
use std::fmt::Debug;

use num_bigint::BigInt;
use rand::{Rng as _, RngCore};

use crate::ring::{int, Mono, Poly, Ring, RingElement, RingKind, Value};

#[allow(clippy::wrong_self_convention)]
pub(crate) trait Backend {
    type E: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::E;
    fn is_zero(&self, x: &Self::E) -> bool;
    fn add(&self, x: &Self::E, y: &Self::E) -> Self::E;
    fn mul(&self, x: &Self::E, y: &Self::E) -> Self::E;
    fn from_i64(&self, n: i64) -> Self::E;
    /// `c·x` for a small integer `c`.
    fn scale(&self, x: &Self::E, c: i64) -> Self::E {
        match c {
            1 => x.clone(),
            0 => self.zero(),
            _ => self.mul(x, &self.from_i64(c)),
        }
    }
    fn lift(&self, x: &RingElement) -> Self::E;
    fn lower(&self, x: &Self::E) -> RingElement;
    fn random(&self, rng: &mut dyn RngCore) -> Self::E;
    /// Whether an intermediate result left the exactly representable range.
    fn overflowed(&self) -> bool {
        false
    }
}

pub(crate) struct ModBackend {
    ring: Ring,
    n: u64,
    /// Multiplication table for small moduli.
    table: Vec<u8>,
}

impl ModBackend {
    fn new(ring: &Ring, n: u64) -> ModBackend {
        let table = if n <= 256 { (0..n * n).map(|k| ((k / n) * (k % n) % n) as u8).collect() } else { Vec::new() };
        ModBackend { ring: ring.clone(), n, table }
    }
}

impl Backend for ModBackend {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn add(&self, x: &u64, y: &u64) -> u64 {
        let s = x + y;
        if s >= self.n {
            s - self.n
        } else {
            s
        }
    }
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        if !self.table.is_empty() {
            self.table[(x * self.n + y) as usize] as u64
        } else if self.n <= 1 << 32 {
            x * y % self.n
        } else {
            int::mul_mod(*x, *y, self.n)
        }
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.n as i64) as u64
    }
    fn scale(&self, x: &u64, c: i64) -> u64 {
        match c {
            1 => *x,
            -1 if *x == 0 => 0,
            -1 => self.n - x,
            _ => self.mul(x, &self.from_i64(c)),
        }
    }
    fn lift(&self, x: &RingElement) -> u64 {
        match x.value() {
            Value::Residue(r) => *r,
            other => panic!("unexpected payload {other:?}"),
        }
    }
    fn lower(&self, x: &u64) -> RingElement {
        self.ring.wrap(Value::Residue(*x))
    }
    fn random(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.n)
    }
}

const MAXD: usize = 8;

/// `C[t]/(f)` with `C` the integers or a residue ring and `f` monic of degree at most 8.
pub(crate) struct QuotBackend {
    ring: Ring,
    coeff_ring: Ring,
    /// Coefficient modulus, `None` for the integers.
    n: Option<i64>,
    /// `f` without its leading coefficient, low degree first.
    f: Vec<i64>,
    d: usize,
    overflow: Cell<bool>,
}

impl QuotBackend {
    fn norm(&self, x: i64) -> i64 {
        match self.n {
            Some(n) => x.rem_euclid(n),
            None => x,
        }
    }

    fn checked(&self, x: Option<i64>) -> i64 {
        match x {
            Some(v) if v.unsigned_abs() < (1u64 << 62) => v,
            _ => {
                self.overflow.set(true);
                0
            }
        }
    }
}

impl Backend for QuotBackend {
    type E = [i64; MAXD];
    fn zero(&self) -> Self::E {
        [0; MAXD]
    }
    fn is_zero(&self, x: &Self::E) -> bool {
        x.iter().all(|c| *c == 0)
    }
    fn add(&self, x: &Self::E, y: &Self::E) -> Self::E {
        let mut out = [0; MAXD];
        for i in 0..self.d {
            out[i] = self.norm(self.checked(x[i].checked_add(y[i])));
        }
        out
    }
    fn mul(&self, x: &Self::E, y: &Self::E) -> Self::E {
        let d = self.d;
        let mut prod = [0i64; 2 * MAXD];
        for i in 0..d {
            if x[i] == 0 {
                continue;
            }
            for j in 0..d {
                if y[j] == 0 {
                    continue;
                }
                let p = self.checked(x[i].checked_mul(y[j]));
                prod[i + j] = self.norm(self.checked(prod[i + j].checked_add(p)));
            }
        }
        // t^d = -(f_0 + ... + f_{d-1} t^{d-1})
        for k in (d..2 * d).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..d {
                if self.f[i] == 0 {
                    continue;
                }
                let p = self.checked(c.checked_mul(self.f[i]));
                prod[k - d + i] = self.norm(self.checked(prod[k - d + i].checked_sub(p)));
            }
        }
        let mut out = [0; MAXD];
        out[..d].copy_from_slice(&prod[..d]);
        out
    }
    fn from_i64(&self, v: i64) -> Self::E {
        let mut out = [0; MAXD];
        out[0] = self.norm(v);
        out
    }
    fn scale(&self, x: &Self::E, c: i64) -> Self::E {
        let mut out = [0; MAXD];
        for i in 0..self.d {
            out[i] = self.norm(self.checked(x[i].checked_mul(c)));
        }
        out
    }
    fn lift(&self, x: &RingElement) -> Self::E {
        let mut out = [0; MAXD];
        for (m, c) in &x.value().as_poly().expect("polynomial payload").terms {
            out[m.0[0] as usize] = match c {
                Value::Int(n) => match i64::try_from(n) {
                    Ok(v) if v.unsigned_abs() < 1 << 62 => v,
                    _ => {
                        self.overflow.set(true);
                        0
                    }
                },
                Value::Residue(r) => *r as i64,
                other => panic!("unexpected coefficient {other:?}"),
            };
        }
        out
    }
    fn lower(&self, x: &Self::E) -> RingElement {
        let terms = (0..self.d)
            .rev()
            .filter(|&i| x[i] != 0)
            .map(|i| {
                let c = self.coeff_ring.from_bigint(&BigInt::from(x[i])).into_value();
                (Mono(vec![i as u32]), c)
            })
            .collect();
        self.ring.wrap(Value::Poly(Poly { terms }))
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::E {
        let mut out = [0; MAXD];
        for c in out.iter_mut().take(self.d) {
            *c = match self.n {
                Some(n) => rng.gen_range(0..n),
                None => rng.gen_range(-5..=5),
            };
        }
        out
    }
    fn overflowed(&self) -> bool {
        self.overflow.get()
    }
}

pub(crate) struct GenericBackend {
    ring: Ring,
}

impl Backend for GenericBackend {
    type E = Value;
    fn zero(&self) -> Value {
        self.ring.zero().into_value()
    }
    fn is_zero(&self, x: &Value) -> bool {
        self.ring.wrap(x.clone()).is_zero()
    }
    fn add(&self, x: &Value, y: &Value) -> Value {
        (&self.ring.wrap(x.clone()) + &self.ring.wrap(y.clone())).into_value()
    }
    fn mul(&self, x: &Value, y: &Value) -> Value {
        (&self.ring.wrap(x.clone()) * &self.ring.wrap(y.clone())).into_value()
    }
    fn from_i64(&self, n: i64) -> Value {
        self.ring.from_i64(n).into_value()
    }
    fn lift(&self, x: &RingElement) -> Value {
        x.value().clone()
    }
    fn lower(&self, x: &Value) -> RingElement {
        self.ring.wrap(x.clone())
    }
    fn random(&self, rng: &mut dyn RngCore) -> Value {
        self.ring.random_element(rng, 5).into_value()
    }
}

pub(crate) enum AnyBackend {
    Mod(ModBackend),
    Quot(QuotBackend),
    Generic(GenericBackend),
}

macro_rules! dispatch {
    ($any:expr, $b:ident => $body:expr) => {
        match $any {
            $crate::rep::backend::AnyBackend::Mod($b) => $body,
            $crate::rep::backend::AnyBackend::Quot($b) => $body,
            $crate::rep::backend::AnyBackend::Generic($b) => $body,
        }
    };
}
pub(crate) use dispatch;

impl AnyBackend {
    pub(crate) fn for_ring(ring: &Ring) -> AnyBackend {
        if let Some(n) = ring.residue_modulus() {
            return AnyBackend::Mod(ModBackend::new(ring, n));
        }
        if let Some(b) = quot_backend(ring) {
            return AnyBackend::Quot(b);
        }
        AnyBackend::generic(ring)
    }

    pub(crate) fn generic(ring: &Ring) -> AnyBackend {
        AnyBackend::Generic(GenericBackend { ring: ring.clone() })
    }
}

fn quot_backend(ring: &Ring) -> Option<QuotBackend> {
    let RingKind::Quotient { base, modulus, .. } = ring.kind() else { return None };
    let RingKind::Polynomial { base: coeffs, vars } = base.kind() else { return None };
    if vars.len() != 1 {
        return None;
    }
    let n = match coeffs.kind() {
        RingKind::Integers => None,
        _ => Some(coeffs.residue_modulus().filter(|n| *n < 1 << 31)? as i64),
    };
    let f = modulus.as_poly()?;
    let (lm, lc) = f.leading()?;
    let d = lm.0[0] as usize;
    if d == 0 || d > MAXD || *lc != coeffs.one().into_value() {
        return None;
    }
    let mut low = vec![0i64; d];
    for (m, c) in &f.terms[1..] {
        low[m.0[0] as usize] = match c {
            Value::Int(v) => i64::try_from(v).ok().filter(|v| v.unsigned_abs() < 1 << 31)?,
            Value::Residue(r) => *r as i64,
            _ => return None,
        };
    }
    Some(QuotBackend { ring: ring.clone(), coeff_ring: coeffs.clone(), n, f: low, d, overflow: Cell::new(false) })
}
