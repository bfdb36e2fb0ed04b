//! Exact arithmetic over a closed family of commutative rings.
//!
//! A [`Ring`] is a cheaply clonable handle on a [`RingKind`] descriptor tree; a
//! [`RingElement`] pairs a ring with a canonical [`Value`] payload. Because payloads are
//! kept in normal form, element equality is structural equality.

mod arith;
pub mod decompose;
mod euclid;
mod hom;
mod ideal;
pub mod int;
mod json;
pub mod milnor_square;
mod parse;
mod poly;
mod sample;
mod value;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use euclid::{ext_gcd, is_euclidean};
pub use hom::RingHom;
pub use ideal::{Ideal, Rng};
pub use value::{Mono, Poly, Value};

/// Descriptor of a ring construction.
#[derive(Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    PrimeField(u64),
    Rationals,
    Polynomial {
        base: Ring,
        vars: Vec<String>,
    },
    /// `base[1/multiplier]`; payloads are `Frac(num, k)` meaning `num / multiplier^k`.
    Localization {
        base: Ring,
        multiplier: Value,
    },
    /// `base / (modulus)`, for the integers or a polynomial ring with a unit leading coefficient.
    Quotient {
        base: Ring,
        modulus: Value,
        lc_inv: Option<Value>,
    },
    Product(Ring, Ring),
    /// The pullback `R ⋉ tR_a[t]` of `R -> R_a <- R_a[t]`.
    MilnorSemidirect {
        base: Ring,
        multiplier: Value,
        local: Ring,
        poly: Ring,
    },
}

/// Shared handle on a ring descriptor.
#[derive(Clone)]
pub struct Ring(Arc<RingKind>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Ring {}

impl Hash for Ring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            RingKind::Integers => write!(f, "Z"),
            RingKind::PrimeField(p) => write!(f, "F_{p}"),
            RingKind::Rationals => write!(f, "Q"),
            RingKind::Polynomial { base, vars } => write!(f, "{base}[{}]", vars.join(",")),
            RingKind::Localization { base, multiplier } => {
                write!(f, "{base}[1/{}]", base.fmt_value(multiplier))
            }
            RingKind::Quotient { base, modulus, .. } => {
                write!(f, "{base}/({})", base.fmt_value(modulus))
            }
            RingKind::Product(a, b) => write!(f, "prod({a}, {b})"),
            RingKind::MilnorSemidirect { base, multiplier, .. } => {
                write!(f, "milnor({base}, {})", base.fmt_value(multiplier))
            }
        }
    }
}

static INTEGERS: OnceLock<Ring> = OnceLock::new();
static RATIONALS: OnceLock<Ring> = OnceLock::new();

impl Ring {
    fn new(kind: RingKind) -> Ring {
        Ring(Arc::new(kind))
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    pub fn integers() -> Ring {
        INTEGERS.get_or_init(|| Ring::new(RingKind::Integers)).clone()
    }

    pub fn rationals() -> Ring {
        RATIONALS.get_or_init(|| Ring::new(RingKind::Rationals)).clone()
    }

    pub fn prime_field(p: u64) -> Result<Ring> {
        if p >= 1 << 32 || !int::is_prime_u64(p) {
            return Err(Error::InvalidRing(format!("{p} is not a supported prime")));
        }
        Ok(Ring::new(RingKind::PrimeField(p)))
    }

    /// `Z/(n)`; `n = 1` gives the zero ring.
    pub fn integers_mod(n: u64) -> Result<Ring> {
        Ring::quotient(&Ring::integers(), &Ring::integers().from_i64(n as i64))
    }

    pub fn polynomial(base: &Ring, vars: &[&str]) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("polynomial ring without variables".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for v in vars {
            if !seen.insert(*v) || v.is_empty() {
                return Err(Error::InvalidRing(format!("bad variable list {vars:?}")));
            }
        }
        Ok(Ring::new(RingKind::Polynomial { base: base.clone(), vars: vars.iter().map(|s| s.to_string()).collect() }))
    }

    /// Localization at the powers of a nonzero element of a domain.
    pub fn localization(base: &Ring, multiplier: &RingElement) -> Result<Ring> {
        base.check_owner(multiplier)?;
        if !base.is_domain() {
            return Err(Error::InvalidRing(format!("cannot localize {base}: not a supported domain")));
        }
        if multiplier.is_zero() {
            return Err(Error::InvalidRing("localization at zero".into()));
        }
        Ok(Ring::new(RingKind::Localization { base: base.clone(), multiplier: multiplier.value.clone() }))
    }

    pub fn quotient(base: &Ring, modulus: &RingElement) -> Result<Ring> {
        base.check_owner(modulus)?;
        match base.kind() {
            RingKind::Integers => {
                let n = modulus.value.as_int().unwrap().abs();
                if n.is_zero() || n.to_u64().is_none() {
                    return Err(Error::InvalidRing(format!("unsupported modulus {n}")));
                }
                Ok(Ring::new(RingKind::Quotient { base: base.clone(), modulus: Value::Int(n), lc_inv: None }))
            }
            RingKind::Polynomial { base: coeffs, .. } => {
                let f = modulus.value.as_poly().unwrap();
                let (_, lc) = f.leading().ok_or_else(|| Error::InvalidRing("quotient by zero".into()))?;
                let lc_inv = coeffs.inverse_v(lc).ok_or_else(|| {
                    Error::InvalidRing(format!("modulus {modulus} has a non-unit leading coefficient"))
                })?;
                Ok(Ring::new(RingKind::Quotient {
                    base: base.clone(),
                    modulus: modulus.value.clone(),
                    lc_inv: Some(lc_inv),
                }))
            }
            _ => Err(Error::Unsupported(format!("quotients of {base}"))),
        }
    }

    pub fn product(left: &Ring, right: &Ring) -> Ring {
        Ring::new(RingKind::Product(left.clone(), right.clone()))
    }

    /// `R ⋉ tR_a[t]`, the pullback of `R -> R_a <- R_a[t]` (evaluation at zero on the right).
    pub fn milnor_semidirect(base: &Ring, multiplier: &RingElement) -> Result<Ring> {
        let local = Ring::localization(base, multiplier)?;
        let poly = Ring::polynomial(&local, &["t"])?;
        Ok(Ring::new(RingKind::MilnorSemidirect {
            base: base.clone(),
            multiplier: multiplier.value.clone(),
            local,
            poly,
        }))
    }

    /// Base ring of a polynomial, localization, quotient or semidirect construction.
    pub fn base(&self) -> Option<&Ring> {
        match self.kind() {
            RingKind::Polynomial { base, .. }
            | RingKind::Localization { base, .. }
            | RingKind::Quotient { base, .. }
            | RingKind::MilnorSemidirect { base, .. } => Some(base),
            _ => None,
        }
    }

    /// Variable names when this is a polynomial ring (or a quotient of one).
    pub fn vars(&self) -> Option<&[String]> {
        match self.kind() {
            RingKind::Polynomial { vars, .. } => Some(vars),
            RingKind::Quotient { base, .. } => base.vars(),
            _ => None,
        }
    }

    /// Multiplier of a localization or semidirect construction, as an element of the base.
    pub fn multiplier(&self) -> Option<RingElement> {
        match self.kind() {
            RingKind::Localization { base, multiplier } | RingKind::MilnorSemidirect { base, multiplier, .. } => {
                Some(base.wrap(multiplier.clone()))
            }
            _ => None,
        }
    }

    /// `(R_a, R_a[t])` for a Milnor semidirect ring.
    pub fn semidirect_parts(&self) -> Option<(&Ring, &Ring)> {
        match self.kind() {
            RingKind::MilnorSemidirect { local, poly, .. } => Some((local, poly)),
            _ => None,
        }
    }

    pub fn is_field(&self) -> bool {
        match self.kind() {
            RingKind::PrimeField(_) | RingKind::Rationals => true,
            RingKind::Quotient { base, modulus, .. } => match base.kind() {
                RingKind::Integers => int::is_prime_big(modulus.as_int().unwrap()),
                _ => false,
            },
            _ => false,
        }
    }

    /// Whether the ring is known to be an integral domain.
    pub fn is_domain(&self) -> bool {
        match self.kind() {
            RingKind::Integers | RingKind::PrimeField(_) | RingKind::Rationals => true,
            RingKind::Polynomial { base, .. } | RingKind::Localization { base, .. } => base.is_domain(),
            RingKind::Quotient { .. } => self.is_field(),
            RingKind::Product(..) | RingKind::MilnorSemidirect { .. } => false,
        }
    }

    /// Modulus when payloads are machine residues.
    pub(crate) fn residue_modulus(&self) -> Option<u64> {
        match self.kind() {
            RingKind::PrimeField(p) => Some(*p),
            RingKind::Quotient { base, modulus, .. } if matches!(base.kind(), RingKind::Integers) => {
                modulus.as_int().and_then(|n| n.to_u64())
            }
            _ => None,
        }
    }

    /// Coefficient ring and variable count for polynomial payloads.
    pub(crate) fn poly_parts(&self) -> Option<(&Ring, usize)> {
        match self.kind() {
            RingKind::Polynomial { base, vars } => Some((base, vars.len())),
            RingKind::Quotient { base, .. } => base.poly_parts(),
            _ => None,
        }
    }

    pub fn wrap(&self, value: Value) -> RingElement {
        RingElement { ring: self.clone(), value }
    }

    /// Build an element from a payload, normalizing it first.
    pub fn element(&self, value: Value) -> Result<RingElement> {
        let v = self.normalize_v(value)?;
        Ok(self.wrap(v))
    }

    pub fn zero(&self) -> RingElement {
        self.wrap(self.zero_v())
    }

    pub fn one(&self) -> RingElement {
        self.wrap(self.one_v())
    }

    pub fn from_i64(&self, n: i64) -> RingElement {
        self.wrap(self.from_big_v(&BigInt::from(n)))
    }

    pub fn from_bigint(&self, n: &BigInt) -> RingElement {
        self.wrap(self.from_big_v(n))
    }

    pub(crate) fn check_owner(&self, x: &RingElement) -> Result<()> {
        if &x.ring == self {
            Ok(())
        } else {
            Err(Error::MismatchedRings(x.ring.to_string(), self.to_string()))
        }
    }

    /// The variable `name` of some polynomial ring in this ring's tower, mapped into this ring.
    pub fn var(&self, name: &str) -> Result<RingElement> {
        self.var_v(name).map(|v| self.wrap(v)).ok_or_else(|| Error::Parse(format!("no variable {name} in {self}")))
    }

    fn var_v(&self, name: &str) -> Option<Value> {
        match self.kind() {
            RingKind::Polynomial { base, vars } => match vars.iter().position(|v| v == name) {
                Some(i) => Some(Value::Poly(poly::monomial(base, Mono::var(i, vars.len()), base.one_v()))),
                None => {
                    let c = base.var_v(name)?;
                    Some(Value::Poly(poly::from_const(base, c, vars.len())))
                }
            },
            RingKind::Localization { base, .. } => {
                let v = base.var_v(name)?;
                Some(Value::Frac(Box::new(v), 0))
            }
            RingKind::Quotient { base, .. } => {
                let v = base.var_v(name)?;
                self.normalize_v(v).ok()
            }
            RingKind::MilnorSemidirect { base, poly, .. } => {
                if name == "t" {
                    Some(Value::pair(base.zero_v(), poly.var_v("t")?))
                } else {
                    let v = base.var_v(name)?;
                    Some(Value::pair(v, poly.zero_v()))
                }
            }
            _ => None,
        }
    }

    /// Canonical homomorphism from `x`'s ring into this ring (inclusions, localization maps,
    /// reductions, coefficient maps).
    pub fn coerce(&self, x: &RingElement) -> Result<RingElement> {
        self.coerce_v(&x.ring, &x.value)
            .map(|v| self.wrap(v))
            .ok_or_else(|| Error::NoCoercion(x.ring.to_string(), self.to_string()))
    }

    pub(crate) fn coerce_v(&self, src: &Ring, v: &Value) -> Option<Value> {
        if src == self {
            return Some(v.clone());
        }
        if let RingKind::Integers = src.kind() {
            return Some(self.from_big_v(v.as_int()?));
        }
        // Embed through the target's base first.
        match self.kind() {
            RingKind::Polynomial { base, vars } => {
                if let Some(c) = base.coerce_v(src, v) {
                    return Some(Value::Poly(poly::from_const(base, c, vars.len())));
                }
                if let RingKind::Polynomial { base: sbase, vars: svars } = src.kind() {
                    let idx: Option<Vec<usize>> = svars.iter().map(|s| vars.iter().position(|t| t == s)).collect();
                    let idx = idx?;
                    let p = v.as_poly()?;
                    let mut acc = Poly::zero();
                    for (m, c) in &p.terms {
                        let c = base.coerce_v(sbase, c)?;
                        let mut e = vec![0; vars.len()];
                        for (k, &i) in idx.iter().enumerate() {
                            e[i] = m.0[k];
                        }
                        acc = poly::add(base, &acc, &poly::monomial(base, Mono(e), c));
                    }
                    return Some(Value::Poly(acc));
                }
            }
            RingKind::Localization { base, .. } => {
                if let Some(c) = base.coerce_v(src, v) {
                    return Some(Value::Frac(Box::new(c), 0));
                }
            }
            RingKind::Quotient { base, .. } => {
                if let Some(c) = base.coerce_v(src, v) {
                    return self.normalize_v(c).ok();
                }
            }
            RingKind::MilnorSemidirect { base, poly, .. } => {
                if let Some(c) = base.coerce_v(src, v) {
                    return Some(Value::pair(c, poly.zero_v()));
                }
            }
            _ => {}
        }
        // num / m^k maps wherever num maps and m becomes invertible.
        if let (RingKind::Localization { base: sbase, multiplier }, Value::Frac(num, k)) = (src.kind(), v) {
            let n = self.coerce_v(sbase, num)?;
            if *k == 0 {
                return Some(n);
            }
            let m = self.coerce_v(sbase, multiplier)?;
            let minv = self.inverse_v(&m)?;
            return Some(self.mul_v(&n, &self.pow_v(&minv, *k)));
        }
        None
    }
}

/// An element of a [`Ring`] in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: Ring,
    value: Value,
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.fmt_value(&self.value))
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring)
    }
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn into_value(self) -> Value {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero_v(&self.value)
    }

    pub fn is_one(&self) -> bool {
        self.value == self.ring.one_v()
    }

    fn same_ring(&self, other: &RingElement) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MismatchedRings(self.ring.to_string(), other.ring.to_string()))
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(self.ring.wrap(self.ring.add_v(&self.value, &other.value)))
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(self.ring.wrap(self.ring.sub_v(&self.value, &other.value)))
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(self.ring.wrap(self.ring.mul_v(&self.value, &other.value)))
    }

    /// Exact division; fails when `other` does not divide `self`.
    pub fn try_div(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        self.ring
            .try_div_v(&self.value, &other.value)
            .map(|v| self.ring.wrap(v))
            .ok_or_else(|| Error::NotDivisible(self.to_string(), other.to_string()))
    }

    pub fn inverse(&self) -> Result<RingElement> {
        self.ring.inverse_v(&self.value).map(|v| self.ring.wrap(v)).ok_or_else(|| Error::NotUnit(self.to_string()))
    }

    pub fn is_unit(&self) -> bool {
        self.ring.inverse_v(&self.value).is_some()
    }

    pub fn pow(&self, e: u32) -> RingElement {
        self.ring.wrap(self.ring.pow_v(&self.value, e))
    }

    /// Integer power, allowing negative exponents for units.
    pub fn powi(&self, e: i64) -> Result<RingElement> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow((-e) as u32))
        }
    }

    /// Largest `k <= cap` with `h^k | self`; `cap` for zero.
    pub fn valuation(&self, h: &RingElement, cap: u32) -> u32 {
        let mut x = self.clone();
        for k in 0..cap {
            match x.try_div(h) {
                Ok(q) => x = q,
                Err(_) => return k,
            }
        }
        cap
    }

    /// Integer value when this is an element of the integers.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match (&self.ring.kind(), &self.value) {
            (RingKind::Integers, Value::Int(n)) => Some(n.clone()),
            (_, Value::Residue(r)) => Some(BigInt::from(*r)),
            _ => None,
        }
    }

    /// Components of a product or semidirect element.
    pub fn components(&self) -> Option<(RingElement, RingElement)> {
        match (self.ring.kind(), &self.value) {
            (RingKind::Product(a, b), Value::Pair(x, y)) => Some((a.wrap((**x).clone()), b.wrap((**y).clone()))),
            (RingKind::MilnorSemidirect { base, poly, .. }, Value::Pair(x, y)) => {
                Some((base.wrap((**x).clone()), poly.wrap((**y).clone())))
            }
            _ => None,
        }
    }
}

impl<'a> Add<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl<'a> Sub<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.try_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl<'a> Mul<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.try_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.ring.wrap(self.ring.neg_v(&self.value))
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: RingElement) -> RingElement {
        &self + &rhs
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: RingElement) -> RingElement {
        &self - &rhs
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    fn mul(self, rhs: RingElement) -> RingElement {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests;
