//! Constructive decompositions: Bézout splitting of fractions, `c = a h^k + b`, and the
//! reciprocal polynomial used to localize Laurent rings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::euclid::poly_div_rem;
use super::value::{Mono, Poly, Value};
use super::{ext_gcd, poly, Ring, RingElement, RingKind};
use crate::error::{Error, Result};

/// `(x, y)` with `x p + y q = 1`, with `x` reduced modulo `q` (symmetric residue over the
/// integers, degree below `deg q` for polynomials) so the choice is canonical.
pub fn bezout_pair(p: &RingElement, q: &RingElement) -> Result<(RingElement, RingElement)> {
    let (g, x, _) = ext_gcd(p, q)?;
    if !g.is_one() {
        return Err(Error::NotCoprime(p.to_string(), q.to_string()));
    }
    let ring = p.ring();
    let x = match (ring.kind(), x.value(), q.value()) {
        (RingKind::Integers, Value::Int(x), Value::Int(q)) => {
            let m = q.abs();
            let mut r = x.mod_floor(&m);
            if BigInt::from(2) * &r > m {
                r -= &m;
            }
            ring.from_bigint(&r)
        }
        (RingKind::Polynomial { base, .. }, Value::Poly(x), Value::Poly(q)) => {
            ring.wrap(Value::Poly(poly_div_rem(base, x, q).1))
        }
        _ => x,
    };
    // y = (1 - x p) / q exactly.
    let y = (&ring.one() - &(&x * p)).try_div(q)?;
    Ok((x, y))
}

/// Numerator over `a^s` of an element of `R_a`.
fn numerator_at(c: &RingElement, s: u32) -> Result<(Ring, RingElement, RingElement)> {
    let RingKind::Localization { base, multiplier } = c.ring().kind() else {
        return Err(Error::Precondition(format!("{c} is not in a localization")));
    };
    let Value::Frac(num, k) = c.value() else { unreachable!() };
    if *k > s {
        return Err(Error::ExponentTooSmall { given: s, required: *k });
    }
    let a = base.wrap(multiplier.clone());
    let r = &base.wrap((**num).clone()) * &a.pow(s - k);
    Ok((base.clone(), a, r))
}

/// Split `r / a^s` in `R_a` as `r y (b/a)^s + r x` where `x a^s + y b^s = 1`.
///
/// Returns `(principal, integral)` with `principal = r y b^s / a^s ∈ b^s R_a` and
/// `integral = r x ∈ R`; they sum to the input.
pub fn bezout_decompose(c: &RingElement, b: &RingElement, s: u32) -> Result<(RingElement, RingElement)> {
    let (base, a, r) = numerator_at(c, s)?;
    base.check_owner(b)?;
    if s == 0 {
        return Ok((c.ring().zero(), r));
    }
    let bs = b.pow(s);
    let (x, y) = bezout_pair(&a.pow(s), &bs)?;
    let principal = c.ring().element(Value::Frac(Box::new((&(&r * &y) * &bs).into_value()), s))?;
    Ok((principal, &r * &x))
}

/// A patching datum `B ↪ A` with `h ∈ B` such that `A = A h^k + B` effectively.
#[derive(Clone, Debug, PartialEq)]
pub enum PatchingDatum {
    /// `B = R`, `A = R_m`, `h` coprime to `m`.
    Zariski { b: Ring, a: Ring, h: RingElement },
    /// `B = A`.
    Identity { ring: Ring, h: RingElement },
}

impl PatchingDatum {
    pub fn zariski(base: &Ring, m: &RingElement, h: &RingElement) -> Result<PatchingDatum> {
        base.check_owner(h)?;
        bezout_pair(m, h)?;
        Ok(PatchingDatum::Zariski { b: base.clone(), a: Ring::localization(base, m)?, h: h.clone() })
    }

    pub fn identity(ring: &Ring, h: &RingElement) -> Result<PatchingDatum> {
        ring.check_owner(h)?;
        Ok(PatchingDatum::Identity { ring: ring.clone(), h: h.clone() })
    }

    pub fn b_ring(&self) -> &Ring {
        match self {
            PatchingDatum::Zariski { b, .. } => b,
            PatchingDatum::Identity { ring, .. } => ring,
        }
    }

    pub fn a_ring(&self) -> &Ring {
        match self {
            PatchingDatum::Zariski { a, .. } => a,
            PatchingDatum::Identity { ring, .. } => ring,
        }
    }

    /// `h` as an element of `B`.
    pub fn h(&self) -> &RingElement {
        match self {
            PatchingDatum::Zariski { h, .. } | PatchingDatum::Identity { h, .. } => h,
        }
    }

    /// `ι : B -> A`.
    pub fn iota(&self, x: &RingElement) -> Result<RingElement> {
        self.b_ring().check_owner(x)?;
        self.a_ring().coerce(x)
    }

    /// Preimage under `ι` when `x ∈ A` comes from `B`.
    pub fn descend(&self, x: &RingElement) -> Option<RingElement> {
        self.a_ring().check_owner(x).ok()?;
        match (self, x.value()) {
            (PatchingDatum::Identity { .. }, _) => Some(x.clone()),
            (PatchingDatum::Zariski { b, .. }, Value::Frac(n, 0)) => Some(b.wrap((**n).clone())),
            _ => None,
        }
    }

    /// `(a, b)` with `c = a h^k + ι(b)`.
    pub fn decompose(&self, c: &RingElement, k: u32) -> Result<(RingElement, RingElement)> {
        self.a_ring().check_owner(c)?;
        match self {
            PatchingDatum::Identity { ring, .. } => Ok((ring.zero(), c.clone())),
            PatchingDatum::Zariski { a: ra, h, .. } => {
                let Value::Frac(_, s) = c.value() else { unreachable!() };
                let (_, m, r) = numerator_at(c, *s)?;
                if *s == 0 {
                    return Ok((ra.zero(), r));
                }
                let (x, y) = bezout_pair(&m.pow(*s), &h.pow(k))?;
                let a = ra.element(Value::Frac(Box::new((&r * &y).into_value()), *s))?;
                Ok((a, &r * &x))
            }
        }
    }
}

/// `(a, b)` with `c = a h^k + b` for the given datum.
pub fn decompose_modulo_power(datum: &PatchingDatum, c: &RingElement, k: u32) -> Result<(RingElement, RingElement)> {
    datum.decompose(c, k)
}

/// For monic `f = t^n + a_{n-1} t^{n-1} + ... + a_0`, the polynomial
/// `g = 1 + a_{n-1} u + ... + a_0 u^n` in `u = t^{-1}`, so `f = t^n g`.
///
/// The result lives in `R[<t>_inv]`.
pub fn reciprocal_localization_witness(f: &RingElement) -> Result<RingElement> {
    let RingKind::Polynomial { base, vars } = f.ring().kind() else {
        return Err(Error::Precondition(format!("{f} is not a polynomial")));
    };
    if vars.len() != 1 {
        return Err(Error::Precondition("expected a univariate polynomial".into()));
    }
    let p = f.value().as_poly().unwrap();
    let monic = p.leading().map(|(_, c)| *c == base.one_v()).unwrap_or(false);
    if !monic {
        return Err(Error::Precondition(format!("{f} is not monic")));
    }
    let mut coeffs = poly::univariate_coeffs(base, p);
    coeffs.reverse();
    let inv_name = format!("{}_inv", vars[0]);
    let ring = Ring::polynomial(base, &[inv_name.as_str()])?;
    Ok(ring.wrap(Value::Poly(poly::from_univariate(base, &coeffs))))
}

/// Check `t^n g(t^{-1}) = f` with `n = deg f`, by multiplying in the Laurent sense.
pub fn reciprocal_reconstructs(f: &RingElement, g: &RingElement) -> bool {
    let (Some(pf), Some(pg)) = (f.value().as_poly(), g.value().as_poly()) else { return false };
    let Some(n) = pf.total_degree() else { return false };
    let Some(base) = f.ring().base() else { return false };
    let mut acc = Poly::zero();
    for (m, c) in &pg.terms {
        let Some(e) = n.checked_sub(m.0[0]) else { return false };
        acc = poly::add(base, &acc, &poly::monomial(base, Mono(vec![e]), c.clone()));
    }
    &acc == pf
}
