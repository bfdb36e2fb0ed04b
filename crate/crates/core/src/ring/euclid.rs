//! Extended Euclid for the supported Euclidean domains: Z, F_p[x] and Q[x].

use num_rational::BigRational;
use num_traits::One;

use super::value::{Poly, Value};
use super::{int, poly, Ring, RingElement, RingKind};
use crate::error::{Error, Result};

/// Whether `ext_gcd` is available for elements of `ring`.
pub fn is_euclidean(ring: &Ring) -> bool {
    match ring.kind() {
        RingKind::Integers => true,
        RingKind::Polynomial { base, vars } => vars.len() == 1 && base.is_field(),
        _ => false,
    }
}

/// `(g, x, y)` with `x a + y b = g` and `g` a normalized gcd (nonnegative, or monic).
pub fn ext_gcd(a: &RingElement, b: &RingElement) -> Result<(RingElement, RingElement, RingElement)> {
    let ring = a.ring();
    ring.check_owner(b)?;
    match ring.kind() {
        RingKind::Integers => {
            let (g, x, y) = int::ext_gcd_big(a.value().as_int().unwrap(), b.value().as_int().unwrap());
            Ok((ring.from_bigint(&g), ring.from_bigint(&x), ring.from_bigint(&y)))
        }
        RingKind::Polynomial { base, .. } if is_euclidean(ring) => {
            let (g, x, y) = poly_ext_gcd(base, a.value().as_poly().unwrap(), b.value().as_poly().unwrap());
            Ok((ring.wrap(Value::Poly(g)), ring.wrap(Value::Poly(x)), ring.wrap(Value::Poly(y))))
        }
        _ => Err(Error::Unsupported(format!("no effective Bezout identity in {ring}"))),
    }
}

/// Division with remainder for univariate polynomials over a field.
pub(crate) fn poly_div_rem(field: &Ring, a: &Poly, b: &Poly) -> (Poly, Poly) {
    let (lm_b, lc_b) = b.leading().expect("division by zero polynomial");
    let inv = field.inverse_v(lc_b).expect("field coefficient");
    let mut q = Poly::zero();
    let mut r = a.clone();
    while let Some((lm_r, lc_r)) = r.leading() {
        let Some(m) = lm_r.div(lm_b) else { break };
        let c = field.mul_v(lc_r, &inv);
        r = poly::sub(field, &r, &poly::mul_term(field, b, &m, &c));
        q = poly::add(field, &q, &poly::monomial(field, m, c));
    }
    (q, r)
}

fn poly_ext_gcd(field: &Ring, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let one = poly::from_const(field, field.one_v(), 1);
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (one.clone(), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), one);
    while !r1.is_zero() {
        let (q, r) = poly_div_rem(field, &r0, &r1);
        let s = poly::sub(field, &s0, &poly::mul(field, &q, &s1));
        let t = poly::sub(field, &t0, &poly::mul(field, &q, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
        (t0, t1) = (t1, t);
    }
    match r0.leading() {
        Some((_, lc)) => {
            let inv = field.inverse_v(lc).unwrap();
            (poly::scale(field, &r0, &inv), poly::scale(field, &s0, &inv), poly::scale(field, &t0, &inv))
        }
        None => (r0, s0, t0),
    }
}

/// Inverse of `x` modulo the univariate `f` with coefficients in `coeffs`.
///
/// Over a field this is extended Euclid; over the integers the inverse is computed over
/// the rationals and accepted when it is integral.
pub(crate) fn quotient_inverse(coeffs: &Ring, f: &Poly, x: &Poly) -> Option<Poly> {
    if x.is_zero() {
        return None;
    }
    if x.terms.len() == 1 && x.terms[0].0.is_one() {
        if let Some(c) = coeffs.inverse_v(&x.terms[0].1) {
            return Some(poly::from_const(coeffs, c, x.terms[0].0 .0.len()));
        }
    }
    if f.terms.first()?.0 .0.len() != 1 {
        return None;
    }
    if coeffs.is_field() {
        let (g, s, _) = poly_ext_gcd(coeffs, x, f);
        if g.total_degree() != Some(0) {
            return None;
        }
        let s = poly_div_rem(coeffs, &s, f).1;
        return Some(s);
    }
    if let RingKind::Integers = coeffs.kind() {
        let q = Ring::rationals();
        let lift = |p: &Poly| Poly {
            terms: p
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), Value::Rat(BigRational::from_integer(c.as_int().unwrap().clone()))))
                .collect(),
        };
        let s = quotient_inverse(&q, &lift(f), &lift(x))?;
        let mut terms = Vec::with_capacity(s.terms.len());
        for (m, c) in s.terms {
            let Value::Rat(r) = c else { return None };
            if !r.denom().is_one() {
                return None;
            }
            terms.push((m, Value::Int(r.numer().clone())));
        }
        return Some(Poly { terms });
    }
    None
}
