//! Sparse multivariate polynomial arithmetic over an arbitrary coefficient ring.

use std::collections::BTreeMap;

use super::value::{Mono, Poly, Value};
use super::Ring;

pub fn from_const(base: &Ring, c: Value, nvars: usize) -> Poly {
    if base.is_zero_v(&c) {
        Poly::zero()
    } else {
        Poly { terms: vec![(Mono::one(nvars), c)] }
    }
}

pub fn monomial(base: &Ring, m: Mono, c: Value) -> Poly {
    if base.is_zero_v(&c) {
        Poly::zero()
    } else {
        Poly { terms: vec![(m, c)] }
    }
}

fn from_map(base: &Ring, map: BTreeMap<Mono, Value>) -> Poly {
    let terms = map.into_iter().rev().filter(|(_, c)| !base.is_zero_v(c)).collect();
    Poly { terms }
}

pub fn add(base: &Ring, a: &Poly, b: &Poly) -> Poly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let (ma, ca) = &a.terms[i];
        let (mb, cb) = &b.terms[j];
        match ma.cmp(mb) {
            std::cmp::Ordering::Greater => {
                out.push((ma.clone(), ca.clone()));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((mb.clone(), cb.clone()));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = base.add_v(ca, cb);
                if !base.is_zero_v(&c) {
                    out.push((ma.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(b.terms[j..].iter().cloned());
    Poly { terms: out }
}

pub fn neg(base: &Ring, a: &Poly) -> Poly {
    Poly { terms: a.terms.iter().map(|(m, c)| (m.clone(), base.neg_v(c))).collect() }
}

pub fn sub(base: &Ring, a: &Poly, b: &Poly) -> Poly {
    add(base, a, &neg(base, b))
}

pub fn scale(base: &Ring, a: &Poly, c: &Value) -> Poly {
    Poly {
        terms: a
            .terms
            .iter()
            .filter_map(|(m, x)| {
                let y = base.mul_v(x, c);
                (!base.is_zero_v(&y)).then(|| (m.clone(), y))
            })
            .collect(),
    }
}

pub fn mul_term(base: &Ring, a: &Poly, m: &Mono, c: &Value) -> Poly {
    // Multiplying by a monomial preserves the order, so no re-sorting is needed.
    Poly {
        terms: a
            .terms
            .iter()
            .filter_map(|(k, x)| {
                let y = base.mul_v(x, c);
                (!base.is_zero_v(&y)).then(|| (k.mul(m), y))
            })
            .collect(),
    }
}

pub fn mul(base: &Ring, a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    if a.terms.len() == 1 {
        let (m, c) = &a.terms[0];
        return mul_term(base, b, m, c);
    }
    if b.terms.len() == 1 {
        let (m, c) = &b.terms[0];
        return mul_term(base, a, m, c);
    }
    let mut acc: BTreeMap<Mono, Value> = BTreeMap::new();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let m = ma.mul(mb);
            let c = base.mul_v(ca, cb);
            match acc.get_mut(&m) {
                Some(slot) => *slot = base.add_v(slot, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
    }
    from_map(base, acc)
}

/// Exact division `a / b`; `None` when `b` does not divide `a`.
///
/// Works over any domain: the leading term of the quotient is forced at every step.
pub fn try_div(base: &Ring, a: &Poly, b: &Poly) -> Option<Poly> {
    let (lm_b, lc_b) = b.leading()?;
    let mut rem = a.clone();
    let mut quo = Poly::zero();
    while let Some((lm_r, lc_r)) = rem.leading() {
        let m = lm_r.div(lm_b)?;
        let c = base.try_div_v(lc_r, lc_b)?;
        let step = mul_term(base, b, &m, &c);
        rem = sub(base, &rem, &step);
        quo = add(base, &quo, &monomial(base, m, c));
    }
    Some(quo)
}

/// Remainder of `a` modulo the single polynomial `f`, whose leading coefficient must be a unit.
///
/// A single polynomial is a Groebner basis of the ideal it generates, so the result is
/// canonical: no term of the remainder is divisible by the leading monomial of `f`.
pub fn reduce(base: &Ring, a: &Poly, f: &Poly, lc_inv: &Value) -> Poly {
    let (lm_f, _) = f.leading().expect("nonzero modulus");
    let mut rem = a.clone();
    loop {
        let hit = rem.terms.iter().find_map(|(m, c)| m.div(lm_f).map(|q| (q, base.mul_v(c, lc_inv))));
        match hit {
            Some((q, c)) => {
                let step = mul_term(base, f, &q, &c);
                rem = sub(base, &rem, &step);
            }
            None => return rem,
        }
    }
}

pub fn pow(base: &Ring, a: &Poly, mut e: u32, nvars: usize) -> Poly {
    let mut acc = from_const(base, base.one_v(), nvars);
    let mut sq = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(base, &acc, &sq);
        }
        e >>= 1;
        if e > 0 {
            sq = mul(base, &sq, &sq);
        }
    }
    acc
}

/// Univariate view: coefficient of `t^i` for a one-variable polynomial.
pub fn univariate_coeffs(base: &Ring, a: &Poly) -> Vec<Value> {
    let deg = a.total_degree().unwrap_or(0) as usize;
    let mut out = vec![base.zero_v(); if a.is_zero() { 0 } else { deg + 1 }];
    for (m, c) in &a.terms {
        out[m.0[0] as usize] = c.clone();
    }
    out
}

pub fn from_univariate(base: &Ring, coeffs: &[Value]) -> Poly {
    let terms = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !base.is_zero_v(c))
        .map(|(i, c)| (Mono(vec![i as u32]), c.clone()))
        .collect();
    Poly { terms }
}
