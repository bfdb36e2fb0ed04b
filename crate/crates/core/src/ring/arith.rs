//! Payload-level arithmetic, dispatched on the ring descriptor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::value::{Mono, Poly, Value};
use super::{euclid, int, poly, Ring, RingKind};
use crate::error::{Error, Result};

impl Ring {
    pub(crate) fn zero_v(&self) -> Value {
        match self.kind() {
            RingKind::Integers => Value::Int(BigInt::zero()),
            RingKind::PrimeField(_) => Value::Residue(0),
            RingKind::Rationals => Value::Rat(BigRational::zero()),
            RingKind::Polynomial { .. } => Value::Poly(Poly::zero()),
            RingKind::Localization { base, .. } => Value::Frac(Box::new(base.zero_v()), 0),
            RingKind::Quotient { base, .. } => match base.kind() {
                RingKind::Integers => Value::Residue(0),
                _ => Value::Poly(Poly::zero()),
            },
            RingKind::Product(a, b) => Value::pair(a.zero_v(), b.zero_v()),
            RingKind::MilnorSemidirect { base, poly, .. } => Value::pair(base.zero_v(), poly.zero_v()),
        }
    }

    pub(crate) fn one_v(&self) -> Value {
        self.from_big_v(&BigInt::one())
    }

    #[allow(clippy::wrong_self_convention)]
    pub(crate) fn from_big_v(&self, n: &BigInt) -> Value {
        match self.kind() {
            RingKind::Integers => Value::Int(n.clone()),
            RingKind::Rationals => Value::Rat(BigRational::from_integer(n.clone())),
            RingKind::Polynomial { base, vars } => Value::Poly(poly::from_const(base, base.from_big_v(n), vars.len())),
            RingKind::Localization { base, .. } => Value::Frac(Box::new(base.from_big_v(n)), 0),
            RingKind::Quotient { base, .. } if self.residue_modulus().is_none() => {
                let p = base.from_big_v(n);
                self.reduce_poly_v(p)
            }
            RingKind::Product(a, b) => Value::pair(a.from_big_v(n), b.from_big_v(n)),
            RingKind::MilnorSemidirect { base, poly, .. } => Value::pair(base.from_big_v(n), poly.zero_v()),
            _ => Value::Residue(int::reduce_big(n, self.residue_modulus().unwrap())),
        }
    }

    pub(crate) fn is_zero_v(&self, v: &Value) -> bool {
        match (self.kind(), v) {
            (_, Value::Int(n)) => n.is_zero(),
            (_, Value::Residue(r)) => *r == 0,
            (_, Value::Rat(q)) => q.is_zero(),
            (_, Value::Poly(p)) => p.is_zero(),
            (RingKind::Localization { base, .. }, Value::Frac(n, _)) => base.is_zero_v(n),
            (RingKind::Product(a, b), Value::Pair(x, y)) => a.is_zero_v(x) && b.is_zero_v(y),
            (RingKind::MilnorSemidirect { base, poly, .. }, Value::Pair(x, y)) => {
                base.is_zero_v(x) && poly.is_zero_v(y)
            }
            _ => false,
        }
    }

    pub(crate) fn add_v(&self, a: &Value, b: &Value) -> Value {
        match (self.kind(), a, b) {
            (_, Value::Int(x), Value::Int(y)) => Value::Int(x + y),
            (_, Value::Rat(x), Value::Rat(y)) => Value::Rat(x + y),
            (_, Value::Residue(x), Value::Residue(y)) => {
                let n = self.residue_modulus().unwrap();
                Value::Residue(((*x as u128 + *y as u128) % n as u128) as u64)
            }
            (RingKind::Polynomial { base, .. }, Value::Poly(x), Value::Poly(y)) => Value::Poly(poly::add(base, x, y)),
            (RingKind::Quotient { .. }, Value::Poly(x), Value::Poly(y)) => {
                // Sums of reduced polynomials are reduced.
                let (coeffs, _) = self.poly_parts().unwrap();
                Value::Poly(poly::add(coeffs, x, y))
            }
            (RingKind::Localization { base, multiplier }, Value::Frac(x, i), Value::Frac(y, j)) => {
                let (x, y, k) = if i <= j {
                    (base.mul_v(x, &base.pow_v(multiplier, j - i)), (**y).clone(), *j)
                } else {
                    ((**x).clone(), base.mul_v(y, &base.pow_v(multiplier, i - j)), *i)
                };
                self.cancel_v(base.add_v(&x, &y), k)
            }
            (RingKind::Product(ra, rb), Value::Pair(x1, y1), Value::Pair(x2, y2)) => {
                Value::pair(ra.add_v(x1, x2), rb.add_v(y1, y2))
            }
            (RingKind::MilnorSemidirect { base, poly, .. }, Value::Pair(x1, y1), Value::Pair(x2, y2)) => {
                Value::pair(base.add_v(x1, x2), poly.add_v(y1, y2))
            }
            _ => panic!("malformed payloads for {self}"),
        }
    }

    pub(crate) fn neg_v(&self, a: &Value) -> Value {
        match (self.kind(), a) {
            (_, Value::Int(x)) => Value::Int(-x),
            (_, Value::Rat(x)) => Value::Rat(-x),
            (_, Value::Residue(x)) => {
                let n = self.residue_modulus().unwrap();
                Value::Residue(if *x == 0 { 0 } else { n - x })
            }
            (_, Value::Poly(p)) => {
                let (coeffs, _) = self.poly_parts().unwrap();
                Value::Poly(poly::neg(coeffs, p))
            }
            (RingKind::Localization { base, .. }, Value::Frac(x, k)) => Value::Frac(Box::new(base.neg_v(x)), *k),
            (RingKind::Product(ra, rb), Value::Pair(x, y)) => Value::pair(ra.neg_v(x), rb.neg_v(y)),
            (RingKind::MilnorSemidirect { base, poly, .. }, Value::Pair(x, y)) => {
                Value::pair(base.neg_v(x), poly.neg_v(y))
            }
            _ => panic!("malformed payload for {self}"),
        }
    }

    pub(crate) fn sub_v(&self, a: &Value, b: &Value) -> Value {
        self.add_v(a, &self.neg_v(b))
    }

    pub(crate) fn mul_v(&self, a: &Value, b: &Value) -> Value {
        match (self.kind(), a, b) {
            (_, Value::Int(x), Value::Int(y)) => Value::Int(x * y),
            (_, Value::Rat(x), Value::Rat(y)) => Value::Rat(x * y),
            (_, Value::Residue(x), Value::Residue(y)) => {
                Value::Residue(int::mul_mod(*x, *y, self.residue_modulus().unwrap()))
            }
            (RingKind::Polynomial { base, .. }, Value::Poly(x), Value::Poly(y)) => Value::Poly(poly::mul(base, x, y)),
            (RingKind::Quotient { .. }, Value::Poly(x), Value::Poly(y)) => {
                let (coeffs, _) = self.poly_parts().unwrap();
                self.reduce_poly_v(Value::Poly(poly::mul(coeffs, x, y)))
            }
            (RingKind::Localization { base, .. }, Value::Frac(x, i), Value::Frac(y, j)) => {
                self.cancel_v(base.mul_v(x, y), i + j)
            }
            (RingKind::Product(ra, rb), Value::Pair(x1, y1), Value::Pair(x2, y2)) => {
                Value::pair(ra.mul_v(x1, x2), rb.mul_v(y1, y2))
            }
            (RingKind::MilnorSemidirect { base, poly, .. }, Value::Pair(r1, f1), Value::Pair(r2, f2)) => {
                // (r, f)(r', f') = (rr', λ(r)f' + λ(r')f + ff')
                let l1 = poly.coerce_v(base, r1).unwrap();
                let l2 = poly.coerce_v(base, r2).unwrap();
                let f = poly.add_v(&poly.add_v(&poly.mul_v(&l1, f2), &poly.mul_v(&l2, f1)), &poly.mul_v(f1, f2));
                Value::pair(base.mul_v(r1, r2), f)
            }
            _ => panic!("malformed payloads for {self}"),
        }
    }

    pub(crate) fn pow_v(&self, a: &Value, mut e: u32) -> Value {
        if let (RingKind::Polynomial { base, vars }, Value::Poly(p)) = (self.kind(), a) {
            return Value::Poly(poly::pow(base, p, e, vars.len()));
        }
        let mut acc = self.one_v();
        let mut sq = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_v(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul_v(&sq, &sq);
            }
        }
        acc
    }

    /// Some `z` with `z * b = a`, if one exists.
    pub(crate) fn try_div_v(&self, a: &Value, b: &Value) -> Option<Value> {
        if self.is_zero_v(b) {
            return if self.is_zero_v(a) && self.is_zero_v(&self.one_v()) { Some(a.clone()) } else { None };
        }
        match (self.kind(), a, b) {
            (_, Value::Int(x), Value::Int(y)) => {
                let (q, r) = x.div_rem(y);
                r.is_zero().then_some(Value::Int(q))
            }
            (_, Value::Rat(x), Value::Rat(y)) => Some(Value::Rat(x / y)),
            (_, Value::Residue(x), Value::Residue(y)) => {
                let n = self.residue_modulus().unwrap();
                if let Some(inv) = int::mod_inverse(*y, n) {
                    return Some(Value::Residue(int::mul_mod(*x, inv, n)));
                }
                // Solve y z = x (mod n) through the gcd.
                let g = y.gcd(&n);
                if x % g != 0 {
                    return None;
                }
                let m = n / g;
                let inv = int::mod_inverse((y / g) % m, m)?;
                Some(Value::Residue(int::mul_mod((x / g) % m, inv, m)))
            }
            (RingKind::Polynomial { base, .. }, Value::Poly(x), Value::Poly(y)) => {
                poly::try_div(base, x, y).map(Value::Poly)
            }
            (RingKind::Quotient { .. }, Value::Poly(_), Value::Poly(_)) => {
                if let Some(inv) = self.inverse_v(b) {
                    return Some(self.mul_v(a, &inv));
                }
                let (coeffs, _) = self.poly_parts().unwrap();
                if !coeffs.is_domain() {
                    return None;
                }
                let (x, y) = (a.as_poly().unwrap(), b.as_poly().unwrap());
                poly::try_div(coeffs, x, y).map(Value::Poly)
            }
            (RingKind::Localization { base, multiplier }, Value::Frac(x, i), Value::Frac(y, j)) => {
                // a/b = x m^j / (y m^i); allow extra powers of m in the denominator.
                let mut q = base.mul_v(x, &base.pow_v(multiplier, *j));
                let bound = match y.as_ref() {
                    Value::Int(n) => n.bits() as u32 + 1,
                    _ => 24,
                };
                for t in 0..=bound {
                    if let Some(z) = base.try_div_v(&q, y) {
                        return Some(self.cancel_v(z, i + t));
                    }
                    q = base.mul_v(&q, multiplier);
                }
                None
            }
            (RingKind::Product(ra, rb), Value::Pair(x1, y1), Value::Pair(x2, y2)) => {
                Some(Value::pair(ra.try_div_v(x1, x2)?, rb.try_div_v(y1, y2)?))
            }
            (RingKind::MilnorSemidirect { base, local, poly, .. }, Value::Pair(r1, _), Value::Pair(r2, _)) => {
                // Divide in both legs of the pullback and check the legs still agree.
                let r = base.try_div_v(r1, r2)?;
                let l = poly.try_div_v(&self.l_projection_v(a), &self.l_projection_v(b))?;
                let c0 = poly::from_const(
                    local,
                    l.as_poly().unwrap().coeff(&Mono::one(1)).cloned().unwrap_or_else(|| local.zero_v()),
                    1,
                );
                if Value::Poly(c0.clone()) != poly.coerce_v(base, &r)? {
                    return None;
                }
                Some(Value::pair(r, poly.sub_v(&l, &Value::Poly(c0))))
            }
            _ => None,
        }
    }

    pub(crate) fn inverse_v(&self, a: &Value) -> Option<Value> {
        match (self.kind(), a) {
            (RingKind::Quotient { base, modulus, .. }, Value::Poly(x)) => {
                let RingKind::Polynomial { base: coeffs, .. } = base.kind() else { unreachable!() };
                euclid::quotient_inverse(coeffs, modulus.as_poly().unwrap(), x).map(Value::Poly)
            }
            (RingKind::Polynomial { base, vars }, Value::Poly(x)) => {
                // Units of a polynomial ring over a domain are the constant units.
                if x.terms.len() == 1 && x.terms[0].0.is_one() {
                    let c = base.inverse_v(&x.terms[0].1)?;
                    return Some(Value::Poly(poly::from_const(base, c, vars.len())));
                }
                None
            }
            (RingKind::MilnorSemidirect { base, poly, .. }, Value::Pair(r, f)) => {
                if !poly.is_zero_v(f) {
                    return None;
                }
                Some(Value::pair(base.inverse_v(r)?, poly.zero_v()))
            }
            _ => self.try_div_v(&self.one_v(), a),
        }
    }

    /// `l(r, f) = λ(r) + f` for the Milnor semidirect ring.
    pub(crate) fn l_projection_v(&self, v: &Value) -> Value {
        let RingKind::MilnorSemidirect { base, poly, .. } = self.kind() else { panic!("not a semidirect ring") };
        let Value::Pair(r, f) = v else { panic!("malformed payload") };
        poly.add_v(&poly.coerce_v(base, r).unwrap(), f)
    }

    /// Normal form `num / m^k` by cancelling powers of the multiplier.
    fn cancel_v(&self, mut num: Value, mut k: u32) -> Value {
        let RingKind::Localization { base, multiplier } = self.kind() else { unreachable!() };
        if base.is_zero_v(&num) {
            return Value::Frac(Box::new(num), 0);
        }
        while k > 0 {
            match base.try_div_v(&num, multiplier) {
                Some(q) => {
                    num = q;
                    k -= 1;
                }
                None => break,
            }
        }
        Value::Frac(Box::new(num), k)
    }

    fn reduce_poly_v(&self, v: Value) -> Value {
        let RingKind::Quotient { base, modulus, lc_inv } = self.kind() else { unreachable!() };
        let RingKind::Polynomial { base: coeffs, .. } = base.kind() else { unreachable!() };
        let p = v.as_poly().expect("polynomial payload");
        Value::Poly(poly::reduce(coeffs, p, modulus.as_poly().unwrap(), lc_inv.as_ref().unwrap()))
    }

    /// Validate an arbitrary payload and bring it to normal form.
    pub(crate) fn normalize_v(&self, v: Value) -> Result<Value> {
        let bad = || Error::Parse(format!("payload does not fit {self}"));
        match (self.kind(), v) {
            (RingKind::Integers, v @ Value::Int(_)) => Ok(v),
            (RingKind::Rationals, v @ Value::Rat(_)) => Ok(v),
            (RingKind::Rationals, Value::Int(n)) => Ok(Value::Rat(BigRational::from_integer(n))),
            (_, Value::Residue(r)) if self.residue_modulus().is_some() => {
                Ok(Value::Residue(r % self.residue_modulus().unwrap()))
            }
            (_, Value::Int(n)) if self.residue_modulus().is_some() => Ok(self.from_big_v(&n)),
            (RingKind::Polynomial { base, vars }, Value::Poly(p)) => {
                let mut acc = Poly::zero();
                for (m, c) in p.terms {
                    if m.0.len() != vars.len() {
                        return Err(bad());
                    }
                    let c = base.normalize_v(c)?;
                    acc = poly::add(base, &acc, &poly::monomial(base, m, c));
                }
                Ok(Value::Poly(acc))
            }
            (RingKind::Quotient { base, .. }, v @ Value::Poly(_)) => {
                let v = base.normalize_v(v)?;
                Ok(self.reduce_poly_v(v))
            }
            (RingKind::Localization { base, .. }, Value::Frac(n, k)) => {
                let n = base.normalize_v(*n)?;
                Ok(self.cancel_v(n, k))
            }
            (RingKind::Product(a, b), Value::Pair(x, y)) => Ok(Value::pair(a.normalize_v(*x)?, b.normalize_v(*y)?)),
            (RingKind::MilnorSemidirect { base, poly, .. }, Value::Pair(x, y)) => {
                let x = base.normalize_v(*x)?;
                let y = poly.normalize_v(*y)?;
                if y.as_poly().unwrap().coeff(&Mono::one(1)).is_some() {
                    return Err(Error::Precondition(
                        "the polynomial part of a semidirect element must have zero constant term".into(),
                    ));
                }
                Ok(Value::pair(x, y))
            }
            _ => Err(bad()),
        }
    }

    /// Human-readable rendering; accepted back by the element parser.
    pub(crate) fn fmt_value(&self, v: &Value) -> String {
        match (self.kind(), v) {
            (_, Value::Int(n)) => n.to_string(),
            (_, Value::Residue(r)) => r.to_string(),
            (_, Value::Rat(q)) => q.to_string(),
            (_, Value::Poly(p)) => {
                let (coeffs, _) = self.poly_parts().unwrap();
                let vars = self.vars().unwrap();
                fmt_poly(coeffs, vars, p)
            }
            (RingKind::Localization { base, multiplier }, Value::Frac(n, k)) => {
                let num = base.fmt_value(n);
                if *k == 0 {
                    return num;
                }
                let num = paren(&num);
                let m = paren(&base.fmt_value(multiplier));
                if *k == 1 {
                    format!("{num}/{m}")
                } else {
                    format!("{num}/{m}^{k}")
                }
            }
            (RingKind::Product(a, b), Value::Pair(x, y)) => format!("({}, {})", a.fmt_value(x), b.fmt_value(y)),
            (RingKind::MilnorSemidirect { base, poly, .. }, Value::Pair(x, y)) => {
                format!("({}, {})", base.fmt_value(x), poly.fmt_value(y))
            }
            _ => format!("{v:?}"),
        }
    }
}

fn paren(s: &str) -> String {
    let atomic = s.chars().all(|c| c.is_alphanumeric() || c == '_')
        || (s.starts_with('-') && s[1..].chars().all(|c| c.is_ascii_digit()));
    if atomic {
        s.to_string()
    } else {
        format!("({s})")
    }
}

fn fmt_poly(coeffs: &Ring, vars: &[String], p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms.iter().enumerate() {
        let mono: Vec<String> =
            m.0.iter()
                .zip(vars)
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
        let mut cs = coeffs.fmt_value(c);
        let negative = is_plain_negative(&cs);
        if negative {
            cs.remove(0);
        }
        let term = if mono.is_empty() {
            paren_if_sum(&cs)
        } else if cs == "1" {
            mono.join("*")
        } else {
            format!("{}*{}", paren_if_sum(&cs), mono.join("*"))
        };
        match (idx, negative) {
            (0, false) => out.push_str(&term),
            (0, true) => {
                out.push('-');
                out.push_str(&term)
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&term)
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&term)
            }
        }
    }
    out
}

fn is_plain_negative(s: &str) -> bool {
    s.starts_with('-') && !s[1..].contains([' ', '+'])
}

fn paren_if_sum(s: &str) -> String {
    if s.contains(' ') || s.contains('/') {
        format!("({s})")
    } else {
        s.to_string()
    }
}
