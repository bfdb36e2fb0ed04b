//! Milnor `K₂` symbols over ℚ and prime fields, with odd tame symbols as the equality
//! oracle over ℚ.
//!
//! Sums of symbols are formal; [`symbol_normalize`] applies sound rewriting only. Claims
//! that two sums agree go through [`tame_symbol`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{int, Ring, RingElement, RingKind, Value};
use crate::words::{SteinbergWord, SymbolWord};

/// A formal `ℤ`-combination of symbols `{a, b}` over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct MilnorSymbolSum {
    field: Ring,
    terms: Vec<(RingElement, RingElement, i64)>,
}

impl fmt::Display for MilnorSymbolSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, b, m)| match m {
                1 => format!("{{{a}, {b}}}"),
                _ => format!("{m}*{{{a}, {b}}}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl MilnorSymbolSum {
    pub fn zero(field: &Ring) -> Result<MilnorSymbolSum> {
        if !field.is_field() {
            return Err(Error::Unsupported(format!("Milnor symbols over {field}")));
        }
        Ok(MilnorSymbolSum { field: field.clone(), terms: Vec::new() })
    }

    /// The single symbol `{a, b}`.
    pub fn symbol(a: &RingElement, b: &RingElement) -> Result<MilnorSymbolSum> {
        let mut s = MilnorSymbolSum::zero(a.ring())?;
        s.push(a, b, 1)?;
        Ok(s)
    }

    /// Add `mult·{a, b}`. Symbols with an entry equal to 1 are dropped.
    pub fn push(&mut self, a: &RingElement, b: &RingElement, mult: i64) -> Result<()> {
        let a = self.field.coerce(a)?;
        let b = self.field.coerce(b)?;
        if a.is_zero() || b.is_zero() {
            return Err(Error::Precondition("symbol entries must be nonzero".into()));
        }
        if mult != 0 && !a.is_one() && !b.is_one() {
            self.terms.push((a, b, mult));
        }
        Ok(())
    }

    pub fn field(&self) -> &Ring {
        &self.field
    }

    pub fn terms(&self) -> &[(RingElement, RingElement, i64)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &MilnorSymbolSum) -> Result<MilnorSymbolSum> {
        if self.field != other.field {
            return Err(Error::MismatchedRings(self.field.to_string(), other.field.to_string()));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(MilnorSymbolSum { field: self.field.clone(), terms })
    }

    pub fn neg(&self) -> MilnorSymbolSum {
        let terms = self.terms.iter().map(|(a, b, m)| (a.clone(), b.clone(), -m)).collect();
        MilnorSymbolSum { field: self.field.clone(), terms }
    }

    pub fn sub(&self, other: &MilnorSymbolSum) -> Result<MilnorSymbolSum> {
        self.add(&other.neg())
    }

    /// Parse `"a,b"` or `"a,b; c,d"` into a sum of symbols over `field`.
    pub fn parse(field: &Ring, text: &str) -> Result<MilnorSymbolSum> {
        let mut s = MilnorSymbolSum::zero(field)?;
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = part
                .trim_matches(|c| c == '{' || c == '}')
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected a,b in {part:?}")))?;
            s.push(&field.parse(a.trim())?, &field.parse(b.trim())?, 1)?;
        }
        Ok(s)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(a, b, m)| serde_json::json!({"a": a.to_string(), "b": b.to_string(), "mult": m}))
                .collect(),
        )
    }
}

/// `∂_p` of a symbol sum: an element of `F_p^×`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TameSymbolImage {
    pub prime: u64,
    pub value: u64,
}

impl fmt::Display for TameSymbolImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn as_rational(x: &RingElement) -> Result<&BigRational> {
    match x.value() {
        Value::Rat(r) if matches!(x.ring().kind(), RingKind::Rationals) => Ok(r),
        _ => Err(Error::Unsupported(format!("tame symbols need rational entries, got {x:?}"))),
    }
}

fn valuation_q(r: &BigRational, p: &BigInt) -> i64 {
    int::valuation(r.numer(), p) as i64 - int::valuation(r.denom(), p) as i64
}

/// The `p`-adic unit part of `r`, reduced mod `p`.
fn unit_residue(r: &BigRational, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let strip = |n: &BigInt| {
        let mut n = n.clone();
        while (&n % &pb).is_zero() {
            n /= &pb;
        }
        int::reduce_big(&n, p)
    };
    let num = strip(r.numer());
    let den = strip(r.denom());
    int::mul_mod(num, int::mod_inverse(den, p).expect("unit"), p)
}

fn pow_signed(x: u64, e: i64, p: u64) -> u64 {
    let base = if e < 0 { int::mod_inverse(x, p).expect("unit") } else { x };
    int::pow_mod(base, e.unsigned_abs(), p)
}

/// `∂_p{a, b} = (−1)^{v(a)v(b)} a^{v(b)} / b^{v(a)} mod p`, extended additively.
pub fn tame_symbol(s: &MilnorSymbolSum, p: u64) -> Result<TameSymbolImage> {
    if p == 2 || !int::is_prime_u64(p) {
        return Err(Error::Precondition(format!("{p} is not an odd prime")));
    }
    let pb = BigInt::from(p);
    let mut acc = 1u64;
    for (a, b, m) in &s.terms {
        let (a, b) = (as_rational(a)?, as_rational(b)?);
        let (va, vb) = (valuation_q(a, &pb), valuation_q(b, &pb));
        let sign = if (va * vb).rem_euclid(2) == 1 { p - 1 } else { 1 };
        let mut v = int::mul_mod(sign, pow_signed(unit_residue(a, p), vb, p), p);
        v = int::mul_mod(v, pow_signed(unit_residue(b, p), -va, p), p);
        acc = int::mul_mod(acc, pow_signed(v, *m, p), p);
    }
    Ok(TameSymbolImage { prime: p, value: acc })
}

/// Odd primes dividing a numerator or denominator of some entry.
pub fn relevant_primes(s: &MilnorSymbolSum) -> Result<Vec<u64>> {
    let mut out = BTreeSet::new();
    for (a, b, _) in &s.terms {
        for r in [as_rational(a)?, as_rational(b)?] {
            for n in [r.numer(), r.denom()] {
                let (_, fs) = factor_small(n).ok_or_else(|| Error::Unsupported(format!("factoring {n}")))?;
                for (q, _) in fs {
                    if q != 2 {
                        out.insert(q);
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Tame symbols at every relevant odd prime of either sum; equal maps mean the two sums
/// cannot be told apart by odd tame symbols.
pub fn tame_equivalent(s: &MilnorSymbolSum, t: &MilnorSymbolSum) -> Result<bool> {
    let diff = s.sub(t)?;
    for p in relevant_primes(&diff)? {
        if tame_symbol(&diff, p)?.value != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest integer we factor by trial division.
const FACTOR_LIMIT: u64 = 1 << 40;

fn factor_small(n: &BigInt) -> Option<(i64, Vec<(u64, u32)>)> {
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs().to_u64().filter(|m| *m != 0 && *m <= FACTOR_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    Some((sign, out))
}

/// Generators of `ℚ^×`: `−1` (as 0) and primes, with exponents.
fn rational_exponents(r: &BigRational) -> Option<Vec<(u64, i64)>> {
    let (sn, num) = factor_small(r.numer())?;
    let (_, den) = factor_small(r.denom())?;
    let mut m: BTreeMap<u64, i64> = BTreeMap::new();
    if sn < 0 {
        m.insert(0, 1);
    }
    for (p, e) in num {
        *m.entry(p).or_default() += e as i64;
    }
    for (p, e) in den {
        *m.entry(p).or_default() -= e as i64;
    }
    Some(m.into_iter().filter(|(_, e)| *e != 0).collect())
}

fn generator(q: &Ring, g: u64) -> RingElement {
    if g == 0 {
        -q.one()
    } else {
        q.from_i64(g as i64)
    }
}

/// Sound simplification of a symbol sum.
///
/// Drops `{u, 1−u}` and `{u, −u}`; over ℚ expands every entry into `−1` and primes by
/// bilinearity and rewrites `{p, p} = {p, −1}`; orders each pair by skew-symmetry
/// `{a, b} = −{b, a}`; and collects multiplicities. The result is not a normal form.
pub fn symbol_normalize(s: &MilnorSymbolSum) -> MilnorSymbolSum {
    let field = &s.field;
    let one = field.one();
    let mut basis: BTreeMap<(String, String), (RingElement, RingElement, i64)> = BTreeMap::new();
    let mut add = |a: RingElement, b: RingElement, m: i64| {
        if m == 0 || a.is_one() || b.is_one() {
            return;
        }
        let (ka, kb) = (sort_key(&a), sort_key(&b));
        let (a, b, m, key) = if ka <= kb { (a, b, m, (ka, kb)) } else { (b, a, -m, (kb, ka)) };
        basis.entry(key).or_insert((a, b, 0)).2 += m;
    };
    for (a, b, m) in &s.terms {
        if *b == &one - a || *b == -a {
            continue;
        }
        let expanded = match (field.kind(), a.value(), b.value()) {
            (RingKind::Rationals, Value::Rat(ra), Value::Rat(rb)) => rational_exponents(ra).zip(rational_exponents(rb)),
            _ => None,
        };
        let Some((ea, eb)) = expanded else {
            add(a.clone(), b.clone(), *m);
            continue;
        };
        for &(p, e) in &ea {
            for &(q, f) in &eb {
                let (gp, gq) = (generator(field, p), generator(field, q));
                if p == q && p != 0 {
                    // {p, p} = {p, −1}
                    add(gp, -field.one(), m * e * f);
                } else {
                    add(gp, gq, m * e * f);
                }
            }
        }
    }
    let terms = basis.into_values().filter(|t| t.2 != 0).collect();
    MilnorSymbolSum { field: field.clone(), terms }
}

/// Order on entries: `−1` first, then integers by size, then everything else by text.
fn sort_key(x: &RingElement) -> String {
    if (x + &x.ring().one()).is_zero() {
        return String::from("0");
    }
    match x.value() {
        Value::Rat(r) if r.denom().is_one() && r.numer().is_positive() => format!("1{:0>40}", r.numer()),
        Value::Residue(v) => format!("1{v:0>40}"),
        _ => format!("2{x}"),
    }
}

/// The Milnor sum of a product of Steinberg symbols, read off its construction history.
pub fn steinberg_to_milnor(w: &SymbolWord) -> Result<MilnorSymbolSum> {
    let mut s = MilnorSymbolSum::zero(w.word().ring())?;
    for (u, v, sign) in w.history() {
        s.push(u, v, *sign as i64)?;
    }
    Ok(s)
}

/// [`steinberg_to_milnor`] for a bare word, recognized as a product of symbols on `root`.
pub fn steinberg_word_to_milnor(w: &SteinbergWord, root: usize) -> Result<MilnorSymbolSum> {
    if w.is_empty() {
        return MilnorSymbolSum::zero(w.ring());
    }
    steinberg_to_milnor(&SymbolWord::recognize(w, root)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> RingElement {
        Ring::rationals().parse(s).unwrap()
    }

    fn sym(a: &str, b: &str) -> MilnorSymbolSum {
        MilnorSymbolSum::symbol(&q(a), &q(b)).unwrap()
    }

    #[test]
    fn tame_examples() {
        assert_eq!(tame_symbol(&sym("2", "3"), 3).unwrap().value, 2);
        assert_eq!(tame_symbol(&sym("2", "3"), 5).unwrap().value, 1);
        assert!(tame_symbol(&sym("2", "3"), 2).is_err());
        // ∂_3{3, 3} = (−1)^1 · 3/3 = −1
        assert_eq!(tame_symbol(&sym("3", "3"), 3).unwrap().value, 2);
    }

    #[test]
    fn normalize_examples() {
        let s = symbol_normalize(&sym("4", "5"));
        assert_eq!(s.terms().len(), 1);
        assert_eq!(s.terms()[0], (q("2"), q("5"), 2));
        assert!(symbol_normalize(&sym("3", "-2").add(&sym("-2", "3")).unwrap()).is_empty());
        assert!(symbol_normalize(&sym("7", "-6").sub(&sym("7", "-6")).unwrap()).is_empty());
        assert!(symbol_normalize(&sym("2", "-1")).is_empty());
        assert!(symbol_normalize(&sym("5", "-5")).is_empty());
    }

    #[test]
    fn parse_sums() {
        let s = MilnorSymbolSum::parse(&Ring::rationals(), "2,3; {4, 1/5}").unwrap();
        assert_eq!(s.terms().len(), 2);
        assert_eq!(s.to_string(), "{2, 3} + {4, 1/5}");
    }
}
