use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exponent vector of a monomial, ordered by total degree and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Mono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Mono)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: nonzero terms sorted by strictly decreasing monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    pub terms: Vec<(Mono, Value)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Mono, Value)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Coefficient of the given monomial, if present.
    pub fn coeff(&self, m: &Mono) -> Option<&Value> {
        self.terms.binary_search_by(|(k, _)| m.cmp(k)).ok().map(|i| &self.terms[i].1)
    }
}

/// Normal-form payload of a ring element. Its meaning depends on the parent ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    /// Element of the integers.
    Int(BigInt),
    /// Residue in `[0, n)` for prime fields and quotients of the integers.
    Residue(u64),
    /// Element of the rationals.
    Rat(BigRational),
    /// Polynomial, also used for quotients of polynomial rings.
    Poly(Poly),
    /// `num / multiplier^exp` with `exp` minimal.
    Frac(Box<Value>, u32),
    /// Element of a product ring, or `(r, f)` in a Milnor semidirect ring.
    Pair(Box<Value>, Box<Value>),
}

impl Value {
    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Value::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            Value::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn pair(a: Value, b: Value) -> Value {
        Value::Pair(Box::new(a), Box::new(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_then_lex() {
        let x = Mono(vec![1, 0]);
        let y = Mono(vec![0, 1]);
        let xy = Mono(vec![1, 1]);
        let y3 = Mono(vec![0, 3]);
        assert!(x > y);
        assert!(xy > x);
        assert!(y3 > xy);
        assert!(Mono::one(2) < y);
        assert_eq!(xy.div(&x), Some(y.clone()));
        assert_eq!(x.div(&y), None);
    }
}
