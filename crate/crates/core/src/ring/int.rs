//! Small integer utilities shared by the ring constructions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Trial-division primality test. Moduli are capped at 2^32 so this stays cheap.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn is_prime_big(n: &BigInt) -> bool {
    match u64::try_from(n.abs()) {
        Ok(v) if v < (1u64 << 40) => is_prime_u64(v),
        _ => false,
    }
}

/// Extended gcd on machine integers: returns (g, x, y) with ax + by = g >= 0.
pub fn ext_gcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd_i128(a as i128, n as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(n as i128) as u64)
}

pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// Reduce a big integer into `[0, n)`.
pub fn reduce_big(x: &BigInt, n: u64) -> u64 {
    let m = BigInt::from(n);
    let r = x.mod_floor(&m);
    u64::try_from(r).expect("residue fits in u64")
}

/// Extended gcd on big integers with a nonnegative gcd.
pub fn ext_gcd_big(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Multiplicity of the prime `p` in the nonzero integer `n`.
pub fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    debug_assert!(!n.is_zero());
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Factor a nonzero integer into `(sign, [(prime, exponent)])` by trial division.
pub fn factor(n: &BigInt) -> (i32, Vec<(BigInt, u32)>) {
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            let mut e = 0;
            while (&m % &d).is_zero() {
                m /= &d;
                e += 1;
            }
            out.push((d.clone(), e));
        }
        d += if d == BigInt::from(2) { BigInt::one() } else { BigInt::from(2) };
    }
    if !m.is_one() {
        out.push((m, 1));
    }
    (sign, out)
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime_u64(65_537));
        assert!(!is_prime_u64(65_537 * 3));
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(2, 6), None);
        assert_eq!(mod_inverse(5, 1), Some(0));
    }

    #[test]
    fn factoring() {
        let (s, f) = factor(&BigInt::from(-360));
        assert_eq!(s, -1);
        let f: Vec<(i64, u32)> = f.into_iter().map(|(p, e)| (i64::try_from(p).unwrap(), e)).collect();
        assert_eq!(f, vec![(2, 3), (3, 2), (5, 1)]);
    }
}
