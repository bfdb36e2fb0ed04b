use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use steinberg_lab::milnor::{
    relevant_primes, steinberg_to_milnor, steinberg_word_to_milnor, symbol_normalize, tame_equivalent, tame_symbol,
    MilnorSymbolSum,
};
use steinberg_lab::{Ring, RootSystem, SymbolWord};

/// Independent tame symbol on `{n1/d1, n2/d2}` with small entries.
fn oracle(a: (i64, i64), b: (i64, i64), p: i64) -> i64 {
    fn split(mut x: i64, p: i64) -> (i64, i64) {
        let mut v = 0;
        while x % p == 0 {
            x /= p;
            v += 1;
        }
        (v, x.rem_euclid(p))
    }
    fn pow(mut b: i64, mut e: i64, p: i64) -> i64 {
        let mut r = 1;
        b = b.rem_euclid(p);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }
    let inv = |x: i64| pow(x, p - 2, p);
    let unit_val = |(n, d): (i64, i64)| {
        let (vn, un) = split(n, p);
        let (vd, ud) = split(d, p);
        (vn - vd, un * inv(ud) % p)
    };
    let (va, ua) = unit_val(a);
    let (vb, ub) = unit_val(b);
    // (−1)^{va vb} a^{vb} b^{−va}: only the unit parts survive.
    let sign = if (va * vb) % 2 == 0 { 1 } else { p - 1 };
    let ua_pow = if vb >= 0 { pow(ua, vb, p) } else { pow(inv(ua), -vb, p) };
    let ub_pow = if va >= 0 { pow(inv(ub), va, p) } else { pow(ub, -va, p) };
    sign * ua_pow % p * ub_pow % p
}

fn q_of(q: &Ring, (n, d): (i64, i64)) -> steinberg_lab::RingElement {
    q.parse(&format!("{n}/{d}")).unwrap()
}

#[test]
fn tame_examples() {
    let q = Ring::rationals();
    let s = MilnorSymbolSum::parse(&q, "2,3").unwrap();
    assert_eq!(tame_symbol(&s, 3).unwrap().value, 2);
    assert_eq!(tame_symbol(&s, 5).unwrap().value, 1);
    assert_eq!(relevant_primes(&s).unwrap(), vec![3]);
    assert!(tame_symbol(&s, 2).is_err());
    assert!(tame_symbol(&s, 9).is_err());
}

#[test]
fn tame_matches_oracle() {
    let q = Ring::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let entry = |rng: &mut ChaCha8Rng| {
        let n: i64 = rng.gen_range(1..200) * if rng.gen_bool(0.5) { -1 } else { 1 };
        (n, rng.gen_range(1..60))
    };
    for _ in 0..300 {
        let (a, b) = (entry(&mut rng), entry(&mut rng));
        let s = MilnorSymbolSum::symbol(&q_of(&q, a), &q_of(&q, b)).unwrap();
        for p in [3, 5, 7, 11, 13] {
            assert_eq!(tame_symbol(&s, p).unwrap().value as i64, oracle(a, b, p as i64), "{{{a:?}, {b:?}}} at {p}");
        }
    }
}

#[test]
fn steinberg_relation_is_tame_trivial() {
    let q = Ring::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let u = q_of(&q, (rng.gen_range(-300..300), rng.gen_range(1..50)));
        if u.is_zero() || u.is_one() {
            continue;
        }
        let s = MilnorSymbolSum::symbol(&u, &(&q.one() - &u)).unwrap();
        for p in relevant_primes(&s).unwrap().into_iter().chain([3, 5, 7]) {
            assert_eq!(tame_symbol(&s, p).unwrap().value, 1, "{s} at {p}");
        }
    }
}

#[test]
fn normalize_examples() {
    let q = Ring::rationals();
    let n = |t: &str| symbol_normalize(&MilnorSymbolSum::parse(&q, t).unwrap());
    assert!(n("3,-2; -2,3").is_empty());
    assert_eq!(n("4,5"), n("2,5; 2,5"));
    assert_eq!(n("4,5").terms().len(), 1);
    assert_eq!(n("4,5").terms()[0].2, 2);
    let s = MilnorSymbolSum::parse(&q, "7,-6").unwrap();
    assert!(symbol_normalize(&s.sub(&s).unwrap()).is_empty());
    assert!(n("5,-4").is_empty());
    let s = MilnorSymbolSum::parse(&q, "12,35; 9,-10; 1/8,7").unwrap();
    assert!(tame_equivalent(&s, &symbol_normalize(&s)).unwrap());
}

#[test]
fn steinberg_symbols_map_to_milnor() {
    let f11 = Ring::prime_field(11).unwrap();
    let phi = RootSystem::parse("A3").unwrap();
    let (u, v, w) = (f11.from_i64(2), f11.from_i64(3), f11.from_i64(7));
    let s = SymbolWord::symbol(&f11, &phi, 2, &u, &v).unwrap();
    assert_eq!(steinberg_to_milnor(&s).unwrap(), MilnorSymbolSum::symbol(&u, &v).unwrap());
    let st = s.mul(&SymbolWord::symbol(&f11, &phi, 2, &u, &w).unwrap()).unwrap();
    let expected = MilnorSymbolSum::parse(&f11, "2,3; 2,7").unwrap();
    assert_eq!(steinberg_to_milnor(&st).unwrap(), expected);
    assert_eq!(steinberg_word_to_milnor(st.word(), 2).unwrap(), expected);
    assert!(steinberg_to_milnor(&SymbolWord::identity(&f11, &phi, 2)).unwrap().is_empty());
}

#[test]
fn non_fields_rejected() {
    assert!(MilnorSymbolSum::zero(&Ring::integers()).is_err());
}
