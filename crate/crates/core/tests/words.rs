use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use steinberg_lab::words::{check_congruence_lemma, check_congruence_lemma_in};
use steinberg_lab::{Ideal, Representation, Ring, RingHom, RootSystem, SteinbergWord, SymbolWord};

fn a2() -> RootSystem {
    RootSystem::parse("A2").unwrap()
}

#[test]
fn r1_merging() {
    let z = Ring::integers();
    let phi = a2();
    assert!(SteinbergWord::gen(&z, &phi, 0, z.zero()).unwrap().is_empty());
    let w = SteinbergWord::gen(&z, &phi, 0, z.from_i64(2)).unwrap();
    let v = SteinbergWord::gen(&z, &phi, 0, z.from_i64(3)).unwrap();
    assert_eq!(w.concat(&v).unwrap(), SteinbergWord::gen(&z, &phi, 0, z.from_i64(5)).unwrap());
    assert_eq!(w.inverse(), SteinbergWord::gen(&z, &phi, 0, z.from_i64(-2)).unwrap());
    assert!(w.concat(&w.inverse()).unwrap().is_empty());
}

#[test]
fn mixing_rings_is_an_error() {
    let phi = a2();
    let w = SteinbergWord::gen(&Ring::integers(), &phi, 0, Ring::integers().one()).unwrap();
    let f7 = Ring::prime_field(7).unwrap();
    let v = SteinbergWord::gen(&f7, &phi, 0, f7.one()).unwrap();
    assert!(w.concat(&v).is_err());
}

#[test]
fn commutator_reduce_example() {
    let z = Ring::integers();
    let phi = a2();
    let (a1, a2r) = (phi.parse_root("e1-e2").unwrap(), phi.parse_root("e2-e3").unwrap());
    let s = phi.sum_index(a1, a2r).unwrap();
    let w = SteinbergWord::from_letters(&z, &phi, [(a2r, z.from_i64(7), 1), (a1, z.from_i64(3), 1)]).unwrap();
    let n = i64::from(phi.constant(a1, a2r).unwrap());
    let literal = SteinbergWord::from_letters(
        &z,
        &phi,
        [(a1, z.from_i64(3), 1), (a2r, z.from_i64(7), 1), (s, z.from_i64(-n * 21), 1)],
    )
    .unwrap();
    // e1-e3 precedes e2-e3 in the enumeration and commutes with it, so it is sorted further.
    let sorted = SteinbergWord::from_letters(
        &z,
        &phi,
        [(a1, z.from_i64(3), 1), (s, z.from_i64(-n * 21), 1), (a2r, z.from_i64(7), 1)],
    )
    .unwrap();
    let r = w.commutator_reduce();
    assert_eq!(r, sorted);
    let rep = Representation::adjoint(&phi);
    assert_eq!(rep.evaluate(&r), rep.evaluate(&w));
    assert_eq!(rep.evaluate(&literal), rep.evaluate(&w));
}

#[test]
fn commutator_reduce_is_sound() {
    let f11 = Ring::prime_field(11).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in ["A3", "D4"] {
        let phi = RootSystem::parse(name).unwrap();
        let rep = Representation::adjoint(&phi);
        for _ in 0..30 {
            let len = rng.gen_range(1..6);
            let letters: Vec<_> =
                (0..len).map(|_| (rng.gen_range(0..phi.len()), f11.from_i64(rng.gen_range(1..11)), 1)).collect();
            let w = SteinbergWord::from_letters(&f11, &phi, letters).unwrap();
            assert_eq!(rep.evaluate(&w.commutator_reduce()), rep.evaluate(&w), "{w}");
        }
    }
}

#[test]
fn weyl_block_and_torus() {
    let q = Ring::rationals();
    let phi = a2();
    let rep = Representation::defining(&phi).unwrap();
    let u = q.parse("2/3").unwrap();
    let m = rep.evaluate(&SteinbergWord::weyl(&q, &phi, 0, &u).unwrap());
    assert_eq!(m.get(0, 0), &q.zero());
    assert_eq!(m.get(0, 1), &u);
    assert_eq!(m.get(1, 0), &q.parse("-3/2").unwrap());
    assert_eq!(m.get(1, 1), &q.zero());
    assert_eq!(m.get(2, 2), &q.one());

    let h = rep.evaluate(&SteinbergWord::torus(&q, &phi, 0, &u).unwrap());
    for i in 0..3 {
        for j in 0..3 {
            let want = match (i, j) {
                (0, 0) => u.clone(),
                (1, 1) => q.parse("3/2").unwrap(),
                (2, 2) => q.one(),
                _ => q.zero(),
            };
            assert_eq!(h.get(i, j), &want, "({i}, {j})");
        }
    }
    assert!(rep.evaluate(&SteinbergWord::torus(&q, &phi, 0, &q.one()).unwrap()).is_identity());
    assert!(rep.evaluate(&SteinbergWord::symbol(&q, &phi, 0, &u, &q.one()).unwrap()).is_identity());
}

#[test]
fn non_units_rejected() {
    let z = Ring::integers();
    let phi = a2();
    assert!(SteinbergWord::weyl(&z, &phi, 0, &z.from_i64(2)).is_err());
    assert!(SteinbergWord::symbol(&z, &phi, 0, &z.one(), &z.zero()).is_err());
}

#[test]
fn y_element_degenerate_cases() {
    let z = Ring::integers();
    let phi = a2();
    assert!(SteinbergWord::y_element(&z, &phi, 0, &z.zero(), &z.from_i64(3)).unwrap().is_empty());
    assert!(SteinbergWord::y_element(&z, &phi, 0, &z.from_i64(3), &z.zero()).unwrap().is_empty());
}

#[test]
fn substitution_examples() {
    let z = Ring::integers();
    let phi = a2();
    let r2 = Ring::polynomial(&z, &["t1", "t2"]).unwrap();
    let w = SteinbergWord::gen(&r2, &phi, 0, r2.parse("t1*t2").unwrap()).unwrap();
    let d0 =
        RingHom::substitute(&r2, &r2, &[("t1", r2.parse("1 - t1").unwrap()), ("t2", r2.parse("t1").unwrap())]).unwrap();
    assert_eq!(w.substitute(&d0).unwrap(), SteinbergWord::gen(&r2, &phi, 0, r2.parse("t1 - t1^2").unwrap()).unwrap());

    let zt = Ring::polynomial(&z, &["t"]).unwrap();
    let w = SteinbergWord::gen(&zt, &phi, 1, zt.parse("5*t").unwrap()).unwrap();
    assert!(w.substitute(&RingHom::evaluate_at(&zt, "t", &z.zero()).unwrap()).unwrap().is_empty());

    let pair = Ring::product(&z, &z);
    let w = SteinbergWord::gen(&pair, &phi, 0, pair.parse("(1, 0)").unwrap()).unwrap();
    assert!(w.substitute(&RingHom::project_right(&pair).unwrap()).unwrap().is_empty());
}

#[test]
fn symbol_words_roundtrip() {
    let f7 = Ring::prime_field(7).unwrap();
    let phi = a2();
    let (u, v, w) = (f7.from_i64(3), f7.from_i64(2), f7.from_i64(5));
    let s = SymbolWord::symbol(&f7, &phi, 0, &u, &v).unwrap();
    let t = SymbolWord::symbol(&f7, &phi, 0, &u, &w).unwrap();
    let st = s.mul(&t).unwrap();
    let back = SymbolWord::recognize(st.word(), 0).unwrap();
    assert_eq!(back.word(), st.word());
    assert!(SymbolWord::recognize(&SteinbergWord::gen(&f7, &phi, 0, f7.one()).unwrap(), 0).is_err());
    assert!(s.mul(&s.inverse()).unwrap().word().is_empty());
}

#[test]
fn congruence_lemma_examples() {
    let z = Ring::integers();
    let phi = a2();
    let (a, b) = (z.from_i64(2), z.from_i64(3));
    let (ia, ib) = (Ideal::principal(&a), Ideal::principal(&b));
    let sl = Representation::defining(&phi).unwrap();
    assert!(check_congruence_lemma_in(&sl, 0, &a, &b, &z.from_i64(5), &ia, &ib).unwrap());
    assert!(check_congruence_lemma(&phi, 0, &a, &b, &z.one(), &ia, &ib).unwrap());
    let unit = Ideal::unit(&z);
    assert!(check_congruence_lemma(&phi, 0, &z.one(), &b, &z.from_i64(4), &unit, &ib).unwrap());
    assert!(check_congruence_lemma(&phi, 0, &b, &a, &z.one(), &ia, &ib).is_err());
}

#[test]
fn json_roundtrip() {
    let zh = Ring::parse_spec("Z[1/2]").unwrap();
    let phi = RootSystem::parse("D4").unwrap();
    let w =
        SteinbergWord::from_letters(&zh, &phi, [(0, zh.parse("3/2").unwrap(), 1), (7, zh.parse("-5/4").unwrap(), 1)])
            .unwrap();
    let j = w.to_json_document();
    assert_eq!(SteinbergWord::from_json_document(&j, None, None).unwrap(), w);
}
