use steinberg_lab::simplicial::{
    check_lift, crt_from_pair, crt_quotient, crt_to_pair, degeneracy, face, moore_lift, pi0_connectivity_witness,
    simplicial_identity_check, MooreGenerator, SimplicialLevel,
};
use steinberg_lab::{Representation, Ring, RootSystem, SteinbergWord};

#[test]
fn low_faces() {
    let z = Ring::integers();
    let l1 = SimplicialLevel::new(&z, 1).unwrap();
    let t1 = l1.t(1).unwrap();
    assert_eq!(face(&z, 0, 1).unwrap().apply(&t1).unwrap(), face(&z, 0, 1).unwrap().target().one());
    assert!(face(&z, 1, 1).unwrap().apply(&t1).unwrap().is_zero());

    let l2 = SimplicialLevel::new(&z, 2).unwrap();
    let d0 = l2.face(0).unwrap();
    assert_eq!(d0.apply(&l2.t(1).unwrap()).unwrap(), l1.ring().parse("1 - t1").unwrap());
    assert_eq!(d0.apply(&l2.t(2).unwrap()).unwrap(), t1);
    assert_eq!(degeneracy(&z, 0, 1).unwrap().target(), l2.ring());
}

#[test]
fn identities_hold() {
    for ring in [Ring::integers(), Ring::prime_field(7).unwrap()] {
        let r = simplicial_identity_check(&ring, 3).unwrap();
        assert!(r.passed(), "{ring}");
        assert!(r.checks > 0);
    }
    assert!(simplicial_identity_check(&Ring::integers(), 2).unwrap().passed());
    assert!(SimplicialLevel::new(&Ring::integers(), 4).is_err());
}

#[test]
fn lift_of_basic_generator() {
    let z = Ring::integers();
    let phi = RootSystem::parse("A2").unwrap();
    let l1 = SimplicialLevel::new(&z, 1).unwrap();
    let l2 = SimplicialLevel::new(&z, 2).unwrap();
    let gen = MooreGenerator::level1(&phi, 0, &l1.ring().one(), &SteinbergWord::empty(l1.ring(), &phi)).unwrap();
    assert_eq!(gen.word, SteinbergWord::gen(l1.ring(), &phi, 0, l1.ring().parse("t1^2 - t1").unwrap()).unwrap());
    let lift = moore_lift(&gen).unwrap();
    assert_eq!(lift.word, SteinbergWord::gen(l2.ring(), &phi, 0, l2.ring().parse("-t1*t2").unwrap()).unwrap());
    assert!(lift.word.substitute(&l2.face(1).unwrap()).unwrap().is_empty());
    assert!(lift.word.substitute(&l2.face(2).unwrap()).unwrap().is_empty());
    assert_eq!(lift.word.substitute(&l2.face(0).unwrap()).unwrap(), gen.word);
    assert!(check_lift(&gen, &lift).unwrap().passed(true));
}

#[test]
fn lift_with_conjugation() {
    let f7 = Ring::prime_field(7).unwrap();
    let phi = RootSystem::parse("A3").unwrap();
    let l1 = SimplicialLevel::new(&f7, 1).unwrap();
    let r = l1.ring();
    let g =
        SteinbergWord::from_letters(r, &phi, [(1, r.parse("t1 + 2").unwrap(), 1), (7, r.parse("3*t1").unwrap(), 1)])
            .unwrap();
    let gen = MooreGenerator::level1(&phi, 4, &r.parse("t1^2 + 5").unwrap(), &g).unwrap();
    let back = MooreGenerator::recognize(&gen.word).unwrap();
    assert_eq!(back.word, gen.word);
    let lift = moore_lift(&gen).unwrap();
    let check = check_lift(&gen, &lift).unwrap();
    assert!(check.passed(false), "{check:?}");
    let l2 = SimplicialLevel::new(&f7, 2).unwrap();
    let rep = Representation::adjoint(&phi);
    assert!(rep.evaluate(&lift.word.substitute(&l2.face(1).unwrap()).unwrap()).is_identity());
}

#[test]
fn connectivity_witness() {
    let z = Ring::integers();
    let phi = RootSystem::parse("A2").unwrap();
    let l1 = SimplicialLevel::new(&z, 1).unwrap();
    let w = pi0_connectivity_witness(&phi, 2, &z.from_i64(5)).unwrap();
    assert!(w.substitute(&l1.face(1).unwrap()).unwrap().is_empty());
    assert_eq!(w.substitute(&l1.face(0).unwrap()).unwrap(), SteinbergWord::gen(&z, &phi, 2, z.from_i64(5)).unwrap());
    assert!(pi0_connectivity_witness(&phi, 2, &z.zero()).unwrap().is_empty());
}

#[test]
fn crt_roundtrips() {
    for base in [Ring::integers(), Ring::prime_field(5).unwrap()] {
        let q = crt_quotient(&base).unwrap();
        for text in ["0", "1", "t1", "3*t1 - 2", "t1^2", "4*t1^5 + t1^3 - 1"] {
            let f = q.parse(text).unwrap();
            let pair = crt_to_pair(&f).unwrap();
            assert_eq!(crt_from_pair(&pair).unwrap(), f, "{text} over {base}");
        }
    }
}
