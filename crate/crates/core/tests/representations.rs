use proptest::prelude::*;
use steinberg_lab::rep::verify_relations;
use steinberg_lab::{RepKind, Representation, Ring, RootSystem, SteinbergWord};

#[test]
fn defining_and_vector_generators() {
    let z = Ring::integers();
    let a2 = RootSystem::parse("A2").unwrap();
    let m = Representation::defining(&a2).unwrap().unipotent(0, &z.from_i64(9));
    assert_eq!(m.off_identity(), vec![(0, 1, z.from_i64(9))]);

    let d4 = RootSystem::parse("D4").unwrap();
    let v = Representation::vector(&d4).unwrap();
    assert_eq!(v.dim(), 8);
    let m = v.unipotent(d4.parse_root("e1-e2").unwrap(), &z.from_i64(4));
    let mut off = m.off_identity();
    off.sort_by_key(|e| (e.0, e.1));
    assert_eq!(off, vec![(0, 1, z.from_i64(4)), (5, 4, z.from_i64(-4))]);

    assert!(Representation::vector(&a2).is_err());
    assert!(Representation::defining(&d4).is_err());
    assert_eq!(Representation::adjoint(&d4).dim(), 24 + 4);
}

#[test]
fn k2_membership_examples() {
    let f5 = Ring::prime_field(5).unwrap();
    let phi = RootSystem::parse("A2").unwrap();
    let rep = Representation::defining(&phi).unwrap();
    let (u, v) = (f5.from_i64(2), f5.from_i64(3));
    let h = |x| SteinbergWord::torus(&f5, &phi, 0, x).unwrap();
    let w = h(&u).concat(&h(&v)).unwrap().concat(&h(&(&u * &v)).inverse()).unwrap();
    assert!(rep.k2_membership(&w));
    assert!(rep.k2_membership(&SteinbergWord::symbol(&f5, &phi, 1, &u, &v).unwrap()));
    assert!(!rep.k2_membership(&SteinbergWord::gen(&f5, &phi, 0, f5.one()).unwrap()));
}

#[test]
fn relation_sweeps() {
    let cases = [
        ("A3", RepKind::Adjoint, "Z/6", 100),
        ("D5", RepKind::VectorD, "F_7", 100),
        ("A2", RepKind::DefiningA, "Z[t]/(t^3)", 50),
    ];
    for (name, kind, ring, samples) in cases {
        let phi = RootSystem::parse(name).unwrap();
        let rep = Representation::new(kind, &phi).unwrap();
        let report = verify_relations(&rep, &Ring::parse_spec(ring).unwrap(), samples, 1);
        assert!(report.passed(), "{name} {kind:?} over {ring}: {:?}", report.violations);
        assert!(report.checks > 0);
    }
}

fn word_strategy(roots: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0..roots, -20i64..20), 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_multiplicative(a in word_strategy(12), b in word_strategy(12)) {
        let r = Ring::integers_mod(35).unwrap();
        let phi = RootSystem::parse("A3").unwrap();
        let mk = |l: &[(usize, i64)]| {
            SteinbergWord::from_letters(&r, &phi, l.iter().map(|&(i, x)| (i, r.from_i64(x), 1))).unwrap()
        };
        let (x, y) = (mk(&a), mk(&b));
        for rep in Representation::all_for(&phi) {
            let lhs = rep.evaluate(&x.concat(&y).unwrap());
            prop_assert_eq!(lhs, rep.evaluate(&x).mul(&rep.evaluate(&y)).unwrap());
            prop_assert!(rep.evaluate(&x.concat(&x.inverse()).unwrap()).is_identity());
        }
    }

    #[test]
    fn commutator_relation_in_adjoint(i in 0usize..24, j in 0usize..24, s in -9i64..9, t in -9i64..9) {
        let r = Ring::integers();
        let phi = RootSystem::parse("D4").unwrap();
        prop_assume!(j != phi.neg(i));
        let rep = Representation::adjoint(&phi);
        let x = SteinbergWord::gen(&r, &phi, i, r.from_i64(s)).unwrap();
        let y = SteinbergWord::gen(&r, &phi, j, r.from_i64(t)).unwrap();
        let lhs = rep.evaluate(&SteinbergWord::commutator(&x, &y).unwrap());
        let rhs = match phi.sum_index(i, j) {
            Some(c) => rep.unipotent(c, &r.from_i64(i64::from(phi.constant(i, j).unwrap()) * s * t)),
            None => steinberg_lab::GroupMatrix::identity(&r, rep.dim()),
        };
        prop_assert_eq!(lhs, rhs);
    }
}
