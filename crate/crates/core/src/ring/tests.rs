use num_bigint::BigInt;
use num_rational::BigRational;

use super::decompose::*;
use super::milnor_square::*;
use super::*;

fn z() -> Ring {
    Ring::integers()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Independent oracle: the image of an element of `Z[1/m]` in `Q`.
fn to_q(x: &RingElement) -> BigRational {
    Ring::rationals().coerce(x).unwrap().value().clone().try_into_rat()
}

trait IntoRat {
    fn try_into_rat(self) -> BigRational;
}

impl IntoRat for Value {
    fn try_into_rat(self) -> BigRational {
        match self {
            Value::Rat(r) => r,
            other => panic!("not rational: {other:?}"),
        }
    }
}

#[test]
fn basic_arithmetic() {
    assert_eq!(&z().from_i64(2) + &z().from_i64(3), z().from_i64(5));
    let f5 = Ring::prime_field(5).unwrap();
    assert_eq!(&f5.from_i64(3) * &f5.from_i64(4), f5.from_i64(2));
    let z2 = Ring::localization(&z(), &z().from_i64(2)).unwrap();
    let x = &z2.parse("3/2").unwrap() + &z2.parse("1/4").unwrap();
    assert_eq!(x.value(), &Value::Frac(Box::new(Value::Int(7.into())), 2));
}

#[test]
fn localization_cancels() {
    let z2 = Ring::localization(&z(), &z().from_i64(2)).unwrap();
    let x = z2.parse("6/4").unwrap();
    assert_eq!(x, z2.parse("3/2").unwrap());
    assert_eq!(z2.parse("8/2^3").unwrap(), z2.one());
    assert!(z2.from_i64(4).is_unit());
    assert!(!z2.from_i64(3).is_unit());
    assert_eq!(z2.from_i64(8).inverse().unwrap().to_string(), "1/2^3");
    // Composite multiplier: cancellation still reaches the minimal exponent.
    let z6 = Ring::localization(&z(), &z().from_i64(6)).unwrap();
    assert_eq!(z6.parse("2/3").unwrap().value(), &Value::Frac(Box::new(Value::Int(4.into())), 1));
}

#[test]
fn mismatched_rings_error() {
    let f5 = Ring::prime_field(5).unwrap();
    let e = z().one().try_add(&f5.one()).unwrap_err();
    assert!(matches!(e, Error::MismatchedRings(..)));
    assert!(matches!(z().from_i64(2).inverse(), Err(Error::NotUnit(_))));
    assert!(Ring::prime_field(6).is_err());
}

#[test]
fn quotients() {
    let z6 = Ring::integers_mod(6).unwrap();
    assert_eq!(&z6.from_i64(4) * &z6.from_i64(5), z6.from_i64(2));
    assert!(!z6.from_i64(3).is_unit());
    let zero_ring = Ring::integers_mod(1).unwrap();
    assert!(zero_ring.one().is_zero());
    let r = Ring::parse_spec("Z[t]/(t^3)").unwrap();
    let t = r.var("t").unwrap();
    assert!(t.pow(3).is_zero());
    let u = &r.one() + &t;
    let inv = u.inverse().unwrap();
    assert_eq!(inv, r.parse("1 - t + t^2").unwrap());
    assert!(!(&r.from_i64(2) + &t).is_unit());
}

#[test]
fn parse_and_display_roundtrip() {
    for spec in [
        "Z",
        "Q",
        "F_7",
        "Z/(6)",
        "Z[t]",
        "F_5[x,y]",
        "Z[1/2]",
        "Z[1/2][1/3]",
        "Z[t]/(t^3)",
        "prod(Z, F_3)",
        "milnor(Z, 2)",
    ] {
        let r = Ring::parse_spec(spec).unwrap();
        assert_eq!(Ring::parse_spec(&r.to_string()).unwrap(), r, "{spec}");
    }
    let r = Ring::parse_spec("Z[1/2][x,y]").unwrap();
    let x = r.parse("(3/2)*x^2*y - 5x + 7/4").unwrap();
    assert_eq!(r.parse(&x.to_string()).unwrap(), x);
    let p = Ring::parse_spec("prod(Z, F_3)").unwrap();
    assert_eq!(p.parse("(2, 2)").unwrap(), p.from_i64(2));
}

#[test]
fn json_roundtrip() {
    let r = Ring::parse_spec("milnor(F_3[s], s)").unwrap();
    let x = r.parse("(s^2, t^2/s)").unwrap();
    let j = x.to_json();
    assert_eq!(RingElement::from_json(&j).unwrap(), x);
    let r = Ring::parse_spec("Z[t]/(t^3)").unwrap();
    let x = r.parse("2 - t^2").unwrap();
    assert_eq!(RingElement::from_json(&x.to_json()).unwrap(), x);
}

#[test]
fn pullback_examples() {
    let z2 = Ring::localization(&z(), &z().from_i64(2)).unwrap();
    let poly = Ring::polynomial(&z2, &["t"]).unwrap();
    let x = z().from_i64(3);
    let g = poly.parse("3 + t/2").unwrap();
    let p = milnor_square_pullback(&x, &g).unwrap();
    assert_eq!(p.to_string(), "(3, (1/2)*t)");
    assert_eq!(e_projection(&p).unwrap(), x);
    assert_eq!(l_projection(&p).unwrap(), g);

    let bad = poly.parse("5 + t").unwrap();
    assert!(matches!(milnor_square_pullback(&x, &bad), Err(Error::Precondition(_))));

    let f3s = Ring::parse_spec("F_3[s]").unwrap();
    let s = f3s.var("s").unwrap();
    let fs = Ring::localization(&f3s, &s).unwrap();
    let ps = Ring::polynomial(&fs, &["t"]).unwrap();
    let x = s.pow(2);
    let g = ps.parse("s^2 + s^-1*t^2").unwrap();
    let p = milnor_square_pullback(&x, &g).unwrap();
    assert_eq!(e_projection(&p).unwrap(), x);
    assert_eq!(l_projection(&p).unwrap(), g);
}

#[test]
fn semidirect_multiplication_matches_legs() {
    use rand::SeedableRng;
    let r = Ring::parse_spec("milnor(Z, 2)").unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let a = r.random_element(&mut rng, 5);
        let b = r.random_element(&mut rng, 5);
        let ab = &a * &b;
        assert_eq!(e_projection(&ab).unwrap(), &e_projection(&a).unwrap() * &e_projection(&b).unwrap());
        assert_eq!(l_projection(&ab).unwrap(), &l_projection(&a).unwrap() * &l_projection(&b).unwrap());
    }
}

#[test]
fn bezout_examples() {
    let z2 = Ring::localization(&z(), &z().from_i64(2)).unwrap();
    let b = z().from_i64(3);
    let c = z2.parse("5/2").unwrap();
    let (p, i) = bezout_decompose(&c, &b, 1).unwrap();
    assert_eq!(to_q(&p), q(15, 2));
    assert_eq!(i, z().from_i64(-5));
    assert_eq!(to_q(&p) + to_q(&i), q(5, 2));

    let (p, i) = bezout_decompose(&z2.from_i64(7), &b, 0).unwrap();
    assert!(p.is_zero());
    assert_eq!(i, z().from_i64(7));

    let f5x = Ring::parse_spec("F_5[x]").unwrap();
    let x = f5x.var("x").unwrap();
    let loc = Ring::localization(&f5x, &x).unwrap();
    let c = loc.parse("1/x^2").unwrap();
    let b = f5x.parse("x + 1").unwrap();
    let (p, i) = bezout_decompose(&c, &b, 2).unwrap();
    assert_eq!(&p + &loc.coerce(&i).unwrap(), c);
    // The principal part lies in b^2 R_a.
    assert!(p.try_div(&loc.coerce(&b.pow(2)).unwrap()).is_ok());

    assert!(matches!(bezout_decompose(&z2.parse("1/2").unwrap(), &z().from_i64(4), 1), Err(Error::NotCoprime(..))));
    assert!(matches!(bezout_decompose(&z2.parse("1/4").unwrap(), &b, 1), Err(Error::ExponentTooSmall { .. })));
}

#[test]
fn decompose_modulo_power_examples() {
    let datum = PatchingDatum::zariski(&z(), &z().from_i64(2), &z().from_i64(3)).unwrap();
    let a_ring = datum.a_ring().clone();
    let c = a_ring.parse("5/2").unwrap();
    let (a, b) = decompose_modulo_power(&datum, &c, 1).unwrap();
    assert_eq!(b, z().from_i64(-5));
    assert_eq!(to_q(&a) * q(3, 1) + to_q(&b), q(5, 2));

    let c = a_ring.parse("1/4").unwrap();
    let (a, b) = decompose_modulo_power(&datum, &c, 2).unwrap();
    assert_eq!(b, z().from_i64(-2));
    assert_eq!(to_q(&a) * q(9, 1) + to_q(&b), q(1, 4));

    let id = PatchingDatum::identity(&z(), &z().from_i64(3)).unwrap();
    let (a, b) = decompose_modulo_power(&id, &z().from_i64(11), 4).unwrap();
    assert!(a.is_zero());
    assert_eq!(b, z().from_i64(11));
}

#[test]
fn reciprocal_witness_examples() {
    let zt = Ring::parse_spec("Z[t]").unwrap();
    let f = zt.parse("t^2 + 3t + 2").unwrap();
    let g = reciprocal_localization_witness(&f).unwrap();
    assert_eq!(g.to_string(), "2*t_inv^2 + 3*t_inv + 1");
    assert!(reciprocal_reconstructs(&f, &g));

    let g = reciprocal_localization_witness(&zt.var("t").unwrap()).unwrap();
    assert!(g.is_one());

    let f7 = Ring::parse_spec("F_7[t]").unwrap();
    let f = f7.parse("t^3 - 1").unwrap();
    let g = reciprocal_localization_witness(&f).unwrap();
    assert_eq!(g, g.ring().parse("1 - t_inv^3").unwrap());
    assert!(reciprocal_reconstructs(&f, &g));

    assert!(reciprocal_localization_witness(&zt.parse("2t + 1").unwrap()).is_err());
}

#[test]
fn homomorphisms() {
    let r = Ring::parse_spec("Z[t1,t2]").unwrap();
    let x = r.parse("t1*t2").unwrap();
    let h = RingHom::substitute(&r, &r, &[("t1", r.parse("1 - t1").unwrap()), ("t2", r.parse("t1").unwrap())]).unwrap();
    assert_eq!(h.apply(&x).unwrap(), r.parse("t1 - t1^2").unwrap());

    let p = Ring::parse_spec("prod(Z, F_3)").unwrap();
    let e = p.parse("(1, 0)").unwrap();
    assert!(RingHom::project_right(&p).unwrap().apply(&e).unwrap().is_zero());

    let quot = Ring::parse_spec("Z[t]/(t^2 - t)").unwrap();
    assert!(RingHom::evaluate_at(&quot, "t", &z().from_i64(1)).is_ok());
    assert!(RingHom::evaluate_at(&quot, "t", &z().from_i64(2)).is_err());

    let z2 = Ring::parse_spec("Z[1/2]").unwrap();
    let z23 = Ring::parse_spec("Z[1/2][1/3]").unwrap();
    let z3 = Ring::parse_spec("Z[1/3]").unwrap();
    assert_eq!(z23.coerce(&z3.parse("1/3").unwrap()).unwrap(), z23.parse("1/3").unwrap());
    assert!(z2.coerce(&z3.parse("1/3").unwrap()).is_err());
}

#[test]
fn ideals() {
    let i = Ideal::new(&z(), vec![z().from_i64(4), z().from_i64(6)]).unwrap();
    assert!(i.contains(&z().from_i64(10)).unwrap());
    assert!(!i.contains(&z().from_i64(3)).unwrap());
    let ab = Ideal::principal(&z().from_i64(2)).product(&Ideal::principal(&z().from_i64(3))).unwrap();
    assert_eq!(ab.quotient_ring().unwrap(), Ring::integers_mod(6).unwrap());
    let rng = Rng::new(Ideal::principal(&z().from_i64(9)));
    assert!(rng.element(&z().from_i64(3)).is_err());
}

#[test]
fn ring_axioms_sampled() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let specs = [
        "Z",
        "Q",
        "F_7",
        "Z/(12)",
        "Z[x,y]",
        "Z[1/6]",
        "Z[t]/(t^3)",
        "F_5[x]/(x^2 + 2)",
        "prod(Z, F_3)",
        "milnor(Z, 3)",
    ];
    for spec in specs {
        let r = Ring::parse_spec(spec).unwrap();
        for _ in 0..200 {
            let a = r.random_element(&mut rng, 6);
            let b = r.random_element(&mut rng, 6);
            let c = r.random_element(&mut rng, 6);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c), "{spec}");
            assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c), "{spec}");
            assert_eq!(&a * &b, &b * &a, "{spec}");
            assert_eq!(&(&a - &b) + &b, a, "{spec}");
            if let Ok(d) = (&a * &b).try_div(&b) {
                assert_eq!(&d * &b, &a * &b, "{spec}");
            }
        }
    }
}
