use steinberg_lab::roots::RootSum;
use steinberg_lab::{RootSystem, RootSystemType};

mod common;
use common::{bracket, oracle_matrix, proportionality, Dense};

#[test]
fn constants_match_commutator_oracle() {
    for name in ["A2", "A3", "A4", "D4", "D5"] {
        let phi = RootSystem::parse(name).unwrap();
        let mats: Vec<Dense> = phi.roots().iter().map(|r| oracle_matrix(&phi, r)).collect();
        let mut pairs = 0;
        for a in 0..phi.len() {
            for b in 0..phi.len() {
                match phi.sum_index(a, b) {
                    Some(c) => {
                        let n = proportionality(&bracket(&mats[a], &mats[b]), &mats[c]);
                        assert_eq!(n, phi.constant(a, b).map(i64::from), "{name}: N({}, {})", phi.root(a), phi.root(b));
                        pairs += 1;
                    }
                    None => assert_eq!(phi.constant(a, b), None),
                }
            }
        }
        assert!(pairs > 0);
    }
}

#[test]
fn a2_simple_constants() {
    let phi = RootSystem::parse("A2").unwrap();
    let a1 = phi.parse_root("e1-e2").unwrap();
    let a2 = phi.parse_root("e2-e3").unwrap();
    assert_eq!(phi.constant(a1, a2), Some(1));
    assert_eq!(phi.constant(a2, a1), Some(-1));
    assert_eq!(phi.constants_table().len(), 12);
    assert_eq!(phi.constants_table().iter().filter(|r| r.0 < r.1).count(), 6);
}

#[test]
fn root_sums() {
    let phi = RootSystem::parse("A2").unwrap();
    let r = |s: &str| phi.root(phi.parse_root(s).unwrap()).clone();
    assert_eq!(phi.root_sum(&r("e1-e2"), &r("e2-e3")).unwrap(), RootSum::Root(r("e1-e3")));
    assert_eq!(phi.root_sum(&r("e1-e2"), &r("e1-e3")).unwrap(), RootSum::None);
    for a in phi.roots() {
        assert_eq!(phi.root_sum(a, &a.neg()).unwrap(), RootSum::Opposite);
    }
}

#[test]
fn sizes_and_simple_roots() {
    assert_eq!(RootSystem::parse("D4").unwrap().len(), 24);
    for phi in RootSystem::all_supported() {
        let l = phi.rank();
        let expected = match phi.system_type() {
            RootSystemType::A => l * (l + 1),
            RootSystemType::D => 2 * l * (l - 1),
        };
        assert_eq!(phi.len(), expected, "{}", phi.name());
        assert_eq!(phi.simple_roots().len(), l);
        for i in 0..phi.len() {
            let c = phi.simple_coefficients(i);
            assert!(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0));
            assert_eq!(phi.is_positive(i), c.iter().all(|&x| x >= 0));
            assert_eq!(phi.neg(phi.neg(i)), i);
        }
    }
}

#[test]
fn commutator_decompositions() {
    let a3 = RootSystem::parse("A3").unwrap();
    let beta = a3.root(a3.parse_root("e1-e4").unwrap()).clone();
    let (g, d) = a3.commutator_decomposition(&beta).unwrap();
    assert_eq!(g.to_string(), "e1-e2");
    assert_eq!(d.to_string(), "e2-e4");

    let d4 = RootSystem::parse("D4").unwrap();
    let beta = d4.root(d4.parse_root("e1+e2").unwrap()).clone();
    let (g, d) = d4.commutator_decomposition(&beta).unwrap();
    assert_eq!(g.to_string(), "e1-e3");
    assert_eq!(d.to_string(), "e2+e3");

    for phi in [a3, d4] {
        for b in 0..phi.len() {
            let (g, d) = phi.decomposition_index(b).unwrap();
            assert_eq!(phi.sum_index(g, d), Some(b));
            assert!(phi.constant(g, d).is_some());
        }
    }
}

#[test]
fn unsupported_systems_rejected() {
    assert!(RootSystem::build(RootSystemType::A, 1).is_err());
    assert!(RootSystem::build(RootSystemType::D, 3).is_err());
    assert!(RootSystem::parse("C3").is_err());
    assert!(RootSystem::parse("A9").is_err());
}
