//! A sweep touching every public operation once, at reduced or full sample counts.

#![allow(clippy::redundant_closure_call)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::milnor::{self, MilnorSymbolSum};
use crate::patching::{conj_on_generator, conj_word, Patcher};
use crate::rep::{verify_relations, Representation};
use crate::ring::decompose::{
    bezout_decompose, decompose_modulo_power, reciprocal_localization_witness, reciprocal_reconstructs, PatchingDatum,
};
use crate::ring::milnor_square::{e_projection, l_projection, milnor_square_pullback};
use crate::ring::{Ideal, Ring, RingHom};
use crate::roots::{RootSum, RootSystem};
use crate::simplicial::{self, MooreGenerator, SimplicialLevel};
use crate::words::{check_congruence_lemma_in, SteinbergWord, SymbolWord};

/// One line of the self-test.
#[derive(Clone, Debug, Serialize)]
pub struct SelfCheck {
    pub module: &'static str,
    pub op: &'static str,
    pub passed: bool,
    pub detail: String,
}

struct Sink(Vec<SelfCheck>);

impl Sink {
    fn add(&mut self, module: &'static str, op: &'static str, r: Result<(bool, String)>) {
        let (passed, detail) = r.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.0.push(SelfCheck { module, op, passed, detail });
    }
}

/// Run the sweep; `quick` keeps every sample count small.
pub fn selftest(quick: bool, seed: u64) -> Vec<SelfCheck> {
    let n = if quick { 5 } else { 50 };
    let mut sink = Sink(Vec::new());
    rings(&mut sink, n, seed);
    roots(&mut sink);
    words(&mut sink, seed);
    reps(&mut sink, n, seed, quick);
    milnor_k2(&mut sink);
    simplicial_checks(&mut sink);
    patching(&mut sink, n, seed);
    sink.0
}

fn rings(sink: &mut Sink, n: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sink.add(
        "exact_rings",
        "ring_ops",
        (|| {
            let mut ok = true;
            for spec in ["Z", "Q", "F_7", "Z/6", "Z[t]/(t^3)", "Z[1/2]", "F_5[s]"] {
                let r = Ring::parse_spec(spec)?;
                for _ in 0..n {
                    let a = r.random_element(&mut rng, 5);
                    let b = r.random_element(&mut rng, 5);
                    ok &= &(&a + &b) - &b == a && &a * &b == &b * &a && -(-&a) == a;
                    if !b.is_zero() {
                        if let Ok(q) = (&a * &b).try_div(&b) {
                            ok &= &q * &b == &a * &b;
                        }
                    }
                }
            }
            Ok((ok, "add/sub/mul/neg/div over seven rings".into()))
        })(),
    );
    sink.add(
        "exact_rings",
        "milnor_square_pullback",
        (|| {
            let z = Ring::integers();
            let za = Ring::localization(&z, &z.from_i64(2))?;
            let zat = Ring::polynomial(&za, &["t"])?;
            let g = zat.parse("3 + t/2 - 5*t^2")?;
            let p = milnor_square_pullback(&z.from_i64(3), &g)?;
            Ok((e_projection(&p)? == z.from_i64(3) && l_projection(&p)? == g, format!("{p}")))
        })(),
    );
    sink.add(
        "exact_rings",
        "bezout_decompose",
        (|| {
            let z = Ring::integers();
            let za = Ring::localization(&z, &z.from_i64(2))?;
            let c = za.parse("7/8")?;
            let (p, i) = bezout_decompose(&c, &z.from_i64(3), 3)?;
            Ok((&p + &za.coerce(&i)? == c, format!("7/8 = {p} + {i}")))
        })(),
    );
    sink.add(
        "exact_rings",
        "reciprocal_localization_witness",
        (|| {
            let zt = Ring::polynomial(&Ring::integers(), &["t"])?;
            let f = zt.parse("t^3 - 2*t + 5")?;
            let g = reciprocal_localization_witness(&f)?;
            Ok((reciprocal_reconstructs(&f, &g), format!("{g}")))
        })(),
    );
    sink.add(
        "exact_rings",
        "decompose_modulo_power",
        (|| {
            let z = Ring::integers();
            let d = PatchingDatum::zariski(&z, &z.from_i64(2), &z.from_i64(3))?;
            let c = d.a_ring().parse("5/16")?;
            let (a, b) = decompose_modulo_power(&d, &c, 4)?;
            let back = &(&a * &d.iota(&z.from_i64(81))?) + &d.iota(&b)?;
            Ok((back == c, format!("5/16 = ({a})*3^4 + {b}")))
        })(),
    );
}

fn roots(sink: &mut Sink) {
    sink.add(
        "root_systems",
        "build_root_system",
        (|| {
            let all = RootSystem::all_supported();
            let ok = all.iter().all(|s| {
                let r = s.rank();
                let expected = match s.system_type() {
                    crate::roots::RootSystemType::A => r * (r + 1),
                    crate::roots::RootSystemType::D => 2 * r * (r - 1),
                };
                s.len() == expected
            });
            Ok((ok, format!("{} systems", all.len())))
        })(),
    );
    sink.add(
        "root_systems",
        "root_sum",
        (|| {
            let phi = RootSystem::parse("A2")?;
            let (a, b) = (phi.root(phi.simple_roots()[0]).clone(), phi.root(phi.simple_roots()[1]).clone());
            let ok =
                matches!(phi.root_sum(&a, &b)?, RootSum::Root(_)) && phi.root_sum(&a, &a.neg())? == RootSum::Opposite;
            Ok((ok, "A2 simple roots".into()))
        })(),
    );
    sink.add(
        "root_systems",
        "commutator_decomposition",
        (|| {
            let mut ok = true;
            for phi in [RootSystem::parse("A3")?, RootSystem::parse("D4")?] {
                for r in phi.roots() {
                    let (g, d) = phi.commutator_decomposition(r)?;
                    ok &= &g.add(&d) == r;
                }
            }
            Ok((ok, "A3, D4".into()))
        })(),
    );
}

fn words(sink: &mut Sink, seed: u64) {
    let f7 = Ring::prime_field(7).unwrap();
    let phi = RootSystem::parse("A3").unwrap();
    let rep = Representation::adjoint(&phi);
    sink.add(
        "steinberg_words",
        "gen/inverse/concat",
        (|| {
            let w = SteinbergWord::from_letters(&f7, &phi, [(0, f7.from_i64(3), 1), (5, f7.from_i64(2), 1)])?;
            Ok((rep.k2_membership(&w.concat(&w.inverse())?), format!("{w}")))
        })(),
    );
    sink.add(
        "steinberg_words",
        "commutator_reduce",
        (|| {
            let w = SteinbergWord::from_letters(
                &f7,
                &phi,
                [(4, f7.from_i64(3), 1), (0, f7.from_i64(2), 1), (3, f7.one(), 1)],
            )?;
            let r = w.commutator_reduce();
            Ok((rep.evaluate(&r) == rep.evaluate(&w), format!("{r}")))
        })(),
    );
    sink.add(
        "steinberg_words",
        "weyl/torus/symbol",
        (|| {
            let s = SteinbergWord::symbol(&f7, &phi, 0, &f7.from_i64(3), &f7.from_i64(5))?;
            let t = SteinbergWord::torus(&f7, &phi, 0, &f7.from_i64(3))?;
            let w = SteinbergWord::weyl(&f7, &phi, 0, &f7.from_i64(3))?;
            let ok = rep.k2_membership(&s) && !rep.k2_membership(&t) && !rep.k2_membership(&w);
            Ok((ok, "symbol in the kernel, torus and Weyl elements not".into()))
        })(),
    );
    sink.add(
        "steinberg_words",
        "y_element",
        (|| {
            let y = SteinbergWord::y_element(&f7, &phi, 0, &f7.from_i64(2), &f7.from_i64(3))?;
            Ok((y.len() == 4, format!("{y}")))
        })(),
    );
    sink.add(
        "steinberg_words",
        "substitute",
        (|| {
            let zt = Ring::polynomial(&Ring::integers(), &["t"])?;
            let w = SteinbergWord::gen(&zt, &phi, 2, zt.parse("t^2 + 1")?)?;
            let ev = RingHom::evaluate_at(&zt, "t", &Ring::integers().from_i64(2))?;
            let s = w.substitute(&ev)?;
            Ok((s.letters()[0].arg == Ring::integers().from_i64(5), format!("{s}")))
        })(),
    );
    sink.add(
        "steinberg_words",
        "check_congruence_lemma",
        (|| {
            let z = Ring::integers();
            let a2 = RootSystem::parse("A2")?;
            let sl = Representation::defining(&a2)?;
            let (a, b, c) = (z.from_i64(6), z.from_i64(5), z.from_i64(7 + seed as i64 % 5));
            let ok = check_congruence_lemma_in(&sl, 0, &a, &b, &c, &Ideal::principal(&a), &Ideal::principal(&b))?;
            Ok((ok, "A2, a = 6, b = 5".into()))
        })(),
    );
}

fn reps(sink: &mut Sink, n: usize, seed: u64, quick: bool) {
    sink.add(
        "representations",
        "evaluate",
        (|| {
            let phi = RootSystem::parse("A2")?;
            let z = Ring::integers();
            let m = Representation::defining(&phi)?.unipotent(0, &z.from_i64(4));
            Ok((m.off_identity().len() == 1, format!("{}", m.to_json())))
        })(),
    );
    sink.add(
        "representations",
        "k2_membership",
        (|| {
            let f5 = Ring::prime_field(5)?;
            let phi = RootSystem::parse("D4")?;
            let s = SteinbergWord::symbol(&f5, &phi, 3, &f5.from_i64(2), &f5.from_i64(3))?;
            Ok((Representation::vector(&phi)?.k2_membership(&s), "D4 vector over F_5".into()))
        })(),
    );
    sink.add(
        "representations",
        "verify_relations",
        (|| {
            let systems = if quick {
                vec![RootSystem::parse("A2")?, RootSystem::parse("D4")?]
            } else {
                RootSystem::all_supported()
            };
            let ring = Ring::integers_mod(6)?;
            let mut checks = 0;
            let mut ok = true;
            for phi in &systems {
                for rep in Representation::all_for(phi) {
                    let r = verify_relations(&rep, &ring, n, seed);
                    checks += r.checks;
                    ok &= r.passed();
                }
            }
            Ok((ok, format!("{checks} checks over Z/6")))
        })(),
    );
}

fn milnor_k2(sink: &mut Sink) {
    let q = Ring::rationals();
    sink.add(
        "milnor_k2",
        "tame_symbol",
        (|| {
            let s = MilnorSymbolSum::parse(&q, "2,3")?;
            let t = milnor::tame_symbol(&s, 3)?;
            Ok((t.value == 2, format!("d_3{{2,3}} = {}", t.value)))
        })(),
    );
    sink.add(
        "milnor_k2",
        "symbol_normalize",
        (|| {
            let s = MilnorSymbolSum::parse(&q, "{3, -2}; {5, -4}")?;
            let n = milnor::symbol_normalize(&s);
            Ok((milnor::tame_equivalent(&s, &n)?, format!("{n}")))
        })(),
    );
    sink.add(
        "milnor_k2",
        "steinberg_to_milnor",
        (|| {
            let f7 = Ring::prime_field(7)?;
            let phi = RootSystem::parse("A2")?;
            let w = SymbolWord::symbol(&f7, &phi, 0, &f7.from_i64(3), &f7.from_i64(2))?;
            let s = milnor::steinberg_to_milnor(&w)?;
            let back = milnor::steinberg_word_to_milnor(w.word(), 0)?;
            Ok((s == back && s.terms().len() == 1, format!("{s}")))
        })(),
    );
}

fn simplicial_checks(sink: &mut Sink) {
    let z = Ring::integers();
    sink.add(
        "simplicial_homotopy",
        "face/degeneracy",
        (|| {
            // d0 d1 = d0 d0 on R[Δ²] and d0 s0 = id on R[Δ¹].
            let l2 = SimplicialLevel::new(&z, 2)?;
            let l1 = SimplicialLevel::new(&z, 1)?;
            let x = &l2.t(1)? * &l2.t(2)?;
            let d01 = simplicial::face(&z, 0, 1)?.apply(&l2.face(1)?.apply(&x)?)?;
            let d00 = simplicial::face(&z, 0, 1)?.apply(&l2.face(0)?.apply(&x)?)?;
            let t = l1.t(1)?;
            let ds = l2.face(0)?.apply(&simplicial::degeneracy(&z, 0, 1)?.apply(&t)?)?;
            Ok((d01 == d00 && ds == t, format!("d0 s0 t1 = {ds}")))
        })(),
    );
    sink.add(
        "simplicial_homotopy",
        "simplicial_identity_check",
        (|| {
            let r = simplicial::simplicial_identity_check(&Ring::prime_field(7)?, 3)?;
            Ok((r.passed(), format!("{} checks", r.checks)))
        })(),
    );
    sink.add(
        "simplicial_homotopy",
        "moore_lift",
        (|| {
            let phi = RootSystem::parse("A2")?;
            let l1 = SimplicialLevel::new(&z, 1)?;
            let f = l1.ring().parse("2*t1 + 1")?;
            let g = SteinbergWord::gen(l1.ring(), &phi, 1, l1.ring().parse("t1")?)?;
            let gen = MooreGenerator::level1(&phi, 0, &f, &g)?;
            let lift = simplicial::moore_lift(&gen)?;
            Ok((simplicial::check_lift(&gen, &lift)?.passed(false), format!("{}", lift.word)))
        })(),
    );
    sink.add(
        "simplicial_homotopy",
        "pi0_connectivity_witness",
        (|| {
            let phi = RootSystem::parse("A2")?;
            let w = simplicial::pi0_connectivity_witness(&phi, 0, &z.from_i64(4))?;
            let l1 = SimplicialLevel::new(&z, 1)?;
            let d0 = w.substitute(&l1.face(0)?)?;
            let d1 = w.substitute(&l1.face(1)?)?;
            Ok((d1.is_empty() && d0 == SteinbergWord::gen(&z, &phi, 0, z.from_i64(4))?, format!("{w}")))
        })(),
    );
    sink.add(
        "simplicial_homotopy",
        "crt",
        (|| {
            let q = simplicial::crt_quotient(&z)?;
            let f = q.parse("3*t1^2 - t1 + 2")?;
            let back = simplicial::crt_from_pair(&simplicial::crt_to_pair(&f)?)?;
            Ok((back == f, format!("{f}")))
        })(),
    );
}

fn patching(sink: &mut Sink, n: usize, seed: u64) {
    let z = Ring::integers();
    let phi = RootSystem::parse("A3").unwrap();
    sink.add(
        "patching_progroups",
        "conj_on_generator",
        (|| {
            let zh = Ring::localization(&z, &z.from_i64(2))?;
            let g = SteinbergWord::gen(&zh, &phi, 0, zh.parse("3/2")?)?;
            let x = conj_on_generator(&z, &z.from_i64(2), &g, phi.neg(0), &z.one(), 4)?;
            let rep = Representation::adjoint(&phi);
            let xg = SteinbergWord::gen(&zh, &phi, phi.neg(0), zh.from_i64(16))?;
            let rhs = rep.evaluate(&SteinbergWord::conjugate(&g, &xg)?);
            Ok((rep.evaluate(&x.coerce_into(&zh)?) == rhs, format!("{} letters", x.len())))
        })(),
    );
    sink.add(
        "patching_progroups",
        "conj_word",
        (|| {
            let zh = Ring::localization(&z, &z.from_i64(3))?;
            let g = SteinbergWord::from_letters(&zh, &phi, [(0, zh.parse("1/3")?, 1), (4, zh.parse("2/3")?, 1)])?;
            let hom = crate::patching::ConjHom::new(&z, &z.from_i64(3), &g)?;
            let w = SteinbergWord::gen(&z, &phi, phi.neg(4), z.from_i64(3i64.pow(hom.bound())))?;
            let (_, bound) = conj_word(&z, &z.from_i64(3), &g, &w, hom.bound())?;
            let (l, r) = hom.strict_sides(&w, bound, &Representation::adjoint(&phi), &Ring::rationals())?;
            Ok((l == r, format!("n(g) = {bound}")))
        })(),
    );
    let patch = match Patcher::zariski_integers(2, 3, &phi) {
        Ok(p) => p,
        Err(e) => {
            sink.add("patching_progroups", "setup", Err(e));
            return;
        }
    };
    sink.add(
        "patching_progroups",
        "star_reduce",
        (|| {
            let g = SteinbergWord::gen(&z, &phi, 1, z.from_i64(5))?;
            let q = patch.star_reduce(&patch.base_point(), &g)?;
            Ok((patch.mu(&q)?.is_identity(), format!("[{}, {}]", q.u, q.v)))
        })(),
    );
    sink.add(
        "patching_progroups",
        "T_alpha",
        (|| {
            let u = SteinbergWord::gen(patch.b_h(), &phi, 2, patch.b_h().parse("1/3")?)?;
            let p = patch.pair(&u, &SteinbergWord::empty(patch.a_ring(), &phi))?;
            let c = patch.a_ring().parse("1/4")?;
            let q = patch.t_alpha(0, &c, 0, &p)?;
            let x = SteinbergWord::gen(patch.a_ring(), &phi, 0, c)?;
            Ok((patch.mu(&q)? == patch.evaluate(&x)?.mul(&patch.mu(&p)?)?, format!("[{}, {}]", q.u, q.v)))
        })(),
    );
    sink.add(
        "patching_progroups",
        "verify_T_relations",
        (|| {
            let reports = patch.verify_all(n, seed)?;
            let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.check.as_str()).collect();
            Ok((failed.is_empty(), format!("{} sweeps, failed: {failed:?}", reports.len())))
        })(),
    );
    sink.add(
        "patching_progroups",
        "glueing_demo",
        (|| {
            let s = SteinbergWord::symbol(&z, &phi, 0, &-z.one(), &-z.one())?;
            let out = patch.glueing_demo(&s.coerce_into(patch.a_ring())?, None)?;
            Ok((out.descended && out.y == s, format!("{} letters", out.y.len())))
        })(),
    );
}
