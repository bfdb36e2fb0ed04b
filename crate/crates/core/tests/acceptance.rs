//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.
//!
//! Every sample count, tolerance and time bound is pinned below. All comparisons are
//! exact, so the tolerance is zero throughout.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng as _, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use steinberg_lab::milnor::{relevant_primes, tame_symbol, MilnorSymbolSum};
use steinberg_lab::patching::Patcher;
use steinberg_lab::rep::verify_relations;
use steinberg_lab::ring::decompose::{
    decompose_modulo_power, reciprocal_localization_witness, reciprocal_reconstructs, PatchingDatum,
};
use steinberg_lab::ring::milnor_square::{e_projection, l_projection, milnor_square_pullback};
use steinberg_lab::simplicial::{
    check_lift, crt_from_pair, crt_quotient, crt_to_pair, moore_lift, simplicial_identity_check, MooreGenerator,
    SimplicialLevel,
};
use steinberg_lab::words::check_congruence_lemma_in;
use steinberg_lab::{Ideal, Representation, Result, Ring, RingElement, RingHom, RootSystem, SteinbergWord, SymbolWord};

const SEED: u64 = 20_240_601;

struct Criterion {
    id: u8,
    name: &'static str,
    bound: Duration,
    run: fn() -> Result<(bool, String)>,
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, name: "structure constants", bound: Duration::from_secs(10), run: structure_constants },
    Criterion { id: 2, name: "relation validity", bound: Duration::from_secs(60), run: relation_validity },
    Criterion { id: 3, name: "symbol suite", bound: Duration::from_secs(10), run: symbol_suite },
    Criterion { id: 4, name: "Matsumoto consistency", bound: Duration::from_secs(10), run: matsumoto },
    Criterion { id: 5, name: "Milnor square", bound: Duration::from_secs(5), run: milnor_square },
    Criterion { id: 6, name: "Bezout/decomposition", bound: Duration::from_secs(5), run: decomposition },
    Criterion { id: 7, name: "simplicial suite", bound: Duration::from_secs(30), run: simplicial_suite },
    Criterion { id: 8, name: "conjugation homomorphisms", bound: Duration::from_secs(120), run: conjugation },
    Criterion { id: 9, name: "T-operator suite", bound: Duration::from_secs(300), run: t_operators },
    Criterion { id: 10, name: "congruence lemma", bound: Duration::from_secs(30), run: congruence },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let t = Instant::now();
        let outcome = (c.run)();
        let elapsed = t.elapsed();
        let (ok, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        let in_time = elapsed <= c.bound;
        let pass = ok && in_time;
        failed += usize::from(!pass);
        println!(
            "{} [{:>2}] {:<26} {:>8.2?} (bound {:?}){}  {detail}",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed,
            c.bound,
            if in_time { "" } else { " TIME EXCEEDED" },
        );
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn systems(names: &[&str]) -> Result<Vec<RootSystem>> {
    names.iter().map(|n| RootSystem::parse(n)).collect()
}

fn structure_constants() -> Result<(bool, String)> {
    let mut pairs = 0;
    let mut mismatches = 0;
    for phi in systems(&["A2", "A3", "A4", "A5", "D4", "D5", "D6"])? {
        let mats: Vec<common::Dense> = phi.roots().iter().map(|r| common::oracle_matrix(&phi, r)).collect();
        for a in 0..phi.len() {
            for b in 0..phi.len() {
                let Some(c) = phi.sum_index(a, b) else { continue };
                pairs += 1;
                let n = common::proportionality(&common::bracket(&mats[a], &mats[b]), &mats[c]);
                if n != phi.constant(a, b).map(i64::from) {
                    mismatches += 1;
                }
            }
        }
    }
    Ok((mismatches == 0 && pairs > 0, format!("{pairs} pairs, {mismatches} mismatches")))
}

fn relation_validity() -> Result<(bool, String)> {
    const SAMPLES: usize = 100;
    let rings = [Ring::integers_mod(6)?, Ring::prime_field(7)?, Ring::parse_spec("Z[t]/(t^3)")?];
    let mut checks = 0;
    let mut violations = 0;
    let mut sweeps = 0;
    for phi in RootSystem::all_supported() {
        for rep in Representation::all_for(&phi) {
            for ring in &rings {
                let r = verify_relations(&rep, ring, SAMPLES, SEED);
                checks += r.checks;
                violations += r.violations.len();
                sweeps += 1;
            }
        }
    }
    Ok((violations == 0, format!("{sweeps} sweeps, {checks} checks, {violations} violations")))
}

fn random_rational(q: &Ring, rng: &mut ChaCha8Rng) -> Result<RingElement> {
    loop {
        let n: i64 = rng.gen_range(-2000..=2000);
        let d: i64 = rng.gen_range(1..=500);
        if n != 0 {
            return q.parse(&format!("{n}/{d}"));
        }
    }
}

fn symbol_suite() -> Result<(bool, String)> {
    const SYMBOLS: usize = 1000;
    let q = Ring::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = 0;
    let mut violations = 0;
    for _ in 0..SYMBOLS {
        let a = random_rational(&q, &mut rng)?;
        let a2 = random_rational(&q, &mut rng)?;
        let b = random_rational(&q, &mut rng)?;
        let ab = MilnorSymbolSum::symbol(&a, &b)?;
        let ba = MilnorSymbolSum::symbol(&b, &a)?;
        let a2b = MilnorSymbolSum::symbol(&a2, &b)?;
        let prod = MilnorSymbolSum::symbol(&(&a * &a2), &b)?;
        let steinberg = (!a.is_one()).then(|| MilnorSymbolSum::symbol(&a, &(&q.one() - &a))).transpose()?;
        let mut primes = relevant_primes(&ab.add(&a2b)?)?;
        if let Some(s) = &steinberg {
            primes.extend(relevant_primes(s)?);
        }
        primes.extend([3, 5, 7]);
        primes.sort_unstable();
        primes.dedup();
        for p in primes {
            let d = |s: &MilnorSymbolSum| tame_symbol(s, p).map(|t| t.value);
            let (x, y, z) = (d(&ab)?, d(&a2b)?, d(&prod)?);
            let mut ok = z == x * y % p;
            ok &= d(&ab.add(&a2b)?)? == z;
            ok &= x * d(&ba)? % p == 1;
            if let Some(s) = &steinberg {
                ok &= d(s)? == 1;
            }
            checks += 1;
            violations += usize::from(!ok);
        }
    }
    let exact = tame_symbol(&MilnorSymbolSum::parse(&q, "2,3")?, 3)?.value;
    let ok = violations == 0 && exact == 2;
    Ok((ok, format!("{SYMBOLS} symbols, {checks} prime checks, {violations} violations; d3{{2,3}} = {exact}")))
}

fn matsumoto() -> Result<(bool, String)> {
    const WORDS: usize = 200;
    let fields = [Ring::prime_field(5)?, Ring::prime_field(7)?, Ring::prime_field(11)?];
    let phis = systems(&["A2", "A3", "A4", "D4", "D5"])?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = 0;
    for i in 0..WORDS {
        let f = &fields[i % fields.len()];
        let phi = &phis[rng.gen_range(0..phis.len())];
        let root = rng.gen_range(0..phi.len());
        let mut w = SymbolWord::identity(f, phi, root);
        for _ in 0..rng.gen_range(1..=3) {
            let u = f.random_unit(&mut rng as &mut dyn RngCore, 10);
            let v = f.random_unit(&mut rng as &mut dyn RngCore, 10);
            let s = SymbolWord::symbol(f, phi, root, &u, &v)?;
            w = w.mul(&if rng.gen_bool(0.3) { s.inverse() } else { s })?;
        }
        if !Representation::all_for(phi).iter().all(|rep| rep.k2_membership(w.word())) {
            failures += 1;
        }
    }
    Ok((failures == 0, format!("{WORDS} words over F5/F7/F11, {failures} outside the kernel")))
}

fn milnor_square() -> Result<(bool, String)> {
    const PAIRS: usize = 100;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let z = Ring::integers();
    let f3s = Ring::parse_spec("F_3[s]")?;
    let mut failures = 0;
    for (base, a) in [(z.clone(), z.from_i64(2)), (f3s.clone(), f3s.parse("s")?)] {
        let local = Ring::localization(&base, &a)?;
        let lt = Ring::polynomial(&local, &["t"])?;
        let t = lt.var("t")?;
        for _ in 0..PAIRS {
            let x = base.random_element(&mut rng as &mut dyn RngCore, 20);
            let h = lt.random_element(&mut rng as &mut dyn RngCore, 6);
            let g = &lt.coerce(&x)? + &(&t * &h);
            let p = milnor_square_pullback(&x, &g)?;
            if e_projection(&p)? != x || l_projection(&p)? != g {
                failures += 1;
            }
        }
    }
    Ok((failures == 0, format!("{} pairs over (Z, 2) and (F3[s], s), {failures} failures", 2 * PAIRS)))
}

fn decomposition() -> Result<(bool, String)> {
    const INSTANCES: usize = 200;
    const WITNESSES: usize = 100;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let z = Ring::integers();
    let d = PatchingDatum::zariski(&z, &z.from_i64(2), &z.from_i64(3))?;
    let mut failures = 0;
    for _ in 0..INSTANCES {
        let n: i64 = rng.gen_range(-100_000..=100_000);
        let c = d.a_ring().parse(&format!("{n}/{}", 1i64 << rng.gen_range(0..12)))?;
        let k = rng.gen_range(0..10u32);
        let (a, b) = decompose_modulo_power(&d, &c, k)?;
        if &(&a * &d.iota(&z.from_i64(3).pow(k))?) + &d.iota(&b)? != c {
            failures += 1;
        }
    }

    // f(x) = x^n g(1/x) at random points, independently of the library's own check.
    let mut witness_failures = 0;
    for i in 0..WITNESSES {
        let base = if i % 2 == 0 { Ring::rationals() } else { Ring::prime_field(7)? };
        let rt = Ring::polynomial(&base, &["t"])?;
        let n = rng.gen_range(1..=6u32);
        let mut f = rt.var("t")?.pow(n);
        for e in 0..n {
            let c = base.from_i64(rng.gen_range(-9..=9));
            f = &f + &(&rt.coerce(&c)? * &rt.var("t")?.pow(e));
        }
        let g = reciprocal_localization_witness(&f)?;
        let mut ok = reciprocal_reconstructs(&f, &g);
        for _ in 0..3 {
            let x = loop {
                let x = base.random_element(&mut rng as &mut dyn RngCore, 6);
                if !x.is_zero() {
                    break x;
                }
            };
            let fx = RingHom::evaluate_at(&rt, "t", &x)?.apply(&f)?;
            let gx = RingHom::evaluate_at(g.ring(), "t_inv", &x.inverse()?)?.apply(&g)?;
            ok &= fx == &x.pow(n) * &gx;
        }
        witness_failures += usize::from(!ok);
    }
    let ok = failures == 0 && witness_failures == 0;
    Ok((ok, format!("{INSTANCES} decompositions ({failures} bad), {WITNESSES} witnesses ({witness_failures} bad)")))
}

fn simplicial_suite() -> Result<(bool, String)> {
    const LIFTS: usize = 100;
    const CRT: usize = 100;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut identities = 0;
    let mut bad_identities = 0;
    for base in [Ring::integers(), Ring::prime_field(7)?] {
        let r = simplicial_identity_check(&base, 3)?;
        identities += r.checks;
        bad_identities += usize::from(!r.passed());
    }

    let phis = systems(&["A2", "A3", "D4"])?;
    let mut bad_lifts = 0;
    for i in 0..LIFTS {
        let base = if i % 2 == 0 { Ring::integers() } else { Ring::prime_field(7)? };
        let phi = &phis[rng.gen_range(0..phis.len())];
        let l1 = SimplicialLevel::new(&base, 1)?;
        let r = l1.ring();
        let f = loop {
            let f = r.random_element(&mut rng as &mut dyn RngCore, 4);
            if !f.is_zero() {
                break f;
            }
        };
        let mut g = SteinbergWord::empty(r, phi);
        if i % 4 >= 2 {
            for _ in 0..rng.gen_range(1..=2) {
                let arg = r.random_element(&mut rng as &mut dyn RngCore, 4);
                g.push(rng.gen_range(0..phi.len()), arg)?;
            }
        }
        let gen = MooreGenerator::level1(phi, rng.gen_range(0..phi.len()), &f, &g)?;
        let lift = moore_lift(&gen)?;
        if !check_lift(&gen, &lift)?.passed(g.is_empty()) {
            bad_lifts += 1;
        }
    }

    let q = crt_quotient(&Ring::integers())?;
    let mut bad_crt = 0;
    for _ in 0..CRT {
        let f = q.random_element(&mut rng as &mut dyn RngCore, 30);
        if crt_from_pair(&crt_to_pair(&f)?)? != f {
            bad_crt += 1;
        }
    }
    let ok = bad_identities == 0 && bad_lifts == 0 && bad_crt == 0;
    Ok((ok, format!("{identities} identities, {LIFTS} lifts ({bad_lifts} bad), {CRT} CRT round trips ({bad_crt} bad)")))
}

fn patcher() -> Result<Patcher> {
    Patcher::zariski_integers(2, 3, &RootSystem::parse("A3")?)
}

fn conjugation() -> Result<(bool, String)> {
    const G_COUNT: usize = 50;
    const ARGS: usize = 20;
    let p = patcher()?;
    let (strict, coherence) = p.verify_conjugation(G_COUNT, ARGS, SEED)?;
    let ok = strict.passed() && coherence.passed() && *p.eval_ring() == Ring::rationals();
    Ok((
        ok,
        format!(
            "{} checks over {} ({} failures), coherence {} failures",
            strict.samples,
            p.eval_ring(),
            strict.failures,
            coherence.failures
        ),
    ))
}

fn t_operators() -> Result<(bool, String)> {
    const SAMPLES: usize = 100;
    let p = patcher()?;
    let rel = p.verify_t_relations(SAMPLES, SEED);
    let (add_a, add_b) = p.verify_additional(SAMPLES, SEED);
    let reports = [
        rel.r1,
        rel.r2,
        rel.r3,
        p.verify_independence(SAMPLES, SEED),
        p.verify_equivariance(SAMPLES, SEED),
        add_a,
        add_b,
    ];
    let ok = reports.iter().all(|r| r.passed() && r.samples >= 50);
    let summary: Vec<String> = reports.iter().map(|r| format!("{} {}/{}", r.check, r.failures, r.samples)).collect();
    Ok((ok, format!("failures: {}", summary.join(", "))))
}

fn congruence() -> Result<(bool, String)> {
    const SAMPLES: usize = 50;
    let z = Ring::integers();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = 0;
    for phi in systems(&["A2", "A3"])? {
        let rep = Representation::defining(&phi)?;
        for _ in 0..SAMPLES {
            let a = z.from_i64(rng.gen_range(2..=40));
            let b = z.from_i64(rng.gen_range(2..=40));
            let c = z.from_i64(rng.gen_range(-40..=40));
            let root = rng.gen_range(0..phi.len());
            if !check_congruence_lemma_in(&rep, root, &a, &b, &c, &Ideal::principal(&a), &Ideal::principal(&b))? {
                failures += 1;
            }
        }
    }
    Ok((failures == 0, format!("{} samples over A2, A3, {failures} failures", 2 * SAMPLES)))
}
