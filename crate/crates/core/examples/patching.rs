//! Conjugation homomorphisms and the operators `T_α` for `B = Z`, `A = Z[1/2]`, `h = 3`.
//!
//! Usage: `cargo run --example patching -- [samples]`

use std::time::Instant;

use steinberg_lab::patching::{ConjHom, Patcher};
use steinberg_lab::{RootSystem, SteinbergWord};

fn main() -> steinberg_lab::Result<()> {
    let samples: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let phi = RootSystem::parse("A3")?;
    let patch = Patcher::zariski_integers(2, 3, &phi)?;
    let z = patch.b_ring().clone();

    // c_g for g = x_{e1-e2}(1/3) applied to x_{e2-e1}(5·3^k).
    let beta = phi.parse_root("e1-e2")?;
    let g = SteinbergWord::gen(patch.b_h(), &phi, beta, patch.b_h().parse("1/3")?)?;
    let c = ConjHom::new(&z, &z.from_i64(3), &g)?;
    let k = c.bound();
    let x = c.on_generator(phi.neg(beta), &z.from_i64(5), k)?;
    println!("n(g) = {k}");
    println!("c_g(x[{}](5*3^{k})) = {x}", phi.root(phi.neg(beta)));

    // x · [1, 1] for a word over A.
    let a = patch.a_ring().clone();
    let v = SteinbergWord::from_letters(&a, &phi, [(0, a.parse("1/2")?, 1), (3, a.parse("7/4")?, 1)])?;
    let p = patch.act(&v, &patch.base_point())?;
    println!("v = {v}\nv · [1,1] = [{}, {}]", p.u, p.v);
    println!("μ matches λ_h(v): {}", patch.mu(&p)? == patch.evaluate(&v)?);

    let t = Instant::now();
    for report in patch.verify_all(samples, 11)? {
        println!("{:<16} samples={:<4} failures={}", report.check, report.samples, report.failures);
        if let Some(f) = &report.first_failure {
            println!("    first failure: {f}");
        }
    }
    println!("elapsed {:.2?}", t.elapsed());
    Ok(())
}
