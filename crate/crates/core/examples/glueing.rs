//! Glueing kernel words over `A = Z[1/2]` down to `B = Z` along `h = 3`.

use steinberg_lab::patching::Patcher;
use steinberg_lab::{RootSystem, SteinbergWord};

fn main() -> steinberg_lab::Result<()> {
    let phi = RootSystem::parse("A3")?;
    let patch = Patcher::zariski_integers(2, 3, &phi)?;
    let (z, a) = (patch.b_ring().clone(), patch.a_ring().clone());

    let w = SteinbergWord::symbol(&z, &phi, 0, &-z.one(), &-z.one())?;
    let out = patch.glueing_demo(&w.coerce_into(&a)?, None)?;
    println!("x = {}\n  x.[1,1] = [{}, {}]\n  y = {} (descended: {})", w, out.pair.u, out.pair.v, out.y, out.descended);

    let x = SteinbergWord::symbol(&a, &phi, 0, &a.from_i64(2), &-a.one())?;
    match patch.glueing_demo(&x, None) {
        Ok(out) => println!("x = {x}\n  y = {}", out.y),
        Err(e) => {
            println!("x = {x}\n  {e}");
            let out = patch.glueing_demo(&x, Some(&SteinbergWord::empty(&z, &phi)))?;
            println!("  with the empty certificate: y = {:?} verified", out.y.to_string());
        }
    }
    Ok(())
}
