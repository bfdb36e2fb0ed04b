//! Steinberg words: R1 merging, commutator sorting, Weyl/torus elements and symbols,
//! evaluated in the representations.

use steinberg_lab::{Representation, Ring, RootSystem, SteinbergWord, SymbolWord};

fn main() -> steinberg_lab::Result<()> {
    let phi = RootSystem::parse("A2")?;
    let z = Ring::integers();
    let w =
        SteinbergWord::from_letters(&z, &phi, [(2, z.from_i64(7), 1), (0, z.from_i64(3), 1), (0, z.from_i64(2), 1)])?;
    println!("w          = {w}");
    println!("reduced    = {}", w.commutator_reduce());

    let rep = Representation::defining(&phi)?;
    println!("pi(w)      = {}", rep.evaluate(&w).to_json());

    let q = Ring::rationals();
    let u = q.parse("2/3")?;
    println!("w_a(2/3)   = {}", rep.evaluate(&SteinbergWord::weyl(&q, &phi, 0, &u)?).to_json());
    println!("h_a(2/3)   = {}", rep.evaluate(&SteinbergWord::torus(&q, &phi, 0, &u)?).to_json());

    let f7 = Ring::prime_field(7)?;
    let s = SymbolWord::symbol(&f7, &phi, 0, &f7.from_i64(3), &f7.from_i64(2))?;
    let t = s.mul(&SymbolWord::symbol(&f7, &phi, 0, &f7.from_i64(3), &f7.from_i64(5))?)?;
    println!("{{3,2}}{{3,5}} = {} ({} letters)", t.word(), t.word().len());
    for rep in Representation::all_for(&phi) {
        println!("  in K2 for {:?}: {}", rep.kind(), rep.k2_membership(t.word()));
    }
    println!("recognized: {}", SymbolWord::recognize(t.word(), 0)?.history().len());
    Ok(())
}
