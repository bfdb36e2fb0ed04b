//! Faces of the algebraic simplices and lifting a level-1 Moore generator to level 2.

use steinberg_lab::simplicial::{
    check_lift, moore_lift, pi0_connectivity_witness, simplicial_identity_check, MooreGenerator, SimplicialLevel,
};
use steinberg_lab::{Ring, RootSystem, SteinbergWord};

fn main() -> steinberg_lab::Result<()> {
    let z = Ring::integers();
    let report = simplicial_identity_check(&z, 3)?;
    println!("simplicial identities up to level 3: {} checks, passed = {}", report.checks, report.passed());

    let phi = RootSystem::parse("A2")?;
    let l1 = SimplicialLevel::new(&z, 1)?;
    let r = l1.ring();
    let gen = MooreGenerator::level1(&phi, 0, &r.one(), &SteinbergWord::empty(r, &phi))?;
    let lift = moore_lift(&gen)?;
    println!("level 1: {}\nlift:    {}", gen.word, lift.word);
    println!("{:?}", check_lift(&gen, &lift)?);

    let g = SteinbergWord::gen(r, &phi, 1, r.parse("t1 + 2")?)?;
    let gen = MooreGenerator::level1(&phi, 0, &r.parse("3*t1 - 1")?, &g)?;
    let lift = moore_lift(&gen)?;
    println!("conjugated: {}\nlift:       {}", gen.word, lift.word);
    println!("passed: {}", check_lift(&gen, &lift)?.passed(false));

    println!("x_a(5) is connected to 1 by {}", pi0_connectivity_witness(&phi, 0, &z.from_i64(5))?);
    Ok(())
}
