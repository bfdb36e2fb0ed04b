//! Roots and structure constants of a simply-laced system.
//!
//! Usage: `cargo run --example roots_table -- [A3]`

use steinberg_lab::RootSystem;

fn main() -> steinberg_lab::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A3".into());
    let phi = RootSystem::parse(&name)?;
    println!("{}: {} roots, simple roots:", phi.name(), phi.len());
    for &s in phi.simple_roots() {
        println!("  {}", phi.root(s));
    }
    println!("alpha\tbeta\talpha+beta\tN");
    for (a, b, c, n) in phi.constants_table() {
        if a < b {
            println!("{}\t{}\t{}\t{n:+}", phi.root(a), phi.root(b), phi.root(c));
        }
    }
    for r in phi.roots().iter().filter(|r| !phi.is_positive(phi.index_of(r).unwrap())).take(3) {
        let (g, d) = phi.commutator_decomposition(r)?;
        println!("{r} = {g} + {d}");
    }
    Ok(())
}
