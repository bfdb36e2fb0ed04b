//! Milnor symbols over Q: tame symbols and sound normalization.
//!
//! Usage: `cargo run --example milnor_tame -- ["2,3; 5,-4"]`

use steinberg_lab::milnor::{relevant_primes, symbol_normalize, tame_equivalent, tame_symbol, MilnorSymbolSum};
use steinberg_lab::Ring;

fn main() -> steinberg_lab::Result<()> {
    let q = Ring::rationals();
    let text = std::env::args().nth(1).unwrap_or_else(|| "2,3; 4,5; 3,-2; -2,3".into());
    let s = MilnorSymbolSum::parse(&q, &text)?;
    let n = symbol_normalize(&s);
    println!("s          = {s}");
    println!("normalized = {n}");
    println!("tame-equivalent: {}", tame_equivalent(&s, &n)?);
    let mut primes = relevant_primes(&s)?;
    primes.extend([3, 5, 7]);
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        println!("d_{p}(s) = {}", tame_symbol(&s, p)?.value);
    }
    Ok(())
}
