//! Sweep R1–R3 as matrix identities over every supported root system and representation.
//!
//! Usage: `cargo run --example verify_relations -- [samples]`

use std::time::Instant;

use steinberg_lab::rep::verify_relations;
use steinberg_lab::{Representation, Ring, RootSystem};

fn main() -> steinberg_lab::Result<()> {
    let samples: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let zt = Ring::polynomial(&Ring::integers(), &["t"])?;
    let rings = [Ring::integers_mod(6)?, Ring::prime_field(7)?, Ring::quotient(&zt, &zt.parse("t^3")?)?];
    let start = Instant::now();
    for system in RootSystem::all_supported() {
        for rep in Representation::all_for(&system) {
            for ring in &rings {
                let t = Instant::now();
                let report = verify_relations(&rep, ring, samples, 7);
                println!(
                    "{:<3} {:<8} {:<12} checks={:<8} violations={} ({:.2?})",
                    report.system,
                    report.representation,
                    report.ring,
                    report.checks,
                    report.violations.len(),
                    t.elapsed()
                );
                for v in report.violations.iter().take(3) {
                    println!("    {v}");
                }
            }
        }
    }
    println!("total {:.2?}", start.elapsed());
    Ok(())
}
