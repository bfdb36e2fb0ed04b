//! Run the library self-test and print one line per operation.
//!
//! Usage: `cargo run --example selftest -- [--full]`

fn main() {
    let full = std::env::args().any(|a| a == "--full");
    let checks = steinberg_lab::selftest::selftest(!full, 1);
    for c in &checks {
        println!("{} {:<20} {:<32} {}", if c.passed { "ok  " } else { "FAIL" }, c.module, c.op, c.detail);
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("{} checks, {failed} failed", checks.len());
    std::process::exit(i32::from(failed > 0));
}
