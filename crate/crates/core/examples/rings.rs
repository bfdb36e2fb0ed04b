//! Exact rings: arithmetic, Bézout splitting, patching decompositions, reciprocal witnesses
//! and the Milnor square of `Z` at `2`.

use steinberg_lab::ring::decompose::{
    bezout_decompose, decompose_modulo_power, reciprocal_localization_witness, reciprocal_reconstructs, PatchingDatum,
};
use steinberg_lab::ring::milnor_square::{e_projection, l_projection, milnor_square_pullback};
use steinberg_lab::Ring;

fn main() -> steinberg_lab::Result<()> {
    for spec in ["Z", "Q", "F_5", "Z/6", "Z[1/2]", "Z[t]/(t^3)", "F_3[s]"] {
        let r = Ring::parse_spec(spec)?;
        println!("{spec:<12} -> {r}");
    }
    let z = Ring::integers();
    let z2 = Ring::localization(&z, &z.from_i64(2))?;
    let x = &z2.parse("3/2")? + &z2.parse("1/4")?;
    println!("3/2 + 1/4 = {x} in {z2}");

    let (p, i) = bezout_decompose(&z2.parse("5/2")?, &z.from_i64(3), 1)?;
    println!("5/2 = {p} + {i}  (first part in 3*Z[1/2])");

    let datum = PatchingDatum::zariski(&z, &z.from_i64(2), &z.from_i64(3))?;
    for (c, k) in [("5/2", 1), ("1/4", 2), ("-11/32", 5)] {
        let (a, b) = decompose_modulo_power(&datum, &datum.a_ring().parse(c)?, k)?;
        println!("{c} = ({a})*3^{k} + {b}");
    }

    let zt = Ring::parse_spec("Z[t]")?;
    let f = zt.parse("t^2 + 3*t + 2")?;
    let g = reciprocal_localization_witness(&f)?;
    println!("f = {f}, g = {g}, f = t^2 g: {}", reciprocal_reconstructs(&f, &g));

    let lt = Ring::parse_spec("Z[1/2][t]")?;
    let g = lt.parse("3 + t/2")?;
    let pair = milnor_square_pullback(&z.from_i64(3), &g)?;
    println!("pullback of (3, {g}) = {pair}; e = {}, l = {}", e_projection(&pair)?, l_projection(&pair)?);
    match milnor_square_pullback(&z.from_i64(3), &lt.parse("5 + t")?) {
        Ok(p) => println!("unexpected: {p}"),
        Err(e) => println!("(3, 5 + t) rejected: {e}"),
    }
    Ok(())
}
