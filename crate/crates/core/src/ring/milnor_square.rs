//! The Milnor square
//!
//! ```text
//!   R ⋉ tR_a[t] --l--> R_a[t]
//!        |e              | t=0
//!        R  ----λ_a---> R_a
//! ```

use super::value::{Mono, Value};
use super::{poly, Ring, RingElement, RingKind};
use crate::error::{Error, Result};

/// The semidirect ring `R ⋉ tR_a[t]` whose `l`-leg lands in `g`'s ring `R_a[t]`.
fn semidirect_for(x: &RingElement, g: &RingElement) -> Result<Ring> {
    let r = x.ring();
    let mismatch = || Error::MismatchedRings(g.ring().to_string(), format!("{r}[1/a][t]"));
    let RingKind::Polynomial { base: local, vars } = g.ring().kind() else { return Err(mismatch()) };
    let RingKind::Localization { base, multiplier } = local.kind() else { return Err(mismatch()) };
    if base != r || vars.len() != 1 {
        return Err(mismatch());
    }
    Ring::milnor_semidirect(r, &r.wrap(multiplier.clone()))
}

/// The unique element of `R ⋉ tR_a[t]` with `e`-image `x` and `l`-image `g`.
///
/// Requires `λ_a(x) = g(0)`.
pub fn milnor_square_pullback(x: &RingElement, g: &RingElement) -> Result<RingElement> {
    let ring = semidirect_for(x, g)?;
    let RingKind::MilnorSemidirect { local, .. } = ring.kind() else { unreachable!() };
    let p = g.value().as_poly().unwrap();
    let g0 = p.coeff(&Mono::one(1)).cloned().unwrap_or_else(|| local.zero_v());
    let lx = local.coerce(x)?;
    if lx.value() != &g0 {
        return Err(Error::Precondition(format!("{x} and g(0) = {} differ in {local}", local.fmt_value(&g0))));
    }
    let f = poly::sub(local, p, &poly::from_const(local, g0, 1));
    ring.element(Value::pair(x.value().clone(), Value::Poly(f)))
}

/// `e(r, f) = r`.
pub fn e_projection(z: &RingElement) -> Result<RingElement> {
    super::RingHom::semidirect_base(z.ring())?.apply(z)
}

/// `l(r, f) = λ_a(r) + f`.
pub fn l_projection(z: &RingElement) -> Result<RingElement> {
    super::RingHom::semidirect_poly(z.ring())?.apply(z)
}
