use std::collections::BTreeMap;
use std::fmt;

use super::value::Value;
use super::{Ring, RingElement, RingKind};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum HomKind {
    /// The canonical map (inclusion, localization, reduction, coefficient extension).
    Canonical,
    /// Evaluation / substitution of polynomial variables; unlisted variables map to the
    /// variable of the same name in the target, and constants map canonically.
    Substitute(BTreeMap<String, RingElement>),
    /// Projection of a product onto a factor (0 = left, 1 = right).
    Project(u8),
    /// `e(r, f) = r` on a Milnor semidirect ring.
    SemidirectBase,
    /// `l(r, f) = λ(r) + f` on a Milnor semidirect ring.
    SemidirectPoly,
}

/// A supported ring homomorphism between two rings.
#[derive(Clone, Debug, PartialEq)]
pub struct RingHom {
    source: Ring,
    target: Ring,
    kind: HomKind,
}

impl fmt::Display for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            HomKind::Canonical => write!(f, "{} -> {}", self.source, self.target),
            HomKind::Substitute(m) => {
                let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k} -> {v}")).collect();
                write!(f, "{} -> {} ({})", self.source, self.target, parts.join(", "))
            }
            HomKind::Project(i) => write!(f, "pr{} : {} -> {}", i + 1, self.source, self.target),
            HomKind::SemidirectBase => write!(f, "e : {} -> {}", self.source, self.target),
            HomKind::SemidirectPoly => write!(f, "l : {} -> {}", self.source, self.target),
        }
    }
}

impl RingHom {
    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn canonical(source: &Ring, target: &Ring) -> Result<RingHom> {
        target.coerce(&source.one())?;
        Ok(RingHom { source: source.clone(), target: target.clone(), kind: HomKind::Canonical })
    }

    /// Substitution `var -> image` on a polynomial ring (or a localization/quotient of one).
    ///
    /// For quotient sources the modulus must map to zero; for localization sources the
    /// multiplier must map to a unit.
    pub fn substitute(source: &Ring, target: &Ring, images: &[(&str, RingElement)]) -> Result<RingHom> {
        let mut map = BTreeMap::new();
        for (name, img) in images {
            target.check_owner(img)?;
            map.insert(name.to_string(), img.clone());
        }
        let hom = RingHom { source: source.clone(), target: target.clone(), kind: HomKind::Substitute(map) };
        hom.check_well_defined(source)?;
        Ok(hom)
    }

    /// Evaluation of a single variable at an element of the same ring's base chain.
    pub fn evaluate_at(source: &Ring, var: &str, value: &RingElement) -> Result<RingHom> {
        RingHom::substitute(source, value.ring(), &[(var, value.clone())])
    }

    pub fn project_left(source: &Ring) -> Result<RingHom> {
        RingHom::project(source, 0)
    }

    pub fn project_right(source: &Ring) -> Result<RingHom> {
        RingHom::project(source, 1)
    }

    fn project(source: &Ring, i: u8) -> Result<RingHom> {
        let RingKind::Product(a, b) = source.kind() else {
            return Err(Error::Unsupported(format!("projection from {source}")));
        };
        let target = if i == 0 { a.clone() } else { b.clone() };
        Ok(RingHom { source: source.clone(), target, kind: HomKind::Project(i) })
    }

    /// `e : R ⋉ tR_a[t] -> R`.
    pub fn semidirect_base(source: &Ring) -> Result<RingHom> {
        let RingKind::MilnorSemidirect { base, .. } = source.kind() else {
            return Err(Error::Unsupported(format!("semidirect projection from {source}")));
        };
        Ok(RingHom { source: source.clone(), target: base.clone(), kind: HomKind::SemidirectBase })
    }

    /// `l : R ⋉ tR_a[t] -> R_a[t]`.
    pub fn semidirect_poly(source: &Ring) -> Result<RingHom> {
        let RingKind::MilnorSemidirect { poly, .. } = source.kind() else {
            return Err(Error::Unsupported(format!("semidirect projection from {source}")));
        };
        Ok(RingHom { source: source.clone(), target: poly.clone(), kind: HomKind::SemidirectPoly })
    }

    pub fn apply(&self, x: &RingElement) -> Result<RingElement> {
        self.source.check_owner(x)?;
        match &self.kind {
            HomKind::Canonical => self.target.coerce(x),
            HomKind::Substitute(map) => self.substitute_v(&self.source, x.value(), map),
            HomKind::Project(i) => {
                let (a, b) = x.components().unwrap();
                Ok(if *i == 0 { a } else { b })
            }
            HomKind::SemidirectBase => Ok(x.components().unwrap().0),
            HomKind::SemidirectPoly => Ok(self.target.wrap(self.source.l_projection_v(x.value()))),
        }
    }

    fn substitute_v(&self, src: &Ring, v: &Value, map: &BTreeMap<String, RingElement>) -> Result<RingElement> {
        let t = &self.target;
        match (src.kind(), v) {
            (RingKind::Polynomial { base, vars }, Value::Poly(p)) => {
                let mut images = Vec::with_capacity(vars.len());
                for name in vars {
                    images.push(match map.get(name) {
                        Some(img) => img.clone(),
                        None => t.var(name)?,
                    });
                }
                let mut acc = t.zero();
                for (m, c) in &p.terms {
                    let mut term = self.substitute_v(base, c, map)?;
                    for (e, img) in m.0.iter().zip(&images) {
                        if *e > 0 {
                            term = &term * &img.pow(*e);
                        }
                    }
                    acc = &acc + &term;
                }
                Ok(acc)
            }
            (RingKind::Quotient { base, .. }, Value::Poly(_)) => self.substitute_v(base, v, map),
            (RingKind::Localization { base, multiplier }, Value::Frac(n, k)) => {
                let n = self.substitute_v(base, n, map)?;
                if *k == 0 {
                    return Ok(n);
                }
                let m = self.substitute_v(base, multiplier, map)?;
                Ok(&n * &m.inverse()?.pow(*k))
            }
            _ => t.coerce(&src.wrap(v.clone())),
        }
    }

    fn check_well_defined(&self, src: &Ring) -> Result<()> {
        let HomKind::Substitute(map) = &self.kind else { return Ok(()) };
        match src.kind() {
            RingKind::Quotient { base, modulus, .. } => {
                let img = self.substitute_v(base, modulus, map)?;
                if !img.is_zero() {
                    return Err(Error::Precondition(format!("substitution does not kill the modulus of {src}")));
                }
                self.check_well_defined(base)
            }
            RingKind::Localization { base, multiplier } => {
                let img = self.substitute_v(base, multiplier, map)?;
                if !img.is_unit() {
                    return Err(Error::NotUnit(img.to_string()));
                }
                self.check_well_defined(base)
            }
            RingKind::Polynomial { base, .. } => self.check_well_defined(base),
            _ => Ok(()),
        }
    }
}
