use std::fmt;

use super::{ext_gcd, is_euclidean, Ring, RingElement, RingKind};
use crate::error::{Error, Result};

/// A finitely generated ideal. Membership is decided for ideals of Euclidean rings (where
/// the ideal is principal, generated by the gcd) and for principal ideals of domains.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<RingElement>,
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<RingElement>) -> Result<Ideal> {
        for g in &generators {
            ring.check_owner(g)?;
        }
        Ok(Ideal { ring: ring.clone(), generators })
    }

    pub fn principal(g: &RingElement) -> Ideal {
        Ideal { ring: g.ring().clone(), generators: vec![g.clone()] }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::principal(&ring.one())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[RingElement] {
        &self.generators
    }

    /// Product ideal, generated by pairwise products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::MismatchedRings(self.ring.to_string(), other.ring.to_string()));
        }
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        Ok(Ideal { ring: self.ring.clone(), generators: gens })
    }

    /// A single generator, when one can be computed.
    pub fn principal_generator(&self) -> Result<RingElement> {
        match self.generators.len() {
            0 => Ok(self.ring.zero()),
            1 => Ok(self.generators[0].clone()),
            _ if is_euclidean(&self.ring) => {
                let mut g = self.ring.zero();
                for x in &self.generators {
                    g = ext_gcd(&g, x)?.0;
                }
                Ok(g)
            }
            _ => Err(Error::Unsupported(format!("ideal membership in {}", self.ring))),
        }
    }

    pub fn contains(&self, x: &RingElement) -> Result<bool> {
        self.ring.check_owner(x)?;
        let g = self.principal_generator()?;
        if g.is_zero() {
            return Ok(x.is_zero());
        }
        if !self.ring.is_domain() && !g.is_unit() {
            return Err(Error::Unsupported(format!("ideal membership in {}", self.ring)));
        }
        Ok(x.try_div(&g).is_ok())
    }

    /// `R / I` as a ring, for the integers and univariate polynomial rings over fields.
    pub fn quotient_ring(&self) -> Result<Ring> {
        let g = self.principal_generator()?;
        match self.ring.kind() {
            RingKind::Integers | RingKind::Polynomial { .. } => {
                if g.is_zero() {
                    return Ok(self.ring.clone());
                }
                Ring::quotient(&self.ring, &g)
            }
            _ => Err(Error::Unsupported(format!("quotient of {} by {self}", self.ring))),
        }
    }
}

/// A rng (ring without unit) realized as an ideal of an ambient ring, e.g. `h^k R`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rng {
    ideal: Ideal,
}

impl Rng {
    pub fn new(ideal: Ideal) -> Rng {
        Rng { ideal }
    }

    pub fn ambient(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn contains(&self, x: &RingElement) -> Result<bool> {
        self.ideal.contains(x)
    }

    /// Checked element construction.
    pub fn element(&self, x: &RingElement) -> Result<RingElement> {
        if self.contains(x)? {
            Ok(x.clone())
        } else {
            Err(Error::Precondition(format!("{x} is not in the rng {}", self.ideal)))
        }
    }
}
