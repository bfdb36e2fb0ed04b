//! The standard simplicial ring `R[Δ•]` in low degrees and the Moore-complex generators
//! of the Steinberg group over it.
//!
//! `R[Δⁿ]` is identified with `R[t1, …, tn]` through `t0 = 1 − Σ tᵢ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rep::Representation;
use crate::ring::{Ring, RingElement, RingHom, RingKind, Value};
use crate::roots::RootSystem;
use crate::words::SteinbergWord;

/// Highest supported level.
pub const MAX_LEVEL: usize = 3;

fn var_name(k: usize) -> String {
    format!("t{k}")
}

/// `R[Δⁿ]` as a polynomial ring.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplicialLevel {
    base: Ring,
    n: usize,
    ring: Ring,
}

impl SimplicialLevel {
    pub fn new(base: &Ring, n: usize) -> Result<SimplicialLevel> {
        if n > MAX_LEVEL {
            return Err(Error::IndexOutOfRange { index: n, level: MAX_LEVEL });
        }
        let ring = if n == 0 {
            base.clone()
        } else {
            let names: Vec<String> = (1..=n).map(var_name).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            Ring::polynomial(base, &refs)?
        };
        Ok(SimplicialLevel { base: base.clone(), n, ring })
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `t_k`; for `k = 0` this is `1 − Σ tᵢ`.
    pub fn t(&self, k: usize) -> Result<RingElement> {
        if k > self.n {
            return Err(Error::IndexOutOfRange { index: k, level: self.n });
        }
        if k > 0 {
            return self.ring.var(&var_name(k));
        }
        let mut t0 = self.ring.one();
        for i in 1..=self.n {
            t0 = &t0 - &self.ring.var(&var_name(i))?;
        }
        Ok(t0)
    }

    /// `d_i : R[Δⁿ] → R[Δⁿ⁻¹]` with `d_i(t_j) = t_j, 0, t_{j−1}` for `j <, =, > i`.
    pub fn face(&self, i: usize) -> Result<RingHom> {
        if self.n == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, level: self.n });
        }
        let target = SimplicialLevel::new(&self.base, self.n - 1)?;
        let names: Vec<String> = (1..=self.n).map(var_name).collect();
        let mut images = Vec::with_capacity(self.n);
        for (j, name) in (1..=self.n).zip(&names) {
            let img = match j.cmp(&i) {
                std::cmp::Ordering::Less => target.t(j)?,
                std::cmp::Ordering::Equal => target.ring.zero(),
                std::cmp::Ordering::Greater => target.t(j - 1)?,
            };
            images.push((name.as_str(), img));
        }
        RingHom::substitute(&self.ring, &target.ring, &images)
    }

    /// `s_i : R[Δⁿ] → R[Δⁿ⁺¹]` with `s_i(t_j) = t_j, t_j + t_{j+1}, t_{j+1}` for
    /// `j <, =, > i`.
    pub fn degeneracy(&self, i: usize) -> Result<RingHom> {
        if i > self.n || self.n + 1 > MAX_LEVEL {
            return Err(Error::IndexOutOfRange { index: i, level: self.n });
        }
        let target = SimplicialLevel::new(&self.base, self.n + 1)?;
        let names: Vec<String> = (1..=self.n).map(var_name).collect();
        let mut images = Vec::with_capacity(self.n);
        for (j, name) in (1..=self.n).zip(&names) {
            let img = match j.cmp(&i) {
                std::cmp::Ordering::Less => target.t(j)?,
                std::cmp::Ordering::Equal => &target.t(j)? + &target.t(j + 1)?,
                std::cmp::Ordering::Greater => target.t(j + 1)?,
            };
            images.push((name.as_str(), img));
        }
        if self.n == 0 {
            return RingHom::canonical(&self.ring, &target.ring);
        }
        RingHom::substitute(&self.ring, &target.ring, &images)
    }
}

/// `d_i` on `R[Δⁿ]`.
pub fn face(base: &Ring, i: usize, n: usize) -> Result<RingHom> {
    SimplicialLevel::new(base, n)?.face(i)
}

/// `s_i` on `R[Δⁿ]`.
pub fn degeneracy(base: &Ring, i: usize, n: usize) -> Result<RingHom> {
    SimplicialLevel::new(base, n)?.degeneracy(i)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct IdentityReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn compose_agree(level: &SimplicialLevel, lhs: &[&RingHom], rhs: &[&RingHom]) -> Result<bool> {
    for k in 1..=level.n {
        let t = level.t(k)?;
        let mut a = t.clone();
        for h in lhs {
            a = h.apply(&a)?;
        }
        let mut b = t;
        for h in rhs {
            b = h.apply(&b)?;
        }
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check every simplicial identity whose rings have level at most `n_max`, on the
/// generators `t_1, …, t_n`.
///
/// Composites are written right to left as usual: `d_i d_j` applies `d_j` first.
pub fn simplicial_identity_check(base: &Ring, n_max: usize) -> Result<IdentityReport> {
    if !(2..=MAX_LEVEL).contains(&n_max) {
        return Err(Error::Precondition(format!("n_max must lie in 2..={MAX_LEVEL}")));
    }
    let levels = (0..=n_max).map(|n| SimplicialLevel::new(base, n)).collect::<Result<Vec<_>>>()?;
    let mut report = IdentityReport::default();
    let mut record = |ok: bool, what: String| {
        report.checks += 1;
        if !ok {
            report.failures.push(what);
        }
    };
    for n in 0..=n_max {
        let lv = &levels[n];
        // d_i d_j = d_{j-1} d_i for i < j, on level n ≥ 2
        if n >= 2 {
            for j in 0..=n {
                for i in 0..j {
                    let dj = lv.face(j)?;
                    let di = levels[n - 1].face(i)?;
                    let di_n = lv.face(i)?;
                    let dj1 = levels[n - 1].face(j - 1)?;
                    record(
                        compose_agree(lv, &[&dj, &di], &[&di_n, &dj1])?,
                        format!("d{i}d{j} = d{}d{i} on level {n}", j - 1),
                    );
                }
            }
        }
        // s_i s_j = s_{j+1} s_i for i ≤ j, landing in level n + 2
        if n + 2 <= n_max {
            for j in 0..=n {
                for i in 0..=j {
                    let sj = lv.degeneracy(j)?;
                    let si = levels[n + 1].degeneracy(i)?;
                    let si_n = lv.degeneracy(i)?;
                    let sj1 = levels[n + 1].degeneracy(j + 1)?;
                    record(
                        compose_agree(lv, &[&sj, &si], &[&si_n, &sj1])?,
                        format!("s{i}s{j} = s{}s{i} on level {n}", j + 1),
                    );
                }
            }
        }
        // mixed identities d_i s_j on level n, passing through level n + 1
        if n < n_max {
            for j in 0..=n {
                let sj = lv.degeneracy(j)?;
                for i in 0..=n + 1 {
                    let di = levels[n + 1].face(i)?;
                    let ok = if i == j || i == j + 1 {
                        compose_agree(lv, &[&sj, &di], &[])?
                    } else if i < j {
                        let di_n = lv.face(i)?;
                        let sj1 = levels[n - 1].degeneracy(j - 1)?;
                        compose_agree(lv, &[&sj, &di], &[&di_n, &sj1])?
                    } else {
                        let di1 = lv.face(i - 1)?;
                        let sj_n = levels[n - 1].degeneracy(j)?;
                        compose_agree(lv, &[&sj, &di], &[&di1, &sj_n])?
                    };
                    record(ok, format!("d{i}s{j} on level {n}"));
                }
            }
        }
    }
    Ok(report)
}

/// A generator of a Moore-complex term, with the data it was built from.
///
/// Level 1: `g(t1) · x_α(t1(t1 − 1) f(t1)) · g(t1)⁻¹`.
/// Level 2: `g(t2) · x_α(c · t1 t2 f(t2)) · g(t2)⁻¹` with `c = ±1`.
#[derive(Clone, Debug, PartialEq)]
pub struct MooreGenerator {
    pub level: usize,
    pub root: usize,
    /// `f` as a polynomial in `t1` over `R`, i.e. an element of `R[Δ¹]`.
    pub f: RingElement,
    /// `g(t1)` over `R[Δ¹]`.
    pub g: SteinbergWord,
    pub word: SteinbergWord,
}

impl MooreGenerator {
    /// The level-1 generator `x_α(t1(t1 − 1) f(t1))^{g(t1)}`.
    pub fn level1(system: &RootSystem, root: usize, f: &RingElement, g: &SteinbergWord) -> Result<MooreGenerator> {
        let lv = SimplicialLevel::new(f.ring().base().unwrap_or(f.ring()), 1)?;
        let ring = lv.ring();
        let f = ring.coerce(f)?;
        if g.ring() != ring || g.system() != system {
            return Err(Error::MismatchedRings(g.ring().to_string(), ring.to_string()));
        }
        let t1 = lv.t(1)?;
        let arg = &(&t1 * &(&t1 - &ring.one())) * &f;
        let x = SteinbergWord::gen(ring, system, root, arg)?;
        let word = SteinbergWord::conjugate(g, &x)?;
        Ok(MooreGenerator { level: 1, root, f, g: g.clone(), word })
    }

    /// Read a level-1 generator off a word `g · x_α(h) · g⁻¹` with `t1(t1 − 1) | h`.
    pub fn recognize(w: &SteinbergWord) -> Result<MooreGenerator> {
        let fail = || Error::UnrecognizedShape(format!("{w} is not a conjugated x_α(t1(t1-1)f)"));
        let ring = w.ring();
        let letters = w.letters();
        if letters.len().is_multiple_of(2) {
            return Err(fail());
        }
        let k = letters.len() / 2;
        let g = SteinbergWord::from_letters(ring, w.system(), letters[..k].iter().map(|l| (l.root, l.arg.clone(), 1)))?;
        let mid = &letters[k];
        let t1 = ring.var("t1").map_err(|_| fail())?;
        let f = mid.arg.try_div(&(&t1 * &(&t1 - &ring.one()))).map_err(|_| fail())?;
        let gen = MooreGenerator::level1(w.system(), mid.root, &f, &g)?;
        if gen.word != *w {
            return Err(fail());
        }
        Ok(gen)
    }
}

/// `R[Δ¹] → R[Δ²]` renaming `t1` to `t2`.
fn rename_t1_to_t2(base: &Ring) -> Result<RingHom> {
    let l1 = SimplicialLevel::new(base, 1)?;
    let l2 = SimplicialLevel::new(base, 2)?;
    RingHom::substitute(l1.ring(), l2.ring(), &[("t1", l2.t(2)?)])
}

/// Lift a level-1 generator through `∂₂ = d₀`.
///
/// Returns `g(t2) · x_α(−t1 t2 f(t2)) · g(t2)⁻¹`; the sign is fixed so that
/// `d₀ : (t1, t2) ↦ (1 − t1, t1)` gives back `x_α(t1(t1 − 1) f(t1))^{g(t1)}`, while `d₁`
/// and `d₂` kill the inner argument.
pub fn moore_lift(gen1: &MooreGenerator) -> Result<MooreGenerator> {
    if gen1.level != 1 {
        return Err(Error::UnrecognizedShape(format!("expected a level-1 generator, got level {}", gen1.level)));
    }
    let l1_ring = gen1.f.ring();
    let base = l1_ring.base().ok_or_else(|| Error::UnrecognizedShape("f must live in R[t1]".into()))?.clone();
    let l2 = SimplicialLevel::new(&base, 2)?;
    let up = rename_t1_to_t2(&base)?;
    let f2 = up.apply(&gen1.f)?;
    let g2 = gen1.g.substitute(&up)?;
    let arg = -(&(&l2.t(1)? * &l2.t(2)?) * &f2);
    let x = SteinbergWord::gen(l2.ring(), gen1.g.system(), gen1.root, arg)?;
    let word = SteinbergWord::conjugate(&g2, &x)?;
    Ok(MooreGenerator { level: 2, root: gen1.root, f: gen1.f.clone(), g: gen1.g.clone(), word })
}

/// Outcome of checking a lift against the face maps.
#[derive(Clone, Debug, Serialize)]
pub struct LiftCheck {
    /// `d₁(lift)` is the empty word.
    pub d1_trivial: bool,
    /// `d₂(lift)` is the empty word.
    pub d2_trivial: bool,
    /// `d₀(lift)` equals the input letter for letter.
    pub d0_word_equal: bool,
    /// `d₀(lift)` and the input have the same image under the adjoint representation.
    pub d0_matrix_equal: bool,
}

impl LiftCheck {
    /// Word-level equality is demanded when `g` is empty, matrix-level otherwise.
    pub fn passed(&self, g_empty: bool) -> bool {
        self.d1_trivial && self.d2_trivial && if g_empty { self.d0_word_equal } else { self.d0_matrix_equal }
    }
}

pub fn check_lift(gen1: &MooreGenerator, lift: &MooreGenerator) -> Result<LiftCheck> {
    let base = gen1.f.ring().base().expect("R[t1]").clone();
    let l2 = SimplicialLevel::new(&base, 2)?;
    let d0 = lift.word.substitute(&l2.face(0)?)?;
    let d1 = lift.word.substitute(&l2.face(1)?)?;
    let d2 = lift.word.substitute(&l2.face(2)?)?;
    let d0_word_equal = d0 == gen1.word;
    let d0_matrix_equal = d0_word_equal || {
        let rep = Representation::adjoint(gen1.word.system());
        rep.evaluate(&d0) == rep.evaluate(&gen1.word)
    };
    Ok(LiftCheck { d1_trivial: d1.is_empty(), d2_trivial: d2.is_empty(), d0_word_equal, d0_matrix_equal })
}

/// `x_α(r t1)` over `R[Δ¹]`: in `Ker d₁`, with `d₀`-image `x_α(r)`.
pub fn pi0_connectivity_witness(system: &RootSystem, root: usize, r: &RingElement) -> Result<SteinbergWord> {
    let lv = SimplicialLevel::new(r.ring(), 1)?;
    let arg = &lv.ring().coerce(r)? * &lv.t(1)?;
    SteinbergWord::gen(lv.ring(), system, root, arg)
}

/// `R[t1]/(t1(t1 − 1))`.
pub fn crt_quotient(base: &Ring) -> Result<Ring> {
    let lv = SimplicialLevel::new(base, 1)?;
    let t = lv.t(1)?;
    Ring::quotient(lv.ring(), &(&t * &(&t - &lv.ring().one())))
}

/// `f ↦ (f(0), f(1))` from `R[t1]` or `R[t1]/(t1(t1 − 1))` to `R × R`.
pub fn crt_to_pair(f: &RingElement) -> Result<RingElement> {
    let (poly_ring, f) = match f.ring().kind() {
        RingKind::Quotient { base, .. } => (base.clone(), base.wrap(f.value().clone())),
        _ => (f.ring().clone(), f.clone()),
    };
    let base = poly_ring.base().ok_or_else(|| Error::Precondition(format!("{} is not R[t1]", poly_ring)))?.clone();
    let at = |v: RingElement| RingHom::evaluate_at(&poly_ring, "t1", &v).and_then(|h| h.apply(&f));
    let (a, b) = (at(base.zero())?, at(base.one())?);
    let prod = Ring::product(&base, &base);
    Ok(prod.wrap(Value::pair(a.into_value(), b.into_value())))
}

/// `(a, b) ↦ a + (b − a) t1` in `R[t1]/(t1(t1 − 1))`.
pub fn crt_from_pair(p: &RingElement) -> Result<RingElement> {
    let (a, b) = p.components().ok_or_else(|| Error::Precondition(format!("{p} is not a pair")))?;
    let q = crt_quotient(a.ring())?;
    let t = q.var("t1")?;
    Ok(&q.coerce(&a)? + &(&q.coerce(&(&b - &a))? * &t))
}
