//! Patching along an inclusion `ι : B -> A` with a distinguished `h ∈ B`.
//!
//! The pieces are the truncated pro-rng `(h^k B)_k`, the conjugation homomorphisms
//! `c_g : St(Φ, h^n B) -> St(Φ, B)` for `g ∈ St(Φ, B_h)`, the set of pairs `[u, v]` with
//! `u ∈ St(Φ, B_h)`, `v ∈ St(Φ, A)` modulo the star action of `St(Φ, B)`, and the
//! operators `T_α(c/h^s)` acting on it.
//!
//! Orbit equality is not decidable in general, so every claim about pairs is checked on
//! the image `μ[u, v] = ῑ(u) λ_h(v)` in the adjoint representation over a field (or over
//! `A_h`) that contains every ring involved.

use std::env;

use rand::{Rng as _, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::rep::{GroupMatrix, Representation};
use crate::ring::decompose::PatchingDatum;
use crate::ring::{Ideal, Ring, RingElement, RingKind, Rng, Value};
use crate::roots::RootSystem;
use crate::words::SteinbergWord;

/// Levels kept by a [`TruncatedProRng`] unless `STEINBERG_LAB_DEPTH` says otherwise.
pub const DEFAULT_DEPTH: u32 = 16;

/// Truncation depth from the environment, falling back to [`DEFAULT_DEPTH`].
pub fn depth_from_env() -> u32 {
    env::var("STEINBERG_LAB_DEPTH").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_DEPTH)
}

/// The inverse system `h^0 R ⊇ h^1 R ⊇ ... ⊇ h^depth R` with inclusions as structure maps.
#[derive(Clone, Debug)]
pub struct TruncatedProRng {
    base: Ring,
    h: RingElement,
    depth: u32,
}

impl TruncatedProRng {
    pub fn new(base: &Ring, h: &RingElement, depth: u32) -> Result<TruncatedProRng> {
        base.check_owner(h)?;
        if h.is_zero() {
            return Err(Error::Precondition("h must be nonzero".into()));
        }
        Ok(TruncatedProRng { base: base.clone(), h: h.clone(), depth })
    }

    pub fn from_env(base: &Ring, h: &RingElement) -> Result<TruncatedProRng> {
        TruncatedProRng::new(base, h, depth_from_env())
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn h(&self) -> &RingElement {
        &self.h
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    fn check_level(&self, k: u32) -> Result<()> {
        if k > self.depth {
            return Err(Error::IndexOutOfRange { index: k as usize, level: self.depth as usize });
        }
        Ok(())
    }

    /// `h^k R` as a rng.
    pub fn level(&self, k: u32) -> Result<Rng> {
        self.check_level(k)?;
        Ok(Rng::new(Ideal::principal(&self.h.pow(k))))
    }

    pub fn contains(&self, k: u32, x: &RingElement) -> Result<bool> {
        self.check_level(k)?;
        self.base.check_owner(x)?;
        Ok(x.is_zero() || x.valuation(&self.h, k) >= k)
    }

    /// The structure map `h^{k+1} R -> h^k R`.
    pub fn structure_map(&self, k: u32, x: &RingElement) -> Result<RingElement> {
        if !self.contains(k + 1, x)? {
            return Err(Error::Precondition(format!("{x} is not in level {}", k + 1)));
        }
        Ok(x.clone())
    }
}

/// `x_γ(c h^e)` with the power of `h` kept apart so exponents can be tracked exactly.
#[derive(Clone, Debug)]
struct Scaled {
    root: usize,
    coef: RingElement,
    exp: u32,
}

fn inverse_of(letters: &[Scaled]) -> Vec<Scaled> {
    letters.iter().rev().map(|l| Scaled { root: l.root, coef: -&l.coef, exp: l.exp }).collect()
}

/// `(a, s)` with `x = a / h^s` for `x` in `base_h`.
fn split_fraction(base: &Ring, x: &RingElement) -> Result<(RingElement, u32)> {
    match x.value() {
        Value::Frac(num, s) => Ok((base.wrap((**num).clone()), *s)),
        _ => Err(Error::Precondition(format!("{x} is not in a localization of {base}"))),
    }
}

/// Input exponent that guarantees output exponents `>= t` after conjugating by one
/// letter `x_β(a/h^s)`: the opposite-root case splits `h^e` in half and loses `s` on
/// each side, so `2(t + s)` always suffices.
fn letter_bound(s: u32, t: u32) -> u32 {
    2 * (t + s)
}

/// The conjugation homomorphism `c_g` for `g ∈ St(Φ, R_h)`, defined on `St(Φ, h^n R)`.
#[derive(Clone, Debug)]
pub struct ConjHom {
    base: Ring,
    local: Ring,
    h: RingElement,
    g: SteinbergWord,
    factors: Vec<(usize, RingElement, u32)>,
    bound: u32,
}

impl ConjHom {
    /// `g` may be given over `R` or over `R_h`.
    pub fn new(base: &Ring, h: &RingElement, g: &SteinbergWord) -> Result<ConjHom> {
        base.check_owner(h)?;
        let local = Ring::localization(base, h)?;
        let g = g.coerce_into(&local)?;
        let factors = g
            .letters()
            .iter()
            .map(|l| split_fraction(base, &l.arg).map(|(a, s)| (l.root, a, s)))
            .collect::<Result<Vec<_>>>()?;
        let bound = factors.iter().fold(0, |t, (_, _, s)| letter_bound(*s, t));
        Ok(ConjHom { base: base.clone(), local, h: h.clone(), g, factors, bound })
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    /// `R_h`, the ring of `g`.
    pub fn local(&self) -> &Ring {
        &self.local
    }

    pub fn h(&self) -> &RingElement {
        &self.h
    }

    pub fn g(&self) -> &SteinbergWord {
        &self.g
    }

    /// `n(g)`: `c_g` is defined on arguments in `h^k R` for every `k >= n(g)`.
    pub fn bound(&self) -> u32 {
        self.bound
    }

    fn system(&self) -> &RootSystem {
        self.g.system()
    }

    /// Conjugate one letter by `x_β(a/h^s)`, appending the result to `out`.
    fn conj_letter(&self, beta: usize, a: &RingElement, s: u32, x: &Scaled, out: &mut Vec<Scaled>) -> Result<()> {
        let phi = self.system();
        let gamma = x.root;
        if gamma == phi.neg(beta) {
            if x.exp < 2 * s {
                return Err(Error::ExponentTooSmall { given: x.exp, required: 2 * s });
            }
            // x_{-β}(c h^e) = [x_p(N c h^{e-j}), x_q(h^j)] with p + q = -β.
            let (p, q) = phi.decomposition_index(gamma)?;
            let n = phi.constant(p, q).expect("decomposition is a root sum");
            let j = x.exp / 2;
            let xp = Scaled { root: p, coef: &x.coef * &self.base.from_i64(n as i64), exp: x.exp - j };
            let xq = Scaled { root: q, coef: self.base.one(), exp: j };
            let mut cp = Vec::new();
            let mut cq = Vec::new();
            self.conj_letter(beta, a, s, &xp, &mut cp)?;
            self.conj_letter(beta, a, s, &xq, &mut cq)?;
            out.extend(cp.iter().cloned());
            out.extend(cq.iter().cloned());
            out.extend(inverse_of(&cp));
            out.extend(inverse_of(&cq));
            return Ok(());
        }
        if let Some(r) = phi.sum_index(beta, gamma) {
            if x.exp < s {
                return Err(Error::ExponentTooSmall { given: x.exp, required: s });
            }
            let n = phi.constant(beta, gamma).expect("sum is a root");
            let coef = &(&self.base.from_i64(n as i64) * a) * &x.coef;
            out.push(Scaled { root: r, coef, exp: x.exp - s });
        }
        out.push(x.clone());
        Ok(())
    }

    fn conj_scaled(&self, mut letters: Vec<Scaled>) -> Result<Vec<Scaled>> {
        for (beta, a, s) in self.factors.iter().rev() {
            let mut next = Vec::with_capacity(letters.len() * 2);
            for x in &letters {
                self.conj_letter(*beta, a, *s, x, &mut next)?;
            }
            letters = next;
        }
        Ok(letters)
    }

    fn assemble(&self, letters: &[Scaled]) -> Result<SteinbergWord> {
        let mut w = SteinbergWord::empty(&self.base, self.system());
        let mut powers: Vec<RingElement> = vec![self.base.one()];
        for l in letters {
            while powers.len() <= l.exp as usize {
                let next = powers.last().unwrap() * &self.h;
                powers.push(next);
            }
            w.push(l.root, &l.coef * &powers[l.exp as usize])?;
        }
        Ok(w)
    }

    fn scaled_word(&self, w: &SteinbergWord, k: u32) -> Result<Vec<Scaled>> {
        if w.system() != self.system() {
            return Err(Error::UnsupportedSystem(format!("{} vs {}", w.system(), self.system())));
        }
        let hk = self.h.pow(k);
        w.letters()
            .iter()
            .map(|l| {
                let x = self.base.coerce(&l.arg)?;
                Ok(Scaled { root: l.root, coef: x.try_div(&hk)?, exp: k })
            })
            .collect()
    }

    /// `c_g(w)` for `w` with every argument in `h^k R`, `k >= n(g)`.
    pub fn apply(&self, w: &SteinbergWord, k: u32) -> Result<SteinbergWord> {
        if k < self.bound {
            return Err(Error::ExponentTooSmall { given: k, required: self.bound });
        }
        let letters = self.scaled_word(w, k)?;
        self.assemble(&self.conj_scaled(letters)?)
    }

    /// `c_g(x_γ(b h^k))`, checking only the exponents each step actually needs.
    pub fn on_generator(&self, gamma: usize, b: &RingElement, k: u32) -> Result<SteinbergWord> {
        let x = Scaled { root: gamma, coef: self.base.coerce(b)?, exp: k };
        self.assemble(&self.conj_scaled(vec![x])?)
    }

    /// Both sides of `c_g(x) = g x g⁻¹` in `rep` over `eval`.
    pub fn strict_sides(
        &self,
        x: &SteinbergWord,
        k: u32,
        rep: &Representation,
        eval: &Ring,
    ) -> Result<(GroupMatrix, GroupMatrix)> {
        let lhs = rep.evaluate(&self.apply(x, k)?.coerce_into(eval)?);
        let xg = x.coerce_into(&self.local)?;
        let rhs = rep.evaluate(&SteinbergWord::conjugate(&self.g, &xg)?.coerce_into(eval)?);
        Ok((lhs, rhs))
    }

    /// `c_{ῑ(g)}` on the `A` side of a patching datum.
    pub fn transport(&self, datum: &PatchingDatum) -> Result<ConjHom> {
        if datum.b_ring() != &self.base {
            return Err(Error::MismatchedRings(datum.b_ring().to_string(), self.base.to_string()));
        }
        let h = datum.iota(&self.h)?;
        let a_h = Ring::localization(datum.a_ring(), &h)?;
        ConjHom::new(datum.a_ring(), &h, &self.g.coerce_into(&a_h)?)
    }
}

/// `c_{x_β(a/h^s)}(x_γ(b h^k))` as a word over `base`; `g` must be a single letter over
/// `base_h` (or `base`).
pub fn conj_on_generator(
    base: &Ring,
    h: &RingElement,
    g: &SteinbergWord,
    gamma: usize,
    b: &RingElement,
    k: u32,
) -> Result<SteinbergWord> {
    if g.len() > 1 {
        return Err(Error::Precondition(format!("expected a single generator, got {g}")));
    }
    ConjHom::new(base, h, g)?.on_generator(gamma, b, k)
}

/// `c_g(w)` together with the bound `n(g)` that made it admissible.
pub fn conj_word(
    base: &Ring,
    h: &RingElement,
    g: &SteinbergWord,
    w: &SteinbergWord,
    k: u32,
) -> Result<(SteinbergWord, u32)> {
    let c = ConjHom::new(base, h, g)?;
    Ok((c.apply(w, k)?, c.bound()))
}

/// A representative `(u, v)` of a point `[u, v]` of the orbit set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatchPair {
    pub u: SteinbergWord,
    pub v: SteinbergWord,
}

/// A patching datum with everything needed to act on pairs: root system, localized rings
/// and the representation used for `μ`.
#[derive(Clone, Debug)]
pub struct Patcher {
    datum: PatchingDatum,
    system: RootSystem,
    rep: Representation,
    b_h: Ring,
    a_h: Ring,
    eval: Ring,
    h_b: RingElement,
    h_a: RingElement,
}

impl Patcher {
    pub fn new(datum: PatchingDatum, system: &RootSystem) -> Result<Patcher> {
        let h_b = datum.h().clone();
        let h_a = datum.iota(&h_b)?;
        let b_h = Ring::localization(datum.b_ring(), &h_b)?;
        let a_h = Ring::localization(datum.a_ring(), &h_a)?;
        // Over the integers everything embeds in Q, where evaluation is cheapest.
        let eval = match datum.b_ring().kind() {
            RingKind::Integers => Ring::rationals(),
            _ => a_h.clone(),
        };
        Ok(Patcher { rep: Representation::adjoint(system), system: system.clone(), datum, b_h, a_h, eval, h_b, h_a })
    }

    /// `B = Z`, `A = Z[1/a]`, `h = b`.
    pub fn zariski_integers(a: i64, b: i64, system: &RootSystem) -> Result<Patcher> {
        let z = Ring::integers();
        Patcher::new(PatchingDatum::zariski(&z, &z.from_i64(a), &z.from_i64(b))?, system)
    }

    pub fn datum(&self) -> &PatchingDatum {
        &self.datum
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn b_ring(&self) -> &Ring {
        self.datum.b_ring()
    }

    pub fn a_ring(&self) -> &Ring {
        self.datum.a_ring()
    }

    pub fn b_h(&self) -> &Ring {
        &self.b_h
    }

    pub fn a_h(&self) -> &Ring {
        &self.a_h
    }

    /// The ring in which `μ` is evaluated.
    pub fn eval_ring(&self) -> &Ring {
        &self.eval
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    /// `[1, 1]`.
    pub fn base_point(&self) -> PatchPair {
        PatchPair {
            u: SteinbergWord::empty(&self.b_h, &self.system),
            v: SteinbergWord::empty(self.a_ring(), &self.system),
        }
    }

    pub fn pair(&self, u: &SteinbergWord, v: &SteinbergWord) -> Result<PatchPair> {
        Ok(PatchPair { u: u.coerce_into(&self.b_h)?, v: v.coerce_into(self.a_ring())? })
    }

    /// `c / h^s` in `A_h`.
    fn fraction(&self, c: &RingElement, s: u32) -> Result<RingElement> {
        let inv = self.a_h.coerce(&self.h_a)?.inverse()?;
        Ok(&self.a_h.coerce(c)? * &inv.pow(s))
    }

    pub fn evaluate(&self, w: &SteinbergWord) -> Result<GroupMatrix> {
        Ok(self.rep.evaluate(&w.coerce_into(&self.eval)?))
    }

    /// `μ[u, v] = ῑ(u) λ_h(v)`.
    pub fn mu(&self, p: &PatchPair) -> Result<GroupMatrix> {
        let w = p.u.coerce_into(&self.eval)?.concat(&p.v.coerce_into(&self.eval)?)?;
        Ok(self.rep.evaluate(&w))
    }

    /// `g ⋆ (u, v) = (u λ_h(g)⁻¹, ι(g) v)` for `g ∈ St(Φ, B)`.
    pub fn star_reduce(&self, p: &PatchPair, g: &SteinbergWord) -> Result<PatchPair> {
        if g.ring() != self.b_ring() {
            return Err(Error::MismatchedRings(g.ring().to_string(), self.b_ring().to_string()));
        }
        let u = p.u.concat(&g.coerce_into(&self.b_h)?.inverse())?;
        let v = g.coerce_into(self.a_ring())?.concat(&p.v)?;
        Ok(PatchPair { u, v })
    }

    /// `c_{ῑ(u⁻¹)}` on the `A` side.
    fn conj_a(&self, u: &SteinbergWord) -> Result<ConjHom> {
        let g = u.inverse().coerce_into(&self.a_h)?;
        ConjHom::new(self.a_ring(), &self.h_a, &g)
    }

    /// Smallest `k` accepted by [`Patcher::t_alpha_at`] for `p` and `s`.
    pub fn min_exponent(&self, p: &PatchPair, s: u32) -> Result<u32> {
        Ok(self.conj_a(&p.u)?.bound() + s)
    }

    /// `T_α(c/h^s) [u, v]` with the smallest admissible `k`.
    pub fn t_alpha(&self, alpha: usize, c: &RingElement, s: u32, p: &PatchPair) -> Result<PatchPair> {
        let k = self.min_exponent(p, s)?;
        self.t_alpha_at(alpha, c, s, p, k)
    }

    /// `T_α(c/h^s) [u, v] = [x_α(b/h^s) u, c_{ῑ(u⁻¹)}(x_α(a h^{k-s})) v]` where `c = a h^k + b`.
    pub fn t_alpha_at(&self, alpha: usize, c: &RingElement, s: u32, p: &PatchPair, k: u32) -> Result<PatchPair> {
        let conj = self.conj_a(&p.u)?;
        if k < conj.bound() + s {
            return Err(Error::ExponentTooSmall { given: k, required: conj.bound() + s });
        }
        let c = self.a_ring().coerce(c)?;
        let (a, b) = self.datum.decompose(&c, k)?;
        let hinv = self.b_h.coerce(&self.h_b)?.inverse()?;
        let mut u = SteinbergWord::gen(&self.b_h, &self.system, alpha, &self.b_h.coerce(&b)? * &hinv.pow(s))?;
        u = u.concat(&p.u)?;
        let x = SteinbergWord::gen(self.a_ring(), &self.system, alpha, &a * &self.h_a.pow(k - s))?;
        let v = conj.apply(&x, k - s)?.concat(&p.v)?;
        Ok(PatchPair { u, v })
    }

    /// Act by a word over `A_h` (or `A`) letter by letter, rightmost letter first.
    pub fn act(&self, w: &SteinbergWord, p: &PatchPair) -> Result<PatchPair> {
        let w = w.coerce_into(&self.a_h)?;
        let mut p = p.clone();
        for l in w.letters().iter().rev() {
            let (c, s) = split_fraction(self.a_ring(), &l.arg)?;
            p = self.t_alpha(l.root, &c, s, &p)?;
        }
        Ok(p)
    }

    /// Pull a kernel element `x ∈ St(Φ, A)` back to `y ∈ St(Φ, B)`.
    ///
    /// `x · [1, 1]` is computed with the operators `T`; normalizing the result by the star
    /// action gives `[1, v']` with `v' ∈ St(Φ, A)`. When every argument of `v'` comes from
    /// `B`, its preimage is returned; otherwise `certificate` (a word over `B`) is used.
    /// Both `ι(y) ≡ x` and `λ_h(y) ≡ 1` are verified in the representation.
    pub fn glueing_demo(&self, x: &SteinbergWord, certificate: Option<&SteinbergWord>) -> Result<GlueingOutcome> {
        let x = x.coerce_into(self.a_ring())?;
        if !self.evaluate(&x)?.is_identity() {
            return Err(Error::Precondition(format!("{x} is not in the kernel over {}", self.a_h)));
        }
        let pair = self.act(&x, &self.base_point())?;
        let g = pair.u.map_args(self.b_ring(), |c| {
            let (num, s) = split_fraction(self.b_ring(), c)?;
            if s == 0 {
                Ok(num)
            } else {
                Err(Error::Precondition("unexpected denominator".into()))
            }
        })?;
        let normalized = self.star_reduce(&pair, &g)?;
        let mut descended = true;
        let mut y = SteinbergWord::empty(self.b_ring(), &self.system);
        for l in normalized.v.letters() {
            match self.datum.descend(&l.arg) {
                Some(b) => y.push(l.root, b)?,
                None => {
                    descended = false;
                    break;
                }
            }
        }
        if !descended {
            let cert = certificate.ok_or_else(|| {
                Error::Precondition("certificate missing: the orbit representative does not descend to B".into())
            })?;
            y = cert.coerce_into(self.b_ring())?;
        }
        let image = self.evaluate(&y.coerce_into(self.a_ring())?)?;
        let local = self.evaluate(&y.coerce_into(&self.b_h)?)?;
        let target = self.evaluate(&x)?;
        if image != target || !local.is_identity() {
            return Err(Error::Verification(format!("{y} does not glue to {x}")));
        }
        Ok(GlueingOutcome { y, pair, normalized, descended })
    }
}

/// Result of [`Patcher::glueing_demo`].
#[derive(Clone, Debug)]
pub struct GlueingOutcome {
    pub y: SteinbergWord,
    /// `x · [1, 1]` as computed by the operators.
    pub pair: PatchPair,
    /// The same point written as `[1, v']`.
    pub normalized: PatchPair,
    /// Whether `y` was read off `v'` rather than taken from the certificate.
    pub descended: bool,
}

/// Outcome of one sweep: `failures` out of `samples` checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub samples: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckReport {
    fn new(check: &str) -> CheckReport {
        CheckReport { check: check.into(), samples: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn record_result(&mut self, r: Result<bool>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, describe),
            Err(e) => self.record(false, || format!("{}: {e}", describe())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.samples > 0
    }

    pub fn to_json(&self) -> Json {
        json!({"check": self.check, "samples": self.samples, "failures": self.failures})
    }
}

/// Random data for the sweeps, kept small so words stay short.
struct Sampler<'a> {
    p: &'a Patcher,
    rng: ChaCha8Rng,
}

impl Sampler<'_> {
    fn root(&mut self) -> usize {
        self.rng.gen_range(0..self.p.system.len())
    }

    fn nonzero(&mut self, ring: &Ring) -> RingElement {
        loop {
            let x = ring.random_element(&mut self.rng as &mut dyn RngCore, 4);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// `r / h^s` with `r ∈ B`, `s ≤ 1`.
    fn b_h_element(&mut self) -> RingElement {
        let r = self.nonzero(&self.p.b_ring().clone());
        let s = self.rng.gen_range(0..=1);
        let hinv = self.p.b_h.coerce(&self.p.h_b).unwrap().inverse().unwrap();
        &self.p.b_h.coerce(&r).unwrap() * &hinv.pow(s)
    }

    fn word(&mut self, ring: &Ring, max_len: usize, mut arg: impl FnMut(&mut Self) -> RingElement) -> SteinbergWord {
        let mut w = SteinbergWord::empty(ring, &self.p.system);
        for _ in 0..self.rng.gen_range(0..=max_len) {
            let a = self.root();
            let x = arg(self);
            w.push(a, x).unwrap();
        }
        w
    }

    fn pair(&mut self) -> PatchPair {
        let b_h = self.p.b_h.clone();
        let a = self.p.a_ring().clone();
        let u = self.word(&b_h, 2, |s| s.b_h_element());
        let v = self.word(&a, 2, |s| s.nonzero(&a));
        PatchPair { u, v }
    }

    fn exponent(&mut self) -> u32 {
        self.rng.gen_range(0..=2)
    }
}

impl Patcher {
    fn sampler(&self, seed: u64) -> Sampler<'_> {
        Sampler { p: self, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// `c_g(x) = g x g⁻¹` in the representation and `ι ∘ c_g = c_{ῑ(g)} ∘ ι` on words, for
    /// random `g` of length `≤ 2` over `B_h` and random `x` above the bound.
    pub fn verify_conjugation(
        &self,
        g_count: usize,
        args_per_g: usize,
        seed: u64,
    ) -> Result<(CheckReport, CheckReport)> {
        let mut strict = CheckReport::new("conjugation");
        let mut coherence = CheckReport::new("coherence");
        let mut smp = self.sampler(seed);
        let b = self.b_ring().clone();
        let b_h = self.b_h.clone();
        for _ in 0..g_count {
            let g = smp.word(&b_h, 2, |s| s.b_h_element());
            let c = ConjHom::new(&b, &self.h_b, &g)?;
            let ca = c.transport(&self.datum)?;
            for _ in 0..args_per_g {
                let k = c.bound() + smp.rng.gen_range(0..=2);
                let hk = self.h_b.pow(k);
                let x = smp.word(&b, 2, |s| &s.nonzero(&b) * &hk);
                let desc = || format!("g = {g}, x = {x}, k = {k}");
                strict.record_result(c.strict_sides(&x, k, &self.rep, &self.eval).map(|(l, r)| l == r), desc);
                let lhs = c.apply(&x, k).and_then(|w| w.coerce_into(self.a_ring()));
                let rhs = x.coerce_into(self.a_ring()).and_then(|xa| ca.apply(&xa, k));
                coherence.record_result(lhs.and_then(|l| rhs.map(|r| l == r)), desc);
            }
        }
        Ok((strict, coherence))
    }

    /// Relations R1–R3 for the operators, compared on `μ`.
    pub fn verify_t_relations(&self, samples: usize, seed: u64) -> TRelationReport {
        let phi = self.system.clone();
        let a_ring = self.a_ring().clone();
        let mut smp = self.sampler(seed);
        let mut r1 = CheckReport::new("R1");
        let mut r2 = CheckReport::new("R2");
        let mut r3 = CheckReport::new("R3");
        for _ in 0..samples {
            let p = smp.pair();
            let alpha = smp.root();
            let s = smp.exponent();
            let (c, c2) = (smp.nonzero(&a_ring), smp.nonzero(&a_ring));
            let check = || -> Result<bool> {
                let lhs = self.t_alpha(alpha, &c2, s, &self.t_alpha(alpha, &c, s, &p)?)?;
                let rhs = self.t_alpha(alpha, &(&c + &c2), s, &p)?;
                Ok(self.mu(&lhs)? == self.mu(&rhs)?)
            };
            r1.record_result(check(), || format!("alpha = {alpha}, c = {c}, c' = {c2}, s = {s}, p = {p:?}"));

            // R2: a pair with α + β ∉ Φ ∪ 0, β ≠ α.
            let beta = loop {
                let b = smp.root();
                if b != alpha && b != phi.neg(alpha) && phi.sum_index(alpha, b).is_none() {
                    break Some(b);
                }
                if phi.len() <= 2 {
                    break None;
                }
            };
            if let Some(beta) = beta {
                let s2 = smp.exponent();
                let check = || -> Result<bool> {
                    let lhs = self.t_alpha(alpha, &c, s, &self.t_alpha(beta, &c2, s2, &p)?)?;
                    let rhs = self.t_alpha(beta, &c2, s2, &self.t_alpha(alpha, &c, s, &p)?)?;
                    Ok(self.mu(&lhs)? == self.mu(&rhs)?)
                };
                r2.record_result(check(), || format!("alpha = {alpha}, beta = {beta}, p = {p:?}"));
            }

            // R3: [T_α(x), T_β(y)] = T_{α+β}(N_αβ xy).
            let partners: Vec<usize> = (0..phi.len()).filter(|&b| phi.sum_index(alpha, b).is_some()).collect();
            if !partners.is_empty() {
                let beta = partners[smp.rng.gen_range(0..partners.len())];
                let s2 = smp.exponent();
                let n = a_ring.from_i64(phi.constant(alpha, beta).unwrap() as i64);
                let gamma = phi.sum_index(alpha, beta).unwrap();
                let check = || -> Result<bool> {
                    let mut q = self.t_alpha(beta, &-&c2, s2, &p)?;
                    q = self.t_alpha(alpha, &-&c, s, &q)?;
                    q = self.t_alpha(beta, &c2, s2, &q)?;
                    q = self.t_alpha(alpha, &c, s, &q)?;
                    let rhs = self.t_alpha(gamma, &(&n * &(&c * &c2)), s + s2, &p)?;
                    Ok(self.mu(&q)? == self.mu(&rhs)?)
                };
                r3.record_result(check(), || format!("alpha = {alpha}, beta = {beta}, p = {p:?}"));
            }
        }
        TRelationReport { r1, r2, r3 }
    }

    /// Two admissible exponents `k < k'` give different decompositions but the same `μ`.
    pub fn verify_independence(&self, samples: usize, seed: u64) -> CheckReport {
        let mut report = CheckReport::new("independence");
        let mut smp = self.sampler(seed);
        let a_ring = self.a_ring().clone();
        for _ in 0..samples {
            let p = smp.pair();
            let (alpha, c, s) = (smp.root(), smp.nonzero(&a_ring), smp.exponent());
            let extra = smp.rng.gen_range(1..=3);
            let check = || -> Result<bool> {
                let k = self.min_exponent(&p, s)?;
                let x = self.t_alpha_at(alpha, &c, s, &p, k)?;
                let y = self.t_alpha_at(alpha, &c, s, &p, k + extra)?;
                Ok(self.mu(&x)? == self.mu(&y)?)
            };
            report.record_result(check(), || format!("alpha = {alpha}, c = {c}, s = {s}, p = {p:?}"));
        }
        report
    }

    /// `μ(T_α(c/h^s) p) = x_α(c/h^s) μ(p)`.
    pub fn verify_equivariance(&self, samples: usize, seed: u64) -> CheckReport {
        let mut report = CheckReport::new("equivariance");
        let mut smp = self.sampler(seed);
        let a_ring = self.a_ring().clone();
        for _ in 0..samples {
            let p = smp.pair();
            let (alpha, c, s) = (smp.root(), smp.nonzero(&a_ring), smp.exponent());
            let check = || -> Result<bool> {
                let q = self.t_alpha(alpha, &c, s, &p)?;
                let x = SteinbergWord::gen(&self.a_h, &self.system, alpha, self.fraction(&c, s)?)?;
                let rhs = self.evaluate(&x)?.mul(&self.mu(&p)?)?;
                Ok(self.mu(&q)? == rhs)
            };
            report.record_result(check(), || format!("alpha = {alpha}, c = {c}, s = {s}, p = {p:?}"));
        }
        report
    }

    /// The two patterns `v · [1, 1] = [1, v]` (on `μ`, for `v ∈ St(Φ, A)`) and
    /// `T_α(b/h^s) [u, v] = [x_α(b/h^s) u, v]` (on words, for `b ∈ B`).
    pub fn verify_additional(&self, samples: usize, seed: u64) -> (CheckReport, CheckReport) {
        let mut from_a = CheckReport::new("additional-A");
        let mut from_b = CheckReport::new("additional-B");
        let mut smp = self.sampler(seed);
        let a_ring = self.a_ring().clone();
        let b_ring = self.b_ring().clone();
        for _ in 0..samples {
            let v = smp.word(&a_ring, 3, |s| s.nonzero(&a_ring));
            let check = || -> Result<bool> {
                let p = self.act(&v, &self.base_point())?;
                Ok(self.mu(&p)? == self.evaluate(&v)?)
            };
            from_a.record_result(check(), || format!("v = {v}"));

            let p = smp.pair();
            let (alpha, b, s) = (smp.root(), smp.nonzero(&b_ring), smp.exponent());
            let check = || -> Result<bool> {
                let q = self.t_alpha(alpha, &self.datum.iota(&b)?, s, &p)?;
                let hinv = self.b_h.coerce(&self.h_b)?.inverse()?;
                let x = SteinbergWord::gen(&self.b_h, &self.system, alpha, &self.b_h.coerce(&b)? * &hinv.pow(s))?;
                Ok(q.u == x.concat(&p.u)? && q.v == p.v)
            };
            from_b.record_result(check(), || format!("alpha = {alpha}, b = {b}, s = {s}, p = {p:?}"));
        }
        (from_a, from_b)
    }

    /// `μ` is constant on star orbits: random `g ∈ St(Φ, B)` of length `≤ 3`.
    pub fn verify_star_invariance(&self, samples: usize, seed: u64) -> CheckReport {
        let mut report = CheckReport::new("star-invariance");
        let mut smp = self.sampler(seed);
        let b_ring = self.b_ring().clone();
        for _ in 0..samples {
            let p = smp.pair();
            let g = smp.word(&b_ring, 3, |s| s.nonzero(&b_ring));
            let check = || -> Result<bool> {
                let q = self.star_reduce(&p, &g)?;
                let back = self.star_reduce(&q, &g.inverse())?;
                Ok(self.mu(&q)? == self.mu(&p)? && self.mu(&back)? == self.mu(&p)?)
            };
            report.record_result(check(), || format!("g = {g}, p = {p:?}"));
        }
        report
    }

    /// Every sweep at `samples` samples, in a fixed order.
    pub fn verify_all(&self, samples: usize, seed: u64) -> Result<Vec<CheckReport>> {
        let (strict, coherence) = self.verify_conjugation(samples.div_ceil(10).max(1), 10, seed)?;
        let t = self.verify_t_relations(samples, seed.wrapping_add(1));
        let (add_a, add_b) = self.verify_additional(samples, seed.wrapping_add(4));
        Ok(vec![
            strict,
            coherence,
            t.r1,
            t.r2,
            t.r3,
            self.verify_independence(samples, seed.wrapping_add(2)),
            self.verify_equivariance(samples, seed.wrapping_add(3)),
            add_a,
            add_b,
            self.verify_star_invariance(samples, seed.wrapping_add(5)),
        ])
    }
}

/// The three relation sweeps of [`Patcher::verify_t_relations`].
#[derive(Clone, Debug)]
pub struct TRelationReport {
    pub r1: CheckReport,
    pub r2: CheckReport,
    pub r3: CheckReport,
}

impl TRelationReport {
    pub fn passed(&self) -> bool {
        self.r1.passed() && self.r2.passed() && self.r3.passed()
    }

    pub fn to_json(&self) -> Json {
        json!([self.r1.to_json(), self.r2.to_json(), self.r3.to_json()])
    }
}
