//! Formal words in the Steinberg group `St(Φ, R)`.
//!
//! Words are kept R1-normalized at all times: `x_α(0)` never appears and no two adjacent
//! letters share a root. Equality of words is syntactic; group-level claims go through a
//! representation (see [`crate::rep`]) or through the sound rewriting of
//! [`SteinbergWord::commutator_reduce`].

use std::fmt;

use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::rep::Representation;
use crate::ring::{Ideal, Ring, RingElement, RingHom};
use crate::roots::{Root, RootSystem};

/// `x_α(ξ)` with `α` given by its index in the root enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub root: usize,
    pub arg: RingElement,
}

#[derive(Clone, PartialEq, Eq)]
pub struct SteinbergWord {
    ring: Ring,
    system: RootSystem,
    letters: Vec<Letter>,
}

impl fmt::Debug for SteinbergWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {} in St({})", self.ring, self.system)
    }
}

impl fmt::Display for SteinbergWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.letters.iter().map(|l| format!("x[{}]({})", self.system.root(l.root), l.arg)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Cap on rewriting steps in [`SteinbergWord::commutator_reduce`].
const REDUCE_STEPS: usize = 20_000;

impl SteinbergWord {
    pub fn empty(ring: &Ring, system: &RootSystem) -> SteinbergWord {
        SteinbergWord { ring: ring.clone(), system: system.clone(), letters: Vec::new() }
    }

    /// `x_α(ξ)` for the root with index `root`.
    pub fn gen(ring: &Ring, system: &RootSystem, root: usize, xi: RingElement) -> Result<SteinbergWord> {
        let mut w = SteinbergWord::empty(ring, system);
        w.push(root, xi)?;
        Ok(w)
    }

    pub fn gen_root(ring: &Ring, system: &RootSystem, root: &Root, xi: RingElement) -> Result<SteinbergWord> {
        SteinbergWord::gen(ring, system, system.index_of(root)?, xi)
    }

    /// Build from `(root, arg, sign)` triples; `sign = -1` is the formal inverse.
    pub fn from_letters<I>(ring: &Ring, system: &RootSystem, letters: I) -> Result<SteinbergWord>
    where
        I: IntoIterator<Item = (usize, RingElement, i8)>,
    {
        let mut w = SteinbergWord::empty(ring, system);
        for (root, arg, sign) in letters {
            let arg = match sign {
                1 => arg,
                -1 => -arg,
                s => return Err(Error::Parse(format!("letter sign must be ±1, got {s}"))),
            };
            w.push(root, arg)?;
        }
        Ok(w)
    }

    /// Append `x_α(ξ)`, merging with the last letter by R1.
    pub fn push(&mut self, root: usize, xi: RingElement) -> Result<()> {
        if root >= self.system.len() {
            return Err(Error::ForeignRoot(format!("#{root}"), self.system.name()));
        }
        let xi = if xi.ring() == &self.ring { xi } else { self.ring.coerce(&xi)? };
        self.push_unchecked(root, xi);
        Ok(())
    }

    fn push_unchecked(&mut self, root: usize, xi: RingElement) {
        if xi.is_zero() {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.root == root {
                let merged = &last.arg + &xi;
                if merged.is_zero() {
                    self.letters.pop();
                } else {
                    last.arg = merged;
                }
                return;
            }
        }
        self.letters.push(Letter { root, arg: xi });
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_compatible(&self, other: &SteinbergWord) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::MismatchedRings(self.ring.to_string(), other.ring.to_string()));
        }
        if self.system != other.system {
            return Err(Error::UnsupportedSystem(format!("{} vs {}", self.system, other.system)));
        }
        Ok(())
    }

    pub fn inverse(&self) -> SteinbergWord {
        let mut w = SteinbergWord::empty(&self.ring, &self.system);
        for l in self.letters.iter().rev() {
            w.push_unchecked(l.root, -&l.arg);
        }
        w
    }

    pub fn concat(&self, other: &SteinbergWord) -> Result<SteinbergWord> {
        self.check_compatible(other)?;
        let mut w = self.clone();
        for l in &other.letters {
            w.push_unchecked(l.root, l.arg.clone());
        }
        Ok(w)
    }

    /// Concatenation of several words over the same ring.
    pub fn product<'a>(words: impl IntoIterator<Item = &'a SteinbergWord>) -> Result<SteinbergWord> {
        let mut it = words.into_iter();
        let Some(first) = it.next() else {
            return Err(Error::Precondition("empty product has no ring".into()));
        };
        it.try_fold(first.clone(), |acc, w| acc.concat(w))
    }

    /// `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn commutator(x: &SteinbergWord, y: &SteinbergWord) -> Result<SteinbergWord> {
        SteinbergWord::product([x, y, &x.inverse(), &y.inverse()])
    }

    /// `g x g⁻¹`.
    pub fn conjugate(g: &SteinbergWord, x: &SteinbergWord) -> Result<SteinbergWord> {
        SteinbergWord::product([g, x, &g.inverse()])
    }

    /// Sort letters by root index using R2 and R3, wherever no opposite pair blocks.
    ///
    /// `x_α(a) x_β(b)` with `α` after `β` becomes `x_β(b) x_α(a)` when `α+β ∉ Φ ∪ 0`, and
    /// `x_β(b) x_α(a) x_{α+β}(N_αβ ab)` when `α+β ∈ Φ`. Every step is an identity in
    /// `St(Φ, R)`, so the output equals the input in the group; the output is not a
    /// canonical form.
    pub fn commutator_reduce(&self) -> SteinbergWord {
        let phi = &self.system;
        let mut letters = self.letters.clone();
        for _ in 0..REDUCE_STEPS {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < letters.len() {
                let (a, b) = (letters[i].root, letters[i + 1].root);
                if a <= b || b == phi.neg(a) {
                    i += 1;
                    continue;
                }
                let x = letters[i].arg.clone();
                let y = letters[i + 1].arg.clone();
                let mut replacement = vec![Letter { root: b, arg: y.clone() }, Letter { root: a, arg: x.clone() }];
                if let Some(c) = phi.sum_index(a, b) {
                    let n = phi.constant(a, b).expect("sum is a root");
                    let z = &(&x * &y) * &self.ring.from_i64(n as i64);
                    replacement.push(Letter { root: c, arg: z });
                }
                letters.splice(i..i + 2, replacement);
                changed = true;
                break;
            }
            if !changed {
                break;
            }
            letters = renormalize(&self.ring, phi, letters);
        }
        SteinbergWord { ring: self.ring.clone(), system: self.system.clone(), letters }
    }

    /// `w_α(u) = x_α(u) x_{−α}(−u⁻¹) x_α(u)`.
    pub fn weyl(ring: &Ring, system: &RootSystem, root: usize, u: &RingElement) -> Result<SteinbergWord> {
        let u = ring.coerce(u)?;
        let inv = u.inverse().map_err(|_| Error::NotUnit(u.to_string()))?;
        SteinbergWord::from_letters(ring, system, [(root, u.clone(), 1), (system.neg(root), -inv, 1), (root, u, 1)])
    }

    /// `h_α(u) = w_α(u) w_α(−1)`.
    pub fn torus(ring: &Ring, system: &RootSystem, root: usize, u: &RingElement) -> Result<SteinbergWord> {
        let w = SteinbergWord::weyl(ring, system, root, u)?;
        w.concat(&SteinbergWord::weyl(ring, system, root, &-ring.one())?)
    }

    /// The Steinberg symbol `{u, v}_α = h_α(uv) h_α(u)⁻¹ h_α(v)⁻¹`.
    pub fn symbol(
        ring: &Ring,
        system: &RootSystem,
        root: usize,
        u: &RingElement,
        v: &RingElement,
    ) -> Result<SteinbergWord> {
        let u = ring.coerce(u)?;
        let v = ring.coerce(v)?;
        let huv = SteinbergWord::torus(ring, system, root, &(&u * &v))?;
        let hu = SteinbergWord::torus(ring, system, root, &u)?;
        let hv = SteinbergWord::torus(ring, system, root, &v)?;
        SteinbergWord::product([&huv, &hu.inverse(), &hv.inverse()])
    }

    /// `y_α(a, b) = [x_α(a), x_{−α}(b)]`.
    pub fn y_element(
        ring: &Ring,
        system: &RootSystem,
        root: usize,
        a: &RingElement,
        b: &RingElement,
    ) -> Result<SteinbergWord> {
        let x = SteinbergWord::gen(ring, system, root, a.clone())?;
        let y = SteinbergWord::gen(ring, system, system.neg(root), b.clone())?;
        SteinbergWord::commutator(&x, &y)
    }

    /// Apply `φ` letterwise and renormalize.
    pub fn substitute(&self, phi: &RingHom) -> Result<SteinbergWord> {
        if phi.source() != &self.ring {
            return Err(Error::MismatchedRings(phi.source().to_string(), self.ring.to_string()));
        }
        let mut w = SteinbergWord::empty(phi.target(), &self.system);
        for l in &self.letters {
            w.push_unchecked(l.root, phi.apply(&l.arg)?);
        }
        Ok(w)
    }

    /// Transport along the canonical map into `target` (inclusions, localizations, quotients).
    pub fn coerce_into(&self, target: &Ring) -> Result<SteinbergWord> {
        let mut w = SteinbergWord::empty(target, &self.system);
        for l in &self.letters {
            w.push_unchecked(l.root, target.coerce(&l.arg)?);
        }
        Ok(w)
    }

    /// Apply `f` to every argument, collecting into `target`.
    pub fn map_args(
        &self,
        target: &Ring,
        mut f: impl FnMut(&RingElement) -> Result<RingElement>,
    ) -> Result<SteinbergWord> {
        let mut w = SteinbergWord::empty(target, &self.system);
        for l in &self.letters {
            let x = f(&l.arg)?;
            target.check_owner(&x)?;
            w.push_unchecked(l.root, x);
        }
        Ok(w)
    }

    /// JSON letter list `[{"root": coords, "arg": payload, "sign": 1}]`.
    pub fn to_json(&self) -> Json {
        Json::Array(
            self.letters
                .iter()
                .map(|l| json!({"root": self.system.root(l.root).0, "arg": l.arg.to_json()["payload"], "sign": 1}))
                .collect(),
        )
    }

    /// The word together with its ring and system, suitable for files.
    pub fn to_json_document(&self) -> Json {
        json!({"ring": self.ring.to_string(), "system": self.system.name(), "letters": self.to_json()})
    }

    /// Parse a letter list over a known ring and system.
    ///
    /// `root` may be a coordinate list or a string such as `"e1-e2"`; `arg` a payload or
    /// an expression string; `sign` defaults to 1.
    pub fn from_json(ring: &Ring, system: &RootSystem, j: &Json) -> Result<SteinbergWord> {
        let list = j.as_array().ok_or_else(|| Error::Parse("word must be a JSON list".into()))?;
        let mut letters = Vec::with_capacity(list.len());
        for item in list {
            let root = match &item["root"] {
                Json::String(s) => system.parse_root(s)?,
                Json::Array(coords) => {
                    let coords = coords
                        .iter()
                        .map(|c| c.as_i64().map(|v| v as i32))
                        .collect::<Option<Vec<i32>>>()
                        .ok_or_else(|| Error::Parse("root coordinates must be integers".into()))?;
                    system.index_of(&Root(coords))?
                }
                other => return Err(Error::Parse(format!("bad root {other}"))),
            };
            let arg = ring.element_from_payload(&item["arg"])?;
            let sign = item.get("sign").and_then(Json::as_i64).unwrap_or(1) as i8;
            letters.push((root, arg, sign));
        }
        SteinbergWord::from_letters(ring, system, letters)
    }

    /// Parse either a bare letter list (with the given defaults) or a document carrying
    /// `ring`, `system` and `letters`.
    pub fn from_json_document(j: &Json, ring: Option<&Ring>, system: Option<&RootSystem>) -> Result<SteinbergWord> {
        if j.is_array() {
            let ring = ring.ok_or_else(|| Error::Parse("a ring is required".into()))?;
            let system = system.ok_or_else(|| Error::Parse("a root system is required".into()))?;
            return SteinbergWord::from_json(ring, system, j);
        }
        let ring = match j.get("ring") {
            Some(r) => Ring::from_json(r)?,
            None => ring.cloned().ok_or_else(|| Error::Parse("a ring is required".into()))?,
        };
        let system = match j.get("system").and_then(Json::as_str) {
            Some(s) => RootSystem::parse(s)?,
            None => system.cloned().ok_or_else(|| Error::Parse("a root system is required".into()))?,
        };
        SteinbergWord::from_json(&ring, &system, &j["letters"])
    }
}

fn renormalize(ring: &Ring, system: &RootSystem, letters: Vec<Letter>) -> Vec<Letter> {
    let mut w = SteinbergWord::empty(ring, system);
    for l in letters {
        w.push_unchecked(l.root, l.arg);
    }
    w.letters
}

/// A product of Steinberg symbols on one root that remembers how it was built.
///
/// The history makes the passage to Milnor symbols a syntactic map instead of a word
/// problem.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolWord {
    word: SteinbergWord,
    root: usize,
    /// `(u, v, ±1)`: the factors `{u, v}_α^{±1}` in order.
    history: Vec<(RingElement, RingElement, i8)>,
}

impl SymbolWord {
    pub fn identity(ring: &Ring, system: &RootSystem, root: usize) -> SymbolWord {
        SymbolWord { word: SteinbergWord::empty(ring, system), root, history: Vec::new() }
    }

    pub fn symbol(
        ring: &Ring,
        system: &RootSystem,
        root: usize,
        u: &RingElement,
        v: &RingElement,
    ) -> Result<SymbolWord> {
        let word = SteinbergWord::symbol(ring, system, root, u, v)?;
        Ok(SymbolWord { word, root, history: vec![(ring.coerce(u)?, ring.coerce(v)?, 1)] })
    }

    pub fn mul(&self, other: &SymbolWord) -> Result<SymbolWord> {
        if self.root != other.root {
            return Err(Error::UnrecognizedShape("symbols on different roots".into()));
        }
        let mut history = self.history.clone();
        history.extend(other.history.iter().cloned());
        Ok(SymbolWord { word: self.word.concat(&other.word)?, root: self.root, history })
    }

    pub fn inverse(&self) -> SymbolWord {
        let history = self.history.iter().rev().map(|(u, v, s)| (u.clone(), v.clone(), -s)).collect();
        SymbolWord { word: self.word.inverse(), root: self.root, history }
    }

    pub fn word(&self) -> &SteinbergWord {
        &self.word
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn history(&self) -> &[(RingElement, RingElement, i8)] {
        &self.history
    }

    /// Recover a symbol history from a bare word on the root `root`.
    ///
    /// After R1 merging, `{u, v}_α = w(uv) w(−u) w(1) w(−v)` has `x_{−α}` arguments
    /// `−(uv)⁻¹, u⁻¹, −1, v⁻¹`, and its inverse has `−v⁻¹, 1, −u⁻¹, (uv)⁻¹`. The
    /// recognizer guesses a leading factor from these, peels it off (free-product normal
    /// forms are unique, so the remainder is again in normal form) and repeats. The
    /// rebuilt product must reproduce `w` letter for letter; words whose factors cancel
    /// across boundaries may be rejected.
    pub fn recognize(w: &SteinbergWord, root: usize) -> Result<SymbolWord> {
        let ring = w.ring();
        let system = w.system();
        let neg = system.neg(root);
        let fail = || Error::UnrecognizedShape(format!("{w} is not a product of symbols on one root"));
        if w.letters().iter().any(|l| l.root != root && l.root != neg) {
            return Err(fail());
        }
        let mut acc = SymbolWord::identity(ring, system, root);
        let mut rest = w.clone();
        while !rest.is_empty() {
            let args: Vec<&RingElement> =
                rest.letters().iter().filter(|l| l.root == neg).map(|l| &l.arg).take(3).collect();
            let mut candidates = Vec::new();
            if args.len() >= 2 {
                if let (Ok(uv), Ok(u)) = ((-args[0]).inverse(), args[1].inverse()) {
                    if let Ok(v) = uv.try_div(&u) {
                        candidates.push(SymbolWord::symbol(ring, system, root, &u, &v)?);
                    }
                }
            }
            if args.len() >= 3 {
                if let (Ok(v), Ok(u)) = ((-args[0]).inverse(), (-args[2]).inverse()) {
                    candidates.push(SymbolWord::symbol(ring, system, root, &u, &v)?.inverse());
                }
            }
            let mut best: Option<(SymbolWord, SteinbergWord)> = None;
            for c in candidates {
                if c.word.is_empty() {
                    continue;
                }
                let r = c.word.inverse().concat(&rest)?;
                if r.len() < rest.len() && best.as_ref().is_none_or(|(_, b)| r.len() < b.len()) {
                    best = Some((c, r));
                }
            }
            let (c, r) = best.ok_or_else(fail)?;
            acc = acc.mul(&c)?;
            rest = r;
        }
        if acc.word != *w {
            return Err(fail());
        }
        Ok(acc)
    }
}

/// A word certified to lie in the kernel of `St(Φ, R) → St(Φ, R/I)` at matrix level.
#[derive(Clone, Debug)]
pub struct RelativeWord {
    word: SteinbergWord,
    ideal: Ideal,
}

impl RelativeWord {
    /// Accept `word` if its image over `R/I` evaluates to the identity in the adjoint
    /// representation (a necessary condition for membership in the relative subgroup).
    pub fn certify(word: SteinbergWord, ideal: Ideal) -> Result<RelativeWord> {
        if ideal.ring() != word.ring() {
            return Err(Error::MismatchedRings(ideal.ring().to_string(), word.ring().to_string()));
        }
        if let Some(q) = proper_quotient(&ideal)? {
            let image = word.substitute(&RingHom::canonical(word.ring(), &q)?)?;
            if !Representation::adjoint(word.system()).k2_membership(&image) {
                return Err(Error::Verification(format!("{word} is nontrivial modulo {ideal}")));
            }
        }
        Ok(RelativeWord { word, ideal })
    }

    pub fn word(&self) -> &SteinbergWord {
        &self.word
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }
}

/// `R/I`, or `None` when `I` is the unit ideal.
fn proper_quotient(ideal: &Ideal) -> Result<Option<Ring>> {
    let g = ideal.principal_generator()?;
    if g.is_unit() {
        return Ok(None);
    }
    ideal.quotient_ring().map(Some)
}

/// Matrix-level check of `y_α(a, cb) ≡ y_α(ac, b)` modulo the relative subgroup of `AB`.
///
/// Both words are mapped to `R/AB` and compared under `rep`. This is a necessary
/// condition for the congruence, not a proof of it. If `AB` is the unit ideal the check
/// holds vacuously.
#[allow(clippy::too_many_arguments)]
pub fn check_congruence_lemma_in(
    rep: &Representation,
    root: usize,
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
    ideal_a: &Ideal,
    ideal_b: &Ideal,
) -> Result<bool> {
    let system = rep.system();
    if system.rank() < 2 {
        return Err(Error::UnsupportedSystem(system.name()));
    }
    let ring = ideal_a.ring();
    if !ideal_a.contains(a)? || !ideal_b.contains(b)? {
        return Err(Error::Precondition(format!("need a in {ideal_a} and b in {ideal_b}")));
    }
    let ab = ideal_a.product(ideal_b)?;
    let Some(q) = proper_quotient(&ab)? else { return Ok(true) };
    let to_q = RingHom::canonical(ring, &q)?;
    let lhs = SteinbergWord::y_element(ring, system, root, a, &(c * b))?.substitute(&to_q)?;
    let rhs = SteinbergWord::y_element(ring, system, root, &(a * c), b)?.substitute(&to_q)?;
    Ok(rep.evaluate(&lhs) == rep.evaluate(&rhs))
}

/// [`check_congruence_lemma_in`] for the adjoint representation.
pub fn check_congruence_lemma(
    system: &RootSystem,
    root: usize,
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
    ideal_a: &Ideal,
    ideal_b: &Ideal,
) -> Result<bool> {
    check_congruence_lemma_in(&Representation::adjoint(system), root, a, b, c, ideal_a, ideal_b)
}
