//! Matrix images of Steinberg words.
//!
//! A representation stores, for every root `α`, the integer matrices `E1 = e_α` and the
//! divided square `E2 = e_α²/2`, so `x_α(ξ) = I + ξ E1 + ξ² E2` over any commutative ring.

pub(crate) mod backend;
mod matrix;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};
use crate::roots::{RootSystem, RootSystemType};
use crate::words::SteinbergWord;
use backend::{dispatch, AnyBackend, Backend};
pub use matrix::GroupMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RepKind {
    /// Adjoint action on the Chevalley basis `{e_β} ∪ {h_i}`; any simply-laced system.
    Adjoint,
    /// `SL_{ℓ+1}` for `A_ℓ`.
    DefiningA,
    /// `SO_{2ℓ}` on the split quadratic space for `D_ℓ`.
    VectorD,
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RepKind::Adjoint => "adjoint",
            RepKind::DefiningA => "defining",
            RepKind::VectorD => "vector",
        };
        write!(f, "{s}")
    }
}

/// Sparse integer matrix stored by rows: `rows[i] = [(j, v)]`.
pub(crate) type IntRows = Vec<Vec<(u32, i64)>>;

struct RepInner {
    kind: RepKind,
    system: RootSystem,
    dim: usize,
    e1: Vec<IntRows>,
    e2: Vec<IntRows>,
    /// Per root, the nonzero rows of `(E1, E2)` merged as `(col, c1, c2)`.
    nil: Vec<NilRows>,
}

type NilRows = Vec<(u32, Vec<(u32, i64, i64)>)>;

fn merge_nil(e1: &IntRows, e2: &IntRows) -> NilRows {
    let mut out = Vec::new();
    for (r, (r1, r2)) in e1.iter().zip(e2).enumerate() {
        let mut m: BTreeMap<u32, (i64, i64)> = BTreeMap::new();
        for &(j, v) in r1 {
            m.entry(j).or_default().0 = v;
        }
        for &(j, v) in r2 {
            m.entry(j).or_default().1 = v;
        }
        if !m.is_empty() {
            out.push((r as u32, m.into_iter().map(|(j, (a, b))| (j, a, b)).collect()));
        }
    }
    out
}

/// A representation `π : St(Φ, R) -> G(R)` of a fixed root system.
#[derive(Clone)]
pub struct Representation(Arc<RepInner>);

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} representation of {}", self.0.kind, self.0.system)
    }
}

fn to_rows(dim: usize, entries: impl IntoIterator<Item = (usize, usize, i64)>) -> IntRows {
    let mut m: Vec<BTreeMap<u32, i64>> = vec![BTreeMap::new(); dim];
    for (i, j, v) in entries {
        *m[i].entry(j as u32).or_insert(0) += v;
    }
    m.into_iter().map(|r| r.into_iter().filter(|(_, v)| *v != 0).collect()).collect()
}

fn int_mul(a: &IntRows, b: &IntRows) -> IntRows {
    let dim = a.len();
    let mut out = Vec::with_capacity(dim);
    for row in a {
        let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
        for &(k, x) in row {
            for &(j, y) in &b[k as usize] {
                *acc.entry(j).or_insert(0) += x * y;
            }
        }
        out.push(acc.into_iter().filter(|(_, v)| *v != 0).collect());
    }
    out
}

/// `e²/2`, which is integral for root elements of the supported representations.
fn divided_square(e: &IntRows) -> IntRows {
    int_mul(e, e)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|(j, v)| {
                    assert!(v % 2 == 0, "e^2 must be even");
                    (j, v / 2)
                })
                .collect()
        })
        .collect()
}

impl Representation {
    fn from_generators(kind: RepKind, system: &RootSystem, dim: usize, e1: Vec<IntRows>) -> Representation {
        let e2: Vec<IntRows> = e1.iter().map(divided_square).collect();
        let nil = e1.iter().zip(&e2).map(|(a, b)| merge_nil(a, b)).collect();
        Representation(Arc::new(RepInner { kind, system: system.clone(), dim, e1, e2, nil }))
    }

    /// The adjoint representation, built from the structure-constant table.
    ///
    /// Basis order: `e_β` for every root in enumeration order, then `h_1, …, h_ℓ`.
    pub fn adjoint(system: &RootSystem) -> Representation {
        let n = system.len();
        let l = system.rank();
        let dim = n + l;
        let simple = system.simple_roots();
        let e1 = (0..n)
            .map(|a| {
                let mut entries = Vec::new();
                for b in 0..n {
                    if let Some(c) = system.sum_index(a, b) {
                        entries.push((c, b, system.constant(a, b).unwrap() as i64));
                    } else if b == system.neg(a) {
                        // [e_α, e_{-α}] = h_α = Σ c_i h_i
                        for (i, &c) in system.simple_coefficients(a).iter().enumerate() {
                            if c != 0 {
                                entries.push((n + i, b, c as i64));
                            }
                        }
                    }
                }
                // [e_α, h_i] = -(α, α_i) e_α
                for (i, &s) in simple.iter().enumerate() {
                    let ip = system.inner(a, s);
                    if ip != 0 {
                        entries.push((a, n + i, -ip as i64));
                    }
                }
                to_rows(dim, entries)
            })
            .collect();
        Representation::from_generators(RepKind::Adjoint, system, dim, e1)
    }

    /// The defining representation of `A_ℓ` or the vector representation of `D_ℓ`.
    pub fn standard(system: &RootSystem) -> Representation {
        let dim = system.defining_dim();
        let e1 = (0..system.len())
            .map(|a| to_rows(dim, system.defining_matrix(a).iter().map(|&(i, j, v)| (i, j, v as i64))))
            .collect();
        let kind = match system.system_type() {
            RootSystemType::A => RepKind::DefiningA,
            RootSystemType::D => RepKind::VectorD,
        };
        Representation::from_generators(kind, system, dim, e1)
    }

    pub fn defining(system: &RootSystem) -> Result<Representation> {
        match system.system_type() {
            RootSystemType::A => Ok(Representation::standard(system)),
            _ => Err(Error::Unsupported(format!("defining representation of {system}"))),
        }
    }

    pub fn vector(system: &RootSystem) -> Result<Representation> {
        match system.system_type() {
            RootSystemType::D => Ok(Representation::standard(system)),
            _ => Err(Error::Unsupported(format!("vector representation of {system}"))),
        }
    }

    pub fn new(kind: RepKind, system: &RootSystem) -> Result<Representation> {
        match kind {
            RepKind::Adjoint => Ok(Representation::adjoint(system)),
            RepKind::DefiningA => Representation::defining(system),
            RepKind::VectorD => Representation::vector(system),
        }
    }

    /// Every supported representation of `system`.
    pub fn all_for(system: &RootSystem) -> Vec<Representation> {
        vec![Representation::adjoint(system), Representation::standard(system)]
    }

    pub fn kind(&self) -> RepKind {
        self.0.kind
    }

    pub fn system(&self) -> &RootSystem {
        &self.0.system
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    /// Dense integer matrix of `e_α`.
    pub fn root_matrix(&self, a: usize) -> Vec<Vec<i64>> {
        dense(&self.0.e1[a], self.0.dim)
    }

    /// Dense integer matrix of `e_α² / 2`.
    pub fn divided_square_matrix(&self, a: usize) -> Vec<Vec<i64>> {
        dense(&self.0.e2[a], self.0.dim)
    }

    /// `x_α(ξ)`.
    pub fn unipotent(&self, a: usize, xi: &RingElement) -> GroupMatrix {
        let ring = xi.ring().clone();
        let w = SteinbergWord::gen(&ring, self.system(), a, xi.clone()).expect("ring matches");
        self.evaluate(&w)
    }

    /// `π(w)`; a homomorphism on words.
    pub fn evaluate(&self, w: &SteinbergWord) -> GroupMatrix {
        assert_eq!(w.system(), self.system(), "word and representation use different systems");
        let ring = w.ring();
        let any = AnyBackend::for_ring(ring);
        let fast = dispatch!(&any, b => eval_rows(b, self, w));
        match fast {
            Some(m) => m,
            None => dispatch!(&AnyBackend::generic(ring), b => eval_rows(b, self, w)).expect("generic evaluation"),
        }
    }

    /// Whether `w` lies in the kernel of this representation.
    pub fn k2_membership(&self, w: &SteinbergWord) -> bool {
        self.evaluate(w).is_identity()
    }

    fn nil(&self, a: usize) -> &NilRows {
        &self.0.nil[a]
    }
}

fn dense(rows: &IntRows, dim: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; dim]; dim];
    for (i, row) in rows.iter().enumerate() {
        for &(j, v) in row {
            m[i][j as usize] = v;
        }
    }
    m
}

fn eval_rows<B: Backend>(b: &B, rep: &Representation, w: &SteinbergWord) -> Option<GroupMatrix> {
    let mut eng = Engine::new(b, rep);
    let letters: Vec<(usize, B::E)> = w.letters().iter().map(|l| (l.root, b.lift(&l.arg))).collect();
    let refs: Vec<(usize, &B::E)> = letters.iter().map(|(a, x)| (*a, x)).collect();
    let mut m = Delta::new();
    eng.product(&refs, &mut m);
    if b.overflowed() {
        return None;
    }
    let one = b.from_i64(1);
    let mut full: Vec<Vec<(u32, B::E)>> = (0..rep.dim()).map(|i| vec![(i as u32, one.clone())]).collect();
    for (k, &r) in m.rows.iter().enumerate() {
        full[r as usize] = eng.add_identity(r, m.row(k));
    }
    Some(GroupMatrix::from_sparse(w.ring(), rep.dim(), &full, |x| b.lower(x)))
}

/// `M − I` for a matrix `M` in compressed rows: only rows that differ from the identity,
/// sorted by row, each sorted by column and free of zero entries. Two deltas are equal
/// exactly when the matrices are.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Delta<E> {
    rows: Vec<u32>,
    start: Vec<u32>,
    ents: Vec<(u32, E)>,
}

impl<E> Delta<E> {
    pub(crate) fn new() -> Self {
        Delta { rows: Vec::new(), start: vec![0], ents: Vec::new() }
    }

    fn clear(&mut self) {
        self.rows.clear();
        self.start.truncate(1);
        self.ents.clear();
    }

    fn row(&self, k: usize) -> &[(u32, E)] {
        &self.ents[self.start[k] as usize..self.start[k + 1] as usize]
    }

    fn close_row(&mut self, r: u32) {
        if self.ents.len() as u32 > *self.start.last().unwrap() {
            self.rows.push(r);
            self.start.push(self.ents.len() as u32);
        }
    }
}

/// Products of root unipotents kept as sparse deviations from the identity, so the cost
/// scales with the number of nonzero entries rather than with the dimension. All
/// buffers are reused between calls.
pub(crate) struct Engine<'a, B: Backend> {
    b: &'a B,
    rep: &'a Representation,
    acc: Vec<B::E>,
    hit: Vec<bool>,
    touched: Vec<u32>,
    /// Dense row index into the current unipotent's rows.
    slot: Vec<u32>,
    u: Delta<B::E>,
    tmp: Delta<B::E>,
}

const NO_ROW: u32 = u32::MAX;

impl<'a, B: Backend> Engine<'a, B> {
    pub(crate) fn new(b: &'a B, rep: &'a Representation) -> Self {
        let dim = rep.dim();
        Engine {
            b,
            rep,
            acc: vec![b.zero(); dim],
            hit: vec![false; dim],
            touched: Vec::new(),
            slot: vec![NO_ROW; dim],
            u: Delta::new(),
            tmp: Delta::new(),
        }
    }

    /// `out = x_α(ξ) − I`.
    pub(crate) fn unipotent(&self, a: usize, xi: &B::E, out: &mut Delta<B::E>) {
        Engine::nilpotent(self.b, self.rep, a, xi, out);
    }

    /// `ξ E1 + ξ² E2`, the nilpotent part of `x_α(ξ)`.
    fn nilpotent(b: &B, rep: &Representation, a: usize, xi: &B::E, out: &mut Delta<B::E>) {
        out.clear();
        let xi2 = b.mul(xi, xi);
        for (r, entries) in rep.nil(a) {
            for &(j, c1, c2) in entries {
                let v = match (c1, c2) {
                    (_, 0) => b.scale(xi, c1),
                    (0, _) => b.scale(&xi2, c2),
                    _ => b.add(&b.scale(xi, c1), &b.scale(&xi2, c2)),
                };
                if !b.is_zero(&v) {
                    out.ents.push((j, v));
                }
            }
            out.close_row(*r);
        }
    }

    /// `out = (I + d)(I + u) − I = d + u + d u`.
    pub(crate) fn mul_nilpotent(&mut self, d: &Delta<B::E>, u: &Delta<B::E>, out: &mut Delta<B::E>) {
        let b = self.b;
        out.clear();
        for (i, r) in u.rows.iter().enumerate() {
            self.slot[*r as usize] = i as u32;
        }
        let (mut p, mut q) = (0, 0);
        while p < d.rows.len() || q < u.rows.len() {
            let rd = d.rows.get(p).copied().unwrap_or(u32::MAX);
            let ru = u.rows.get(q).copied().unwrap_or(u32::MAX);
            let r = rd.min(ru);
            self.touched.clear();
            if ru == r {
                for (j, v) in u.row(q) {
                    self.accumulate(*j, v.clone());
                }
                q += 1;
            }
            if rd == r {
                for (k, v) in d.row(p) {
                    self.accumulate(*k, v.clone());
                    let s = self.slot[*k as usize];
                    if s != NO_ROW {
                        for (j, w) in u.row(s as usize) {
                            self.accumulate(*j, b.mul(v, w));
                        }
                    }
                }
                p += 1;
            }
            self.drain_into(&mut out.ents);
            out.close_row(r);
        }
        for r in &u.rows {
            self.slot[*r as usize] = NO_ROW;
        }
    }

    fn accumulate(&mut self, j: u32, v: B::E) {
        let ju = j as usize;
        if self.hit[ju] {
            self.acc[ju] = self.b.add(&self.acc[ju], &v);
        } else {
            self.acc[ju] = v;
            self.hit[ju] = true;
            self.touched.push(j);
        }
    }

    fn drain_into(&mut self, out: &mut Vec<(u32, B::E)>) {
        self.touched.sort_unstable();
        for &j in &self.touched {
            let ju = j as usize;
            self.hit[ju] = false;
            let v = std::mem::replace(&mut self.acc[ju], self.b.zero());
            if !self.b.is_zero(&v) {
                out.push((j, v));
            }
        }
    }

    /// Row `r` of `I + row`.
    fn add_identity(&mut self, r: u32, row: &[(u32, B::E)]) -> Vec<(u32, B::E)> {
        self.touched.clear();
        self.accumulate(r, self.b.from_i64(1));
        for (j, v) in row {
            self.accumulate(*j, v.clone());
        }
        let mut out = Vec::new();
        self.drain_into(&mut out);
        out
    }

    /// `out = x_{α_1}(ξ_1) ⋯ x_{α_k}(ξ_k) − I`.
    pub(crate) fn product(&mut self, letters: &[(usize, &B::E)], out: &mut Delta<B::E>) {
        out.clear();
        for (i, (a, xi)) in letters.iter().enumerate() {
            if i == 0 {
                Engine::nilpotent(self.b, self.rep, *a, xi, out);
                continue;
            }
            let mut u = std::mem::replace(&mut self.u, Delta::new());
            let mut tmp = std::mem::replace(&mut self.tmp, Delta::new());
            Engine::nilpotent(self.b, self.rep, *a, xi, &mut u);
            self.mul_nilpotent(out, &u, &mut tmp);
            std::mem::swap(out, &mut tmp);
            self.u = u;
            self.tmp = tmp;
        }
    }
}

/// Outcome of a relation sweep.
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub system: String,
    pub representation: String,
    pub ring: String,
    pub samples: usize,
    pub checks: usize,
    pub violations: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check R1, R2 and R3 as matrix identities for every ordered root pair, with `samples`
/// random arguments each.
///
/// R1: `x_α(a) x_α(b) = x_α(a+b)`; R2: `x_α(a) x_β(b) = x_β(b) x_α(a)` when
/// `α+β ∉ Φ ∪ 0`; R3: `x_α(a) x_β(b) = x_{α+β}(N_αβ ab) x_β(b) x_α(a)` when `α+β ∈ Φ`.
pub fn verify_relations(rep: &Representation, ring: &Ring, samples: usize, seed: u64) -> RelationReport {
    let any = AnyBackend::for_ring(ring);
    let mut report = dispatch!(&any, b => sweep(b, rep, samples, seed));
    if report.is_none() {
        report = dispatch!(&AnyBackend::generic(ring), b => sweep(b, rep, samples, seed));
    }
    let (checks, violations) = report.expect("generic sweep");
    RelationReport {
        system: rep.system().name(),
        representation: rep.kind().to_string(),
        ring: ring.to_string(),
        samples,
        checks,
        violations,
    }
}

fn sweep<B: Backend>(b: &B, rep: &Representation, samples: usize, seed: u64) -> Option<(usize, Vec<String>)> {
    let phi = rep.system();
    let n = phi.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut eng = Engine::new(b, rep);
    let mut checks = 0;
    let mut violations = Vec::new();
    let (mut lhs, mut rhs, mut tmp) = (Delta::new(), Delta::new(), Delta::new());
    let (mut nx, mut ny, mut nz) = (Delta::new(), Delta::new(), Delta::new());
    for a in 0..n {
        for bb in 0..n {
            if bb == phi.neg(a) {
                continue;
            }
            for _ in 0..samples {
                let x = b.random(&mut rng);
                let y = b.random(&mut rng);
                eng.unipotent(a, &x, &mut nx);
                eng.unipotent(bb, &y, &mut ny);
                eng.mul_nilpotent(&nx, &ny, &mut lhs);
                let rel = if a == bb {
                    eng.unipotent(a, &b.add(&x, &y), &mut rhs);
                    "R1"
                } else if let Some(c) = phi.sum_index(a, bb) {
                    let z = b.scale(&b.mul(&x, &y), phi.constant(a, bb).unwrap() as i64);
                    eng.unipotent(c, &z, &mut nz);
                    eng.mul_nilpotent(&nz, &ny, &mut tmp);
                    eng.mul_nilpotent(&tmp, &nx, &mut rhs);
                    "R3"
                } else {
                    eng.mul_nilpotent(&ny, &nx, &mut rhs);
                    "R2"
                };
                checks += 1;
                if lhs != rhs {
                    violations.push(format!(
                        "{rel} fails for ({}, {}) at ({}, {})",
                        phi.root(a),
                        phi.root(bb),
                        b.lower(&x),
                        b.lower(&y)
                    ));
                }
            }
        }
    }
    if b.overflowed() {
        return None;
    }
    Some((checks, violations))
}
