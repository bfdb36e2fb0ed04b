//! Simply-laced root systems `A_ℓ` and `D_ℓ` with their Chevalley structure constants.
//!
//! Roots are enumerated by index pairs `i < j`: `e_i - e_j` for `A_ℓ`, and `e_i - e_j`
//! followed by `e_i + e_j` for `D_ℓ`; the negatives follow in the same order. This order
//! drives commutator decompositions and word sorting.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootSystemType {
    A,
    D,
}

/// A root as a coordinate vector in the standard Euclidean model.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i32>);

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            for _ in 0..c.abs() {
                let sign = if *c < 0 {
                    "-"
                } else if first {
                    ""
                } else {
                    "+"
                };
                write!(f, "{sign}e{}", i + 1)?;
                first = false;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Root {
    /// Parse `e1-e2`, `-e1-e3`, `e2+e4`; `dim` is the ambient dimension.
    pub fn parse(s: &str, dim: usize) -> Result<Root> {
        let bad = || Error::Parse(format!("bad root {s:?}"));
        let mut coords = vec![0; dim];
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, r) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let r = r.strip_prefix('e').ok_or_else(bad)?;
            let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            let i: usize = r[..end].parse().map_err(|_| bad())?;
            if i == 0 || i > dim {
                return Err(bad());
            }
            coords[i - 1] += sign;
            rest = &r[end..];
        }
        Ok(Root(coords))
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn dot(&self, other: &Root) -> i32 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

/// Outcome of adding two roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSum {
    Root(Root),
    /// `β = -α`.
    Opposite,
    /// `α + β ∉ Φ ∪ {0}`.
    None,
}

struct Inner {
    ty: RootSystemType,
    rank: usize,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    neg: Vec<usize>,
    sums: Vec<Option<usize>>,
    constants: Vec<i8>,
    simple: Vec<usize>,
    simple_coeffs: Vec<Vec<i32>>,
    decomposition: Vec<Option<(usize, usize)>>,
    defining: Vec<Vec<(usize, usize, i32)>>,
}

/// A simply-laced root system with addition and structure-constant tables.
///
/// Cheap to clone; roots are usually referred to by their index in [`RootSystem::roots`].
#[derive(Clone)]
pub struct RootSystem(Arc<Inner>);

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.0.ty == other.0.ty && self.0.rank == other.0.rank
    }
}

impl Eq for RootSystem {}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Sparse integer matrix entries `(row, col, value)`.
type Sparse = Vec<(usize, usize, i32)>;

fn sparse_mul(a: &Sparse, b: &Sparse) -> HashMap<(usize, usize), i32> {
    let mut out = HashMap::new();
    for &(i, k, x) in a {
        for &(k2, j, y) in b {
            if k == k2 {
                *out.entry((i, j)).or_insert(0) += x * y;
            }
        }
    }
    out
}

fn sparse_bracket(a: &Sparse, b: &Sparse) -> HashMap<(usize, usize), i32> {
    let mut ab = sparse_mul(a, b);
    for (k, v) in sparse_mul(b, a) {
        *ab.entry(k).or_insert(0) -= v;
    }
    ab.retain(|_, v| *v != 0);
    ab
}

impl RootSystem {
    pub fn build(ty: RootSystemType, rank: usize) -> Result<RootSystem> {
        let ok = match ty {
            RootSystemType::A => (2..=8).contains(&rank),
            RootSystemType::D => (4..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::UnsupportedSystem(format!("{ty:?}{rank}")));
        }
        let dim = match ty {
            RootSystemType::A => rank + 1,
            RootSystemType::D => rank,
        };
        let unit = |i: usize, s: i32| {
            let mut v = vec![0; dim];
            v[i] = s;
            v
        };
        let mut positive = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let mut minus = unit(i, 1);
                minus[j] = -1;
                positive.push(Root(minus));
                if ty == RootSystemType::D {
                    let mut plus = unit(i, 1);
                    plus[j] = 1;
                    positive.push(Root(plus));
                }
            }
        }
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(Root::neg));
        let n = roots.len();
        let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let neg: Vec<usize> = roots.iter().map(|r| index[&r.neg()]).collect();

        let mut sums = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                sums[a * n + b] = index.get(&roots[a].add(&roots[b])).copied();
            }
        }

        let defining: Vec<Sparse> = roots.iter().map(|r| defining_matrix(ty, rank, r)).collect();
        let mut constants = vec![0i8; n * n];
        for a in 0..n {
            for b in 0..n {
                let Some(c) = sums[a * n + b] else { continue };
                let br = sparse_bracket(&defining[a], &defining[b]);
                let &(i, j, v) = &defining[c][0];
                let nab = br.get(&(i, j)).copied().unwrap_or(0) / v;
                debug_assert!(nab == 1 || nab == -1);
                constants[a * n + b] = nab as i8;
            }
        }

        let simple: Vec<usize> = match ty {
            RootSystemType::A => (0..rank)
                .map(|i| {
                    let mut v = unit(i, 1);
                    v[i + 1] = -1;
                    index[&Root(v)]
                })
                .collect(),
            RootSystemType::D => {
                let mut s: Vec<usize> = (0..rank - 1)
                    .map(|i| {
                        let mut v = unit(i, 1);
                        v[i + 1] = -1;
                        index[&Root(v)]
                    })
                    .collect();
                let mut v = unit(rank - 2, 1);
                v[rank - 1] = 1;
                s.push(index[&Root(v)]);
                s
            }
        };
        let simple_coeffs = simple_coefficients(&roots, &simple, &sums, &neg);

        let mut inner = Inner {
            ty,
            rank,
            roots,
            index,
            neg,
            sums,
            constants,
            simple,
            simple_coeffs,
            decomposition: Vec::new(),
            defining,
        };
        inner.decomposition = (0..n)
            .map(|b| {
                (0..n).find_map(|g| {
                    if g == b || g == inner.neg[b] {
                        return None;
                    }
                    let d = *inner.index.get(&inner.roots[b].add(&inner.roots[g].neg()))?;
                    (d != b && d != inner.neg[b]).then_some((g, d))
                })
            })
            .collect();
        Ok(RootSystem(Arc::new(inner)))
    }

    /// Parse `A3`, `D_5`, ...
    pub fn parse(name: &str) -> Result<RootSystem> {
        let name = name.trim();
        let bad = || Error::UnsupportedSystem(name.to_string());
        let ty = match name.chars().next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => RootSystemType::A,
            'D' => RootSystemType::D,
            _ => return Err(bad()),
        };
        let rank: usize = name[1..].trim_start_matches('_').parse().map_err(|_| bad())?;
        RootSystem::build(ty, rank)
    }

    /// All supported systems: A2..A8 and D4..D8.
    pub fn all_supported() -> Vec<RootSystem> {
        let mut out: Vec<RootSystem> = (2..=8).map(|r| RootSystem::build(RootSystemType::A, r).unwrap()).collect();
        out.extend((4..=8).map(|r| RootSystem::build(RootSystemType::D, r).unwrap()));
        out
    }

    pub fn name(&self) -> String {
        format!("{:?}{}", self.0.ty, self.0.rank)
    }

    pub fn system_type(&self) -> RootSystemType {
        self.0.ty
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    /// Dimension of the ambient coordinate space.
    pub fn ambient_dim(&self) -> usize {
        self.0.roots[0].0.len()
    }

    pub fn len(&self) -> usize {
        self.0.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.roots.is_empty()
    }

    pub fn roots(&self) -> &[Root] {
        &self.0.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.0.roots[i]
    }

    pub fn index_of(&self, r: &Root) -> Result<usize> {
        self.0.index.get(r).copied().ok_or_else(|| Error::ForeignRoot(r.to_string(), self.name()))
    }

    /// Parse a root written as `e1-e2` in this system.
    pub fn parse_root(&self, s: &str) -> Result<usize> {
        self.index_of(&Root::parse(s, self.ambient_dim())?)
    }

    pub fn neg(&self, i: usize) -> usize {
        self.0.neg[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.len() / 2
    }

    /// Index of `α + β` when it is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.0.sums[a * self.len() + b]
    }

    pub fn root_sum(&self, a: &Root, b: &Root) -> Result<RootSum> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        Ok(if j == self.neg(i) {
            RootSum::Opposite
        } else {
            match self.sum_index(i, j) {
                Some(k) => RootSum::Root(self.root(k).clone()),
                None => RootSum::None,
            }
        })
    }

    /// `N_αβ`, defined exactly when `α + β ∈ Φ`.
    pub fn constant(&self, a: usize, b: usize) -> Option<i32> {
        match self.0.constants[a * self.len() + b] {
            0 => None,
            c => Some(c as i32),
        }
    }

    /// Rows `(α, β, α+β, N_αβ)` over all pairs with `α + β ∈ Φ`.
    pub fn constants_table(&self) -> Vec<(usize, usize, usize, i32)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if let Some(c) = self.sum_index(a, b) {
                    out.push((a, b, c, self.constant(a, b).unwrap()));
                }
            }
        }
        out
    }

    pub fn inner(&self, a: usize, b: usize) -> i32 {
        self.root(a).dot(self.root(b))
    }

    pub fn simple_roots(&self) -> &[usize] {
        &self.0.simple
    }

    /// Coefficients of a root in the basis of simple roots (equal to those of its coroot).
    pub fn simple_coefficients(&self, a: usize) -> &[i32] {
        &self.0.simple_coeffs[a]
    }

    /// First `(γ, δ)` in enumeration order with `γ + δ = β` and `γ, δ ≠ ±β`.
    pub fn decomposition_index(&self, b: usize) -> Result<(usize, usize)> {
        self.0.decomposition[b]
            .ok_or_else(|| Error::Precondition(format!("{} is not a sum of two roots", self.root(b))))
    }

    pub fn commutator_decomposition(&self, beta: &Root) -> Result<(Root, Root)> {
        let (g, d) = self.decomposition_index(self.index_of(beta)?)?;
        Ok((self.root(g).clone(), self.root(d).clone()))
    }

    /// Dimension of the defining (`A_ℓ`) or vector (`D_ℓ`) representation.
    pub fn defining_dim(&self) -> usize {
        match self.0.ty {
            RootSystemType::A => self.0.rank + 1,
            RootSystemType::D => 2 * self.0.rank,
        }
    }

    /// Nonzero entries of the Chevalley generator `e_α` in the defining / vector representation.
    pub fn defining_matrix(&self, a: usize) -> &[(usize, usize, i32)] {
        &self.0.defining[a]
    }
}

/// `e_α` in `sl_{ℓ+1}` (`E_ij`) or split `so_{2ℓ}` (with `j' = j + ℓ`):
/// `e_i - e_j ↦ E_ij - E_j'i'`, `e_i + e_j ↦ E_ij' - E_ji'`, `-e_i - e_j ↦ E_j'i - E_i'j` (i < j).
fn defining_matrix(ty: RootSystemType, rank: usize, r: &Root) -> Sparse {
    let pos: Vec<usize> = (0..r.0.len()).filter(|&k| r.0[k] > 0).collect();
    let negs: Vec<usize> = (0..r.0.len()).filter(|&k| r.0[k] < 0).collect();
    match ty {
        RootSystemType::A => vec![(pos[0], negs[0], 1)],
        RootSystemType::D => {
            let l = rank;
            match (pos.len(), negs.len()) {
                (1, 1) => {
                    let (i, j) = (pos[0], negs[0]);
                    vec![(i, j, 1), (j + l, i + l, -1)]
                }
                (2, 0) => {
                    let (i, j) = (pos[0], pos[1]);
                    vec![(i, j + l, 1), (j, i + l, -1)]
                }
                (0, 2) => {
                    let (i, j) = (negs[0], negs[1]);
                    vec![(j + l, i, 1), (i + l, j, -1)]
                }
                _ => unreachable!(),
            }
        }
    }
}

/// Express every root in the simple basis by walking up from the simple roots.
fn simple_coefficients(roots: &[Root], simple: &[usize], sums: &[Option<usize>], neg: &[usize]) -> Vec<Vec<i32>> {
    let n = roots.len();
    let mut coeffs: Vec<Option<Vec<i32>>> = vec![None; n];
    let mut frontier = Vec::new();
    for (k, &s) in simple.iter().enumerate() {
        let mut v = vec![0; simple.len()];
        v[k] = 1;
        coeffs[s] = Some(v);
        frontier.push(s);
    }
    while let Some(r) = frontier.pop() {
        for (k, &s) in simple.iter().enumerate() {
            if let Some(t) = sums[r * n + s] {
                if coeffs[t].is_none() {
                    let mut v = coeffs[r].clone().unwrap();
                    v[k] += 1;
                    coeffs[t] = Some(v);
                    frontier.push(t);
                }
            }
        }
    }
    (0..n)
        .map(|r| match &coeffs[r] {
            Some(v) => v.clone(),
            None => coeffs[neg[r]].as_ref().expect("positive root reached").iter().map(|c| -c).collect(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(r: usize) -> RootSystem {
        RootSystem::build(RootSystemType::A, r).unwrap()
    }

    fn d(r: usize) -> RootSystem {
        RootSystem::build(RootSystemType::D, r).unwrap()
    }

    #[test]
    fn cardinalities() {
        for r in 2..=8 {
            assert_eq!(a(r).len(), r * (r + 1));
        }
        for r in 4..=8 {
            assert_eq!(d(r).len(), 2 * r * (r - 1));
        }
        assert!(RootSystem::build(RootSystemType::D, 3).is_err());
        assert!(RootSystem::build(RootSystemType::A, 9).is_err());
    }

    #[test]
    fn a2_constants() {
        let phi = a(2);
        let a1 = phi.parse_root("e1-e2").unwrap();
        let a2 = phi.parse_root("e2-e3").unwrap();
        assert_eq!(phi.constant(a1, a2), Some(1));
        assert_eq!(phi.constant(a2, a1), Some(-1));
        assert_eq!(phi.simple_roots(), &[a1, a2]);
    }

    #[test]
    fn d_brackets_by_hand() {
        // With F(i,j) = E_ij - E_j'i', P(i,j) = E_ij' - E_ji', M(i,j) = E_j'i - E_i'j:
        // [F(i,j), F(j,k)] = F(i,k), [F(i,j), P(j,k)] = P(i,k), [F(i,j), M(i,k)] = M(k,j),
        // [P(i,j), M(j,k)] = -F(i,k); P and M are antisymmetric in their indices.
        let phi = d(4);
        let r = |s: &str| phi.parse_root(s).unwrap();
        assert_eq!(phi.constant(r("e1-e2"), r("e2-e3")), Some(1));
        assert_eq!(phi.constant(r("e1-e2"), r("e2+e3")), Some(1));
        assert_eq!(phi.constant(r("e3-e2"), r("e2+e1")), Some(1));
        assert_eq!(phi.constant(r("e1-e2"), r("-e1-e3")), Some(-1));
        assert_eq!(phi.constant(r("e1+e2"), r("-e2-e3")), Some(-1));
    }

    #[test]
    fn constant_symmetries_everywhere() {
        for phi in RootSystem::all_supported() {
            let n = phi.len();
            for x in 0..n {
                assert!(phi.root(x).dot(phi.root(x)) == 2);
                for y in 0..n {
                    assert_eq!(phi.constant(x, y).is_some(), phi.sum_index(x, y).is_some());
                    if let Some(c) = phi.constant(x, y) {
                        assert_eq!(phi.constant(y, x), Some(-c));
                        assert_eq!(phi.constant(phi.neg(x), phi.neg(y)), Some(-c));
                    }
                }
            }
        }
    }

    #[test]
    fn root_sums() {
        let phi = a(2);
        let r = |s: &str| Root::parse(s, 3).unwrap();
        assert_eq!(phi.root_sum(&r("e1-e2"), &r("e2-e3")).unwrap(), RootSum::Root(r("e1-e3")));
        assert_eq!(phi.root_sum(&r("e1-e2"), &r("e1-e3")).unwrap(), RootSum::None);
        assert_eq!(phi.root_sum(&r("e1-e2"), &r("e2-e1")).unwrap(), RootSum::Opposite);
        assert!(phi.root_sum(&r("e1-e2"), &Root(vec![1, 1, 0])).is_err());
    }

    #[test]
    fn decompositions() {
        let phi = a(3);
        let r = |s: &str| Root::parse(s, 4).unwrap();
        assert_eq!(phi.commutator_decomposition(&r("e1-e4")).unwrap(), (r("e1-e2"), r("e2-e4")));
        let (g, dd) = phi.commutator_decomposition(&r("e2-e3")).unwrap();
        assert_eq!(g.add(&dd), r("e2-e3"));
        let phi = d(4);
        let r = |s: &str| Root::parse(s, 4).unwrap();
        assert_eq!(phi.commutator_decomposition(&r("e1+e2")).unwrap(), (r("e1-e3"), r("e2+e3")));
        for phi in RootSystem::all_supported() {
            for b in 0..phi.len() {
                let (g, dd) = phi.decomposition_index(b).unwrap();
                assert_eq!(phi.sum_index(g, dd), Some(b));
            }
        }
    }

    #[test]
    fn simple_coefficients_reconstruct() {
        for phi in RootSystem::all_supported() {
            for x in 0..phi.len() {
                let c = phi.simple_coefficients(x);
                let mut v = vec![0; phi.ambient_dim()];
                for (k, &s) in phi.simple_roots().iter().enumerate() {
                    for (vi, ri) in v.iter_mut().zip(&phi.root(s).0) {
                        *vi += c[k] * ri;
                    }
                }
                assert_eq!(&v, &phi.root(x).0);
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let phi = d(4);
        for x in 0..phi.len() {
            let s = phi.root(x).to_string();
            assert_eq!(phi.parse_root(&s).unwrap(), x, "{s}");
        }
    }
}
