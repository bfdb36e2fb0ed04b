use std::fmt;

use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};

/// A dense square matrix over a ring, as produced by evaluating Steinberg words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMatrix {
    ring: Ring,
    dim: usize,
    entries: Vec<RingElement>,
}

impl GroupMatrix {
    pub fn identity(ring: &Ring, dim: usize) -> GroupMatrix {
        let mut entries = vec![ring.zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = ring.one();
        }
        GroupMatrix { ring: ring.clone(), dim, entries }
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<RingElement>>) -> Result<GroupMatrix> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::Precondition("matrix is not square".into()));
            }
            for x in row {
                entries.push(ring.coerce(&x)?);
            }
        }
        Ok(GroupMatrix { ring: ring.clone(), dim, entries })
    }

    pub(crate) fn from_sparse<E>(
        ring: &Ring,
        dim: usize,
        rows: &[Vec<(u32, E)>],
        lower: impl Fn(&E) -> RingElement,
    ) -> GroupMatrix {
        let mut entries = vec![ring.zero(); dim * dim];
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row {
                entries[i * dim + *j as usize] = lower(v);
            }
        }
        GroupMatrix { ring: ring.clone(), dim, entries }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<RingElement>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &GroupMatrix) -> Result<GroupMatrix> {
        if self.ring != other.ring || self.dim != other.dim {
            return Err(Error::MismatchedRings(self.ring.to_string(), other.ring.to_string()));
        }
        let n = self.dim;
        let mut entries = vec![self.ring.zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] = &entries[i * n + j] + &(a * b);
                    }
                }
            }
        }
        Ok(GroupMatrix { ring: self.ring.clone(), dim: n, entries })
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim;
        self.entries.iter().enumerate().all(|(k, x)| if k / n == k % n { x.is_one() } else { x.is_zero() })
    }

    /// Entries that differ from the identity, as `(row, col, entry)`.
    pub fn off_identity(&self) -> Vec<(usize, usize, RingElement)> {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(k, x)| if k / n == k % n { !x.is_one() } else { !x.is_zero() })
            .map(|(k, x)| (k / n, k % n, x.clone()))
            .collect()
    }

    /// Entries coerced into `target` (for instance along a localization).
    pub fn coerce_into(&self, target: &Ring) -> Result<GroupMatrix> {
        let entries = self.entries.iter().map(|x| target.coerce(x)).collect::<Result<_>>()?;
        Ok(GroupMatrix { ring: target.clone(), dim: self.dim, entries })
    }

    pub fn to_json(&self) -> Json {
        json!({
            "ring": self.ring.to_string(),
            "dim": self.dim,
            "rows": self.entries.chunks(self.dim)
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for GroupMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(|c| c.len()).max().unwrap_or(1);
        for row in cells.chunks(self.dim) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}
