//! Exponent vectors over the prime field F_d.
//!
//! An [`ExponentVector`] attaches a residue mod `d` to every branch point of a
//! cyclic curve, in the order the curve lists its branch points. Vectors whose
//! residues sum to zero form the degree-zero hyperplane; quotienting that
//! hyperplane by the curve's own exponent vector gives the strongly cyclic
//! part of the d-torsion of the Jacobian.

use std::fmt;

use crate::error::{Error, Result};

/// A prime modulus `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeDegree(u32);

impl PrimeDegree {
    pub fn new(d: u64) -> Result<Self> {
        if !is_prime(d) || d > u64::from(u32::MAX) {
            return Err(Error::NonPrimeDegree(d));
        }
        Ok(PrimeDegree(d as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Residue of `x` in `[0, d)`.
    pub fn residue(self, x: i64) -> u32 {
        x.rem_euclid(i64::from(self.0)) as u32
    }
}

impl fmt::Display for PrimeDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// A function from positions `0..r` to F_d, stored as residues in `[0, d)`.
///
/// Ordering is lexicographic on the entries, which is the order used for
/// enumeration and for picking canonical coset representatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    entries: Vec<u32>,
    d: PrimeDegree,
}

impl ExponentVector {
    /// Reduces arbitrary integers mod `d`.
    pub fn reduce(raw: &[i64], d: PrimeDegree) -> Self {
        ExponentVector {
            entries: raw.iter().map(|&x| d.residue(x)).collect(),
            d,
        }
    }

    /// Builds a vector from entries that must already lie in `[0, d)`.
    pub fn from_residues(entries: Vec<u32>, d: PrimeDegree) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&e| e >= d.get()) {
            return Err(Error::Format(format!(
                "entry {bad} is not a residue mod {d}"
            )));
        }
        Ok(ExponentVector { entries, d })
    }

    pub fn zero(d: PrimeDegree, len: usize) -> Self {
        ExponentVector {
            entries: vec![0; len],
            d,
        }
    }

    pub fn modulus(&self) -> PrimeDegree {
        self.d
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// The entries as signed integers, for integer (not modular) identities.
    pub fn as_integers(&self) -> Vec<i64> {
        self.entries.iter().map(|&e| i64::from(e)).collect()
    }

    /// Sum of the entries mod `d`. Zero exactly on the degree-zero hyperplane.
    pub fn degree_sum_residue(&self) -> u32 {
        let sum: u64 = self.entries.iter().map(|&e| u64::from(e)).sum();
        (sum % u64::from(self.d.get())) as u32
    }

    pub fn in_hyperplane(&self) -> bool {
        self.degree_sum_residue() == 0
    }

    /// Positions with a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    fn check_compatible(&self, other: &ExponentVector) -> Result<()> {
        if self.d != other.d {
            return Err(Error::ModulusMismatch(self.d.get(), other.d.get()));
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    /// `c1 * v1 + c2 * v2`, reduced mod `d`.
    pub fn linear_combine(
        c1: i64,
        v1: &ExponentVector,
        c2: i64,
        v2: &ExponentVector,
    ) -> Result<ExponentVector> {
        v1.check_compatible(v2)?;
        let d = v1.d;
        let m = i64::from(d.get());
        let (c1, c2) = (c1.rem_euclid(m), c2.rem_euclid(m));
        let entries = v1
            .entries
            .iter()
            .zip(&v2.entries)
            .map(|(&a, &b)| d.residue(c1 * i64::from(a) + c2 * i64::from(b)))
            .collect();
        Ok(ExponentVector { entries, d })
    }

    pub fn scale(&self, c: i64) -> ExponentVector {
        let c = self.d.residue(c);
        ExponentVector {
            entries: self
                .entries
                .iter()
                .map(|&e| self.d.residue(i64::from(c) * i64::from(e)))
                .collect(),
            d: self.d,
        }
    }

    /// The unique `m` in `[0, d)` with `self = m * alpha`, if any.
    pub fn span_membership(&self, alpha: &ExponentVector) -> Result<Option<u32>> {
        self.check_compatible(alpha)?;
        let Some(pivot) = alpha.entries.iter().position(|&e| e != 0) else {
            return Err(Error::ZeroAlpha);
        };
        // m * alpha[pivot] = self[pivot] determines m since d is prime.
        let d = self.d;
        let m = d.residue(i64::from(self.entries[pivot]) * inverse_mod(alpha.entries[pivot], d));
        Ok((alpha.scale(i64::from(m)) == *self).then_some(m))
    }

    /// Lexicographically smallest element of the coset `self + <alpha>`.
    pub fn coset_canonical(&self, alpha: &ExponentVector) -> Result<ExponentVector> {
        self.check_compatible(alpha)?;
        if alpha.is_zero() {
            return Err(Error::ZeroAlpha);
        }
        for v in [self, alpha] {
            if !v.in_hyperplane() {
                return Err(Error::NotInHyperplane(v.degree_sum_residue()));
            }
        }
        let best = (0..i64::from(self.d.get()))
            .map(|m| ExponentVector::linear_combine(1, self, m, alpha))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .min()
            .expect("d >= 2");
        Ok(best)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl serde::Serialize for ExponentVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// Multiplicative inverse of a nonzero residue, by Fermat.
fn inverse_mod(a: u32, d: PrimeDegree) -> i64 {
    let m = u64::from(d.get());
    let mut base = u64::from(a) % m;
    let mut exp = m - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as i64
}

/// Lexicographic stream of all length-`r` vectors with residue sum zero.
///
/// The first `r - 1` entries run through F_d^{r-1} like an odometer and the
/// last entry is forced, so lexicographic order on the prefix is lexicographic
/// order on the whole vector.
#[derive(Debug, Clone)]
pub struct DegreeZeroVectors {
    d: PrimeDegree,
    prefix: Vec<u32>,
    done: bool,
}

pub fn enumerate_degree_zero(d: PrimeDegree, r: usize) -> DegreeZeroVectors {
    DegreeZeroVectors {
        d,
        prefix: vec![0; r.saturating_sub(1)],
        done: r == 0,
    }
}

impl Iterator for DegreeZeroVectors {
    type Item = ExponentVector;

    fn next(&mut self) -> Option<ExponentVector> {
        if self.done {
            return None;
        }
        let sum: i64 = self.prefix.iter().map(|&e| i64::from(e)).sum();
        let mut entries = self.prefix.clone();
        entries.push(self.d.residue(-sum));
        let out = ExponentVector { entries, d: self.d };

        // Advance the odometer, last digit fastest.
        let mut idx = self.prefix.len();
        loop {
            if idx == 0 {
                self.done = true;
                break;
            }
            idx -= 1;
            self.prefix[idx] += 1;
            if self.prefix[idx] < self.d.get() {
                break;
            }
            self.prefix[idx] = 0;
        }
        Some(out)
    }
}
