//! Exact-rational linear combinations of paths.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::error::Result;
use crate::quiver::{Path, Quiver};

/// Field of coefficients. Rationals suffice: no construction here depends
/// on algebraic closure.
pub type Scalar = num::BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// A finite sum `Σ λ_p p` over paths. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb {
    terms: BTreeMap<Path, Scalar>,
}

impl LinComb {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn path(p: Path) -> Self {
        LinComb::term(int(1), p)
    }

    pub fn term(c: Scalar, p: Path) -> Self {
        let mut l = LinComb::zero();
        l.add_term(c, p);
        l
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar, Path)>) -> Self {
        let mut l = LinComb::zero();
        for (c, p) in terms {
            l.add_term(c, p);
        }
        l
    }

    pub fn add_term(&mut self, c: Scalar, p: Path) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> + '_ {
        self.terms.keys()
    }

    pub fn coefficient(&self, p: &Path) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn min_len(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).min()
    }

    pub fn max_len(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).max()
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb { terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect() }
    }

    pub fn plus(&self, other: &LinComb) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(c.clone(), p.clone());
        }
        out
    }

    pub fn minus(&self, other: &LinComb) -> Self {
        self.plus(&other.scaled(&int(-1)))
    }

    /// Scales so that the coefficient of the smallest path is 1.
    pub fn canonical(&self) -> Self {
        match self.terms.values().next() {
            None => LinComb::zero(),
            Some(lead) => self.scaled(&lead.recip()),
        }
    }

    /// `left · self · right` in the path algebra of `q`.
    pub fn sandwich(&self, left: &Path, right: &Path, q: &Quiver) -> Self {
        let mut out = LinComb::zero();
        for (p, c) in &self.terms {
            if let Some(lp) = q.compose(left, p) {
                if let Some(lpr) = q.compose(&lp, right) {
                    out.add_term(c.clone(), lpr);
                }
            }
        }
        out
    }

    /// Product in the path algebra of `q`.
    pub fn times(&self, other: &LinComb, q: &Quiver) -> Self {
        let mut out = LinComb::zero();
        for (p, c) in &self.terms {
            for (r, d) in &other.terms {
                if let Some(pr) = q.compose(p, r) {
                    out.add_term(c * d, pr);
                }
            }
        }
        out
    }

    pub fn relabel(&self, vertices: &BTreeMap<String, String>, arrows: &BTreeMap<String, String>) -> Result<Self> {
        let mut out = LinComb::zero();
        for (p, c) in &self.terms {
            out.add_term(c.clone(), p.relabel(vertices, arrows)?);
        }
        Ok(out)
    }

    /// Drops every term of length at least `n`.
    pub fn truncated(&self, n: usize) -> Self {
        LinComb { terms: self.terms.iter().filter(|(p, _)| p.len() < n).map(|(p, c)| (p.clone(), c.clone())).collect() }
    }
}

pub(crate) fn fmt_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() {
                write!(f, "{}*", fmt_scalar(&mag))?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
