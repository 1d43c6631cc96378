//! Bound path algebras `kQ/(R)` and the exact truncated ideal oracle.
//!
//! Membership and dimension questions are answered on the finite-dimensional
//! space spanned by paths of length `< n`, where `n` is a nilpotency witness
//! (`J^n ⊆ (R)`). Below the witness, the ideal `(R)` is spanned by the
//! products `p·r·q` (`r ∈ R`, `p`, `q` paths) with their long terms dropped,
//! and Gaussian elimination over the rationals decides everything exactly.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::lincomb::LinComb;
use crate::quiver::{Path, Quiver};

/// Resource caps shared by the oracle and the searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest nilpotency index tried for cyclic quivers.
    pub nmax: usize,
    /// Largest number of paths in a truncated path space.
    pub path_cap: usize,
    /// Largest quiver handled by isomorphism and partition search.
    pub vertex_cap: usize,
    /// Largest number of isomorphisms tried before giving up.
    pub iso_cap: usize,
    /// Largest number of generators produced by an induced-relation or
    /// closure enumeration.
    pub generator_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { nmax: 32, path_cap: 200_000, vertex_cap: 12, iso_cap: 100_000, generator_cap: 100_000 }
    }
}

/// True iff every term has length ≥ 2 and all terms share their start and
/// their end vertex.
pub fn is_relation(c: &LinComb, q: &Quiver) -> bool {
    if c.is_zero() {
        return false;
    }
    let mut ends: Option<(&str, &str)> = None;
    for p in c.paths() {
        if p.len() < 2 || q.check_path(p).is_err() {
            return false;
        }
        let e = (q.source(p), q.target(p));
        match ends {
            None => ends = Some(e),
            Some(prev) if prev != e => return false,
            _ => {}
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Admissibility {
    /// `J^n ⊆ (R) ⊆ J²` with the given witness `n`.
    Admissible(usize),
    /// A generator is not a relation, so `(R) ⊄ J²` is possible.
    NotAdmissible(String),
    /// No witness up to `nmax`.
    Inconclusive,
}

/// The algebra `kQ/(R)`.
///
/// Relations are stored in canonical form (first coefficient 1) and
/// deduplicated, in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundPathAlgebra {
    quiver: Quiver,
    relations: Vec<LinComb>,
}

impl BoundPathAlgebra {
    /// Checks that every generator is a nonzero combination of paths of
    /// `quiver`. Whether the generators are relations is left to
    /// [`BoundPathAlgebra::check_admissible`].
    pub fn new(quiver: Quiver, relations: impl IntoIterator<Item = LinComb>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for r in relations {
            if r.is_zero() {
                return Err(Error::InvalidPath("zero generator".into()));
            }
            for p in r.paths() {
                quiver.check_path(p)?;
            }
            set.insert(r.canonical());
        }
        Ok(BoundPathAlgebra { quiver, relations: set.into_iter().collect() })
    }

    pub fn free(quiver: Quiver) -> Self {
        BoundPathAlgebra { quiver, relations: Vec::new() }
    }

    /// The ground field `k`: one vertex, no arrows.
    pub fn k() -> Self {
        BoundPathAlgebra::free(Quiver::from_triples(["e"], &[]).expect("valid"))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[LinComb] {
        &self.relations
    }

    pub fn relabel(&self, vertices: &BTreeMap<String, String>, arrows: &BTreeMap<String, String>) -> Result<Self> {
        let q = self.quiver.relabel(vertices, arrows)?;
        let rels = self.relations.iter().map(|r| r.relabel(vertices, arrows)).collect::<Result<Vec<_>>>()?;
        BoundPathAlgebra::new(q, rels)
    }

    /// Smallest `n ≤ nmax` with `J^n ⊆ (R)`, or `None`.
    ///
    /// Acyclic quivers answer with `longest path + 1` directly. For cyclic
    /// quivers each candidate `n` is certified by writing every path of
    /// length `n` as an exact combination of products `p·r·q`; the search
    /// degree leaves room for cancellation among terms up to the longest
    /// relation, so non-homogeneous relations are handled soundly.
    pub fn nilpotency_bound(&self, limits: &Limits) -> Result<Option<usize>> {
        if let Some(longest) = self.quiver.longest_path_len() {
            return Ok(Some(longest + 1));
        }
        let Some(maxlen) = self.relations.iter().filter_map(LinComb::max_len).max() else {
            // cyclic and (R) = 0
            return Ok(None);
        };
        for n in 1..=limits.nmax {
            let degree = n + maxlen.max(2) - 1;
            let span = IdealSpan::build(&self.quiver, &self.relations, degree, SpanMode::Exact, limits)?;
            let all_in = span
                .paths
                .iter()
                .filter(|p| p.len() == n)
                .all(|p| span.contains(&LinComb::path(p.clone())).unwrap_or(false));
            if all_in {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    pub fn check_admissible(&self, limits: &Limits) -> Result<Admissibility> {
        if let Some(bad) = self.relations.iter().find(|r| !is_relation(r, &self.quiver)) {
            return Ok(Admissibility::NotAdmissible(format!("{bad} is not a relation")));
        }
        Ok(match self.nilpotency_bound(limits)? {
            Some(n) => Admissibility::Admissible(n),
            None => Admissibility::Inconclusive,
        })
    }

    /// The nilpotency witness, failing unless the ideal is certified
    /// admissible.
    pub fn witness(&self, limits: &Limits) -> Result<usize> {
        match self.check_admissible(limits)? {
            Admissibility::Admissible(n) => Ok(n),
            Admissibility::NotAdmissible(why) => Err(Error::NotAdmissible(why)),
            Admissibility::Inconclusive => Err(Error::Inconclusive { nmax: limits.nmax }),
        }
    }

    /// `(R) + J^n` as a subspace of `kQ/J^n`.
    pub fn truncated_ideal(&self, n: usize, limits: &Limits) -> Result<TruncatedIdeal> {
        let span = IdealSpan::build(&self.quiver, &self.relations, n, SpanMode::Truncate, limits)?;
        Ok(TruncatedIdeal { span })
    }

    /// The ideal at the certified witness degree, so that membership is
    /// exact membership in `(R)`.
    pub fn ideal(&self, limits: &Limits) -> Result<TruncatedIdeal> {
        let n = self.witness(limits)?;
        self.truncated_ideal(n, limits)
    }

    /// Decides `x ∈ (R) + J^n`; exact membership in `(R)` when `n` is at
    /// least the nilpotency witness.
    pub fn ideal_membership(&self, x: &LinComb, n: usize, limits: &Limits) -> Result<bool> {
        self.truncated_ideal(n, limits)?.contains(x)
    }

    /// `dim_k kQ/(R)`.
    pub fn dimension(&self, limits: &Limits) -> Result<usize> {
        Ok(self.ideal(limits)?.quotient_dimension())
    }
}

/// Internal paths between ordered vertex pairs, grouped by endpoints.
pub type Connectors = BTreeMap<(String, String), Vec<Path>>;

impl BoundPathAlgebra {
    /// Representatives for "any path from `a` to `b`" modulo `(R)`, given a
    /// nilpotency witness `n`: every path of length `< n`, plus one path of
    /// length `≥ n` when such a path exists. All long paths lie in `(R)`, so
    /// any one of them stands in for the rest.
    pub fn connectors(&self, n: usize, limits: &Limits) -> Result<Connectors> {
        let q = &self.quiver;
        let mut out: Connectors = BTreeMap::new();
        for v in q.vertices() {
            for w in q.vertices() {
                out.insert((v.to_string(), w.to_string()), Vec::new());
            }
        }
        let short = if n == 0 { Vec::new() } else { q.enumerate_paths_capped(n - 1, limits.path_cap)? };
        for p in short {
            out.get_mut(&(q.source(&p).to_string(), q.target(&p).to_string())).expect("endpoints are vertices").push(p);
        }
        if q.is_acyclic() {
            return Ok(out);
        }
        // walk layer by layer, one representative path per reachable vertex;
        // the shortest long path has length < n + |Q0|
        let horizon = n + q.vertex_count();
        for a in q.vertices() {
            let mut layer: BTreeMap<&str, Vec<String>> = BTreeMap::from([(a, Vec::new())]);
            let mut found: BTreeSet<&str> = BTreeSet::new();
            for len in 1..horizon {
                let mut next: BTreeMap<&str, Vec<String>> = BTreeMap::new();
                for (v, path) in &layer {
                    for arr in q.out_arrows(v) {
                        next.entry(arr.target.as_str()).or_insert_with(|| {
                            let mut p = path.clone();
                            p.push(arr.id.clone());
                            p
                        });
                    }
                }
                layer = next;
                if len >= n {
                    for (b, path) in &layer {
                        if found.insert(b) {
                            out.get_mut(&(a.to_string(), b.to_string()))
                                .expect("endpoints are vertices")
                                .push(Path::Arrows(path.clone()));
                        }
                    }
                }
                if layer.is_empty() {
                    break;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for BoundPathAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
        write!(
            f,
            "kQ/(R) with |Q0| = {}, |Q1| = {}, R = {{{}}}",
            self.quiver.vertex_count(),
            self.quiver.arrow_count(),
            rels.join(", ")
        )
    }
}

/// True iff `(R_a) = (R_b)`. Both presentations must live over the same
/// quiver and be admissible. Equal ideals are cross-checked by comparing
/// quotient dimensions.
pub fn ideals_equal(a: &BoundPathAlgebra, b: &BoundPathAlgebra, limits: &Limits) -> Result<bool> {
    if a.quiver != b.quiver {
        return Err(Error::QuiverMismatch);
    }
    let ia = a.ideal(limits)?;
    let ib = b.ideal(limits)?;
    for r in a.relations() {
        if !ib.contains(r)? {
            return Ok(false);
        }
    }
    for r in b.relations() {
        if !ia.contains(r)? {
            return Ok(false);
        }
    }
    let (da, db) = (ia.quotient_dimension(), ib.quotient_dimension());
    if da != db {
        return Err(Error::Internal(format!("equal ideals with different quotient dimensions {da} and {db}")));
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SpanMode {
    /// Keep every product, dropping its terms of length ≥ degree.
    Truncate,
    /// Keep only products whose terms all have length < degree.
    Exact,
}

#[derive(Clone, Debug)]
struct IdealSpan {
    degree: usize,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    echelon: Echelon,
    quiver: Quiver,
}

impl IdealSpan {
    fn build(q: &Quiver, relations: &[LinComb], degree: usize, mode: SpanMode, limits: &Limits) -> Result<Self> {
        let paths = if degree == 0 { Vec::new() } else { q.enumerate_paths_capped(degree - 1, limits.path_cap)? };
        let index: HashMap<Path, usize> = paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut ending: BTreeMap<&str, Vec<&Path>> = BTreeMap::new();
        let mut starting: BTreeMap<&str, Vec<&Path>> = BTreeMap::new();
        for p in &paths {
            ending.entry(q.target(p)).or_default().push(p);
            starting.entry(q.source(p)).or_default().push(p);
        }
        let mut span = IdealSpan { degree, paths: Vec::new(), index, echelon: Echelon::new(), quiver: q.clone() };
        for r in relations {
            let (Some(lo), Some(hi)) = (r.min_len(), r.max_len()) else { continue };
            let probe = r.paths().next().expect("nonzero");
            let (s, e) = (q.source(probe), q.target(probe));
            let budget = match mode {
                SpanMode::Truncate => lo,
                SpanMode::Exact => hi,
            };
            if budget >= degree {
                continue;
            }
            let room = degree - 1 - budget;
            for left in ending.get(s).into_iter().flatten() {
                if left.len() > room {
                    break;
                }
                for right in starting.get(e).into_iter().flatten() {
                    if left.len() + right.len() > room {
                        break;
                    }
                    let prod = r.sandwich(left, right, q).truncated(degree);
                    span.echelon.insert(span.vector(&prod)?);
                }
            }
        }
        span.paths = paths;
        Ok(span)
    }

    fn vector(&self, x: &LinComb) -> Result<SparseVec> {
        x.truncated(self.degree)
            .terms()
            .map(|(p, c)| {
                self.index
                    .get(p)
                    .map(|i| (*i, c.clone()))
                    .ok_or_else(|| Error::InvalidPath(format!("{p} is not a path of the quiver")))
            })
            .collect()
    }

    fn contains(&self, x: &LinComb) -> Result<bool> {
        for p in x.paths() {
            self.quiver.check_path(p)?;
        }
        Ok(self.echelon.contains(self.vector(x)?))
    }
}

/// The subspace `((R) + J^n)/J^n` of `kQ/J^n`, built once and queried many
/// times.
#[derive(Clone, Debug)]
pub struct TruncatedIdeal {
    span: IdealSpan,
}

impl TruncatedIdeal {
    pub fn degree(&self) -> usize {
        self.span.degree
    }

    pub fn contains(&self, x: &LinComb) -> Result<bool> {
        self.span.contains(x)
    }

    pub fn rank(&self) -> usize {
        self.span.echelon.rank()
    }

    /// Paths of length below the degree.
    pub fn path_count(&self) -> usize {
        self.span.paths.len()
    }

    pub fn quotient_dimension(&self) -> usize {
        self.path_count() - self.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::int;

    fn p(arrows: &[&str]) -> Path {
        Path::Arrows(arrows.iter().map(|s| s.to_string()).collect())
    }

    fn lc(terms: &[(i64, &[&str])]) -> LinComb {
        LinComb::from_terms(terms.iter().map(|(c, a)| (int(*c), p(a))))
    }

    /// Quiver with arrows α:4→2, β:2→1, γ:4→3, δ:3→1.
    fn diamond() -> Quiver {
        Quiver::from_triples(
            ["1", "2", "3", "4"],
            &[("alpha", "4", "2"), ("beta", "2", "1"), ("gamma", "4", "3"), ("delta", "3", "1")],
        )
        .unwrap()
    }

    fn one_loop() -> Quiver {
        Quiver::from_triples(["v"], &[("x", "v", "v")]).unwrap()
    }

    fn chain(n: usize) -> Quiver {
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows: Vec<crate::quiver::Arrow> =
            (1..n).map(|i| crate::quiver::Arrow::new(format!("a{i}"), i.to_string(), (i + 1).to_string())).collect();
        Quiver::new(vs, arrows).unwrap()
    }

    #[test]
    fn relation_predicate() {
        let q = diamond();
        assert!(is_relation(&lc(&[(1, &["alpha", "beta"]), (-1, &["gamma", "delta"])]), &q));
        assert!(!is_relation(&lc(&[(1, &["alpha"])]), &q));
        let q2 = Quiver::from_triples(
            ["1", "2", "3", "5"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "1", "5"), ("d", "5", "5")],
        )
        .unwrap();
        assert!(!is_relation(&lc(&[(1, &["a", "b"]), (1, &["c", "d"])]), &q2));
    }

    #[test]
    fn nilpotency_examples() {
        let l = Limits::default();
        let x2 = BoundPathAlgebra::new(one_loop(), [lc(&[(1, &["x", "x"])])]).unwrap();
        assert_eq!(x2.nilpotency_bound(&l).unwrap(), Some(2));
        assert_eq!(BoundPathAlgebra::free(chain(3)).nilpotency_bound(&l).unwrap(), Some(3));
        let l10 = Limits { nmax: 10, ..Limits::default() };
        assert_eq!(BoundPathAlgebra::free(one_loop()).nilpotency_bound(&l10).unwrap(), None);
    }

    #[test]
    fn non_homogeneous_relations_are_not_fooled() {
        let l = Limits { nmax: 8, ..Limits::default() };
        // x² - x³ generates x²(1 - x), which contains no power of x
        let bad = BoundPathAlgebra::new(one_loop(), [lc(&[(1, &["x", "x"]), (-1, &["x", "x", "x"])])]).unwrap();
        assert_eq!(bad.nilpotency_bound(&l).unwrap(), None);
        // adding x³ makes x² = (x² - x³) + x³ a member
        let good = BoundPathAlgebra::new(
            one_loop(),
            [lc(&[(1, &["x", "x"]), (-1, &["x", "x", "x"])]), lc(&[(1, &["x", "x", "x"])])],
        )
        .unwrap();
        assert_eq!(good.nilpotency_bound(&l).unwrap(), Some(2));
    }

    #[test]
    fn admissibility_examples() {
        let l = Limits::default();
        let acyclic = BoundPathAlgebra::new(diamond(), [lc(&[(1, &["alpha", "beta"])])]).unwrap();
        assert_eq!(acyclic.check_admissible(&l).unwrap(), Admissibility::Admissible(3));
        let x3 = BoundPathAlgebra::new(one_loop(), [lc(&[(1, &["x", "x", "x"])])]).unwrap();
        assert_eq!(x3.check_admissible(&l).unwrap(), Admissibility::Admissible(3));
        assert_eq!(BoundPathAlgebra::free(one_loop()).check_admissible(&l).unwrap(), Admissibility::Inconclusive);
        let arrow = BoundPathAlgebra::new(diamond(), [lc(&[(1, &["alpha"])])]).unwrap();
        assert!(matches!(arrow.check_admissible(&l).unwrap(), Admissibility::NotAdmissible(_)));
    }

    #[test]
    fn membership_examples() {
        let l = Limits::default();
        let two = BoundPathAlgebra::new(diamond(), [lc(&[(1, &["alpha", "beta"])]), lc(&[(1, &["gamma", "delta"])])])
            .unwrap();
        assert!(two.ideal_membership(&lc(&[(1, &["alpha", "beta"])]), 3, &l).unwrap());
        assert!(two.ideal_membership(&lc(&[(1, &["alpha", "beta"]), (-1, &["gamma", "delta"])]), 3, &l).unwrap());
        let diff =
            BoundPathAlgebra::new(diamond(), [lc(&[(1, &["alpha", "beta"]), (-1, &["gamma", "delta"])])]).unwrap();
        assert!(!diff.ideal_membership(&lc(&[(1, &["alpha", "beta"])]), 3, &l).unwrap());
        // arrows are never in an admissible ideal
        assert!(!diff.ideal_membership(&lc(&[(1, &["alpha"])]), 3, &l).unwrap());
        assert!(diff.ideal_membership(&lc(&[(1, &["nope", "beta"])]), 3, &l).is_err());
    }

    #[test]
    fn dimension_examples() {
        let l = Limits::default();
        let a2 = BoundPathAlgebra::free(chain(2));
        assert_eq!(a2.dimension(&l).unwrap(), 3);
        let x2 = BoundPathAlgebra::new(one_loop(), [lc(&[(1, &["x", "x"])])]).unwrap();
        assert_eq!(x2.dimension(&l).unwrap(), 2);
        let two = BoundPathAlgebra::new(diamond(), [lc(&[(1, &["alpha", "beta"])]), lc(&[(1, &["gamma", "delta"])])])
            .unwrap();
        assert_eq!(two.dimension(&l).unwrap(), 8);
        assert_eq!(BoundPathAlgebra::k().dimension(&l).unwrap(), 1);
        assert!(BoundPathAlgebra::free(one_loop()).dimension(&l).is_err());
    }

    #[test]
    fn ideal_equality_examples() {
        let l = Limits::default();
        let ab = lc(&[(1, &["alpha", "beta"])]);
        let gd = lc(&[(1, &["gamma", "delta"])]);
        let base = BoundPathAlgebra::new(diamond(), [ab.clone(), gd.clone()]).unwrap();
        let rescaled = BoundPathAlgebra::new(diamond(), [ab.scaled(&int(5)), gd.clone()]).unwrap();
        assert!(ideals_equal(&base, &rescaled, &l).unwrap());
        let diff = BoundPathAlgebra::new(diamond(), [ab.minus(&gd)]).unwrap();
        assert!(!ideals_equal(&base, &diff, &l).unwrap());
        let mixed = BoundPathAlgebra::new(diamond(), [ab.plus(&gd), gd.clone()]).unwrap();
        assert!(ideals_equal(&base, &mixed, &l).unwrap());
        let other = BoundPathAlgebra::free(chain(4));
        assert_eq!(ideals_equal(&base, &other, &l), Err(Error::QuiverMismatch));
    }

    #[test]
    fn connectors_cover_long_paths_once() {
        let l = Limits::default();
        let x2 = BoundPathAlgebra::new(one_loop(), [lc(&[(1, &["x", "x"])])]).unwrap();
        let c = x2.connectors(2, &l).unwrap();
        let shown: Vec<String> = c[&("v".into(), "v".into())].iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["e_v", "x", "x*x"]);
        let chain = BoundPathAlgebra::free(chain(3));
        let c = chain.connectors(3, &l).unwrap();
        assert_eq!(c[&("1".into(), "3".into())], vec![p(&["a1", "a2"])]);
        assert!(c[&("3".into(), "1".into())].is_empty());
    }

    #[test]
    fn relations_are_canonical_and_deduplicated() {
        let ab = lc(&[(1, &["alpha", "beta"])]);
        let a = BoundPathAlgebra::new(diamond(), [ab.scaled(&int(3)), ab.clone()]).unwrap();
        assert_eq!(a.relations(), &[ab]);
    }
}
