//! Simplifications of a bound path algebra `kQ/(R)` through equivalence
//! relations on its vertices.
//!
//! The pipeline for one partition `∼` is: coherence with the arrows, a
//! labelling `z: Q^∼ → Q^∼/∼`, compatibility of `R` with `∼` relative to
//! `z`, and finally the gbp-algebra `A(∼)`.

mod build;
mod compat;
mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::iso::next_permutation;
use crate::lincomb::LinComb;
use crate::partition::VertexPartition;
use crate::quiver::{Path, Quiver};

pub use build::{build_simplification, loop_simplification, partition_from_gbp, round_trip_holds, Recovered};
pub use compat::{block_algebra, is_compatible, ClosureMode};
pub use search::{search_simplifications, SearchOptions, SearchReport, SearchResult};

/// A failed clause of coherence or compatibility, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub clause: u8,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "clause ({}): {}", self.clause, self.detail)
    }
}

/// Outcome of a coherence or compatibility test.
pub type Check = std::result::Result<(), Violation>;

fn violation(clause: u8, detail: String) -> Check {
    Err(Violation { clause, detail })
}

/// Checks that `p` is coherent with the arrows of `q`:
/// (1) arrows on oriented cycles stay inside a block;
/// (2) `[x, w] = [y, w]` and `[w, x] = [w, y]` whenever `x ∼ y ≁ w`.
pub fn is_coherent(q: &Quiver, p: &VertexPartition) -> Result<Check> {
    p.check_covers(q)?;
    for a in q.cycle_arrows() {
        if !p.same_block(&a.source, &a.target) {
            return Ok(violation(
                1,
                format!("arrow {}: {} -> {} lies on a cycle but crosses blocks", a.id, a.source, a.target),
            ));
        }
    }
    for block in p.blocks() {
        for x in block {
            for y in block {
                if x >= y {
                    continue;
                }
                for w in q.vertices().filter(|w| !p.same_block(y, w)) {
                    let (xw, yw) = (q.count_between(x, w), q.count_between(y, w));
                    if xw != yw {
                        return Ok(violation(2, format!("[{x},{w}] = {xw} but [{y},{w}] = {yw}")));
                    }
                    let (wx, wy) = (q.count_between(w, x), q.count_between(w, y));
                    if wx != wy {
                        return Ok(violation(2, format!("[{w},{x}] = {wx} but [{w},{y}] = {wy}")));
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}

/// A quiver morphism `z` from the reduced quiver onto a target quiver whose
/// vertices are the blocks, bijective on every class `Q^∼(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labelling {
    target: Quiver,
    vertex_map: BTreeMap<String, String>,
    arrow_map: BTreeMap<String, String>,
}

impl Labelling {
    /// Checks the morphism and bijectivity conditions against `q` and `p`.
    pub fn new(
        q: &Quiver,
        p: &VertexPartition,
        target: Quiver,
        vertex_map: BTreeMap<String, String>,
        arrow_map: BTreeMap<String, String>,
    ) -> Result<Self> {
        let z = Labelling { target, vertex_map, arrow_map };
        z.validate(q, p)?;
        Ok(z)
    }

    fn validate(&self, q: &Quiver, p: &VertexPartition) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidLabelling(m));
        for x in q.vertices() {
            let Some(bx) = self.vertex_map.get(x) else {
                return bad(format!("vertex {x} has no image"));
            };
            if !self.target.has_vertex(bx) {
                return bad(format!("image {bx} of {x} is not a target vertex"));
            }
            for y in q.vertices() {
                if p.same_block(x, y) != (self.vertex_map.get(y) == Some(bx)) {
                    return bad(format!("vertices {x} and {y} are mapped against the partition"));
                }
            }
        }
        let reduced = q.reduced_quiver(p)?;
        let mapped: BTreeSet<&String> = self.arrow_map.keys().collect();
        let expected: BTreeSet<&String> = reduced.arrows().map(|a| &a.id).collect();
        if mapped != expected {
            return bad("arrow map domain is not the reduced arrow set".into());
        }
        for x in reduced.vertices() {
            for y in reduced.vertices() {
                let images: BTreeSet<&str> =
                    reduced.arrows_between(x, y).map(|a| self.arrow_map[&a.id].as_str()).collect();
                let n = reduced.count_between(x, y);
                if n == 0 {
                    continue;
                }
                let (bx, by) = (&self.vertex_map[x], &self.vertex_map[y]);
                let wanted: BTreeSet<&str> = self.target.arrows_between(bx, by).map(|a| a.id.as_str()).collect();
                if images.len() != n || images != wanted {
                    return bad(format!("arrows {x} -> {y} are not mapped bijectively onto {bx} -> {by}"));
                }
            }
        }
        Ok(())
    }

    pub fn target(&self) -> &Quiver {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<String, String> {
        &self.vertex_map
    }

    pub fn arrow_map(&self) -> &BTreeMap<String, String> {
        &self.arrow_map
    }

    pub fn vertex(&self, v: &str) -> &str {
        &self.vertex_map[v]
    }

    pub fn arrow(&self, a: &str) -> Option<&str> {
        self.arrow_map.get(a).map(String::as_str)
    }

    /// Arrows of `Q^∼` over each target arrow.
    pub(crate) fn preimages(&self) -> BTreeMap<&str, Vec<&str>> {
        let mut out: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for (a, l) in &self.arrow_map {
            out.entry(l.as_str()).or_default().push(a.as_str());
        }
        out
    }
}

impl fmt::Display for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arrow_map.iter().map(|(a, l)| format!("{a}->{l}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

struct ArrowClass {
    sources: Vec<String>,
    targets: Vec<String>,
}

fn arrow_classes(q: &Quiver, p: &VertexPartition, target: &Quiver, vmap: &BTreeMap<String, String>) -> Vec<ArrowClass> {
    let mut out = Vec::new();
    for x in q.vertices() {
        for y in q.vertices() {
            if p.same_block(x, y) {
                continue;
            }
            let sources: Vec<String> = q.arrows_between(x, y).map(|a| a.id.clone()).collect();
            if sources.is_empty() {
                continue;
            }
            let targets = target.arrows_between(&vmap[x], &vmap[y]).map(|a| a.id.clone()).collect();
            out.push(ArrowClass { sources, targets });
        }
    }
    out
}

fn block_vertex_map(q: &Quiver, p: &VertexPartition) -> BTreeMap<String, String> {
    q.vertices().map(|v| (v.to_string(), p.block_name_of(v).expect("partition covers q"))).collect()
}

/// The labelling that maps each class `Q^∼(x, y)` onto the quotient arrows
/// in sorted order, with target the quotient of the reduced quiver.
pub fn canonical_labelling(q: &Quiver, p: &VertexPartition) -> Result<Labelling> {
    if let Err(v) = is_coherent(q, p)? {
        return Err(Error::Incoherent(v.to_string()));
    }
    let target = q.reduced_quiver(p)?.quotient_quiver(p)?;
    let vmap = block_vertex_map(q, p);
    let mut amap = BTreeMap::new();
    for class in arrow_classes(q, p, &target, &vmap) {
        for (s, t) in class.sources.iter().zip(&class.targets) {
            amap.insert(s.clone(), t.clone());
        }
    }
    Labelling::new(q, p, target, vmap, amap)
}

/// Every labelling onto the quotient of the reduced quiver, canonical one
/// first, stopping after `cap`. The flag reports truncation.
pub fn enumerate_labellings(q: &Quiver, p: &VertexPartition, cap: usize) -> Result<(Vec<Labelling>, bool)> {
    labellings(q, p, cap, false)
}

/// One labelling per orbit under permutations of parallel quotient arrows:
/// the first class over each quotient arrow bundle keeps the canonical
/// order. Compatibility and the construction are invariant under these
/// permutations, so the orbits suffice for a search.
pub fn enumerate_labelling_orbits(q: &Quiver, p: &VertexPartition, cap: usize) -> Result<(Vec<Labelling>, bool)> {
    labellings(q, p, cap, true)
}

fn labellings(q: &Quiver, p: &VertexPartition, cap: usize, orbits: bool) -> Result<(Vec<Labelling>, bool)> {
    let canonical = canonical_labelling(q, p)?;
    let classes = arrow_classes(q, p, canonical.target(), canonical.vertex_map());
    let mut perms: Vec<Vec<usize>> = classes.iter().map(|c| (0..c.sources.len()).collect()).collect();
    let mut bundles = BTreeSet::new();
    let fixed: Vec<bool> = classes.iter().map(|c| orbits && bundles.insert(c.targets.clone())).collect();
    let mut out = Vec::new();
    loop {
        if out.len() == cap {
            return Ok((out, true));
        }
        let mut amap = BTreeMap::new();
        for (class, perm) in classes.iter().zip(&perms) {
            for (k, s) in class.sources.iter().enumerate() {
                amap.insert(s.clone(), class.targets[perm[k]].clone());
            }
        }
        out.push(Labelling {
            target: canonical.target.clone(),
            vertex_map: canonical.vertex_map.clone(),
            arrow_map: amap,
        });
        let mut advanced = false;
        for (perm, _) in perms.iter_mut().zip(&fixed).rev().filter(|(_, f)| !**f) {
            if next_permutation(perm) {
                advanced = true;
                break;
            }
            perm.sort_unstable();
        }
        if !advanced {
            return Ok((out, false));
        }
    }
}

/// One piece of `δ₀ α₁ δ₁ … α_m δ_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Segment {
    /// A path inside one block, possibly trivial.
    Internal(Path),
    /// An arrow between distinct blocks.
    Crossing(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    pub segments: Vec<Segment>,
    pub induced_path: Path,
    pub straightforward: bool,
}

/// Splits `path` at its block-crossing arrows. The path must be valid in
/// `q` and every crossing arrow must be labelled by `z`.
pub fn decompose_path(q: &Quiver, path: &Path, p: &VertexPartition, z: &Labelling) -> Result<PathDecomposition> {
    q.check_path(path)?;
    let mut segments = Vec::new();
    let mut current: Vec<String> = Vec::new();
    let mut at = q.source(path).to_string();
    let mut induced = Vec::new();
    let close = |current: &mut Vec<String>, at: &str| {
        if current.is_empty() {
            Segment::Internal(Path::trivial(at))
        } else {
            Segment::Internal(Path::Arrows(std::mem::take(current)))
        }
    };
    for id in path.arrows() {
        let arrow = q.arrow(id).expect("checked path");
        if p.same_block(&arrow.source, &arrow.target) {
            current.push(id.clone());
        } else {
            let image =
                z.arrow(id).ok_or_else(|| Error::InvalidLabelling(format!("crossing arrow {id} is not labelled")))?;
            segments.push(close(&mut current, &at));
            segments.push(Segment::Crossing(id.clone()));
            induced.push(image.to_string());
        }
        at = arrow.target.clone();
    }
    segments.push(close(&mut current, &at));
    let straightforward = match (segments.first(), segments.last()) {
        (Some(Segment::Internal(a)), Some(Segment::Internal(b))) => a.is_trivial() && b.is_trivial(),
        _ => false,
    };
    let induced_path = if induced.is_empty() { Path::trivial(z.vertex(q.source(path))) } else { Path::Arrows(induced) };
    Ok(PathDecomposition { segments, induced_path, straightforward })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationClass {
    Internal,
    External,
    Neither,
}

/// Internal: every induced path has length 0. External: every term is
/// straightforward and the induced paths are pairwise distinct.
pub fn classify_relation(q: &Quiver, c: &LinComb, p: &VertexPartition, z: &Labelling) -> Result<RelationClass> {
    let decs = c.paths().map(|t| decompose_path(q, t, p, z)).collect::<Result<Vec<_>>>()?;
    if decs.iter().all(|d| d.induced_path.is_trivial()) {
        return Ok(RelationClass::Internal);
    }
    let distinct: BTreeSet<&Path> = decs.iter().map(|d| &d.induced_path).collect();
    if decs.iter().all(|d| d.straightforward) && distinct.len() == decs.len() {
        return Ok(RelationClass::External);
    }
    Ok(RelationClass::Neither)
}

/// `z(γ) = Σ λₜ z(γₜ)` for an external relation.
pub fn induced_relation(q: &Quiver, c: &LinComb, p: &VertexPartition, z: &Labelling) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for (t, coeff) in c.terms() {
        out.add_term(coeff.clone(), decompose_path(q, t, p, z)?.induced_path);
    }
    Ok(out)
}
