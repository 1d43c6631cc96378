//! Generalized bound path algebras `k(Γ, 𝒜, I)` and their expansion into an
//! ordinary bound quiver presentation over `Γ[Σ₁, …, Σₙ]`.
//!
//! A gbp-algebra is never manipulated through 𝒜-paths directly. It is
//! represented by its expanded presentation, whose relations are the copied
//! vertex relations `Ω₁ ⊔ … ⊔ Ωₙ` together with the induced set `R(I)`.
//!
//! Naming in the expanded quiver:
//! * vertex `p` of `Σᵢ` becomes `i.p`, or just `i` when `Σᵢ` has one vertex;
//! * arrow `a` of `Σᵢ` becomes `i.a`;
//! * the copy of the Γ-arrow `l` from `P` to `Q` is `l__P__Q`, with `P`, `Q`
//!   expanded vertex names.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::algebra::{ideals_equal, is_relation, Admissibility, BoundPathAlgebra, Connectors, Limits};
use crate::error::{Error, Result};
use crate::iso::for_each_isomorphism;
use crate::lincomb::{LinComb, Scalar};
use crate::quiver::{Arrow, Path, Quiver};

/// The algebra sitting at one vertex of Γ, with a display label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexAlgebra {
    pub label: String,
    pub algebra: BoundPathAlgebra,
}

impl VertexAlgebra {
    pub fn new(label: impl Into<String>, algebra: BoundPathAlgebra) -> Self {
        VertexAlgebra { label: label.into(), algebra }
    }

    pub fn k() -> Self {
        VertexAlgebra::new("k", BoundPathAlgebra::k())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbpAlgebra {
    gamma: Quiver,
    family: BTreeMap<String, VertexAlgebra>,
    relations: Vec<LinComb>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ArrowOrigin {
    /// Arrow `local_arrow` of the algebra at `gamma_vertex`.
    Internal { gamma_vertex: String, local_arrow: String },
    /// The copy of `gamma_arrow` from `local_source` to `local_target`.
    Copy { gamma_arrow: String, local_source: String, local_target: String },
}

/// The presentation `kQ/(Ω + L(I))` of a gbp-algebra, with the origin of
/// every vertex and arrow of `Q = Γ[Σ₁, …, Σₙ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedPresentation {
    pub algebra: BoundPathAlgebra,
    /// `Ω₁ ⊔ … ⊔ Ωₙ`, renamed into `Q`.
    pub internal_relations: Vec<LinComb>,
    /// `R(I)`.
    pub induced_relations: Vec<LinComb>,
    /// expanded vertex ↦ (Γ-vertex, local vertex)
    pub vertex_origin: BTreeMap<String, (String, String)>,
    pub arrow_origin: BTreeMap<String, ArrowOrigin>,
}

impl GbpAlgebra {
    /// Builds the triple without semantic checks; relations over Γ must
    /// only mention its arrows. See [`GbpAlgebra::validate`].
    pub fn new(
        gamma: Quiver,
        family: BTreeMap<String, VertexAlgebra>,
        relations: impl IntoIterator<Item = LinComb>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for r in relations {
            for p in r.paths() {
                gamma.check_path(p)?;
            }
            if !r.is_zero() {
                set.insert(r.canonical());
            }
        }
        Ok(GbpAlgebra { gamma, family, relations: set.into_iter().collect() })
    }

    pub fn gamma(&self) -> &Quiver {
        &self.gamma
    }

    pub fn family(&self) -> &BTreeMap<String, VertexAlgebra> {
        &self.family
    }

    pub fn vertex_algebra(&self, v: &str) -> Option<&VertexAlgebra> {
        self.family.get(v)
    }

    pub fn relations(&self) -> &[LinComb] {
        &self.relations
    }

    /// Human-readable diagnostics, one per violated clause. Empty means
    /// valid.
    pub fn validate(&self, limits: &Limits) -> Vec<String> {
        let mut diags = Vec::new();
        if !self.gamma.is_acyclic() {
            diags.push("gamma not acyclic".to_string());
        }
        for r in &self.relations {
            if !is_relation(r, &self.gamma) {
                diags.push(format!("not a relation: {r}"));
            }
        }
        for v in self.gamma.vertices() {
            if !self.family.contains_key(v) {
                diags.push(format!("vertex {v} has no algebra"));
            }
        }
        for (v, va) in &self.family {
            if !self.gamma.has_vertex(v) {
                diags.push(format!("algebra assigned to unknown vertex {v}"));
                continue;
            }
            if va.algebra.quiver().vertex_count() == 0 {
                diags.push(format!("vertex {v}: algebra {} has an empty quiver", va.label));
                continue;
            }
            match va.algebra.check_admissible(limits) {
                Ok(Admissibility::Admissible(_)) => {}
                Ok(Admissibility::NotAdmissible(why)) => {
                    diags.push(format!("vertex {v}: algebra {} not admissible ({why})", va.label))
                }
                Ok(Admissibility::Inconclusive) => diags.push(format!(
                    "vertex {v}: algebra {} admissibility inconclusive up to n = {}",
                    va.label, limits.nmax
                )),
                Err(e) => diags.push(format!("vertex {v}: algebra {}: {e}", va.label)),
            }
        }
        if diags.is_empty() {
            if let Err(e) = self.expanded_quiver() {
                diags.push(format!("expanded quiver: {e}"));
            }
        }
        diags
    }

    pub fn check_valid(&self, limits: &Limits) -> Result<()> {
        let diags = self.validate(limits);
        if diags.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(diags))
        }
    }

    fn is_single(&self, v: &str) -> bool {
        self.family[v].algebra.quiver().vertex_count() == 1
    }

    /// Name of local vertex `p` of `Σ_v` in the expanded quiver.
    pub fn expanded_vertex(&self, v: &str, p: &str) -> String {
        if self.is_single(v) {
            v.to_string()
        } else {
            format!("{v}.{p}")
        }
    }

    pub fn expanded_internal_arrow(v: &str, a: &str) -> String {
        format!("{v}.{a}")
    }

    pub fn expanded_copy_arrow(l: &str, from: &str, to: &str) -> String {
        format!("{l}__{from}__{to}")
    }

    /// `Γ[Σ₁, …, Σₙ]` with origin maps; the algebra carries no relations.
    /// Assumes every Γ-vertex carries an algebra.
    pub fn expanded_quiver(&self) -> Result<ExpandedPresentation> {
        let mut vertex_origin = BTreeMap::new();
        let mut arrow_origin = BTreeMap::new();
        let mut arrows = Vec::new();
        for v in self.gamma.vertices() {
            let va = self.family.get(v).ok_or_else(|| Error::Validation(vec![format!("vertex {v} has no algebra")]))?;
            let sigma = va.algebra.quiver();
            for p in sigma.vertices() {
                let name = self.expanded_vertex(v, p);
                if vertex_origin.insert(name.clone(), (v.to_string(), p.to_string())).is_some() {
                    return Err(Error::Validation(vec![format!("expanded vertex name {name} collides")]));
                }
            }
            for a in sigma.arrows() {
                let id = Self::expanded_internal_arrow(v, &a.id);
                arrows.push(Arrow::new(
                    id.clone(),
                    self.expanded_vertex(v, &a.source),
                    self.expanded_vertex(v, &a.target),
                ));
                arrow_origin
                    .insert(id, ArrowOrigin::Internal { gamma_vertex: v.to_string(), local_arrow: a.id.clone() });
            }
        }
        for l in self.gamma.arrows() {
            let src = &self.family[&l.source].algebra;
            let dst = &self.family[&l.target].algebra;
            for p in src.quiver().vertices() {
                for q in dst.quiver().vertices() {
                    let from = self.expanded_vertex(&l.source, p);
                    let to = self.expanded_vertex(&l.target, q);
                    let id = Self::expanded_copy_arrow(&l.id, &from, &to);
                    arrows.push(Arrow::new(id.clone(), from, to));
                    arrow_origin.insert(
                        id,
                        ArrowOrigin::Copy {
                            gamma_arrow: l.id.clone(),
                            local_source: p.to_string(),
                            local_target: q.to_string(),
                        },
                    );
                }
            }
        }
        let quiver = Quiver::new(vertex_origin.keys().cloned(), arrows)
            .map_err(|e| Error::Validation(vec![format!("expanded quiver: {e}")]))?;
        Ok(ExpandedPresentation {
            algebra: BoundPathAlgebra::free(quiver),
            internal_relations: Vec::new(),
            induced_relations: Vec::new(),
            vertex_origin,
            arrow_origin,
        })
    }

    /// Renames a path of `Σ_v` into the expanded quiver.
    fn lift_local(&self, v: &str, p: &Path) -> Path {
        match p {
            Path::Trivial(x) => Path::Trivial(self.expanded_vertex(v, x)),
            Path::Arrows(a) => Path::Arrows(a.iter().map(|x| Self::expanded_internal_arrow(v, x)).collect()),
        }
    }

    fn connectors(&self, limits: &Limits) -> Result<BTreeMap<String, Connectors>> {
        self.family
            .iter()
            .map(|(v, va)| {
                let n = va.algebra.witness(limits)?;
                Ok((v.clone(), va.algebra.connectors(n, limits)?))
            })
            .collect()
    }

    /// `R(I)`: for every relation `Σ λₜ βₜ₁…βₜᵣ` of `I`, every choice of
    /// local endpoints and every choice of internal connecting paths, the
    /// combination of arrow copies threaded through those paths.
    ///
    /// Connecting paths range over [`BoundPathAlgebra::connectors`]; any
    /// other path differs from one of those by an element of `(Ωᵢ)`, so the
    /// ideal `Ω + L(I)` is the same.
    pub fn induced_relations(&self, limits: &Limits) -> Result<Vec<LinComb>> {
        self.check_valid(limits)?;
        let connectors = self.connectors(limits)?;
        let mut out = BTreeSet::new();
        for rel in &self.relations {
            let probe = rel.paths().next().expect("relations are nonzero");
            let (start, end) = (self.gamma.source(probe), self.gamma.target(probe));
            let terms: Vec<(&Path, &Scalar)> = rel.terms().collect();
            for p in self.family[start].algebra.quiver().vertices() {
                for q in self.family[end].algebra.quiver().vertices() {
                    let choices =
                        terms.iter().map(|(path, _)| self.thread(path, p, q, &connectors)).collect::<Vec<_>>();
                    if choices.iter().any(Vec::is_empty) {
                        continue;
                    }
                    let total: usize = choices.iter().map(Vec::len).product();
                    if total > limits.generator_cap {
                        return Err(Error::CapExceeded { what: "induced relation choices", cap: limits.generator_cap });
                    }
                    let mut idx = vec![0usize; choices.len()];
                    loop {
                        let lc = LinComb::from_terms(
                            terms
                                .iter()
                                .zip(&idx)
                                .zip(&choices)
                                .map(|(((_, c), &i), ch)| ((*c).clone(), ch[i].clone())),
                        );
                        if !lc.is_zero() {
                            out.insert(lc.canonical());
                            if out.len() > limits.generator_cap {
                                return Err(Error::CapExceeded {
                                    what: "induced relations",
                                    cap: limits.generator_cap,
                                });
                            }
                        }
                        let mut k = choices.len();
                        loop {
                            if k == 0 {
                                break;
                            }
                            k -= 1;
                            idx[k] += 1;
                            if idx[k] < choices[k].len() {
                                break;
                            }
                            idx[k] = 0;
                            if k == 0 {
                                k = usize::MAX;
                                break;
                            }
                        }
                        if k == usize::MAX || choices.is_empty() {
                            break;
                        }
                    }
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// All expanded paths lifting the Γ-path `path` from local vertex `p`
    /// to local vertex `q`, with a connector at each intermediate vertex.
    fn thread(&self, path: &Path, p: &str, q: &str, connectors: &BTreeMap<String, Connectors>) -> Vec<Path> {
        let arrows = path.arrows();
        let mut partial: Vec<(Vec<String>, String)> = vec![(Vec::new(), p.to_string())];
        for (j, id) in arrows.iter().enumerate() {
            let arrow = self.gamma.arrow(id).expect("validated path");
            let from_v = &arrow.source;
            let to_v = &arrow.target;
            let last = j + 1 == arrows.len();
            let mut next = Vec::new();
            for (prefix, cur) in &partial {
                let from = self.expanded_vertex(from_v, cur);
                if last {
                    let mut seq = prefix.clone();
                    seq.push(Self::expanded_copy_arrow(id, &from, &self.expanded_vertex(to_v, q)));
                    next.push((seq, q.to_string()));
                    continue;
                }
                for ((a, b), paths) in &connectors[to_v] {
                    for gamma in paths {
                        let mut seq = prefix.clone();
                        seq.push(Self::expanded_copy_arrow(id, &from, &self.expanded_vertex(to_v, a)));
                        seq.extend(self.lift_local(to_v, gamma).arrows().iter().cloned());
                        next.push((seq, b.clone()));
                    }
                }
            }
            partial = next;
        }
        partial.into_iter().map(|(seq, _)| Path::Arrows(seq)).collect()
    }

    /// The presentation `kQ/(R)`: the expanded quiver bound by the copied
    /// vertex relations and `R(I)`. The result is checked to be admissible.
    pub fn expand(&self, limits: &Limits) -> Result<ExpandedPresentation> {
        self.check_valid(limits)?;
        let mut ex = self.expanded_quiver()?;
        let mut internal = BTreeSet::new();
        for (v, va) in &self.family {
            for r in va.algebra.relations() {
                let lifted = LinComb::from_terms(r.terms().map(|(p, c)| (c.clone(), self.lift_local(v, p))));
                internal.insert(lifted.canonical());
            }
        }
        let induced = self.induced_relations(limits)?;
        let quiver = ex.algebra.quiver().clone();
        let algebra = BoundPathAlgebra::new(quiver, internal.iter().cloned().chain(induced.iter().cloned()))?;
        match algebra.check_admissible(limits)? {
            Admissibility::Admissible(_) => {}
            other => return Err(Error::Internal(format!("expanded presentation is not admissible: {other:?}"))),
        }
        ex.algebra = algebra;
        ex.internal_relations = internal.into_iter().collect();
        ex.induced_relations = induced;
        Ok(ex)
    }

    /// Relabels Γ along vertex and arrow maps, keeping the family attached
    /// to the renamed vertices.
    pub fn relabel_gamma(
        &self,
        vertices: &BTreeMap<String, String>,
        arrows: &BTreeMap<String, String>,
    ) -> Result<GbpAlgebra> {
        let gamma = self.gamma.relabel(vertices, arrows)?;
        let family = self
            .family
            .iter()
            .map(|(v, va)| {
                let w = vertices.get(v).ok_or_else(|| Error::InvalidQuiver(format!("no image for vertex {v}")))?;
                Ok((w.clone(), va.clone()))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        let rels = self.relations.iter().map(|r| r.relabel(vertices, arrows)).collect::<Result<Vec<_>>>()?;
        GbpAlgebra::new(gamma, family, rels)
    }
}

/// Γ a single vertex carrying the whole algebra.
pub fn trivial_gbp_single(a: &BoundPathAlgebra) -> GbpAlgebra {
    let gamma = Quiver::from_triples(["pt"], &[]).expect("valid");
    let family = BTreeMap::from([("pt".to_string(), VertexAlgebra::new("A", a.clone()))]);
    GbpAlgebra::new(gamma, family, []).expect("no relations")
}

/// Γ the quiver of `a`, every vertex carrying `k`, and `I` the relations of
/// `a`. Requires an acyclic quiver.
pub fn trivial_gbp_gabriel(a: &BoundPathAlgebra) -> Result<GbpAlgebra> {
    if !a.quiver().is_acyclic() {
        return Err(Error::Precondition("the quiver of a must be acyclic".into()));
    }
    let family = a.quiver().vertices().map(|v| (v.to_string(), VertexAlgebra::k())).collect();
    GbpAlgebra::new(a.quiver().clone(), family, a.relations().iter().cloned())
}

/// Whether two presentations are related by a quiver isomorphism carrying
/// one ideal onto the other.
pub fn presentations_isomorphic(a: &BoundPathAlgebra, b: &BoundPathAlgebra, limits: &Limits) -> Result<bool> {
    for_each_isomorphism(a.quiver(), b.quiver(), limits, |iso| {
        let moved = a.relabel(&iso.vertices, &iso.arrows)?;
        ideals_equal(&moved, b, limits)
    })
}

/// Equivalence of simplifications, decided at presentation level: a quiver
/// isomorphism `φ: Γ_g → Γ_h` such that each vertex algebra of `g` is
/// isomorphic (by relabelling) to the one at its image, and `I_g` moved
/// along `φ` generates the same ideal as `I_h`.
///
/// This is a sufficient condition for equivalence; algebra isomorphisms not
/// induced by relabelling are not searched for.
pub fn gbp_equivalent(g: &GbpAlgebra, h: &GbpAlgebra, limits: &Limits) -> Result<bool> {
    g.check_valid(limits)?;
    h.check_valid(limits)?;
    let target = BoundPathAlgebra::new(h.gamma.clone(), h.relations.iter().cloned())?;
    let mut family_cache: HashMap<(String, String), bool> = HashMap::new();
    for_each_isomorphism(&g.gamma, &h.gamma, limits, |phi| {
        for (v, w) in &phi.vertices {
            let key = (v.clone(), w.clone());
            let ok = match family_cache.get(&key) {
                Some(ok) => *ok,
                None => {
                    let ok = presentations_isomorphic(&g.family[v].algebra, &h.family[w].algebra, limits)?;
                    family_cache.insert(key, ok);
                    ok
                }
            };
            if !ok {
                return Ok(false);
            }
        }
        let moved = g.relations.iter().map(|r| r.relabel(&phi.vertices, &phi.arrows)).collect::<Result<Vec<_>>>()?;
        let moved = BoundPathAlgebra::new(h.gamma.clone(), moved)?;
        ideals_equal(&moved, &target, limits)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::int;

    fn p(arrows: &[&str]) -> Path {
        Path::Arrows(arrows.iter().map(|s| s.to_string()).collect())
    }

    fn mono(arrows: &[&str]) -> LinComb {
        LinComb::path(p(arrows))
    }

    /// Γ: 1 →α 2 ⇉(β, γ) 3 with A₂ = kΣ₂/(δε), Σ₂ the chain 1 →δ 2 →ε 3,
    /// and I = {αβ}.
    fn lambda() -> GbpAlgebra {
        let gamma =
            Quiver::from_triples(["1", "2", "3"], &[("alpha", "1", "2"), ("beta", "2", "3"), ("gamma", "2", "3")])
                .unwrap();
        let sigma = Quiver::from_triples(["1", "2", "3"], &[("delta", "1", "2"), ("epsilon", "2", "3")]).unwrap();
        let a2 = BoundPathAlgebra::new(sigma, [mono(&["delta", "epsilon"])]).unwrap();
        let family = BTreeMap::from([
            ("1".to_string(), VertexAlgebra::k()),
            ("2".to_string(), VertexAlgebra::new("S2", a2)),
            ("3".to_string(), VertexAlgebra::k()),
        ]);
        GbpAlgebra::new(gamma, family, [mono(&["alpha", "beta"])]).unwrap()
    }

    #[test]
    fn validates_example() {
        assert!(lambda().validate(&Limits::default()).is_empty());
    }

    #[test]
    fn cyclic_gamma_is_rejected() {
        let gamma = Quiver::from_triples(["1"], &[("x", "1", "1")]).unwrap();
        let family = BTreeMap::from([("1".to_string(), VertexAlgebra::k())]);
        let g = GbpAlgebra::new(gamma, family, []).unwrap();
        assert!(g.validate(&Limits::default()).contains(&"gamma not acyclic".to_string()));
    }

    #[test]
    fn arrow_in_i_is_not_a_relation() {
        let mut g = lambda();
        g.relations.push(mono(&["alpha"]));
        let diags = g.validate(&Limits::default());
        assert_eq!(diags, vec!["not a relation: alpha".to_string()]);
    }

    #[test]
    fn missing_and_inadmissible_vertex_algebras() {
        let l = Limits { nmax: 4, ..Limits::default() };
        let gamma = Quiver::from_triples(["1", "2"], &[("a", "1", "2")]).unwrap();
        let loopy = BoundPathAlgebra::free(Quiver::from_triples(["v"], &[("x", "v", "v")]).unwrap());
        let family = BTreeMap::from([("1".to_string(), VertexAlgebra::new("L", loopy))]);
        let g = GbpAlgebra::new(gamma, family, []).unwrap();
        let diags = g.validate(&l);
        assert!(diags.iter().any(|d| d == "vertex 2 has no algebra"));
        assert!(diags.iter().any(|d| d.contains("inconclusive")));
    }

    #[test]
    fn expanded_quiver_of_example() {
        let ex = lambda().expanded_quiver().unwrap();
        let q = ex.algebra.quiver();
        let vs: Vec<&str> = q.vertices().collect();
        assert_eq!(vs, ["1", "2.1", "2.2", "2.3", "3"]);
        assert_eq!(q.arrow_count(), 11);
        assert_eq!(q.count_between("1", "2.2"), 1);
        assert_eq!(q.count_between("2.3", "3"), 2);
        assert_eq!(
            ex.arrow_origin["alpha__1__2.3"],
            ArrowOrigin::Copy { gamma_arrow: "alpha".into(), local_source: "e".into(), local_target: "3".into() }
        );
    }

    #[test]
    fn induced_relations_of_example() {
        let got = lambda().induced_relations(&Limits::default()).unwrap();
        let want: BTreeSet<LinComb> = [
            &["alpha__1__2.1", "beta__2.1__3"][..],
            &["alpha__1__2.1", "2.delta", "beta__2.2__3"],
            &["alpha__1__2.1", "2.delta", "2.epsilon", "beta__2.3__3"],
            &["alpha__1__2.2", "beta__2.2__3"],
            &["alpha__1__2.2", "2.epsilon", "beta__2.3__3"],
            &["alpha__1__2.3", "beta__2.3__3"],
        ]
        .into_iter()
        .map(mono)
        .collect();
        assert_eq!(got.into_iter().collect::<BTreeSet<_>>(), want);
    }

    #[test]
    fn empty_i_induces_nothing() {
        let mut g = lambda();
        g.relations.clear();
        assert!(g.induced_relations(&Limits::default()).unwrap().is_empty());
    }

    #[test]
    fn expansion_is_admissible_with_internal_relation() {
        let ex = lambda().expand(&Limits::default()).unwrap();
        assert_eq!(ex.internal_relations, vec![mono(&["2.delta", "2.epsilon"])]);
        assert_eq!(ex.algebra.relations().len(), 7);
    }

    #[test]
    fn multi_term_relations_thread_every_term() {
        // Γ: 1 →a 2 →b 4, 1 →c 3 →d 4 with I = {ab - cd}; Σ₂ is A₂
        let gamma = Quiver::from_triples(
            ["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let a2 = BoundPathAlgebra::free(Quiver::from_triples(["x", "y"], &[("t", "x", "y")]).unwrap());
        let family = BTreeMap::from([
            ("1".to_string(), VertexAlgebra::k()),
            ("2".to_string(), VertexAlgebra::new("A2", a2)),
            ("3".to_string(), VertexAlgebra::k()),
            ("4".to_string(), VertexAlgebra::k()),
        ]);
        let rel = mono(&["a", "b"]).minus(&mono(&["c", "d"]));
        let g = GbpAlgebra::new(gamma, family, [rel]).unwrap();
        let induced = g.induced_relations(&Limits::default()).unwrap();
        // connectors in Σ₂: e_x, e_y, t
        assert_eq!(induced.len(), 3);
        for r in &induced {
            assert_eq!(r.len(), 2);
            let c = r.coefficient(&p(&["c__1__3", "d__3__4"]));
            assert!(c == int(-1) || c == int(1));
        }
    }

    #[test]
    fn trivial_constructions() {
        let l = Limits::default();
        let q = Quiver::from_triples(["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = BoundPathAlgebra::free(q);
        let single = trivial_gbp_single(&a);
        assert_eq!(single.gamma().vertex_count(), 1);
        let gab = trivial_gbp_gabriel(&a).unwrap();
        assert_eq!(gab.gamma().vertex_count(), 2);
        assert!(gab.family().values().all(|va| va.label == "k"));
        assert!(!gbp_equivalent(&single, &gab, &l).unwrap());
        assert!(gbp_equivalent(&single, &single, &l).unwrap());
        let loopy =
            BoundPathAlgebra::new(Quiver::from_triples(["v"], &[("x", "v", "v")]).unwrap(), [mono(&["x", "x"])])
                .unwrap();
        assert!(trivial_gbp_gabriel(&loopy).is_err());
    }

    #[test]
    fn renamed_copy_is_equivalent() {
        let l = Limits::default();
        let g = lambda();
        let vmap: BTreeMap<String, String> =
            [("1", "x"), ("2", "y"), ("3", "z")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let amap: BTreeMap<String, String> = [("alpha", "A"), ("beta", "B"), ("gamma", "C")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        let h = g.relabel_gamma(&vmap, &amap).unwrap();
        assert!(gbp_equivalent(&g, &h, &l).unwrap());
        assert!(gbp_equivalent(&h, &g, &l).unwrap());
        // αγ instead of αβ is equivalent too: β and γ are parallel
        let mut swapped = g.clone();
        swapped.relations = vec![mono(&["alpha", "gamma"])];
        assert!(gbp_equivalent(&g, &swapped, &l).unwrap());
        // but dropping the relation is not
        let mut free = g.clone();
        free.relations.clear();
        assert!(!gbp_equivalent(&g, &free, &l).unwrap());
    }
}
