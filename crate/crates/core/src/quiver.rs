//! Finite quivers, paths, and the quotient/reduced constructions driven by a
//! vertex partition.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::VertexPartition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub id: String,
    pub source: String,
    pub target: String,
}

impl Arrow {
    pub fn new(id: impl Into<String>, source: impl Into<String>, target: impl Into<String>) -> Self {
        Arrow { id: id.into(), source: source.into(), target: target.into() }
    }

    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// A finite directed multigraph with string-named vertices and arrows.
///
/// Vertices and arrows are kept in lexicographic order of their ids, which
/// makes every derived construction deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: BTreeSet<String>,
    arrows: BTreeMap<String, Arrow>,
}

/// A path in a quiver: either the trivial path `ε_v` at a vertex or a
/// nonempty sequence of composable arrows.
///
/// Paths order first by length, then lexicographically (vertex id for
/// trivial paths, arrow-id sequence otherwise).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Path {
    Trivial(String),
    Arrows(Vec<String>),
}

impl Path {
    pub fn trivial(v: impl Into<String>) -> Self {
        Path::Trivial(v.into())
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        match self {
            Path::Trivial(_) => 0,
            Path::Arrows(a) => a.len(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Path::Trivial(_))
    }

    pub fn arrows(&self) -> &[String] {
        match self {
            Path::Trivial(_) => &[],
            Path::Arrows(a) => a,
        }
    }

    /// Renames vertices and arrows. Missing keys are an error.
    pub fn relabel(&self, vertices: &BTreeMap<String, String>, arrows: &BTreeMap<String, String>) -> Result<Path> {
        match self {
            Path::Trivial(v) => vertices
                .get(v)
                .map(|w| Path::Trivial(w.clone()))
                .ok_or_else(|| Error::InvalidPath(format!("no image for vertex {v}"))),
            Path::Arrows(a) => a
                .iter()
                .map(|x| arrows.get(x).cloned().ok_or_else(|| Error::InvalidPath(format!("no image for arrow {x}"))))
                .collect::<Result<Vec<_>>>()
                .map(Path::Arrows),
        }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| match (self, other) {
            (Path::Trivial(a), Path::Trivial(b)) => a.cmp(b),
            (Path::Arrows(a), Path::Arrows(b)) => a.cmp(b),
            // unreachable once lengths agree
            (Path::Trivial(_), Path::Arrows(_)) => Ordering::Less,
            (Path::Arrows(_), Path::Trivial(_)) => Ordering::Greater,
        })
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Path::Trivial(v) => write!(f, "e_{v}"),
            Path::Arrows(a) => write!(f, "{}", a.join("*")),
        }
    }
}

impl Quiver {
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = Arrow>,
    {
        let mut vs = BTreeSet::new();
        for v in vertices {
            let v = v.into();
            if !vs.insert(v.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v}")));
            }
        }
        let mut arrs = BTreeMap::new();
        for a in arrows {
            for end in [&a.source, &a.target] {
                if !vs.contains(end) {
                    return Err(Error::InvalidQuiver(format!("arrow {} uses undeclared vertex {end}", a.id)));
                }
            }
            if arrs.contains_key(&a.id) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {}", a.id)));
            }
            arrs.insert(a.id.clone(), a);
        }
        Ok(Quiver { vertices: vs, arrows: arrs })
    }

    /// Convenience constructor from `(id, source, target)` triples.
    pub fn from_triples<V, S>(vertices: V, arrows: &[(&str, &str, &str)]) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Quiver::new(vertices, arrows.iter().map(|(a, s, t)| Arrow::new(*a, *s, *t)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.vertices.iter().map(String::as_str)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn arrows(&self) -> impl Iterator<Item = &Arrow> + '_ {
        self.arrows.values()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, id: &str) -> Option<&Arrow> {
        self.arrows.get(id)
    }

    /// `Q(x, y)`: the arrows from `x` to `y`, sorted by id.
    pub fn arrows_between<'a>(&'a self, x: &'a str, y: &'a str) -> impl Iterator<Item = &'a Arrow> + 'a {
        self.arrows.values().filter(move |a| a.source == x && a.target == y)
    }

    /// `[x, y]_Q`: the number of arrows from `x` to `y`.
    pub fn count_between(&self, x: &str, y: &str) -> usize {
        self.arrows_between(x, y).count()
    }

    pub fn out_arrows<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a Arrow> + 'a {
        self.arrows.values().filter(move |a| a.source == v)
    }

    pub fn in_arrows<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a Arrow> + 'a {
        self.arrows.values().filter(move |a| a.target == v)
    }

    /// Builds a composite path from arrow ids, checking that they compose.
    pub fn path<S: AsRef<str>>(&self, arrows: &[S]) -> Result<Path> {
        if arrows.is_empty() {
            return Err(Error::InvalidPath("empty arrow sequence".into()));
        }
        let mut prev: Option<&Arrow> = None;
        for id in arrows {
            let a =
                self.arrow(id.as_ref()).ok_or_else(|| Error::InvalidPath(format!("unknown arrow {}", id.as_ref())))?;
            if let Some(p) = prev {
                if p.target != a.source {
                    return Err(Error::InvalidPath(format!("arrows {} and {} do not compose", p.id, a.id)));
                }
            }
            prev = Some(a);
        }
        Ok(Path::Arrows(arrows.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    pub fn trivial(&self, v: &str) -> Result<Path> {
        if self.has_vertex(v) {
            Ok(Path::Trivial(v.to_string()))
        } else {
            Err(Error::InvalidPath(format!("unknown vertex {v}")))
        }
    }

    /// Checks that `p` is a well-formed path of this quiver.
    pub fn check_path(&self, p: &Path) -> Result<()> {
        match p {
            Path::Trivial(v) => self.trivial(v).map(|_| ()),
            Path::Arrows(a) => self.path(a).map(|_| ()),
        }
    }

    pub fn source<'a>(&'a self, p: &'a Path) -> &'a str {
        match p {
            Path::Trivial(v) => v,
            Path::Arrows(a) => &self.arrows[&a[0]].source,
        }
    }

    pub fn target<'a>(&'a self, p: &'a Path) -> &'a str {
        match p {
            Path::Trivial(v) => v,
            Path::Arrows(a) => &self.arrows[&a[a.len() - 1]].target,
        }
    }

    /// Juxtaposition `p·r` (first `p`, then `r`), or `None` when
    /// `e(p) ≠ s(r)`.
    pub fn compose(&self, p: &Path, r: &Path) -> Option<Path> {
        if self.target(p) != self.source(r) {
            return None;
        }
        Some(match (p, r) {
            (Path::Trivial(_), _) => r.clone(),
            (_, Path::Trivial(_)) => p.clone(),
            (Path::Arrows(a), Path::Arrows(b)) => {
                let mut v = a.clone();
                v.extend(b.iter().cloned());
                Path::Arrows(v)
            }
        })
    }

    /// Strongly connected component index of every vertex (Tarjan).
    pub fn strongly_connected_components(&self) -> BTreeMap<String, usize> {
        struct State<'q> {
            q: &'q Quiver,
            index: BTreeMap<&'q str, usize>,
            low: BTreeMap<&'q str, usize>,
            on_stack: BTreeSet<&'q str>,
            stack: Vec<&'q str>,
            next: usize,
            comp: BTreeMap<String, usize>,
            ncomp: usize,
        }
        fn visit<'q>(st: &mut State<'q>, v: &'q str) {
            st.index.insert(v, st.next);
            st.low.insert(v, st.next);
            st.next += 1;
            st.stack.push(v);
            st.on_stack.insert(v);
            let q = st.q;
            for a in q.out_arrows(v) {
                let w = a.target.as_str();
                if !st.index.contains_key(w) {
                    visit(st, w);
                    let lw = st.low[w];
                    let lv = st.low.get_mut(v).unwrap();
                    *lv = (*lv).min(lw);
                } else if st.on_stack.contains(w) {
                    let iw = st.index[w];
                    let lv = st.low.get_mut(v).unwrap();
                    *lv = (*lv).min(iw);
                }
            }
            if st.low[v] == st.index[v] {
                loop {
                    let w = st.stack.pop().unwrap();
                    st.on_stack.remove(w);
                    st.comp.insert(w.to_string(), st.ncomp);
                    if w == v {
                        break;
                    }
                }
                st.ncomp += 1;
            }
        }
        let mut st = State {
            q: self,
            index: BTreeMap::new(),
            low: BTreeMap::new(),
            on_stack: BTreeSet::new(),
            stack: Vec::new(),
            next: 0,
            comp: BTreeMap::new(),
            ncomp: 0,
        };
        for v in self.vertices() {
            if !st.index.contains_key(v) {
                visit(&mut st, v);
            }
        }
        st.comp
    }

    /// Arrows lying on some oriented cycle (loops included).
    pub fn cycle_arrows(&self) -> Vec<&Arrow> {
        let scc = self.strongly_connected_components();
        self.arrows().filter(|a| scc[&a.source] == scc[&a.target]).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.cycle_arrows().is_empty()
    }

    /// Length of the longest path, or `None` if the quiver has a cycle.
    pub fn longest_path_len(&self) -> Option<usize> {
        if !self.is_acyclic() {
            return None;
        }
        // longest path ending at v, memoised over the DAG
        fn depth<'q>(q: &'q Quiver, v: &'q str, memo: &mut BTreeMap<&'q str, usize>) -> usize {
            if let Some(&d) = memo.get(v) {
                return d;
            }
            let d = q.in_arrows(v).map(|a| depth(q, &a.source, memo) + 1).max().unwrap_or(0);
            memo.insert(v, d);
            d
        }
        let mut memo = BTreeMap::new();
        Some(self.vertices().map(|v| depth(self, v, &mut memo)).max().unwrap_or(0))
    }

    /// All paths of length at most `max_len`, ordered by length and then
    /// lexicographically. Includes every trivial path.
    pub fn enumerate_paths(&self, max_len: usize) -> Vec<Path> {
        self.enumerate_paths_capped(max_len, usize::MAX).expect("uncapped enumeration cannot fail")
    }

    /// Like [`Quiver::enumerate_paths`] but fails once more than `cap` paths
    /// would be produced.
    pub fn enumerate_paths_capped(&self, max_len: usize, cap: usize) -> Result<Vec<Path>> {
        let mut out: Vec<Path> = self.vertices().map(Path::trivial).collect();
        if out.len() > cap {
            return Err(Error::CapExceeded { what: "path count", cap });
        }
        let mut frontier: Vec<(Vec<String>, &str)> = Vec::new();
        if max_len >= 1 {
            for a in self.arrows() {
                frontier.push((vec![a.id.clone()], &a.target));
            }
        }
        let mut len = 1;
        while !frontier.is_empty() && len <= max_len {
            frontier.sort();
            if out.len() + frontier.len() > cap {
                return Err(Error::CapExceeded { what: "path count", cap });
            }
            out.extend(frontier.iter().map(|(p, _)| Path::Arrows(p.clone())));
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for (p, end) in &frontier {
                for a in self.out_arrows(end) {
                    let mut p2 = p.clone();
                    p2.push(a.id.clone());
                    next.push((p2, a.target.as_str()));
                }
            }
            frontier = next;
            len += 1;
        }
        Ok(out)
    }

    /// The full subquiver on a vertex subset.
    pub fn full_subquiver<'a>(&self, vertices: impl IntoIterator<Item = &'a str>) -> Result<Quiver> {
        let vs: BTreeSet<String> = vertices.into_iter().map(str::to_string).collect();
        for v in &vs {
            if !self.has_vertex(v) {
                return Err(Error::InvalidQuiver(format!("unknown vertex {v}")));
            }
        }
        let arrows =
            self.arrows().filter(|a| vs.contains(&a.source) && vs.contains(&a.target)).cloned().collect::<Vec<_>>();
        Quiver::new(vs, arrows)
    }

    pub fn without_loops(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self.arrows.iter().filter(|(_, a)| !a.is_loop()).map(|(k, a)| (k.clone(), a.clone())).collect(),
        }
    }

    /// `Q^∼`: same vertices, keeping only the arrows whose endpoints lie in
    /// different blocks.
    pub fn reduced_quiver(&self, p: &VertexPartition) -> Result<Quiver> {
        p.check_covers(self)?;
        Ok(Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .filter(|(_, a)| !p.same_block(&a.source, &a.target))
                .map(|(k, a)| (k.clone(), a.clone()))
                .collect(),
        })
    }

    /// The quotient quiver: one vertex per block (named by
    /// [`VertexPartition::block_name`]) and, from block `A` to block `B`,
    /// `max_{x∈A, y∈B} [x, y]` arrows named `A__B__k`.
    pub fn quotient_quiver(&self, p: &VertexPartition) -> Result<Quiver> {
        p.check_covers(self)?;
        let names: Vec<String> = (0..p.block_count()).map(|i| p.block_name(i)).collect();
        let mut arrows = Vec::new();
        for (i, bi) in p.blocks().iter().enumerate() {
            for (j, bj) in p.blocks().iter().enumerate() {
                let mut count = 0;
                for x in bi {
                    for y in bj {
                        count = count.max(self.count_between(x, y));
                    }
                }
                for k in 0..count {
                    arrows.push(Arrow::new(
                        format!("{}__{}__{}", names[i], names[j], k),
                        names[i].clone(),
                        names[j].clone(),
                    ));
                }
            }
        }
        Quiver::new(names, arrows)
    }

    /// Applies vertex and arrow renamings; both maps must be total.
    pub fn relabel(&self, vertices: &BTreeMap<String, String>, arrows: &BTreeMap<String, String>) -> Result<Quiver> {
        let vmap = |v: &String| {
            vertices.get(v).cloned().ok_or_else(|| Error::InvalidQuiver(format!("no image for vertex {v}")))
        };
        let vs = self.vertices.iter().map(vmap).collect::<Result<Vec<_>>>()?;
        let arrs = self
            .arrows()
            .map(|a| {
                let id = arrows
                    .get(&a.id)
                    .cloned()
                    .ok_or_else(|| Error::InvalidQuiver(format!("no image for arrow {}", a.id)))?;
                Ok(Arrow::new(id, vmap(&a.source)?, vmap(&a.target)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Quiver::new(vs, arrs)
    }
}
