//! Brute-force quiver isomorphism for small quivers.
//!
//! Vertices are matched by backtracking with degree-signature pruning; once a
//! vertex bijection preserves every `[x, y]` count, each class of parallel
//! arrows is matched by all bijections between the two sorted classes.

use std::collections::BTreeMap;

use crate::algebra::Limits;
use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// A structure-preserving pair of bijections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverIso {
    pub vertices: BTreeMap<String, String>,
    pub arrows: BTreeMap<String, String>,
}

/// Advances `v` to the next lexicographic permutation; false at the last.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn signature(q: &Quiver, v: &str) -> (usize, usize, usize) {
    let loops = q.count_between(v, v);
    (q.out_arrows(v).count(), q.in_arrows(v).count(), loops)
}

/// Calls `visit` on isomorphisms `a → b` until it returns `true`.
/// Returns whether some call returned `true`.
pub fn for_each_isomorphism(
    a: &Quiver,
    b: &Quiver,
    limits: &Limits,
    mut visit: impl FnMut(&QuiverIso) -> Result<bool>,
) -> Result<bool> {
    let cap = limits.vertex_cap;
    if a.vertex_count() > cap || b.vertex_count() > cap {
        return Err(Error::CapExceeded { what: "quiver vertex count", cap });
    }
    if a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count() {
        return Ok(false);
    }
    let mut sig_a: Vec<_> = a.vertices().map(|v| signature(a, v)).collect();
    let mut sig_b: Vec<_> = b.vertices().map(|v| signature(b, v)).collect();
    sig_a.sort();
    sig_b.sort();
    if sig_a != sig_b {
        return Ok(false);
    }

    let av: Vec<&str> = a.vertices().collect();
    let bv: Vec<&str> = b.vertices().collect();
    let mut state =
        Search { a, b, av, bv, image: Vec::new(), used: vec![false; b.vertex_count()], tried: 0, cap: limits.iso_cap };
    state.extend(&mut visit)
}

struct Search<'q> {
    a: &'q Quiver,
    b: &'q Quiver,
    av: Vec<&'q str>,
    bv: Vec<&'q str>,
    image: Vec<usize>,
    used: Vec<bool>,
    tried: usize,
    cap: usize,
}

impl<'q> Search<'q> {
    fn consistent(&self, i: usize, j: usize) -> bool {
        let (x, fx) = (self.av[i], self.bv[j]);
        if signature(self.a, x) != signature(self.b, fx) {
            return false;
        }
        self.image.iter().enumerate().all(|(k, &m)| {
            let (y, fy) = (self.av[k], self.bv[m]);
            self.a.count_between(x, y) == self.b.count_between(fx, fy)
                && self.a.count_between(y, x) == self.b.count_between(fy, fx)
        })
    }

    fn extend(&mut self, visit: &mut impl FnMut(&QuiverIso) -> Result<bool>) -> Result<bool> {
        let i = self.image.len();
        if i == self.av.len() {
            return self.arrow_bijections(visit);
        }
        for j in 0..self.bv.len() {
            if self.used[j] || !self.consistent(i, j) {
                continue;
            }
            self.used[j] = true;
            self.image.push(j);
            let stop = self.extend(visit)?;
            self.image.pop();
            self.used[j] = false;
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn arrow_bijections(&mut self, visit: &mut impl FnMut(&QuiverIso) -> Result<bool>) -> Result<bool> {
        let vertices: BTreeMap<String, String> =
            self.image.iter().enumerate().map(|(i, &j)| (self.av[i].to_string(), self.bv[j].to_string())).collect();
        // one class per ordered vertex pair carrying arrows
        let mut classes: Vec<(Vec<String>, Vec<String>)> = Vec::new();
        for x in &self.av {
            for y in &self.av {
                let src: Vec<String> = self.a.arrows_between(x, y).map(|a| a.id.clone()).collect();
                if src.is_empty() {
                    continue;
                }
                let dst: Vec<String> =
                    self.b.arrows_between(&vertices[*x], &vertices[*y]).map(|a| a.id.clone()).collect();
                classes.push((src, dst));
            }
        }
        let mut perms: Vec<Vec<usize>> = classes.iter().map(|(s, _)| (0..s.len()).collect()).collect();
        loop {
            self.tried += 1;
            if self.tried > self.cap {
                return Err(Error::CapExceeded { what: "isomorphism candidates", cap: self.cap });
            }
            let mut arrows = BTreeMap::new();
            for ((src, dst), perm) in classes.iter().zip(&perms) {
                for (k, s) in src.iter().enumerate() {
                    arrows.insert(s.clone(), dst[perm[k]].clone());
                }
            }
            if visit(&QuiverIso { vertices: vertices.clone(), arrows })? {
                return Ok(true);
            }
            // odometer over the per-class permutations, last class fastest
            let mut advanced = false;
            for perm in perms.iter_mut().rev() {
                if next_permutation(perm) {
                    advanced = true;
                    break;
                }
                perm.sort_unstable();
            }
            if !advanced {
                return Ok(false);
            }
        }
    }
}

/// A witness isomorphism `a → b`, if any.
pub fn quiver_isomorphic(a: &Quiver, b: &Quiver, limits: &Limits) -> Result<Option<QuiverIso>> {
    let mut found = None;
    for_each_isomorphism(a, b, limits, |iso| {
        found = Some(iso.clone());
        Ok(true)
    })?;
    Ok(found)
}
