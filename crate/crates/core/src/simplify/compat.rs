//! Compatibility of a relation set with a partition and a labelling.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{Admissibility, BoundPathAlgebra, Connectors, Limits, TruncatedIdeal};
use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Scalar};
use crate::partition::VertexPartition;
use crate::quiver::{Path, Quiver};

use super::{classify_relation, decompose_path, violation, Check, Labelling, RelationClass};

/// How the closure clause is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClosureMode {
    /// Every rerouted combination lies in the ideal `(R)`.
    #[default]
    Ideal,
    /// Every rerouted combination is, up to a scalar, an element of `R`.
    /// Needs acyclic blocks so that the rerouted paths are finite in number.
    StrictSet,
}

fn path_vertices<'a>(q: &'a Quiver, p: &'a Path) -> impl Iterator<Item = &'a str> + 'a {
    std::iter::once(q.source(p)).chain(p.arrows().iter().map(|a| q.arrow(a).expect("valid path").target.as_str()))
}

/// `kΣ/(Ω)` for a block: its full subquiver bound by the relations of `a`
/// involving only its vertices.
pub fn block_algebra(a: &BoundPathAlgebra, block: &BTreeSet<String>) -> Result<BoundPathAlgebra> {
    let q = a.quiver();
    let sigma = q.full_subquiver(block.iter().map(String::as_str))?;
    let rels =
        a.relations().iter().filter(|r| r.paths().all(|p| path_vertices(q, p).all(|v| block.contains(v)))).cloned();
    BoundPathAlgebra::new(sigma, rels)
}

/// Checks the three compatibility clauses for the relations of `a`.
pub fn is_compatible(
    a: &BoundPathAlgebra,
    p: &VertexPartition,
    z: &Labelling,
    mode: ClosureMode,
    limits: &Limits,
) -> Result<Check> {
    let ideal = match mode {
        ClosureMode::Ideal => Some(a.ideal(limits)?),
        ClosureMode::StrictSet => None,
    };
    compatible_with(a, p, z, mode, ideal.as_ref(), limits)
}

pub(crate) fn compatible_with(
    a: &BoundPathAlgebra,
    p: &VertexPartition,
    z: &Labelling,
    mode: ClosureMode,
    ideal: Option<&TruncatedIdeal>,
    limits: &Limits,
) -> Result<Check> {
    let q = a.quiver();
    let mut external = Vec::new();
    for r in a.relations() {
        match classify_relation(q, r, p, z)? {
            RelationClass::Internal => {}
            RelationClass::External => external.push(r),
            RelationClass::Neither => {
                return Ok(violation(1, format!("{r} is neither internal nor external")));
            }
        }
    }

    let mut connectors: BTreeMap<String, Connectors> = BTreeMap::new();
    for (i, block) in p.blocks().iter().enumerate() {
        let alg = block_algebra(a, block)?;
        let n = match alg.check_admissible(limits)? {
            Admissibility::Admissible(n) => n,
            Admissibility::NotAdmissible(why) => {
                return Ok(violation(2, format!("block {}: {why}", p.block_name(i))));
            }
            Admissibility::Inconclusive => {
                return Ok(violation(
                    2,
                    format!("block {}: no nilpotency witness up to n = {}", p.block_name(i), limits.nmax),
                ));
            }
        };
        if mode == ClosureMode::StrictSet && !alg.quiver().is_acyclic() {
            return Err(Error::Precondition(format!(
                "strict closure needs acyclic blocks, block {} has a cycle",
                p.block_name(i)
            )));
        }
        connectors.insert(p.block_name(i), alg.connectors(n, limits)?);
    }

    let lifts = Lifts::new(q, p, z, &connectors);
    let members: BTreeSet<LinComb> = a.relations().iter().cloned().collect();
    for r in external {
        let terms: Vec<(&Path, &Scalar)> = r.terms().collect();
        let words =
            terms.iter().map(|(t, _)| Ok(decompose_path(q, t, p, z)?.induced_path)).collect::<Result<Vec<_>>>()?;
        let probe = terms[0].0;
        let start = p.block_index(q.source(probe)).expect("covered");
        let end = p.block_index(q.target(probe)).expect("covered");
        for x in &p.blocks()[start] {
            for y in &p.blocks()[end] {
                let choices = words
                    .iter()
                    .map(|w| lifts.straightforward(x, y, w.arrows(), limits))
                    .collect::<Result<Vec<_>>>()?;
                if choices.iter().any(Vec::is_empty) {
                    continue;
                }
                let coeffs: Vec<&Scalar> = terms.iter().map(|(_, c)| *c).collect();
                let found = match mode {
                    ClosureMode::Ideal => {
                        closed_in_ideal(&coeffs, &choices, ideal.expect("ideal mode carries the ideal"))?
                    }
                    ClosureMode::StrictSet => closed_in_set(&coeffs, &choices, &members, limits)?,
                };
                if let Some(witness) = found {
                    return Ok(violation(3, format!("rerouting {r} gives {witness}, which is not in R")));
                }
            }
        }
    }
    Ok(Ok(()))
}

/// All families are in `(R)` iff one base family is and every single-term
/// swap changes it by an element of `(R)`.
fn closed_in_ideal(coeffs: &[&Scalar], choices: &[Vec<Path>], ideal: &TruncatedIdeal) -> Result<Option<LinComb>> {
    let base = LinComb::from_terms(coeffs.iter().zip(choices).map(|(c, ch)| ((*c).clone(), ch[0].clone())));
    if !ideal.contains(&base)? {
        return Ok(Some(base));
    }
    for (t, ch) in choices.iter().enumerate() {
        for alt in &ch[1..] {
            let diff =
                LinComb::term(coeffs[t].clone(), alt.clone()).minus(&LinComb::term(coeffs[t].clone(), ch[0].clone()));
            if !ideal.contains(&diff)? {
                let mut witness = base.clone();
                witness.add_term(coeffs[t].clone(), alt.clone());
                witness.add_term(-coeffs[t].clone(), ch[0].clone());
                return Ok(Some(witness));
            }
        }
    }
    Ok(None)
}

fn closed_in_set(
    coeffs: &[&Scalar],
    choices: &[Vec<Path>],
    members: &BTreeSet<LinComb>,
    limits: &Limits,
) -> Result<Option<LinComb>> {
    let total = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
    if !total.is_some_and(|t| t <= limits.generator_cap) {
        return Err(Error::CapExceeded { what: "rerouted families", cap: limits.generator_cap });
    }
    let mut idx = vec![0usize; choices.len()];
    loop {
        let lc = LinComb::from_terms(
            coeffs.iter().zip(&idx).zip(choices).map(|((c, &i), ch)| ((*c).clone(), ch[i].clone())),
        );
        if !members.contains(&lc.canonical()) {
            return Ok(Some(lc));
        }
        let mut k = choices.len();
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Straightforward paths with a prescribed induced path.
struct Lifts<'a> {
    q: &'a Quiver,
    p: &'a VertexPartition,
    preimages: BTreeMap<&'a str, Vec<&'a str>>,
    connectors: &'a BTreeMap<String, Connectors>,
}

impl<'a> Lifts<'a> {
    fn new(
        q: &'a Quiver,
        p: &'a VertexPartition,
        z: &'a Labelling,
        connectors: &'a BTreeMap<String, Connectors>,
    ) -> Self {
        Lifts { q, p, preimages: z.preimages(), connectors }
    }

    /// Paths `α₁ δ₁ α₂ … α_m` from `x` to `y` with `z(αᵢ) = word[i]` and each
    /// `δᵢ` a connector of its block.
    fn straightforward(&self, x: &str, y: &str, word: &[String], limits: &Limits) -> Result<Vec<Path>> {
        let mut partial: Vec<(Vec<String>, String)> = vec![(Vec::new(), x.to_string())];
        for (i, l) in word.iter().enumerate() {
            let last = i + 1 == word.len();
            let mut next = Vec::new();
            for (prefix, at) in &partial {
                for id in self.preimages.get(l.as_str()).into_iter().flatten() {
                    let arrow = self.q.arrow(id).expect("labelled arrows exist");
                    if arrow.source != *at {
                        continue;
                    }
                    let mut seq = prefix.clone();
                    seq.push(arrow.id.clone());
                    if last {
                        if arrow.target == y {
                            next.push((seq, y.to_string()));
                        }
                        continue;
                    }
                    let block = self.p.block_name_of(&arrow.target).expect("covered");
                    for ((from, to), paths) in &self.connectors[&block] {
                        if *from != arrow.target {
                            continue;
                        }
                        for delta in paths {
                            let mut s = seq.clone();
                            s.extend(delta.arrows().iter().cloned());
                            next.push((s, to.clone()));
                        }
                    }
                }
            }
            if next.len() > limits.generator_cap {
                return Err(Error::CapExceeded { what: "rerouted paths", cap: limits.generator_cap });
            }
            partial = next;
        }
        Ok(partial.into_iter().map(|(seq, _)| Path::Arrows(seq)).collect())
    }
}
