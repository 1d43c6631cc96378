//! From a compatible partition to a gbp-algebra and back.

use std::collections::BTreeMap;

use crate::algebra::{ideals_equal, BoundPathAlgebra, Limits};
use crate::error::{Error, Result};
use crate::gbp::{ArrowOrigin, ExpandedPresentation, GbpAlgebra, VertexAlgebra};
use crate::lincomb::LinComb;
use crate::partition::VertexPartition;
use crate::quiver::Path;

use super::compat::{block_algebra, is_compatible, ClosureMode};
use super::{classify_relation, induced_relation, is_coherent, Check, Labelling, RelationClass};

fn family_label(alg: &BoundPathAlgebra, block_name: &str) -> String {
    let q = alg.quiver();
    match (q.vertex_count(), q.arrow_count()) {
        (1, 0) => "k".to_string(),
        (c, 0) => format!("k^{c}"),
        _ => format!("A[{block_name}]"),
    }
}

fn require(check: Check, coherence: bool) -> Result<()> {
    check.map_err(|v| if coherence { Error::Incoherent(v.to_string()) } else { Error::Incompatible(v.to_string()) })
}

/// `A(∼)`: Γ is the target of `z`, each block carries its full subquiver
/// bound by its internal relations, and `I` collects `z(γ)` for the external
/// relations `γ`. The result is checked to expand back to `a`.
pub fn build_simplification(
    a: &BoundPathAlgebra,
    p: &VertexPartition,
    z: &Labelling,
    limits: &Limits,
) -> Result<GbpAlgebra> {
    require(is_coherent(a.quiver(), p)?, true)?;
    z.validate(a.quiver(), p)?;
    require(is_compatible(a, p, z, ClosureMode::Ideal, limits)?, false)?;
    let g = assemble(a, p, z)?;
    if !round_trip_holds(a, z, &g, limits)? {
        return Err(Error::Internal(format!("simplification over {p} does not expand back to the input")));
    }
    Ok(g)
}

/// The construction alone, for inputs already known to be coherent and
/// compatible.
pub(crate) fn assemble(a: &BoundPathAlgebra, p: &VertexPartition, z: &Labelling) -> Result<GbpAlgebra> {
    let q = a.quiver();
    let gamma = z.target().clone();
    if !gamma.is_acyclic() {
        return Err(Error::Internal(format!("quotient over {p} has a cycle")));
    }
    let mut family = BTreeMap::new();
    for (i, block) in p.blocks().iter().enumerate() {
        let alg = block_algebra(a, block)?;
        let rep = block.iter().next().expect("blocks are nonempty");
        let label = family_label(&alg, &p.block_name(i));
        family.insert(z.vertex(rep).to_string(), VertexAlgebra::new(label, alg));
    }
    let mut relations = Vec::new();
    for r in a.relations() {
        if classify_relation(q, r, p, z)? == RelationClass::External {
            relations.push(induced_relation(q, r, p, z)?);
        }
    }
    GbpAlgebra::new(gamma, family, relations)
}

/// Renaming of an expansion of `g` back into the vertices and arrows of
/// `a`, through the origin maps and `z⁻¹`.
fn renaming(
    ex: &ExpandedPresentation,
    a: &BoundPathAlgebra,
    z: &Labelling,
) -> Result<(BTreeMap<String, String>, BTreeMap<String, String>)> {
    let vertices: BTreeMap<String, String> =
        ex.vertex_origin.iter().map(|(v, (_, local))| (v.clone(), local.clone())).collect();
    let mut arrows = BTreeMap::new();
    for (id, origin) in &ex.arrow_origin {
        let original = match origin {
            ArrowOrigin::Internal { local_arrow, .. } => local_arrow.clone(),
            ArrowOrigin::Copy { gamma_arrow, local_source, local_target } => a
                .quiver()
                .arrows_between(local_source, local_target)
                .find(|arr| z.arrow(&arr.id) == Some(gamma_arrow.as_str()))
                .map(|arr| arr.id.clone())
                .ok_or_else(|| {
                    Error::Internal(format!("no arrow over {gamma_arrow} from {local_source} to {local_target}"))
                })?,
        };
        arrows.insert(id.clone(), original);
    }
    Ok((vertices, arrows))
}

/// Expands `g`, renames the result into `a`'s names, and compares ideals.
pub fn round_trip_holds(a: &BoundPathAlgebra, z: &Labelling, g: &GbpAlgebra, limits: &Limits) -> Result<bool> {
    let ex = g.expand(limits)?;
    let (vmap, amap) = renaming(&ex, a, z)?;
    let back = ex.algebra.relabel(&vmap, &amap)?;
    if back.quiver() != a.quiver() {
        return Ok(false);
    }
    ideals_equal(&back, a, limits)
}

/// The data recovered from a gbp-algebra: its expansion `kQ/(R′)`, the
/// partition of `Q₀` by Γ-vertex, and the labelling sending each arrow copy
/// to its Γ-arrow.
#[derive(Clone, Debug)]
pub struct Recovered {
    pub presentation: BoundPathAlgebra,
    pub partition: VertexPartition,
    pub labelling: Labelling,
    pub expansion: ExpandedPresentation,
}

/// The reverse direction: partition and labelling on the expanded quiver,
/// with `R′ = Ω₁ ⊔ … ⊔ Ωₙ ⊔ R(I)`. Coherence and compatibility of the
/// output are checked.
pub fn partition_from_gbp(g: &GbpAlgebra, limits: &Limits) -> Result<Recovered> {
    let ex = g.expand(limits)?;
    let q = ex.algebra.quiver();
    let mut blocks: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (v, (gv, _)) in &ex.vertex_origin {
        blocks.entry(gv.as_str()).or_default().push(v.as_str());
    }
    let partition = VertexPartition::new(blocks.values().cloned())?;
    let vertex_map = ex.vertex_origin.iter().map(|(v, (gv, _))| (v.clone(), gv.clone())).collect();
    let arrow_map = ex
        .arrow_origin
        .iter()
        .filter_map(|(id, o)| match o {
            ArrowOrigin::Copy { gamma_arrow, .. } => Some((id.clone(), gamma_arrow.clone())),
            ArrowOrigin::Internal { .. } => None,
        })
        .collect();
    let labelling = Labelling::new(q, &partition, g.gamma().clone(), vertex_map, arrow_map)?;
    if let Err(v) = is_coherent(q, &partition)? {
        return Err(Error::Internal(format!("recovered partition is not coherent: {v}")));
    }
    if let Err(v) = is_compatible(&ex.algebra, &partition, &labelling, ClosureMode::Ideal, limits)? {
        return Err(Error::Internal(format!("recovered relations are not compatible: {v}")));
    }
    Ok(Recovered { presentation: ex.algebra.clone(), partition, labelling, expansion: ex })
}

/// Every cycle is a loop and every relation only uses loops: Γ is the
/// quiver without its loops, and vertex `i` carries the algebra of its
/// loops bound by the relations at `i`.
pub fn loop_simplification(a: &BoundPathAlgebra, limits: &Limits) -> Result<GbpAlgebra> {
    let q = a.quiver();
    if let Some(arr) = q.cycle_arrows().into_iter().find(|arr| !arr.is_loop()) {
        return Err(Error::Precondition(format!("arrow {} lies on a cycle that is not a loop", arr.id)));
    }
    for r in a.relations() {
        let non_loop = r.paths().flat_map(Path::arrows).find(|id| !q.arrow(id).expect("valid").is_loop());
        if let Some(id) = non_loop {
            return Err(Error::Precondition(format!("relation {r} uses the non-loop arrow {id}")));
        }
    }
    let gamma = q.without_loops();
    let mut family = BTreeMap::new();
    for v in q.vertices() {
        let block = [v.to_string()].into_iter().collect();
        let alg = block_algebra(a, &block)?;
        family.insert(v.to_string(), VertexAlgebra::new(family_label(&alg, v), alg));
    }
    let g = GbpAlgebra::new(gamma, family, Vec::<LinComb>::new())?;
    g.check_valid(limits)?;
    Ok(g)
}
