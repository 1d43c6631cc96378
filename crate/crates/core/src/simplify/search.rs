//! Exhaustive search for simplifications over all vertex partitions.

use rayon::prelude::*;

use crate::algebra::{BoundPathAlgebra, Limits, TruncatedIdeal};
use crate::error::{Error, Result};
use crate::gbp::{gbp_equivalent, trivial_gbp_gabriel, trivial_gbp_single, GbpAlgebra};
use crate::partition::{vertex_partitions, VertexPartition};

use super::build::{assemble, round_trip_holds};
use super::compat::{compatible_with, ClosureMode};
use super::{enumerate_labelling_orbits, enumerate_labellings, is_coherent, Labelling};

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub limits: Limits,
    /// Labellings tried per partition.
    pub labelling_cap: usize,
    /// Partitions examined before stopping; `None` means all of them.
    pub partition_cap: Option<usize>,
    pub mode: ClosureMode,
    pub parallel: bool,
    /// Try one labelling per orbit of parallel-arrow permutations.
    pub labelling_orbits: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            limits: Limits::default(),
            labelling_cap: 1024,
            partition_cap: None,
            mode: ClosureMode::Ideal,
            parallel: true,
            labelling_orbits: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub partition: VertexPartition,
    pub labelling: Labelling,
    pub gbp: GbpAlgebra,
    /// Equivalent to one of the two trivial simplifications.
    pub trivial: bool,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub partitions_examined: usize,
    pub coherent_partitions: usize,
    /// In growth-string order of the partitions, canonical labelling first.
    pub results: Vec<SearchResult>,
    pub simplifiable: bool,
    /// False when a cap cut the search short somewhere.
    pub complete: bool,
    pub diagnostics: Vec<String>,
}

struct Context<'a> {
    a: &'a BoundPathAlgebra,
    ideal: Option<TruncatedIdeal>,
    trivial: Vec<GbpAlgebra>,
    opts: &'a SearchOptions,
}

#[derive(Default)]
struct Outcome {
    coherent: bool,
    results: Vec<SearchResult>,
    diagnostics: Vec<String>,
    complete: bool,
}

fn is_cap(e: &Error) -> bool {
    matches!(e, Error::CapExceeded { .. } | Error::Inconclusive { .. })
}

impl Context<'_> {
    fn evaluate(&self, p: &VertexPartition) -> Result<Outcome> {
        let mut out = Outcome { complete: true, ..Outcome::default() };
        let q = self.a.quiver();
        if is_coherent(q, p)?.is_err() {
            return Ok(out);
        }
        out.coherent = true;
        let enumerate = if self.opts.labelling_orbits { enumerate_labelling_orbits } else { enumerate_labellings };
        let (labellings, truncated) = enumerate(q, p, self.opts.labelling_cap)?;
        if truncated {
            out.complete = false;
            out.diagnostics.push(format!("{p}: labellings truncated at {}", self.opts.labelling_cap));
        }
        for z in labellings {
            match self.try_labelling(p, &z) {
                Ok(Some(r)) => out.results.push(r),
                Ok(None) => {}
                Err(e) if is_cap(&e) => {
                    out.complete = false;
                    out.diagnostics.push(format!("{p} with {z}: {e}"));
                }
                Err(e) => return Err(e),
            }
        }
        Ok(out)
    }

    fn try_labelling(&self, p: &VertexPartition, z: &Labelling) -> Result<Option<SearchResult>> {
        let limits = &self.opts.limits;
        if compatible_with(self.a, p, z, self.opts.mode, self.ideal.as_ref(), limits)?.is_err() {
            return Ok(None);
        }
        let g = assemble(self.a, p, z)?;
        if !round_trip_holds(self.a, z, &g, limits)? {
            return Err(Error::Internal(format!("simplification over {p} does not expand back to the input")));
        }
        let mut trivial = false;
        for t in &self.trivial {
            if t.gamma().vertex_count() == g.gamma().vertex_count() && gbp_equivalent(&g, t, limits)? {
                trivial = true;
                break;
            }
        }
        Ok(Some(SearchResult { partition: p.clone(), labelling: z.clone(), gbp: g, trivial }))
    }
}

const CHUNK: usize = 512;

/// Runs coherence, every labelling, compatibility and the construction for
/// each partition of the vertex set, in growth-string order.
pub fn search_simplifications(a: &BoundPathAlgebra, opts: &SearchOptions) -> Result<SearchReport> {
    let limits = &opts.limits;
    let n = a.quiver().vertex_count();
    if n > limits.vertex_cap {
        return Err(Error::CapExceeded { what: "vertices for partition search", cap: limits.vertex_cap });
    }
    a.witness(limits)?;
    let ideal = match opts.mode {
        ClosureMode::Ideal => Some(a.ideal(limits)?),
        ClosureMode::StrictSet => None,
    };
    let mut trivial = vec![trivial_gbp_single(a)];
    if a.quiver().is_acyclic() {
        trivial.push(trivial_gbp_gabriel(a)?);
    }
    let ctx = Context { a, ideal, trivial, opts };

    let mut report = SearchReport {
        partitions_examined: 0,
        coherent_partitions: 0,
        results: Vec::new(),
        simplifiable: false,
        complete: true,
        diagnostics: Vec::new(),
    };
    let mut partitions = vertex_partitions(a.quiver());
    let cap = opts.partition_cap.unwrap_or(usize::MAX);
    loop {
        let room = cap - report.partitions_examined;
        let chunk: Vec<VertexPartition> = partitions.by_ref().take(CHUNK.min(room)).collect();
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<Result<Outcome>> = if opts.parallel {
            chunk.par_iter().map(|p| ctx.evaluate(p)).collect()
        } else {
            chunk.iter().map(|p| ctx.evaluate(p)).collect()
        };
        report.partitions_examined += chunk.len();
        for o in outcomes {
            let o = o?;
            report.coherent_partitions += usize::from(o.coherent);
            report.complete &= o.complete;
            report.results.extend(o.results);
            report.diagnostics.extend(o.diagnostics);
        }
        if report.partitions_examined == cap {
            if partitions.next().is_some() {
                report.complete = false;
                report.diagnostics.push(format!("stopped after {cap} partitions"));
            }
            break;
        }
    }
    report.simplifiable = report.results.iter().any(|r| !r.trivial);
    Ok(report)
}
