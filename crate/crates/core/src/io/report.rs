//! JSON and plain-text renderings of search and expansion results.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::BoundPathAlgebra;
use crate::gbp::{ExpandedPresentation, GbpAlgebra};
use crate::io::dsl::{Document, GbpBlock, Item};
use crate::lincomb::LinComb;
use crate::quiver::Quiver;
use crate::simplify::{SearchReport, SearchResult};

pub const FORMAT: u32 = 1;

#[derive(Serialize)]
struct ArrowJson<'a> {
    id: &'a str,
    source: &'a str,
    target: &'a str,
}

#[derive(Serialize)]
struct QuiverJson<'a> {
    vertices: Vec<&'a str>,
    arrows: Vec<ArrowJson<'a>>,
}

fn quiver_json(q: &Quiver) -> QuiverJson<'_> {
    QuiverJson {
        vertices: q.vertices().collect(),
        arrows: q.arrows().map(|a| ArrowJson { id: &a.id, source: &a.source, target: &a.target }).collect(),
    }
}

fn strings(rels: &[LinComb]) -> Vec<String> {
    rels.iter().map(|r| r.to_string()).collect()
}

#[derive(Serialize)]
struct FamilyJson<'a> {
    label: &'a str,
    quiver: QuiverJson<'a>,
    relations: Vec<String>,
}

#[derive(Serialize)]
struct LabellingJson<'a> {
    vertices: &'a BTreeMap<String, String>,
    arrows: &'a BTreeMap<String, String>,
}

#[derive(Serialize)]
struct ResultJson<'a> {
    partition: String,
    labelling: LabellingJson<'a>,
    trivial: bool,
    gamma: QuiverJson<'a>,
    family: BTreeMap<&'a str, FamilyJson<'a>>,
    #[serde(rename = "relations_I")]
    relations_i: Vec<String>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    format: u32,
    input: &'a str,
    partitions_examined: usize,
    coherent_partitions: usize,
    results: Vec<ResultJson<'a>>,
    simplifiable: bool,
    complete: bool,
    diagnostics: &'a [String],
}

fn family_json(g: &GbpAlgebra) -> BTreeMap<&str, FamilyJson<'_>> {
    g.family()
        .iter()
        .map(|(v, va)| {
            let fam = FamilyJson {
                label: &va.label,
                quiver: quiver_json(va.algebra.quiver()),
                relations: strings(va.algebra.relations()),
            };
            (v.as_str(), fam)
        })
        .collect()
}

fn result_json(r: &SearchResult) -> ResultJson<'_> {
    ResultJson {
        partition: r.partition.to_string(),
        labelling: LabellingJson { vertices: r.labelling.vertex_map(), arrows: r.labelling.arrow_map() },
        trivial: r.trivial,
        gamma: quiver_json(r.gbp.gamma()),
        family: family_json(&r.gbp),
        relations_i: strings(r.gbp.relations()),
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report values serialize");
    s.push('\n');
    s
}

/// Search report as JSON; `input` names the algebra searched.
pub fn search_json(input: &str, report: &SearchReport) -> String {
    pretty(&ReportJson {
        format: FORMAT,
        input,
        partitions_examined: report.partitions_examined,
        coherent_partitions: report.coherent_partitions,
        results: report.results.iter().map(result_json).collect(),
        simplifiable: report.simplifiable,
        complete: report.complete,
        diagnostics: &report.diagnostics,
    })
}

pub fn search_summary(input: &str, report: &SearchReport) -> String {
    let mut out = format!(
        "{input}: {} partitions examined, {} coherent, {} simplifications\n",
        report.partitions_examined,
        report.coherent_partitions,
        report.results.len()
    );
    for r in &report.results {
        let labels: Vec<String> = r.gbp.family().iter().map(|(v, a)| format!("{v}:{}", a.label)).collect();
        out.push_str(&format!(
            "  {}{}  [{}]  I = {{{}}}\n",
            r.partition,
            if r.trivial { " (trivial)" } else { "" },
            labels.join(", "),
            strings(r.gbp.relations()).join(", ")
        ));
    }
    for d in &report.diagnostics {
        out.push_str(&format!("  note: {d}\n"));
    }
    out.push_str(if report.simplifiable { "simplifiable\n" } else { "not simplifiable\n" });
    if !report.complete {
        out.push_str("search incomplete\n");
    }
    out
}

#[derive(Serialize)]
struct ExpandJson<'a> {
    format: u32,
    input: &'a str,
    quiver: QuiverJson<'a>,
    internal_relations: Vec<String>,
    induced_relations: Vec<String>,
    vertex_origin: BTreeMap<&'a str, [&'a str; 2]>,
}

pub fn expand_json(input: &str, e: &ExpandedPresentation) -> String {
    pretty(&ExpandJson {
        format: FORMAT,
        input,
        quiver: quiver_json(e.algebra.quiver()),
        internal_relations: strings(&e.internal_relations),
        induced_relations: strings(&e.induced_relations),
        vertex_origin: e.vertex_origin.iter().map(|(v, (g, l))| (v.as_str(), [g.as_str(), l.as_str()])).collect(),
    })
}

pub fn expand_summary(input: &str, e: &ExpandedPresentation) -> String {
    let q = e.algebra.quiver();
    let mut out = format!("{input}: {} vertices, {} arrows\n", q.vertex_count(), q.arrow_count());
    out.push_str(&format!("internal: {{{}}}\n", strings(&e.internal_relations).join(", ")));
    out.push_str(&format!("induced: {{{}}}\n", strings(&e.induced_relations).join(", ")));
    out
}

/// Source text for a gbp together with algebra blocks for its family, so
/// the output can be read back in. Distinct algebras sharing a label get
/// the vertex appended to keep block names unique.
pub fn gbp_document(name: &str, g: &GbpAlgebra) -> Document {
    let mut doc = Document::default();
    let mut seen: BTreeMap<String, BoundPathAlgebra> = BTreeMap::new();
    let mut assign = BTreeMap::new();
    for (v, va) in g.family() {
        if va.label == "k" && va.algebra.quiver().vertex_count() == 1 && va.algebra.quiver().arrow_count() == 0 {
            assign.insert(v.clone(), "k".to_string());
            continue;
        }
        let mut block =
            if va.label == "k" || va.label == name { format!("{}@{v}", va.label) } else { va.label.clone() };
        if seen.get(&block).is_some_and(|a| a != &va.algebra) {
            block = format!("{}@{v}", va.label);
        }
        if !seen.contains_key(&block) {
            seen.insert(block.clone(), va.algebra.clone());
            doc.push(Item::Algebra(block.clone(), va.algebra.clone()));
        }
        assign.insert(v.clone(), block);
    }
    doc.push(Item::Gbp(name.to_string(), GbpBlock { algebra: g.clone(), assign }));
    doc
}
