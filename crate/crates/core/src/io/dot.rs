//! Graphviz output.

use crate::gbp::GbpAlgebra;
use crate::quiver::Quiver;

fn q(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn edges(out: &mut String, quiver: &Quiver) {
    for a in quiver.arrows() {
        out.push_str(&format!("  {} -> {} [label={}];\n", q(&a.source), q(&a.target), q(&a.id)));
    }
}

/// One node per vertex and one edge per arrow, in sorted order.
pub fn quiver_dot(name: &str, quiver: &Quiver) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=LR;\n", q(name));
    for v in quiver.vertices() {
        out.push_str(&format!("  {} [label={}];\n", q(v), q(v)));
    }
    edges(&mut out, quiver);
    out.push_str("}\n");
    out
}

/// Γ with each node labelled by its vertex algebra; the relations of `I`
/// go into the graph label.
pub fn gbp_dot(name: &str, g: &GbpAlgebra) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=LR;\n", q(name));
    if !g.relations().is_empty() {
        let rels: Vec<String> = g.relations().iter().map(|r| format!("{r} = 0")).collect();
        out.push_str(&format!("  label={};\n", q(&rels.join(", "))));
    }
    for v in g.gamma().vertices() {
        let label = g.vertex_algebra(v).map_or("?", |a| a.label.as_str());
        out.push_str(&format!("  {} [label={}, xlabel={}];\n", q(v), q(label), q(v)));
    }
    edges(&mut out, g.gamma());
    out.push_str("}\n");
    out
}
