//! Graphviz output. Increasing relations are drawn in blue and decreasing
//! ones in red; flows show `label:input` on nodes and outgoing rates on
//! edges.

use std::fmt::Write;

use crate::flows::Flow;
use crate::interval::IntervalPoset;

/// Cover relations of `i`, decreasing first.
pub fn poset_to_dot(i: &IntervalPoset) -> String {
    let mut out = String::from("digraph interval_poset {\n  node [shape=circle];\n");
    for v in 1..=i.size() {
        writeln!(out, "  {v};").unwrap();
    }
    for (a, b) in i.dec_relations() {
        writeln!(out, "  {a} -> {b} [color=red];").unwrap();
    }
    for (a, b) in i.inc_relations() {
        writeln!(out, "  {a} -> {b} [color=blue];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Edges point from each node towards its parent; roots feed a sink node
/// `exit`.
pub fn flow_to_dot(f: &Flow) -> String {
    let mut out = String::from("digraph flow {\n  node [shape=box];\n");
    for v in 1..=f.size() {
        writeln!(out, "  {v} [label=\"{v}:{}\"];", f.input(v)).unwrap();
    }
    if f.size() > 0 {
        out.push_str("  exit [shape=point];\n");
    }
    for v in 1..=f.size() {
        let target = f
            .forest()
            .parent(v)
            .map_or_else(|| "exit".to_string(), |p| p.to_string());
        writeln!(out, "  {v} -> {target} [label=\"{}\"];", f.rate(v)).unwrap();
    }
    out.push_str("}\n");
    out
}
