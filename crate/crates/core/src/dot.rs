//! Graphviz output: Hasse diagrams drawn bottom-up, with marked nodes in red.

use std::fmt::Write;

use crate::duality::FinitePoset;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Cover relation of `p` as a digraph, edges pointing upward.
pub fn hasse_dot(name: &str, p: &FinitePoset, labels: &[String], marked: &[bool]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (i, label) in labels.iter().enumerate().take(p.len()) {
        let color = if marked.get(i).copied().unwrap_or(false) {
            ", color=red, fontcolor=red"
        } else {
            ""
        };
        writeln!(out, "  n{i} [label=\"{}\"{color}];", escape(label)).unwrap();
    }
    for (a, b) in p.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Rooted tree with the root at the top.
pub fn tree_dot(tree: &crate::tree::RootedTree) -> String {
    let mut out = String::from("digraph \"tree\" {\n  node [shape=circle];\n");
    for v in tree.vertices() {
        writeln!(out, "  n{v} [label=\"{}\"];", escape(tree.label(v))).unwrap();
    }
    for v in tree.vertices() {
        for &c in tree.children(v) {
            writeln!(out, "  n{v} -> n{c};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
