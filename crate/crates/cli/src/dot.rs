//! Graphviz output.

use std::collections::BTreeSet;
use std::fmt::Write;

use hypershrink::{ColouredGraph, Hypergraph, Shrinking};

const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939",
];

pub fn palette(colour: usize) -> &'static str {
    PALETTE[colour % PALETTE.len()]
}

/// A coloured graph; edges whose index is in `highlight` are drawn bold.
pub fn coloured_graph(g: &ColouredGraph, highlight: &[usize]) -> String {
    let highlight: BTreeSet<usize> = highlight.iter().copied().collect();
    let mut s = String::from("graph coloured {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        writeln!(s, "  {v};").unwrap();
    }
    for (i, e) in g.edges().iter().enumerate() {
        let style = if highlight.contains(&i) {
            ", penwidth=3"
        } else {
            ", style=dashed"
        };
        writeln!(
            s,
            "  {} -- {} [label=\"{}\", color=\"{}\"{style}];",
            e.u,
            e.v,
            e.colour,
            palette(e.colour)
        )
        .unwrap();
    }
    s.push_str("}\n");
    s
}

/// The clique expansion of `h` (dashed, one colour per hyperedge) with the
/// tree edges of `s` drawn bold in the colour of their hyperedge.
pub fn shrinking_overlay(h: &Hypergraph, s: &Shrinking) -> String {
    let mut out = String::from("graph shrinking {\n  node [shape=circle];\n");
    for v in 0..h.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for (i, e) in h.edges().iter().enumerate() {
        let chosen = s.assignment.get(i).and_then(|&j| s.tree.get(j)).copied();
        for (a, &u) in e.iter().enumerate() {
            for &v in &e[a + 1..] {
                let style = if chosen == Some((u, v)) {
                    "penwidth=3"
                } else {
                    "style=dashed"
                };
                writeln!(
                    out,
                    "  {u} -- {v} [label=\"e{i}\", color=\"{}\", {style}];",
                    palette(i)
                )
                .unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
