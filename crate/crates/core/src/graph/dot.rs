//! Graphviz DOT output with styled edge sets.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeStyle {
    Bold,
    Dashed,
    Dotted,
}

impl EdgeStyle {
    fn attrs(self) -> &'static str {
        match self {
            EdgeStyle::Bold => "style=bold, penwidth=2.5",
            EdgeStyle::Dashed => "style=dashed",
            EdgeStyle::Dotted => "style=dotted",
        }
    }
}

/// A set of vertex pairs drawn with one style. The pairs need not be edges
/// of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Highlight {
    pub label: String,
    pub pairs: Vec<(usize, usize)>,
    pub style: EdgeStyle,
}

impl Highlight {
    pub fn new(label: impl Into<String>, pairs: impl IntoIterator<Item = (usize, usize)>, style: EdgeStyle) -> Self {
        Self {
            label: label.into(),
            pairs: pairs.into_iter().collect(),
            style,
        }
    }
}

/// Renders `g` as an undirected DOT graph. Edges of `g` not covered by any
/// highlight are drawn in light grey; each highlighted pair is drawn with
/// its set's style and a `class` attribute naming the set.
pub fn export_dot(g: &Graph, highlights: &[Highlight]) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v};");
    }
    let covered: BTreeSet<(usize, usize)> = highlights
        .iter()
        .flat_map(|h| h.pairs.iter().map(|&(u, v)| (u.min(v), u.max(v))))
        .collect();
    for &(u, v) in g.edges() {
        if !covered.contains(&(u, v)) {
            let _ = writeln!(out, "  {u} -- {v} [color=gray70];");
        }
    }
    for h in highlights {
        for &(u, v) in &h.pairs {
            let (a, b) = (u.min(v), u.max(v));
            let _ = writeln!(out, "  {a} -- {b} [{}, class=\"{}\"];", h.style.attrs(), h.label);
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::cycle;

    #[test]
    fn plain_export_lists_every_node() {
        let dot = export_dot(&cycle(4).unwrap(), &[]);
        assert!(dot.starts_with("graph G {"));
        for v in 0..4 {
            assert!(dot.contains(&format!("  {v};")));
        }
        assert_eq!(dot.matches(" -- ").count(), 4);
    }

    #[test]
    fn highlighted_pairs_carry_style() {
        let g = cycle(4).unwrap();
        let pairing = Highlight::new("pairing", [(0, 2), (1, 3)], EdgeStyle::Bold);
        let matching = Highlight::new("matching", [(0, 1), (2, 3)], EdgeStyle::Dashed);
        let dot = export_dot(&g, &[pairing, matching]);
        assert!(dot.contains("0 -- 2 [style=bold, penwidth=2.5, class=\"pairing\"]"));
        assert!(dot.contains("1 -- 3 [style=bold, penwidth=2.5, class=\"pairing\"]"));
        assert!(dot.contains("0 -- 1 [style=dashed"));
        assert!(dot.contains("0 -- 3 [color=gray70]"));
        assert!(!dot.contains("0 -- 1 [color=gray70]"));
    }
}
