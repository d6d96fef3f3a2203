use std::fmt::Write as _;
use std::path::Path;

use crate::graph::ColoredGraph;

use super::IoError;

/// Edge colors by color index, cycling for dimensions above 4.
pub const PALETTE: [&str; 5] = ["red", "blue", "green", "orange", "purple"];

/// Graphviz description: one undirected edge per colored edge, boundary
/// vertices drawn as filled boxes.
pub fn to_dot(graph: &ColoredGraph) -> String {
    let mut out = String::from("graph gem {\n  node [shape=circle];\n");
    for v in 0..graph.num_vertices() {
        if graph.is_boundary_vertex(v) {
            writeln!(
                out,
                "  {v} [shape=box, style=filled, fillcolor=lightgray, boundary=true];"
            )
            .unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (u, v, c) in graph.edges() {
        let color = PALETTE[c % PALETTE.len()];
        writeln!(out, "  {u} -- {v} [color={color}, label={c}];").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn export_dot(graph: &ColoredGraph, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    std::fs::write(path, to_dot(graph)).map_err(|e| IoError::io(path, e))
}
