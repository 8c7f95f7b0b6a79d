//! DOT export for figure reproduction.

use crate::graph::Graph;

/// Renders the graph as DOT: one quoted node statement per vertex and one
/// edge statement per unordered adjacent pair, both in enumeration order.
pub fn export_dot(graph: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for label in graph.labels() {
        out.push_str(&format!("  \"{label}\";\n"));
    }
    for (a, b) in graph.edges() {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", graph.label(a), graph.label(b)));
    }
    out.push_str("}\n");
    out
}
