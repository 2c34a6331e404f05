//! Graphviz DOT export of the Levi graph of an incidence structure.
//!
//! Point vertices are circles named `p_<label>`, line vertices are boxes
//! named `L_<label>`, one edge per flag, all in stable order.

use crate::incidence::IncidenceStructure;

pub fn emit_dot(structure: &IncidenceStructure) -> String {
    let graph = structure.levi_graph();
    let mut out = String::from("graph levi {\n");
    if !graph.point_nodes.is_empty() {
        out.push_str("  node [shape=circle];\n");
        for node in &graph.point_nodes {
            out.push_str(&format!("  {node};\n"));
        }
    }
    if !graph.line_nodes.is_empty() {
        out.push_str("  node [shape=box];\n");
        for node in &graph.line_nodes {
            out.push_str(&format!("  {node};\n"));
        }
    }
    for &(p, l) in &graph.edges {
        out.push_str(&format!(
            "  {} -- {};\n",
            graph.point_nodes[p], graph.line_nodes[l]
        ));
    }
    out.push_str("}\n");
    out
}
