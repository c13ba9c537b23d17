//! Hasse diagram rendering in Graphviz DOT syntax.

/// Renders the cover relation as a directed graph, bottom to top, with nodes
/// in canonical order.
pub fn hasse_dot(names: &[String], covers: &[(usize, usize)]) -> String {
    let mut out = String::from("digraph {\n  rankdir=BT;\n");
    for name in names {
        out.push_str(&format!("  {};\n", quote(name)));
    }
    for &(i, j) in covers {
        out.push_str(&format!(
            "  {} -> {};\n",
            quote(&names[i]),
            quote(&names[j])
        ));
    }
    out.push_str("}\n");
    out
}

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}
