//! Graphviz export. Edge color encodes the index; `f⋆` edges are dashed.

use std::fmt::Write;

use borcherds_rc::crystal::CrystalNode;
use borcherds_rc::graph::{CrystalGraph, Operator};
use borcherds_rc::BorcherdsCartanDatum;

const PALETTE: [&str; 8] = ["blue", "red", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"];

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"").replace('\n', "\\l")
}

/// Compact one-line-per-index node label.
pub fn node_label(d: &BorcherdsCartanDatum, node: &CrystalNode) -> String {
    match node {
        CrystalNode::Rc(rc) => {
            let mut s = String::new();
            for a in d.indices() {
                let rows: Vec<String> =
                    rc.part(a).rows().iter().map(|r| format!("{}:{}", r.length, r.rigging)).collect();
                let body = if rows.is_empty() { "∅".to_string() } else { rows.join(" ") };
                let _ = writeln!(s, "{}: {}", d.label(a), body);
            }
            s
        }
        CrystalNode::Tensor(l, r) => format!("{}⊗\n{}", node_label(d, l), node_label(d, r)),
        other => format!("{:?}\n", other),
    }
}

pub fn export_dot(g: &CrystalGraph) -> String {
    let d = &g.datum;
    let mut s = String::new();
    let _ = writeln!(s, "digraph crystal {{");
    let _ = writeln!(s, "  node [shape=box, fontname=\"monospace\"];");
    for (k, n) in g.nodes.iter().enumerate() {
        let _ = writeln!(s, "  {} [label=\"{}\"];", k, escape(&node_label(d, n)));
    }
    for e in &g.edges {
        let color = PALETTE[e.index.position() % PALETTE.len()];
        let style = if e.op == Operator::FStar { "dashed" } else { "solid" };
        let _ = writeln!(
            s,
            "  {} -> {} [label=\"{}{}\", color={}, style={}];",
            e.src,
            e.dst,
            escape(e.op.symbol()),
            escape(d.label(e.index)),
            color,
            style
        );
    }
    s.push_str("}\n");
    s
}
