//! Graphviz export of SPR-trees.

use std::fmt::Write;

use facecover::classify::Classification;
use facecover::decomposition::SprTree;
use facecover::graph::EdgeKind;

/// One digraph holding every block's SPR-tree. Tree nodes are labelled with
/// their type and class; each skeleton is drawn in a cluster next to them,
/// virtual edges dashed. Vertices carry 1-based input ids.
pub fn spr_dot(trees: &[(SprTree, Classification)]) -> String {
    let mut s = String::from("digraph spr {\n  compound=true;\n  node [fontname=\"monospace\"];\n");
    for (b, (tree, cl)) in trees.iter().enumerate() {
        for (t, node) in tree.nodes.iter().enumerate() {
            let id = format!("b{b}n{t}");
            let _ = writeln!(
                s,
                "  {id} [shape=box, label=\"{} {id}\\n{}\"];",
                node.kind.letter(),
                cl.class(t).name()
            );
            let _ = writeln!(s, "  subgraph cluster_{id} {{\n    label=\"{id}\";\n    style=dotted;");
            for v in node.skeleton.vertices() {
                let shape = if node.skeleton.is_terminal(v) { "doublecircle" } else { "circle" };
                let _ = writeln!(s, "    {id}v{v} [label=\"{}\", shape={shape}];", v + 1);
            }
            for (_, e) in node.skeleton.edges() {
                let style = if e.kind == EdgeKind::Virtual { "dashed" } else { "solid" };
                let _ = writeln!(s, "    {id}v{} -> {id}v{} [dir=none, style={style}];", e.u, e.v);
            }
            s.push_str("  }\n");
            if let Some(p) = node.parent {
                let _ = writeln!(s, "  b{b}n{p} -> {id};");
            }
        }
    }
    s.push_str("}\n");
    s
}
