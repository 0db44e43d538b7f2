//! Component classes of SPR-tree nodes and single-face coverability.
//!
//! For a node `t` with corners `c1, c2` the flags describe the enhancement
//! of `t`: `unproblematic` when one external face holds every terminal,
//! `efc` when the two external faces together hold them, and `internal[C]`
//! when some internal face holds every terminal outside the corner subset
//! `C` (or nothing is required at all).

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::decomposition::{block_cut_tree, spr_tree, NodeType, SprTree};
use crate::embedding::{planar_embedding, RotationSystem};
use crate::graph::{EdgeId, EdgeKind, MultiGraph, VertexId};
use crate::oracle::{face_structure, fcn_connected_capped, fcn_profile_exact, FaceStructure, OracleConfig, OracleError, Route};
use crate::profile::Count;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentClass {
    TerminalFree,
    Unproblematic,
    SemiProblematic,
    Problematic,
}

impl ComponentClass {
    pub fn name(self) -> &'static str {
        match self {
            ComponentClass::TerminalFree => "terminal-free",
            ComponentClass::Unproblematic => "unproblematic",
            ComponentClass::SemiProblematic => "semi-problematic",
            ComponentClass::Problematic => "problematic",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NodeFlags {
    /// No terminals apart from the corners.
    pub terminal_free: bool,
    pub unproblematic: bool,
    pub efc: bool,
    pub internal: [bool; 4],
}

impl NodeFlags {
    pub fn class(&self) -> ComponentClass {
        if self.terminal_free {
            ComponentClass::TerminalFree
        } else if self.unproblematic {
            ComponentClass::Unproblematic
        } else if self.efc {
            // two external faces merge once the corner edge is dropped
            ComponentClass::SemiProblematic
        } else {
            ComponentClass::Problematic
        }
    }
}

/// A fixed embedding of an R-node skeleton and its faces.
#[derive(Clone, Debug)]
pub struct SkeletonFaces {
    pub rotation: RotationSystem,
    pub faces: FaceStructure,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub flags: Vec<NodeFlags>,
    /// Faces of R-node skeletons; `None` for S and P nodes.
    pub faces: Vec<Option<SkeletonFaces>>,
}

impl Classification {
    pub fn class(&self, t: usize) -> ComponentClass {
        self.flags[t].class()
    }
}

/// Virtual edges of `t` other than its parent edge, with the child behind
/// each.
pub fn child_edges(tree: &SprTree, t: usize) -> Vec<(EdgeId, usize)> {
    let pe = tree.corners(t).edge;
    tree.node(t)
        .skeleton
        .edges()
        .filter(|&(e, ed)| e != pe && ed.kind == EdgeKind::Virtual)
        .map(|(e, _)| (e, tree.child_at(e).unwrap()))
        .collect()
}

fn subset_mask(tree: &SprTree, t: usize, child: usize, c: usize) -> usize {
    let ct = tree.corners(t);
    let cc = tree.corners(child);
    let excused = |v: VertexId| (c & 1 != 0 && v == ct.c1) || (c & 2 != 0 && v == ct.c2);
    (excused(cc.c1) as usize) | ((excused(cc.c2) as usize) << 1)
}

/// Bottom-up DP over the tree; terminals are the marks of `tree.graph`.
pub fn classify_tree(tree: &SprTree) -> Classification {
    let n = tree.len();
    let mut flags = vec![NodeFlags::default(); n];
    let mut faces: Vec<Option<SkeletonFaces>> = vec![None; n];
    for t in (0..n).rev() {
        let node = tree.node(t);
        let c = tree.corners(t);
        let is_term = |v: VertexId| tree.graph.is_terminal(v);
        let skel_term: Vec<VertexId> = node.skeleton.vertices().filter(|&v| !c.contains(v) && is_term(v)).collect();
        let kids = child_edges(tree, t);
        let inner_kids: Vec<(EdgeId, usize)> = kids.iter().copied().filter(|&(_, ch)| !flags[ch].terminal_free).collect();
        let all_u = inner_kids.iter().all(|&(_, ch)| flags[ch].unproblematic);
        let mut f = NodeFlags {
            terminal_free: skel_term.is_empty() && inner_kids.is_empty(),
            ..NodeFlags::default()
        };
        let required = |cs: usize| -> Vec<VertexId> {
            let mut r = skel_term.clone();
            if cs & 1 == 0 && is_term(c.c1) {
                r.push(c.c1);
            }
            if cs & 2 == 0 && is_term(c.c2) {
                r.push(c.c2);
            }
            r
        };
        match node.kind {
            NodeType::S => {
                f.unproblematic = all_u;
                f.efc = inner_kids.iter().all(|&(_, ch)| flags[ch].efc);
            }
            NodeType::P => {
                f.unproblematic = all_u && inner_kids.len() <= 1;
                f.efc = all_u && inner_kids.len() <= 2;
            }
            NodeType::R => {
                let rot = planar_embedding(&node.skeleton).expect("skeleton is planar");
                let fs = face_structure(&node.skeleton, &rot).expect("valid rotation");
                let ext: Vec<usize> = (0..fs.len()).filter(|&i| fs[i].has_edge(c.edge)).collect();
                let holds = |i: usize| {
                    skel_term.iter().all(|&v| fs[i].contains(v)) && inner_kids.iter().all(|&(e, _)| fs[i].has_edge(e))
                };
                f.unproblematic = all_u && ext.iter().any(|&i| holds(i));
                f.efc = all_u
                    && skel_term.iter().all(|&v| ext.iter().any(|&i| fs[i].contains(v)))
                    && inner_kids.iter().all(|&(e, _)| ext.iter().any(|&i| fs[i].has_edge(e)));
                for (cs, slot) in f.internal.iter_mut().enumerate() {
                    let req = required(cs);
                    *slot = all_u
                        && (0..fs.len()).any(|i| {
                            !ext.contains(&i)
                                && req.iter().all(|&v| fs[i].contains(v))
                                && inner_kids.iter().all(|&(e, _)| fs[i].has_edge(e))
                        });
                }
                faces[t] = Some(SkeletonFaces { rotation: rot, faces: fs });
            }
        }
        for cs in 0..4 {
            let req = required(cs);
            if req.is_empty() && inner_kids.is_empty() {
                f.internal[cs] = true;
                continue;
            }
            if node.kind == NodeType::P && all_u && inner_kids.len() <= 2 {
                // an internal face between two children holds both corners
                f.internal[cs] = true;
                continue;
            }
            // all terminals inside one child, reached through its internal face
            for &(e, ch) in &kids {
                if inner_kids.iter().any(|&(_, x)| x != ch) {
                    continue;
                }
                let ed = node.skeleton.edge(e).unwrap();
                if req.iter().all(|&v| ed.has(v)) && flags[ch].internal[subset_mask(tree, t, ch, cs)] {
                    f.internal[cs] = true;
                    break;
                }
            }
        }
        flags[t] = f;
    }
    Classification { flags, faces }
}

/// Flags of node `t` computed from the exact profile of its enhancement.
pub fn brute_flags(tree: &SprTree, t: usize, cfg: &OracleConfig) -> Result<NodeFlags, OracleError> {
    let (enh, c) = tree.enhancement(t);
    let p = fcn_profile_exact(&enh, &c, 2, cfg)?;
    let at_most = |x: Count, b: u32| matches!(x, Count::Finite(v) if v <= b);
    Ok(NodeFlags {
        terminal_free: tree.inner_terminals(t).is_empty(),
        unproblematic: at_most(p.f1, 1),
        efc: at_most(p.f2, 2),
        internal: [
            at_most(p.f0_minus[0], 1),
            at_most(p.f0_minus[1], 1),
            at_most(p.f0_minus[2], 1),
            at_most(p.f0_minus[3], 1),
        ],
    })
}

/// Class of node `t` by definition: unproblematic when one external face of
/// the enhancement holds all terminals, semi-problematic when the two
/// external faces do and the induced graph has face cover number one.
pub fn brute_class(tree: &SprTree, t: usize, cfg: &OracleConfig) -> Result<ComponentClass, OracleError> {
    let f = brute_flags(tree, t, cfg)?;
    if f.terminal_free {
        return Ok(ComponentClass::TerminalFree);
    }
    if f.unproblematic {
        return Ok(ComponentClass::Unproblematic);
    }
    let ind = tree.induced_graph(t);
    let one = fcn_connected_capped(&ind, &ind.terminal_set(), 1, Route::Auto, cfg)? <= 1;
    Ok(if f.efc && one {
        ComponentClass::SemiProblematic
    } else {
        ComponentClass::Problematic
    })
}

/// Whether one face of a biconnected graph can hold all of `required`.
fn block_single_face(g: &MultiGraph, required: &BTreeSet<VertexId>) -> bool {
    if required.is_empty() || g.edge_count() <= 1 {
        return true;
    }
    let mut h = g.clone();
    let vs: Vec<VertexId> = h.vertices().collect();
    for v in vs {
        h.set_terminal(v, required.contains(&v)).unwrap();
    }
    let tree = spr_tree(&h).expect("block decomposes");
    let f = classify_tree(&tree).flags[tree.root()];
    f.unproblematic || f.internal[0]
}

/// Whether `fcn(g) <= 1`, in polynomial time. Components nest into one
/// face; inside a component every block needs a face holding its terminals
/// and the cut vertices that lead to terminals.
pub fn fcn_at_most_one(g: &MultiGraph) -> bool {
    g.connected_components().into_iter().all(|comp| {
        let sub = g.induced_subgraph(&comp);
        connected_fcn_at_most_one(&sub)
    })
}

fn connected_fcn_at_most_one(g: &MultiGraph) -> bool {
    let terminals = g.terminal_set();
    if terminals.is_empty() {
        return true;
    }
    let bct = block_cut_tree(g).expect("connected");
    if bct.blocks.len() == 1 {
        return block_single_face(g, &terminals);
    }
    for b in &bct.blocks {
        let mut req: BTreeSet<VertexId> = b.vertices.iter().copied().filter(|v| terminals.contains(v)).collect();
        let block_edges: BTreeSet<EdgeId> = b.edges.iter().copied().collect();
        for &w in &b.vertices {
            if req.contains(&w) || !bct.is_cut_vertex(w) {
                continue;
            }
            if leads_to_terminal(g, w, &block_edges, &terminals) {
                req.insert(w);
            }
        }
        if !block_single_face(&g.edge_subgraph(&b.edges), &req) {
            return false;
        }
    }
    true
}

/// Whether a terminal other than `w` is reachable from `w` without using the
/// given block edges.
fn leads_to_terminal(g: &MultiGraph, w: VertexId, block: &BTreeSet<EdgeId>, terminals: &BTreeSet<VertexId>) -> bool {
    let mut seen = BTreeSet::new();
    seen.insert(w);
    let mut stack = vec![w];
    while let Some(v) = stack.pop() {
        for &e in g.incident(v) {
            if block.contains(&e) {
                continue;
            }
            let x = g.edge(e).unwrap().other(v);
            if seen.insert(x) {
                if terminals.contains(&x) {
                    return true;
                }
                stack.push(x);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{is_biconnected, spr_tree_rooted};
    use crate::harness::{gen_planar, small_connected_planar_graphs, Connectivity, GenParams};
    use crate::oracle::fcn_capped_via;

    /// Wheel on rim a-t1-b-t2 with hub h, closed by a path a-x-b; t1 and t2
    /// are terminals.
    fn w4() -> (MultiGraph, EdgeId) {
        // a=0 t1=1 b=2 t2=3 h=4 x=5
        let mut g = MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3), (2, 5)]);
        let e = g.add_edge(0, 5, EdgeKind::Real).unwrap();
        g.set_terminal(1, true).unwrap();
        g.set_terminal(3, true).unwrap();
        (g, e)
    }

    fn check_tree(tree: &SprTree, cfg: &OracleConfig) {
        let cl = classify_tree(tree);
        let root = cl.flags[tree.root()];
        let one = fcn_capped_via(&tree.graph, 1, Route::Auto, cfg).unwrap() <= 1;
        assert_eq!(root.unproblematic || root.internal[0], one);
        for t in 0..tree.len() {
            let b = brute_flags(tree, t, cfg).unwrap();
            if t != tree.root() {
                assert_eq!(cl.class(t), brute_class(tree, t, cfg).unwrap());
            }
            assert_eq!(cl.flags[t], b, "node {t} of {:?} terminals {:?}", tree.graph.edge_multiset(), tree.graph.terminal_set());
        }
    }

    #[test]
    fn wheel_gadget_is_semi_problematic() {
        let (g, e) = w4();
        let tree = spr_tree_rooted(&g, e).unwrap();
        // the wheel hangs below the chord a-b
        let cl = classify_tree(&tree);
        let t = (0..tree.len())
            .find(|&t| {
                let c = tree.corners(t);
                t != tree.root() && (c.c1, c.c2) == (0, 2) && tree.inner_terminals(t).len() == 2
            })
            .unwrap();
        assert_eq!(cl.class(t), ComponentClass::SemiProblematic);
        let b = brute_class(&tree, t, &OracleConfig::default()).unwrap();
        assert_eq!(b, ComponentClass::SemiProblematic);
    }

    #[test]
    fn triangle_with_inner_terminal_is_unproblematic() {
        let mut g = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]);
        g.set_terminal(2, true).unwrap();
        let tree = spr_tree(&g).unwrap();
        let cl = classify_tree(&tree);
        let classes: Vec<ComponentClass> = tree.node(0).children.iter().map(|&c| cl.class(c)).collect();
        assert!(classes.contains(&ComponentClass::Unproblematic));
        assert!(classes.contains(&ComponentClass::TerminalFree));
    }

    #[test]
    fn dp_matches_brute_force_on_small_graphs() {
        let cfg = OracleConfig::default();
        for g in small_connected_planar_graphs(6) {
            if !is_biconnected(&g) || g.edge_count() < 3 {
                continue;
            }
            let n = g.vertex_count() as u32;
            for mask in [0u32, 0b1, 0b101, 0b11010, 0b111111, 0b100110] {
                let mut h = g.clone();
                for v in 0..n {
                    h.set_terminal(v, mask >> v & 1 == 1).unwrap();
                }
                for e in h.edge_ids().take(2).collect::<Vec<_>>() {
                    check_tree(&spr_tree_rooted(&h, e).unwrap(), &cfg);
                }
            }
        }
    }

    #[test]
    fn dp_matches_brute_force_on_generated_graphs() {
        let cfg = OracleConfig::default();
        for seed in 0..80 {
            let mut p = GenParams::new(seed, 6 + (seed as u32 % 4));
            p.connectivity = Connectivity::Biconnected;
            p.density = 0.4 + (seed % 5) as f64 * 0.1;
            p.terminal_fraction = 0.2 + (seed % 3) as f64 * 0.2;
            let g = gen_planar(&p).graph;
            if crate::oracle::enumeration_cost(&g) > crate::oracle::ROTATION_BUDGET {
                continue;
            }
            check_tree(&spr_tree(&g).unwrap(), &cfg);
        }
    }

    #[test]
    fn fcn_at_most_one_matches_oracle() {
        let cfg = OracleConfig::default();
        for seed in 0..120 {
            let mut p = GenParams::new(seed, 4 + (seed as u32 % 6));
            p.terminal_fraction = 0.1 + (seed % 4) as f64 * 0.15;
            p.density = 0.3 + (seed % 4) as f64 * 0.15;
            let g = gen_planar(&p).graph;
            let exact = fcn_capped_via(&g, 1, Route::Auto, &cfg).unwrap() <= 1;
            assert_eq!(fcn_at_most_one(&g), exact, "{:?} {:?}", g.edge_multiset(), g.terminal_set());
        }
    }
}
