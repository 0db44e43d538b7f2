//! R-node rules on the fixed embedding of the skeleton.
//!
//! Interesting vertices are terminals, corners and endpoints of children
//! that stay virtual. Unproblematic children become terminal-subdivided
//! edges first; the result is the extended skeleton.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::classify::ComponentClass;
use crate::embedding::{trace_faces, FaceSet};
use crate::graph::{EdgeId, EdgeKind, MultiGraph, VertexId};
use crate::oracle::FaceData;

use super::gadgets::{replace_slot, Gadget};
use super::rigidize::{rigidize_with, separator_vertices};
use super::{Ctx, IdGen, NiceKernel, NoCertificate, Rule, Work};

fn interesting(w: &Work) -> BTreeSet<VertexId> {
    let mut out: BTreeSet<VertexId> = w.h.terminal_set();
    out.insert(w.corners.c1);
    out.insert(w.corners.c2);
    for &e in w.slots.keys() {
        let ed = w.h.edge(e).unwrap();
        out.insert(ed.u);
        out.insert(ed.v);
    }
    out
}

fn faces(w: &Work) -> FaceSet {
    trace_faces(&w.h, w.rot.as_ref().unwrap()).expect("valid rotation")
}

fn protected(w: &Work, e: EdgeId) -> bool {
    e == w.corners.edge || w.slots.contains_key(&e)
}

fn delete_edge(w: &mut Work, e: EdgeId) {
    let ed = w.h.remove_edge(e).unwrap();
    let rot = w.rot.as_mut().unwrap();
    rot.remove_slot(ed.u, e);
    rot.remove_slot(ed.v, e);
}

fn delete_vertex(w: &mut Work, v: VertexId) {
    for e in w.h.incident(v).to_vec() {
        delete_edge(w, e);
    }
    w.h.remove_vertex(v).unwrap();
    w.rot.as_mut().unwrap().remove_vertex(v);
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let n = self.0[y];
            self.0[y] = r;
            y = n;
        }
        r
    }
}

/// Replace a child edge by a terminal-subdivided edge, keeping the embedding.
fn subdivide_slot(w: &mut Work, ids: &mut IdGen, e: EdgeId) {
    w.slots.remove(&e);
    let ed = w.h.remove_edge(e).unwrap();
    let x = ids.vertex();
    w.h.insert_vertex(x).unwrap();
    w.h.set_terminal(x, true).unwrap();
    let a = ids.edge();
    let b = ids.edge();
    w.h.insert_edge(a, ed.u, x, EdgeKind::Real).unwrap();
    w.h.insert_edge(b, x, ed.v, EdgeKind::Real).unwrap();
    let rot = w.rot.as_mut().unwrap();
    rot.replace_slot(ed.u, e, &[a]);
    rot.replace_slot(ed.v, e, &[b]);
    rot.set_rotation(x, alloc::vec![a, b]);
}

/// Extended skeleton of R-node `t`: terminal-free children as real edges,
/// unproblematic ones as terminal-subdivided edges, the rest virtual.
pub fn extended_skeleton(ctx: &mut Ctx, t: usize) -> Work {
    let mut w = Work::new(ctx.tree, ctx.cl, t);
    w.rot = Some(ctx.cl.faces[t].as_ref().expect("R node faces").rotation.clone());
    let tf: Vec<EdgeId> = slots_of(&w, ComponentClass::TerminalFree);
    for e in tf {
        ctx.apply(&mut w, Rule::Rr1, |w, ids| {
            replace_slot(w, ids, e, Gadget::Edge);
            true
        });
    }
    for e in slots_of(&w, ComponentClass::Unproblematic) {
        ctx.apply(&mut w, Rule::Rr2, |w, ids| {
            subdivide_slot(w, ids, e);
            true
        });
    }
    w
}

fn slots_of(w: &Work, class: ComponentClass) -> Vec<EdgeId> {
    w.slots.iter().filter(|(_, s)| s.class == class).map(|(&e, _)| e).collect()
}

/// Unmark terminals on internal faces with more than `3k + 1` non-corner
/// terminals. Kept terminals stay pinned so every unmarked one lies on an
/// internal face that keeps at least `3k + 1` of them.
fn terminal_heavy(w: &mut Work, k: u32) -> bool {
    let limit = 3 * k as usize + 1;
    let fs = faces(w);
    let pe = w.corners.edge;
    let mut pinned: BTreeSet<VertexId> = BTreeSet::new();
    let mut changed = false;
    for f in fs.faces.iter().filter(|f| !f.has_edge(pe)) {
        let terms: Vec<VertexId> = f
            .vertices
            .iter()
            .copied()
            .filter(|&v| w.h.is_terminal(v) && !w.corners.contains(v))
            .collect();
        if terms.len() <= limit {
            continue;
        }
        let mut keep: BTreeSet<VertexId> = terms.iter().copied().filter(|v| pinned.contains(v)).collect();
        for &v in &terms {
            if keep.len() >= limit {
                break;
            }
            keep.insert(v);
        }
        for &v in &terms {
            if !keep.contains(&v) {
                w.h.set_terminal(v, false).unwrap();
                changed = true;
            }
        }
        pinned.extend(keep);
    }
    changed
}

/// Boring edge removal: one pass over the edges, merging faces as edges
/// between two faces without interesting vertices go.
fn boring_edge_removal(w: &mut Work) -> bool {
    let int = interesting(w);
    let fs = faces(w);
    let mut dsu = Dsu((0..fs.len()).collect());
    let flag: Vec<bool> = fs.faces.iter().map(|f| f.vertices.iter().any(|v| int.contains(v))).collect();
    let mut changed = false;
    let edges: Vec<EdgeId> = w.h.edge_ids().collect();
    for e in edges {
        if protected(w, e) {
            continue;
        }
        let (a, b) = fs.faces_of_edge(&w.h, e).unwrap();
        let (ra, rb) = (dsu.find(a), dsu.find(b));
        if ra != rb && !flag[ra] && !flag[rb] {
            delete_edge(w, e);
            dsu.0[ra] = rb;
            changed = true;
        }
    }
    drop_isolated(w, &int);
    changed
}

fn drop_isolated(w: &mut Work, int: &BTreeSet<VertexId>) {
    let lonely: Vec<VertexId> = w.h.vertices().filter(|&v| w.h.degree(v) == 0 && !int.contains(&v)).collect();
    for v in lonely {
        delete_vertex(w, v);
    }
}

/// Private face merging: drop an edge at `x` between two distinct faces
/// whose only interesting vertex is `x`.
fn private_face_merging(w: &mut Work) -> bool {
    let mut changed = false;
    loop {
        let int = interesting(w);
        let fs = faces(w);
        let sets: Vec<Vec<VertexId>> = fs
            .faces
            .iter()
            .map(|f| f.vertices.iter().copied().filter(|v| int.contains(v)).collect())
            .collect();
        let mut dsu = Dsu((0..fs.len()).collect());
        let mut pass = false;
        let edges: Vec<EdgeId> = w.h.edge_ids().collect();
        for e in edges {
            if protected(w, e) {
                continue;
            }
            let (a, b) = fs.faces_of_edge(&w.h, e).unwrap();
            let (ra, rb) = (dsu.find(a), dsu.find(b));
            if ra == rb || sets[ra].len() != 1 || sets[ra] != sets[rb] {
                continue;
            }
            let x = sets[ra][0];
            if !w.h.edge(e).unwrap().has(x) {
                continue;
            }
            delete_edge(w, e);
            dsu.0[ra] = rb;
            pass = true;
        }
        if !pass {
            return changed;
        }
        changed = true;
    }
}

/// Walk from `s` along `e` through uninteresting degree-two vertices.
/// Returns the end vertex, the last edge and the vertices passed.
fn walk(w: &Work, int: &BTreeSet<VertexId>, s: VertexId, e: EdgeId) -> (VertexId, EdgeId, Vec<VertexId>) {
    let mut passed = Vec::new();
    let mut prev = e;
    let mut v = w.h.edge(e).unwrap().other(s);
    while v != s && w.h.degree(v) == 2 && !int.contains(&v) {
        passed.push(v);
        prev = *w.h.incident(v).iter().find(|&&f| f != prev).unwrap();
        v = w.h.edge(prev).unwrap().other(v);
    }
    (v, prev, passed)
}

/// Boring edge contraction: drop uninteresting vertices of degree at most
/// one and hanging cycles, and shorten induced paths with uninteresting
/// interiors to single edges.
fn boring_edge_contraction(w: &mut Work) -> bool {
    let int = interesting(w);
    let inner = |w: &Work, v: VertexId| w.h.has_vertex(v) && w.h.degree(v) == 2 && !int.contains(&v);
    let mut changed = false;
    loop {
        let mut pass = false;
        let low: Vec<VertexId> = w.h.vertices().filter(|&v| w.h.degree(v) <= 1 && !int.contains(&v)).collect();
        for v in low {
            if w.h.has_vertex(v) && w.h.degree(v) <= 1 {
                delete_vertex(w, v);
                pass = true;
            }
        }
        let starts: Vec<VertexId> = w.h.vertices().filter(|&v| inner(w, v)).collect();
        for s in starts {
            if !inner(w, s) {
                continue;
            }
            let inc = [w.h.incident(s)[0], w.h.incident(s)[1]];
            let (a, ea, mut left) = walk(w, &int, s, inc[0]);
            if a == s {
                continue;
            }
            let (b, eb, right) = walk(w, &int, s, inc[1]);
            left.push(s);
            left.extend(right);
            if a == b {
                for &v in &left {
                    delete_vertex(w, v);
                }
            } else {
                for &v in &left {
                    w.h.remove_vertex(v).unwrap();
                    w.rot.as_mut().unwrap().remove_vertex(v);
                }
                w.h.insert_edge(ea, a, b, EdgeKind::Real).unwrap();
                w.rot.as_mut().unwrap().replace_slot(b, eb, &[ea]);
            }
            pass = true;
        }
        if !pass {
            return changed;
        }
        changed = true;
    }
}

/// Rigidize the working graph around the vertices of its minimal
/// separators of size at most two, leaving interesting vertices alone.
/// A degree-two vertex is read as an edge when looking for separators,
/// unless its neighbours are already adjacent.
fn rigidize_work(w: &mut Work, ids: &mut IdGen) -> bool {
    let int = interesting(w);
    let mut g: MultiGraph = w.h.clone();
    let ys: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
    for y in ys {
        let ns: Vec<VertexId> = g.neighbors(y).collect();
        if ns[0] == ns[1] || !g.edges_between(ns[0], ns[1]).is_empty() {
            continue;
        }
        g.remove_vertex(y).unwrap();
        g.add_edge(ns[0], ns[1], EdgeKind::Real).unwrap();
    }
    let u: BTreeSet<VertexId> = separator_vertices(&g).into_iter().filter(|v| !int.contains(v)).collect();
    if u.is_empty() {
        return false;
    }
    let (h, rot) = rigidize_with(&w.h, w.rot.as_ref().unwrap(), &u, ids);
    w.h = h;
    w.rot = Some(rot);
    true
}

fn rigid_view(w: &Work, ids: &mut IdGen) -> Work {
    let mut c = w.clone();
    rigidize_work(&mut c, ids);
    c
}

pub fn kernelize_r_node(ctx: &mut Ctx, t: usize) -> Result<NiceKernel, NoCertificate> {
    let k = ctx.k as usize;
    let probe = Work::new(ctx.tree, ctx.cl, t);
    if slots_of(&probe, ComponentClass::Problematic).len() > k {
        return Err(ctx.no(&probe, Rule::ExitProblematic));
    }
    // rigidization is judged against the node's enhancement before any R rule
    let start = ctx.steps.as_ref().map(|_| probe.materialize(&ctx.kernels));
    let mut w = extended_skeleton(ctx, t);
    let large = w.h.vertex_count() >= 7;
    if large && slots_of(&w, ComponentClass::SemiProblematic).len() > k * k {
        return Err(ctx.no(&w, Rule::ExitSemi));
    }
    if large {
        ctx.apply(&mut w, Rule::Thfr, |w, _| terminal_heavy(w, k as u32));
        let fs = faces(&w);
        let heaviest = fs
            .faces
            .iter()
            .map(|f| f.vertices.iter().filter(|&&v| w.h.is_terminal(v)).count())
            .max()
            .unwrap_or(0);
        if heaviest <= 3 * k + 1 && w.h.terminal_count() > 3 * k * k + k {
            return Err(ctx.no(&w, Rule::ExitTerminals));
        }
    }
    ctx.apply_with(&mut w, Rule::Ber, rigid_view, |w, _| boring_edge_removal(w));
    ctx.apply_with(&mut w, Rule::Pfm, rigid_view, |w, _| private_face_merging(w));
    ctx.apply_with(&mut w, Rule::Bec, rigid_view, |w, _| boring_edge_contraction(w));
    ctx.apply_since(&mut w, Rule::Rigidize, start, rigidize_work);
    for e in slots_of(&w, ComponentClass::SemiProblematic) {
        if w.slots[&e].flags.internal[0] {
            ctx.apply(&mut w, Rule::Rr3, |w, ids| {
                replace_slot(w, ids, e, Gadget::C4);
                true
            });
        }
    }
    if !w.slots.is_empty() {
        ctx.apply(&mut w, Rule::Splice, |_, _| true);
    }
    Ok(ctx.finish(w))
}

/// Whether two faces share at least `n` vertices.
fn shared(faces: &[FaceData], n: usize) -> bool {
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            let c = faces[i].vertices.iter().filter(|v| faces[j].contains(**v)).count();
            if c >= n {
                return true;
            }
        }
    }
    false
}

/// Some three vertices lie on two common faces.
pub fn three_share_two_faces(faces: &[FaceData]) -> bool {
    shared(faces, 3)
}

/// Some four vertices lie on two common faces.
pub fn four_share_two_faces(faces: &[FaceData]) -> bool {
    shared(faces, 4)
}

/// Extended skeleton of every R-node of `tree` with its faces.
pub fn extended_skeletons(tree: &crate::decomposition::SprTree) -> Vec<(MultiGraph, Vec<FaceData>)> {
    let cl = crate::classify::classify_tree(tree);
    let mut ctx = Ctx::new(tree, &cl, 1, IdGen::above(tree));
    let mut out = Vec::new();
    for t in 0..tree.len() {
        if tree.node(t).kind != crate::decomposition::NodeType::R {
            continue;
        }
        let w = extended_skeleton(&mut ctx, t);
        let fs = crate::oracle::face_structure(&w.h, w.rot.as_ref().unwrap()).unwrap();
        out.push((w.h, fs));
    }
    out
}
