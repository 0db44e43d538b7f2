//! Rigidization around a vertex set and separator search.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::embedding::RotationSystem;
use crate::graph::{EdgeId, MultiGraph, VertexId};

use super::IdGen;

/// Articulation points of `g - skip`, searched from one vertex; a graph that
/// falls apart is reported through `connected = false`.
fn articulation_points(g: &MultiGraph, skip: Option<VertexId>) -> (BTreeSet<VertexId>, bool) {
    let mut out = BTreeSet::new();
    let Some(root) = g.vertices().find(|&v| Some(v) != skip) else {
        return (out, true);
    };
    let mut disc: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut low: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
    disc.insert(root, 0);
    low.insert(root, 0);
    let mut time = 1;
    let mut root_children = 0;
    while let Some(&mut (v, pe, ref mut i)) = stack.last_mut() {
        let inc = g.incident(v);
        if *i < inc.len() {
            let e = inc[*i];
            *i += 1;
            if Some(e) == pe {
                continue;
            }
            let w = g.edge(e).unwrap().other(v);
            if Some(w) == skip {
                continue;
            }
            match disc.get(&w) {
                None => {
                    disc.insert(w, time);
                    low.insert(w, time);
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, Some(e), 0));
                }
                Some(&dw) => {
                    if dw < low[&v] {
                        low.insert(v, dw);
                    }
                }
            }
        } else {
            stack.pop();
            if let Some(&(u, _, _)) = stack.last() {
                let lv = low[&v];
                if lv < low[&u] {
                    low.insert(u, lv);
                }
                if u != root && lv >= disc[&u] {
                    out.insert(u);
                }
            }
        }
    }
    if root_children >= 2 {
        out.insert(root);
    }
    let expected = g.vertex_count() - skip.map_or(0, |s| g.has_vertex(s) as usize);
    (out, disc.len() == expected)
}

/// Vertices in a minimal separator of size at most two of a connected
/// graph: cut vertices, and both members of separating pairs in which
/// neither vertex separates alone.
pub fn separator_vertices(g: &MultiGraph) -> BTreeSet<VertexId> {
    let (cuts, _) = articulation_points(g, None);
    let mut out = cuts.clone();
    if g.vertex_count() <= 3 {
        return out;
    }
    for v in g.vertices() {
        if cuts.contains(&v) {
            continue;
        }
        let (aps, _) = articulation_points(g, Some(v));
        for w in aps {
            if !cuts.contains(&w) {
                out.insert(v);
                out.insert(w);
            }
        }
    }
    out
}

/// Whether no set of at most two vertices disconnects `g`.
pub fn two_separator_free(g: &MultiGraph) -> bool {
    let (cuts, connected) = articulation_points(g, None);
    if !connected || !cuts.is_empty() {
        return false;
    }
    if g.vertex_count() <= 3 {
        return true;
    }
    g.vertices().all(|v| {
        let (aps, ok) = articulation_points(g, Some(v));
        ok && aps.is_empty()
    })
}

/// Split `e = x y` next to `x`; returns the new vertex and the edge `x s`.
fn split_at(h: &mut MultiGraph, r: &mut RotationSystem, ids: &mut IdGen, e: EdgeId, x: VertexId) -> (VertexId, EdgeId) {
    let ed = h.remove_edge(e).unwrap();
    let y = ed.other(x);
    let s = ids.vertex();
    h.insert_vertex(s).unwrap();
    let near = ids.edge();
    let far = ids.edge();
    h.insert_edge(near, x, s, ed.kind).unwrap();
    h.insert_edge(far, s, y, ed.kind).unwrap();
    r.replace_slot(x, e, &[near]);
    r.replace_slot(y, e, &[far]);
    r.set_rotation(s, vec![near, far]);
    (s, near)
}

/// Rigidization of the embedded graph `(g, rot)` around `u`: every edge at
/// `u` gets two parallel copies next to it, each of the three is subdivided
/// next to its endpoints in `u`, and the subdivision vertices around each
/// vertex of `u` are joined into a cycle in rotation order.
pub fn rigidize_with(
    g: &MultiGraph,
    rot: &RotationSystem,
    u: &BTreeSet<VertexId>,
    ids: &mut IdGen,
) -> (MultiGraph, RotationSystem) {
    let mut h = g.clone();
    let mut r = rot.clone();
    if u.is_empty() {
        return (h, r);
    }
    let touched: Vec<EdgeId> = g.edges().filter(|(_, ed)| u.contains(&ed.u) || u.contains(&ed.v)).map(|(e, _)| e).collect();
    for e in touched {
        let ed = h.edge(e).unwrap();
        let c1 = ids.edge();
        let c2 = ids.edge();
        h.insert_edge(c1, ed.u, ed.v, ed.kind).unwrap();
        h.insert_edge(c2, ed.u, ed.v, ed.kind).unwrap();
        r.replace_slot(ed.u, e, &[e, c1, c2]);
        r.replace_slot(ed.v, e, &[c2, c1, e]);
        for c in [e, c1, c2] {
            let mut cur = c;
            for x in [ed.u, ed.v] {
                if u.contains(&x) {
                    let (s, near) = split_at(&mut h, &mut r, ids, cur, x);
                    // the remaining far part carries the other endpoint
                    cur = r.rotation(s).iter().copied().find(|&f| f != near).unwrap();
                }
            }
        }
    }
    for &x in u {
        let spokes: Vec<EdgeId> = r.rotation(x).to_vec();
        let subs: Vec<VertexId> = spokes.iter().map(|&e| h.edge(e).unwrap().other(x)).collect();
        let d = subs.len();
        let ring: Vec<EdgeId> = (0..d)
            .map(|i| {
                let z = ids.edge();
                h.insert_edge(z, subs[i], subs[(i + 1) % d], crate::graph::EdgeKind::Real).unwrap();
                z
            })
            .collect();
        for i in 0..d {
            let s = subs[i];
            let outer = r.rotation(s).iter().copied().find(|&f| f != spokes[i]).unwrap();
            r.set_rotation(s, vec![outer, ring[i], spokes[i], ring[(i + d - 1) % d]]);
        }
    }
    (h, r)
}

/// `rigidize_with` drawing fresh ids above those of `g`.
pub fn rigidize(g: &MultiGraph, rot: &RotationSystem, u: &BTreeSet<VertexId>) -> (MultiGraph, RotationSystem) {
    let mut ids = IdGen::new(g.next_vertex_id(), g.next_edge_id());
    rigidize_with(g, rot, u, &mut ids)
}
