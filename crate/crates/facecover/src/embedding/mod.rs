//! Combinatorial embeddings: rotation systems, face tracing, planarity and flips.

mod lr;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeId, MultiGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingError {
    #[error("rotation at vertex {0} does not match its incident edges")]
    InvalidRotation(VertexId),
    #[error("rotation system is not planar")]
    NonPlanar,
    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("vertex {0} attaches the flipped part to the rest of the graph")]
    BadAttachment(VertexId),
}

/// Directed traversal of an edge starting at `tail`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub tail: VertexId,
}

/// Clockwise cyclic order of incident edges around every vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    rot: BTreeMap<VertexId, Vec<EdgeId>>,
}

impl RotationSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        self.rot.get(&v).map(|r| r.as_slice()).unwrap_or(&[])
    }

    pub fn set_rotation(&mut self, v: VertexId, order: Vec<EdgeId>) {
        self.rot.insert(v, order);
    }

    pub fn remove_vertex(&mut self, v: VertexId) {
        self.rot.remove(&v);
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rot.keys().copied()
    }

    /// Every rotation reversed: the mirror embedding.
    pub fn mirrored(&self) -> Self {
        let rot = self
            .rot
            .iter()
            .map(|(&v, r)| {
                let mut r = r.clone();
                r.reverse();
                (v, r)
            })
            .collect();
        RotationSystem { rot }
    }

    /// Checks that each edge has exactly one slot at each endpoint.
    pub fn validate(&self, g: &MultiGraph) -> Result<(), EmbeddingError> {
        for v in g.vertices() {
            let mut a: Vec<EdgeId> = self.rotation(v).to_vec();
            let mut b: Vec<EdgeId> = g.incident(v).to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a != b || (!self.rot.contains_key(&v) && !b.is_empty()) {
                return Err(EmbeddingError::InvalidRotation(v));
            }
        }
        if let Some(&v) = self.rot.keys().find(|&&v| !g.has_vertex(v)) {
            return Err(EmbeddingError::InvalidRotation(v));
        }
        Ok(())
    }

    /// Replace the slot of `old` at `v` by `new` in place.
    pub fn replace_slot(&mut self, v: VertexId, old: EdgeId, new: &[EdgeId]) {
        let r = self.rot.get_mut(&v).expect("vertex without rotation");
        let pos = r.iter().position(|&e| e == old).expect("edge not in rotation");
        r.splice(pos..pos + 1, new.iter().copied());
    }

    /// Insert `new` directly after `after` in the rotation at `v`.
    pub fn insert_after(&mut self, v: VertexId, after: EdgeId, new: EdgeId) {
        let r = self.rot.entry(v).or_default();
        match r.iter().position(|&e| e == after) {
            Some(pos) => r.insert(pos + 1, new),
            None => r.push(new),
        }
    }

    pub fn remove_slot(&mut self, v: VertexId, e: EdgeId) {
        if let Some(r) = self.rot.get_mut(&v) {
            r.retain(|&f| f != e);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Boundary walk; empty for the face around an isolated vertex.
    pub darts: Vec<Dart>,
    /// Sorted distinct boundary vertices.
    pub vertices: Vec<VertexId>,
}

impl Face {
    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.darts.iter().any(|d| d.edge == e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    pub outer: Option<usize>,
    dart_face: BTreeMap<Dart, usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face_of(&self, d: Dart) -> Option<usize> {
        self.dart_face.get(&d).copied()
    }

    /// Faces on the two sides of `e` (equal if `e` is a bridge).
    pub fn faces_of_edge(&self, g: &MultiGraph, e: EdgeId) -> Option<(usize, usize)> {
        let ed = g.edge(e).ok()?;
        let a = self.face_of(Dart { edge: e, tail: ed.u })?;
        let b = self.face_of(Dart { edge: e, tail: ed.v })?;
        Some((a, b))
    }

    /// Multiset of boundary vertex sets, sorted.
    pub fn vertex_multiset(&self) -> Vec<Vec<VertexId>> {
        let mut m: Vec<Vec<VertexId>> = self.faces.iter().map(|f| f.vertices.clone()).collect();
        m.sort();
        m
    }
}

fn positions(rot: &RotationSystem) -> BTreeMap<(VertexId, EdgeId), usize> {
    let mut pos = BTreeMap::new();
    for (&v, r) in &rot.rot {
        for (i, &e) in r.iter().enumerate() {
            pos.insert((v, e), i);
        }
    }
    pos
}

/// Trace all face boundary walks. After traversing a dart into `v`, the walk
/// continues with the clockwise successor of the arriving edge at `v`.
/// Faces are numbered in order of their smallest dart.
pub fn trace_faces(g: &MultiGraph, rot: &RotationSystem) -> Result<FaceSet, EmbeddingError> {
    rot.validate(g)?;
    let pos = positions(rot);
    let mut dart_face = BTreeMap::new();
    let mut faces = Vec::new();
    for (e, ed) in g.edges() {
        for tail in [ed.u, ed.v] {
            let start = Dart { edge: e, tail };
            if dart_face.contains_key(&start) {
                continue;
            }
            let idx = faces.len();
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                dart_face.insert(d, idx);
                darts.push(d);
                let head = g.edge(d.edge).unwrap().other(d.tail);
                let r = rot.rotation(head);
                let p = pos[&(head, d.edge)];
                let next = r[(p + 1) % r.len()];
                d = Dart { edge: next, tail: head };
                if d == start {
                    break;
                }
            }
            let mut vertices: Vec<VertexId> = darts.iter().map(|d| d.tail).collect();
            vertices.sort_unstable();
            vertices.dedup();
            faces.push(Face { darts, vertices });
        }
    }
    for v in g.vertices() {
        if g.degree(v) == 0 {
            faces.push(Face {
                darts: Vec::new(),
                vertices: vec![v],
            });
        }
    }
    Ok(FaceSet {
        faces,
        outer: None,
        dart_face,
    })
}

/// Euler check per connected component: |V| - |E| + |F| = 2.
pub fn euler_planar(g: &MultiGraph, faces: &FaceSet) -> bool {
    let comps = g.connected_components();
    let mut comp_of = BTreeMap::new();
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of.insert(v, i);
        }
    }
    let mut count = vec![0i64; comps.len()];
    for (i, c) in comps.iter().enumerate() {
        count[i] += c.len() as i64;
    }
    for (_, ed) in g.edges() {
        count[comp_of[&ed.u]] -= 1;
    }
    for f in &faces.faces {
        count[comp_of[&f.vertices[0]]] += 1;
    }
    count.iter().all(|&c| c == 2)
}

pub fn is_planar_rotation(g: &MultiGraph, rot: &RotationSystem) -> bool {
    match trace_faces(g, rot) {
        Ok(f) => euler_planar(g, &f),
        Err(_) => false,
    }
}

/// A planar rotation system for `g`, or `None` if `g` is not planar.
/// Parallel edges are nested next to each other.
pub fn planar_embedding(g: &MultiGraph) -> Option<RotationSystem> {
    let verts: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut bundles: BTreeMap<(usize, usize), Vec<EdgeId>> = BTreeMap::new();
    for (e, ed) in g.edges() {
        let (a, b) = (index[&ed.u], index[&ed.v]);
        bundles.entry((a.min(b), a.max(b))).or_default().push(e);
    }
    let pairs: Vec<(usize, usize)> = bundles.keys().copied().collect();
    let cw = lr::lr_embed(verts.len(), &pairs)?;
    let mut rot = RotationSystem::new();
    for (i, &v) in verts.iter().enumerate() {
        let mut order = Vec::with_capacity(g.degree(v));
        for &s in &cw[i] {
            let pair = pairs[s];
            let bundle = &bundles[&pair];
            if pair.0 == i {
                order.extend(bundle.iter().copied());
            } else {
                order.extend(bundle.iter().rev().copied());
            }
        }
        rot.set_rotation(v, order);
    }
    debug_assert!(is_planar_rotation(g, &rot));
    Some(rot)
}

pub fn is_planar(g: &MultiGraph) -> bool {
    planar_embedding(g).is_some()
}

/// Reverse the embedding of the subgraph formed by `edges`, which may touch
/// the rest of the graph only at `corners`. Interior rotations are reversed;
/// at each corner the slots of `edges` are reversed in place.
pub fn flip_subembedding(
    g: &MultiGraph,
    rot: &RotationSystem,
    edges: &BTreeSet<EdgeId>,
    corners: (VertexId, VertexId),
) -> Result<RotationSystem, EmbeddingError> {
    let mut verts = BTreeSet::new();
    for &e in edges {
        let ed = g.edge(e).map_err(|_| EmbeddingError::InvalidRotation(corners.0))?;
        verts.insert(ed.u);
        verts.insert(ed.v);
    }
    let mut out = rot.clone();
    for &v in &verts {
        let r = rot.rotation(v);
        if v == corners.0 || v == corners.1 {
            let slots: Vec<usize> = (0..r.len()).filter(|&i| edges.contains(&r[i])).collect();
            let mut nr = r.to_vec();
            for (j, &i) in slots.iter().enumerate() {
                nr[i] = r[slots[slots.len() - 1 - j]];
            }
            out.set_rotation(v, nr);
        } else {
            if r.iter().any(|e| !edges.contains(e)) {
                return Err(EmbeddingError::BadAttachment(v));
            }
            let mut nr = r.to_vec();
            nr.reverse();
            out.set_rotation(v, nr);
        }
    }
    Ok(out)
}

fn factorial_product(g: &MultiGraph) -> u128 {
    let mut total: u128 = 1;
    for v in g.vertices() {
        let d = g.degree(v);
        for i in 2..d.max(1) {
            total = total.saturating_mul(i as u128);
        }
    }
    total
}

fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Stream of all planar rotation systems of `g`, each exactly once.
/// Every rotation starts with the smallest incident edge id.
pub struct PlanarRotations<'a> {
    g: &'a MultiGraph,
    verts: Vec<VertexId>,
    /// Per vertex: dense index of its smallest edge, then the permuted rest.
    first: Vec<Option<usize>>,
    tails: Vec<Vec<usize>>,
    done: bool,
    ids: Vec<EdgeId>,
    /// First endpoint of each edge, as a position in `verts`.
    ends: Vec<(usize, usize)>,
    /// Faces a planar rotation has: `m - n + 2` per component with edges.
    faces: usize,
    succ: Vec<usize>,
    seen: Vec<bool>,
}

impl PlanarRotations<'_> {
    fn dart(&self, e: usize, tail: usize) -> usize {
        2 * e + (self.ends[e].0 != tail) as usize
    }

    /// Number of face walks of the current rotation.
    fn face_count(&mut self) -> usize {
        for v in 0..self.verts.len() {
            let Some(first) = self.first[v] else { continue };
            let d = self.tails[v].len() + 1;
            let at = |j: usize| if j == 0 { first } else { self.tails[v][j - 1] };
            for j in 0..d {
                let (e, f) = (at(j), at((j + 1) % d));
                let (a, b) = self.ends[e];
                let other = if a == v { b } else { a };
                let d_in = self.dart(e, other);
                self.succ[d_in] = self.dart(f, v);
            }
        }
        self.seen.iter_mut().for_each(|x| *x = false);
        let mut count = 0;
        for d in 0..self.succ.len() {
            if self.seen[d] {
                continue;
            }
            count += 1;
            let mut x = d;
            while !self.seen[x] {
                self.seen[x] = true;
                x = self.succ[x];
            }
        }
        count
    }
}

impl<'a> Iterator for PlanarRotations<'a> {
    type Item = RotationSystem;

    fn next(&mut self) -> Option<RotationSystem> {
        while !self.done {
            let quick = self.face_count() == self.faces;
            let rot = quick.then(|| {
                let mut rot = RotationSystem::new();
                for (i, &v) in self.verts.iter().enumerate() {
                    let order = self.first[i].iter().chain(&self.tails[i]).map(|&e| self.ids[e]).collect();
                    rot.set_rotation(v, order);
                }
                rot
            });
            let mut advanced = false;
            for t in self.tails.iter_mut() {
                if next_permutation(t) {
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                self.done = true;
            }
            if let Some(rot) = rot {
                if is_planar_rotation(self.g, &rot) {
                    return Some(rot);
                }
            }
        }
        None
    }
}

/// Enumerate planar rotation systems, refusing when the number of candidate
/// rotation systems exceeds `budget`.
pub fn enumerate_planar_rotations(g: &MultiGraph, budget: u128) -> Result<PlanarRotations<'_>, EmbeddingError> {
    let needed = factorial_product(g);
    if needed > budget {
        return Err(EmbeddingError::BudgetExceeded { needed, budget });
    }
    let verts: Vec<VertexId> = g.vertices().collect();
    let pos: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    let index: BTreeMap<EdgeId, usize> = ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let ends = g.edges().map(|(_, ed)| (pos[&ed.u], pos[&ed.v])).collect();
    let mut first = Vec::with_capacity(verts.len());
    let mut tails = Vec::with_capacity(verts.len());
    for &v in &verts {
        let mut inc: Vec<usize> = g.incident(v).iter().map(|e| index[e]).collect();
        inc.sort_unstable();
        first.push(if inc.is_empty() { None } else { Some(inc.remove(0)) });
        tails.push(inc);
    }
    let with_edges = g.connected_components().iter().filter(|c| c.iter().any(|&v| g.degree(v) > 0)).count();
    let isolated = g.vertices().filter(|&v| g.degree(v) == 0).count();
    let faces = (g.edge_count() + 2 * with_edges + isolated).saturating_sub(g.vertex_count());
    Ok(PlanarRotations {
        g,
        verts,
        first,
        tails,
        done: false,
        ids,
        ends,
        faces,
        succ: vec![0; 2 * g.edge_count()],
        seen: vec![false; 2 * g.edge_count()],
    })
}

pub fn rotation_count(g: &MultiGraph) -> u128 {
    factorial_product(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeKind;

    fn k4() -> MultiGraph {
        MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn cycle(n: u32) -> MultiGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::from_edges(n, &edges)
    }

    #[test]
    fn c4_has_two_faces_with_all_vertices() {
        let g = cycle(4);
        let rot = planar_embedding(&g).unwrap();
        let f = trace_faces(&g, &rot).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.faces.iter().all(|f| f.vertices == vec![0, 1, 2, 3]));
    }

    #[test]
    fn k4_planar_rotation_has_four_triangles() {
        let g = k4();
        let rot = planar_embedding(&g).unwrap();
        let f = trace_faces(&g, &rot).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.faces.iter().all(|f| f.vertices.len() == 3));
    }

    #[test]
    fn k4_with_transposed_rotation_is_not_planar() {
        let g = k4();
        let rot = planar_embedding(&g).unwrap();
        let mut bad = rot.clone();
        let mut r = rot.rotation(0).to_vec();
        r.swap(0, 1);
        bad.set_rotation(0, r);
        let f = trace_faces(&g, &bad).unwrap();
        assert_eq!(f.len(), 2);
        assert!(!euler_planar(&g, &f));
    }

    #[test]
    fn k5_and_k33_are_not_planar() {
        let mut e = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                e.push((i, j));
            }
        }
        assert!(planar_embedding(&MultiGraph::from_edges(5, &e)).is_none());
        let mut e = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                e.push((i, j));
            }
        }
        assert!(planar_embedding(&MultiGraph::from_edges(6, &e)).is_none());
    }

    #[test]
    fn wheel_w4_has_five_faces() {
        let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]);
        let rot = planar_embedding(&g).unwrap();
        assert_eq!(trace_faces(&g, &rot).unwrap().len(), 5);
    }

    #[test]
    fn parallel_edges_embed_planar() {
        let mut g = cycle(3);
        g.add_edge(0, 1, EdgeKind::Real).unwrap();
        g.add_edge(0, 1, EdgeKind::Virtual).unwrap();
        let rot = planar_embedding(&g).unwrap();
        let f = trace_faces(&g, &rot).unwrap();
        assert!(euler_planar(&g, &f));
        assert_eq!(f.len(), 4);
    }

    #[test]
    fn isolated_vertex_has_one_face() {
        let g = MultiGraph::from_edges(1, &[]);
        let rot = planar_embedding(&g).unwrap();
        let f = trace_faces(&g, &rot).unwrap();
        assert_eq!(f.len(), 1);
        assert!(euler_planar(&g, &f));
    }

    #[test]
    fn flip_is_an_involution_and_keeps_theta_faces() {
        // theta graph: paths 0-2-1, 0-3-1, 0-4-1
        let g = MultiGraph::from_edges(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]);
        let rot = planar_embedding(&g).unwrap();
        let sub: BTreeSet<EdgeId> = [2, 3].into_iter().collect();
        let flipped = flip_subembedding(&g, &rot, &sub, (0, 1)).unwrap();
        assert!(is_planar_rotation(&g, &flipped));
        let a = trace_faces(&g, &rot).unwrap().vertex_multiset();
        let b = trace_faces(&g, &flipped).unwrap().vertex_multiset();
        assert_eq!(a, b);
        assert_eq!(flip_subembedding(&g, &flipped, &sub, (0, 1)).unwrap(), rot);
    }

    #[test]
    fn flip_rejects_leaking_subgraph() {
        let g = k4();
        let rot = planar_embedding(&g).unwrap();
        let sub: BTreeSet<EdgeId> = [0, 3].into_iter().collect();
        assert!(flip_subembedding(&g, &rot, &sub, (0, 2)).is_err());
    }

    #[test]
    fn c4_has_one_rotation() {
        let g = cycle(4);
        assert_eq!(enumerate_planar_rotations(&g, 10).unwrap().count(), 1);
    }

    #[test]
    fn k4_rotations_all_satisfy_euler() {
        let g = k4();
        let rots: Vec<_> = enumerate_planar_rotations(&g, 1000).unwrap().collect();
        assert_eq!(rots.len(), 2);
        for r in &rots {
            assert_eq!(trace_faces(&g, r).unwrap().len(), 4);
        }
    }

    #[test]
    fn degree_six_vertex_exceeds_small_budget() {
        let edges: Vec<_> = (1..7).map(|i| (0, i)).collect();
        let g = MultiGraph::from_edges(7, &edges);
        assert!(matches!(
            enumerate_planar_rotations(&g, 100),
            Err(EmbeddingError::BudgetExceeded { needed: 120, budget: 100 })
        ));
    }
}
