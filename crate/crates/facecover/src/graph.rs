//! Labeled multigraph with stable vertex and edge ids.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

pub type VertexId = u32;
pub type EdgeId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Real,
    Virtual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn has(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// Endpoints with the smaller id first.
    pub fn sorted(&self) -> (VertexId, VertexId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("vertex {0} already exists")]
    DuplicateVertex(VertexId),
    #[error("edge {0} already exists")]
    DuplicateEdge(EdgeId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct VertexData {
    terminal: bool,
    incident: Vec<EdgeId>,
}

/// Multigraph with parallel edges, no self-loops, and terminal marks.
///
/// Ids handed out by [`MultiGraph::add_vertex`] and [`MultiGraph::add_edge`]
/// are strictly increasing over the lifetime of the graph, so a removed id is
/// never handed out again.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    vertices: BTreeMap<VertexId, VertexData>,
    edges: BTreeMap<EdgeId, Edge>,
    next_vertex: VertexId,
    next_edge: EdgeId,
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` with the given real edges and no terminals.
    pub fn from_edges(n: u32, edges: &[(VertexId, VertexId)]) -> Self {
        let mut g = Self::new();
        for v in 0..n {
            g.insert_vertex(v).unwrap();
        }
        for &(u, v) in edges {
            g.add_edge(u, v, EdgeKind::Real).unwrap();
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn next_vertex_id(&self) -> VertexId {
        self.next_vertex
    }

    pub fn next_edge_id(&self) -> EdgeId {
        self.next_edge
    }

    /// Raise the id counters so fresh ids are at least the given values.
    pub fn reserve_ids(&mut self, vertex: VertexId, edge: EdgeId) {
        self.next_vertex = self.next_vertex.max(vertex);
        self.next_edge = self.next_edge.max(edge);
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let v = self.next_vertex;
        self.insert_vertex(v).unwrap();
        v
    }

    pub fn insert_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        if self.vertices.contains_key(&v) {
            return Err(GraphError::DuplicateVertex(v));
        }
        self.vertices.insert(v, VertexData::default());
        self.next_vertex = self.next_vertex.max(v + 1);
        Ok(())
    }

    pub fn ensure_vertex(&mut self, v: VertexId) {
        if !self.has_vertex(v) {
            self.insert_vertex(v).unwrap();
        }
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, kind: EdgeKind) -> Result<EdgeId, GraphError> {
        let e = self.next_edge;
        self.insert_edge(e, u, v, kind)?;
        Ok(e)
    }

    pub fn insert_edge(&mut self, e: EdgeId, u: VertexId, v: VertexId, kind: EdgeKind) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.edges.contains_key(&e) {
            return Err(GraphError::DuplicateEdge(e));
        }
        for x in [u, v] {
            if !self.vertices.contains_key(&x) {
                return Err(GraphError::UnknownVertex(x));
            }
        }
        self.edges.insert(e, Edge { u, v, kind });
        self.vertices.get_mut(&u).unwrap().incident.push(e);
        self.vertices.get_mut(&v).unwrap().incident.push(e);
        self.next_edge = self.next_edge.max(e + 1);
        Ok(())
    }

    pub fn edge(&self, e: EdgeId) -> Result<Edge, GraphError> {
        self.edges.get(&e).copied().ok_or(GraphError::UnknownEdge(e))
    }

    pub fn set_edge_kind(&mut self, e: EdgeId, kind: EdgeKind) -> Result<(), GraphError> {
        let ed = self.edges.get_mut(&e).ok_or(GraphError::UnknownEdge(e))?;
        ed.kind = kind;
        Ok(())
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<Edge, GraphError> {
        let ed = self.edges.remove(&e).ok_or(GraphError::UnknownEdge(e))?;
        for x in [ed.u, ed.v] {
            let inc = &mut self.vertices.get_mut(&x).unwrap().incident;
            if let Some(pos) = inc.iter().position(|&f| f == e) {
                inc.remove(pos);
            }
        }
        Ok(ed)
    }

    /// Remove a vertex together with its incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        let inc = self
            .vertices
            .get(&v)
            .ok_or(GraphError::UnknownVertex(v))?
            .incident
            .clone();
        for e in inc {
            self.remove_edge(e)?;
        }
        self.vertices.remove(&v);
        Ok(())
    }

    pub fn is_terminal(&self, v: VertexId) -> bool {
        self.vertices.get(&v).is_some_and(|d| d.terminal)
    }

    pub fn set_terminal(&mut self, v: VertexId, terminal: bool) -> Result<(), GraphError> {
        let d = self.vertices.get_mut(&v).ok_or(GraphError::UnknownVertex(v))?;
        d.terminal = terminal;
        Ok(())
    }

    pub fn terminals(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().filter(|(_, d)| d.terminal).map(|(&v, _)| v)
    }

    pub fn terminal_set(&self) -> BTreeSet<VertexId> {
        self.terminals().collect()
    }

    pub fn terminal_count(&self) -> usize {
        self.vertices.values().filter(|d| d.terminal).count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, Edge)> + '_ {
        self.edges.iter().map(|(&e, &ed)| (e, ed))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    /// Incident edge ids of `v` in insertion order.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        self.vertices.get(&v).map(|d| d.incident.as_slice()).unwrap_or(&[])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident(v).len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incident(v).iter().map(move |&e| self.edges[&e].other(v))
    }

    /// Edge ids joining `u` and `v`.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.incident(u)
            .iter()
            .copied()
            .filter(|e| self.edges[e].other(u) == v)
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.values().all(|ed| seen.insert(ed.sorted()))
    }

    pub fn virtual_edge_count(&self) -> usize {
        self.edges.values().filter(|e| e.kind == EdgeKind::Virtual).count()
    }

    /// Contract `e`, merging its endpoints into the one with the smaller id.
    /// Edges parallel to `e` become loops and are dropped; the merged vertex is
    /// a terminal iff either endpoint was. Returns the surviving vertex.
    pub fn contract_edge(&mut self, e: EdgeId) -> Result<VertexId, GraphError> {
        let ed = self.edge(e)?;
        let (keep, gone) = ed.sorted();
        let term = self.is_terminal(keep) || self.is_terminal(gone);
        let inc = self.vertices[&gone].incident.clone();
        for f in inc {
            let fe = self.remove_edge(f)?;
            let other = fe.other(gone);
            if other != keep {
                self.insert_edge(f, keep, other, fe.kind)?;
            }
        }
        self.vertices.remove(&gone);
        self.set_terminal(keep, term)?;
        Ok(keep)
    }

    /// Replace `e` by a path of length two through a fresh vertex.
    /// Returns the new vertex; the two new edges inherit the kind of `e`.
    pub fn subdivide_edge(&mut self, e: EdgeId, make_terminal: bool) -> Result<VertexId, GraphError> {
        let ed = self.remove_edge(e)?;
        let x = self.add_vertex();
        self.set_terminal(x, make_terminal)?;
        self.add_edge(ed.u, x, ed.kind)?;
        self.add_edge(x, ed.v, ed.kind)?;
        Ok(x)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for s in self.vertices() {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = alloc::vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.neighbors(x) {
                    if seen.insert(y) {
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Subgraph induced by `vs`, keeping ids, marks and edge ids.
    pub fn induced_subgraph(&self, vs: &[VertexId]) -> MultiGraph {
        let set: BTreeSet<VertexId> = vs.iter().copied().collect();
        let mut g = MultiGraph::new();
        for &v in &set {
            g.insert_vertex(v).unwrap();
            g.set_terminal(v, self.is_terminal(v)).unwrap();
        }
        for (e, ed) in self.edges() {
            if set.contains(&ed.u) && set.contains(&ed.v) {
                g.insert_edge(e, ed.u, ed.v, ed.kind).unwrap();
            }
        }
        g.reserve_ids(self.next_vertex, self.next_edge);
        g
    }

    /// Subgraph formed by the given edges and their endpoints.
    pub fn edge_subgraph(&self, es: &[EdgeId]) -> MultiGraph {
        let mut g = MultiGraph::new();
        for &e in es {
            let ed = self.edges[&e];
            for x in [ed.u, ed.v] {
                if !g.has_vertex(x) {
                    g.insert_vertex(x).unwrap();
                    g.set_terminal(x, self.is_terminal(x)).unwrap();
                }
            }
            g.insert_edge(e, ed.u, ed.v, ed.kind).unwrap();
        }
        g.reserve_ids(self.next_vertex, self.next_edge);
        g
    }

    /// Multiset of sorted endpoint pairs, for structural comparisons.
    pub fn edge_multiset(&self) -> Vec<(VertexId, VertexId)> {
        let mut v: Vec<_> = self.edges.values().map(|e| e.sorted()).collect();
        v.sort_unstable();
        v
    }

    /// Copy of the graph with vertices renumbered `0..n` in id order and
    /// edges renumbered `0..m` in id order. Returns the graph and the old ids.
    pub fn compacted(&self) -> (MultiGraph, Vec<VertexId>) {
        let old: Vec<VertexId> = self.vertices().collect();
        let index: BTreeMap<VertexId, VertexId> =
            old.iter().enumerate().map(|(i, &v)| (v, i as VertexId)).collect();
        let mut g = MultiGraph::new();
        for (i, &v) in old.iter().enumerate() {
            g.insert_vertex(i as VertexId).unwrap();
            g.set_terminal(i as VertexId, self.is_terminal(v)).unwrap();
        }
        for (_, ed) in self.edges() {
            g.add_edge(index[&ed.u], index[&ed.v], ed.kind).unwrap();
        }
        (g, old)
    }
}

/// Problem instance: a simple planar graph with terminal marks and budget `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: MultiGraph,
    pub k: u32,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MultiGraph {
        MultiGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn contract_triangle_edge_gives_parallel_pair() {
        let mut g = triangle();
        let v = g.contract_edge(0).unwrap();
        assert_eq!(v, 0);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_multiset(), alloc::vec![(0, 2), (0, 2)]);
    }

    #[test]
    fn contract_path_edge_gives_single_edge() {
        let mut g = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]);
        g.contract_edge(0).unwrap();
        assert_eq!(g.edge_multiset(), alloc::vec![(0, 2)]);
    }

    #[test]
    fn contract_merges_terminal_marks_into_smaller_id() {
        let mut g = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]);
        g.set_terminal(1, true).unwrap();
        let v = g.contract_edge(0).unwrap();
        assert!(g.is_terminal(v));
        assert!(!g.has_vertex(1));
    }

    #[test]
    fn contract_drops_parallel_copies() {
        let mut g = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]);
        g.contract_edge(0).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn subdivide_with_terminal() {
        let mut g = MultiGraph::from_edges(2, &[(0, 1)]);
        let t = g.subdivide_edge(0, true).unwrap();
        assert!(g.is_terminal(t));
        assert_eq!(g.degree(t), 2);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn subdivide_twice_gives_p4() {
        let mut g = MultiGraph::from_edges(2, &[(0, 1)]);
        g.subdivide_edge(0, false).unwrap();
        let e = g.edge_ids().next().unwrap();
        g.subdivide_edge(e, false).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 3));
        assert_eq!(g.terminal_count(), 0);
    }

    #[test]
    fn ids_are_not_reused() {
        let mut g = MultiGraph::from_edges(2, &[(0, 1)]);
        g.remove_vertex(1).unwrap();
        assert_eq!(g.add_vertex(), 2);
        let e = g.add_edge(0, 2, EdgeKind::Real).unwrap();
        assert_eq!(e, 1);
    }

    #[test]
    fn unknown_ids_are_errors() {
        let mut g = triangle();
        assert_eq!(g.contract_edge(9), Err(GraphError::UnknownEdge(9)));
        assert_eq!(g.subdivide_edge(9, false), Err(GraphError::UnknownEdge(9)));
        assert_eq!(g.add_edge(0, 0, EdgeKind::Real), Err(GraphError::SelfLoop(0)));
    }

    #[test]
    fn components_of_two_edges() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(g.connected_components(), alloc::vec![alloc::vec![0, 1], alloc::vec![2, 3]]);
    }
}
