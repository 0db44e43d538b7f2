//! Block-cut trees and SPR-trees.

mod naive;
mod triconnected;

pub use naive::triconnected_components_naive;
pub use triconnected::{triconnected_components, CompKind, TricComp, TricResult};

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::embedding::{planar_embedding, RotationSystem};
use crate::graph::{EdgeId, EdgeKind, MultiGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("graph needs at least two edges")]
    TooSmall,
    #[error("graph is not planar")]
    NonPlanar,
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("enumeration needs {needed} choices, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
}

/// Blocks and cut vertices of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCutTree {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<VertexId>,
}

impl BlockCutTree {
    /// Blocks containing `v`.
    pub fn blocks_of(&self, v: VertexId) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b].vertices.binary_search(&v).is_ok())
            .collect()
    }

    pub fn is_cut_vertex(&self, v: VertexId) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

/// Biconnected blocks of a connected graph, by iterative DFS with an edge
/// stack. A single vertex without edges forms one block.
pub fn block_cut_tree(g: &MultiGraph) -> Result<BlockCutTree, DecompError> {
    if !g.is_connected() {
        return Err(DecompError::NotConnected);
    }
    let Some(root) = g.vertices().next() else {
        return Ok(BlockCutTree {
            blocks: Vec::new(),
            cut_vertices: Vec::new(),
        });
    };
    if g.edge_count() == 0 {
        return Ok(BlockCutTree {
            blocks: vec![Block {
                edges: Vec::new(),
                vertices: vec![root],
            }],
            cut_vertices: Vec::new(),
        });
    }
    let mut disc: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut low: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut estack: Vec<EdgeId> = Vec::new();
    let mut blocks = Vec::new();
    let mut cuts = BTreeSet::new();
    // frame: vertex, edge used to enter, next incident index
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
            match disc.get(&w) {
                None => {
                    estack.push(e);
                    disc.insert(w, time);
                    low.insert(w, time);
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, Some(e), 0));
                }
                Some(&dw) => {
                    if dw < disc[&v] {
                        estack.push(e);
                        if dw < low[&v] {
                            low.insert(v, dw);
                        }
                    }
                }
            }
        } else {
            stack.pop();
            if let Some(&(u, _, _)) = stack.last() {
                let lw = low[&v];
                if lw < low[&u] {
                    low.insert(u, lw);
                }
                if lw >= disc[&u] {
                    if u != root {
                        cuts.insert(u);
                    }
                    let mut edges = Vec::new();
                    while let Some(f) = estack.pop() {
                        edges.push(f);
                        if Some(f) == pe {
                            break;
                        }
                    }
                    edges.sort_unstable();
                    let mut vertices: Vec<VertexId> = edges
                        .iter()
                        .flat_map(|&f| {
                            let ed = g.edge(f).unwrap();
                            [ed.u, ed.v]
                        })
                        .collect();
                    vertices.sort_unstable();
                    vertices.dedup();
                    blocks.push(Block { edges, vertices });
                }
            }
        }
    }
    if root_children >= 2 {
        cuts.insert(root);
    }
    blocks.sort_by(|a: &Block, b: &Block| a.edges[0].cmp(&b.edges[0]));
    Ok(BlockCutTree {
        blocks,
        cut_vertices: cuts.into_iter().collect(),
    })
}

pub fn is_biconnected(g: &MultiGraph) -> bool {
    g.vertex_count() >= 2
        && g.edge_count() >= 1
        && block_cut_tree(g).map(|t| t.blocks.len() == 1).unwrap_or(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeType {
    S,
    P,
    R,
}

impl NodeType {
    pub fn letter(self) -> char {
        match self {
            NodeType::S => 'S',
            NodeType::P => 'P',
            NodeType::R => 'R',
        }
    }
}

/// Ordered corner pair and the id of the corner edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corners {
    pub c1: VertexId,
    pub c2: VertexId,
    pub edge: EdgeId,
}

impl Corners {
    pub fn contains(&self, v: VertexId) -> bool {
        v == self.c1 || v == self.c2
    }
}

#[derive(Clone, Debug)]
pub struct SprNode {
    pub kind: NodeType,
    /// Real edges keep their ids; a virtual edge has the same id in the two
    /// skeletons it links.
    pub skeleton: MultiGraph,
    pub parent: Option<usize>,
    pub parent_edge: Option<EdgeId>,
    pub children: Vec<usize>,
}

/// Rooted SPR-tree. Nodes are stored in breadth-first order from the root,
/// so every child has a larger index than its parent.
#[derive(Clone, Debug)]
pub struct SprTree {
    pub graph: MultiGraph,
    pub nodes: Vec<SprNode>,
    /// Real edge chosen as corner edge of the root enhancement.
    pub root_edge: EdgeId,
    child_of_edge: BTreeMap<EdgeId, usize>,
}

impl SprTree {
    pub fn root(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, t: usize) -> &SprNode {
        &self.nodes[t]
    }

    /// Child node hanging at virtual edge `e` of its parent's skeleton.
    pub fn child_at(&self, e: EdgeId) -> Option<usize> {
        self.child_of_edge.get(&e).copied()
    }

    /// Corners of node `t`: the endpoints of its parent virtual edge, or of
    /// the root edge for the root.
    pub fn corners(&self, t: usize) -> Corners {
        let n = &self.nodes[t];
        let e = n.parent_edge.unwrap_or(self.root_edge);
        let ed = n.skeleton.edge(e).unwrap();
        let (c1, c2) = ed.sorted();
        Corners { c1, c2, edge: e }
    }

    /// Nodes of the subtree rooted at `t`, in breadth-first order.
    pub fn subtree(&self, t: usize) -> Vec<usize> {
        let mut out = vec![t];
        let mut i = 0;
        while i < out.len() {
            out.extend(self.nodes[out[i]].children.iter().copied());
            i += 1;
        }
        out
    }

    pub fn real_edges(&self, t: usize) -> Vec<EdgeId> {
        let mut es: Vec<EdgeId> = self
            .subtree(t)
            .into_iter()
            .flat_map(|s| {
                self.nodes[s]
                    .skeleton
                    .edges()
                    .filter(|(_, ed)| ed.kind == EdgeKind::Real)
                    .map(|(e, _)| e)
                    .collect::<Vec<_>>()
            })
            .collect();
        es.sort_unstable();
        es
    }

    /// Graph induced by the subtree at `t`: all real edges below `t`, with
    /// the ids and terminal marks of the decomposed graph.
    pub fn induced_graph(&self, t: usize) -> MultiGraph {
        if t == self.root() {
            return self.graph.clone();
        }
        self.graph.edge_subgraph(&self.real_edges(t))
    }

    /// Induced graph plus the corner edge. For the root the corner edge is
    /// the root edge, already present.
    pub fn enhancement(&self, t: usize) -> (MultiGraph, Corners) {
        let mut g = self.induced_graph(t);
        let mut c = self.corners(t);
        if t != self.root() {
            c.edge = g.add_edge(c.c1, c.c2, EdgeKind::Virtual).unwrap();
        }
        (g, c)
    }

    /// Terminals of the induced graph at `t` that are not corners.
    pub fn inner_terminals(&self, t: usize) -> BTreeSet<VertexId> {
        let c = self.corners(t);
        let mut out = BTreeSet::new();
        for s in self.subtree(t) {
            for v in self.nodes[s].skeleton.vertices() {
                if self.graph.is_terminal(v) && !c.contains(v) {
                    out.insert(v);
                }
            }
        }
        out
    }
}

/// Vertices, edges, and edge ends as vertex positions.
fn dense(g: &MultiGraph) -> (Vec<VertexId>, Vec<EdgeId>, Vec<(usize, usize)>) {
    let verts: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let eids: Vec<EdgeId> = g.edge_ids().collect();
    let ends = eids
        .iter()
        .map(|&e| {
            let ed = g.edge(e).unwrap();
            (index[&ed.u], index[&ed.v])
        })
        .collect();
    (verts, eids, ends)
}

/// SPR-tree rooted at the node holding the smallest real edge.
pub fn spr_tree(g: &MultiGraph) -> Result<SprTree, DecompError> {
    let e = g.edge_ids().next().ok_or(DecompError::TooSmall)?;
    spr_tree_rooted(g, e)
}

/// SPR-tree rooted at the node whose skeleton holds `root_edge`.
pub fn spr_tree_rooted(g: &MultiGraph, root_edge: EdgeId) -> Result<SprTree, DecompError> {
    build(g, root_edge, triconnected_components)
}

/// Same tree computed with the quadratic reference decomposition.
pub fn spr_tree_naive(g: &MultiGraph, root_edge: EdgeId) -> Result<SprTree, DecompError> {
    build(g, root_edge, triconnected_components_naive)
}

fn build(
    g: &MultiGraph,
    root_edge: EdgeId,
    algo: fn(usize, &[(usize, usize)]) -> TricResult,
) -> Result<SprTree, DecompError> {
    if !g.has_edge(root_edge) {
        return Err(DecompError::UnknownEdge(root_edge));
    }
    if g.edge_count() < 2 {
        return Err(DecompError::TooSmall);
    }
    if !is_biconnected(g) {
        return Err(DecompError::NotBiconnected);
    }
    let (verts, eids, ends) = dense(g);
    let m = eids.len();
    let res = algo(verts.len(), &ends);
    let base = g.next_edge_id();
    let id_of = |e: usize| -> EdgeId {
        if e < m {
            eids[e]
        } else {
            base + (e - m) as EdgeId
        }
    };
    let mut owners: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut root_comp = None;
    for (i, c) in res.comps.iter().enumerate() {
        for &e in &c.edges {
            if e >= m {
                owners.entry(e).or_default().push(i);
            } else if eids[e] == root_edge {
                root_comp = Some(i);
            }
        }
    }
    let root_comp = root_comp.expect("root edge in no component");
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); res.comps.len()];
    for (&e, os) in &owners {
        debug_assert_eq!(os.len(), 2);
        adj[os[0]].push((e, os[1]));
        adj[os[1]].push((e, os[0]));
    }
    let mut order = Vec::new();
    let mut pos = vec![usize::MAX; res.comps.len()];
    let mut par: Vec<Option<(usize, usize)>> = vec![None; res.comps.len()];
    let mut queue = VecDeque::from([root_comp]);
    pos[root_comp] = 0;
    order.push(root_comp);
    while let Some(c) = queue.pop_front() {
        let mut next: Vec<(usize, usize)> = adj[c].clone();
        next.sort_unstable();
        for (e, d) in next {
            if pos[d] == usize::MAX {
                pos[d] = order.len();
                order.push(d);
                par[d] = Some((pos[c], e));
                queue.push_back(d);
            }
        }
    }
    let mut nodes = Vec::with_capacity(order.len());
    let mut child_of_edge = BTreeMap::new();
    for (i, &c) in order.iter().enumerate() {
        let comp = &res.comps[c];
        let kind = match comp.kind {
            CompKind::Bond => NodeType::P,
            CompKind::Polygon => NodeType::S,
            CompKind::Triconnected => NodeType::R,
        };
        let mut sk = MultiGraph::new();
        for &e in &comp.edges {
            let (a, b) = res.ends[e];
            for x in [verts[a], verts[b]] {
                if !sk.has_vertex(x) {
                    sk.insert_vertex(x).unwrap();
                    sk.set_terminal(x, g.is_terminal(x)).unwrap();
                }
            }
            let kind = if e < m { EdgeKind::Real } else { EdgeKind::Virtual };
            sk.insert_edge(id_of(e), verts[a], verts[b], kind).unwrap();
        }
        let (parent, parent_edge) = match par[c] {
            Some((p, e)) => {
                child_of_edge.insert(id_of(e), i);
                (Some(p), Some(id_of(e)))
            }
            None => (None, None),
        };
        nodes.push(SprNode {
            kind,
            skeleton: sk,
            parent,
            parent_edge,
            children: Vec::new(),
        });
    }
    for i in 1..nodes.len() {
        let p = nodes[i].parent.unwrap();
        nodes[p].children.push(i);
    }
    Ok(SprTree {
        graph: g.clone(),
        nodes,
        root_edge,
        child_of_edge,
    })
}

/// Cyclic rotation of `r` so that it starts right after `e`, without `e`.
fn after(r: &[EdgeId], e: EdgeId) -> Vec<EdgeId> {
    let p = r.iter().position(|&x| x == e).expect("virtual edge missing from rotation");
    r[p + 1..].iter().chain(r[..p].iter()).copied().collect()
}

/// Glue per-node skeleton rotations into a rotation system of the whole
/// graph: at every shared vertex the parent's slot for the virtual edge is
/// replaced by the child's rotation read from just after that edge.
pub fn glue_rotations(tree: &SprTree, skeleton_rots: &[RotationSystem]) -> RotationSystem {
    let mut rot = RotationSystem::new();
    for v in tree.nodes[0].skeleton.vertices() {
        rot.set_rotation(v, skeleton_rots[0].rotation(v).to_vec());
    }
    for (n, sr) in tree.nodes.iter().zip(skeleton_rots).skip(1) {
        let pe = n.parent_edge.unwrap();
        for v in n.skeleton.vertices() {
            let r = sr.rotation(v);
            if n.skeleton.edge(pe).unwrap().has(v) {
                rot.replace_slot(v, pe, &after(r, pe));
            } else {
                rot.set_rotation(v, r.to_vec());
            }
        }
    }
    rot
}

/// Rotation of a skeleton: R from the planar embedder, P with edges in the
/// given cyclic order at the smaller pole, S the unique cycle order.
pub fn skeleton_rotation(node: &SprNode, p_order: Option<&[EdgeId]>, mirror: bool) -> RotationSystem {
    let sk = &node.skeleton;
    let rot = match node.kind {
        NodeType::R => planar_embedding(sk).expect("R skeleton must be planar"),
        NodeType::S => {
            let mut rot = RotationSystem::new();
            for v in sk.vertices() {
                rot.set_rotation(v, sk.incident(v).to_vec());
            }
            rot
        }
        NodeType::P => {
            let mut vs = sk.vertices();
            let (a, b) = (vs.next().unwrap(), vs.next().unwrap());
            let order: Vec<EdgeId> = match p_order {
                Some(o) => o.to_vec(),
                None => {
                    let mut o: Vec<EdgeId> = sk.edge_ids().collect();
                    o.sort_unstable();
                    o
                }
            };
            let mut rot = RotationSystem::new();
            let mut rev = order.clone();
            rev.reverse();
            rot.set_rotation(a, order);
            rot.set_rotation(b, rev);
            rot
        }
    };
    if mirror {
        rot.mirrored()
    } else {
        rot
    }
}

/// A planar rotation system of the decomposed graph built from the default
/// skeleton embeddings.
pub fn default_rotation(tree: &SprTree) -> RotationSystem {
    let rots: Vec<RotationSystem> = tree.nodes.iter().map(|n| skeleton_rotation(n, None, false)).collect();
    glue_rotations(tree, &rots)
}

fn next_permutation(xs: &mut [EdgeId]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
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

/// Number of choice vectors enumerated by `enumerate_embeddings_spr`.
pub fn spr_choice_count(tree: &SprTree) -> u128 {
    let mut total: u128 = 1;
    let mut quotient = false;
    for n in &tree.nodes {
        let c: u128 = match n.kind {
            NodeType::S => 1,
            NodeType::R => 2,
            NodeType::P => (1..n.skeleton.edge_count() as u128).product(),
        };
        if c > 1 && !quotient {
            quotient = true;
            total = total.saturating_mul(c / 2);
        } else {
            total = total.saturating_mul(c);
        }
    }
    total
}

/// One rotation system per choice of R-node reflections and P-node cyclic
/// orders, up to one global reflection.
pub fn enumerate_embeddings_spr(tree: &SprTree, budget: u128) -> Result<Vec<RotationSystem>, DecompError> {
    let needed = spr_choice_count(tree);
    if needed > budget {
        return Err(DecompError::BudgetExceeded { needed, budget });
    }
    let base: Vec<RotationSystem> = tree.nodes.iter().map(|n| skeleton_rotation(n, None, false)).collect();
    // per-node option lists
    let mut options: Vec<Vec<RotationSystem>> = Vec::with_capacity(tree.len());
    let mut quotient = false;
    for (t, n) in tree.nodes.iter().enumerate() {
        let mut opts = Vec::new();
        match n.kind {
            NodeType::S => opts.push(base[t].clone()),
            NodeType::R => {
                opts.push(base[t].clone());
                if quotient {
                    opts.push(base[t].mirrored());
                }
                quotient = true;
            }
            NodeType::P => {
                let mut es: Vec<EdgeId> = n.skeleton.edge_ids().collect();
                es.sort_unstable();
                let first = es[0];
                let mut tail: Vec<EdgeId> = es[1..].to_vec();
                loop {
                    let keep = quotient || tail.len() < 2 || tail.first() < tail.last();
                    if keep {
                        let mut order = vec![first];
                        order.extend(tail.iter().copied());
                        opts.push(skeleton_rotation(n, Some(&order), false));
                    }
                    if !next_permutation(&mut tail) {
                        break;
                    }
                }
                quotient = true;
            }
        }
        options.push(opts);
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; tree.len()];
    loop {
        let rots: Vec<RotationSystem> = pick.iter().enumerate().map(|(t, &i)| options[t][i].clone()).collect();
        out.push(glue_rotations(tree, &rots));
        let mut t = 0;
        loop {
            if t == tree.len() {
                return Ok(out);
            }
            pick[t] += 1;
            if pick[t] < options[t].len() {
                break;
            }
            pick[t] = 0;
            t += 1;
        }
    }
}

#[cfg(test)]
mod tests;
