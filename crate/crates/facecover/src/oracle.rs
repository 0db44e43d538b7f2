//! Exact brute-force solvers: embedded face cover by set cover, face cover
//! number by enumerating embeddings, fcn profiles and the kernel verifier.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::cover::min_set_cover;
use crate::decomposition::{block_cut_tree, enumerate_embeddings_spr, spr_choice_count, spr_tree, Corners, DecompError};
use crate::embedding::{enumerate_planar_rotations, rotation_count, trace_faces, EmbeddingError, RotationSystem};
use crate::graph::{EdgeId, MultiGraph, VertexId};
use crate::profile::{Count, FcnProfile};

pub const ROTATION_BUDGET: u128 = 1_000_000;
pub const SPR_BUDGET: u128 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub rotation_budget: u128,
    pub spr_budget: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            rotation_budget: ROTATION_BUDGET,
            spr_budget: SPR_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("graph is not planar")]
    NonPlanar,
    #[error("invalid rotation system")]
    InvalidRotation,
    #[error("graph is not connected")]
    Disconnected,
}

impl From<EmbeddingError> for OracleError {
    fn from(e: EmbeddingError) -> Self {
        match e {
            EmbeddingError::BudgetExceeded { needed, budget } => OracleError::BudgetExceeded { needed, budget },
            EmbeddingError::NonPlanar => OracleError::NonPlanar,
            _ => OracleError::InvalidRotation,
        }
    }
}

impl From<DecompError> for OracleError {
    fn from(e: DecompError) -> Self {
        match e {
            DecompError::BudgetExceeded { needed, budget } => OracleError::BudgetExceeded { needed, budget },
            DecompError::NotConnected => OracleError::Disconnected,
            _ => OracleError::NonPlanar,
        }
    }
}

/// Boundary of one face: sorted distinct vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceData {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl FaceData {
    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

/// Faces of one embedding, sorted.
pub type FaceStructure = Vec<FaceData>;

pub fn face_structure(g: &MultiGraph, rot: &RotationSystem) -> Result<FaceStructure, OracleError> {
    let fs = trace_faces(g, rot)?;
    let mut out: FaceStructure = fs
        .faces
        .iter()
        .map(|f| {
            let mut edges: Vec<EdgeId> = f.darts.iter().map(|d| d.edge).collect();
            edges.sort_unstable();
            edges.dedup();
            FaceData {
                vertices: f.vertices.clone(),
                edges,
            }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// How an embedding is enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Every rotation system, filtered by the Euler check.
    Rotations,
    /// SPR choices per block, composed at cut vertices.
    Spr,
    /// `Spr` when within budget, otherwise `Rotations`.
    Auto,
}

/// Face structures of all planar embeddings of a connected graph, without
/// duplicates.
pub fn face_structures(g: &MultiGraph, route: Route, cfg: &OracleConfig) -> Result<Vec<FaceStructure>, OracleError> {
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    match route {
        Route::Rotations => by_rotations(g, cfg),
        Route::Spr => composite_structures(g, cfg),
        Route::Auto => match composite_structures(g, cfg) {
            Err(OracleError::BudgetExceeded { .. }) => by_rotations(g, cfg),
            other => other,
        },
    }
}

fn by_rotations(g: &MultiGraph, cfg: &OracleConfig) -> Result<Vec<FaceStructure>, OracleError> {
    let mut seen = BTreeSet::new();
    for rot in enumerate_planar_rotations(g, cfg.rotation_budget)? {
        seen.insert(face_structure(g, &rot)?);
    }
    if seen.is_empty() {
        return Err(OracleError::NonPlanar);
    }
    Ok(seen.into_iter().collect())
}

fn block_structures(g: &MultiGraph, edges: &[EdgeId], cfg: &OracleConfig) -> Result<Vec<FaceStructure>, OracleError> {
    let sub = g.edge_subgraph(edges);
    if edges.len() == 1 {
        let ed = g.edge(edges[0]).unwrap();
        let (a, b) = ed.sorted();
        return Ok(vec![vec![FaceData {
            vertices: vec![a, b],
            edges: vec![edges[0]],
        }]]);
    }
    let tree = spr_tree(&sub)?;
    let mut seen = BTreeSet::new();
    for rot in enumerate_embeddings_spr(&tree, cfg.spr_budget)? {
        let fs = face_structure(&sub, &rot)?;
        let f = fs.len() as i64;
        if sub.vertex_count() as i64 - sub.edge_count() as i64 + f != 2 {
            return Err(OracleError::NonPlanar);
        }
        seen.insert(fs);
    }
    Ok(seen.into_iter().collect())
}

struct CutRecord {
    v: VertexId,
    parent: usize,
    children: Vec<usize>,
}

fn faces_at(fs: &FaceStructure, v: VertexId) -> Vec<usize> {
    (0..fs.len()).filter(|&i| fs[i].contains(v)).collect()
}

/// Host choice of one child block at a cut vertex: its outer face, the
/// block it sits in and the face of that block.
type Placement = (usize, usize, usize);

fn placements(rec: &CutRecord, chosen: &[&FaceStructure]) -> Vec<Vec<Placement>> {
    let r = rec.children.len();
    let mut all = Vec::new();
    let mut cur: Vec<Placement> = Vec::with_capacity(r);
    fn rec_fn(
        i: usize,
        rec: &CutRecord,
        chosen: &[&FaceStructure],
        cur: &mut Vec<Placement>,
        all: &mut Vec<Vec<Placement>>,
    ) {
        let r = rec.children.len();
        if i == r {
            // acyclic: following hosts among children must reach the parent
            for s in 0..r {
                let mut x = s;
                let mut steps = 0;
                while cur[x].1 != rec.parent {
                    x = rec.children.iter().position(|&c| c == cur[x].1).unwrap();
                    steps += 1;
                    if steps > r {
                        return;
                    }
                }
            }
            all.push(cur.clone());
            return;
        }
        let child = rec.children[i];
        let hosts: Vec<usize> = core::iter::once(rec.parent)
            .chain(rec.children.iter().copied().filter(|&c| c != child))
            .collect();
        for outer in faces_at(chosen[child], rec.v) {
            for &h in &hosts {
                for hf in faces_at(chosen[h], rec.v) {
                    cur.push((outer, h, hf));
                    rec_fn(i + 1, rec, chosen, cur, all);
                    cur.pop();
                }
            }
        }
    }
    rec_fn(0, rec, chosen, &mut cur, &mut all);
    all
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

fn composite_structures(g: &MultiGraph, cfg: &OracleConfig) -> Result<Vec<FaceStructure>, OracleError> {
    if g.edge_count() == 0 {
        let v = g.vertices().next().ok_or(OracleError::Disconnected)?;
        return Ok(vec![vec![FaceData {
            vertices: vec![v],
            edges: Vec::new(),
        }]]);
    }
    let bct = block_cut_tree(g)?;
    let nb = bct.blocks.len();
    let mut needed: u128 = 1;
    for b in &bct.blocks {
        if b.edges.len() > 1 {
            let sub = g.edge_subgraph(&b.edges);
            let t = spr_tree(&sub)?;
            needed = needed.saturating_mul(spr_choice_count(&t));
        }
    }
    if needed > cfg.spr_budget {
        return Err(OracleError::BudgetExceeded {
            needed,
            budget: cfg.spr_budget,
        });
    }
    let embs: Vec<Vec<FaceStructure>> = bct
        .blocks
        .iter()
        .map(|b| block_structures(g, &b.edges, cfg))
        .collect::<Result<_, _>>()?;
    if nb == 1 {
        return Ok(embs.into_iter().next().unwrap());
    }
    // root the block-cut tree at block 0
    let mut records = Vec::new();
    let mut seen_block = vec![false; nb];
    let mut seen_cut = BTreeSet::new();
    let mut queue = vec![0usize];
    seen_block[0] = true;
    while let Some(b) = queue.pop() {
        for &v in &bct.blocks[b].vertices {
            if !bct.is_cut_vertex(v) || !seen_cut.insert(v) {
                continue;
            }
            let children: Vec<usize> = bct.blocks_of(v).into_iter().filter(|&c| !seen_block[c]).collect();
            for &c in &children {
                seen_block[c] = true;
                queue.push(c);
            }
            records.push(CutRecord { v, parent: b, children });
        }
    }
    let mut offsets = vec![0usize; nb + 1];
    let mut out = BTreeSet::new();
    let mut pick = vec![0usize; nb];
    let mut work: u128 = 0;
    loop {
        let chosen: Vec<&FaceStructure> = (0..nb).map(|b| &embs[b][pick[b]]).collect();
        for b in 0..nb {
            offsets[b + 1] = offsets[b] + chosen[b].len();
        }
        let options: Vec<Vec<Vec<Placement>>> = records.iter().map(|r| placements(r, &chosen)).collect();
        let mut sel = vec![0usize; records.len()];
        loop {
            work += 1;
            if work > cfg.spr_budget.saturating_mul(16) {
                return Err(OracleError::BudgetExceeded {
                    needed: work,
                    budget: cfg.spr_budget,
                });
            }
            let total = offsets[nb];
            let mut parent: Vec<usize> = (0..total).collect();
            for (ri, r) in records.iter().enumerate() {
                for (ci, &(outer, h, hf)) in options[ri][sel[ri]].iter().enumerate() {
                    let child = r.children[ci];
                    let a = find(&mut parent, offsets[child] + outer);
                    let b = find(&mut parent, offsets[h] + hf);
                    parent[a] = b;
                }
            }
            let mut merged: BTreeMap<usize, (BTreeSet<VertexId>, BTreeSet<EdgeId>)> = BTreeMap::new();
            for b in 0..nb {
                for (i, f) in chosen[b].iter().enumerate() {
                    let r = find(&mut parent, offsets[b] + i);
                    let slot = merged.entry(r).or_default();
                    slot.0.extend(f.vertices.iter().copied());
                    slot.1.extend(f.edges.iter().copied());
                }
            }
            let mut fs: FaceStructure = merged
                .into_values()
                .map(|(vs, es)| FaceData {
                    vertices: vs.into_iter().collect(),
                    edges: es.into_iter().collect(),
                })
                .collect();
            fs.sort();
            out.insert(fs);
            let mut i = 0;
            loop {
                if i == records.len() {
                    break;
                }
                sel[i] += 1;
                if sel[i] < options[i].len() {
                    break;
                }
                sel[i] = 0;
                i += 1;
            }
            if i == records.len() {
                break;
            }
        }
        let mut b = 0;
        loop {
            if b == nb {
                return Ok(out.into_iter().collect());
            }
            pick[b] += 1;
            if pick[b] < embs[b].len() {
                break;
            }
            pick[b] = 0;
            b += 1;
        }
    }
}

/// Constraint on how many of the external faces a cover uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExternalUse {
    Any,
    Exactly(u8),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    /// `None` when no cover satisfies the constraint.
    pub size: Option<usize>,
    pub faces: Vec<usize>,
    pub external_used: u8,
}

fn cover_with(
    faces: &[FaceData],
    required: &BTreeSet<VertexId>,
    forced: &[usize],
    allowed: &[usize],
    limit: Option<usize>,
) -> Option<Vec<usize>> {
    let rest: Vec<VertexId> = required
        .iter()
        .copied()
        .filter(|&v| !forced.iter().any(|&f| faces[f].contains(v)))
        .collect();
    let index: BTreeMap<VertexId, usize> = rest.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let sets: Vec<Vec<usize>> = allowed
        .iter()
        .map(|&f| faces[f].vertices.iter().filter_map(|v| index.get(v).copied()).collect())
        .collect();
    let inner_limit = match limit {
        Some(l) if l < forced.len() => return None,
        Some(l) => Some(l - forced.len()),
        None => None,
    };
    let chosen = min_set_cover(rest.len(), &sets, inner_limit)?;
    let mut out: Vec<usize> = forced.to_vec();
    out.extend(chosen.into_iter().map(|i| allowed[i]));
    out.sort_unstable();
    Some(out)
}

/// Minimum cover of `required` by faces, honoring the number of external
/// faces used. Returns `None` if impossible or larger than `limit`.
pub fn cover_faces(
    faces: &[FaceData],
    required: &BTreeSet<VertexId>,
    externals: &[usize],
    usage: ExternalUse,
    limit: Option<usize>,
) -> Option<Vec<usize>> {
    let mut ext: Vec<usize> = externals.to_vec();
    ext.sort_unstable();
    ext.dedup();
    let internal: Vec<usize> = (0..faces.len()).filter(|f| !ext.contains(f)).collect();
    match usage {
        ExternalUse::Any => {
            let all: Vec<usize> = (0..faces.len()).collect();
            cover_with(faces, required, &[], &all, limit)
        }
        ExternalUse::Exactly(0) => cover_with(faces, required, &[], &internal, limit),
        ExternalUse::Exactly(1) => {
            let mut best: Option<Vec<usize>> = None;
            for &x in &ext {
                let lim = match (&best, limit) {
                    (Some(b), _) => Some(b.len().saturating_sub(1)),
                    (None, l) => l,
                };
                if let Some(c) = cover_with(faces, required, &[x], &internal, lim) {
                    if best.as_ref().is_none_or(|b| c.len() < b.len()) {
                        best = Some(c);
                    }
                }
            }
            best
        }
        ExternalUse::Exactly(2) if ext.len() == 2 => cover_with(faces, required, &ext, &internal, limit),
        ExternalUse::Exactly(_) => None,
    }
}

/// Embedded face cover of `required` in the embedding `rot`. External faces
/// are the faces containing `corner_edge`.
pub fn embedded_fcn(
    g: &MultiGraph,
    rot: &RotationSystem,
    required: &BTreeSet<VertexId>,
    corner_edge: Option<EdgeId>,
    usage: ExternalUse,
) -> Result<CoverResult, OracleError> {
    let faces = face_structure(g, rot)?;
    let externals: Vec<usize> = match corner_edge {
        Some(e) => (0..faces.len()).filter(|&f| faces[f].has_edge(e)).collect(),
        None => Vec::new(),
    };
    let res = cover_faces(&faces, required, &externals, usage, None);
    Ok(match res {
        Some(fs) => CoverResult {
            size: Some(fs.len()),
            external_used: fs.iter().filter(|f| externals.contains(f)).count() as u8,
            faces: fs,
        },
        None => CoverResult {
            size: None,
            faces: Vec::new(),
            external_used: 0,
        },
    })
}

/// Face cover number of a connected graph with terminal set `required`,
/// capped: returns `cap + 1` whenever the true value exceeds `cap`.
pub fn fcn_connected_capped(
    g: &MultiGraph,
    required: &BTreeSet<VertexId>,
    cap: usize,
    route: Route,
    cfg: &OracleConfig,
) -> Result<usize, OracleError> {
    if required.is_empty() {
        return Ok(0);
    }
    let structures = face_structures(g, route, cfg)?;
    let mut best = cap.saturating_add(1);
    for fs in &structures {
        if best == 1 {
            break;
        }
        if let Some(c) = cover_faces(fs, required, &[], ExternalUse::Any, Some(best - 1)) {
            best = best.min(c.len());
        }
    }
    Ok(best)
}

/// Face cover number of `g` for its terminal marks. Components can be nested
/// in each other's faces, so one face is shared between all components that
/// need a face.
pub fn fcn_exact(g: &MultiGraph, cfg: &OracleConfig) -> Result<usize, OracleError> {
    fcn_exact_via(g, Route::Auto, cfg)
}

pub fn fcn_exact_via(g: &MultiGraph, route: Route, cfg: &OracleConfig) -> Result<usize, OracleError> {
    fcn_capped_via(g, usize::MAX - 1, route, cfg)
}

/// `min(fcn, cap + 1)`.
pub fn fcn_capped_via(g: &MultiGraph, cap: usize, route: Route, cfg: &OracleConfig) -> Result<usize, OracleError> {
    let terminals = g.terminal_set();
    let mut total = 0usize;
    let mut needing = 0usize;
    for comp in g.connected_components() {
        let req: BTreeSet<VertexId> = comp.iter().copied().filter(|v| terminals.contains(v)).collect();
        if req.is_empty() {
            continue;
        }
        let sub = g.induced_subgraph(&comp);
        let f = fcn_connected_capped(&sub, &req, cap.saturating_add(needing + 1), route, cfg)?;
        total = total.saturating_add(f);
        needing += 1;
    }
    let value = total.saturating_sub(needing.saturating_sub(1));
    Ok(value.min(cap.saturating_add(1)))
}

/// Whether `fcn(g) <= k`.
pub fn decide(g: &MultiGraph, k: u32, cfg: &OracleConfig) -> Result<bool, OracleError> {
    Ok(fcn_capped_via(g, k as usize, Route::Auto, cfg)? <= k as usize)
}

/// External faces of one embedding: the faces whose boundary holds the
/// corner edge.
pub fn external_faces(fs: &FaceStructure, corner_edge: EdgeId) -> Vec<usize> {
    (0..fs.len()).filter(|&f| fs[f].has_edge(corner_edge)).collect()
}

fn count_of(res: Option<Vec<usize>>, feasible: bool) -> Count {
    match res {
        Some(c) => Count::Finite(c.len() as u32),
        None if feasible => Count::AboveK,
        None => Count::Infinity,
    }
}

fn feasible(faces: &[FaceData], required: &BTreeSet<VertexId>, forced: &[usize], allowed: &[usize]) -> bool {
    required.iter().all(|&v| forced.iter().chain(allowed).any(|&f| faces[f].contains(v)))
}

/// Profile of one embedding of an enhancement.
pub fn embedded_profile(fs: &FaceStructure, terminals: &BTreeSet<VertexId>, corners: &Corners, k: u32) -> FcnProfile {
    let ext = external_faces(fs, corners.edge);
    let internal: Vec<usize> = (0..fs.len()).filter(|f| !ext.contains(f)).collect();
    let lim = Some(k as usize);
    let mut f0_minus = [Count::Infinity; 4];
    for (c, slot) in f0_minus.iter_mut().enumerate() {
        let mut req = terminals.clone();
        if c & 1 != 0 {
            req.remove(&corners.c1);
        }
        if c & 2 != 0 {
            req.remove(&corners.c2);
        }
        let r = cover_with(fs, &req, &[], &internal, lim);
        *slot = count_of(r, feasible(fs, &req, &[], &internal));
    }
    let mut f1 = Count::Infinity;
    for &x in &ext {
        let r = cover_with(fs, terminals, &[x], &internal, lim);
        f1 = f1.min(count_of(r, feasible(fs, terminals, &[x], &internal)));
    }
    let f2 = if ext.len() == 2 {
        let r = cover_with(fs, terminals, &ext, &internal, lim);
        count_of(r, feasible(fs, terminals, &ext, &internal))
    } else {
        Count::Infinity
    };
    FcnProfile {
        f0: f0_minus[0],
        f1,
        f2,
        f0_minus,
    }
}

fn profile_min(a: FcnProfile, b: FcnProfile) -> FcnProfile {
    FcnProfile {
        f0: a.f0.min(b.f0),
        f1: a.f1.min(b.f1),
        f2: a.f2.min(b.f2),
        f0_minus: [
            a.f0_minus[0].min(b.f0_minus[0]),
            a.f0_minus[1].min(b.f0_minus[1]),
            a.f0_minus[2].min(b.f0_minus[2]),
            a.f0_minus[3].min(b.f0_minus[3]),
        ],
    }
}

/// Exact profile of an enhancement over all of its embeddings, capped at
/// `k`. Terminals are the marks of `enh`.
pub fn fcn_profile_exact(
    enh: &MultiGraph,
    corners: &Corners,
    k: u32,
    cfg: &OracleConfig,
) -> Result<FcnProfile, OracleError> {
    fcn_profile_via(enh, corners, k, Route::Auto, cfg)
}

pub fn fcn_profile_via(
    enh: &MultiGraph,
    corners: &Corners,
    k: u32,
    route: Route,
    cfg: &OracleConfig,
) -> Result<FcnProfile, OracleError> {
    let terminals = enh.terminal_set();
    let mut acc = FcnProfile {
        f0: Count::Infinity,
        f1: Count::Infinity,
        f2: Count::Infinity,
        f0_minus: [Count::Infinity; 4],
    };
    for fs in face_structures(enh, route, cfg)? {
        acc = profile_min(acc, embedded_profile(&fs, &terminals, corners, k));
    }
    Ok(acc)
}

/// Whether some single face of some embedding contains all of `required`.
pub fn single_face_coverable(g: &MultiGraph, required: &BTreeSet<VertexId>, cfg: &OracleConfig) -> Result<bool, OracleError> {
    Ok(fcn_connected_capped(g, required, 1, Route::Auto, cfg)? <= 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelVerdict {
    /// Corners and corner edge present in the kernel.
    pub k1: bool,
    /// Capped profiles agree.
    pub k2_k3: bool,
    pub original: FcnProfile,
    pub kernel: FcnProfile,
    pub kernel_vertices: usize,
    /// Number of internal faces of the kernel (embedding independent).
    pub internal_faces: usize,
}

impl KernelVerdict {
    pub fn pass(&self) -> bool {
        self.k1 && self.k2_k3
    }
}

/// Check a replacement of an enhancement against the original.
pub fn verify_nice_kernel(
    orig: &MultiGraph,
    orig_corners: &Corners,
    kern: &MultiGraph,
    kern_corners: &Corners,
    k: u32,
    cfg: &OracleConfig,
) -> Result<KernelVerdict, OracleError> {
    let k1 = kern.has_vertex(kern_corners.c1)
        && kern.has_vertex(kern_corners.c2)
        && kern
            .edge(kern_corners.edge)
            .map(|e| e.has(kern_corners.c1) && e.has(kern_corners.c2))
            .unwrap_or(false);
    let original = fcn_profile_exact(orig, orig_corners, k, cfg)?;
    let kernel = fcn_profile_exact(kern, kern_corners, k, cfg)?;
    let faces = kern.edge_count() as i64 - kern.vertex_count() as i64 + 2;
    Ok(KernelVerdict {
        k1,
        k2_k3: original.capped_eq(&kernel),
        original,
        kernel,
        kernel_vertices: kern.vertex_count(),
        internal_faces: (faces - 2).max(0) as usize,
    })
}

/// Rotation systems or SPR choices needed to enumerate `g`.
pub fn enumeration_cost(g: &MultiGraph) -> u128 {
    rotation_count(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::planar_embedding;
    use crate::graph::EdgeKind;

    fn all_terminals(mut g: MultiGraph) -> MultiGraph {
        let vs: Vec<VertexId> = g.vertices().collect();
        for v in vs {
            g.set_terminal(v, true).unwrap();
        }
        g
    }

    fn k4() -> MultiGraph {
        MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn cycle(n: u32) -> MultiGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::from_edges(n, &edges)
    }

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn cycle_all_terminals_is_one() {
        let g = all_terminals(cycle(6));
        assert_eq!(fcn_exact(&g, &cfg()).unwrap(), 1);
        let rot = planar_embedding(&g).unwrap();
        let r = embedded_fcn(&g, &rot, &g.terminal_set(), None, ExternalUse::Any).unwrap();
        assert_eq!(r.size, Some(1));
    }

    #[test]
    fn k4_all_terminals_is_two() {
        let g = all_terminals(k4());
        assert_eq!(fcn_exact_via(&g, Route::Rotations, &cfg()).unwrap(), 2);
        assert_eq!(fcn_exact_via(&g, Route::Spr, &cfg()).unwrap(), 2);
    }

    #[test]
    fn k4_minus_edge_all_terminals_is_one() {
        let g = all_terminals(MultiGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]));
        assert_eq!(fcn_exact_via(&g, Route::Rotations, &cfg()).unwrap(), 1);
        assert_eq!(fcn_exact_via(&g, Route::Spr, &cfg()).unwrap(), 1);
    }

    #[test]
    fn no_terminals_is_zero() {
        assert_eq!(fcn_exact(&k4(), &cfg()).unwrap(), 0);
    }

    #[test]
    fn terminal_subdivided_edge_profile() {
        // c1 - t - c2 plus corner edge
        let mut g = MultiGraph::from_edges(3, &[(0, 2), (2, 1)]);
        g.set_terminal(2, true).unwrap();
        let e = g.add_edge(0, 1, EdgeKind::Virtual).unwrap();
        let c = Corners { c1: 0, c2: 1, edge: e };
        let p = fcn_profile_exact(&g, &c, 3, &cfg()).unwrap();
        assert_eq!(p.f0, Count::Infinity);
        assert_eq!(p.f1, Count::Finite(1));
        assert_eq!(p.f2, Count::Finite(2));
    }

    #[test]
    fn terminal_free_profile_is_zero() {
        let mut g = cycle(4);
        let e = g.add_edge(0, 2, EdgeKind::Virtual).unwrap();
        let c = Corners { c1: 0, c2: 2, edge: e };
        let p = fcn_profile_exact(&g, &c, 3, &cfg()).unwrap();
        assert_eq!(p.f0_minus, [Count::Finite(0); 4]);
    }

    #[test]
    fn two_triangles_at_a_cut_vertex_share_a_face() {
        let g = all_terminals(MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]));
        assert_eq!(fcn_exact_via(&g, Route::Spr, &cfg()).unwrap(), 1);
        assert_eq!(fcn_exact_via(&g, Route::Rotations, &cfg()).unwrap(), 1);
    }

    #[test]
    fn disjoint_k4s_nest() {
        let mut g = all_terminals(k4());
        for v in 4..8 {
            g.insert_vertex(v).unwrap();
            g.set_terminal(v, true).unwrap();
        }
        for (a, b) in [(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)] {
            g.add_edge(a, b, EdgeKind::Real).unwrap();
        }
        assert_eq!(fcn_exact(&g, &cfg()).unwrap(), 3);
    }

    #[test]
    fn identity_kernel_verifies() {
        let mut g = k4();
        g.set_terminal(2, true).unwrap();
        g.set_terminal(3, true).unwrap();
        let c = Corners { c1: 0, c2: 1, edge: 0 };
        let v = verify_nice_kernel(&g, &c, &g, &c, 2, &cfg()).unwrap();
        assert!(v.pass());
    }

    #[test]
    fn routes_agree_on_generated_graphs() {
        use crate::harness::{gen_planar, GenParams};
        for seed in 0..60 {
            let mut p = GenParams::new(seed, 4 + (seed as u32 % 5));
            p.density = 0.5 + (seed % 5) as f64 * 0.1;
            p.terminal_fraction = 0.5;
            let g = gen_planar(&p).graph;
            if enumeration_cost(&g) > ROTATION_BUDGET {
                continue;
            }
            let a = fcn_exact_via(&g, Route::Rotations, &cfg()).unwrap();
            let b = fcn_exact_via(&g, Route::Spr, &cfg()).unwrap();
            assert_eq!(a, b, "seed {seed}");
            let e = g.edge_ids().next().unwrap();
            let ed = g.edge(e).unwrap();
            let c = Corners { c1: ed.u, c2: ed.v, edge: e };
            if crate::decomposition::is_biconnected(&g) {
                let pa = fcn_profile_via(&g, &c, 3, Route::Rotations, &cfg()).unwrap();
                let pb = fcn_profile_via(&g, &c, 3, Route::Spr, &cfg()).unwrap();
                assert_eq!(pa, pb, "seed {seed}");
            }
        }
    }
}
