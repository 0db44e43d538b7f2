//! Instance-level kernelization: components, cut vertices and blocks.
//!
//! Components nest into one shared face, so `fcn = 1 + sum(fcn_i - 1)` over
//! components with terminals. A branch `B` hanging at cut vertex `w` is
//! folded into its parent block with `h = fcn(B)` and `h' = fcn(B + w)`:
//! it costs `h - 1` if `w` is a terminal, `h - 1` with `w` marked in the
//! parent if `h' = h`, and `h` otherwise.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::classify::{classify_tree, fcn_at_most_one};
use crate::decomposition::{block_cut_tree, spr_tree_rooted, DecompError, NodeType};
use crate::graph::{EdgeId, EdgeKind, Instance, MultiGraph, VertexId};
use crate::oracle::{fcn_capped_via, OracleConfig, OracleError, Route};

use super::pnode::kernelize_p_node;
use super::rnode::kernelize_r_node;
use super::snode::kernelize_s_node;
use super::{Ctx, IdGen, NiceKernel, NoCertificate, Rule, RuleFiring, RuleStep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("input graph is not planar")]
    NonPlanar,
    #[error("exact branch evaluation refused: {0}")]
    Budget(OracleError),
}

impl From<DecompError> for KernelError {
    fn from(_: DecompError) -> Self {
        KernelError::NonPlanar
    }
}

impl From<OracleError> for KernelError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::NonPlanar => KernelError::NonPlanar,
            other => KernelError::Budget(other),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No(NoCertificate),
    /// The kernel has to be solved.
    Open,
}

impl Verdict {
    pub fn hint(&self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No(_) => "no",
            Verdict::Open => "unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KernelStats {
    pub input_vertices: usize,
    pub input_edges: usize,
    pub kernel_vertices: usize,
    pub kernel_edges: usize,
    pub kernel_terminals: usize,
    pub blocks: usize,
    pub spr_nodes: usize,
    /// Faces paid for by folded branches.
    pub offset: u32,
}

#[derive(Clone, Debug)]
pub struct KernelOutput {
    pub verdict: Verdict,
    /// Equivalent instance: simple, ids `0..n`, every edge real.
    pub instance: Instance,
    /// Input vertex behind each kernel vertex, `None` for new vertices.
    pub origin: Vec<Option<VertexId>>,
    pub trace: Vec<RuleFiring>,
    /// Materialized rule applications, when requested.
    pub steps: Vec<RuleStep>,
    pub stats: KernelStats,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KernelConfig {
    pub oracle: OracleConfig,
    pub record_steps: bool,
}

/// Result of the leaves-to-root pass over one block.
#[derive(Clone, Debug)]
pub struct BlockKernel {
    pub result: Result<NiceKernel, NoCertificate>,
    pub trace: Vec<RuleFiring>,
    pub steps: Vec<RuleStep>,
    pub spr_nodes: usize,
    /// Kernel of every node processed, indexed by SPR-tree node.
    pub kernels: Vec<Option<NiceKernel>>,
}

/// Kernelize a biconnected block rooted at `root_edge`. Fresh ids are drawn
/// above the block's id counters.
pub fn kernelize_block(g: &MultiGraph, root_edge: EdgeId, k: u32, record: bool) -> Result<BlockKernel, KernelError> {
    if g.edge_count() < 2 {
        let c = g.edge(root_edge).map_err(|_| KernelError::NonPlanar)?;
        return Ok(BlockKernel {
            result: Ok(NiceKernel {
                graph: g.clone(),
                corners: crate::decomposition::Corners {
                    c1: c.u,
                    c2: c.v,
                    edge: root_edge,
                },
            }),
            trace: Vec::new(),
            steps: Vec::new(),
            spr_nodes: 0,
            kernels: Vec::new(),
        });
    }
    let tree = spr_tree_rooted(g, root_edge)?;
    let cl = classify_tree(&tree);
    let mut ctx = Ctx::new(&tree, &cl, k, IdGen::above(&tree));
    if record {
        ctx.steps = Some(Vec::new());
    }
    let mut result = Err(NoCertificate {
        rule: Rule::ExitProblematic,
        node: 0,
    });
    for t in (0..tree.len()).rev() {
        let r = match tree.node(t).kind {
            NodeType::S => Ok(kernelize_s_node(&mut ctx, t)),
            NodeType::P => kernelize_p_node(&mut ctx, t),
            NodeType::R => kernelize_r_node(&mut ctx, t),
        };
        match r {
            Ok(kern) => {
                if t == tree.root() {
                    result = Ok(kern.clone());
                }
                ctx.kernels[t] = Some(kern);
            }
            Err(no) => {
                result = Err(no);
                break;
            }
        }
    }
    Ok(BlockKernel {
        result,
        trace: ctx.trace,
        steps: ctx.steps.unwrap_or_default(),
        spr_nodes: tree.len(),
        kernels: ctx.kernels,
    })
}

struct Run<'a> {
    cfg: &'a KernelConfig,
    trace: Vec<RuleFiring>,
    steps: Vec<RuleStep>,
    stats: KernelStats,
    next_vertex: VertexId,
    next_edge: EdgeId,
}

enum Folded {
    /// Root block with marks after folding, the edge to root it at, and the
    /// faces paid by branches.
    Open(MultiGraph, EdgeId, u32),
    No(NoCertificate),
}

impl Run<'_> {
    fn block(&mut self, mut b: MultiGraph, root_edge: EdgeId, k: u32) -> Result<Result<NiceKernel, NoCertificate>, KernelError> {
        b.reserve_ids(self.next_vertex, self.next_edge);
        let bk = kernelize_block(&b, root_edge, k, self.cfg.record_steps)?;
        self.trace.extend(bk.trace);
        self.steps.extend(bk.steps);
        self.stats.spr_nodes += bk.spr_nodes;
        Ok(bk.result)
    }

    /// `min(fcn(b), k + 1)` for a biconnected block.
    fn block_fcn(&mut self, b: &MultiGraph, root_edge: EdgeId, k: u32) -> Result<u32, KernelError> {
        if b.terminal_count() == 0 {
            return Ok(0);
        }
        if b.edge_count() < 2 || fcn_at_most_one(b) {
            return Ok(1);
        }
        if k < 2 {
            return Ok(k + 1);
        }
        match self.block(b.clone(), root_edge, k)? {
            Err(_) => Ok(k + 1),
            Ok(kern) => Ok(fcn_capped_via(&kern.graph, k as usize, Route::Auto, &self.cfg.oracle)? as u32),
        }
    }

    /// Fold every non-root block of a connected graph into the root block.
    fn fold(&mut self, g: &MultiGraph, k: u32) -> Result<Folded, KernelError> {
        let bct = block_cut_tree(g)?;
        self.stats.blocks += bct.blocks.len();
        let terminals = g.terminal_set();
        let root = (0..bct.blocks.len())
            .filter(|&b| bct.blocks[b].vertices.iter().any(|v| terminals.contains(v)))
            .max_by_key(|&b| (bct.blocks[b].vertices.len(), core::cmp::Reverse(b)))
            .expect("component with terminals");
        let mut marks = terminals;
        let block_of_edges = |b: usize, marks: &BTreeSet<VertexId>| {
            let mut h = g.edge_subgraph(&bct.blocks[b].edges);
            for v in bct.blocks[b].vertices.iter() {
                h.set_terminal(*v, marks.contains(v)).unwrap();
            }
            h
        };
        if bct.blocks.len() == 1 {
            let h = block_of_edges(root, &marks);
            let e = h.edge_ids().next().expect("edge");
            return Ok(Folded::Open(h, e, 0));
        }
        // breadth-first over the block-cut tree from the root block
        let mut parent: Vec<Option<(usize, VertexId)>> = vec![None; bct.blocks.len()];
        let mut order = vec![root];
        let mut seen = vec![false; bct.blocks.len()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut at: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (b, blk) in bct.blocks.iter().enumerate() {
            for &v in &blk.vertices {
                if bct.is_cut_vertex(v) {
                    at.entry(v).or_default().push(b);
                }
            }
        }
        while let Some(b) = queue.pop_front() {
            for &v in &bct.blocks[b].vertices {
                for &c in at.get(&v).map(|x| x.as_slice()).unwrap_or(&[]) {
                    if !seen[c] {
                        seen[c] = true;
                        parent[c] = Some((b, v));
                        order.push(c);
                        queue.push_back(c);
                    }
                }
            }
        }
        let mut off = vec![0u32; bct.blocks.len()];
        let mut spent = 0u32;
        for &b in order.iter().skip(1).rev() {
            let (p, w) = parent[b].unwrap();
            let h = block_of_edges(b, &marks);
            let e = *h.incident(w).iter().min().unwrap();
            let h0 = self.block_fcn(&h, e, k)?;
            let cost = if h0 > k {
                k + 1
            } else if marks.contains(&w) {
                h0 - 1
            } else {
                let mut hw = h.clone();
                hw.set_terminal(w, true).unwrap();
                let h1 = self.block_fcn(&hw, e, k)?;
                if h1 == h0 {
                    marks.insert(w);
                    h0 - 1
                } else {
                    h0
                }
            };
            self.trace.push(RuleFiring {
                rule: Rule::CutVertexFold,
                node: b,
                before: h.vertex_count(),
                after: 0,
            });
            off[p] += off[b] + cost;
            spent = spent.saturating_add(cost);
            if spent >= k {
                let no = NoCertificate {
                    rule: Rule::ExitBudget,
                    node: b,
                };
                self.trace.push(RuleFiring {
                    rule: Rule::ExitBudget,
                    node: b,
                    before: spent as usize,
                    after: spent as usize,
                });
                return Ok(Folded::No(no));
            }
        }
        let h = block_of_edges(root, &marks);
        let e = h.edge_ids().next().expect("edge");
        Ok(Folded::Open(h, e, off[root]))
    }
}

fn canonical_no() -> Instance {
    let mut g = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    for v in 0..4 {
        g.set_terminal(v, true).unwrap();
    }
    Instance { graph: g, k: 1 }
}

fn canonical_yes() -> Instance {
    let mut g = MultiGraph::from_edges(2, &[(0, 1)]);
    g.set_terminal(0, true).unwrap();
    Instance { graph: g, k: 1 }
}

/// Simple copy with ids `0..n`: parallel edges beyond the first are
/// subdivided by a non-terminal, every edge is real.
fn simple_output(g: &MultiGraph, known: VertexId) -> (MultiGraph, Vec<Option<VertexId>>) {
    let mut h = MultiGraph::new();
    for v in g.vertices() {
        h.insert_vertex(v).unwrap();
        h.set_terminal(v, g.is_terminal(v)).unwrap();
    }
    h.reserve_ids(g.next_vertex_id(), 0);
    let mut pairs = BTreeSet::new();
    for (_, ed) in g.edges() {
        if ed.u == ed.v {
            continue;
        }
        if pairs.insert(ed.sorted()) {
            h.add_edge(ed.u, ed.v, EdgeKind::Real).unwrap();
        } else {
            let x = h.add_vertex();
            h.add_edge(ed.u, x, EdgeKind::Real).unwrap();
            h.add_edge(x, ed.v, EdgeKind::Real).unwrap();
        }
    }
    let (c, old) = h.compacted();
    let origin = old.into_iter().map(|v| (v < known).then_some(v)).collect();
    (c, origin)
}

fn finish(run: Run, verdict: Verdict, instance: Instance, origin: Vec<Option<VertexId>>) -> KernelOutput {
    let mut stats = run.stats;
    stats.kernel_vertices = instance.graph.vertex_count();
    stats.kernel_edges = instance.graph.edge_count();
    stats.kernel_terminals = instance.graph.terminal_count();
    KernelOutput {
        verdict,
        instance,
        origin,
        trace: run.trace,
        steps: run.steps,
        stats,
    }
}

/// Kernelize an instance. Branch values that need exact evaluation are
/// computed on branch kernels within the oracle budget of `cfg`.
pub fn kernelize(inst: &Instance, cfg: &KernelConfig) -> Result<KernelOutput, KernelError> {
    let g = &inst.graph;
    let k = inst.k;
    let mut run = Run {
        cfg,
        trace: Vec::new(),
        steps: Vec::new(),
        stats: KernelStats {
            input_vertices: g.vertex_count(),
            input_edges: g.edge_count(),
            ..KernelStats::default()
        },
        next_vertex: g.next_vertex_id(),
        next_edge: g.next_edge_id(),
    };
    let no = |run: Run, cert: NoCertificate| {
        let c = canonical_no();
        let n = c.graph.vertex_count();
        finish(run, Verdict::No(cert), c, vec![None; n])
    };
    if g.terminal_count() == 0 {
        let c = canonical_yes();
        return Ok(finish(run, Verdict::Yes, c, vec![None; 2]));
    }
    if k == 0 {
        let cert = NoCertificate {
            rule: Rule::ExitBudget,
            node: 0,
        };
        return Ok(no(run, cert));
    }
    let mut heavy: Vec<(MultiGraph, EdgeId)> = Vec::new();
    let mut offset = 0u32;
    // each heavy component costs at least max(1, its offset) beyond the shared face
    let mut floor = 1u32;
    for comp in g.connected_components() {
        let sub = g.induced_subgraph(&comp);
        if sub.terminal_count() == 0 {
            run.trace.push(RuleFiring {
                rule: Rule::ComponentDrop,
                node: 0,
                before: sub.vertex_count(),
                after: 0,
            });
            continue;
        }
        if sub.edge_count() == 0 {
            run.trace.push(RuleFiring {
                rule: Rule::ComponentDrop,
                node: 0,
                before: 1,
                after: 0,
            });
            continue;
        }
        match run.fold(&sub, k)? {
            Folded::No(cert) => return Ok(no(run, cert)),
            Folded::Open(root, e, off) => {
                if off == 0 && fcn_at_most_one(&root) {
                    run.trace.push(RuleFiring {
                        rule: Rule::ComponentDrop,
                        node: 0,
                        before: sub.vertex_count(),
                        after: 0,
                    });
                    continue;
                }
                offset += off;
                floor += off.max(1);
                heavy.push((root, e));
            }
        }
    }
    run.stats.offset = offset;
    if heavy.is_empty() {
        let c = canonical_yes();
        return Ok(finish(run, Verdict::Yes, c, vec![None; 2]));
    }
    // a single component goes on to its own counting bounds
    if heavy.len() >= 2 && floor > k {
        let cert = NoCertificate {
            rule: Rule::ExitComponents,
            node: 0,
        };
        run.trace.push(RuleFiring {
            rule: Rule::ExitComponents,
            node: 0,
            before: heavy.len(),
            after: heavy.len(),
        });
        return Ok(no(run, cert));
    }
    let kk = k - offset;
    let mut union = MultiGraph::new();
    union.reserve_ids(g.next_vertex_id(), 0);
    let known = g.next_vertex_id();
    let mut fresh = known;
    for (root, e) in heavy {
        let kern = match run.block(root, e, kk)? {
            Ok(kern) => kern,
            Err(cert) => return Ok(no(run, cert)),
        };
        let mut map: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for v in kern.graph.vertices() {
            let m = if v < known {
                v
            } else {
                fresh += 1;
                fresh - 1
            };
            map.insert(v, m);
            union.insert_vertex(m).unwrap();
            union.set_terminal(m, kern.graph.is_terminal(v)).unwrap();
        }
        for (_, ed) in kern.graph.edges() {
            union.add_edge(map[&ed.u], map[&ed.v], EdgeKind::Real).unwrap();
        }
    }
    let (graph, origin) = simple_output(&union, known);
    Ok(finish(run, Verdict::Open, Instance { graph, k: kk }, origin))
}
