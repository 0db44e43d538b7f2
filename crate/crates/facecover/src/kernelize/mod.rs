//! Nice kernels over SPR-trees: basic replacements, node-specific reduction
//! rules, rigidization and the instance-level driver.

mod driver;
mod gadgets;
mod pnode;
mod rigidize;
mod rnode;
mod snode;

pub use driver::{kernelize, kernelize_block, BlockKernel, KernelConfig, KernelError, KernelOutput, KernelStats, Verdict};
pub use gadgets::{c4_enhancement, p3_enhancement, triangle_enhancement, w4_enhancement, Gadget};
pub use rigidize::{rigidize, separator_vertices, two_separator_free};
pub use rnode::{extended_skeletons, four_share_two_faces, three_share_two_faces};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::classify::{Classification, ComponentClass, NodeFlags};
use crate::decomposition::{Corners, SprTree};
use crate::embedding::RotationSystem;
use crate::graph::{EdgeId, EdgeKind, MultiGraph, VertexId};

/// Fresh vertex and edge ids, never reused within one run.
#[derive(Clone, Debug)]
pub struct IdGen {
    next_vertex: VertexId,
    next_edge: EdgeId,
}

impl IdGen {
    pub fn new(next_vertex: VertexId, next_edge: EdgeId) -> Self {
        IdGen { next_vertex, next_edge }
    }

    /// Counters above every id used by `tree`, its skeletons and `g`.
    pub fn above(tree: &SprTree) -> Self {
        let mut v = tree.graph.next_vertex_id();
        let mut e = tree.graph.next_edge_id();
        for n in &tree.nodes {
            v = v.max(n.skeleton.next_vertex_id());
            e = e.max(n.skeleton.next_edge_id());
            for (id, ed) in n.skeleton.edges() {
                e = e.max(id + 1);
                v = v.max(ed.u.max(ed.v) + 1);
            }
        }
        IdGen::new(v, e)
    }

    pub fn vertex(&mut self) -> VertexId {
        let v = self.next_vertex;
        self.next_vertex += 1;
        v
    }

    pub fn edge(&mut self) -> EdgeId {
        let e = self.next_edge;
        self.next_edge += 1;
        e
    }

    pub fn reserve(&mut self, g: &MultiGraph) {
        self.next_vertex = self.next_vertex.max(g.next_vertex_id());
        self.next_edge = self.next_edge.max(g.next_edge_id());
    }
}

/// A replacement for an enhancement: contains both corners and the corner
/// edge (virtual, with the id of the corner edge it replaces).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceKernel {
    pub graph: MultiGraph,
    pub corners: Corners,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Rr1,
    Rr2,
    Rr3,
    S4,
    S5,
    S6,
    S7,
    P8,
    P9,
    Thfr,
    Ber,
    Pfm,
    Bec,
    Rigidize,
    Splice,
    ExitProblematic,
    ExitSemi,
    ExitTerminals,
    ExitPChildren,
    ExitComponents,
    ExitBudget,
    CutVertexFold,
    ComponentDrop,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Rr1 => "RR1",
            Rule::Rr2 => "RR2",
            Rule::Rr3 => "RR3",
            Rule::S4 => "S4",
            Rule::S5 => "S5",
            Rule::S6 => "S6",
            Rule::S7 => "S7",
            Rule::P8 => "P8",
            Rule::P9 => "P9",
            Rule::Thfr => "R-THFR",
            Rule::Ber => "R-BER",
            Rule::Pfm => "R-PFM",
            Rule::Bec => "R-BEC",
            Rule::Rigidize => "rigidize",
            Rule::Splice => "splice",
            Rule::ExitProblematic => "exit: more than k problematic",
            Rule::ExitSemi => "exit: more than k^2 semi-problematic",
            Rule::ExitTerminals => "exit: more than 3k^2+k terminals",
            Rule::ExitPChildren => "exit: more than 4k+2 terminal children",
            Rule::ExitComponents => "exit: more than k components need two faces",
            Rule::ExitBudget => "exit: cut-vertex folding exceeds k",
            Rule::CutVertexFold => "cut-vertex fold",
            Rule::ComponentDrop => "component drop",
        }
    }

    pub fn is_exit(self) -> bool {
        matches!(
            self,
            Rule::ExitProblematic
                | Rule::ExitSemi
                | Rule::ExitTerminals
                | Rule::ExitPChildren
                | Rule::ExitComponents
                | Rule::ExitBudget
        )
    }
}

/// One rule application: sizes are vertex counts of the node's working
/// graph (children not yet spliced count as one edge).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleFiring {
    pub rule: Rule,
    pub node: usize,
    pub before: usize,
    pub after: usize,
}

/// Materialized enhancements around one rule application, kept for
/// safeness checks.
#[derive(Clone, Debug)]
pub struct RuleStep {
    pub rule: Rule,
    pub node: usize,
    pub corners: Corners,
    pub before: MultiGraph,
    pub after: MultiGraph,
}

/// The budget bound that certifies a NO answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NoCertificate {
    pub rule: Rule,
    pub node: usize,
}

/// A child still standing as a virtual edge of the working graph.
#[derive(Clone, Copy, Debug)]
pub struct Slot {
    pub child: usize,
    pub class: ComponentClass,
    pub flags: NodeFlags,
}

/// Working enhancement of one node: its skeleton with some children
/// replaced by gadgets and the rest still virtual.
#[derive(Clone, Debug)]
pub struct Work {
    pub node: usize,
    pub h: MultiGraph,
    pub corners: Corners,
    pub slots: BTreeMap<EdgeId, Slot>,
    /// Vertex merged away -> vertex it was merged into.
    pub alias: BTreeMap<VertexId, VertexId>,
    /// Fixed embedding of `h`, kept by the R-node rules.
    pub rot: Option<RotationSystem>,
}

impl Work {
    /// Skeleton of `t` with terminal marks; every child edge becomes a slot.
    pub fn new(tree: &SprTree, cl: &Classification, t: usize) -> Self {
        let node = tree.node(t);
        let mut h = node.skeleton.clone();
        let vs: Vec<VertexId> = h.vertices().collect();
        for v in vs {
            h.set_terminal(v, tree.graph.is_terminal(v)).unwrap();
        }
        let corners = tree.corners(t);
        if t != tree.root() {
            h.set_edge_kind(corners.edge, EdgeKind::Virtual).unwrap();
        }
        let slots = crate::classify::child_edges(tree, t)
            .into_iter()
            .map(|(e, ch)| {
                (
                    e,
                    Slot {
                        child: ch,
                        class: cl.class(ch),
                        flags: cl.flags[ch],
                    },
                )
            })
            .collect();
        Work {
            node: t,
            h,
            corners,
            slots,
            alias: BTreeMap::new(),
            rot: None,
        }
    }

    pub fn resolve(&self, mut v: VertexId) -> VertexId {
        while let Some(&w) = self.alias.get(&v) {
            v = w;
        }
        v
    }

    pub fn size(&self) -> usize {
        self.h.vertex_count()
    }

    /// The enhancement this working graph stands for: every slot replaced
    /// by its child's kernel without the kernel's corner edge.
    pub fn materialize(&self, kernels: &[Option<NiceKernel>]) -> MultiGraph {
        let mut g = self.h.clone();
        for (&e, slot) in &self.slots {
            let kern = kernels[slot.child].as_ref().expect("child kernel");
            g.remove_edge(e).unwrap();
            splice_into(&mut g, kern, |v| self.resolve(v));
        }
        g
    }

    /// Merge `gone` into `keep`; the survivor is a terminal if either was.
    pub fn merge(&mut self, keep: VertexId, gone: VertexId) {
        let term = self.h.is_terminal(keep) || self.h.is_terminal(gone);
        let inc: Vec<EdgeId> = self.h.incident(gone).to_vec();
        for f in inc {
            let fe = self.h.remove_edge(f).unwrap();
            let other = fe.other(gone);
            if other != keep {
                self.h.insert_edge(f, keep, other, fe.kind).unwrap();
            } else {
                self.slots.remove(&f);
            }
        }
        self.h.remove_vertex(gone).unwrap();
        self.h.set_terminal(keep, term).unwrap();
        self.alias.insert(gone, keep);
    }
}

/// Copy `kern` into `g` without its corner edge; `map` renames corners.
pub fn splice_into(g: &mut MultiGraph, kern: &NiceKernel, map: impl Fn(VertexId) -> VertexId) {
    for v in kern.graph.vertices() {
        let m = map(v);
        if !g.has_vertex(m) {
            g.insert_vertex(m).unwrap();
            g.set_terminal(m, kern.graph.is_terminal(v)).unwrap();
        }
    }
    for (f, ed) in kern.graph.edges() {
        if f != kern.corners.edge {
            g.insert_edge(f, map(ed.u), map(ed.v), ed.kind).unwrap();
        }
    }
}

/// Shared state of one block's leaves-to-root pass.
pub struct Ctx<'a> {
    pub tree: &'a SprTree,
    pub cl: &'a Classification,
    pub k: u32,
    pub ids: IdGen,
    pub kernels: Vec<Option<NiceKernel>>,
    pub trace: Vec<RuleFiring>,
    /// When set, every rule application is materialized here.
    pub steps: Option<Vec<RuleStep>>,
}

impl<'a> Ctx<'a> {
    pub fn new(tree: &'a SprTree, cl: &'a Classification, k: u32, ids: IdGen) -> Self {
        Ctx {
            tree,
            cl,
            k,
            ids,
            kernels: alloc::vec![None; tree.len()],
            trace: Vec::new(),
            steps: None,
        }
    }

    /// Run `f` as one application of `rule`; it returns whether it changed
    /// anything. `view` maps the working graph to the graph the step is
    /// judged on.
    pub fn apply_with(
        &mut self,
        w: &mut Work,
        rule: Rule,
        view: impl Fn(&Work, &mut IdGen) -> Work,
        f: impl FnOnce(&mut Work, &mut IdGen) -> bool,
    ) -> bool {
        let before_size = w.size();
        let before = self.steps.as_ref().map(|_| {
            let v = view(w, &mut self.ids.clone());
            v.materialize(&self.kernels)
        });
        let fired = f(w, &mut self.ids);
        if fired {
            self.trace.push(RuleFiring {
                rule,
                node: w.node,
                before: before_size,
                after: w.size(),
            });
            if let (Some(steps), Some(before)) = (self.steps.as_mut(), before) {
                let mut ids = self.ids.clone();
                let after = view(w, &mut ids).materialize(&self.kernels);
                steps.push(RuleStep {
                    rule,
                    node: w.node,
                    corners: w.corners,
                    before,
                    after,
                });
            }
        }
        fired
    }

    /// Like `apply`, but the step is judged from `start` rather than from
    /// the working graph just before it.
    pub fn apply_since(
        &mut self,
        w: &mut Work,
        rule: Rule,
        start: Option<MultiGraph>,
        f: impl FnOnce(&mut Work, &mut IdGen) -> bool,
    ) -> bool {
        let before_size = w.size();
        let fired = f(w, &mut self.ids);
        if fired {
            self.trace.push(RuleFiring {
                rule,
                node: w.node,
                before: before_size,
                after: w.size(),
            });
            if let (Some(steps), Some(before)) = (self.steps.as_mut(), start) {
                steps.push(RuleStep {
                    rule,
                    node: w.node,
                    corners: w.corners,
                    before,
                    after: w.materialize(&self.kernels),
                });
            }
        }
        fired
    }

    pub fn apply(&mut self, w: &mut Work, rule: Rule, f: impl FnOnce(&mut Work, &mut IdGen) -> bool) -> bool {
        self.apply_with(w, rule, |w, _| w.clone(), f)
    }

    pub fn no(&mut self, w: &Work, rule: Rule) -> NoCertificate {
        self.trace.push(RuleFiring {
            rule,
            node: w.node,
            before: w.size(),
            after: w.size(),
        });
        NoCertificate { rule, node: w.node }
    }

    /// Kernel of node `t` from its final working graph.
    pub fn finish(&mut self, w: Work) -> NiceKernel {
        let g = w.materialize(&self.kernels);
        NiceKernel {
            graph: g,
            corners: w.corners,
        }
    }
}

#[cfg(test)]
mod tests;
