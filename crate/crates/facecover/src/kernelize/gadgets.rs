//! Constant-size replacements for child components.

use crate::decomposition::Corners;
use crate::graph::{EdgeId, EdgeKind, MultiGraph, VertexId};

use super::{IdGen, NiceKernel, Work};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gadget {
    /// A real corner edge.
    Edge,
    /// Terminal-subdivided edge `c1 - x - c2`.
    P3,
    /// `P3` plus a real edge `c1 c2`.
    Triangle,
    /// Two terminal-subdivided edges `c1 - t1 - c2`, `c1 - t2 - c2`.
    C4,
    /// Wheel with rim `a t1 b t2` and hub `h`, attached by `c1 a`, `c2 b`.
    W4,
}

fn real(g: &mut MultiGraph, ids: &mut IdGen, u: VertexId, v: VertexId) {
    g.insert_edge(ids.edge(), u, v, EdgeKind::Real).unwrap();
}

fn vertex(g: &mut MultiGraph, ids: &mut IdGen, terminal: bool) -> VertexId {
    let v = ids.vertex();
    g.insert_vertex(v).unwrap();
    g.set_terminal(v, terminal).unwrap();
    v
}

/// Add gadget `kind` between `c1` and `c2`; `Edge` is not handled here.
pub fn add_gadget(g: &mut MultiGraph, ids: &mut IdGen, kind: Gadget, c1: VertexId, c2: VertexId) {
    match kind {
        Gadget::Edge => real(g, ids, c1, c2),
        Gadget::P3 | Gadget::Triangle => {
            let x = vertex(g, ids, true);
            real(g, ids, c1, x);
            real(g, ids, x, c2);
            if kind == Gadget::Triangle {
                real(g, ids, c1, c2);
            }
        }
        Gadget::C4 => {
            for _ in 0..2 {
                let x = vertex(g, ids, true);
                real(g, ids, c1, x);
                real(g, ids, x, c2);
            }
        }
        Gadget::W4 => {
            let a = vertex(g, ids, false);
            let t1 = vertex(g, ids, true);
            let b = vertex(g, ids, false);
            let t2 = vertex(g, ids, true);
            let h = vertex(g, ids, false);
            for (x, y) in [(a, t1), (t1, b), (b, t2), (t2, a), (h, a), (h, t1), (h, b), (h, t2), (c1, a), (c2, b)] {
                real(g, ids, x, y);
            }
        }
    }
}

/// Replace slot `e` of the working graph by gadget `kind`.
pub fn replace_slot(w: &mut Work, ids: &mut IdGen, e: EdgeId, kind: Gadget) {
    w.slots.remove(&e);
    let ed = w.h.edge(e).unwrap();
    w.h.remove_edge(e).unwrap();
    if kind == Gadget::Edge {
        w.h.insert_edge(e, ed.u, ed.v, EdgeKind::Real).unwrap();
    } else {
        add_gadget(&mut w.h, ids, kind, ed.u, ed.v);
    }
}

/// The gadget alone as an enhancement with corners 0 and 1.
pub fn gadget_enhancement(kind: Gadget) -> NiceKernel {
    let mut g = MultiGraph::new();
    g.insert_vertex(0).unwrap();
    g.insert_vertex(1).unwrap();
    g.insert_edge(0, 0, 1, EdgeKind::Virtual).unwrap();
    let mut ids = IdGen::new(2, 1);
    add_gadget(&mut g, &mut ids, kind, 0, 1);
    NiceKernel {
        graph: g,
        corners: Corners { c1: 0, c2: 1, edge: 0 },
    }
}

pub fn p3_enhancement() -> NiceKernel {
    gadget_enhancement(Gadget::P3)
}

pub fn triangle_enhancement() -> NiceKernel {
    gadget_enhancement(Gadget::Triangle)
}

pub fn c4_enhancement() -> NiceKernel {
    gadget_enhancement(Gadget::C4)
}

pub fn w4_enhancement() -> NiceKernel {
    gadget_enhancement(Gadget::W4)
}
