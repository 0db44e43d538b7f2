//! S-node rules. The skeleton is a cycle: the corner edge plus a path from
//! `c1` to `c2` whose edges are real edges or children.
//!
//! With children numbered along the path, `f1 = 1 + sum(f1_i - 1)` and
//! `f2 = 2 + sum(f2_i - 2)`, while `f0` needs internal faces of children
//! for every terminal. Rules that only preserve `f1, f2` run when `f0` is
//! provably above `k` and stays so.

use alloc::vec::Vec;

use crate::classify::ComponentClass;
use crate::graph::{EdgeId, EdgeKind, VertexId};

use super::gadgets::{replace_slot, Gadget};
use super::{Ctx, NiceKernel, Rule, Work};

/// Path `c1 = v0, ..., vm = c2` and its edges, read from the working graph
/// while it is still a cycle.
fn path(w: &Work) -> (Vec<VertexId>, Vec<EdgeId>) {
    let mut vs = alloc::vec![w.corners.c1];
    let mut es = Vec::new();
    let mut prev = w.corners.edge;
    let mut v = w.corners.c1;
    while v != w.corners.c2 {
        let e = *w.h.incident(v).iter().find(|&&e| e != prev && e != w.corners.edge).expect("cycle");
        v = w.h.edge(e).unwrap().other(v);
        vs.push(v);
        es.push(e);
        prev = e;
    }
    (vs, es)
}

fn count(w: &Work, class: ComponentClass) -> usize {
    w.slots.values().filter(|s| s.class == class).count()
}

/// `f0` (and every corner variant) is above `k` for a reason no rule below
/// removes: a non-corner terminal with no child next to it, more than `k`
/// children needing internal faces, or more than `2k` non-corner terminals
/// on the path (an internal face meets at most two path vertices).
fn f0_dead(w: &Work, k: u32) -> bool {
    let (vs, es) = path(w);
    let bare = (1..vs.len() - 1)
        .any(|i| w.h.is_terminal(vs[i]) && !w.slots.contains_key(&es[i - 1]) && !w.slots.contains_key(&es[i]));
    let inner = (1..vs.len() - 1).filter(|&i| w.h.is_terminal(vs[i])).count();
    let needy = w.slots.values().filter(|s| s.class != ComponentClass::TerminalFree).count();
    bare || needy > k as usize || inner > 2 * k as usize
}

pub fn kernelize_s_node(ctx: &mut Ctx, t: usize) -> NiceKernel {
    let k = ctx.k;
    let mut w = Work::new(ctx.tree, ctx.cl, t);
    let dead0 = f0_dead(&w, k);

    // S4: keep one non-corner path terminal when f0 cannot profit from the others
    let (vs, es) = path(&w);
    let bare: Vec<usize> = (1..vs.len() - 1)
        .filter(|&i| w.h.is_terminal(vs[i]) && !w.slots.contains_key(&es[i - 1]) && !w.slots.contains_key(&es[i]))
        .collect();
    let needy = w.slots.values().filter(|s| s.class != ComponentClass::TerminalFree).count();
    if !bare.is_empty() || needy > k as usize {
        let keep = bare.first().map(|&i| vs[i]);
        let inner: Vec<VertexId> = (1..vs.len() - 1).map(|i| vs[i]).filter(|&v| w.h.is_terminal(v)).collect();
        let keep = keep.or(inner.first().copied());
        ctx.apply(&mut w, Rule::S4, |w, _| {
            let mut changed = false;
            for &v in &inner {
                if Some(v) != keep {
                    w.h.set_terminal(v, false).unwrap();
                    changed = true;
                }
            }
            changed
        });
    }

    // S5: terminal-free children become real edges
    let tf: Vec<EdgeId> = w
        .slots
        .iter()
        .filter(|(_, s)| s.class == ComponentClass::TerminalFree)
        .map(|(&e, _)| e)
        .collect();
    for e in tf {
        let ed = w.h.edge(e).unwrap();
        if dead0 || (!w.h.is_terminal(ed.u) && !w.h.is_terminal(ed.v)) {
            ctx.apply(&mut w, Rule::S5, |w, ids| {
                replace_slot(w, ids, e, Gadget::Edge);
                true
            });
        }
    }

    // S4: paths of real edges through non-terminals become one edge
    ctx.apply(&mut w, Rule::S4, |w, _| smooth(w));

    // S6: unproblematic children
    let dead1 = count(&w, ComponentClass::SemiProblematic) + count(&w, ComponentClass::Problematic) >= k as usize;
    let unp: Vec<EdgeId> = w
        .slots
        .iter()
        .filter(|(_, s)| s.class == ComponentClass::Unproblematic)
        .map(|(&e, _)| e)
        .collect();
    contract_surplus(ctx, &mut w, &unp, Rule::S6);
    for &e in unp.iter().take(k as usize + 1) {
        let flags = w.slots[&e].flags;
        let gadget = if flags.internal[0] {
            Some(Gadget::Triangle)
        } else if dead0 {
            Some(Gadget::P3)
        } else {
            None
        };
        if let Some(g) = gadget {
            ctx.apply(&mut w, Rule::S6, |w, ids| {
                replace_slot(w, ids, e, g);
                true
            });
        }
    }

    // S7: semi-problematic children
    let semi: Vec<EdgeId> = w
        .slots
        .iter()
        .filter(|(_, s)| s.class == ComponentClass::SemiProblematic)
        .map(|(&e, _)| e)
        .collect();
    contract_surplus(ctx, &mut w, &semi, Rule::S7);
    for &e in semi.iter().take(k as usize + 1) {
        let flags = w.slots[&e].flags;
        let gadget = if flags.internal[0] {
            Some(Gadget::C4)
        } else if dead0 && dead1 {
            Some(Gadget::W4)
        } else {
            None
        };
        if let Some(g) = gadget {
            let rule = if g == Gadget::C4 { Rule::Rr3 } else { Rule::S7 };
            ctx.apply(&mut w, rule, |w, ids| {
                replace_slot(w, ids, e, g);
                true
            });
        }
    }

    if !w.slots.is_empty() {
        ctx.apply(&mut w, Rule::Splice, |_, _| true);
    }
    ctx.finish(w)
}

/// Contract all but the first `k + 1` of `list` into single vertices.
fn contract_surplus(ctx: &mut Ctx, w: &mut Work, list: &[EdgeId], rule: Rule) {
    if list.len() <= ctx.k as usize + 1 {
        return;
    }
    let gone: Vec<EdgeId> = list[ctx.k as usize + 1..].to_vec();
    ctx.apply(w, rule, |w, _| {
        for &e in &gone {
            let ed = w.h.edge(e).unwrap();
            let (u, v) = (ed.u, ed.v);
            if w.corners.contains(u) && w.corners.contains(v) {
                continue;
            }
            w.slots.remove(&e);
            w.h.remove_edge(e).unwrap();
            let (keep, drop) = if w.corners.contains(u) || (!w.corners.contains(v) && u < v) {
                (u, v)
            } else {
                (v, u)
            };
            w.merge(keep, drop);
        }
        true
    });
}

/// Replace each maximal run of real path edges whose inner vertices are
/// non-terminals by its first edge.
fn smooth(w: &mut Work) -> bool {
    let (vs, es) = path(w);
    let mut changed = false;
    let mut i = 0;
    while i < es.len() {
        if w.slots.contains_key(&es[i]) {
            i += 1;
            continue;
        }
        let mut j = i;
        while j + 1 < es.len() && !w.slots.contains_key(&es[j + 1]) && !w.h.is_terminal(vs[j + 1]) {
            j += 1;
        }
        if j > i {
            for &v in &vs[i + 1..=j] {
                w.h.remove_vertex(v).unwrap();
            }
            w.h.insert_edge(es[i], vs[i], vs[j + 1], EdgeKind::Real).unwrap();
            changed = true;
        }
        i = j + 1;
    }
    changed
}
