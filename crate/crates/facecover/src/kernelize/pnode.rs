//! P-node rules. Every internal face of a P-node holds both corners, so a
//! child only matters through the terminals on its sides.

use alloc::vec::Vec;

use crate::classify::ComponentClass;
use crate::graph::{EdgeId, EdgeKind};

use super::gadgets::{replace_slot, Gadget};
use super::{Ctx, NiceKernel, NoCertificate, Rule, Work};

fn children(w: &Work) -> usize {
    w.h.edge_count() - 1
}

fn real_edges(w: &Work) -> Vec<EdgeId> {
    w.h.edges()
        .filter(|&(e, ed)| e != w.corners.edge && ed.kind == EdgeKind::Real && !w.slots.contains_key(&e))
        .map(|(e, _)| e)
        .collect()
}

fn of_class(w: &Work, class: ComponentClass) -> Vec<EdgeId> {
    w.slots.iter().filter(|(_, s)| s.class == class).map(|(&e, _)| e).collect()
}

/// P8: keep the smallest real edge, as long as two children remain.
fn drop_real_edges(ctx: &mut Ctx, w: &mut Work) {
    let real = real_edges(w);
    if real.len() >= 2 {
        ctx.apply(w, Rule::P8, |w, _| {
            let mut changed = false;
            for &e in &real[1..] {
                if children(w) > 2 {
                    w.h.remove_edge(e).unwrap();
                    changed = true;
                }
            }
            changed
        });
    }
}

pub fn kernelize_p_node(ctx: &mut Ctx, t: usize) -> Result<NiceKernel, NoCertificate> {
    let k = ctx.k as usize;
    let mut w = Work::new(ctx.tree, ctx.cl, t);
    if of_class(&w, ComponentClass::Problematic).len() > k {
        return Err(ctx.no(&w, Rule::ExitProblematic));
    }
    let bearing = w.slots.values().filter(|s| s.class != ComponentClass::TerminalFree).count();
    if bearing > 4 * k + 2 {
        return Err(ctx.no(&w, Rule::ExitPChildren));
    }
    drop_real_edges(ctx, &mut w);

    // P9: keep the smallest terminal-free child
    let tf = of_class(&w, ComponentClass::TerminalFree);
    if tf.len() >= 2 {
        ctx.apply(&mut w, Rule::P9, |w, _| {
            let mut changed = false;
            for &e in &tf[1..] {
                if children(w) > 2 {
                    w.slots.remove(&e);
                    w.h.remove_edge(e).unwrap();
                    changed = true;
                }
            }
            changed
        });
    }
    for e in of_class(&w, ComponentClass::TerminalFree) {
        ctx.apply(&mut w, Rule::Rr1, |w, ids| {
            replace_slot(w, ids, e, Gadget::Edge);
            true
        });
    }
    drop_real_edges(ctx, &mut w);
    for e in of_class(&w, ComponentClass::Unproblematic) {
        ctx.apply(&mut w, Rule::Rr2, |w, ids| {
            replace_slot(w, ids, e, Gadget::P3);
            true
        });
    }
    // a C4 would let siblings pass between its two paths, so semi children are spliced
    if !w.slots.is_empty() {
        ctx.apply(&mut w, Rule::Splice, |_, _| true);
    }
    Ok(ctx.finish(w))
}
