//! Left-right planarity test with embedding extraction on simple graphs.
//!
//! Works on dense vertex indices `0..n` and an edge list without loops or
//! duplicate pairs. All depth-first searches use explicit stacks.

use alloc::vec;
use alloc::vec::Vec;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    id: usize,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        core::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr<'a> {
    n: usize,
    ends: &'a [(usize, usize)],
    adj: Vec<Vec<usize>>,
    // orientation of each edge: tail, head
    tail: Vec<usize>,
    head: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    out: Vec<Vec<usize>>,
    lowpt_edge: Vec<usize>,
    reference: Vec<usize>,
    side: Vec<i64>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    next_pair_id: usize,
    roots: Vec<usize>,
}

impl<'a> Lr<'a> {
    fn new(n: usize, ends: &'a [(usize, usize)]) -> Self {
        let m = ends.len();
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in ends.iter().enumerate() {
            adj[u].push(i);
            adj[v].push(i);
        }
        Lr {
            n,
            ends,
            adj,
            tail: vec![NONE; m],
            head: vec![NONE; m],
            oriented: vec![false; m],
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out: vec![Vec::new(); n],
            lowpt_edge: vec![NONE; m],
            reference: vec![NONE; m],
            side: vec![1; m],
            stack_bottom: vec![NONE; m],
            stack: Vec::new(),
            next_pair_id: 0,
            roots: Vec::new(),
        }
    }

    fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn orient(&mut self, root: usize) {
        let mut ind = vec![0usize; self.n];
        let mut skip_init = vec![false; self.ends.len()];
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            while ind[v] < self.adj[v].len() {
                let vw = self.adj[v][ind[v]];
                let w = self.other(vw, v);
                if !skip_init[vw] {
                    if self.oriented[vw] {
                        ind[v] += 1;
                        continue;
                    }
                    self.oriented[vw] = true;
                    self.tail[vw] = v;
                    self.head[vw] = w;
                    self.out[v].push(vw);
                    self.lowpt[vw] = self.height[v];
                    self.lowpt2[vw] = self.height[v];
                    if self.height[w] == NONE {
                        self.parent_edge[w] = vw;
                        self.height[w] = self.height[v] + 1;
                        dfs.push(v);
                        dfs.push(w);
                        skip_init[vw] = true;
                        break;
                    } else {
                        self.lowpt[vw] = self.height[w];
                    }
                }
                self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
                if self.lowpt2[vw] < self.height[v] {
                    self.nesting_depth[vw] += 1;
                }
                if e != NONE {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                ind[v] += 1;
            }
        }
    }

    fn top_id(&self) -> usize {
        self.stack.last().map_or(NONE, |p| p.id)
    }

    fn conflicting(&self, iv: &Interval, b: usize) -> bool {
        !iv.is_empty() && self.lowpt[iv.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn new_pair(&mut self, left: Interval, right: Interval) -> ConflictPair {
        let id = self.next_pair_id;
        self.next_pair_id += 1;
        ConflictPair { id, left, right }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = self.new_pair(Interval::EMPTY, Interval::EMPTY);
        loop {
            let mut q = self.stack.pop().expect("conflict stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.reference[p.right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if p.left.low != NONE {
                self.reference[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        while let Some(top) = self.stack.last().copied() {
            if self.lowest(&top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if p.left.low != NONE {
                self.side[p.left.low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.head[p.left.high] == u {
                p.left.high = self.reference[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.reference[p.left.low] = p.right.low;
                self.side[p.left.low] = -1;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.head[p.right.high] == u {
                p.right.high = self.reference[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.reference[p.right.low] = p.left.low;
                self.side[p.right.low] = -1;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = *self.stack.last().expect("return edge without conflict pair");
            let hl = top.left.high;
            let hr = top.right.high;
            if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                self.reference[e] = hl;
            } else {
                self.reference[e] = hr;
            }
        }
    }

    fn test(&mut self, root: usize) -> bool {
        let mut ind = vec![0usize; self.n];
        let mut skip_init = vec![false; self.ends.len()];
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            let mut descended = false;
            while ind[v] < self.out[v].len() {
                let ei = self.out[v][ind[v]];
                let w = self.head[ei];
                if !skip_init[ei] {
                    self.stack_bottom[ei] = self.top_id();
                    if ei == self.parent_edge[w] {
                        dfs.push(v);
                        dfs.push(w);
                        skip_init[ei] = true;
                        descended = true;
                        break;
                    } else {
                        self.lowpt_edge[ei] = ei;
                        let p = self.new_pair(Interval::EMPTY, Interval { low: ei, high: ei });
                        self.stack.push(p);
                    }
                }
                if self.lowpt[ei] < self.height[v] {
                    if ind[v] == 0 {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                ind[v] += 1;
            }
            if !descended && e != NONE {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = Vec::new();
        let mut cur = e;
        while self.reference[cur] != NONE {
            chain.push(cur);
            cur = self.reference[cur];
        }
        let mut s = self.side[cur];
        while let Some(x) = chain.pop() {
            self.side[x] *= s;
            self.reference[x] = NONE;
            s = self.side[x];
        }
        self.side[e]
    }
}

/// Cyclic neighbor lists as half-edge linked lists.
struct Rot {
    // half-edge h = 2 * edge + (0 if leaving ends[edge].0 else 1)
    cw: Vec<usize>,
    ccw: Vec<usize>,
    first: Vec<usize>,
}

impl Rot {
    fn insert_after(&mut self, h_ref: usize, h: usize) {
        let nxt = self.cw[h_ref];
        self.cw[h_ref] = h;
        self.ccw[h] = h_ref;
        self.cw[h] = nxt;
        self.ccw[nxt] = h;
    }

    fn add_cw(&mut self, v: usize, h: usize, h_ref: usize) {
        if h_ref == NONE {
            self.cw[h] = h;
            self.ccw[h] = h;
            self.first[v] = h;
        } else {
            self.insert_after(h_ref, h);
        }
    }

    fn add_ccw(&mut self, v: usize, h: usize, h_ref: usize) {
        if h_ref == NONE {
            self.add_cw(v, h, NONE);
        } else {
            let before = self.ccw[h_ref];
            self.insert_after(before, h);
            if self.first[v] == h_ref {
                self.first[v] = h;
            }
        }
    }

    fn add_first(&mut self, v: usize, h: usize) {
        let f = self.first[v];
        if f == NONE {
            self.add_cw(v, h, NONE);
        } else {
            self.add_ccw(v, h, f);
        }
    }
}

/// Planarity test. On success returns, for each vertex, its incident edge
/// indices in clockwise order.
pub fn lr_embed(n: usize, ends: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let m = ends.len();
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut lr = Lr::new(n, ends);
    for v in 0..n {
        if lr.height[v] == NONE {
            lr.height[v] = 0;
            lr.roots.push(v);
            lr.orient(v);
        }
    }
    for v in 0..n {
        let mut o = core::mem::take(&mut lr.out[v]);
        o.sort_by_key(|&e| lr.nesting_depth[e]);
        lr.out[v] = o;
    }
    let roots = lr.roots.clone();
    for &r in &roots {
        if !lr.test(r) {
            return None;
        }
    }
    for e in 0..m {
        let s = lr.sign(e);
        lr.nesting_depth[e] *= s;
    }
    for v in 0..n {
        let mut o = core::mem::take(&mut lr.out[v]);
        o.sort_by_key(|&e| lr.nesting_depth[e]);
        lr.out[v] = o;
    }
    let half = |e: usize, from: usize| 2 * e + usize::from(ends[e].0 != from);
    let mut rot = Rot {
        cw: vec![NONE; 2 * m],
        ccw: vec![NONE; 2 * m],
        first: vec![NONE; n],
    };
    for v in 0..n {
        let mut prev = NONE;
        for &e in &lr.out[v] {
            let h = half(e, v);
            rot.add_cw(v, h, prev);
            prev = h;
        }
    }
    let mut left_ref = vec![NONE; n];
    let mut right_ref = vec![NONE; n];
    let mut ind = vec![0usize; n];
    for &r in &roots {
        let mut dfs = vec![r];
        while let Some(v) = dfs.pop() {
            while ind[v] < lr.out[v].len() {
                let ei = lr.out[v][ind[v]];
                ind[v] += 1;
                let w = lr.head[ei];
                let hw = half(ei, w);
                if ei == lr.parent_edge[w] {
                    rot.add_first(w, hw);
                    left_ref[v] = half(ei, v);
                    right_ref[v] = half(ei, v);
                    dfs.push(v);
                    dfs.push(w);
                    break;
                } else if lr.side[ei] == 1 {
                    rot.add_cw(w, hw, right_ref[w]);
                } else {
                    rot.add_ccw(w, hw, left_ref[w]);
                    left_ref[w] = hw;
                }
            }
        }
    }
    let mut result = vec![Vec::new(); n];
    for (v, out) in result.iter_mut().enumerate() {
        let f = rot.first[v];
        if f == NONE {
            continue;
        }
        let mut h = f;
        loop {
            out.push(h / 2);
            h = rot.cw[h];
            if h == f {
                break;
            }
        }
    }
    Some(result)
}
