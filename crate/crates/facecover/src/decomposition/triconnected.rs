//! Triconnected components of a biconnected multigraph by path search.
//!
//! Follows the Hopcroft-Tarjan algorithm with the Gutwenger-Mutzel
//! corrections. Components are returned after merging adjacent bonds and
//! adjacent polygons, so they are the unique triconnected components.

use alloc::vec;
use alloc::vec::Vec;

const NIL: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CompKind {
    Bond,
    Polygon,
    Triconnected,
}

#[derive(Clone, Debug)]
pub struct TricComp {
    pub kind: CompKind,
    pub edges: Vec<usize>,
}

/// Edges `0..m` are the input edges; higher indices are virtual edges,
/// each shared by exactly two components.
#[derive(Clone, Debug)]
pub struct TricResult {
    pub ends: Vec<(usize, usize)>,
    pub comps: Vec<TricComp>,
}

struct Lists {
    prev: Vec<usize>,
    next: Vec<usize>,
    val: Vec<usize>,
    head: Vec<usize>,
    tail: Vec<usize>,
}

impl Lists {
    fn new(n: usize) -> Self {
        Lists {
            prev: Vec::new(),
            next: Vec::new(),
            val: Vec::new(),
            head: vec![NIL; n],
            tail: vec![NIL; n],
        }
    }

    fn node(&mut self, val: usize) -> usize {
        self.prev.push(NIL);
        self.next.push(NIL);
        self.val.push(val);
        self.val.len() - 1
    }

    fn push_back(&mut self, l: usize, val: usize) -> usize {
        let x = self.node(val);
        let t = self.tail[l];
        self.prev[x] = t;
        if t == NIL {
            self.head[l] = x;
        } else {
            self.next[t] = x;
        }
        self.tail[l] = x;
        x
    }

    fn push_front(&mut self, l: usize, val: usize) -> usize {
        let x = self.node(val);
        let h = self.head[l];
        self.next[x] = h;
        if h == NIL {
            self.tail[l] = x;
        } else {
            self.prev[h] = x;
        }
        self.head[l] = x;
        x
    }

    fn remove(&mut self, l: usize, x: usize) {
        let (p, q) = (self.prev[x], self.next[x]);
        if p == NIL {
            self.head[l] = q;
        } else {
            self.next[p] = q;
        }
        if q == NIL {
            self.tail[l] = p;
        } else {
            self.prev[q] = p;
        }
        self.prev[x] = NIL;
        self.next[x] = NIL;
    }

    fn len(&self, l: usize) -> usize {
        let mut c = 0;
        let mut x = self.head[l];
        while x != NIL {
            c += 1;
            x = self.next[x];
        }
        c
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Ty {
    Unseen,
    Tree,
    Frond,
    Removed,
}

struct State {
    n: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    ty: Vec<Ty>,
    start: Vec<bool>,
    in_adj: Vec<usize>,
    in_high: Vec<usize>,
    comps: Vec<TricComp>,
    number: Vec<usize>,
    newnum: Vec<usize>,
    lowpt1: Vec<usize>,
    lowpt2: Vec<usize>,
    nd: Vec<usize>,
    degree: Vec<usize>,
    father: Vec<usize>,
    tree_arc: Vec<usize>,
    node_at: Vec<usize>,
    adj: Lists,
    high: Lists,
    th: Vec<usize>,
    ta: Vec<isize>,
    tb: Vec<usize>,
    estack: Vec<usize>,
    root: usize,
}

impl State {
    fn new_edge(&mut self, a: usize, b: usize) -> usize {
        self.src.push(a);
        self.tgt.push(b);
        self.ty.push(Ty::Unseen);
        self.start.push(false);
        self.in_adj.push(NIL);
        self.in_high.push(NIL);
        self.src.len() - 1
    }

    fn high(&self, v: usize) -> usize {
        let h = self.high.head[v];
        if h == NIL {
            0
        } else {
            self.high.val[h]
        }
    }

    fn del_high(&mut self, e: usize) {
        let h = self.in_high[e];
        if h != NIL {
            self.high.remove(self.tgt[e], h);
            self.in_high[e] = NIL;
        }
    }

    fn first_child(&self, w: usize) -> Option<usize> {
        let h = self.adj.head[w];
        (h != NIL).then(|| self.tgt[self.adj.val[h]])
    }

    fn deg2_chain(&self, w: usize, wnum: usize) -> bool {
        self.degree[w] == 2 && self.first_child(w).is_some_and(|c| self.newnum[c] > wnum)
    }

    fn push_comp(&mut self, kind: CompKind, edges: Vec<usize>) {
        self.comps.push(TricComp { kind, edges });
    }

    fn tric_or_poly(&mut self, mut edges: Vec<usize>, e: usize) {
        edges.push(e);
        let kind = if edges.len() >= 4 {
            CompKind::Triconnected
        } else {
            CompKind::Polygon
        };
        self.push_comp(kind, edges);
    }

    fn top_a(&self) -> isize {
        *self.ta.last().unwrap()
    }

    fn tpush(&mut self, h: usize, a: usize, b: usize) {
        self.th.push(h);
        self.ta.push(a as isize);
        self.tb.push(b);
    }

    fn tpush_eos(&mut self) {
        self.th.push(0);
        self.ta.push(-1);
        self.tb.push(0);
    }

    fn tpop(&mut self) -> (usize, isize, usize) {
        (self.th.pop().unwrap(), self.ta.pop().unwrap(), self.tb.pop().unwrap())
    }

    fn not_eos(&self) -> bool {
        self.top_a() != -1
    }

    fn in_sub(&self, x: usize, wnum: usize, w: usize) -> bool {
        wnum <= x && x < wnum + self.nd[w]
    }

    fn dfs1(&mut self, adj0: &[Vec<usize>]) {
        let mut count = 0;
        let mut stack: Vec<(usize, usize)> = Vec::new();
        count += 1;
        self.number[self.root] = count;
        self.lowpt1[self.root] = count;
        self.lowpt2[self.root] = count;
        self.nd[self.root] = 1;
        stack.push((self.root, 0));
        while let Some(&(v, i)) = stack.last() {
            if i < adj0[v].len() {
                stack.last_mut().unwrap().1 += 1;
                let e = adj0[v][i];
                if self.ty[e] != Ty::Unseen {
                    continue;
                }
                let w = if self.src[e] == v { self.tgt[e] } else { self.src[e] };
                self.src[e] = v;
                self.tgt[e] = w;
                if self.number[w] == 0 {
                    self.ty[e] = Ty::Tree;
                    self.tree_arc[w] = e;
                    self.father[w] = v;
                    count += 1;
                    self.number[w] = count;
                    self.lowpt1[w] = count;
                    self.lowpt2[w] = count;
                    self.nd[w] = 1;
                    stack.push((w, 0));
                } else {
                    self.ty[e] = Ty::Frond;
                    let nw = self.number[w];
                    if nw < self.lowpt1[v] {
                        self.lowpt2[v] = self.lowpt1[v];
                        self.lowpt1[v] = nw;
                    } else if nw > self.lowpt1[v] {
                        self.lowpt2[v] = self.lowpt2[v].min(nw);
                    }
                }
            } else {
                stack.pop();
                if let Some(&(u, _)) = stack.last() {
                    let w = v;
                    if self.lowpt1[w] < self.lowpt1[u] {
                        self.lowpt2[u] = self.lowpt1[u].min(self.lowpt2[w]);
                        self.lowpt1[u] = self.lowpt1[w];
                    } else if self.lowpt1[w] == self.lowpt1[u] {
                        self.lowpt2[u] = self.lowpt2[u].min(self.lowpt2[w]);
                    } else {
                        self.lowpt2[u] = self.lowpt2[u].min(self.lowpt1[w]);
                    }
                    self.nd[u] += self.nd[w];
                }
            }
        }
    }

    fn build_adj(&mut self) {
        let max = 3 * self.n + 2;
        let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); max + 1];
        for e in 0..self.src.len() {
            let phi = match self.ty[e] {
                Ty::Removed | Ty::Unseen => continue,
                Ty::Frond => 3 * self.number[self.tgt[e]] + 1,
                Ty::Tree => {
                    let w = self.tgt[e];
                    if self.lowpt2[w] < self.number[self.src[e]] {
                        3 * self.lowpt1[w]
                    } else {
                        3 * self.lowpt1[w] + 2
                    }
                }
            };
            bucket[phi].push(e);
        }
        for b in bucket {
            for e in b {
                let x = self.adj.push_back(self.src[e], e);
                self.in_adj[e] = x;
            }
        }
    }

    fn path_finder(&mut self) {
        let mut num_count = self.n;
        let mut new_path = true;
        let mut stack: Vec<(usize, usize)> = Vec::new();
        self.newnum[self.root] = num_count + 1 - self.nd[self.root];
        stack.push((self.root, self.adj.head[self.root]));
        while let Some(&(v, it)) = stack.last() {
            if it == NIL {
                stack.pop();
                if !stack.is_empty() {
                    num_count -= 1;
                }
                continue;
            }
            stack.last_mut().unwrap().1 = self.adj.next[it];
            let e = self.adj.val[it];
            let w = self.tgt[e];
            if new_path {
                new_path = false;
                self.start[e] = true;
            }
            if self.ty[e] == Ty::Tree {
                self.newnum[w] = num_count + 1 - self.nd[w];
                stack.push((w, self.adj.head[w]));
            } else {
                let x = self.high.push_back(w, self.newnum[v]);
                self.in_high[e] = x;
                new_path = true;
            }
        }
    }

    fn path_search(&mut self) {
        struct Frame {
            v: usize,
            it: usize,
            next: usize,
            outv: usize,
            e: usize,
            returned: bool,
        }
        let root = self.root;
        let mut stack = vec![Frame {
            v: root,
            it: self.adj.head[root],
            next: NIL,
            outv: self.adj.len(root),
            e: NIL,
            returned: false,
        }];
        while let Some(f) = stack.last_mut() {
            if f.returned {
                f.returned = false;
                let (v, it, e, outv) = (f.v, f.it, f.e, f.outv);
                self.after_child(v, it, e, outv);
                let f = stack.last_mut().unwrap();
                f.outv -= 1;
                f.it = f.next;
                continue;
            }
            if f.it == NIL {
                stack.pop();
                if let Some(p) = stack.last_mut() {
                    p.returned = true;
                }
                continue;
            }
            let (v, it) = (f.v, f.it);
            f.next = self.adj.next[it];
            let e = self.adj.val[it];
            f.e = e;
            let vnum = self.newnum[v];
            let w = self.tgt[e];
            let wnum = self.newnum[w];
            if self.ty[e] == Ty::Tree {
                if self.start[e] {
                    let l1 = self.lowpt1[w];
                    if self.top_a() > l1 as isize {
                        let mut y = 0;
                        let mut b = 0;
                        while self.top_a() > l1 as isize {
                            let (h, _, bb) = self.tpop();
                            y = y.max(h);
                            b = bb;
                        }
                        self.tpush(y, l1, b);
                    } else {
                        self.tpush(wnum + self.nd[w] - 1, l1, vnum);
                    }
                    self.tpush_eos();
                }
                let outv = self.adj.len(w);
                stack.push(Frame {
                    v: w,
                    it: self.adj.head[w],
                    next: NIL,
                    outv,
                    e: NIL,
                    returned: false,
                });
            } else {
                if self.start[e] {
                    if self.top_a() > wnum as isize {
                        let mut y = 0;
                        let mut b = 0;
                        while self.top_a() > wnum as isize {
                            let (h, _, bb) = self.tpop();
                            y = y.max(h);
                            b = bb;
                        }
                        self.tpush(y, wnum, b);
                    } else {
                        self.tpush(vnum, wnum, vnum);
                    }
                }
                self.estack.push(e);
                let f = stack.last_mut().unwrap();
                f.it = f.next;
            }
        }
    }

    fn after_child(&mut self, v: usize, it: usize, e: usize, outv: usize) {
        let vnum = self.newnum[v];
        let mut w = self.tgt[e];
        let mut wnum = self.newnum[w];
        self.estack.push(self.tree_arc[w]);

        // type-2 separation pairs
        while vnum != 1 && (self.top_a() == vnum as isize || self.deg2_chain(w, wnum)) {
            let a = self.top_a() as usize;
            let b = *self.tb.last().unwrap();
            if a == vnum && self.father[self.node_at[b]] == self.node_at[a] {
                self.tpop();
                continue;
            }
            let mut e_ab = NIL;
            let mut e_virt;
            let x;
            if self.deg2_chain(w, wnum) {
                let e1 = self.estack.pop().unwrap();
                let e2 = self.estack.pop().unwrap();
                self.adj.remove(w, self.in_adj[e2]);
                x = self.tgt[e2];
                e_virt = self.new_edge(v, x);
                self.degree[x] -= 1;
                self.degree[v] -= 1;
                self.push_comp(CompKind::Polygon, vec![e1, e2, e_virt]);
                if let Some(&top) = self.estack.last() {
                    if self.src[top] == x && self.tgt[top] == v {
                        e_ab = self.estack.pop().unwrap();
                        self.adj.remove(x, self.in_adj[e_ab]);
                        self.del_high(e_ab);
                    }
                }
            } else {
                let (h, _, _) = self.tpop();
                let mut comp = Vec::new();
                while let Some(&xy) = self.estack.last() {
                    let (xs, xt) = (self.src[xy], self.tgt[xy]);
                    let (ns, nt) = (self.newnum[xs], self.newnum[xt]);
                    if !(a <= ns && ns <= h && a <= nt && nt <= h) {
                        break;
                    }
                    self.estack.pop();
                    if (ns == a && nt == b) || (nt == a && ns == b) {
                        e_ab = xy;
                        self.adj.remove(xs, self.in_adj[xy]);
                        self.del_high(xy);
                    } else {
                        if it != self.in_adj[xy] {
                            self.adj.remove(xs, self.in_adj[xy]);
                            self.del_high(xy);
                        }
                        comp.push(xy);
                        self.degree[xs] -= 1;
                        self.degree[xt] -= 1;
                    }
                }
                e_virt = self.new_edge(self.node_at[a], self.node_at[b]);
                self.tric_or_poly(comp, e_virt);
                x = self.node_at[b];
            }
            if e_ab != NIL {
                let ev2 = self.new_edge(v, x);
                self.push_comp(CompKind::Bond, vec![e_ab, e_virt, ev2]);
                e_virt = ev2;
                self.degree[x] -= 1;
                self.degree[v] -= 1;
            }
            self.estack.push(e_virt);
            self.adj.val[it] = e_virt;
            self.in_adj[e_virt] = it;
            self.degree[x] += 1;
            self.degree[v] += 1;
            self.father[x] = v;
            self.tree_arc[x] = e_virt;
            self.ty[e_virt] = Ty::Tree;
            w = x;
            wnum = self.newnum[w];
        }

        // type-1 separation pair
        if self.lowpt2[w] >= vnum && self.lowpt1[w] < vnum && (self.father[v] != self.root || outv >= 2) {
            let mut comp = Vec::new();
            let mut xx = 0;
            let mut xy_t = 0;
            while let Some(&xy) = self.estack.last() {
                xx = self.newnum[self.src[xy]];
                xy_t = self.newnum[self.tgt[xy]];
                if !(self.in_sub(xx, wnum, w) || self.in_sub(xy_t, wnum, w)) {
                    break;
                }
                self.estack.pop();
                comp.push(xy);
                self.del_high(xy);
                self.degree[self.src[xy]] -= 1;
                self.degree[self.tgt[xy]] -= 1;
            }
            let lw = self.node_at[self.lowpt1[w]];
            let mut e_virt = self.new_edge(v, lw);
            self.tric_or_poly(comp, e_virt);
            let l1 = self.lowpt1[w];
            if ((xx == vnum && xy_t == l1) || (xy_t == vnum && xx == l1)) && !self.estack.is_empty() {
                let eh = self.estack.pop().unwrap();
                if it != self.in_adj[eh] {
                    self.adj.remove(self.src[eh], self.in_adj[eh]);
                }
                let ev2 = self.new_edge(v, lw);
                self.push_comp(CompKind::Bond, vec![eh, e_virt, ev2]);
                e_virt = ev2;
                self.in_high[e_virt] = self.in_high[eh];
                self.degree[v] -= 1;
                self.degree[lw] -= 1;
            }
            if lw != self.father[v] {
                self.estack.push(e_virt);
                self.adj.val[it] = e_virt;
                self.in_adj[e_virt] = it;
                if self.in_high[e_virt] == NIL && self.high(lw) < vnum {
                    let h = self.high.push_front(lw, vnum);
                    self.in_high[e_virt] = h;
                }
                self.degree[v] += 1;
                self.degree[lw] += 1;
            } else {
                self.adj.remove(v, it);
                let ev2 = self.new_edge(lw, v);
                let eh = self.tree_arc[v];
                self.push_comp(CompKind::Bond, vec![e_virt, ev2, eh]);
                self.tree_arc[v] = ev2;
                self.ty[ev2] = Ty::Tree;
                self.in_adj[ev2] = self.in_adj[eh];
                self.adj.val[self.in_adj[eh]] = ev2;
            }
        }

        if self.start[e] {
            while self.not_eos() {
                self.tpop();
            }
            self.tpop();
        }
        while self.not_eos() && *self.tb.last().unwrap() != vnum && self.high(v) > *self.th.last().unwrap() {
            self.tpop();
        }
    }
}

/// Triconnected components of the biconnected multigraph on `0..n` with the
/// given edges. Requires at least two edges; a graph with exactly two
/// vertices yields a single bond.
pub fn triconnected_components(n: usize, edges: &[(usize, usize)]) -> TricResult {
    let m = edges.len();
    let mut st = State {
        n,
        src: Vec::with_capacity(3 * m),
        tgt: Vec::with_capacity(3 * m),
        ty: Vec::new(),
        start: Vec::new(),
        in_adj: Vec::new(),
        in_high: Vec::new(),
        comps: Vec::new(),
        number: vec![0; n],
        newnum: vec![0; n],
        lowpt1: vec![0; n],
        lowpt2: vec![0; n],
        nd: vec![0; n],
        degree: vec![0; n],
        father: vec![NIL; n],
        tree_arc: vec![NIL; n],
        node_at: vec![NIL; n + 1],
        adj: Lists::new(n),
        high: Lists::new(n),
        th: Vec::new(),
        ta: Vec::new(),
        tb: Vec::new(),
        estack: Vec::new(),
        root: 0,
    };
    for &(a, b) in edges {
        st.new_edge(a, b);
    }

    if n <= 2 {
        st.push_comp(CompKind::Bond, (0..m).collect());
        return finish_state(st, m);
    }

    // split off bundles of parallel edges as bonds
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&e| {
        let (a, b) = edges[e];
        (a.min(b), a.max(b), e)
    });
    let mut i = 0;
    while i < m {
        let key = |e: usize| (edges[e].0.min(edges[e].1), edges[e].0.max(edges[e].1));
        let mut j = i;
        while j < m && key(order[j]) == key(order[i]) {
            j += 1;
        }
        if j - i >= 2 {
            let (a, b) = key(order[i]);
            let mut bond: Vec<usize> = order[i..j].to_vec();
            for &e in &bond {
                st.ty[e] = Ty::Removed;
            }
            let ev = st.new_edge(a, b);
            bond.push(ev);
            st.push_comp(CompKind::Bond, bond);
        }
        i = j;
    }
    let mut adj0: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in 0..st.src.len() {
        if st.ty[e] != Ty::Removed {
            adj0[st.src[e]].push(e);
            adj0[st.tgt[e]].push(e);
            st.degree[st.src[e]] += 1;
            st.degree[st.tgt[e]] += 1;
        }
    }
    st.dfs1(&adj0);
    st.build_adj();
    st.path_finder();
    let mut old2new = vec![0; n + 1];
    for v in 0..n {
        old2new[st.number[v]] = st.newnum[v];
    }
    for v in 0..n {
        st.node_at[st.newnum[v]] = v;
        st.lowpt1[v] = old2new[st.lowpt1[v]];
        st.lowpt2[v] = old2new[st.lowpt2[v]];
    }
    st.tpush_eos();
    st.path_search();
    let rest = core::mem::take(&mut st.estack);
    if !rest.is_empty() {
        let kind = if rest.len() >= 4 {
            CompKind::Triconnected
        } else {
            CompKind::Polygon
        };
        st.push_comp(kind, rest);
    }
    finish_state(st, m)
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

fn finish_state(st: State, m: usize) -> TricResult {
    let ends = st.src.iter().copied().zip(st.tgt.iter().copied()).collect();
    merge_components(st.comps, ends, m)
}

/// Merge bonds sharing a virtual edge into one bond, likewise polygons.
pub(crate) fn merge_components(comps: Vec<TricComp>, ends: Vec<(usize, usize)>, m: usize) -> TricResult {
    let ne = ends.len();
    let mut owners: Vec<Vec<usize>> = vec![Vec::new(); ne];
    for (i, c) in comps.iter().enumerate() {
        for &e in &c.edges {
            owners[e].push(i);
        }
    }
    let mut parent: Vec<usize> = (0..comps.len()).collect();
    let mut dropped = vec![false; ne];
    for e in m..ne {
        if let [a, b] = owners[e][..] {
            let same = comps[a].kind == comps[b].kind && comps[a].kind != CompKind::Triconnected;
            if same {
                dropped[e] = true;
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut merged: Vec<Option<TricComp>> = vec![None; comps.len()];
    for (i, c) in comps.iter().enumerate() {
        let r = find(&mut parent, i);
        let slot = merged[r].get_or_insert_with(|| TricComp {
            kind: c.kind,
            edges: Vec::new(),
        });
        slot.edges.extend(c.edges.iter().copied().filter(|&e| !dropped[e]));
    }
    let mut out: Vec<TricComp> = merged.into_iter().flatten().collect();
    for c in &mut out {
        c.edges.sort_unstable();
    }
    TricResult { ends, comps: out }
}
