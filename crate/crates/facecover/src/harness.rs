//! Deterministic instance generation and small-graph enumeration.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::is_biconnected;
use crate::embedding::planar_embedding;
use crate::graph::{Instance, MultiGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connectivity {
    Connected,
    Biconnected,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenParams {
    pub seed: u64,
    pub n: u32,
    /// Fraction of the `3n - 6` edges of a triangulation that are kept.
    pub density: f64,
    pub terminal_fraction: f64,
    pub k: u32,
    pub connectivity: Connectivity,
}

impl GenParams {
    pub fn new(seed: u64, n: u32) -> Self {
        GenParams {
            seed,
            n,
            density: 0.6,
            terminal_fraction: 0.4,
            k: 2,
            connectivity: Connectivity::Connected,
        }
    }
}

fn round(x: f64) -> usize {
    if x <= 0.0 {
        0
    } else {
        (x + 0.5) as usize
    }
}

/// Random triangulation: stacked insertions followed by random edge flips.
fn triangulation(rng: &mut ChaCha8Rng, n: u32) -> BTreeSet<(u32, u32)> {
    let mut edges = BTreeSet::new();
    if n < 3 {
        if n == 2 {
            edges.insert((0, 1));
        }
        return edges;
    }
    // oriented triangles; `side` maps a directed edge to its triangle
    let mut tris: Vec<[u32; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut side: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    let index = |side: &mut BTreeMap<(u32, u32), usize>, t: [u32; 3], i: usize| {
        for j in 0..3 {
            side.insert((t[j], t[(j + 1) % 3]), i);
        }
    };
    index(&mut side, tris[0], 0);
    index(&mut side, tris[1], 1);
    let mut deg = vec![0u32; n as usize];
    deg[..3].fill(2);
    edges.extend([(0, 1), (1, 2), (0, 2)]);
    for v in 3..n {
        let i = rng.gen_range(0..tris.len());
        let [a, b, c] = tris[i];
        let t0 = [a, b, v];
        let t1 = [b, c, v];
        let t2 = [c, a, v];
        tris[i] = t0;
        index(&mut side, t0, i);
        tris.push(t1);
        index(&mut side, t1, tris.len() - 1);
        tris.push(t2);
        index(&mut side, t2, tris.len() - 1);
        for x in [a, b, c] {
            edges.insert((x.min(v), x.max(v)));
            deg[x as usize] += 1;
        }
        deg[v as usize] = 3;
    }
    if n >= 5 {
        for _ in 0..2 * n {
            let i = rng.gen_range(0..tris.len());
            let j = rng.gen_range(0..3);
            let t = tris[i];
            let (a, b, c) = (t[j], t[(j + 1) % 3], t[(j + 2) % 3]);
            let Some(&i2) = side.get(&(b, a)) else { continue };
            let t2 = tris[i2];
            let d = (0..3).map(|x| t2[x]).find(|&x| x != a && x != b).unwrap();
            if c == d || deg[a as usize] <= 3 || deg[b as usize] <= 3 || edges.contains(&(c.min(d), c.max(d))) {
                continue;
            }
            for tr in [t, t2] {
                for x in 0..3 {
                    side.remove(&(tr[x], tr[(x + 1) % 3]));
                }
            }
            let n1 = [a, d, c];
            let n2 = [d, b, c];
            tris[i] = n1;
            tris[i2] = n2;
            index(&mut side, n1, i);
            index(&mut side, n2, i2);
            edges.remove(&(a.min(b), a.max(b)));
            edges.insert((c.min(d), c.max(d)));
            deg[a as usize] -= 1;
            deg[b as usize] -= 1;
            deg[c as usize] += 1;
            deg[d as usize] += 1;
        }
    }
    edges
}

/// Seeded planar instance: a random triangulation thinned to the target
/// density while staying connected (or biconnected), vertices relabelled at
/// random, and `round(terminal_fraction * n)` terminals.
pub fn gen_planar(p: &GenParams) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let n = p.n.max(1);
    let tri: Vec<(u32, u32)> = triangulation(&mut rng, n).into_iter().collect();
    let target = round(p.density * tri.len() as f64).max(n as usize - 1).min(tri.len());
    let mut keep: Vec<bool> = vec![true; tri.len()];
    let mut order: Vec<usize> = (0..tri.len()).collect();
    order.shuffle(&mut rng);
    let mut count = tri.len();
    match p.connectivity {
        Connectivity::Connected => {
            // protect a random spanning tree
            let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n as usize];
            for (i, &(a, b)) in tri.iter().enumerate() {
                adj[a as usize].push(i);
                adj[b as usize].push(i);
            }
            let mut protected = vec![false; tri.len()];
            let mut seen = vec![false; n as usize];
            let start = rng.gen_range(0..n as usize);
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let mut es = adj[v].clone();
                es.shuffle(&mut rng);
                for e in es {
                    let (a, b) = tri[e];
                    let w = if a as usize == v { b } else { a } as usize;
                    if !seen[w] {
                        seen[w] = true;
                        protected[e] = true;
                        stack.push(w);
                    }
                }
            }
            for &e in &order {
                if count <= target {
                    break;
                }
                if !protected[e] {
                    keep[e] = false;
                    count -= 1;
                }
            }
        }
        Connectivity::Biconnected => {
            for &e in &order {
                if count <= target {
                    break;
                }
                keep[e] = false;
                let list: Vec<(u32, u32)> = (0..tri.len()).filter(|&i| keep[i]).map(|i| tri[i]).collect();
                if n >= 3 && is_biconnected(&MultiGraph::from_edges(n, &list)) {
                    count -= 1;
                } else {
                    keep[e] = true;
                }
            }
        }
    }
    let mut perm: Vec<u32> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut edges: Vec<(u32, u32)> = (0..tri.len())
        .filter(|&i| keep[i])
        .map(|i| {
            let (a, b) = (perm[tri[i].0 as usize], perm[tri[i].1 as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    let mut g = MultiGraph::from_edges(n, &edges);
    let t = round(p.terminal_fraction * n as f64).min(n as usize);
    let mut vs: Vec<VertexId> = (0..n).collect();
    vs.shuffle(&mut rng);
    for &v in &vs[..t] {
        g.set_terminal(v, true).unwrap();
    }
    Instance { graph: g, k: p.k }
}

fn canonical(n: usize, adj: &[u32]) -> Vec<(u32, u32)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(u32, u32)>> = None;
    loop {
        let mut es: Vec<(u32, u32)> = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if adj[a] >> b & 1 == 1 {
                    let (x, y) = (perm[a] as u32, perm[b] as u32);
                    es.push((x.min(y), x.max(y)));
                }
            }
        }
        es.sort_unstable();
        if best.as_ref().is_none_or(|b| es < *b) {
            best = Some(es);
        }
        // next permutation
        let mut i = n.saturating_sub(1);
        while i > 0 && perm[i - 1] >= perm[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i - 1] {
            j -= 1;
        }
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best.unwrap()
}

/// All connected simple planar graphs on `1..=max_n` vertices, one per
/// isomorphism class, with vertices `0..n`.
pub fn small_connected_planar_graphs(max_n: usize) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    let mut layer: BTreeSet<Vec<(u32, u32)>> = BTreeSet::new();
    layer.insert(Vec::new());
    out.push(MultiGraph::from_edges(1, &[]));
    for n in 2..=max_n {
        let mut next = BTreeSet::new();
        for h in &layer {
            for mask in 1u32..(1 << (n - 1)) {
                let mut adj = vec![0u32; n];
                for &(a, b) in h {
                    adj[a as usize] |= 1 << b;
                    adj[b as usize] |= 1 << a;
                }
                for x in 0..n - 1 {
                    if mask >> x & 1 == 1 {
                        adj[x] |= 1 << (n - 1);
                        adj[n - 1] |= 1 << x;
                    }
                }
                next.insert(canonical(n, &adj));
            }
        }
        layer = next
            .into_iter()
            .filter(|es| planar_embedding(&MultiGraph::from_edges(n as u32, es)).is_some())
            .collect();
        for es in &layer {
            out.push(MultiGraph::from_edges(n as u32, es));
        }
    }
    out
}

/// Wheel with hub 0 and rim `1..=r`, `7 <= r <= 14`, with a random set of
/// rim terminals large enough that the rim face is terminal-heavy for `k`.
/// Edge 0 is the spoke `0 1`.
pub fn wheel_instance(seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=2u32);
    let r = rng.gen_range((3 * k + 5).max(7)..=14);
    let mut edges: Vec<(u32, u32)> = (1..=r).map(|i| (0, i)).collect();
    edges.extend((1..=r).map(|i| (i.min(i % r + 1), i.max(i % r + 1))));
    let mut g = MultiGraph::from_edges(r + 1, &edges);
    let mut rim: Vec<VertexId> = (2..=r).collect();
    rim.shuffle(&mut rng);
    let t = rng.gen_range(3 * k as usize + 2..=rim.len());
    for &v in &rim[..t] {
        g.set_terminal(v, true).unwrap();
    }
    if rng.gen_bool(0.3) {
        g.set_terminal(1, true).unwrap();
    }
    Instance { graph: g, k }
}

/// Theta graph: vertices 0 and 1 joined by edge 0 and by 3 to 6 internally
/// disjoint paths of length 2 or 3, about half of them without terminals.
pub fn theta_instance(seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=2u32);
    let paths = rng.gen_range(3..=6);
    let mut g = MultiGraph::from_edges(2, &[(0, 1)]);
    for _ in 0..paths {
        let len = rng.gen_range(2..=3);
        let marked = rng.gen_bool(0.5);
        let mut prev = 0;
        for i in 1..len {
            let v = g.add_vertex();
            g.add_edge(prev, v, crate::graph::EdgeKind::Real).unwrap();
            if marked && (i == 1 || rng.gen_bool(0.5)) {
                g.set_terminal(v, true).unwrap();
            }
            prev = v;
        }
        g.add_edge(prev, 1, crate::graph::EdgeKind::Real).unwrap();
    }
    if rng.gen_bool(0.2) {
        g.set_terminal(0, true).unwrap();
    }
    Instance { graph: g, k }
}

/// Cycle through edge 0 = `0 1` whose other edges are plain edges or
/// semi-problematic pieces: a wheel on rim `a t1 b t2` attached by two
/// edges, or two terminal-subdivided parallel paths. Some path vertices
/// are terminals.
pub fn semi_chain_instance(seed: u64) -> Instance {
    use crate::graph::EdgeKind::Real;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=2u32);
    let pieces = rng.gen_range(1..=k as usize + 3);
    let mut g = MultiGraph::from_edges(2, &[(0, 1)]);
    let mut prev = 0;
    let mut placed = 0;
    while placed < pieces || rng.gen_bool(0.3) {
        let next = g.add_vertex();
        if rng.gen_bool(0.25) {
            g.set_terminal(next, true).unwrap();
        }
        if placed < pieces && rng.gen_bool(0.8) {
            placed += 1;
            if rng.gen_bool(0.6) {
                let w: Vec<VertexId> = (0..5).map(|_| g.add_vertex()).collect();
                let (a, t1, b, t2, h) = (w[0], w[1], w[2], w[3], w[4]);
                g.set_terminal(t1, true).unwrap();
                g.set_terminal(t2, true).unwrap();
                for (x, y) in [(a, t1), (t1, b), (b, t2), (t2, a), (h, a), (h, t1), (h, b), (h, t2), (prev, a), (next, b)] {
                    g.add_edge(x, y, Real).unwrap();
                }
            } else {
                for _ in 0..2 {
                    let x = g.add_vertex();
                    g.set_terminal(x, true).unwrap();
                    g.add_edge(prev, x, Real).unwrap();
                    g.add_edge(x, next, Real).unwrap();
                }
            }
        } else {
            g.add_edge(prev, next, Real).unwrap();
        }
        prev = next;
    }
    g.add_edge(prev, 1, Real).unwrap();
    Instance { graph: g, k }
}

/// Random two-terminal piece between `a` and `b`: 0 terminal-free, 1 one
/// terminal next to a plain path, 2 two terminal paths, 3 wheel with a
/// terminal hub.
fn add_piece(g: &mut MultiGraph, rng: &mut ChaCha8Rng, a: VertexId, b: VertexId) {
    use crate::graph::EdgeKind::Real;
    match rng.gen_range(0..4) {
        0 => {
            let (x, y) = (g.add_vertex(), g.add_vertex());
            for (p, q) in [(a, x), (x, b), (a, y), (y, b), (x, y)] {
                g.add_edge(p, q, Real).unwrap();
            }
        }
        kind @ (1 | 2) => {
            for i in 0..2 {
                let x = g.add_vertex();
                g.set_terminal(x, i == 0 || kind == 2).unwrap();
                g.add_edge(a, x, Real).unwrap();
                g.add_edge(x, b, Real).unwrap();
            }
        }
        _ => {
            let (x, y, h) = (g.add_vertex(), g.add_vertex(), g.add_vertex());
            for (p, q) in [(a, x), (x, b), (b, y), (y, a), (h, a), (h, x), (h, b), (h, y)] {
                g.add_edge(p, q, Real).unwrap();
            }
            g.set_terminal(h, true).unwrap();
        }
    }
}

/// Cycle through edge 0 = `0 1` whose other edges are plain edges or random
/// pieces, with some path vertices terminals.
pub fn series_instance(seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=3u32);
    let len = rng.gen_range(2..=k as usize + 4);
    let mut g = MultiGraph::from_edges(2, &[(0, 1)]);
    let mut prev = 0;
    for i in 0..len {
        let next = if i + 1 == len { 1 } else { g.add_vertex() };
        if next != 1 && rng.gen_bool(0.3) {
            g.set_terminal(next, true).unwrap();
        }
        if rng.gen_bool(0.6) {
            add_piece(&mut g, &mut rng, prev, next);
        } else {
            g.add_edge(prev, next, crate::graph::EdgeKind::Real).unwrap();
        }
        prev = next;
    }
    Instance { graph: g, k }
}

/// Multigraph: two or three parallel edges `0 1`, the first being edge 0,
/// next to one to three random pieces between 0 and 1.
pub fn bundle_instance(seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=2u32);
    let mut g = MultiGraph::from_edges(2, &[]);
    for _ in 0..rng.gen_range(2..=3) {
        g.add_edge(0, 1, crate::graph::EdgeKind::Real).unwrap();
    }
    for _ in 0..rng.gen_range(1..=3) {
        add_piece(&mut g, &mut rng, 0, 1);
    }
    Instance { graph: g, k }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_deterministic() {
        let p = GenParams::new(42, 15);
        assert_eq!(gen_planar(&p), gen_planar(&p));
    }

    #[test]
    fn full_density_is_a_triangulation() {
        let mut p = GenParams::new(3, 10);
        p.density = 1.0;
        let inst = gen_planar(&p);
        assert_eq!(inst.graph.edge_count(), 24);
        assert!(planar_embedding(&inst.graph).is_some());
    }

    #[test]
    fn generated_graphs_are_planar_simple_connected() {
        for seed in 0..50 {
            let mut p = GenParams::new(seed, 5 + (seed as u32 % 20));
            p.connectivity = if seed % 2 == 0 {
                Connectivity::Connected
            } else {
                Connectivity::Biconnected
            };
            let g = gen_planar(&p).graph;
            assert!(g.is_simple());
            assert!(g.is_connected());
            assert!(planar_embedding(&g).is_some());
            if seed % 2 == 1 {
                assert!(is_biconnected(&g));
            }
        }
    }

    #[test]
    fn zero_terminal_fraction_has_no_terminals() {
        let mut p = GenParams::new(1, 9);
        p.terminal_fraction = 0.0;
        assert_eq!(gen_planar(&p).graph.terminal_count(), 0);
    }

    #[test]
    fn small_graph_counts() {
        // connected planar graphs on 1..=5 vertices: 1, 1, 2, 6, 20
        let gs = small_connected_planar_graphs(5);
        let mut by_n = [0usize; 6];
        for g in &gs {
            by_n[g.vertex_count()] += 1;
        }
        assert_eq!(&by_n[1..], &[1, 1, 2, 6, 20]);
    }
}
