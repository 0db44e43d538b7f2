use super::*;
use crate::embedding::{enumerate_planar_rotations, is_planar_rotation, trace_faces};
use alloc::collections::BTreeSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn k4() -> MultiGraph {
    MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

fn cycle(n: u32) -> MultiGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    MultiGraph::from_edges(n, &edges)
}

type Key = (CompKind, Vec<usize>, Vec<usize>);

fn key(r: &TricResult, m: usize) -> Vec<Key> {
    let mut out: Vec<Key> = r
        .comps
        .iter()
        .map(|c| {
            let mut vs: Vec<usize> = c.edges.iter().flat_map(|&e| [r.ends[e].0, r.ends[e].1]).collect();
            vs.sort_unstable();
            vs.dedup();
            let real: Vec<usize> = c.edges.iter().copied().filter(|&e| e < m).collect();
            (c.kind, vs, real)
        })
        .collect();
    out.sort();
    out
}

fn check_virtual_pairs(r: &TricResult, m: usize) {
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &r.comps {
        for &e in &c.edges {
            *count.entry(e).or_default() += 1;
        }
    }
    for (e, c) in count {
        assert_eq!(c, if e < m { 1 } else { 2 }, "edge {e}");
    }
}

/// Random biconnected multigraph: a Hamiltonian cycle plus random chords.
fn random_biconnected(rng: &mut ChaCha8Rng, n: usize, extra: usize, parallel: bool) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (perm[i], perm[(i + 1) % n])).collect();
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b {
            continue;
        }
        if !parallel && edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)) {
            continue;
        }
        edges.push((a, b));
    }
    edges
}

#[test]
fn two_triangles_sharing_a_vertex() {
    let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
    let t = block_cut_tree(&g).unwrap();
    assert_eq!(t.blocks.len(), 2);
    assert_eq!(t.cut_vertices, vec![0]);
}

#[test]
fn biconnected_graph_is_one_block() {
    let t = block_cut_tree(&k4()).unwrap();
    assert_eq!(t.blocks.len(), 1);
    assert!(t.cut_vertices.is_empty());
}

#[test]
fn path_p4_has_three_blocks() {
    let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
    let t = block_cut_tree(&g).unwrap();
    assert_eq!(t.blocks.len(), 3);
    assert_eq!(t.cut_vertices, vec![1, 2]);
}

#[test]
fn k4_is_a_single_r_node() {
    let t = spr_tree(&k4()).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t.node(0).kind, NodeType::R);
}

#[test]
fn c5_is_a_single_s_node() {
    let t = spr_tree(&cycle(5)).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t.node(0).kind, NodeType::S);
}

#[test]
fn k4_minus_edge_is_p_with_two_triangles() {
    // shared edge 0-1 has the smallest id, so the P node is the root
    let g = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]);
    let t = spr_tree(&g).unwrap();
    assert_eq!(t.len(), 3);
    assert_eq!(t.node(0).kind, NodeType::P);
    assert_eq!(t.node(0).skeleton.edge_count(), 3);
    assert_eq!(t.node(0).skeleton.virtual_edge_count(), 2);
    for &c in &t.node(0).children {
        assert_eq!(t.node(c).kind, NodeType::S);
        assert_eq!(t.node(c).skeleton.edge_count(), 3);
    }
    let mut union = MultiGraph::new();
    for &c in &t.node(0).children {
        for (e, ed) in t.induced_graph(c).edges() {
            union.ensure_vertex(ed.u);
            union.ensure_vertex(ed.v);
            union.insert_edge(e, ed.u, ed.v, ed.kind).unwrap();
        }
    }
    union.ensure_vertex(0);
    union.insert_edge(0, 0, 1, EdgeKind::Real).unwrap();
    assert_eq!(union.edge_multiset(), g.edge_multiset());
}

#[test]
fn leaf_induced_graph_is_its_skeleton() {
    let g = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]);
    let t = spr_tree(&g).unwrap();
    let leaf = t.node(0).children[0];
    let ind = t.induced_graph(leaf);
    let sk = &t.node(leaf).skeleton;
    assert_eq!(ind.edge_count(), sk.edge_count() - 1);
    assert_eq!(ind.vertex_count(), sk.vertex_count());
}

#[test]
fn triangle_child_enhancement_has_three_faces() {
    let g = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]);
    let t = spr_tree(&g).unwrap();
    let leaf = t.node(0).children[0];
    let (enh, c) = t.enhancement(leaf);
    assert_eq!(enh.edge_count(), 3);
    assert!(enh.edge(c.edge).unwrap().has(c.c1));
    let rot = planar_embedding(&enh).unwrap();
    assert_eq!(trace_faces(&enh, &rot).unwrap().len(), 2);
}

#[test]
fn root_enhancement_of_k4_is_k4() {
    let t = spr_tree(&k4()).unwrap();
    let (enh, c) = t.enhancement(0);
    assert_eq!(enh.edge_multiset(), k4().edge_multiset());
    assert_eq!(c.edge, 0);
}

#[test]
fn path_search_matches_reference_on_random_multigraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..400 {
        let n = rng.gen_range(3..10);
        let extra = rng.gen_range(0..2 * n);
        let edges = random_biconnected(&mut rng, n, extra, round % 3 == 0);
        let fast = triconnected_components(n, &edges);
        let slow = triconnected_components_naive(n, &edges);
        check_virtual_pairs(&fast, edges.len());
        check_virtual_pairs(&slow, edges.len());
        assert_eq!(key(&fast, edges.len()), key(&slow, edges.len()), "edges {edges:?}");
    }
}

fn random_planar_biconnected(rng: &mut ChaCha8Rng, n: u32) -> MultiGraph {
    // triangulate by inserting vertices into triangles, then delete edges
    let mut tris: Vec<[u32; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut edges: BTreeSet<(u32, u32)> = [(0, 1), (1, 2), (0, 2)].into_iter().collect();
    for v in 3..n {
        let i = rng.gen_range(0..tris.len());
        let [a, b, c] = tris.swap_remove(i);
        tris.push([a, b, v]);
        tris.push([b, c, v]);
        tris.push([c, a, v]);
        for x in [a, b, c] {
            edges.insert((x.min(v), x.max(v)));
        }
    }
    let mut list: Vec<(u32, u32)> = edges.into_iter().collect();
    let mut g = MultiGraph::from_edges(n, &list);
    for _ in 0..list.len() {
        let i = rng.gen_range(0..list.len());
        let mut h = MultiGraph::from_edges(n, &list);
        let e = h.edge_ids().nth(i).unwrap();
        h.remove_edge(e).unwrap();
        if is_biconnected(&h) && rng.gen_bool(0.5) {
            list.remove(i);
            g = MultiGraph::from_edges(n, &list);
        }
    }
    g
}

#[test]
fn glued_rotations_are_planar_and_match_rotation_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(3..8);
        let g = random_planar_biconnected(&mut rng, n);
        let t = spr_tree(&g).unwrap();
        let naive = spr_tree_naive(&g, t.root_edge).unwrap();
        assert_eq!(t.len(), naive.len());
        let spr = enumerate_embeddings_spr(&t, 100_000).unwrap();
        let mut a = BTreeSet::new();
        for r in &spr {
            assert!(is_planar_rotation(&g, r));
            a.insert(trace_faces(&g, r).unwrap().vertex_multiset());
        }
        let mut b = BTreeSet::new();
        for r in enumerate_planar_rotations(&g, 1_000_000).unwrap() {
            b.insert(trace_faces(&g, &r).unwrap().vertex_multiset());
        }
        assert_eq!(a, b, "graph {:?}", g.edge_multiset());
    }
}

#[test]
fn theta_graph_has_one_face_multiset() {
    let g = MultiGraph::from_edges(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]);
    let t = spr_tree(&g).unwrap();
    let spr = enumerate_embeddings_spr(&t, 1000).unwrap();
    let ms: BTreeSet<_> = spr.iter().map(|r| trace_faces(&g, r).unwrap().vertex_multiset()).collect();
    assert_eq!(ms.len(), 1);
}

#[test]
fn large_cycle_with_chords_decomposes_fast() {
    let n = 20_000usize;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in (0..n - 4).step_by(3) {
        edges.push((i, i + 2));
    }
    let r = triconnected_components(n, &edges);
    check_virtual_pairs(&r, edges.len());
}
