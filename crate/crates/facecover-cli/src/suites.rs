//! Seeded validation suites. Each returns a report listing its failures
//! with the offending instances.

use std::collections::BTreeMap;
use std::time::Instant;

use facecover::classify::{brute_class, classify_tree};
use facecover::decomposition::{block_cut_tree, spr_tree_rooted, Corners, NodeType};
use facecover::embedding::planar_embedding;
use facecover::graph::{EdgeKind, Instance, MultiGraph, VertexId};
use facecover::harness::{
    bundle_instance, gen_planar, semi_chain_instance, series_instance, small_connected_planar_graphs, theta_instance, wheel_instance, Connectivity,
    GenParams,
};
use facecover::kernelize::{
    extended_skeletons, four_share_two_faces, kernelize, kernelize_block, rigidize, separator_vertices,
    three_share_two_faces, two_separator_free, w4_enhancement, Rule, Verdict,
};
use facecover::oracle::{
    cover_faces, decide, enumeration_cost, face_structure, face_structures, fcn_capped_via, fcn_exact_via,
    verify_nice_kernel, ExternalUse, FaceStructure, Route,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::format::write_instance;

pub const SUITES: [&str; 10] = [
    "oracle-cross",
    "decision",
    "rule-safeness",
    "classification",
    "rigidization",
    "size-bound",
    "structure",
    "exits",
    "gadget",
    "throughput",
];

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
    /// Instance text, when the case has one.
    pub instance: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub metrics: BTreeMap<String, Value>,
    pub seconds: f64,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            cases: 0,
            passed: true,
            failures: Vec::new(),
            metrics: BTreeMap::new(),
            seconds: 0.0,
        }
    }

    fn fail(&mut self, case: String, detail: String, g: Option<(&MultiGraph, u32)>) {
        self.passed = false;
        self.failures.push(Failure {
            case,
            detail,
            instance: g.map(|(g, k)| write_instance(&Instance { graph: g.clone(), k })),
        });
    }

    fn metric(&mut self, key: &str, v: Value) {
        self.metrics.insert(key.to_string(), v);
    }

    fn absorb(&mut self, outcomes: Vec<Result<(), Failure>>) {
        self.cases += outcomes.len();
        for o in outcomes {
            if let Err(f) = o {
                self.passed = false;
                self.failures.push(f);
            }
        }
    }
}

fn failure(case: String, detail: String, g: &MultiGraph, k: u32) -> Failure {
    Failure {
        case,
        detail,
        instance: Some(write_instance(&Instance { graph: g.clone(), k })),
    }
}

pub fn run(name: &str, cfg: &RunConfig) -> Option<SuiteReport> {
    let start = Instant::now();
    let mut r = match name {
        "oracle-cross" => oracle_cross(cfg),
        "decision" => decision(cfg),
        "rule-safeness" => rule_safeness(cfg),
        "classification" => classification(cfg),
        "rigidization" => rigidization(cfg),
        "size-bound" => size_bound(cfg),
        "structure" => structure(cfg),
        "exits" => exits(cfg),
        "gadget" => gadget(cfg),
        "throughput" => throughput(cfg),
        _ => return None,
    };
    r.seconds = start.elapsed().as_secs_f64();
    Some(r)
}

fn with_mask(g: &MultiGraph, mask: u32) -> MultiGraph {
    let mut h = g.clone();
    let vs: Vec<VertexId> = h.vertices().collect();
    for (i, v) in vs.into_iter().enumerate() {
        h.set_terminal(v, mask >> i & 1 == 1).unwrap();
    }
    h
}

fn min_cover(structures: &[FaceStructure], req: &std::collections::BTreeSet<VertexId>) -> Option<usize> {
    structures
        .iter()
        .filter_map(|fs| cover_faces(fs, req, &[], ExternalUse::Any, None).map(|c| c.len()))
        .min()
}

/// Seeded biconnected graphs on 4 to 9 vertices. Density steps down until
/// the rotation route fits its budget.
pub fn biconnected_corpus(count: u64, cfg: &RunConfig) -> Vec<(u64, Instance)> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed.wrapping_add(i);
            let mut p = GenParams::new(seed, 4 + (i % 6) as u32);
            p.connectivity = Connectivity::Biconnected;
            p.density = 0.5 + (i % 5) as f64 * 0.1;
            p.terminal_fraction = 0.3 + (i % 4) as f64 * 0.15;
            p.k = 1 + (i % 3) as u32;
            loop {
                let inst = gen_planar(&p);
                if enumeration_cost(&inst.graph) <= cfg.rotation_budget || p.density <= 0.0 {
                    return (seed, inst);
                }
                p.density -= 0.1;
            }
        })
        .collect()
}

/// Rotation route against the SPR route: every connected graph on at most
/// six vertices under every terminal set, then seeded biconnected graphs.
fn oracle_cross(cfg: &RunConfig) -> SuiteReport {
    let mut r = SuiteReport::new("oracle-cross");
    let oc = cfg.oracle();
    let graphs = small_connected_planar_graphs(6);
    let out: Vec<Vec<Result<(), Failure>>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let n = g.vertex_count();
            let (a, b) = match (face_structures(g, Route::Rotations, &oc), face_structures(g, Route::Spr, &oc)) {
                (Ok(a), Ok(b)) => (a, b),
                (x, y) => {
                    let d = format!("enumeration failed: {:?} / {:?}", x.err(), y.err());
                    return vec![Err(failure(format!("graph {i}"), d, g, 1))];
                }
            };
            (1u32..1 << n)
                .map(|mask| {
                    let h = with_mask(g, mask);
                    let req = h.terminal_set();
                    let (x, y) = (min_cover(&a, &req), min_cover(&b, &req));
                    if x == y {
                        Ok(())
                    } else {
                        Err(failure(format!("graph {i} mask {mask}"), format!("rotations {x:?} spr {y:?}"), &h, 1))
                    }
                })
                .collect()
        })
        .collect();
    let exhaustive: usize = out.iter().map(|v| v.len()).sum();
    r.absorb(out.into_iter().flatten().collect());
    let corpus = biconnected_corpus(500, cfg);
    let out: Vec<Result<(), Failure>> = corpus
        .par_iter()
        .map(|(seed, inst)| {
            let g = &inst.graph;
            let x = fcn_exact_via(g, Route::Rotations, &oc);
            let y = fcn_exact_via(g, Route::Spr, &oc);
            match (x, y) {
                (Ok(x), Ok(y)) if x == y => Ok(()),
                (x, y) => Err(failure(format!("seed {seed}"), format!("rotations {x:?} spr {y:?}"), g, inst.k)),
            }
        })
        .collect();
    r.absorb(out);
    r.metric("graphs_up_to_6", json!(graphs.len()));
    r.metric("exhaustive_cases", json!(exhaustive));
    r.metric("seeded_biconnected", json!(corpus.len()));
    r
}

/// Kernel answer against the oracle answer on the input.
pub fn decision_corpus(count: u64, cfg: &RunConfig) -> Vec<(u64, Instance)> {
    (0..count)
        .map(|i| {
            let seed = cfg.seed.wrapping_add(i);
            let mut p = GenParams::new(seed, 4 + (i % 9) as u32);
            p.k = 1 + (i % 3) as u32;
            p.density = 0.45 + (i % 6) as f64 * 0.1;
            p.terminal_fraction = 0.2 + (i % 5) as f64 * 0.15;
            if i % 2 == 1 {
                p.connectivity = Connectivity::Biconnected;
            }
            (seed, gen_planar(&p))
        })
        .collect()
}

fn decision(cfg: &RunConfig) -> SuiteReport {
    let mut r = SuiteReport::new("decision");
    let oc = cfg.oracle();
    let corpus = decision_corpus(1000, cfg);
    let out: Vec<Result<(), Failure>> = corpus
        .par_iter()
        .map(|(seed, inst)| {
            let bad = |d: String| failure(format!("seed {seed}"), d, &inst.graph, inst.k);
            let out = kernelize(inst, &cfg.kernel()).map_err(|e| bad(e.to_string()))?;
            let truth = decide(&inst.graph, inst.k, &oc).map_err(|e| bad(e.to_string()))?;
            let got = match out.verdict {
                Verdict::Yes => true,
                Verdict::No(_) => false,
                Verdict::Open => decide(&out.instance.graph, out.instance.k, &oc).map_err(|e| bad(e.to_string()))?,
            };
            if got == truth {
                Ok(())
            } else {
                Err(bad(format!("kernel says {got}, input says {truth} ({:?})", out.verdict)))
            }
        })
        .collect();
    r.absorb(out);
    r
}

pub const RULE_GROUPS: [&str; 13] = [
    "RR1", "RR2", "RR3", "S4", "S5", "S6", "S7", "P8", "P9", "THFR", "BER+PFM", "BEC", "rigidize",
];

fn rule_group(rule: Rule) -> Option<&'static str> {
    Some(match rule {
        Rule::Rr1 => "RR1",
        Rule::Rr2 => "RR2",
        Rule::Rr3 => "RR3",
        Rule::S4 => "S4",
        Rule::S5 => "S5",
        Rule::S6 => "S6",
        Rule::S7 => "S7",
        Rule::P8 => "P8",
        Rule::P9 => "P9",
        Rule::Thfr => "THFR",
        Rule::Ber | Rule::Pfm => "BER+PFM",
        Rule::Bec => "BEC",
        Rule::Rigidize => "rigidize",
        _ => return None,
    })
}

/// Seeded instance for rule coverage: random biconnected graphs mixed with
/// wheels, theta graphs, chains of pieces, parallel bundles, and dense
/// graphs with few terminals, which keep separators after reduction.
pub fn rule_instance(i: u64, cfg: &RunConfig) -> Instance {
    let seed = cfg.seed.wrapping_add(i);
    let j = i / 7;
    match i % 7 {
        0 => wheel_instance(seed),
        1 => theta_instance(seed),
        2 => semi_chain_instance(seed),
        3 => series_instance(seed),
        4 => bundle_instance(seed),
        5 => {
            let mut p = GenParams::new(seed, 7 + (j % 5) as u32);
            p.k = 1 + (j % 3) as u32;
            p.density = 0.55 + (j % 4) as f64 * 0.15;
            p.terminal_fraction = 0.2 + (j % 5) as f64 * 0.15;
            p.connectivity = Connectivity::Biconnected;
            gen_planar(&p)
        }
        _ => {
            let mut p = GenParams::new(seed, 12 + (j % 3) as u32);
            p.k = 2 + (j % 2) as u32;
            p.density = 0.9;
            p.terminal_fraction = 0.1;
            p.connectivity = Connectivity::Biconnected;
            gen_planar(&p)
        }
    }
}

/// Rule groups fired on one instance and the step checks.
type RuleOutcome = (Vec<&'static str>, Vec<Result<(), Failure>>);

/// Profile of every recorded rule application against the enhancement it
/// replaced, over at least `min_instances` instances and until each rule
/// group has `need` applications.
pub fn rule_safeness_with(cfg: &RunConfig, need: usize, min_instances: u64, max_instances: u64) -> SuiteReport {
    let mut r = SuiteReport::new("rule-safeness");
    let oc = cfg.oracle();
    let mut fired: BTreeMap<&'static str, usize> = RULE_GROUPS.iter().map(|&g| (g, 0)).collect();
    let mut next = 0u64;
    while next < max_instances && (next < min_instances || fired.values().any(|&c| c < need)) {
        let batch: Vec<u64> = (next..(next + 64).min(max_instances)).collect();
        next += batch.len() as u64;
        let out: Vec<RuleOutcome> = batch
            .par_iter()
            .map(|&i| {
                let inst = rule_instance(i, cfg);
                let g = &inst.graph;
                let e = g.edge_ids().next().unwrap();
                let bk = match kernelize_block(g, e, inst.k, true) {
                    Ok(bk) => bk,
                    Err(err) => return (vec![], vec![Err(failure(format!("instance {i}"), err.to_string(), g, inst.k))]),
                };
                let mut groups = Vec::new();
                let mut res = Vec::new();
                for s in bk.steps {
                    let Some(group) = rule_group(s.rule) else { continue };
                    groups.push(group);
                    let v = verify_nice_kernel(&s.before, &s.corners, &s.after, &s.corners, inst.k, &oc);
                    res.push(match v {
                        Ok(v) if v.pass() => Ok(()),
                        Ok(v) => Err(failure(
                            format!("instance {i} {group} node {}", s.node),
                            format!("profile {:?} became {:?}", v.original, v.kernel),
                            &s.before,
                            inst.k,
                        )),
                        Err(err) => Err(failure(format!("instance {i} {group}"), err.to_string(), &s.before, inst.k)),
                    });
                }
                (groups, res)
            })
            .collect();
        for (groups, res) in out {
            for g in groups {
                *fired.get_mut(g).unwrap() += 1;
            }
            r.absorb(res);
        }
    }
    for (g, &c) in &fired {
        if c < need {
            r.fail(format!("{g} coverage"), format!("{c} applications, {need} needed"), None);
        }
    }
    r.metric("applications", json!(fired));
    r.metric("instances", json!(next));
    r
}

fn rule_safeness(cfg: &RunConfig) -> SuiteReport {
    rule_safeness_with(cfg, 200, 500, 8000)
}

/// Dynamic-programming class against the brute-force class of every
/// non-root node, for each block rooted at its first edge.
fn classes_agree(g: &MultiGraph, cfg: &RunConfig) -> Result<usize, String> {
    let oc = cfg.oracle();
    let bct = block_cut_tree(g).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for b in &bct.blocks {
        if b.edges.len() < 2 {
            continue;
        }
        let h = g.edge_subgraph(&b.edges);
        let tree = spr_tree_rooted(&h, b.edges[0]).map_err(|e| e.to_string())?;
        let cl = classify_tree(&tree);
        for t in 0..tree.len() {
            if t == tree.root() {
                continue;
            }
            let brute = brute_class(&tree, t, &oc).map_err(|e| e.to_string())?;
            if brute != cl.class(t) {
                let c = tree.corners(t);
                return Err(format!(
                    "node {t} corners {} {}: dp {} brute {}",
                    c.c1 + 1,
                    c.c2 + 1,
                    cl.class(t).name(),
                    brute.name()
                ));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn classification(cfg: &RunConfig) -> SuiteReport {
    let mut r = SuiteReport::new("classification");
    let graphs = small_connected_planar_graphs(6);
    let mut cases: Vec<(String, MultiGraph, u32)> = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        for mask in 1u32..1 << g.vertex_count() {
            cases.push((format!("graph {i} mask {mask}"), with_mask(g, mask), 1));
        }
    }
    for (seed, inst) in biconnected_corpus(500, cfg) {
        cases.push((format!("seed {seed}"), inst.graph, inst.k));
    }
    let out: Vec<Result<usize, Failure>> = cases
        .par_iter()
        .map(|(case, g, k)| classes_agree(g, cfg).map_err(|d| failure(case.clone(), d, g, *k)))
        .collect();
    let nodes: usize = out.iter().filter_map(|o| o.as_ref().ok()).sum();
    r.absorb(out.into_iter().map(|o| o.map(|_| ())).collect());
    r.metric("nodes_compared", json!(nodes));
    r
}

/// Seeded connected graph for rigidization, embedded by the planarity test.
fn rigidization(cfg: &RunConfig) -> SuiteReport {
    let mut r = SuiteReport::new("rigidization");
    let out: Vec<Result<(), Failure>> = (0..200u64)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed.wrapping_add(i);
            let mut p = GenParams::new(seed, 3 + (i % 14) as u32);
            p.density = 0.3 + (i % 6) as f64 * 0.12;
            let g = gen_planar(&p).graph;
            let rot = planar_embedding(&g).unwrap();
            let u = separator_vertices(&g);
            let (h, _) = rigidize(&g, &rot, &u);
            let growth = h.vertex_count() - g.vertex_count();
            if !two_separator_free(&h) {
                Err(failure(format!("seed {seed}"), "separator of size two survives".into(), &g, 1))
            } else if growth > 6 * g.edge_count() {
                Err(failure(format!("seed {seed}"), format!("{growth} new vertices for {} edges", g.edge_count()), &g, 1))
            } else {
                Ok(())
            }
        })
        .collect();
    r.absorb(out);
    r
}

/// Largest `|V(kernel)| / k^3` accepted by the size-bound suite.
pub const SIZE_CONSTANT: f64 = 32.0;

fn size_bound(cfg: &RunConfig) -> SuiteReport {
    let mut r = SuiteReport::new("size-bound");
    let corpus = decision_corpus(1000, cfg);
    let out: Vec<Result<(f64, u64), Failure>> = corpus
        .par_iter()
        .map(|(seed, inst)| {
            let out = kernelize(inst, &cfg.kernel())
                .map_err(|e| failure(format!("seed {seed}"), e.to_string(), &inst.graph, inst.k))?;
            let ratio = out.instance.graph.vertex_count() as f64 / (inst.k as f64).powi(3);
            Ok((ratio, *seed))
        })
        .collect();
    let mut worst = (0.0f64, 0u64);
    let mut res = Vec::new();
    for o in out {
        match o {
            Ok(x) => {
                if x.0 > worst.0 {
                    worst = x;
                }
                res.push(Ok(()));
            }
            Err(f) => res.push(Err(f)),
        }
    }
    r.absorb(res);
    if worst.0 > SIZE_CONSTANT + 1e-9 {
        r.fail(format!("seed {}", worst.1), format!("ratio {} above {SIZE_CONSTANT}", worst.0), None);
    }
    r.metric("max_ratio", json!(worst.0));
    r.metric("max_ratio_seed", json!(worst.1));
    r
}

/// Face conditions on R skeletons and extended skeletons.
fn skeleton_faces(g: &MultiGraph) -> Result<(usize, usize), String> {
    let bct = block_cut_tree(g).map_err(|e| e.to_string())?;
    let (mut plain, mut extended) = (0, 0);
    for b in &bct.blocks {
        if b.edges.len() < 2 {
            continue;
        }
        let h = g.edge_subgraph(&b.edges);
        let tree = spr_tree_rooted(&h, b.edges[0]).map_err(|e| e.to_string())?;
        for (t, node) in tree.nodes.iter().enumerate() {
            let sk = &node.skeleton;
            if node.kind != NodeType::R || sk.vertex_count() < 4 {
                continue;
            }
            let rot = planar_embedding(sk).ok_or("skeleton is not planar")?;
            let fs = face_structure(sk, &rot).map_err(|e| e.to_string())?;
            if three_share_two_faces(&fs) {
                return Err(format!("skeleton of node {t}: three vertices on two faces"));
            }
            plain += 1;
        }
        for (ext, fs) in extended_skeletons(&tree) {
            if ext.vertex_count() >= 7 {
                if four_share_two_faces(&fs) {
                    return Err("extended skeleton: four vertices on two faces".into());
                }
                extended += 1;
            }
        }
    }
    Ok((plain, extended))
}

fn structure(cfg: &RunConfig) -> SuiteReport {
    let mut r = SuiteReport::new("structure");
    let mut cases: Vec<(String, Instance)> =
        decision_corpus(1000, cfg).into_iter().map(|(s, i)| (format!("seed {s}"), i)).collect();
    cases.extend((0..400).map(|i| (format!("rule instance {i}"), rule_instance(i, cfg))));
    let out: Vec<Result<(usize, usize), Failure>> = cases
        .par_iter()
        .map(|(case, inst)| skeleton_faces(&inst.graph).map_err(|d| failure(case.clone(), d, &inst.graph, inst.k)))
        .collect();
    let (mut plain, mut extended) = (0, 0);
    for (p, e) in out.iter().filter_map(|o| o.as_ref().ok()) {
        plain += p;
        extended += e;
    }
    r.absorb(out.into_iter().map(|o| o.map(|_| ())).collect());
    r.metric("r_skeletons", json!(plain));
    r.metric("extended_skeletons", json!(extended));
    r
}

/// `k + 1` wheels on rim `0 a 1 b` between 0 and 1, each with a terminal
/// hub.
pub fn problematic_exit(k: u32) -> Instance {
    let mut g = MultiGraph::from_edges(2, &[(0, 1)]);
    for _ in 0..=k {
        let (a, b, h) = (g.add_vertex(), g.add_vertex(), g.add_vertex());
        for (x, y) in [(0, a), (a, 1), (1, b), (b, 0), (h, 0), (h, a), (h, 1), (h, b)] {
            g.add_edge(x, y, EdgeKind::Real).unwrap();
        }
        g.set_terminal(h, true).unwrap();
    }
    Instance { graph: g, k }
}

/// Wheel with hub 0 and rim `1..=r`, `r = max(6, k^2 + 1)`; the first
/// `k^2 + 1` rim edges are each replaced by two paths through a terminal.
pub fn semi_exit(k: u32) -> Instance {
    let pieces = k * k + 1;
    let r = pieces.max(6);
    let mut g = MultiGraph::from_edges(r + 1, &[]);
    for i in 1..=r {
        let j = i % r + 1;
        g.add_edge(0, i, EdgeKind::Real).unwrap();
        if i <= pieces {
            for _ in 0..2 {
                let t = g.add_vertex();
                g.set_terminal(t, true).unwrap();
                g.add_edge(i, t, EdgeKind::Real).unwrap();
                g.add_edge(t, j, EdgeKind::Real).unwrap();
            }
        } else {
            g.add_edge(i, j, EdgeKind::Real).unwrap();
        }
    }
    Instance { graph: g, k }
}

/// Triangulation on 8 to 10 vertices with at least five terminals, `k = 1`.
pub fn terminals_exit(seed: u64) -> Instance {
    let mut p = GenParams::new(seed, 8 + (seed % 3) as u32);
    p.density = 1.0;
    p.terminal_fraction = 0.0;
    p.k = 1;
    let mut inst = gen_planar(&p);
    let n = inst.graph.vertex_count() as u64;
    let t = 5 + seed % (n - 4);
    let mut order: Vec<VertexId> = inst.graph.vertices().collect();
    order.rotate_left((seed % n) as usize);
    for &v in order.iter().take(t as usize) {
        inst.graph.set_terminal(v, true).unwrap();
    }
    inst
}

/// Edge `0 1` plus seven paths of length two or three between 0 and 1
/// through terminals, `k = 1`. The edge roots the tree at the P-node.
pub fn p_children_exit(seed: u64) -> Instance {
    let mut g = MultiGraph::from_edges(2, &[(0, 1)]);
    for i in 0..7u64 {
        let len = 2 + (seed >> i & 1);
        let mut prev = 0;
        for j in 1..len {
            let v = g.add_vertex();
            g.set_terminal(v, j == 1).unwrap();
            g.add_edge(prev, v, EdgeKind::Real).unwrap();
            prev = v;
        }
        g.add_edge(prev, 1, EdgeKind::Real).unwrap();
    }
    Instance { graph: g, k: 1 }
}

fn exits(cfg: &RunConfig) -> SuiteReport {
    let mut r = SuiteReport::new("exits");
    let mut cases: Vec<(String, Instance, Rule)> = Vec::new();
    for k in 1..=3 {
        cases.push((format!("problematic k={k}"), problematic_exit(k), Rule::ExitProblematic));
    }
    for k in 1..=2 {
        cases.push((format!("semi k={k}"), semi_exit(k), Rule::ExitSemi));
    }
    for s in 0..8 {
        let seed = cfg.seed.wrapping_add(s);
        cases.push((format!("terminals seed {seed}"), terminals_exit(seed), Rule::ExitTerminals));
        cases.push((format!("p-children seed {seed}"), p_children_exit(seed), Rule::ExitPChildren));
    }
    let oc = cfg.oracle();
    let out: Vec<Result<(), Failure>> = cases
        .par_iter()
        .map(|(case, inst, rule)| {
            let bad = |d: String| failure(case.clone(), d, &inst.graph, inst.k);
            let out = kernelize(inst, &cfg.kernel()).map_err(|e| bad(e.to_string()))?;
            match out.verdict {
                Verdict::No(c) if c.rule == *rule => {}
                v => return Err(bad(format!("expected {}, got {v:?}", rule.name()))),
            }
            let f = fcn_capped_via(&inst.graph, inst.k as usize, Route::Auto, &oc).map_err(|e| bad(e.to_string()))?;
            if f <= inst.k as usize {
                return Err(bad(format!("oracle finds a cover with {f} faces")));
            }
            Ok(())
        })
        .collect();
    r.absorb(out);
    r
}

/// The wheel gadget between `c1` and `c2`, next to the edge `c1 c2` and a
/// path `c1 x c2` that holds the root edge. The gadget is the S-node with
/// corners `c1 c2`; it is classified both ways.
fn gadget(cfg: &RunConfig) -> SuiteReport {
    let mut r = SuiteReport::new("gadget");
    let kern = w4_enhancement();
    let Corners { c1, c2, edge } = kern.corners;
    let mut g = kern.graph.clone();
    g.set_edge_kind(edge, EdgeKind::Real).unwrap();
    let x = g.add_vertex();
    let root = g.add_edge(c1, x, EdgeKind::Real).unwrap();
    g.add_edge(x, c2, EdgeKind::Real).unwrap();
    r.cases = 1;
    let tree = match spr_tree_rooted(&g, root) {
        Ok(t) => t,
        Err(e) => {
            r.fail("wheel".into(), e.to_string(), Some((&g, 1)));
            return r;
        }
    };
    let cl = classify_tree(&tree);
    let node = (0..tree.len()).find(|&t| {
        let c = tree.corners(t);
        tree.node(t).kind == NodeType::S && t != tree.root() && c.contains(c1) && c.contains(c2)
    });
    let Some(t) = node else {
        r.fail("wheel".into(), "no S-node with the gadget corners".into(), Some((&g, 1)));
        return r;
    };
    let dp = cl.class(t);
    let brute = brute_class(&tree, t, &cfg.oracle());
    r.metric("dp", json!(dp.name()));
    r.metric("brute", json!(brute.as_ref().map(|c| c.name()).unwrap_or("budget")));
    let semi = facecover::classify::ComponentClass::SemiProblematic;
    if dp != semi || brute.as_ref().ok() != Some(&semi) {
        r.fail("wheel".into(), format!("dp {} brute {brute:?}", dp.name()), Some((&g, 1)));
    }
    r
}

/// Seconds allowed for the large instance.
pub const THROUGHPUT_LIMIT: f64 = 60.0;

/// Two instances on 10,000 vertices with `k = 5`: dense terminals, and five
/// terminals so that the whole tree is reduced.
fn throughput(cfg: &RunConfig) -> SuiteReport {
    let mut r = SuiteReport::new("throughput");
    let mut worst = 0.0f64;
    for (label, fraction) in [("dense", 0.4), ("sparse", 0.0005)] {
        let mut p = GenParams::new(cfg.seed, 10_000);
        p.k = 5;
        p.terminal_fraction = fraction;
        let inst = gen_planar(&p);
        r.cases += 1;
        let start = Instant::now();
        let out = kernelize(&inst, &cfg.kernel());
        let secs = start.elapsed().as_secs_f64();
        worst = worst.max(secs);
        r.metric(&format!("{label}_seconds"), json!(secs));
        match out {
            Ok(out) => {
                r.metric(&format!("{label}_kernel_vertices"), json!(out.instance.graph.vertex_count()));
                r.metric(&format!("{label}_decision_hint"), json!(out.verdict.hint()));
            }
            Err(e) => r.fail(label.into(), e.to_string(), None),
        }
        if secs >= THROUGHPUT_LIMIT {
            r.fail(label.into(), format!("{secs:.1} s"), None);
        }
    }
    r.metric("seconds", json!(worst));
    r
}
