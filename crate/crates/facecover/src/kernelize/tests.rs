use alloc::collections::BTreeMap;
use std::println;

use super::*;
use crate::harness::{gen_planar, small_connected_planar_graphs, Connectivity, GenParams};
use crate::oracle::{decide, fcn_profile_exact, verify_nice_kernel, OracleConfig};
use crate::profile::{Count, FcnProfile};
use crate::Instance;

fn profile(kern: &NiceKernel, k: u32) -> FcnProfile {
    fcn_profile_exact(&kern.graph, &kern.corners, k, &OracleConfig::default()).unwrap()
}

fn f(x: u32) -> Count {
    Count::Finite(x)
}

#[test]
fn gadget_profiles() {
    let p = profile(&p3_enhancement(), 3);
    assert_eq!((p.f0, p.f1, p.f2), (Count::Infinity, f(1), f(2)));
    let p = profile(&triangle_enhancement(), 3);
    assert_eq!((p.f0, p.f1, p.f2), (f(1), f(1), f(2)));
    let p = profile(&c4_enhancement(), 3);
    assert_eq!((p.f0, p.f1, p.f2), (f(1), f(2), f(2)));
    let p = profile(&w4_enhancement(), 3);
    assert_eq!((p.f0, p.f1, p.f2), (f(2), f(2), f(2)));
}

/// Kernel answer against the oracle on the input.
fn check_decision(inst: &Instance, cfg: &OracleConfig) -> Result<(), alloc::string::String> {
    let out = kernelize(inst, &KernelConfig::default()).map_err(|e| alloc::format!("{e}"))?;
    let truth = decide(&inst.graph, inst.k, cfg).unwrap();
    let got = match out.verdict {
        Verdict::Yes => true,
        Verdict::No(_) => false,
        Verdict::Open => decide(&out.instance.graph, out.instance.k, cfg).unwrap(),
    };
    if got != truth {
        return Err(alloc::format!("verdict {:?} got {got} truth {truth}", out.verdict));
    }
    Ok(())
}

#[test]
fn decisions_on_small_graphs() {
    let cfg = OracleConfig::default();
    let graphs = small_connected_planar_graphs(5);
    let mut bad = 0;
    for g in &graphs {
        let n = g.vertex_count() as u32;
        for mask in 0u32..(1 << n) {
            let mut h = g.clone();
            for v in 0..n {
                h.set_terminal(v, mask >> v & 1 == 1).unwrap();
            }
            for k in 1..=2 {
                let inst = Instance { graph: h.clone(), k };
                if let Err(e) = check_decision(&inst, &cfg) {
                    bad += 1;
                    if bad < 5 {
                        println!("{:?} k={k}: {e}", h.edge_multiset());
                    }
                }
            }
        }
    }
    assert_eq!(bad, 0);
}

#[test]
fn decisions_on_generated_graphs() {
    let cfg = OracleConfig::default();
    let mut bad = 0;
    for seed in 0..300u64 {
        let mut p = GenParams::new(seed, 6 + (seed % 6) as u32);
        p.k = 1 + (seed % 3) as u32;
        p.density = 0.5 + (seed % 5) as f64 * 0.1;
        if seed % 2 == 0 {
            p.connectivity = Connectivity::Biconnected;
        }
        let inst = gen_planar(&p);
        if let Err(e) = check_decision(&inst, &cfg) {
            bad += 1;
            if bad < 5 {
                println!("seed {seed}: {e}");
            }
        }
    }
    assert_eq!(bad, 0);
}

#[test]
fn rule_steps_preserve_profiles() {
    let cfg = OracleConfig::default();
    let mut fired: BTreeMap<Rule, (usize, usize)> = BTreeMap::new();
    for seed in 0..200u64 {
        let mut p = GenParams::new(seed, 7 + (seed % 5) as u32);
        p.k = 1 + (seed % 3) as u32;
        p.connectivity = Connectivity::Biconnected;
        let inst = gen_planar(&p);
        let e = inst.graph.edge_ids().next().unwrap();
        let bk = kernelize_block(&inst.graph, e, p.k, true).unwrap();
        for s in bk.steps {
            let v = verify_nice_kernel(&s.before, &s.corners, &s.after, &s.corners, p.k, &cfg).unwrap();
            let slot = fired.entry(s.rule).or_default();
            slot.0 += 1;
            if !v.pass() {
                slot.1 += 1;
                if slot.1 < 3 {
                    println!("seed {seed} {:?}: {:?} vs {:?}", s.rule, v.original, v.kernel);
                }
            }
        }
    }
    println!("{fired:?}");
    assert!(fired.values().all(|&(_, bad)| bad == 0));
}

#[test]
fn rigidization_removes_small_separators() {
    let mut g = crate::graph::MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (1, 5), (5, 3)]);
    g.set_terminal(0, true).unwrap();
    let rot = crate::embedding::planar_embedding(&g).unwrap();
    let u = separator_vertices(&g);
    let (h, r) = rigidize(&g, &rot, &u);
    assert!(crate::embedding::is_planar_rotation(&h, &r));
    assert!(two_separator_free(&h), "{:?}", h.edge_multiset());
    assert!(h.vertex_count() <= g.vertex_count() + 6 * g.edge_count());
}
