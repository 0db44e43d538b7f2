//! JSON traces and reports.

use facecover::kernelize::{KernelOutput, Verdict};
use facecover::oracle::{enumeration_cost, fcn_profile_exact, OracleConfig};
use facecover::profile::{Count, FcnProfile};
use facecover::decomposition::Corners;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiredJson {
    pub rule: String,
    pub node_id: usize,
    pub before: usize,
    pub after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileJson {
    pub f0: String,
    pub f1: String,
    pub f2: String,
    /// `f0` with c1, c2 and both corners removed from the terminals.
    pub f0_minus: [String; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SizeJson {
    pub vertices: usize,
    pub edges: usize,
    pub terminals: usize,
    pub k: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub rule: String,
    pub node_id: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub rules_fired: Vec<FiredJson>,
    /// Profile of the kernel rooted at its first edge, when the oracle can
    /// afford it.
    pub profile: Option<ProfileJson>,
    pub kernel_size: SizeJson,
    pub decision_hint: String,
    pub certificate: Option<CertificateJson>,
    /// Input vertex (1-based) behind each kernel vertex, in kernel order.
    pub vertex_map: Vec<Option<u32>>,
    pub input_vertices: usize,
    pub input_edges: usize,
    pub faces_paid_by_branches: u32,
}

pub fn count_str(c: Count) -> String {
    match c {
        Count::Finite(x) => x.to_string(),
        Count::AboveK => ">k".to_string(),
        Count::Infinity => "inf".to_string(),
    }
}

pub fn profile_json(p: &FcnProfile) -> ProfileJson {
    ProfileJson {
        f0: count_str(p.f0),
        f1: count_str(p.f1),
        f2: count_str(p.f2),
        f0_minus: p.f0_minus.map(count_str),
    }
}

/// Largest enumeration the trace spends on the kernel profile.
const PROFILE_BUDGET: u128 = 20_000;

pub fn trace(out: &KernelOutput, oracle: &OracleConfig) -> Trace {
    let g = &out.instance.graph;
    let profile = g
        .edges()
        .next()
        .filter(|_| g.is_connected() && enumeration_cost(g) <= PROFILE_BUDGET)
        .and_then(|(e, ed)| {
            let corners = Corners { c1: ed.u, c2: ed.v, edge: e };
            fcn_profile_exact(g, &corners, out.instance.k, oracle).ok()
        })
        .map(|p| profile_json(&p));
    let certificate = match out.verdict {
        Verdict::No(c) => Some(CertificateJson {
            rule: c.rule.name().to_string(),
            node_id: c.node,
        }),
        _ => None,
    };
    Trace {
        rules_fired: out
            .trace
            .iter()
            .map(|f| FiredJson {
                rule: f.rule.name().to_string(),
                node_id: f.node,
                before: f.before,
                after: f.after,
            })
            .collect(),
        profile,
        kernel_size: SizeJson {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            terminals: g.terminal_count(),
            k: out.instance.k,
        },
        decision_hint: out.verdict.hint().to_string(),
        certificate,
        vertex_map: out.origin.iter().map(|o| o.map(|v| v + 1)).collect(),
        input_vertices: out.stats.input_vertices,
        input_edges: out.stats.input_edges,
        faces_paid_by_branches: out.stats.offset,
    }
}
