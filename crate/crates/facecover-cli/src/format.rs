//! Instance text format.
//!
//! ```text
//! c comment
//! p facecover <n> <m> <t> <k>
//! e <u> <v>      (m lines, 1-based, u < v, no duplicates)
//! t <v>          (t lines)
//! ```

use std::collections::BTreeSet;

use facecover::embedding::is_planar;
use facecover::{Instance, MultiGraph};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} {what} lines, found {found}")]
    Count { what: &'static str, expected: usize, found: usize },
    #[error("graph is not planar")]
    NonPlanar,
    #[error("missing header line")]
    NoHeader,
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

fn numbers<const N: usize>(line: usize, parts: &[&str]) -> Result<[u64; N], FormatError> {
    if parts.len() != N {
        return Err(syntax(line, format!("expected {N} numbers")));
    }
    let mut out = [0u64; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| syntax(line, format!("bad number {p:?}")))?;
    }
    Ok(out)
}

/// Parse and validate an instance: simple, planar, ids in range.
pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let mut header: Option<[u64; 4]> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut terminals = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let parts: Vec<&str> = raw.split_whitespace().collect();
        let Some((&tag, rest)) = parts.split_first() else {
            continue;
        };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "second header"));
                }
                if rest.first() != Some(&"facecover") {
                    return Err(syntax(line, "header must read `p facecover n m t k`"));
                }
                let h = numbers::<4>(line, &rest[1..])?;
                if h[0] > u32::MAX as u64 || h[3] > u32::MAX as u64 {
                    return Err(syntax(line, "value out of range"));
                }
                header = Some(h);
            }
            "e" | "t" => {
                let Some(h) = header else {
                    return Err(syntax(line, "data before header"));
                };
                let n = h[0];
                if tag == "e" {
                    let [u, v] = numbers::<2>(line, rest)?;
                    if !(1 <= u && u < v && v <= n) {
                        return Err(syntax(line, format!("edge {u} {v} needs 1 <= u < v <= {n}")));
                    }
                    if !seen.insert((u, v)) {
                        return Err(syntax(line, format!("duplicate edge {u} {v}")));
                    }
                    edges.push((u as u32 - 1, v as u32 - 1));
                } else {
                    let [v] = numbers::<1>(line, rest)?;
                    if !(1 <= v && v <= n) {
                        return Err(syntax(line, format!("terminal {v} out of range")));
                    }
                    if !terminals.insert(v as u32 - 1) {
                        return Err(syntax(line, format!("duplicate terminal {v}")));
                    }
                }
            }
            other => return Err(syntax(line, format!("unknown line type {other:?}"))),
        }
    }
    let [n, m, t, k] = header.ok_or(FormatError::NoHeader)?;
    if edges.len() as u64 != m {
        return Err(FormatError::Count { what: "edge", expected: m as usize, found: edges.len() });
    }
    if terminals.len() as u64 != t {
        return Err(FormatError::Count { what: "terminal", expected: t as usize, found: terminals.len() });
    }
    let mut g = MultiGraph::from_edges(n as u32, &edges);
    for v in terminals {
        g.set_terminal(v, true).expect("vertex in range");
    }
    if !is_planar(&g) {
        return Err(FormatError::NonPlanar);
    }
    Ok(Instance { graph: g, k: k as u32 })
}

/// Canonical text of an instance whose vertex ids are `0..n`; edges and
/// terminals sorted.
pub fn write_instance(inst: &Instance) -> String {
    let g = &inst.graph;
    let (c, _) = g.compacted();
    let mut edges: Vec<(u32, u32)> = c.edges().map(|(_, e)| e.sorted()).collect();
    edges.sort_unstable();
    let terms: Vec<u32> = c.terminals().collect();
    let mut out = format!("p facecover {} {} {} {}\n", c.vertex_count(), edges.len(), terms.len(), inst.k);
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    for v in terms {
        out.push_str(&format!("t {}\n", v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const C6: &str = "c six-cycle\np facecover 6 6 6 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\nt 1\nt 2\nt 3\nt 4\nt 5\nt 6\n";

    #[test]
    fn parse_cycle() {
        let inst = parse_instance(C6).unwrap();
        assert_eq!(inst.graph.vertex_count(), 6);
        assert_eq!(inst.graph.terminal_count(), 6);
        assert_eq!(inst.k, 1);
    }

    #[test]
    fn round_trip_is_identity_on_canonical_text() {
        let text = "p facecover 6 6 6 1\ne 1 2\ne 1 6\ne 2 3\ne 3 4\ne 4 5\ne 5 6\nt 1\nt 2\nt 3\nt 4\nt 5\nt 6\n";
        assert_eq!(write_instance(&parse_instance(text).unwrap()), text);
        assert_eq!(write_instance(&parse_instance(C6).unwrap()), text);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "e 1 2\n",
            "p facecover 2 1 0 1\ne 2 1\n",
            "p facecover 2 2 0 1\ne 1 2\ne 1 2\n",
            "p facecover 2 1 1 1\ne 1 2\nt 3\n",
            "p facecover 2 2 0 1\ne 1 2\n",
            "p other 2 1 0 1\ne 1 2\n",
            "p facecover 2 1 0 1\nx 1 2\n",
        ] {
            assert!(parse_instance(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn rejects_k5() {
        let mut text = String::from("p facecover 5 10 0 1\n");
        for u in 1..=5 {
            for v in u + 1..=5 {
                text.push_str(&format!("e {u} {v}\n"));
            }
        }
        assert_eq!(parse_instance(&text), Err(FormatError::NonPlanar));
    }
}
