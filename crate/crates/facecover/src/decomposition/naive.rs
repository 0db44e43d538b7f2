//! Reference triconnected components by repeated split-pair search.
//! Quadratic per split; used to cross-check the path-search algorithm.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::triconnected::{merge_components, CompKind, TricComp, TricResult};

fn classes(ends: &[(usize, usize)], es: &[usize], a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut verts: Vec<usize> = es.iter().flat_map(|&e| [ends[e].0, ends[e].1]).collect();
    verts.sort_unstable();
    verts.dedup();
    let idx: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &e in es {
        let (u, v) = ends[e];
        if u == a || u == b || v == a || v == b {
            continue;
        }
        let (ru, rv) = (find(&mut parent, idx[&u]), find(&mut parent, idx[&v]));
        parent[ru] = rv;
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut singles = Vec::new();
    for &e in es {
        let (u, v) = ends[e];
        let inner = [u, v].into_iter().find(|&x| x != a && x != b);
        match inner {
            Some(x) => groups.entry(find(&mut parent, idx[&x])).or_default().push(e),
            None => singles.push(vec![e]),
        }
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.extend(singles);
    out
}

pub fn triconnected_components_naive(_n: usize, edges: &[(usize, usize)]) -> TricResult {
    let m = edges.len();
    let mut ends = edges.to_vec();
    let mut work = vec![(0..m).collect::<Vec<usize>>()];
    let mut done = Vec::new();
    while let Some(es) = work.pop() {
        let mut bundles: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for &e in &es {
            let (u, v) = ends[e];
            bundles.entry((u.min(v), u.max(v))).or_default().push(e);
        }
        if bundles.len() == 1 {
            done.push(TricComp {
                kind: CompKind::Bond,
                edges: es,
            });
            continue;
        }
        if let Some((&(a, b), bundle)) = bundles.iter().find(|(_, b)| b.len() >= 2) {
            let ev = ends.len();
            ends.push((a, b));
            let mut bond = bundle.clone();
            bond.push(ev);
            done.push(TricComp {
                kind: CompKind::Bond,
                edges: bond,
            });
            let mut rest: Vec<usize> = es.iter().copied().filter(|e| !bundle.contains(e)).collect();
            rest.push(ev);
            work.push(rest);
            continue;
        }
        let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
        for &e in &es {
            *deg.entry(ends[e].0).or_default() += 1;
            *deg.entry(ends[e].1).or_default() += 1;
        }
        if deg.values().all(|&d| d == 2) {
            done.push(TricComp {
                kind: CompKind::Polygon,
                edges: es,
            });
            continue;
        }
        let verts: Vec<usize> = deg.keys().copied().collect();
        let mut split = None;
        'search: for (i, &a) in verts.iter().enumerate() {
            for &b in &verts[i + 1..] {
                let cls = classes(&ends, &es, a, b);
                if cls.len() < 2 {
                    continue;
                }
                for c in &cls {
                    if c.len() >= 2 && es.len() - c.len() >= 2 {
                        split = Some((a, b, c.clone()));
                        break 'search;
                    }
                }
            }
        }
        match split {
            None => done.push(TricComp {
                kind: CompKind::Triconnected,
                edges: es,
            }),
            Some((a, b, part)) => {
                let ev = ends.len();
                ends.push((a, b));
                let mut one = part.clone();
                one.push(ev);
                let mut two: Vec<usize> = es.iter().copied().filter(|e| !part.contains(e)).collect();
                two.push(ev);
                work.push(one);
                work.push(two);
            }
        }
    }
    merge_components(done, ends, m)
}
