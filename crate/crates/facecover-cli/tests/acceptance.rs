//! Acceptance criteria, one test and one pass/fail line each.

use facecover_cli::config::RunConfig;
use facecover_cli::suites::{run, SuiteReport, RULE_GROUPS, SIZE_CONSTANT, THROUGHPUT_LIMIT};

fn suite(name: &str) -> SuiteReport {
    run(name, &RunConfig::default()).expect("known suite")
}

fn metric_u64(r: &SuiteReport, key: &str) -> u64 {
    r.metrics.get(key).and_then(|v| v.as_u64()).unwrap_or(0)
}

fn metric_f64(r: &SuiteReport, key: &str) -> f64 {
    r.metrics.get(key).and_then(|v| v.as_f64()).unwrap_or(f64::NAN)
}

/// Print the line, then fail with the first counterexamples.
fn verdict(n: u32, what: &str, r: &SuiteReport, extra: Result<(), String>) {
    let ok = r.passed && extra.is_ok();
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] {n:>2} {what}: {} cases, {:.1} s", r.cases, r.seconds);
    let mut why: Vec<String> = r.failures.iter().take(5).map(|f| format!("{}: {}", f.case, f.detail)).collect();
    if let Err(e) = extra {
        why.push(e);
    }
    assert!(ok, "{}", why.join("\n"));
}

fn at_least(what: &str, got: u64, need: u64) -> Result<(), String> {
    if got >= need {
        Ok(())
    } else {
        Err(format!("{what}: {got} < {need}"))
    }
}

#[test]
fn criterion_01_routes_agree() {
    let r = suite("oracle-cross");
    let extra = at_least("graphs on <= 6 vertices", metric_u64(&r, "graphs_up_to_6"), 129)
        .and(at_least("seeded biconnected", metric_u64(&r, "seeded_biconnected"), 500));
    verdict(1, "rotation route equals SPR route", &r, extra);
}

#[test]
fn criterion_02_decisions_preserved() {
    let r = suite("decision");
    let extra = at_least("instances", r.cases as u64, 1000);
    verdict(2, "kernel preserves the decision", &r, extra);
}

#[test]
fn criterion_03_rule_profiles() {
    let r = suite("rule-safeness");
    let counts = &r.metrics["applications"];
    let extra = RULE_GROUPS
        .iter()
        .try_for_each(|g| at_least(g, counts.get(*g).and_then(|v| v.as_u64()).unwrap_or(0), 200));
    verdict(3, "every rule keeps the capped profile", &r, extra);
}

#[test]
fn criterion_04_classes_agree() {
    let r = suite("classification");
    let extra = at_least("nodes compared", metric_u64(&r, "nodes_compared"), 1);
    verdict(4, "dynamic-programming class equals brute-force class", &r, extra);
}

#[test]
fn criterion_05_rigidization() {
    let r = suite("rigidization");
    let extra = at_least("graphs", r.cases as u64, 200);
    verdict(5, "rigidization leaves no small separator", &r, extra);
}

#[test]
fn criterion_06_size_bound() {
    let r = suite("size-bound");
    let ratio = metric_f64(&r, "max_ratio");
    println!("     max |V(kernel)|/k^3 = {ratio}, C = {SIZE_CONSTANT}");
    let extra = if ratio <= SIZE_CONSTANT + 1e-9 {
        Ok(())
    } else {
        Err(format!("ratio {ratio} above {SIZE_CONSTANT}"))
    };
    verdict(6, "kernel size within C k^3", &r, extra);
}

#[test]
fn criterion_07_shared_faces() {
    let r = suite("structure");
    let extra = at_least("R skeletons", metric_u64(&r, "r_skeletons"), 1)
        .and(at_least("extended skeletons", metric_u64(&r, "extended_skeletons"), 1));
    verdict(7, "skeleton face-sharing bounds", &r, extra);
}

#[test]
fn criterion_08_counting_exits() {
    let r = suite("exits");
    verdict(8, "counting exits give NO and the oracle agrees", &r, Ok(()));
}

#[test]
fn criterion_09_wheel_gadget() {
    let r = suite("gadget");
    verdict(9, "wheel gadget is semi-problematic both ways", &r, Ok(()));
}

#[test]
fn criterion_10_throughput() {
    let r = suite("throughput");
    let secs = metric_f64(&r, "seconds");
    let extra = if secs < THROUGHPUT_LIMIT {
        Ok(())
    } else {
        Err(format!("{secs:.1} s"))
    };
    verdict(10, "n = 10,000, k = 5 within the time limit", &r, extra);
}
