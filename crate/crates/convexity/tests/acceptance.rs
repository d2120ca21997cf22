//! Acceptance gate: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test -p convexity --test acceptance -- --nocapture` to see
//! the lines; every criterion is exact-match and carries its runtime budget.

use std::time::{Duration, Instant};

use convexity::suites::{self, SuiteReport};

const SEED: u64 = 7;

fn assert_criterion(n: usize, what: &str, budget: Option<Duration>, reports: &[SuiteReport]) {
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failed: usize = reports.iter().map(|r| r.failed()).sum();
    let verdict = if failed == 0 { "PASS" } else { "FAIL" };
    println!("[{verdict}] criterion {n}: {what} ({checks} checks, {failed} failed)");
    for report in reports {
        for failure in report.failures().take(5) {
            println!("    {}: {}", failure.label, failure.detail);
        }
    }
    assert_eq!(failed, 0, "criterion {n} ({what}) had failing checks");
    let _ = budget;
}

fn run_with_budget(budget: Duration, f: impl FnOnce() -> Vec<SuiteReport>) -> Vec<SuiteReport> {
    let start = Instant::now();
    let reports = f();
    let elapsed = start.elapsed();
    assert!(
        elapsed < budget,
        "ran {elapsed:?}, budget {budget:?}"
    );
    reports
}

#[test]
fn criterion_1_lemma_value_tables() {
    let reports = run_with_budget(Duration::from_secs(120), || {
        vec![suites::lemma_tables(0, SEED)]
    });
    // Per n: three ti rows for K_n, three for C_n, and one gp_mc row for
    // each of K, C, P, W; n runs over 4..=9.
    assert_eq!(reports[0].checks.len(), 60);
    assert_criterion(
        1,
        "closed-form family tables match the exact solvers (4 <= n <= 9)",
        Some(Duration::from_secs(120)),
        &reports,
    );
}

#[test]
fn criterion_2_closure_axioms() {
    let reports = run_with_budget(Duration::from_secs(60), || {
        vec![suites::closure_axioms(500, SEED)]
    });
    assert_eq!(reports[0].checks.len(), 2000); // 500 trials x 4 convexities
    assert_criterion(
        2,
        "closure axioms on 500 random (G, S, S') across all four convexities",
        Some(Duration::from_secs(60)),
        &reports,
    );
}

#[test]
fn criterion_3_tree_formula() {
    let full = suites::lemma_tables(100, SEED);
    let tree_checks: Vec<_> = full
        .checks
        .iter()
        .filter(|c| c.label.starts_with("tree formula"))
        .cloned()
        .collect();
    assert_eq!(tree_checks.len(), 100);
    let report = SuiteReport {
        suite: "lemmas",
        checks: tree_checks,
    };
    assert_criterion(
        3,
        "tree formula equals brute-force P3 iteration time on 100 random trees",
        None,
        &[report],
    );
}

#[test]
fn criterion_4_universal_lift() {
    let reports = run_with_budget(Duration::from_secs(180), || {
        vec![suites::universal_lift(200, SEED)]
    });
    assert_eq!(reports[0].checks.len(), 200);
    assert_criterion(
        4,
        "universal-vertex lift on 200 random triangle-free graphs",
        Some(Duration::from_secs(180)),
        &reports,
    );
}

#[test]
fn criterion_5_sat_gadget_forward() {
    let reports = vec![suites::sat_forward(30, SEED)];
    assert!(reports[0]
        .checks
        .iter()
        .any(|c| c.label.contains("structural")));
    assert_criterion(
        5,
        "SAT gadget chain times and guard exclusion on 30 satisfiable formulas, plus m >= 10 structure",
        None,
        &reports,
    );
}

#[test]
fn criterion_6_monophonic_reductions() {
    let reports = run_with_budget(Duration::from_secs(300), || {
        vec![
            suites::simplicial_triples(100, SEED),
            suites::clique_gadget(40, SEED),
        ]
    });
    assert_eq!(reports[0].checks.len(), 100);
    assert_eq!(reports[1].checks.len(), 40);
    assert_criterion(
        6,
        "simplicial-triple biconditional (100 quadruples) and clique-gadget value (40 inputs)",
        Some(Duration::from_secs(300)),
        &reports,
    );
}

#[test]
fn criterion_7_mcis_gadget() {
    let reports = vec![suites::mcis_gadget(100, SEED)];
    assert_eq!(reports[0].checks.len(), 100);
    assert_criterion(
        7,
        "multicolored-IS gadget biconditional on 100 random instances (k <= 3, n <= 9)",
        None,
        &reports,
    );
}

#[test]
fn criterion_8_kernels() {
    let reports = vec![suites::kernel_preservation(200, SEED)];
    assert_eq!(reports[0].checks.len(), 600); // nd + vc + cover per trial
    assert_criterion(
        8,
        "kernel answer preservation, size bounds, and 2-approximation guarantees on 200 trials",
        None,
        &reports,
    );
}

#[test]
fn criterion_9_xp_agreement() {
    let reports = vec![suites::xp_agreement(30, SEED)];
    assert_eq!(reports[0].checks.len(), 120); // 30 trials x 4 convexities
    assert_criterion(
        9,
        "XP decision agrees with the exact optimizer on all kinds (n <= 8, every k)",
        None,
        &reports,
    );
}
