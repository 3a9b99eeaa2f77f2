//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. All comparisons are exact; the timed criteria assert their stated
//! wall-clock budgets.

use polybases::exec::ExecMode;
use polybases::verify::{run_check, CheckReport, VerifyOpts};
use std::time::Instant;

fn run(name: &str) -> CheckReport {
    run_check(name, &VerifyOpts::default(), ExecMode::Parallel).expect("known check")
}

fn run_group(criterion: &str, description: &str, checks: &[&str]) -> f64 {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    let mut cases = 0;
    for name in checks {
        let rep = run(name);
        cases += rep.cases;
        if !rep.passed() {
            failures.extend(rep.failures.iter().map(|f| format!("{name}: {f}")));
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("acceptance {criterion} ({description}): {status} [{cases} cases, {elapsed:.2}s]");
    assert!(failures.is_empty(), "{failures:#?}");
    elapsed
}

#[test]
fn criterion_1_golden_examples() {
    let elapsed = run_group(
        "1",
        "golden examples from the worked computations",
        &["golden-values", "crystal-b21"],
    );
    // budget: under a second per golden item; the whole set clears the
    // single-item budget at once
    assert!(elapsed < 1.0, "golden set took {elapsed:.2}s");
}

#[test]
fn criterion_2_multi_route_agreement() {
    let elapsed = run_group(
        "2",
        "five key routes and five Young key routes agree",
        &["key-routes", "ykey-routes"],
    );
    assert!(elapsed < 180.0, "route suite took {elapsed:.2}s");
}

#[test]
fn criterion_3_duality() {
    run_group(
        "3",
        "Young families are variable-reversed reverse families",
        &["duality"],
    );
}

#[test]
fn criterion_4_expansion_positivity() {
    run_group(
        "4",
        "expansion arrows nonnegative; key into atoms matches the membership order",
        &["expansion-positivity", "key-equals-atom-sum"],
    );
}

#[test]
fn criterion_5_coincidence_classifiers() {
    run_group(
        "5",
        "six classifiers agree with exhaustive polynomial cross-search",
        &[
            "yqs-qs",
            "key-ykey",
            "atom-yatom",
            "qk-yqk",
            "fp-yfp",
            "slide-intersections",
        ],
    );
}

#[test]
fn criterion_6_schubert_suite() {
    run_group(
        "6",
        "pipe dreams, operators, chirality, vexillary and cutoff identities over S4",
        &["schubert-s4", "vexillary", "rfyc-ysch", "rf-weights"],
    );
}

#[test]
fn criterion_7_module_suite() {
    let elapsed = run_group(
        "7",
        "Young key module: rank, weight vectors, and trace",
        &["module-suite"],
    );
    assert!(elapsed < 120.0, "module suite took {elapsed:.2}s");
}

#[test]
fn criterion_8_invariant_properties() {
    run_group(
        "8",
        "word, tableau, operator and crystal invariants",
        &[
            "lehmer-rev",
            "frev-perm",
            "wc-order",
            "key-tableau",
            "reverse-vars",
            "knuth-closure",
            "knuth-frev",
            "col-colr-knuth",
            "frev-col-key",
            "rightkey-leftkey",
            "monomial-positivity",
            "schur-refinement",
            "containment-chains",
            "theta-involution",
            "reversediff",
            "ipartial",
            "op-vs-fillings",
            "pi-word-independence",
            "fs-expansion-consistency",
            "maxcomp-dominance",
            "flag-compatible",
            "row-frank-frev",
            "crystal-axioms",
            "demazure-full",
            "demazure-characters",
            "delta-expansion",
        ],
    );
}
