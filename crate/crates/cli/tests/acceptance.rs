//! Acceptance suite: every criterion runs at its stated tolerance and
//! prints one pass/fail line (visible with `--nocapture`).
//!
//! Criteria 1-10 are the computational checks from `lab_core::verify`,
//! asserted here together with their wall-clock budgets. Criterion 11
//! drives the installed `lab` binary itself.

use std::process::Command;
use std::time::Instant;

use lab_core::verify::{self, CriterionResult, VerifyConfig};

fn report(result: &CriterionResult) {
    println!(
        "criterion {:>2} ({}): {}",
        result.index,
        result.name,
        if result.passed { "PASS" } else { "FAIL" }
    );
    for a in &result.assertions {
        if !a.pass {
            println!(
                "    failed: {} : {} {} {}",
                a.label,
                a.lhs,
                a.relation.symbol(),
                a.rhs
            );
        }
    }
}

fn assert_criterion(result: &CriterionResult) {
    report(result);
    assert!(
        result.passed,
        "criterion {} ({}) failed; see the printed assertions",
        result.index, result.name
    );
}

#[test]
fn criterion_01_iterate_law() {
    let start = Instant::now();
    let result = verify::criterion_1(&VerifyConfig::default());
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "iterate-law runtime {elapsed:?} exceeds 5 s"
    );
    assert_criterion(&result);
}

#[test]
fn criterion_02_self_map_and_fixed_point() {
    assert_criterion(&verify::criterion_2(&VerifyConfig::default()));
}

#[test]
fn criterion_03_certified_product() {
    assert_criterion(&verify::criterion_3(&VerifyConfig::default()));
}

// The observed embedding-identity error decays like (k+1)/2^k, whose
// per-step ratio 2(k+1)/(k+2) stays below 1.8 until k = 8 and averages
// about 1.74 over k = 4..10. The 1.8-per-step threshold asserted here is
// therefore not attainable by this construction at this k range; the
// check is kept at its stated value so the gap stays visible rather than
// being tuned away.
#[test]
fn criterion_04_embedding_identity_rate() {
    assert_criterion(&verify::criterion_4(&VerifyConfig::default()));
}

#[test]
fn criterion_05_cluster_sets() {
    assert_criterion(&verify::criterion_5(&VerifyConfig::default()));
}

#[test]
fn criterion_06_outer_functions() {
    assert_criterion(&verify::criterion_6(&VerifyConfig::default()));
}

#[test]
fn criterion_07_harnack_bracket_oracle() {
    let start = Instant::now();
    let result = verify::criterion_7(&VerifyConfig::default());
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "harnack-bracket runtime {elapsed:?} exceeds 30 s"
    );
    assert_criterion(&result);
}

#[test]
fn criterion_08_part_metric_axioms() {
    assert_criterion(&verify::criterion_8(&VerifyConfig::default()));
}

#[test]
fn criterion_09_representing_measures() {
    assert_criterion(&verify::criterion_9(&VerifyConfig::default()));
}

#[test]
fn criterion_10_part_dichotomy() {
    assert_criterion(&verify::criterion_10(&VerifyConfig::default()));
}

// Exit code 0 requires every verify assertion to pass; the known-failing
// decay-rate check of criterion 4 therefore also fails this criterion's
// first clause. Byte determinism is asserted unconditionally.
#[test]
fn criterion_11_determinism_and_interface() {
    let bin = env!("CARGO_BIN_EXE_lab");
    let run = || {
        Command::new(bin)
            .args(["verify", "--format", "json"])
            .output()
            .expect("the lab binary runs")
    };
    let first = run();
    let second = run();

    let identical = first.stdout == second.stdout;
    println!(
        "criterion 11 (determinism-and-interface): {}",
        if identical && first.status.code() == Some(0) {
            "PASS"
        } else {
            "FAIL"
        }
    );
    assert!(
        identical,
        "two `lab verify` runs produced different JSON bytes"
    );
    assert!(!first.stdout.is_empty(), "verify must emit a JSON report");
    assert_eq!(
        first.status.code(),
        Some(0),
        "`lab verify` with the default config must exit 0"
    );
}
