//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Run with
//! `cargo test -p tubecat --test acceptance -- --nocapture`.
//!
//! Every expected value is exact; runtime budgets are asserted where the
//! criterion states one.

use std::process::Command;
use std::time::{Duration, Instant};

use tubecat_core::checks::{
    check_doubling, check_line_case, check_oracle_agreement, check_rotation_invariance,
    check_route_agreement, check_shift_invariance, check_sign_additivity, check_swap_antisymmetry,
    CheckOutcome,
};
use tubecat_core::intersect::crossing_numbers;
use tubecat_core::quiver::window;
use tubecat_core::AnnulusArc;

fn finish(name: &str, started: Instant, budget: Duration, ok: bool, detail: String) {
    let elapsed = started.elapsed();
    let in_budget = elapsed <= budget;
    let status = if ok && in_budget { "PASS" } else { "FAIL" };
    println!(
        "acceptance {name}: {status} ({elapsed:?} elapsed, budget {budget:?}){}",
        if ok {
            String::new()
        } else {
            format!(" [{detail}]")
        }
    );
    assert!(ok, "{name}: {detail}");
    assert!(
        in_budget,
        "{name}: runtime {elapsed:?} exceeded the budget {budget:?}"
    );
}

fn outcome_ok(outcome: &CheckOutcome, expected_cases: u64) -> (bool, String) {
    if !outcome.passed() {
        return (
            false,
            format!(
                "{} failed: {}",
                outcome.name,
                outcome.failures.first().cloned().unwrap_or_default()
            ),
        );
    }
    if outcome.cases != expected_cases {
        return (
            false,
            format!(
                "{} covered {} cases, expected {expected_cases}",
                outcome.name, outcome.cases
            ),
        );
    }
    (true, String::new())
}

fn tubecat(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_tubecat"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn json_of(args: &[&str]) -> serde_json::Value {
    let out = tubecat(args);
    assert!(out.status.success(), "command {args:?} failed");
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn plain_of(args: &[&str]) -> String {
    let out = tubecat(args);
    assert!(out.status.success(), "command {args:?} failed");
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

/// The anchor pair at rank 4: crossing numbers (3, 4, 7) and the matching
/// extension dimensions, through the CLI, in under a second.
#[test]
fn criterion_1_anchor_pair() {
    let started = Instant::now();
    let command_start = Instant::now();
    let value = json_of(&[
        "intersect",
        "--n",
        "4",
        "--arc",
        "0,26",
        "--arc",
        "3,17",
        "--json",
    ]);
    let command_elapsed = command_start.elapsed();
    let mut ok = value["pos"] == 3 && value["neg"] == 4 && value["total"] == 7;
    let mut detail = format!("intersect returned {value}");
    if ok && command_elapsed > Duration::from_secs(1) {
        ok = false;
        detail = format!("intersect took {command_elapsed:?}");
    }
    if ok {
        let ext = plain_of(&["ext", "--n", "4", "--mod", "0,26", "--mod", "3,17"]);
        let ext_swapped = plain_of(&["ext", "--n", "4", "--mod", "3,17", "--mod", "0,26"]);
        let cluster = plain_of(&[
            "ext",
            "--n",
            "4",
            "--mod",
            "0,26",
            "--mod",
            "3,17",
            "--cluster",
        ]);
        ok = ext == "4" && ext_swapped == "3" && cluster == "7";
        detail = format!("ext {ext}, swapped {ext_swapped}, cluster {cluster}");
    }
    finish(
        "criterion 1 (anchor pair)",
        started,
        Duration::from_secs(5),
        ok,
        detail,
    );
}

/// Loop-power table: arcs pi_n[0, rn] for n <= 4 and r, s <= 6 have
/// crossing numbers (min(r,s)-1, min(r,s)-1, 2 min(r,s)-2). The cell
/// n = 1, r = 1 names the boundary loop, which is not an admissible arc,
/// so it is vacuous.
#[test]
fn criterion_2_loop_power_table() {
    let started = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    let mut checked = 0;
    let mut skipped = 0;
    for n in 1..=4i64 {
        for r in 1..=6i64 {
            for s in 1..=6i64 {
                let (Ok(alpha), Ok(beta)) =
                    (AnnulusArc::new(n, 0, r * n), AnnulusArc::new(n, 0, s * n))
                else {
                    skipped += 1;
                    continue;
                };
                let report = crossing_numbers(alpha, beta).unwrap();
                let m = (r.min(s) - 1) as usize;
                checked += 1;
                if report.counts() != (m, m, 2 * m) {
                    ok = false;
                    detail = format!(
                        "n={n}, r={r}, s={s}: got {:?}, expected ({m}, {m}, {})",
                        report.counts(),
                        2 * m
                    );
                }
            }
        }
    }
    // Only the eleven rank-one cells touching the boundary loop are skipped.
    if ok && (skipped != 11 || checked != 4 * 36 - 11) {
        ok = false;
        detail = format!("checked {checked}, skipped {skipped}");
    }
    finish(
        "criterion 2 (loop-power table)",
        started,
        Duration::from_secs(5),
        ok,
        detail,
    );
}

/// Geometric extension dimensions agree exactly with the translate
/// duality and the Euler form, and the Hom counting formula with the
/// intertwiner solver, on all 17920 ordered pairs with n <= 6 and
/// length <= 3n.
#[test]
fn criterion_3_oracle_equivalence() {
    let started = Instant::now();
    let plan: Vec<(i64, i64)> = (1..=6).map(|n| (n, 3 * n)).collect();
    let outcome = check_oracle_agreement(&plan);
    let (ok, detail) = outcome_ok(&outcome, 17920);
    finish(
        "criterion 3 (oracle equivalence)",
        started,
        Duration::from_secs(120),
        ok,
        detail,
    );
}

/// The geometric crossing count of the piecewise-linear representatives
/// matches the closed form componentwise on the same sweep.
#[test]
fn criterion_4_route_agreement() {
    let started = Instant::now();
    let plan: Vec<(i64, i64)> = (1..=6).map(|n| (n, 3 * n)).collect();
    let outcome = check_route_agreement(&plan);
    let (ok, detail) = outcome_ok(&outcome, 17920);
    finish(
        "criterion 4 (route agreement)",
        started,
        Duration::from_secs(120),
        ok,
        detail,
    );
}

/// Crossing numbers double under the double-cover preimage, exactly,
/// for n <= 4 and length <= 3n.
#[test]
fn criterion_5_doubling() {
    let started = Instant::now();
    let plan: Vec<(i64, i64)> = (1..=4).map(|n| (n, 3 * n)).collect();
    let outcome = check_doubling(&plan);
    let (ok, detail) = outcome_ok(&outcome, 2616);
    finish(
        "criterion 5 (doubling)",
        started,
        Duration::from_secs(60),
        ok,
        detail,
    );
}

/// The rank-5 window of length at most 6 has the documented shape:
/// bottom-row out-degree 1, interior out-degree 2, translate shifting the
/// start by -1 mod 5, and the stable translation condition inside.
#[test]
fn criterion_6_quiver_fidelity() {
    let started = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    let q = window(5, 6).unwrap();
    if q.vertices.len() != 25 {
        ok = false;
        detail = format!("expected 25 vertices, got {}", q.vertices.len());
    }
    for (i, &v) in q.vertices.iter().enumerate() {
        let degree = q.successors(i).len();
        let expected = match v.len() {
            2 => 1,
            3..=5 => 2,
            _ => 1, // top boundary row of the window
        };
        if degree != expected {
            ok = false;
            detail = format!("out-degree of {v} is {degree}, expected {expected}");
        }
        let t = q.tau[i].unwrap();
        let want = AnnulusArc::new(5, v.start() - 1, v.len()).unwrap();
        if q.vertices[t] != want {
            ok = false;
            detail = format!("translate of {v} is {}, expected {want}", q.vertices[t]);
        }
    }
    let defects = q.mesh_defects(|v| v.len() < 6);
    if !defects.is_empty() {
        ok = false;
        detail = format!("mesh condition fails at {}", q.vertices[defects[0]]);
    }
    finish(
        "criterion 6 (quiver fidelity)",
        started,
        Duration::from_secs(1),
        ok,
        detail,
    );
}

/// Over the infinite line, the strip crossing predicates equal the
/// line-quiver oracle for all arcs with endpoints in [-8, 8], with values
/// in {0,1} (module side) and {0,1,2} (cluster side).
#[test]
fn criterion_7_infinite_line() {
    let started = Instant::now();
    let outcome = check_line_case(-8, 8);
    let (ok, detail) = outcome_ok(&outcome, 14400);
    finish(
        "criterion 7 (infinite line)",
        started,
        Duration::from_secs(30),
        ok,
        detail,
    );
}

/// Structural properties hold on the full sweep (sign additivity, swap
/// antisymmetry, rotation and shift invariance) and the bundled `check`
/// command exits 0.
#[test]
fn criterion_8_property_suite() {
    let started = Instant::now();
    let plan: Vec<(i64, i64)> = (1..=6).map(|n| (n, 3 * n)).collect();
    let mut ok = true;
    let mut detail = String::new();
    for outcome in [
        check_sign_additivity(&plan),
        check_swap_antisymmetry(&plan),
        check_rotation_invariance(&plan),
        check_shift_invariance(&plan),
    ] {
        if !outcome.passed() {
            ok = false;
            detail = format!(
                "{} failed: {}",
                outcome.name,
                outcome.failures.first().cloned().unwrap_or_default()
            );
        }
    }
    if ok {
        let out = tubecat(&["check", "--n-max", "6", "--len-max", "18"]);
        if out.status.code() != Some(0) {
            ok = false;
            detail = format!(
                "check exited {:?}: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stdout)
            );
        }
    }
    finish(
        "criterion 8 (property suite)",
        started,
        Duration::from_secs(300),
        ok,
        detail,
    );
}
