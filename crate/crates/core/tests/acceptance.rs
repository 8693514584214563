//! Acceptance run: one line per criterion, then a summary.
//!
//! Criteria 1 to 9 are the verification claims; criterion 10 compares the
//! serialized report from a one-worker pool with the one from a four-worker
//! pool. All comparisons are exact; the ratio bound of criterion 8 is
//! computed inside the claim. A criterion listed in `KNOWN_UNATTAINABLE`
//! still prints FAIL but does not fail the process.

use std::time::{Duration, Instant};

use rainsat_core::verify::{
    claim_budget, run_claim, verify, ClaimReport, Report, VerifyConfig, REPORT_SCHEMA,
};

const THREADS_A: usize = 1;
const THREADS_B: usize = 4;

struct Criterion {
    number: usize,
    name: &'static str,
    claim: Option<&'static str>,
}

impl Criterion {
    fn budget(&self) -> Duration {
        let secs = match self.claim {
            Some(id) => claim_budget(id).expect("known claim"),
            None => DETERMINISM_BUDGET_SECS,
        };
        Duration::from_secs(secs)
    }
}

const DETERMINISM_BUDGET_SECS: u64 = 30 * 60;

const CRITERIA: [Criterion; 10] = [
    Criterion { number: 1, name: "EHM cross-check", claim: Some("ehm") },
    Criterion { number: 2, name: "classical formulas", claim: Some("classical") },
    Criterion { number: 3, name: "P3 equality", claim: Some("p3") },
    Criterion { number: 4, name: "wheel upper bound", claim: Some("c4-wheel") },
    Criterion { number: 5, name: "C4 degree-1 bound", claim: Some("c4-structure") },
    Criterion { number: 6, name: "P4 construction", claim: Some("p4") },
    Criterion { number: 7, name: "K4 ratio spot check", claim: Some("k4-ratio") },
    Criterion { number: 8, name: "family ladder", claim: Some("ladder") },
    Criterion { number: 9, name: "engine/oracle equivalence", claim: Some("oracle") },
    Criterion { number: 10, name: "determinism across thread counts", claim: None },
];

/// `(criterion, check label, reason)`. The closed form for `sat(n, C4)` is
/// stated for n >= 5; at n = 4 the paw (4 edges) is the minimum and no
/// 3-edge graph on 4 vertices is C4-saturated.
const KNOWN_UNATTAINABLE: [(usize, &str, &str); 1] = [(
    2,
    "sat(4, C4)",
    "sat(4, C4) = 4 by exhaustive search; the closed form gives 3",
)];

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

fn failing_labels(report: &ClaimReport) -> Vec<String> {
    report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.label.clone())
        .collect()
}

fn main() {
    let config = VerifyConfig::default();
    let mut claims = Vec::new();
    let mut unexpected = 0usize;
    let mut lines = Vec::new();

    for crit in &CRITERIA {
        let start = Instant::now();
        let (passed, detail) = match crit.claim {
            Some(id) => {
                let report = pool(THREADS_B).install(|| run_claim(id, &config).expect("known claim"));
                let fails = failing_labels(&report);
                let detail = report
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| format!("{}: expected {} observed {}", c.label, c.expected, c.observed))
                    .collect::<Vec<_>>()
                    .join("; ");
                let passed = report.passed;
                claims.push(report);
                if !passed {
                    let known = fails.iter().all(|label| {
                        KNOWN_UNATTAINABLE
                            .iter()
                            .any(|(n, l, _)| *n == crit.number && l == label)
                    });
                    if !known {
                        unexpected += 1;
                    }
                }
                (passed, detail)
            }
            None => {
                let many = Report {
                    schema: REPORT_SCHEMA,
                    seed: config.seed,
                    passed: claims.iter().all(|c| c.passed),
                    claims: claims.clone(),
                };
                let one = pool(THREADS_A).install(|| verify(None, &config).expect("all claims"));
                let a = serde_json::to_string(&one.to_json()).expect("serialize");
                let b = serde_json::to_string(&many.to_json()).expect("serialize");
                let same = a == b;
                if !same {
                    unexpected += 1;
                }
                (
                    same,
                    format!("{} bytes, {THREADS_A} vs {THREADS_B} workers", a.len()),
                )
            }
        };
        let elapsed = start.elapsed();
        let in_budget = elapsed <= crit.budget();
        if !in_budget {
            unexpected += 1;
        }
        let verdict = if passed && in_budget { "PASS" } else { "FAIL" };
        let mut line = format!(
            "[PRIMARY] criterion {:>2} {:<34} {verdict} ({:.1}s, budget {}s)",
            crit.number,
            crit.name,
            elapsed.as_secs_f64(),
            crit.budget().as_secs()
        );
        if !passed {
            line.push_str(&format!("\n    {detail}"));
            for (n, _, reason) in KNOWN_UNATTAINABLE.iter().filter(|(n, _, _)| *n == crit.number) {
                line.push_str(&format!("\n    known unattainable (criterion {n}): {reason}"));
            }
        } else if crit.claim.is_none() {
            line.push_str(&format!("\n    {detail}"));
        }
        println!("{line}");
        lines.push(verdict);
    }

    let passed = lines.iter().filter(|v| **v == "PASS").count();
    println!(
        "acceptance: {passed}/{} criteria pass; {unexpected} unexpected failure(s)",
        CRITERIA.len()
    );
    if unexpected > 0 {
        std::process::exit(1);
    }
}
