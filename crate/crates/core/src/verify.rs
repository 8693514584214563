//! Desk-scale checks of the saturation results, reported as JSON.
//!
//! Each claim runs a fixed list of checks and records expected and observed
//! values. Reports contain no timings, so two runs with different worker
//! counts serialize identically.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{
    build_family_ladder, ehm_graph, gadget, ladder_construction_with, p4_construction,
    wheel_construction, GadgetKind, IndependentSetSize,
};
use crate::graph::{are_isomorphic, graph6_encode, wheel, Graph};
use crate::rainbow::{
    contains_copy, find_rainbow_embedding, rainbow_free_colorable, Colorability, Pattern,
    SearchLimits,
};
use crate::reference::{naive_check_coloring, naive_colorable};
use crate::saturation::{
    enumerate_nonisomorphic_graphs, is_rainbow_saturated, sat_exact, sat_formula_oracle,
    sat_star_exact, structural_property_checks, SatFormula, SaturationError, SaturationStatus,
};

pub const REPORT_SCHEMA: &str = "rainsat.verify/1";

/// Claim ids in execution order.
pub const CLAIM_IDS: [&str; 9] = [
    "ehm",
    "classical",
    "p3",
    "c4-wheel",
    "c4-structure",
    "p4",
    "k4-ratio",
    "ladder",
    "oracle",
];

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub limits: SearchLimits,
    /// Seed for the random instances of the oracle claim.
    pub seed: u64,
    pub oracle_instances: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            limits: SearchLimits::unlimited(),
            seed: DEFAULT_SEED,
            oracle_instances: 500,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub label: String,
    pub expected: Value,
    pub observed: Value,
    pub passed: bool,
}

impl Check {
    fn eq(label: impl Into<String>, expected: impl Serialize, observed: impl Serialize) -> Self {
        let expected = json!(expected);
        let observed = json!(observed);
        Check {
            label: label.into(),
            passed: expected == observed,
            expected,
            observed,
        }
    }

    fn holds(label: impl Into<String>, expected: impl Serialize, observed: Value, ok: bool) -> Self {
        Check {
            label: label.into(),
            expected: json!(expected),
            observed,
            passed: ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub title: String,
    /// Wall-clock allowance for the whole claim. Informational; timing is
    /// never part of the report.
    pub budget_seconds: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub seed: u64,
    pub passed: bool,
    pub claims: Vec<ClaimReport>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!(self)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown claim {0}; known claims: {known}", known = CLAIM_IDS.join(", "))]
    UnknownClaim(String),
}

type ClaimResult = Result<Vec<Check>, Failure>;

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Resolves alternative spellings of claim ids.
pub fn canonical_claim_id(id: &str) -> Option<&'static str> {
    let id = match id {
        "p3-footnote" => "p3",
        other => other,
    };
    CLAIM_IDS.iter().copied().find(|&c| c == id)
}

pub fn claim_title(id: &str) -> Option<&'static str> {
    Some(match canonical_claim_id(id)? {
        "ehm" => "sat(n, K_r) closed form and unique extremal graph, 3 <= r <= n <= 7",
        "classical" => "sat(n, P4) for n = 4..8 and sat(n, C4) for n = 4..7 closed forms",
        "p3" => "sat*(n, P3) = sat(n, P3) for n = 3..7",
        "c4-wheel" => "colored wheel is rainbow C4-saturated; gadgets cover every added edge",
        "c4-structure" => "rainbow C4-saturated graphs on 5..7 vertices: degree-1 count and sat* range",
        "p4" => "K4/K_{1,4} construction is rainbow P4-saturated; component gadgets",
        "k4-ratio" => "sat*(n, K4) > 5/4 sat(n, K4) and the low-degree pair audit",
        "ladder" => "family ladders for K3, K4 and linear-size ladder constructions",
        "oracle" => "search engine agrees with the brute-force oracle",
        _ => return None,
    })
}

/// Wall-clock allowance for a claim, in seconds.
pub fn claim_budget(id: &str) -> Option<u64> {
    Some(match canonical_claim_id(id)? {
        "ehm" | "p3" => 5 * 60,
        "classical" => 10 * 60,
        "c4-wheel" | "p4" | "k4-ratio" | "oracle" => 30 * 60,
        "c4-structure" | "ladder" => 60 * 60,
        _ => return None,
    })
}

pub fn run_claim(id: &str, config: &VerifyConfig) -> Result<ClaimReport, VerifyError> {
    let id = canonical_claim_id(id).ok_or_else(|| VerifyError::UnknownClaim(id.to_string()))?;
    let title = claim_title(id).expect("canonical ids have titles");
    let result = match id {
        "ehm" => ehm(),
        "classical" => classical(),
        "p3" => p3(config),
        "c4-wheel" => c4_wheel(config),
        "c4-structure" => c4_structure(config),
        "p4" => p4(config),
        "k4-ratio" => k4_ratio(config),
        "ladder" => ladder(config),
        "oracle" => oracle(config),
        _ => unreachable!("title lookup covers every id"),
    };
    let checks = match result {
        Ok(checks) => checks,
        Err(Failure(msg)) => vec![Check::holds("completed", true, json!(msg), false)],
    };
    Ok(ClaimReport {
        id: id.to_string(),
        title: title.to_string(),
        budget_seconds: claim_budget(id).expect("canonical ids have budgets"),
        passed: !checks.is_empty() && checks.iter().all(|c| c.passed),
        checks,
    })
}

/// Runs the listed claims, or all of them, in [`CLAIM_IDS`] order.
pub fn verify(only: Option<&[String]>, config: &VerifyConfig) -> Result<Report, VerifyError> {
    let ids: Vec<&str> = match only {
        None => CLAIM_IDS.to_vec(),
        Some(list) => {
            let wanted = list
                .iter()
                .map(|id| {
                    canonical_claim_id(id).ok_or_else(|| VerifyError::UnknownClaim(id.clone()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            CLAIM_IDS
                .iter()
                .copied()
                .filter(|id| wanted.contains(id))
                .collect()
        }
    };
    let claims = ids
        .into_iter()
        .map(|id| run_claim(id, config))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report {
        schema: REPORT_SCHEMA,
        seed: config.seed,
        passed: claims.iter().all(|c| c.passed),
        claims,
    })
}

fn pattern(name: &str) -> Result<Pattern, Failure> {
    Ok(Pattern::parse(name)?)
}

fn status_name(s: SaturationStatus) -> &'static str {
    match s {
        SaturationStatus::Saturated => "SATURATED",
        SaturationStatus::NotSaturated => "NOT_SATURATED",
        SaturationStatus::Indeterminate => "INDETERMINATE",
    }
}

fn colorability_name(c: &Colorability) -> &'static str {
    match c {
        Colorability::Colorable(_) => "COLORABLE",
        Colorability::Uncolorable => "UNCOLORABLE",
        Colorability::Indeterminate => "INDETERMINATE",
    }
}

fn ehm() -> ClaimResult {
    let mut checks = Vec::new();
    for r in 3..=7 {
        let h = pattern(&format!("K{r}"))?;
        for n in r..=7 {
            let res = sat_exact(n, &h)?;
            let formula = sat_formula_oracle(SatFormula::Ehm { r }, n)?;
            let extremal = ehm_graph(n, r)?;
            let unique = res.witnesses.len() == 1 && are_isomorphic(&res.witnesses[0], &extremal);
            checks.push(Check::eq(
                format!("n={n} r={r}"),
                json!({"value": formula, "unique_witness": graph6_encode(&extremal)}),
                json!({
                    "value": res.value,
                    "unique_witness": if unique {
                        Value::String(graph6_encode(&extremal))
                    } else {
                        json!(res.witnesses.iter().map(graph6_encode).collect::<Vec<_>>())
                    },
                }),
            ));
        }
    }
    Ok(checks)
}

fn classical() -> ClaimResult {
    let mut checks = Vec::new();
    let p4 = pattern("P4")?;
    for n in 4..=8 {
        let res = sat_exact(n, &p4)?;
        let formula = sat_formula_oracle(SatFormula::KtP4, n)?;
        checks.push(Check::eq(format!("sat({n}, P4)"), Some(formula), res.value));
    }
    let c4 = pattern("C4")?;
    for n in 4..=7 {
        let res = sat_exact(n, &c4)?;
        let formula = sat_formula_oracle(SatFormula::C4, n)?;
        checks.push(Check::eq(format!("sat({n}, C4)"), Some(formula), res.value));
    }
    Ok(checks)
}

fn p3(config: &VerifyConfig) -> ClaimResult {
    let h = pattern("P3")?;
    let mut checks = Vec::new();
    for n in 3..=7 {
        let classical = sat_exact(n, &h)?;
        let rainbow = sat_star_exact(n, std::slice::from_ref(&h), &config.limits)?;
        checks.push(Check::eq(
            format!("sat*({n}, P3) = sat({n}, P3)"),
            classical.value,
            rainbow.value,
        ));
    }
    Ok(checks)
}

fn c4_wheel(config: &VerifyConfig) -> ClaimResult {
    let c4 = pattern("C4")?;
    let fam = [c4.clone()];
    let mut checks = Vec::new();
    for n in 6..=9 {
        let cg = wheel_construction(n)?;
        let rainbow = find_rainbow_embedding(&cg.graph, &cg.coloring, &c4)?;
        let verdict = is_rainbow_saturated(&cg.graph, &fam, &config.limits)?;
        checks.push(Check::eq(
            format!("W{n}"),
            json!({"edges": 2 * (n - 1), "rainbow_c4": false, "verdict": "SATURATED"}),
            json!({
                "edges": cg.graph.edge_count(),
                "rainbow_c4": rainbow.is_some(),
                "verdict": status_name(verdict.status),
            }),
        ));
    }
    let ga = gadget(GadgetKind::GA);
    let gb = gadget(GadgetKind::GB);
    for g in [&ga, &gb] {
        let r = rainbow_free_colorable(&g.graph, &fam, &config.limits)?;
        checks.push(Check::eq(
            format!("{} with C4", g.kind),
            "UNCOLORABLE",
            colorability_name(&r.outcome),
        ));
    }
    let (pa, pb) = (Pattern::new(ga.graph.clone()), Pattern::new(gb.graph.clone()));
    for n in 10..=14 {
        let w = wheel(n)?;
        let cg = wheel_construction(n)?;
        let rainbow = find_rainbow_embedding(&cg.graph, &cg.coloring, &c4)?;
        let uncovered: Vec<(usize, usize)> = w
            .non_edges()
            .into_iter()
            .filter(|&(u, v)| {
                let h = w.with_edge(u, v);
                !contains_copy(&h, &pa) && !contains_copy(&h, &pb)
            })
            .collect();
        checks.push(Check::eq(
            format!("W{n}"),
            json!({"edges": 2 * (n - 1), "rainbow_c4": false, "uncovered_non_edges": []}),
            json!({
                "edges": cg.graph.edge_count(),
                "rainbow_c4": rainbow.is_some(),
                "uncovered_non_edges": uncovered,
            }),
        ));
    }
    Ok(checks)
}

fn saturated_graphs(
    n: usize,
    fam: &[Pattern],
    limits: &SearchLimits,
) -> Result<Vec<Graph>, Failure> {
    let mut out = Vec::new();
    for g in enumerate_nonisomorphic_graphs(n, usize::MAX)? {
        let v = is_rainbow_saturated(&g, fam, limits)?;
        match v.status {
            SaturationStatus::Saturated => out.push(g),
            SaturationStatus::NotSaturated => {}
            SaturationStatus::Indeterminate => {
                return Err(SaturationError::Indeterminate {
                    graph6: graph6_encode(&g),
                }
                .into())
            }
        }
    }
    Ok(out)
}

fn c4_structure(config: &VerifyConfig) -> ClaimResult {
    let fam = [pattern("C4")?];
    let mut checks = Vec::new();
    for n in 5..=7 {
        let sat = saturated_graphs(n, &fam, &config.limits)?;
        let worst = sat
            .iter()
            .map(|g| structural_property_checks(g, 4).degree_one_vertices)
            .max()
            .unwrap_or(0);
        checks.push(Check::holds(
            format!("n={n} max degree-1 vertices"),
            "<= 1",
            json!({"saturated_graphs": sat.len(), "max_degree_one": worst}),
            worst <= 1,
        ));
        let value = sat.iter().map(Graph::edge_count).min();
        let ok = value.is_some_and(|v| (n - 2..=2 * n - 2).contains(&v));
        checks.push(Check::holds(
            format!("sat*({n}, C4) range"),
            format!("[{}, {}]", n - 2, 2 * n - 2),
            json!(value),
            ok,
        ));
    }
    Ok(checks)
}

fn p4(config: &VerifyConfig) -> ClaimResult {
    let p4 = pattern("P4")?;
    let fam = [p4.clone()];
    let mut checks = Vec::new();
    for n in 16..=18 {
        let cg = p4_construction(n)?;
        let a = (5 - n % 5) % 5;
        let verdict = is_rainbow_saturated(&cg.graph, &fam, &config.limits)?;
        checks.push(Check::eq(
            format!("n={n}"),
            json!({"edges": (4 * n + 14 * a) / 5, "verdict": "SATURATED"}),
            json!({"edges": cg.graph.edge_count(), "verdict": status_name(verdict.status)}),
        ));
    }
    for kind in [
        GadgetKind::StarChord,
        GadgetKind::StarPendant,
        GadgetKind::Triangle,
        GadgetKind::ClawChord,
        GadgetKind::Square,
    ] {
        let g = gadget(kind);
        let r = rainbow_free_colorable(&g.graph, &fam, &config.limits)?;
        let expected = if kind.forces_rainbow() {
            "UNCOLORABLE"
        } else {
            "COLORABLE"
        };
        checks.push(Check::eq(kind.name(), expected, colorability_name(&r.outcome)));
    }
    Ok(checks)
}

fn k4_ratio(config: &VerifyConfig) -> ClaimResult {
    let k4 = pattern("K4")?;
    let fam = [k4.clone()];
    let mut checks = Vec::new();
    for n in 5..=6 {
        let star = sat_star_exact(n, &fam, &config.limits)?;
        let classical = sat_exact(n, &k4)?;
        let (Some(s), Some(c)) = (star.value, classical.value) else {
            return Err(Failure(format!("no saturated graph on {n} vertices")));
        };
        checks.push(Check::holds(
            format!("n={n}: 4 sat* > 5 sat"),
            "strict",
            json!({"sat_star": s, "sat": c}),
            4 * s > 5 * c,
        ));
    }
    for n in 4..=6 {
        let sat = saturated_graphs(n, &fam, &config.limits)?;
        let pairs: usize = sat
            .iter()
            .map(|g| structural_property_checks(g, 4).low_degree_nonadjacent_pairs.len())
            .sum();
        checks.push(Check::eq(
            format!("n={n} nonadjacent degree-2 pairs"),
            json!({"pairs": 0}),
            json!({"pairs": pairs}),
        ));
    }
    Ok(checks)
}

fn ladder(config: &VerifyConfig) -> ClaimResult {
    let mut checks = Vec::new();
    for (name, expected) in [("K3", vec!["K3", "K2"]), ("K4", vec!["K4", "K3", "K2"])] {
        let l = build_family_ladder(&pattern(name)?)?;
        let expected: Vec<Vec<String>> = expected
            .iter()
            .map(|p| Ok(vec![graph6_encode(&canonical(pattern(p)?.graph()))]))
            .collect::<Result<_, Failure>>()?;
        let observed: Vec<Vec<String>> = l
            .levels
            .iter()
            .map(|lv| lv.iter().map(graph6_encode).collect())
            .collect();
        checks.push(Check::eq(format!("{name} ladder levels"), expected, observed));
    }
    let runs: [(&str, IndependentSetSize, std::ops::RangeInclusive<usize>); 3] = [
        ("K3", IndependentSetSize::Order, 4..=9),
        ("K3", IndependentSetSize::Cubic, 31..=36),
        ("K4", IndependentSetSize::Order, 8..=14),
    ];
    for (name, policy, range) in runs {
        let h = pattern(name)?;
        let fam = [h.clone()];
        let mut verdicts = Vec::new();
        let mut worst_ratio = 0.0f64;
        let mut bound = 0.0f64;
        for n in range.clone() {
            let c = ladder_construction_with(&h, n, policy, &config.limits)?;
            let v = is_rainbow_saturated(&c.graph, &fam, &config.limits)?;
            verdicts.push(status_name(v.status));
            worst_ratio = worst_ratio.max(c.graph.edge_count() as f64 / n as f64);
            bound = c.trace.independent_set_sizes.iter().sum::<usize>() as f64 + 1.0;
        }
        let label = format!("{name} |I|={} n={}..{}", policy.label(), range.start(), range.end());
        checks.push(Check::eq(
            format!("{label} verdicts"),
            vec!["SATURATED"; verdicts.len()],
            verdicts,
        ));
        checks.push(Check::holds(
            format!("{label} max |E|/n"),
            format!("<= {bound}"),
            json!(format!("{worst_ratio:.4}")),
            worst_ratio <= bound,
        ));
    }
    Ok(checks)
}

fn canonical(g: &Graph) -> Graph {
    crate::graph::canonical_form(g).representative(g)
}

/// Random graph with at most `max_edges` edges on 2..=8 vertices.
fn random_small_graph(rng: &mut ChaCha8Rng, max_edges: usize) -> Graph {
    let n = rng.gen_range(2..=8usize);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = rng.gen_range(0..=max_edges.min(pairs.len()));
    let edges: Vec<(usize, usize)> = sample(rng, pairs.len(), m)
        .into_iter()
        .map(|i| pairs[i])
        .collect();
    Graph::from_edges(n, &edges).expect("valid random edges")
}

fn oracle(config: &VerifyConfig) -> ClaimResult {
    let names = ["P3", "P4", "C4", "K3", "K4"];
    let pats: Vec<Pattern> = names.iter().map(|n| pattern(n)).collect::<Result<_, _>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut hosts: Vec<Graph> = (0..config.oracle_instances)
        .map(|_| random_small_graph(&mut rng, 8))
        .collect();
    hosts.extend(GadgetKind::ALL.iter().map(|&k| gadget(k).graph));
    let mut checks = Vec::new();
    for p in &pats {
        let fam = std::slice::from_ref(p);
        let raw = [p.graph().clone()];
        let mut agree = 0usize;
        let mut uncolorable = 0usize;
        let mut disagreements = Vec::new();
        for g in &hosts {
            let engine = rainbow_free_colorable(g, fam, &config.limits)?;
            let naive = naive_colorable(g, &raw);
            let ok = match &engine.outcome {
                Colorability::Colorable(w) => naive && naive_check_coloring(g, &raw, w),
                Colorability::Uncolorable => !naive,
                Colorability::Indeterminate => false,
            };
            if !naive {
                uncolorable += 1;
            }
            if ok {
                agree += 1;
            } else {
                disagreements.push(graph6_encode(g));
            }
        }
        checks.push(Check::holds(
            format!("{} on {} hosts", p.name(), hosts.len()),
            json!({"agree": hosts.len(), "disagreements": []}),
            json!({
                "agree": agree,
                "oracle_uncolorable": uncolorable,
                "disagreements": disagreements,
            }),
            disagreements.is_empty(),
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_claim_is_rejected() {
        let cfg = VerifyConfig::default();
        assert!(run_claim("nope", &cfg).is_err());
        assert!(verify(Some(&["nope".to_string()]), &cfg).is_err());
    }

    #[test]
    fn every_id_has_a_title() {
        for id in CLAIM_IDS {
            assert!(claim_title(id).is_some());
        }
    }

    #[test]
    fn aliases_resolve() {
        assert_eq!(canonical_claim_id("p3-footnote"), Some("p3"));
        let r = verify(Some(&["p3-footnote".to_string(), "p3".to_string()]), &VerifyConfig::default())
            .unwrap();
        assert_eq!(r.claims.len(), 1);
    }

    #[test]
    fn p3_claim_passes() {
        let r = run_claim("p3", &VerifyConfig::default()).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.checks.len(), 5);
    }

    #[test]
    fn random_hosts_are_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let g = random_small_graph(&mut rng, 8);
            assert!(g.edge_count() <= 8 && (2..=8).contains(&g.n()));
        }
    }
}
