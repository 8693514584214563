use std::io::Write;

use serde_json::{json, Value};

use rainsat_core::constructions::{
    ehm_graph, gadget, ladder_construction_with, p4_construction, wheel_construction,
    ColoredGraph, ConstructionError, GadgetKind, IndependentSetSize,
};
use rainsat_core::graph::{complete_graph, cycle, graph6_encode, path, Graph};
use rainsat_core::rainbow::{
    find_rainbow_embedding, rainbow_free_colorable, Colorability, Pattern, RainbowError,
    SearchLimits,
};
use rainsat_core::saturation::{
    greedy_saturate, is_classically_saturated, is_rainbow_saturated, sat_exact, sat_star_exact, EdgeOrder, SatNumberResult,
    SaturationError, SaturationStatus, SaturationVerdict,
};
use rainsat_core::verify::{verify, VerifyConfig, VerifyError, DEFAULT_SEED};

use crate::input::{parse_family, parse_graph, parse_pattern};
use crate::{
    Cli, Command, Construction, Policy, RunConfig, EXIT_INDETERMINATE, EXIT_NEGATIVE, JSON_SCHEMA,
};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Indeterminate(String),
    Internal(String),
}

impl From<String> for CliError {
    fn from(msg: String) -> Self {
        CliError::Usage(msg)
    }
}

impl From<RainbowError> for CliError {
    fn from(e: RainbowError) -> Self {
        match e {
            RainbowError::ColoringMismatch { .. } | RainbowError::ImproperColoring => {
                CliError::Internal(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<SaturationError> for CliError {
    fn from(e: SaturationError) -> Self {
        match e {
            SaturationError::Indeterminate { .. } => CliError::Indeterminate(e.to_string()),
            SaturationError::OutOfRange { .. }
            | SaturationError::Graph(_)
            | SaturationError::NotColorable { .. }
            | SaturationError::UnknownFormula(_) => CliError::Usage(e.to_string()),
            SaturationError::Rainbow(r) => r.into(),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Saturation(s) => s.into(),
            ConstructionError::Rainbow(r) => r.into(),
            ConstructionError::Graph(_)
            | ConstructionError::OutOfRange { .. }
            | ConstructionError::NotEvenCycleFree(_)
            | ConstructionError::UnknownGadget(_) => CliError::Usage(e.to_string()),
            ConstructionError::Invariant(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

type Outcome = Result<u8, CliError>;

/// Prints the JSON document or the text rendering. A closed stdout (for
/// example `| head`) is not an error.
fn emit(run: &RunConfig, command: &str, body: Value, text: impl FnOnce() -> String) {
    let out = if run.json {
        let mut doc = json!({ "schema": JSON_SCHEMA, "command": command });
        if let (Value::Object(doc), Value::Object(body)) = (&mut doc, body) {
            doc.extend(body);
        }
        serde_json::to_string_pretty(&doc).expect("JSON values serialize")
    } else {
        text()
    };
    let _ = writeln!(std::io::stdout().lock(), "{out}");
}

fn family_names(family: &[Pattern]) -> Vec<String> {
    family.iter().map(|p| p.name().to_string()).collect()
}

fn status_code(status: SaturationStatus) -> u8 {
    match status {
        SaturationStatus::Saturated => 0,
        SaturationStatus::NotSaturated => EXIT_NEGATIVE,
        SaturationStatus::Indeterminate => EXIT_INDETERMINATE,
    }
}

fn status_label(status: SaturationStatus) -> &'static str {
    match status {
        SaturationStatus::Saturated => "SATURATED",
        SaturationStatus::NotSaturated => "NOT_SATURATED",
        SaturationStatus::Indeterminate => "INDETERMINATE",
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let run = &cli.run;
    let limits = SearchLimits::with_timeout(run.timeout());
    match &cli.command {
        Command::Colorable { graph, patterns } => colorable(run, &limits, graph, patterns),
        Command::Check { graph, patterns } => check(run, &limits, graph, patterns),
        Command::Satstar { n, patterns } => {
            let family = parse_family(patterns)?;
            let result = sat_star_exact(*n, &family, &limits)?;
            report_sat_number(run, "satstar", "sat*", &family, &result)
        }
        Command::Sat { n, pattern } => {
            let h = parse_pattern(pattern)?;
            let result = sat_exact(*n, &h)?;
            report_sat_number(run, "sat", "sat", std::slice::from_ref(&h), &result)
        }
        Command::Greedy {
            graph,
            patterns,
            shuffle,
        } => greedy(run, &limits, graph, patterns, *shuffle),
        Command::Construct { kind } => construct(run, &limits, kind),
        Command::Gadget { kind } => show_gadget(run, &limits, kind),
        Command::VerifyPaper {
            only,
            oracle_instances,
        } => verify_claims(run, &limits, only.as_deref(), *oracle_instances),
    }
}

fn colorable(run: &RunConfig, limits: &SearchLimits, graph: &str, patterns: &[String]) -> Outcome {
    let g = parse_graph(graph)?;
    let family = parse_family(patterns)?;
    let result = rainbow_free_colorable(&g, &family, limits)?;
    let label = result.label();
    let witness = result.witness().map(|c| c.classes().to_vec());
    emit(
        run,
        "colorable",
        json!({
            "graph6": graph6_encode(&g),
            "family": family_names(&family),
            "outcome": label,
            "coloring": witness,
            "search_nodes": result.stats.nodes,
        }),
        || match &result.outcome {
            Colorability::Colorable(c) => format!(
                "{label}\n{}",
                c.to_text(&g).unwrap_or_else(|_| format!("{:?}", c.classes()))
            ),
            _ => label.to_string(),
        },
    );
    Ok(match result.outcome {
        Colorability::Colorable(_) => 0,
        Colorability::Uncolorable => EXIT_NEGATIVE,
        Colorability::Indeterminate => EXIT_INDETERMINATE,
    })
}

fn verdict_text(g: &Graph, v: &SaturationVerdict) -> String {
    let mut out = status_label(v.status).to_string();
    if let Some((u, w)) = v.failing_edge {
        out.push_str(&format!("\nfailing non-edge: {u}-{w}"));
        if let Some(c) = &v.failing_coloring {
            let plus = g.with_edge(u, w);
            if let Ok(text) = c.to_text(&plus) {
                out.push_str(&format!("\ncoloring of G + {u}{w}: {text}"));
            }
        }
    } else if v.witness_coloring.is_none() && v.status == SaturationStatus::NotSaturated {
        out.push_str("\nno rainbow-free coloring of G itself");
    }
    out
}

fn check(run: &RunConfig, limits: &SearchLimits, graph: &str, patterns: &[String]) -> Outcome {
    let g = parse_graph(graph)?;
    let family = parse_family(patterns)?;
    let v = is_rainbow_saturated(&g, &family, limits)?;
    let mut body = v.to_json();
    if let Value::Object(map) = &mut body {
        map.insert("graph6".into(), json!(graph6_encode(&g)));
        map.insert("family".into(), json!(family_names(&family)));
    }
    emit(run, "check", body, || verdict_text(&g, &v));
    Ok(status_code(v.status))
}

fn report_sat_number(
    run: &RunConfig,
    command: &str,
    label: &str,
    family: &[Pattern],
    r: &SatNumberResult,
) -> Outcome {
    let mut body = r.to_json();
    body["patterns"] = json!(family_names(family));
    emit(run, command, body, || {
        let value = r.value.map_or("none".to_string(), |v| v.to_string());
        let names = family_names(family).join(",");
        let mut out = format!("{label}({}, {names}) = {value}", r.n);
        for w in &r.witnesses {
            out.push_str(&format!("\n{}", graph6_encode(w)));
        }
        out
    });
    Ok(if r.value.is_some() { 0 } else { EXIT_NEGATIVE })
}

fn greedy(
    run: &RunConfig,
    limits: &SearchLimits,
    graph: &str,
    patterns: &[String],
    shuffle: bool,
) -> Outcome {
    let g0 = parse_graph(graph)?;
    let family = parse_family(patterns)?;
    let order = if shuffle {
        EdgeOrder::Seeded(run.seed.unwrap_or(0))
    } else {
        EdgeOrder::Lexicographic
    };
    let g = greedy_saturate(&g0, &family, order, limits)?;
    emit(
        run,
        "greedy",
        json!({
            "start": graph6_encode(&g0),
            "family": family_names(&family),
            "graph6": graph6_encode(&g),
            "n": g.n(),
            "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        }),
        || format!("{}\n{} edges", graph6_encode(&g), g.edge_count()),
    );
    Ok(0)
}

/// Saturation verdict plus, for colored constructions, the rainbow-free
/// check of the supplied coloring. `classical` selects ordinary saturation.
fn verification(
    g: &Graph,
    pattern: &Pattern,
    coloring: Option<&ColoredGraph>,
    classical: bool,
    limits: &SearchLimits,
) -> Result<(Value, u8), CliError> {
    if classical {
        let v = is_classically_saturated(g, pattern);
        let status = if v.saturated {
            SaturationStatus::Saturated
        } else {
            SaturationStatus::NotSaturated
        };
        let body = json!({
            "pattern": pattern.name(),
            "notion": "classical",
            "status": status,
            "h_free": v.h_free,
            "failing_edge": v.failing_edge.map(|(a, b)| [a, b]),
        });
        return Ok((body, status_code(status)));
    }
    let v = is_rainbow_saturated(g, std::slice::from_ref(pattern), limits)?;
    let mut body = json!({
        "pattern": pattern.name(),
        "notion": "rainbow",
        "status": v.status,
        "failing_edge": v.failing_edge.map(|(a, b)| [a, b]),
    });
    let mut code = status_code(v.status);
    if let Some(cg) = coloring {
        let rainbow = find_rainbow_embedding(&cg.graph, &cg.coloring, pattern)?;
        if rainbow.is_some() && code == 0 {
            code = EXIT_NEGATIVE;
        }
        body["coloring_rainbow_free"] = json!(rainbow.is_none());
    }
    Ok((body, code))
}

fn construct(run: &RunConfig, limits: &SearchLimits, kind: &Construction) -> Outcome {
    let (name, g, colored, pattern, verify, extra) = match kind {
        Construction::Ehm { n, r, verify } => {
            let g = ehm_graph(*n, *r)?;
            let p = Pattern::with_name(complete_graph(*r).map_err(ConstructionError::from)?, format!("K{r}"));
            ("ehm", g, None, p, *verify, Value::Null)
        }
        Construction::P4 { n, verify } => {
            let cg = p4_construction(*n)?;
            let p = Pattern::with_name(path(4).map_err(ConstructionError::from)?, "P4");
            ("p4", cg.graph.clone(), Some(cg), p, *verify, Value::Null)
        }
        Construction::Wheel { n, verify } => {
            let cg = wheel_construction(*n)?;
            let p = Pattern::with_name(cycle(4).map_err(ConstructionError::from)?, "C4");
            ("wheel", cg.graph.clone(), Some(cg), p, *verify, Value::Null)
        }
        Construction::Ladder {
            pattern,
            n,
            policy,
            size,
            verify,
        } => {
            let h = parse_pattern(pattern)?;
            let policy = match (policy, size) {
                (Policy::Cubic, None) => IndependentSetSize::Cubic,
                (Policy::Order, None) => IndependentSetSize::Order,
                (Policy::Fixed, Some(s)) if *s >= 1 => IndependentSetSize::Fixed(*s),
                (Policy::Fixed, _) => {
                    return Err(CliError::Usage("--policy fixed needs --size >= 1".into()))
                }
                (_, Some(_)) => {
                    return Err(CliError::Usage("--size only applies to --policy fixed".into()))
                }
            };
            let c = ladder_construction_with(&h, *n, policy, limits)?;
            let trace = serde_json::to_value(&c.trace).expect("trace serializes");
            ("ladder", c.graph, None, h, *verify, trace)
        }
    };
    let mut body = match &colored {
        Some(cg) => cg.to_json(),
        None => json!({
            "graph6": graph6_encode(&g),
            "n": g.n(),
            "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        }),
    };
    body["construction"] = json!(name);
    if !extra.is_null() {
        body["trace"] = extra;
    }
    let mut code = 0;
    let mut verdict_line = None;
    if verify {
        let classical = matches!(kind, Construction::Ehm { .. });
        let (v, c) = verification(&g, &pattern, colored.as_ref(), classical, limits)?;
        code = c;
        verdict_line = Some(format!(
            "{} for {} ({}){}",
            v["status"].as_str().unwrap_or("?"),
            pattern.name(),
            v["notion"].as_str().unwrap_or("?"),
            match v.get("coloring_rainbow_free") {
                Some(Value::Bool(true)) => "; coloring is rainbow-free",
                Some(Value::Bool(false)) => "; coloring has a rainbow copy",
                _ => "",
            }
        ));
        body["verification"] = v;
    }
    emit(run, "construct", body, || {
        let mut out = format!("{}\nn = {}, {} edges", graph6_encode(&g), g.n(), g.edge_count());
        if let Some(cg) = &colored {
            out.push_str(&format!("\n{} colors", cg.coloring.num_classes()));
        }
        if let Some(line) = verdict_line {
            out.push('\n');
            out.push_str(&line);
        }
        out
    });
    Ok(code)
}

fn show_gadget(run: &RunConfig, limits: &SearchLimits, kind: &str) -> Outcome {
    let kind: GadgetKind = kind.parse()?;
    let gd = gadget(kind);
    let pattern = parse_pattern(kind.pattern_name())?;
    let result = rainbow_free_colorable(&gd.graph, std::slice::from_ref(&pattern), limits)?;
    let label = result.label();
    let (m0, m1) = gd.marked_edge;
    emit(
        run,
        "gadget",
        json!({
            "gadget": kind.name(),
            "pattern": pattern.name(),
            "graph6": graph6_encode(&gd.graph),
            "labels": gd.labels,
            "edges": gd.graph.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
            "marked_edge": [m0, m1],
            "outcome": label,
            "forces_rainbow_expected": kind.forces_rainbow(),
        }),
        || {
            let edges: Vec<String> = gd
                .graph
                .edges()
                .iter()
                .map(|&(u, v)| format!("{}{}", gd.labels[u], gd.labels[v]))
                .collect();
            format!(
                "{} ({}): {}\nedges: {}\nmarked: {}{}",
                kind.name(),
                pattern.name(),
                label,
                edges.join(" "),
                gd.labels[m0],
                gd.labels[m1]
            )
        },
    );
    Ok(match result.outcome {
        Colorability::Indeterminate => EXIT_INDETERMINATE,
        _ if result.is_uncolorable() == kind.forces_rainbow() => 0,
        _ => EXIT_NEGATIVE,
    })
}

fn verify_claims(
    run: &RunConfig,
    limits: &SearchLimits,
    only: Option<&[String]>,
    oracle_instances: usize,
) -> Outcome {
    let config = VerifyConfig {
        limits: *limits,
        seed: run.seed.unwrap_or(DEFAULT_SEED),
        oracle_instances,
    };
    let report = verify(only, &config)?;
    emit(run, "verify-paper", json!({ "report": report.to_json() }), || {
        let mut out = Vec::new();
        for c in &report.claims {
            out.push(format!(
                "{:<5} {:<13} {} (budget {}s)",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.title,
                c.budget_seconds
            ));
            for check in c.checks.iter().filter(|k| !k.passed) {
                out.push(format!(
                    "      {}: expected {} observed {}",
                    check.label, check.expected, check.observed
                ));
            }
        }
        let passed = report.claims.iter().filter(|c| c.passed).count();
        out.push(format!("{passed}/{} claims pass", report.claims.len()));
        out.join("\n")
    });
    Ok(if report.passed { 0 } else { EXIT_NEGATIVE })
}
