//! `compute`, `verify`, `bounds`, `generate` and `reduce`.

use clap::ValueEnum;
use serde_json::{json, Map, Value};
use vsrc_core::bounds::vsrc_bounds_with;
use vsrc_core::cactus::{color_cactus, CactusError, CactusSolution};
use vsrc_core::conflict::verify_coloring;
use vsrc_core::exact::{vsrc_exact, ExactError};
use vsrc_core::graph::{parse_graph, parse_simple_graph};
use vsrc_core::instances::{generate as generate_graph, reduce_3col, GenSpec};
use vsrc_core::{Coloring, Graph};

use crate::{digest, exit, CliError, Outcome, RunRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// The cactus algorithm when the input is a cactus, otherwise exact.
    Auto,
    Cactus,
    Exact,
}

fn parse(input: &str) -> Result<Graph, CliError> {
    parse_graph(input).map_err(|e| CliError::Parse(e.to_string()))
}

fn edge_label(g: &Graph, e: usize) -> String {
    let (u, v) = g.edge(e);
    format!("{u}-{v}")
}

fn cactus_certificate(g: &Graph, sol: &CactusSolution) -> Map<String, Value> {
    let odd: Vec<Value> = sol
        .odd_cycles
        .iter()
        .map(|c| {
            let classes: Vec<Vec<String>> = c
                .classes
                .iter()
                .map(|cl| cl.iter().map(|&e| edge_label(g, e)).collect())
                .collect();
            json!({ "block": c.block, "rem_classes": classes })
        })
        .collect();
    let reused: Vec<[String; 2]> = sol
        .reused
        .iter()
        .map(|&(e, f)| [edge_label(g, e), edge_label(g, f)])
        .collect();
    let mut map = Map::new();
    map.insert("odd_cycles".into(), json!(odd));
    map.insert("reused".into(), json!(reused));
    map
}

/// Verifies an emitted coloring and packs it into a successful outcome.
fn finish(
    command: &'static str,
    input: &str,
    g: &Graph,
    method: &str,
    coloring: &Coloring,
    mut certificates: Map<String, Value>,
) -> Result<Outcome, CliError> {
    let report = verify_coloring(g, coloring).map_err(|e| CliError::Internal(e.to_string()))?;
    if !report.valid {
        return Err(CliError::Internal(format!(
            "{method} produced a coloring that fails verification: {:?}",
            report.violation
        )));
    }
    let coloring_json = coloring.to_json(g);
    let text = format!(
        "k = {}\nmethod = {method}\nvalid = true\ncoloring = {coloring_json}\n",
        coloring.k()
    );
    certificates.insert("coloring".into(), coloring_json);
    certificates.insert("verification".into(), json!(report));
    Ok(Outcome {
        record: RunRecord {
            command,
            input_digest: digest(input.as_bytes()),
            method: Some(method.into()),
            k: Some(coloring.k()),
            runtime_ms: None,
            valid: true,
            certificates: Value::Object(certificates),
        },
        text,
        exit_code: exit::OK,
    })
}

fn failure(
    command: &'static str,
    input: &str,
    method: Option<&str>,
    text: String,
    exit_code: i32,
    certificates: Value,
) -> Outcome {
    Outcome {
        record: RunRecord {
            command,
            input_digest: digest(input.as_bytes()),
            method: method.map(str::to_owned),
            k: None,
            runtime_ms: None,
            valid: false,
            certificates,
        },
        text,
        exit_code,
    }
}

/// Optimal `vsrc` with a verified coloring.
pub fn compute(input: &str, method: Method, budget: u64) -> Result<Outcome, CliError> {
    let g = parse(input)?;
    let use_cactus = match method {
        Method::Cactus => true,
        Method::Exact => false,
        Method::Auto => vsrc_core::graph::cactus_decomposition(&g).is_ok(),
    };
    if use_cactus {
        return match color_cactus(&g) {
            Ok(sol) => finish(
                "compute",
                input,
                &g,
                "cactus",
                &sol.coloring,
                cactus_certificate(&g, &sol),
            ),
            Err(CactusError::NotCactus(nc)) => Ok(failure(
                "compute",
                input,
                Some("cactus"),
                format!("not a cactus: {nc}\n"),
                exit::SEMANTIC,
                json!({ "not_cactus": nc.to_string() }),
            )),
            Err(e) => Err(CliError::Internal(e.to_string())),
        };
    }
    match vsrc_exact(&g, budget) {
        Ok(sol) => finish("compute", input, &g, "exact", &sol.coloring, Map::new()),
        Err(ExactError::BudgetExceeded { lower, upper, best }) => {
            let best = Coloring::new(best);
            Ok(failure(
                "compute",
                input,
                Some("exact"),
                format!(
                    "budget exhausted: {lower} <= vsrc <= {upper}\nbest coloring = {}\n",
                    best.to_json(&g)
                ),
                exit::BUDGET,
                json!({ "lower": lower, "upper": upper, "best_coloring": best.to_json(&g) }),
            ))
        }
        Err(e) => Err(CliError::Internal(e.to_string())),
    }
}

/// Checks a coloring file against a graph: exit 0 when valid, 1 with a
/// witness when not.
pub fn verify(input: &str, coloring: &str) -> Result<Outcome, CliError> {
    let g = parse(input)?;
    let value: Value =
        serde_json::from_str(coloring).map_err(|e| CliError::Parse(format!("coloring: {e}")))?;
    let c =
        Coloring::from_json(&g, &value).map_err(|e| CliError::Parse(format!("coloring: {e}")))?;
    let report = verify_coloring(&g, &c).map_err(|e| CliError::Internal(e.to_string()))?;
    let (text, exit_code) = match &report.violation {
        None => (format!("valid: {} colors\n", c.k()), exit::OK),
        Some(v) => {
            let path: Vec<String> = v.path.iter().map(usize::to_string).collect();
            let [(a, b), (x, y)] = v.edge_endpoints;
            (
                format!(
                    "invalid: edges {a}-{b} and {x}-{y} share color {} on shortest path {}\n",
                    v.color,
                    path.join("-")
                ),
                exit::SEMANTIC,
            )
        }
    };
    Ok(Outcome {
        record: RunRecord {
            command: "verify",
            input_digest: digest(input.as_bytes()),
            method: None,
            k: Some(c.k()),
            runtime_ms: None,
            valid: report.valid,
            certificates: json!({ "verification": report }),
        },
        text,
        exit_code,
    })
}

/// Lower and upper bounds with certificates.
pub fn bounds(input: &str, budget: u64) -> Result<Outcome, CliError> {
    let g = parse(input)?;
    let report = vsrc_bounds_with(&g, budget);
    let mut text = format!("lower = {}\nupper = {}\n", report.lower, report.upper);
    for b in &report.lower_bounds {
        text.push_str(&format!("  lower {:<18} {}\n", b.method, b.value));
    }
    for b in &report.upper_bounds {
        text.push_str(&format!("  upper {:<18} {}\n", b.method, b.value));
    }
    for s in &report.skipped {
        text.push_str(&format!("  skipped {:<16} {}\n", s.method, s.reason));
    }
    Ok(Outcome {
        record: RunRecord {
            command: "bounds",
            input_digest: digest(input.as_bytes()),
            method: Some(report.best().method.into()),
            k: Some(report.upper),
            runtime_ms: None,
            valid: true,
            certificates: report.to_json(&g),
        },
        text,
        exit_code: exit::OK,
    })
}

/// Parses a generator spec. Random families must carry an explicit `seed`.
pub fn parse_gen_spec(value: Value) -> Result<GenSpec, CliError> {
    let family = value
        .get("family")
        .and_then(Value::as_str)
        .unwrap_or_default();
    if family.starts_with("random_") && value.get("seed").is_none() {
        return Err(CliError::Parse(format!(
            "family {family} needs an explicit seed"
        )));
    }
    serde_json::from_value(value).map_err(|e| CliError::Parse(format!("generator spec: {e}")))
}

pub fn generate(spec: &GenSpec) -> Result<Outcome, CliError> {
    let spec_json = serde_json::to_value(spec).expect("specs serialize");
    let g = generate_graph(spec).map_err(|e| CliError::Parse(e.to_string()))?;
    let text = g.to_edge_list();
    Ok(Outcome {
        record: RunRecord {
            command: "generate",
            input_digest: digest(spec_json.to_string().as_bytes()),
            method: None,
            k: None,
            runtime_ms: None,
            valid: true,
            certificates: json!({ "spec": spec_json, "n": g.n(), "m": g.m(), "edge_list": text }),
        },
        text,
        exit_code: exit::OK,
    })
}

/// The 3-coloring reduction: a universal vertex added to the complement.
/// The input may be disconnected.
pub fn reduce(input: &str) -> Result<Outcome, CliError> {
    let g = parse_simple_graph(input).map_err(|e| CliError::Parse(e.to_string()))?;
    let h = reduce_3col(&g);
    let text = h.to_edge_list();
    Ok(Outcome {
        record: RunRecord {
            command: "reduce",
            input_digest: digest(input.as_bytes()),
            method: None,
            k: None,
            runtime_ms: None,
            valid: true,
            certificates: json!({ "n": h.n(), "m": h.m(), "universal_vertex": h.n() - 1, "edge_list": text }),
        },
        text,
        exit_code: exit::OK,
    })
}
