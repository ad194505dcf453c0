use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};
use zgkh::tqft::DEFAULT_CAP;

use crate::cache::Cache;
use crate::error::CliError;
use crate::job::{run, Command, Emit, Input, JobSpec};

/// One manifest entry; exactly one input field for knot commands.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    #[serde(rename = "id")]
    _id: Option<String>,
    command: String,
    pd: Option<String>,
    braid: Option<Value>,
    rational: Option<String>,
    complex: Option<Value>,
    basepoint: Option<i64>,
    cap: Option<usize>,
    x: Option<String>,
    y: Option<String>,
    emit: Option<Emit>,
    identities: Option<String>,
    parity_max: Option<i64>,
}

fn text_of(v: Value) -> String {
    match v {
        Value::String(s) => s,
        other => other.to_string(),
    }
}

fn spec_of(e: Entry) -> Result<JobSpec, CliError> {
    let missing = |f: &str| CliError::Parse(format!("{} needs {f}", e.command));
    let command = match e.command.as_str() {
        "complex" => Command::Complex,
        "decompose" => Command::Decompose,
        "invariants" => Command::Invariants,
        "zigzag" => {
            Command::Zigzag { x: e.x.clone().ok_or_else(|| missing("x"))?, emit: e.emit.unwrap_or(Emit::Graph) }
        }
        "verify" => Command::Verify {
            identities: e.identities.clone().unwrap_or_else(|| "all".into()),
            parity_max: e.parity_max.unwrap_or(30),
        },
        "certify-rational" => Command::CertifyRational {
            x: e.x.clone().ok_or_else(|| missing("x"))?,
            y: e.y.clone().ok_or_else(|| missing("y"))?,
        },
        other => return Err(CliError::Parse(format!("unknown command {other:?}"))),
    };
    let mut inputs: Vec<Input> = Vec::new();
    inputs.extend(e.pd.map(Input::Pd));
    inputs.extend(e.braid.map(|b| Input::Braid(text_of(b))));
    inputs.extend(e.rational.map(Input::Rational));
    inputs.extend(e.complex.map(|c| Input::Complex(text_of(c))));
    if inputs.len() > 1 {
        return Err(CliError::Parse("more than one input".into()));
    }
    Ok(JobSpec { input: inputs.pop(), command, json: true, base_point: e.basepoint, cap: e.cap.unwrap_or(DEFAULT_CAP) })
}

fn run_entry(n: usize, raw: &Value, cache: Option<&Cache>) -> Value {
    let id = raw.get("id").and_then(Value::as_str).map_or_else(|| n.to_string(), str::to_string);
    let result = serde_json::from_value::<Entry>(raw.clone())
        .map_err(|e| CliError::Parse(e.to_string()))
        .and_then(spec_of)
        .and_then(|spec| run(&spec, cache));
    match result {
        Ok(out) => {
            let output: Value = serde_json::from_str(&out).unwrap_or(Value::String(out));
            json!({"id": id, "status": "ok", "output": output})
        }
        Err(e) => json!({"id": id, "status": "error", "exit_code": e.exit_code(), "error": e.to_string()}),
    }
}

/// Runs every entry of a JSON-array manifest; the report keeps manifest order.
pub fn batch(manifest: &str, cache: Option<&Cache>, jobs: Option<usize>) -> Result<Value, CliError> {
    let entries: Vec<Value> = serde_json::from_str(manifest).map_err(|e| CliError::Parse(format!("manifest: {e}")))?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        pool = pool.num_threads(j);
    }
    let pool = pool.build().map_err(|e| CliError::Invariant(e.to_string()))?;
    let results: Vec<Value> =
        pool.install(|| entries.par_iter().enumerate().map(|(n, raw)| run_entry(n, raw, cache)).collect());
    let failed = results.iter().filter(|r| r["status"] != "ok").count();
    Ok(json!({"jobs": results, "total": results.len(), "failed": failed}))
}
