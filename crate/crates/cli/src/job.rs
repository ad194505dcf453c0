use std::fmt::Write;

use serde_json::{json, Value};
use zgkh::chain::dual;
use zgkh::pieces::{decompose, lambda_bounds, u_g, verify_identity, Identity};
use zgkh::tqft::{
    build_reduced_complex, parse_braid, parse_pd, s_invariant, specialized_homology, BasePoint, CubeOptions,
    SpecializedTable, DEFAULT_CAP,
};
use zgkh::zigzag::{
    closure, fg_certificate, graph_to_complex, lambda_distance_rational, parity_lemma_holds, two_bridge_pd, zz,
    Rational,
};
use zgkh::{CoefficientSpec, FreeComplex};

use crate::cache::{self, Cache};
use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Pd(String),
    Braid(String),
    Rational(String),
    /// A complex in the JSON schema, as text.
    Complex(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Emit {
    Graph,
    Complex,
    Closure,
    Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Complex,
    Decompose,
    Invariants,
    Zigzag { x: String, emit: Emit },
    Verify { identities: String, parity_max: i64 },
    CertifyRational { x: String, y: String },
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub input: Option<Input>,
    pub command: Command,
    pub json: bool,
    pub base_point: Option<i64>,
    pub cap: usize,
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        JobSpec { input: None, command, json: false, base_point: None, cap: DEFAULT_CAP }
    }

    fn descriptor(&self) -> String {
        let fmt = if self.json { "json" } else { "text" };
        let cmd = match &self.command {
            Command::Complex => "complex".to_string(),
            Command::Decompose => "decompose".to_string(),
            Command::Invariants => "invariants".to_string(),
            Command::Zigzag { x, emit } => {
                format!("zigzag {} {emit:?}", rational(x).map(|r| r.to_string()).unwrap_or_default())
            }
            Command::Verify { identities, parity_max } => format!("verify {identities} {parity_max}"),
            Command::CertifyRational { x, y } => format!("certify {x} {y}"),
        };
        format!("{cmd} {fmt} bp={:?}", self.base_point)
    }
}

fn rational(s: &str) -> Result<Rational, CliError> {
    s.parse::<Rational>().map_err(|e| CliError::Parse(format!("{s:?}: {e}")))
}

enum Knot {
    Diagram(zgkh::tqft::PDCode),
    Complex(FreeComplex),
}

/// Parses the input and returns it with its normalized text.
fn load(input: &Input) -> Result<(Knot, String), CliError> {
    let pd = match input {
        Input::Pd(t) => parse_pd(t)?,
        Input::Braid(t) => parse_braid(t)?,
        Input::Rational(t) => two_bridge_pd(rational(t)?)?,
        Input::Complex(t) => {
            let v: Value = serde_json::from_str(t).map_err(|e| CliError::Parse(e.to_string()))?;
            let c = FreeComplex::from_json(&v).map_err(|e| CliError::Parse(e.to_string()))?;
            c.validate().map_err(|e| CliError::Invariant(format!("{e:?}")))?;
            let norm = c.to_json().to_string();
            return Ok((Knot::Complex(c), format!("complex {norm}")));
        }
    };
    let norm = format!("pd {}", pd.canonical_text());
    Ok((Knot::Diagram(pd), norm))
}

fn reduced_complex(job: &JobSpec, knot: Knot) -> Result<FreeComplex, CliError> {
    match knot {
        Knot::Complex(c) => {
            if c.len() > job.cap {
                return Err(CliError::Cap(format!("{} generators, cap {}", c.len(), job.cap)));
            }
            Ok(c)
        }
        Knot::Diagram(pd) => {
            let opts = CubeOptions { base_point: job.base_point.map(BasePoint), cap: job.cap };
            let c = build_reduced_complex(&pd, opts)?;
            c.validate().map_err(|e| CliError::Invariant(format!("{e:?}")))?;
            Ok(c)
        }
    }
}

/// Runs one job, consulting the cache when one is given.
pub fn run(job: &JobSpec, cache: Option<&Cache>) -> Result<String, CliError> {
    let loaded = job.input.as_ref().map(load).transpose()?;
    let key = cache::key(&[&job.descriptor(), loaded.as_ref().map_or("", |l| l.1.as_str())]);
    if let Some(hit) = cache.and_then(|c| c.get(&key)) {
        return Ok(hit);
    }
    let out = execute(job, loaded.map(|l| l.0))?;
    if let Some(c) = cache {
        c.put(&key, &out)?;
    }
    Ok(out)
}

fn render(job: &JobSpec, v: Value, text: String) -> String {
    if job.json {
        let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

fn need_input(knot: Option<Knot>) -> Result<Knot, CliError> {
    knot.ok_or_else(|| CliError::Parse("one of --pd, --braid, --rational, --complex-json is required".into()))
}

fn execute(job: &JobSpec, knot: Option<Knot>) -> Result<String, CliError> {
    match &job.command {
        Command::Complex => {
            let c = reduced_complex(job, need_input(knot)?)?;
            Ok(render(job, c.to_json(), c.to_string()))
        }
        Command::Decompose => {
            let c = reduced_complex(job, need_input(knot)?)?;
            let d = decompose(&c);
            if !d.verify() {
                return Err(CliError::Invariant("decomposition witness does not verify".into()));
            }
            let mut text = String::new();
            for s in &d.summands {
                writeln!(text, "{} at {}", s.kind.label(), s.at).unwrap();
            }
            Ok(render(job, d.to_json(), text))
        }
        Command::Invariants => invariants(job, &reduced_complex(job, need_input(knot)?)?),
        Command::Zigzag { x, emit } => zigzag(job, rational(x)?, *emit),
        Command::Verify { identities, parity_max } => verify(job, identities, *parity_max),
        Command::CertifyRational { x, y } => {
            let (x, y) = (rational(x)?, rational(y)?);
            let d = lambda_distance_rational(x, y)?;
            let mut v = d.to_json();
            v["x"] = json!(x);
            v["y"] = json!(y);
            let text = match &d.z {
                None => format!("lambda({x}, {y}) = 0\n"),
                Some(z) => format!("lambda({x}, {y}) = 1 via ({x}, {y}) ~ (-1, {z}); certificate k=1 verified\n"),
            };
            Ok(render(job, v, text))
        }
    }
}

fn invariants(job: &JobSpec, c: &FreeComplex) -> Result<String, CliError> {
    let ug = u_g(c);
    let ug_mirror = u_g(&dual(c));
    let lambda = lambda_bounds(c);
    if let Some(cert) = &lambda.certificate {
        if !cert.verify() {
            return Err(CliError::Invariant("lambda certificate does not verify".into()));
        }
    }
    let s: Vec<i64> = [0, 2, 3].iter().map(|p| s_invariant(c, *p)).collect::<Result<_, _>>()?;
    let SpecializedTable::Integral(kh) = specialized_homology(c, CoefficientSpec::IntegersGZero) else {
        unreachable!("G = 0 gives an integral table")
    };
    let g_one = specialized_homology(c, CoefficientSpec::FieldGOne(0)).total_dimension();
    let rows: Vec<Value> = kh
        .iter()
        .map(|(g, (rank, tor))| json!({"i": g.i, "q": g.q, "rank": rank, "torsion": tor.iter().map(|t| t.to_string()).collect::<Vec<_>>()}))
        .collect();
    let v = json!({
        "u_G": ug,
        "u_G_mirror": ug_mirror,
        "lambda": lambda.to_json(),
        "s": {"Q": s[0], "F2": s[1], "F3": s[2]},
        "kh_reduced": rows,
        "g_one": {"total_dimension": g_one, "ok": g_one == 1},
    });
    let mut text = String::new();
    writeln!(text, "u_G          {ug}").unwrap();
    writeln!(text, "u_G(mirror)  {ug_mirror}").unwrap();
    let upper = lambda.upper.map_or("?".to_string(), |u| u.to_string());
    writeln!(text, "lambda       [{}, {upper}]{}", lambda.lower, if lambda.exact { " exact" } else { "" }).unwrap();
    writeln!(text, "s Q/F2/F3    {} {} {}", s[0], s[1], s[2]).unwrap();
    writeln!(text, "G=1 check    dim {g_one} {}", if g_one == 1 { "ok" } else { "FAILED" }).unwrap();
    writeln!(text, "reduced Kh over Z (i q rank torsion):").unwrap();
    for (g, (rank, tor)) in &kh {
        let tor: Vec<String> = tor.iter().map(|t| format!("Z/{t}")).collect();
        let line = format!("  {} {} {} {}", g.i, g.q, rank, tor.join(" "));
        writeln!(text, "{}", line.trim_end()).unwrap();
    }
    if g_one != 1 {
        return Err(CliError::Invariant(format!("G=1 homology has dimension {g_one}")));
    }
    Ok(render(job, v, text))
}

fn zigzag(job: &JobSpec, x: Rational, emit: Emit) -> Result<String, CliError> {
    let g = zz(x)?;
    Ok(match emit {
        Emit::Graph => {
            let v = json!({"x": x, "graph": g.to_string(), "vertices": g.vertices, "edges": g.edges});
            render(job, v, format!("zz({x}) = {g}\n"))
        }
        Emit::Complex => {
            let c = graph_to_complex(&g);
            let mut text = String::new();
            for (k, (o, gr)) in c.objects.iter().enumerate() {
                writeln!(text, "A_{k} {o:?} at {gr}").unwrap();
            }
            for ((a, b), m) in &c.diff {
                writeln!(text, "A_{a} --{m}--> A_{b}").unwrap();
            }
            render(job, c.to_json(), text)
        }
        Emit::Closure => {
            let c = closure(&graph_to_complex(&g));
            render(job, c.to_json(), c.to_string())
        }
        Emit::Certificate => {
            let cert = fg_certificate(x)?;
            render(job, cert.to_json(), format!("fg certificate for {x}: k=1, verified {}\n", cert.verify()))
        }
    })
}

fn verify(job: &JobSpec, identities: &str, parity_max: i64) -> Result<String, CliError> {
    let ids = Identity::parse(identities).ok_or_else(|| CliError::Parse(format!("unknown identity {identities:?}")))?;
    let reports: Vec<_> = ids.iter().map(verify_identity).collect();
    let mut parity_failures = Vec::new();
    let mut checked = 0;
    for p in 1..=parity_max {
        for q in 1..=parity_max {
            let Some(x) = Rational::new(p, q).filter(|x| x.p() == p) else { continue };
            checked += 1;
            if !parity_lemma_holds(x)? {
                parity_failures.push(x.to_string());
            }
        }
    }
    let passed = reports.iter().all(|r| r.passed()) && parity_failures.is_empty();
    let v = json!({
        "identities": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        "parity": {"max": parity_max, "checked": checked, "failures": parity_failures},
        "passed": passed,
    });
    let mut text = String::new();
    for r in &reports {
        writeln!(
            text,
            "{} {}{}",
            if r.passed() { "ok  " } else { "FAIL" },
            r.identity,
            if r.witness.is_some() { " (witness)" } else { "" }
        )
        .unwrap();
    }
    writeln!(
        text,
        "{} parity lemma, {checked} fractions up to {parity_max}",
        if parity_failures.is_empty() { "ok  " } else { "FAIL" }
    )
    .unwrap();
    if !passed {
        // The report goes to stderr so the failure is still visible.
        eprint!("{}", render(job, v, text));
        return Err(CliError::Invariant("verification suite failed".into()));
    }
    Ok(render(job, v, text))
}
