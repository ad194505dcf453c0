use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use zgkh::tqft::DEFAULT_CAP;
use zgkh_cli::{batch, run, Cache, CliError, Command, Emit, Input, JobSpec, CACHE_ENV};

#[derive(Parser)]
#[command(name = "zgkh", version, about = "Z[G] Khovanov complexes, pieces and lambda certificates")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Directory of the content-addressed result cache.
    #[arg(long, global = true, env = CACHE_ENV)]
    cache: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct KnotArgs {
    /// PD code, `X[..] X[..]` or `[[..],..]`; `@file` reads it from a file.
    #[arg(long, group = "input")]
    pd: Option<String>,
    /// Braid word such as `[1,1,1]`.
    #[arg(long, group = "input", allow_hyphen_values = true)]
    braid: Option<String>,
    /// Two-bridge knot of the rational tangle `p/q`.
    #[arg(long, group = "input", allow_hyphen_values = true)]
    rational: Option<String>,
    /// A complex in the JSON schema; `@file` reads it from a file.
    #[arg(long, group = "input")]
    complex_json: Option<String>,
    /// Edge label carrying the base point.
    #[arg(long)]
    basepoint: Option<i64>,
    /// Largest number of live generators allowed.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// The reduced complex of a knot.
    Complex(KnotArgs),
    /// Splits the complex into catalogued pieces with a witness.
    Decompose(KnotArgs),
    /// u_G, lambda bounds, s-invariants and reduced Khovanov homology.
    Invariants(KnotArgs),
    /// The zigzag graph of a rational tangle.
    Zigzag {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value = "graph")]
        emit: Emit,
    },
    /// Checks piece identities and the zigzag parity lemma.
    Verify {
        /// Identity names, family names, or `all`, comma separated.
        #[arg(long, default_value = "all")]
        identities: String,
        #[arg(long, default_value_t = 30)]
        parity_max: i64,
    },
    /// Certified lambda distance between two rational tangles.
    #[command(name = "certify-rational")]
    CertifyRational {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Runs a JSON manifest of jobs in parallel.
    Batch {
        manifest: std::path::PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn text_arg(s: String) -> Result<String, CliError> {
    match s.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path)?),
        None => Ok(s),
    }
}

fn knot_job(command: Command, a: KnotArgs) -> Result<JobSpec, CliError> {
    let input = if let Some(t) = a.pd {
        Input::Pd(text_arg(t)?)
    } else if let Some(t) = a.braid {
        Input::Braid(t)
    } else if let Some(t) = a.rational {
        Input::Rational(t)
    } else if let Some(t) = a.complex_json {
        Input::Complex(text_arg(t)?)
    } else {
        return Err(CliError::Parse("one of --pd, --braid, --rational, --complex-json is required".into()));
    };
    Ok(JobSpec { input: Some(input), base_point: a.basepoint, cap: a.cap, ..JobSpec::new(command) })
}

fn main_inner(cli: Cli) -> Result<String, CliError> {
    let cache = cli.cache.map(Cache::open).transpose()?;
    let mut job = match cli.command {
        Cmd::Complex(a) => knot_job(Command::Complex, a)?,
        Cmd::Decompose(a) => knot_job(Command::Decompose, a)?,
        Cmd::Invariants(a) => knot_job(Command::Invariants, a)?,
        Cmd::Zigzag { x, emit } => JobSpec::new(Command::Zigzag { x, emit }),
        Cmd::Verify { identities, parity_max } => JobSpec::new(Command::Verify { identities, parity_max }),
        Cmd::CertifyRational { x, y } => JobSpec::new(Command::CertifyRational { x, y }),
        Cmd::Batch { manifest, jobs } => {
            let report = batch(&std::fs::read_to_string(manifest)?, cache.as_ref(), jobs)?;
            if cli.json {
                return Ok(serde_json::to_string_pretty(&report).expect("json values serialize") + "\n");
            }
            let mut out = String::new();
            for j in report["jobs"].as_array().into_iter().flatten() {
                let status = if j["status"] == "ok" { "ok".to_string() } else { format!("error: {}", j["error"]) };
                out += &format!("{}\t{status}\n", j["id"].as_str().unwrap_or(""));
            }
            out += &format!("{} jobs, {} failed\n", report["total"], report["failed"]);
            return Ok(out);
        }
    };
    job.json = cli.json;
    run(&job, cache.as_ref())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match main_inner(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("zgkh: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
