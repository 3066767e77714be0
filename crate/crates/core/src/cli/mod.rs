//! Command-line front end. Every command produces a JSON document and one of
//! three statuses, which the binary turns into exit codes 0, 1 and 2.

pub mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::glx::{kernel_coord_dims, steinberg_factorize, GLXShape, GWeight, SimpleIndex, VTuple};
use crate::prime::Prime;
use crate::qcyclo::CycNum;
use crate::verp::VerpObject;
use crate::versln::{cache, fuse_sln, AlcoveWeight, FusionExpansion, SLnParams};

pub use verify::Suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    PropertyViolation,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::PropertyViolation => 1,
            Status::InputError => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::PropertyViolation => "property-violation",
            Status::InputError => "input-error",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
}

impl CommandResult {
    pub fn ok(payload: Value) -> Self {
        CommandResult { status: Status::Ok, payload }
    }

    pub fn input_error(e: &Error) -> Self {
        CommandResult { status: Status::InputError, payload: json!({ "error": e.to_string() }) }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "verlinde",
    version,
    about = "Fusion rules and Steinberg factorization for Verlinde categories"
)]
pub struct Cli {
    /// Also report errors as JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    /// JSON file memoizing SL(n) fusion products across runs.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fusion product L_m ⊗ L_n in Ver_p.
    Fuse {
        #[arg(short)]
        p: u32,
        m: usize,
        n: usize,
        /// Add quantum and categorical dimensions.
        #[arg(long)]
        annotate: bool,
    },
    /// Fusion product in Ver_p(SL(n)); partitions as comma-separated parts.
    SlnFuse {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        n: u32,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        annotate: bool,
    },
    /// p-adic decomposition λ = λ0 + p·μ of a dominant GL(X) weight.
    Decompose {
        #[arg(short)]
        p: u32,
        #[arg(long)]
        shape: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Steinberg factorization of the simple label (λ, V).
    Factorize {
        #[arg(short)]
        p: u32,
        #[arg(long)]
        shape: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
        /// Plus labels per block: `|` between blocks, `;` between copies.
        #[arg(long, default_value = "")]
        v: String,
        #[arg(long)]
        annotate: bool,
    },
    /// Factored dimension of the coordinate ring of the r-th Frobenius kernel.
    KernelDim {
        #[arg(short)]
        p: u32,
        #[arg(long)]
        shape: String,
        #[arg(short, default_value_t = 1)]
        r: u32,
    },
    /// Run a property suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Primes, comma-separated.
        #[arg(short, value_delimiter = ',')]
        p: Vec<u32>,
        /// SL(n) ranks, comma-separated.
        #[arg(short, value_delimiter = ',')]
        n: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

/// Parse `2,1`, `(2,1)`, `0` or the empty string as a partition.
pub fn parse_partition(s: &str) -> Result<Vec<u32>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| Error::invalid(format!("bad part {t:?}"))))
        .collect()
}

pub fn verp_json(o: &VerpObject) -> Value {
    let m: Map<String, Value> = o.iter().map(|(k, m)| (format!("L{k}"), json!(m))).collect();
    Value::Object(m)
}

pub fn expansion_json(e: &FusionExpansion) -> Value {
    let m: Map<String, Value> = e.terms().iter().map(|(w, &c)| (w.to_string(), json!(c))).collect();
    Value::Object(m)
}

fn cyc_json(c: &CycNum) -> Value {
    let coeffs: Vec<Value> = match c.integer_coeffs() {
        Some(v) => v.into_iter().map(Value::from).collect(),
        None => c.coeffs().iter().map(|x| Value::from(x.to_string())).collect(),
    };
    json!({ "coeffs": coeffs, "approx": c.to_float() })
}

pub fn cmd_fuse(p: u32, m: usize, n: usize, annotate: bool) -> Result<Value> {
    let p = Prime::new(p)?;
    let prod = VerpObject::simple(p, m)?.fuse(&VerpObject::simple(p, n)?)?;
    if !annotate {
        return Ok(verp_json(&prod));
    }
    Ok(json!({
        "product": verp_json(&prod),
        "qdim": cyc_json(&prod.qdim()),
        "fpdim": prod.fpdim(),
        "dim": prod.underlying_dim(),
    }))
}

pub fn cmd_sln_fuse(p: u32, n: u32, lambda: &str, mu: &str, annotate: bool) -> Result<Value> {
    let params = SLnParams::new(Prime::new(p)?, n)?;
    let a = AlcoveWeight::new(params, &parse_partition(lambda)?)?;
    let b = AlcoveWeight::new(params, &parse_partition(mu)?)?;
    let prod = fuse_sln(&a, &b)?;
    if !annotate {
        return Ok(expansion_json(&prod));
    }
    Ok(json!({ "product": expansion_json(&prod), "qdim": cyc_json(&prod.qdim()) }))
}

pub fn cmd_decompose(p: u32, shape: &str, weight: &str) -> Result<Value> {
    let shape = GLXShape::parse(Prime::new(p)?, shape)?;
    let (base, mu) = GWeight::parse(&shape, weight)?.padic_decompose()?;
    Ok(json!({ "base": base.to_string(), "mu": mu.to_string() }))
}

pub fn cmd_factorize(p: u32, shape: &str, weight: &str, v: &str, annotate: bool) -> Result<Value> {
    let shape = GLXShape::parse(Prime::new(p)?, shape)?;
    let idx = SimpleIndex::new(GWeight::parse(&shape, weight)?, VTuple::parse(&shape, v)?)?;
    let f = steinberg_factorize(&idx)?;
    let mut out = Map::new();
    out.insert("base".into(), json!(f.base.lambda().to_string()));
    if !f.base.v().is_trivial() {
        out.insert("v".into(), json!(f.base.v().to_string()));
    }
    out.insert("twists".into(), json!(f.twists.iter().map(ToString::to_string).collect::<Vec<_>>()));
    if annotate {
        out.insert("twist_dims".into(), json!(f.twist_dims()));
        out.insert("length_multiplier".into(), json!(f.length_multiplier()));
    }
    Ok(Value::Object(out))
}

pub fn cmd_kernel_dim(p: u32, shape: &str, r: u32) -> Result<Value> {
    let prime = Prime::new(p)?;
    let shape = GLXShape::parse(prime, shape)?;
    let d = kernel_coord_dims(&shape, r)?;
    Ok(json!({
        "even_exponent": d.even_exponent,
        "sym_dims": d.sym_dims,
        "total": d.total(p).to_string(),
    }))
}

pub fn run(cli: &Cli) -> CommandResult {
    if let Some(path) = &cli.cache {
        if let Err(e) = cache::global().load(path) {
            return CommandResult::input_error(&e);
        }
    }
    let res = match &cli.command {
        Command::Fuse { p, m, n, annotate } => cmd_fuse(*p, *m, *n, *annotate).map(CommandResult::ok),
        Command::SlnFuse { p, n, lambda, mu, annotate } => {
            cmd_sln_fuse(*p, *n, lambda, mu, *annotate).map(CommandResult::ok)
        }
        Command::Decompose { p, shape, weight } => cmd_decompose(*p, shape, weight).map(CommandResult::ok),
        Command::Factorize { p, shape, weight, v, annotate } => {
            cmd_factorize(*p, shape, weight, v, *annotate).map(CommandResult::ok)
        }
        Command::KernelDim { p, shape, r } => cmd_kernel_dim(*p, shape, *r).map(CommandResult::ok),
        Command::Verify { suite, p, n, seed, samples } => {
            let opts =
                verify::Options { primes: p.clone(), ranks: n.clone(), seed: *seed, samples: *samples };
            verify::run_suite(*suite, &opts)
        }
    };
    let out = res.unwrap_or_else(|e| CommandResult::input_error(&e));
    if let Some(path) = &cli.cache {
        if let Err(e) = cache::global().save(path) {
            return CommandResult::input_error(&e);
        }
    }
    out
}

/// Parse arguments, run, print, and return the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Status::InputError.exit_code() } else { 0 };
        }
    };
    let res = run(&cli);
    match res.status {
        Status::InputError => {
            let msg = res.payload.get("error").and_then(Value::as_str).unwrap_or("invalid input");
            eprintln!("error: {msg}");
            if cli.json {
                println!("{}", res.payload);
            }
        }
        Status::PropertyViolation => {
            eprintln!("property violation, counterexample in the report");
            println!("{}", res.payload);
        }
        Status::Ok => println!("{}", res.payload),
    }
    res.status.exit_code()
}
