//! Batch runner behind the `bpu-verify` binary: dispatches checks, times
//! them, and renders the report stream as JSON or text.

use std::time::Instant;

use bpu_core::ring::p_primary_part;
use bpu_core::{invariants, spectral, symfun, topology};
use bpu_core::{PrimeField, Status, VerdictReport};
use serde_json::{json, Value};

pub mod sampler;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Mui,
    Vistoli,
    PropS,
    Main,
    Yagita,
    Lambda,
    Theta,
    Delta,
    Ln,
    NablaOnto,
    E4,
    All,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::Mui,
        Check::Vistoli,
        Check::PropS,
        Check::Main,
        Check::Yagita,
        Check::Lambda,
        Check::Theta,
        Check::Delta,
        Check::Ln,
        Check::NablaOnto,
        Check::E4,
        Check::All,
    ];

    pub fn subcommand(self) -> &'static str {
        match self {
            Check::Mui => "verify-mui",
            Check::Vistoli => "verify-vistoli",
            Check::PropS => "verify-prop-s",
            Check::Main => "verify-main",
            Check::Yagita => "verify-yagita",
            Check::Lambda => "verify-lambda",
            Check::Theta => "verify-theta",
            Check::Delta => "verify-delta",
            Check::Ln => "verify-ln",
            Check::NablaOnto => "verify-nabla-onto",
            Check::E4 => "verify-e4",
            Check::All => "verify-all",
        }
    }

    pub fn from_subcommand(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.subcommand() == name)
    }
}

/// Flag values; `None` means the per-check default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub p: u64,
    pub n: Option<u32>,
    pub blocks: Option<usize>,
    pub max_degree: Option<u32>,
    pub max_index: Option<u32>,
    pub up_to: Option<u32>,
    pub kmax: Option<u32>,
    pub seed: u64,
    pub cases: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            p: 3,
            n: None,
            blocks: None,
            max_degree: None,
            max_index: None,
            up_to: None,
            kmax: None,
            seed: 0,
            cases: 200,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TimedReport {
    pub report: VerdictReport,
    pub elapsed_ms: u128,
}

#[derive(Debug, PartialEq, Eq)]
pub enum UsageError {
    NotAnOddPrime(u64),
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UsageError::NotAnOddPrime(p) => write!(f, "--p {p} is not an odd prime"),
        }
    }
}

impl std::error::Error for UsageError {}

fn timed(f: impl FnOnce() -> VerdictReport) -> TimedReport {
    let start = Instant::now();
    let report = f();
    TimedReport { report, elapsed_ms: start.elapsed().as_millis() }
}

/// `max(2q, p)` where `q` is the p-primary part of `n/p`.
pub fn default_up_to(p: u64, n: u32) -> u32 {
    let m = u64::from(n) / p;
    if m == 0 {
        return p as u32;
    }
    (2 * p_primary_part(p, m)).max(p) as u32
}

/// The ranks `verify-all` sweeps: `p, p^2, 2p^2, p^3`.
pub fn desk_ranks(p: u64) -> [u32; 4] {
    let p = p as u32;
    [p, p * p, 2 * p * p, p * p * p]
}

/// Runs one subcommand; reports come back sorted by check, then params.
pub fn run(check: Check, opts: &Options) -> Result<Vec<TimedReport>, UsageError> {
    let field = PrimeField::new(opts.p).map_err(|_| UsageError::NotAnOddPrime(opts.p))?;
    let p = opts.p;
    let p32 = p as u32;
    let n = opts.n.unwrap_or(p32);
    let mut out = Vec::new();
    match check {
        Check::Mui => {
            let d = opts.max_degree.unwrap_or(40);
            out.push(timed(|| invariants::verify_mui_presentation(field, d)));
        }
        Check::Vistoli => {
            let d = opts.max_degree.unwrap_or(24);
            out.push(timed(|| invariants::verify_vistoli_integral(field, d)));
        }
        Check::PropS => out.push(timed(|| topology::verify_steenrod_ledger(field))),
        Check::Main => {
            let blocks = opts.blocks.unwrap_or(1);
            out.push(timed(|| topology::verify_main(field, blocks)));
        }
        Check::Yagita => {
            let imax = opts.max_index.unwrap_or(3);
            let blocks = opts.blocks.unwrap_or(1);
            out.push(timed(|| topology::verify_yagita(field, imax, blocks)));
        }
        Check::Lambda => {
            let imax = opts.max_index.unwrap_or(3);
            out.push(timed(|| topology::verify_lambda_formula(field, imax)));
        }
        Check::Theta => out.push(timed(|| topology::verify_theta(field))),
        Check::Delta => {
            let n = opts.n.unwrap_or(p32 * p32);
            let up_to = opts.up_to.unwrap_or_else(|| default_up_to(p, n));
            out.push(timed(|| topology::check_delta_lemma(field, n, up_to)));
        }
        Check::Ln => {
            let n = opts.n.unwrap_or(p32 * p32);
            out.push(timed(|| symfun::check_ln_lemma(field, n)));
        }
        Check::NablaOnto => out.push(timed(|| symfun::check_nabla_onto_2p(field, n))),
        Check::E4 => {
            let kmax = opts.kmax.unwrap_or(10);
            out.push(timed(|| spectral::verify_e4_identities(field, n, kmax)));
        }
        Check::All => out.extend(run_all(field, opts)),
    }
    out.sort_by(|a, b| (&a.report.check, &a.report.params).cmp(&(&b.report.check, &b.report.params)));
    Ok(out)
}

fn run_all(field: PrimeField, opts: &Options) -> Vec<TimedReport> {
    let p = field.p();
    let ranks = desk_ranks(p);
    let max_degree = opts.max_degree.unwrap_or(40);
    let max_blocks = opts.blocks.unwrap_or(2);
    let mut out = vec![
        timed(|| invariants::verify_mui_presentation(field, max_degree)),
        timed(|| invariants::verify_vistoli_integral(field, max_degree.min(24))),
        timed(|| topology::verify_steenrod_ledger(field)),
        timed(|| topology::verify_lambda_formula(field, 3)),
        timed(|| topology::verify_theta(field)),
    ];
    for blocks in 1..=max_blocks {
        out.push(timed(|| topology::verify_main(field, blocks)));
        out.push(timed(|| topology::verify_yagita(field, 3, blocks)));
    }
    for n in ranks {
        out.push(timed(|| symfun::check_nabla_onto_2p(field, n)));
        out.push(timed(|| spectral::verify_e4_identities(field, n, 10)));
        if n as u64 % (p * p) == 0 {
            out.push(timed(|| symfun::check_ln_lemma(field, n)));
        }
        out.push(timed(|| topology::check_delta_lemma(field, n, default_up_to(p, n))));
    }
    for (_, property) in sampler::PROPERTIES {
        out.push(timed(|| property(opts.seed, opts.cases)));
    }
    out
}

/// 0 when everything passed, 2 if any check hit a precondition error, 1 otherwise.
pub fn exit_code(reports: &[TimedReport]) -> i32 {
    if reports.iter().any(|r| r.report.status == Status::PreconditionError) {
        2
    } else if reports.iter().any(|r| r.report.status == Status::Fail) {
        1
    } else {
        0
    }
}

pub fn report_json(r: &TimedReport) -> Value {
    let rep = &r.report;
    let details: Vec<Value> = rep
        .details
        .iter()
        .map(|d| json!({ "label": d.label, "passed": d.passed, "value": d.value }))
        .collect();
    json!({
        "check": rep.check,
        "params": rep.params,
        "status": rep.status.as_str(),
        "details": details,
        "counterexample": rep.counterexample,
        "elapsed_ms": r.elapsed_ms as u64,
    })
}

pub fn render_json(reports: &[TimedReport]) -> String {
    let doc = json!({
        "schema": SCHEMA_VERSION,
        "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&doc).expect("json values serialize")
}

pub fn render_text(reports: &[TimedReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let rep = &r.report;
        let params: Vec<String> = rep.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s.push_str(&format!(
            "[{}] {} ({}) {} ms\n",
            rep.status.as_str(),
            rep.check,
            params.join(", "),
            r.elapsed_ms
        ));
        for d in &rep.details {
            s.push_str(&format!("  {} {}: {}\n", if d.passed { "ok " } else { "ERR" }, d.label, d.value));
        }
        if let Some(c) = &rep.counterexample {
            s.push_str(&format!("  counterexample: {c}\n"));
        }
    }
    s
}
