use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use sh3_core::algebra::Element;
use sh3_core::cyclotomic::CycNum;
use sh3_core::dunkl::DunklReport;
use sh3_core::error::Sh3Error;
use sh3_core::expr::parse_element;
use sh3_core::par::Exec;
use sh3_core::random::{random_element, rng};
use sh3_core::rational::Rational;
use sh3_core::structure::{
    center_basis, commutant_slice, replay_certificate, simplicity_certificate, SimplicityCertificate,
};
use sh3_core::supertrace::{gram_up_to_degree, str_eval, GramParams, GramReport};
use sh3_core::verify::{core_suite, dunkl_suite, dunkl_suite_report, sl2_suite, SuiteReport};

use crate::report::{Outcome, Reporter};
use crate::{Cli, Command, Format, NuArgs, Suite};

type Run = std::result::Result<Outcome, (Outcome, String)>;

fn usage(msg: impl Into<String>) -> (Outcome, String) {
    (Outcome::Usage, msg.into())
}

fn guard(cli: &Cli, what: &str, degree: u32) -> std::result::Result<(), (Outcome, String)> {
    if degree > cli.max_degree_guard && !cli.force {
        return Err(usage(format!(
            "{what} {degree} exceeds the degree guard {}; raise SH3_MAX_DEGREE or pass --force",
            cli.max_degree_guard
        )));
    }
    Ok(())
}

fn parse_expr(text: &str) -> std::result::Result<Element, (Outcome, String)> {
    parse_element(text).map_err(|e| usage(e.to_string()))
}

fn parse_params(text: &str) -> std::result::Result<GramParams, (Outcome, String)> {
    if text.trim() == "symbolic" {
        return Ok(GramParams::Symbolic);
    }
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [a, b] = parts.as_slice() else {
        return Err(usage(format!("--params expects \"symbolic\" or \"S1,S2\", got {text:?}")));
    };
    let num = |s: &str| s.parse::<CycNum>().map_err(|e| usage(format!("bad parameter {s:?}: {e}")));
    Ok(GramParams::Numeric(num(a)?, num(b)?))
}

fn parse_nus(args: &NuArgs) -> std::result::Result<Vec<Rational>, (Outcome, String)> {
    args.nu.iter().map(|s| s.trim().parse::<Rational>().map_err(|e| usage(format!("bad nu {s:?}: {e}")))).collect()
}

fn core_failure(e: Sh3Error) -> (Outcome, String) {
    match e {
        Sh3Error::InvalidInput(_) | Sh3Error::Domain(_) => (Outcome::Usage, e.to_string()),
        Sh3Error::Certificate(_) => (Outcome::CertificateFailed, e.to_string()),
        _ => (Outcome::VerificationFailed, e.to_string()),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let (name, inputs) = describe(&cli.command);
    let mut reporter = Reporter::new(name, inputs);
    let result = match &cli.command {
        Command::Verify { max_degree, suite, nu } => verify(cli, &reporter, *max_degree, *suite, nu, exec),
        Command::Str { expr, params } => supertrace(&reporter, expr, params),
        Command::Gram { degree, params, format } => gram(cli, &reporter, *degree, params, *format, exec),
        Command::Center { degree } => center(cli, &reporter, *degree, exec),
        Command::Commutant { degree, source } => commutant(cli, &reporter, *degree, *source, exec),
        Command::Certificate { seed, random_element_degree, expr, replay, out } => {
            reporter.rng_seed = Some(*seed);
            certificate(cli, &reporter, *seed, *random_element_degree, expr.as_deref(), replay.as_deref(), out.as_deref())
        }
        Command::DunklCheck { nu } => dunkl_check(cli, &reporter, nu, exec),
    };
    match result {
        Ok(outcome) => outcome,
        Err((outcome, msg)) => reporter.error(outcome, &msg),
    }
}

fn describe(command: &Command) -> (&'static str, serde_json::Value) {
    match command {
        Command::Verify { max_degree, suite, nu } => (
            "verify",
            json!({ "max_degree": max_degree, "suite": format!("{suite:?}").to_lowercase(), "nu": nu.nu, "poly_degree": nu.poly_degree }),
        ),
        Command::Str { expr, params } => ("str", json!({ "expr": expr, "params": params })),
        Command::Gram { degree, params, format } => {
            ("gram", json!({ "degree": degree, "params": params, "format": format!("{format:?}").to_lowercase() }))
        }
        Command::Center { degree } => ("center", json!({ "degree": degree })),
        Command::Commutant { degree, source } => ("commutant", json!({ "degree": degree, "source": source })),
        Command::Certificate { seed, random_element_degree, expr, replay, out } => (
            "certificate",
            json!({ "seed": seed, "random_element_degree": random_element_degree, "expr": expr, "replay": replay, "out": out }),
        ),
        Command::DunklCheck { nu } => ("dunkl-check", json!({ "nu": nu.nu, "poly_degree": nu.poly_degree })),
    }
}

fn verify(cli: &Cli, reporter: &Reporter, max_degree: u32, suite: Suite, nu: &NuArgs, exec: Exec) -> Run {
    guard(cli, "--max-degree", max_degree)?;
    let mut suites: Vec<SuiteReport> = Vec::new();
    if matches!(suite, Suite::All | Suite::Core) {
        suites.push(core_suite(max_degree, exec));
    }
    if matches!(suite, Suite::All | Suite::Sl2) {
        suites.push(sl2_suite());
    }
    if matches!(suite, Suite::All | Suite::Dunkl) {
        guard(cli, "--poly-degree", nu.poly_degree)?;
        let reports = dunkl_suite(&parse_nus(nu)?, nu.poly_degree, exec).map_err(core_failure)?;
        suites.push(dunkl_suite_report(&reports));
    }
    let failures: Vec<String> =
        suites.iter().flat_map(|s| s.failures().into_iter().map(move |f| format!("{}: {f}", s.suite))).collect();
    for f in &failures {
        eprintln!("failed relation: {f}");
    }
    let outcome = if failures.is_empty() { Outcome::Success } else { Outcome::VerificationFailed };
    let summary: Vec<_> =
        suites.iter().map(|s| json!({ "suite": s.suite, "checks": s.checks.len(), "passed": s.passed })).collect();
    Ok(reporter.emit(outcome, json!({ "summary": summary, "failures": failures, "suites": suites })))
}

fn supertrace(reporter: &Reporter, expr: &str, params: &str) -> Run {
    let f = parse_expr(expr)?;
    let params = parse_params(params)?;
    let value = str_eval(&f).map_err(core_failure)?;
    let shown = match &params {
        GramParams::Symbolic => value.to_string(),
        GramParams::Numeric(s1, s2) => value.eval(s1, s2).to_string(),
    };
    Ok(reporter.emit(
        Outcome::Success,
        json!({ "element": f, "value": shown, "s1_coef": value.s1_coef.to_string(), "s2_coef": value.s2_coef.to_string() }),
    ))
}

#[derive(Serialize)]
struct GramOut<'a> {
    #[serde(flatten)]
    report: &'a GramReport,
    full_rank: bool,
    /// Entries at the requested parameters; absent for symbolic ones.
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<Vec<Vec<String>>>,
}

fn gram_values(report: &GramReport, params: &GramParams) -> Option<Vec<Vec<String>>> {
    match params {
        GramParams::Symbolic => None,
        GramParams::Numeric(s1, s2) => Some(
            report.entries.iter().map(|row| row.iter().map(|v| v.eval(s1, s2).to_string()).collect()).collect(),
        ),
    }
}

/// Header of labels, then one row per basis element; cells are evaluated
/// numbers or linear forms in S1, S2.
pub fn gram_csv(report: &GramReport, params: &GramParams) -> Result<String, csv::Error> {
    let cells = gram_values(report, params).unwrap_or_else(|| {
        report.entries.iter().map(|row| row.iter().map(|v| v.to_string()).collect()).collect()
    });
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(std::iter::once("").chain(report.labels.iter().map(String::as_str)))?;
    for (label, row) in report.labels.iter().zip(&cells) {
        w.write_record(std::iter::once(label.as_str()).chain(row.iter().map(String::as_str)))?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn gram(cli: &Cli, reporter: &Reporter, degree: u32, params: &str, format: Format, exec: Exec) -> Run {
    guard(cli, "--degree", degree)?;
    let params = parse_params(params)?;
    let report = gram_up_to_degree(degree, &params, exec).map_err(core_failure)?;
    match format {
        Format::Csv => {
            let text = gram_csv(&report, &params).map_err(|e| (Outcome::VerificationFailed, e.to_string()))?;
            print!("{text}");
            eprintln!("rank {} of {}", report.rank, report.size);
            Ok(Outcome::Success)
        }
        Format::Json => {
            let out = GramOut { report: &report, full_rank: report.nullity == 0, values: gram_values(&report, &params) };
            Ok(reporter.emit(Outcome::Success, out))
        }
    }
}

fn center(cli: &Cli, reporter: &Reporter, degree: u32, exec: Exec) -> Run {
    guard(cli, "--degree", degree)?;
    let basis = center_basis(degree, exec);
    let trivial = basis.len() == 1 && basis[0] == Element::unit();
    Ok(reporter.emit(Outcome::Success, json!({ "dimension": basis.len(), "basis": basis, "only_scalars": trivial })))
}

fn commutant(cli: &Cli, reporter: &Reporter, degree: u32, source: Option<u32>, exec: Exec) -> Run {
    guard(cli, "--degree", degree)?;
    let source = source.unwrap_or(degree + 4);
    if source < degree {
        return Err(usage("--source must be at least --degree"));
    }
    guard(cli, "--degree", source.saturating_sub(4))?;
    let slice = commutant_slice(degree, source, exec);
    Ok(reporter.emit(Outcome::Success, slice))
}

fn certificate(
    cli: &Cli,
    reporter: &Reporter,
    seed: u64,
    random_degree: Option<u32>,
    expr: Option<&str>,
    replay: Option<&Path>,
    out: Option<&Path>,
) -> Run {
    if let Some(path) = replay {
        let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        let cert: SimplicityCertificate = serde_json::from_str(&text)
            .or_else(|_| {
                serde_json::from_str::<serde_json::Value>(&text)
                    .ok()
                    .and_then(|v| v.pointer("/result/certificate").cloned())
                    .ok_or(())
                    .and_then(|v| serde_json::from_value(v).map_err(|_| ()))
            })
            .map_err(|_| usage(format!("{} does not hold a certificate", path.display())))?;
        let report = replay_certificate(&cert).map_err(core_failure)?;
        return Ok(reporter.emit(Outcome::Success, json!({ "replayed": path, "seed": cert.seed, "report": report })));
    }
    let element = match (random_degree, expr) {
        (Some(d), None) => {
            guard(cli, "--random-element-degree", d)?;
            if d == 0 {
                return Err(usage("--random-element-degree must be positive"));
            }
            random_element(&mut rng(seed), d, 3)
        }
        (None, Some(text)) => parse_expr(text)?,
        _ => return Err(usage("pass one of --random-element-degree, --expr or --replay")),
    };
    guard(cli, "element degree", element.degree())?;
    let cert = match simplicity_certificate(&element, seed) {
        Ok(c) => c,
        Err(e) => {
            let (outcome, msg) = core_failure(e);
            eprintln!("error: {msg}");
            return Ok(reporter.emit(outcome, json!({ "seed": element, "error": msg })));
        }
    };
    let replay = replay_certificate(&cert).map_err(core_failure)?;
    let summary = json!({
        "seed": cert.seed,
        "retries": cert.retries,
        "steps": cert.steps.len(),
        "final_element": cert.final_element,
        "replay": replay,
    });
    match out {
        Some(path) => {
            let text = serde_json::to_string_pretty(&cert).expect("certificates serialize");
            fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(reporter.emit(Outcome::Success, json!({ "summary": summary, "written_to": path })))
        }
        None => Ok(reporter.emit(Outcome::Success, json!({ "summary": summary, "certificate": cert }))),
    }
}

fn dunkl_check(cli: &Cli, reporter: &Reporter, nu: &NuArgs, exec: Exec) -> Run {
    guard(cli, "--poly-degree", nu.poly_degree)?;
    let reports: Vec<DunklReport> = dunkl_suite(&parse_nus(nu)?, nu.poly_degree, exec).map_err(core_failure)?;
    let failures = dunkl_suite_report(&reports).failures().into_iter().map(String::from).collect::<Vec<_>>();
    for f in &failures {
        eprintln!("failed relation: {f}");
    }
    let outcome = if failures.is_empty() { Outcome::Success } else { Outcome::VerificationFailed };
    Ok(reporter.emit(
        outcome,
        json!({ "nu": nu.nu, "poly_degree": nu.poly_degree, "failures": failures, "checks": reports }),
    ))
}
