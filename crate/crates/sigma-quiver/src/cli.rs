//! Command-line front end. Exit codes: 0 when every check passes, 1 on a property failure,
//! 2 on bad input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use sigma_quiver_core::partitions::{classical_type, column_removal, rect_symmetry, row_addition};
use sigma_quiver_core::rational::{self as rat, rng_from_seed};
use sigma_quiver_core::reflection::reflect_point;
use sigma_quiver_core::rep::random_lambda_point;
use sigma_quiver_core::torus::enumerate_models_multi;
use sigma_quiver_core::{Parameter, RepPoint};

use crate::json::{Fixture, InputError, PointJson};
use crate::report::{Caps, SuiteReport};
use crate::suites;

const KOSTKA_CAP: usize = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "sigma-quiver", version, about = "Exact checks on Nakajima quiver varieties and their involutions")]
pub struct Cli {
    /// Seed for every random choice; printed in the report header.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// `small`, `full`, or `rank=R,dim=D,weight=N,samples=S`.
    #[arg(long, global = true, default_value = "full", value_parser = Caps::parse)]
    pub caps: Caps,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SymmetryKind {
    Rect,
    Col,
    Row,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Slice labels μ′ and λ of a type A fixture.
    Slice {
        #[arg(long)]
        input: PathBuf,
    },
    /// Rectangle, column-removal or row-addition symmetry of the labels.
    Symmetry {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: SymmetryKind,
        /// Rows to add for `row`; defaults to the fixture's `rows`, then 1.
        #[arg(long)]
        rows: Option<usize>,
    },
    /// Reflection functor `S_i` at a 1-based vertex.
    Reflect {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        vertex: usize,
        /// Write the reflected point here as JSON.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Torus fixed-point decompositions for `w = w¹ + 2Σ w^k`.
    FixedPoints {
        #[arg(long)]
        input: PathBuf,
    },
    /// Boundary matrix identities.
    Kmatrix,
    /// Run a property suite, or `all`.
    Verify {
        suite: String,
    },
}

/// Outcome of one command, before printing.
struct Outcome {
    pass: bool,
    text: String,
    json: serde_json::Value,
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

pub fn run(cli: Cli) -> ExitCode {
    let header = format!("seed {} caps {}", cli.seed, cli.caps);
    let out = match &cli.command {
        Command::Slice { input } => slice(input),
        Command::Symmetry { input, kind, rows } => symmetry(input, *kind, *rows),
        Command::Reflect { input, vertex, output } => reflect(input, *vertex, output.as_ref(), cli.seed),
        Command::FixedPoints { input } => fixed_points(input),
        Command::Kmatrix => Ok(suite_outcome(vec![suites::kmatrix::run(&cli.caps, cli.seed)])),
        Command::Verify { suite } => verify(suite, &cli.caps, cli.seed),
    };
    let out = match out {
        Ok(o) => o,
        Err(e) => return input_error(e),
    };
    match cli.format {
        Format::Text => {
            println!("{header}");
            print!("{}", out.text);
        }
        Format::Json => {
            let doc = json!({ "seed": cli.seed, "caps": cli.caps, "pass": out.pass, "report": out.json });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    if out.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn to_json<T: Serialize>(t: &T) -> serde_json::Value {
    serde_json::to_value(t).expect("serializable")
}

fn verify(name: &str, caps: &Caps, seed: u64) -> Result<Outcome, InputError> {
    let chosen: Vec<suites::SuiteFn> = if name == "all" {
        suites::SUITES.iter().map(|(_, f)| *f).collect()
    } else {
        vec![suites::lookup(name).ok_or_else(|| {
            let names: Vec<&str> = suites::SUITES.iter().map(|(n, _)| *n).collect();
            InputError::Json(format!("unknown suite {name:?}; expected one of {} or all", names.join(", ")))
        })?]
    };
    // suites are independent; results come back in registry order
    let reports = std::thread::scope(|s| {
        let handles: Vec<_> = chosen.iter().map(|f| s.spawn(move || f(caps, seed))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect::<Vec<_>>()
    });
    Ok(suite_outcome(reports))
}

fn suite_outcome(reports: Vec<SuiteReport>) -> Outcome {
    let pass = reports.iter().all(|r| r.pass());
    let mut text: String = reports.iter().map(|r| r.to_text()).collect();
    if reports.len() > 1 {
        let failed: Vec<&str> = reports.iter().filter(|r| !r.pass()).map(|r| r.suite.as_str()).collect();
        text.push_str(&if failed.is_empty() { "all suites PASS\n".to_string() } else { format!("FAIL in {}\n", failed.join(", ")) });
    }
    Outcome { pass, text, json: to_json(&reports) }
}

fn load(path: &PathBuf) -> Result<Fixture, InputError> {
    Fixture::load(path)
}

fn type_a_dims(f: &Fixture) -> Result<(Vec<i64>, Vec<i64>), InputError> {
    let g = f.graph()?;
    let n = g.num_vertices();
    if g.edges().len() + 1 != n || g.edges().iter().enumerate().any(|(k, &(a, b, _))| (a, b) != (k, k + 1)) {
        return Err(InputError::Json("this command needs a type A graph".into()));
    }
    Ok((f.v.clone(), f.w.clone()))
}

fn slice(path: &PathBuf) -> Result<Outcome, InputError> {
    let f = load(path)?;
    let (v, w) = type_a_dims(&f)?;
    if w.iter().all(|&x| x == 0) {
        return Ok(Outcome { pass: true, text: "w = 0: empty slice, nothing to report\n".into(), json: json!({}) });
    }
    let l = sigma_quiver_core::maffei::slice_labels(&v, &w)?;
    let mut text = format!("μ′ = {}\nλ = {}\nw̃₁ = {}\n", l.mu_prime, l.lambda, l.ambient_dim);
    let mut j = json!({ "mu_prime": l.mu_prime.parts(), "lambda": l.lambda.parts(), "ambient_dim": l.ambient_dim });
    if let Some(d) = &f.delta {
        let t = classical_type(d)?;
        text.push_str(&format!("type {}\n", t.name()));
        j["type"] = json!(t.name());
    }
    Ok(Outcome { pass: true, text, json: j })
}

fn line(ok: bool, what: &str) -> String {
    format!("{} {what}\n", if ok { "PASS" } else { "FAIL" })
}

fn symmetry(path: &PathBuf, kind: SymmetryKind, rows: Option<usize>) -> Result<Outcome, InputError> {
    let f = load(path)?;
    let (v, w) = type_a_dims(&f)?;
    let labels = |m: &sigma_quiver_core::partitions::Partition, l: &sigma_quiver_core::partitions::Partition| format!("(μ′, λ) = ({m}, {l})");
    match kind {
        SymmetryKind::Rect => {
            let r = rect_symmetry(&v, &w, KOSTKA_CAP)?;
            let mu_ok = r.mu_hat_ok && r.mu_prime_hat_ok;
            let k_ok = r.kostka.0 == r.kostka.1 && r.kostka_transposed.0 == r.kostka_transposed.1;
            let text = format!(
                "{}\nhat {}\n{}{}",
                labels(&r.labels.mu_prime, &r.labels.lambda),
                labels(&r.hat_labels.mu_prime, &r.hat_labels.lambda),
                line(mu_ok, "μ_i + μ̂_{n+2−i} = Σw and the μ̂′ formula"),
                line(k_ok, &format!("K_{{λ,μ′}} = K_{{λ̂,μ̂′}} = {}, K_{{μ′,λ}} = K_{{μ̂′,λ̂}} = {}", r.kostka.0, r.kostka_transposed.0)),
            );
            let j = json!({
                "mu_prime": r.labels.mu_prime.parts(), "lambda": r.labels.lambda.parts(),
                "mu_prime_hat": r.hat_labels.mu_prime.parts(), "lambda_hat": r.hat_labels.lambda.parts(),
                "mu_hat_ok": mu_ok, "kostka": [r.kostka.0, r.kostka.1], "kostka_transposed": [r.kostka_transposed.0, r.kostka_transposed.1], "kostka_ok": k_ok,
            });
            Ok(Outcome { pass: mu_ok && k_ok, text, json: j })
        }
        SymmetryKind::Col => {
            let c = column_removal(&v, &w)?;
            let ok = c.formula_ok && c.inverse_ok;
            let text = format!(
                "{}\nextended {}\n{}",
                labels(&c.labels.mu_prime, &c.labels.lambda),
                labels(&c.mu_prime_breve, &c.lambda_breve),
                line(ok, "column removal formula and inverse")
            );
            let j = json!({ "mu_prime": c.labels.mu_prime.parts(), "lambda": c.labels.lambda.parts(),
                "mu_prime_breve": c.mu_prime_breve.parts(), "lambda_breve": c.lambda_breve.parts(), "ok": ok });
            Ok(Outcome { pass: ok, text, json: j })
        }
        SymmetryKind::Row => {
            let a = rows.or(f.rows).unwrap_or(1);
            let r = row_addition(&v, &w, a)?;
            let ok = r.formula_ok && r.inverse_ok;
            let text = format!(
                "{}\nwith {a} rows {}\n{}",
                labels(&r.labels.mu_prime, &r.labels.lambda),
                labels(&r.mu_prime_ddot, &r.lambda_ddot),
                line(ok, "row addition formula and inverse")
            );
            let j = json!({ "rows": a, "mu_prime": r.labels.mu_prime.parts(), "lambda": r.labels.lambda.parts(),
                "mu_prime_ddot": r.mu_prime_ddot.parts(), "lambda_ddot": r.lambda_ddot.parts(), "ok": ok });
            Ok(Outcome { pass: ok, text, json: j })
        }
    }
}

fn reflect(path: &PathBuf, vertex: usize, output: Option<&PathBuf>, seed: u64) -> Result<Outcome, InputError> {
    let f = load(path)?;
    let g = f.graph()?;
    let n = g.num_vertices();
    if vertex == 0 || vertex > n {
        return Err(InputError::Json(format!("vertex {vertex} outside 1..={n}")));
    }
    let zeta_c = f.zeta_c()?;
    let zeta = Parameter::new(f.xi.clone().unwrap_or_else(|| vec![0; n]), zeta_c.clone());
    let pt: RepPoint = match &f.point {
        Some(p) => p.to_point()?,
        None => random_lambda_point(&g, &f.v, &f.w, &zeta_c, &mut rng_from_seed(seed))?,
    };
    if !pt.in_lambda(&zeta_c) {
        return Err(InputError::Json("point does not satisfy μ(x) = ζ_ℂ".into()));
    }
    let r = reflect_point(&pt, vertex - 1, &zeta)?;
    let ok = r.certificate.ok();
    let zc: Vec<String> = r.parameter.zeta_c.iter().map(rat::to_string).collect();
    let text = format!("v′ = {:?}\nξ′ = {:?}\nζ_ℂ′ = {:?}\n{}", r.point.v, r.parameter.xi, zc, line(ok, "(R1)–(R4) certificate"));
    let pj = PointJson::from_point(&r.point);
    if let Some(out) = output {
        let doc = Fixture { name: format!("S_{vertex} image"), xi: Some(r.parameter.xi.clone()), zeta_c: Some(zc.clone()), v: r.point.v.clone(), w: r.point.w.clone(), point: Some(pj.clone()), ..Default::default() };
        std::fs::write(out, serde_json::to_string_pretty(&doc)?).map_err(|e| InputError::Io(format!("{}: {e}", out.display())))?;
    }
    let j = json!({ "v": r.point.v, "xi": r.parameter.xi, "zeta_c": zc, "certificate_ok": ok, "point": to_json(&pj) });
    Ok(Outcome { pass: ok, text, json: j })
}

fn fixed_points(path: &PathBuf) -> Result<Outcome, InputError> {
    let f = load(path)?;
    let g = f.graph()?;
    let n = g.num_vertices();
    let w1 = f.w1.clone().unwrap_or_else(|| vec![0; n]);
    let blocks = f.blocks.clone().ok_or_else(|| InputError::Json("fixture needs `blocks`".into()))?;
    for b in std::iter::once(&w1).chain(&blocks) {
        g.check_dims(b, "w block")?;
    }
    let (w0, _) = g.longest_element()?;
    let ds = enumerate_models_multi(&g, &g.identity_auto(), &w0, &f.v, &w1, &blocks)?;
    let mut text = format!("{} decompositions\n", ds.len());
    for d in &ds {
        text.push_str(&format!("  v¹ = {:?}, blocks {:?}\n", d.v1, d.blocks));
    }
    let j = json!({ "count": ds.len(), "decompositions": ds.iter().map(|d| json!({ "v1": d.v1, "blocks": d.blocks })).collect::<Vec<_>>() });
    Ok(Outcome { pass: true, text, json: j })
}
