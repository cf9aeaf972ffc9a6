use std::fmt::Write as _;

use permcode::asymptotics::{
    erdos_bound_check, hardy_ramanujan_c, kerov_bound_check_with_cap, kerov_row_bound_check_with_cap,
    lemma_scan_with_cap, pmax_estimate_plancherel, pmax_estimate_schur_weyl, preferred_estimator,
    theorem1_sweep, LemmaKind, SweepConfig, SweepRow,
};
use permcode::coding::{
    classical_success, info_bound, quantum_pmax_exact_with_cap, CodingInstance, CodingReport, Method,
    Probability,
};
use permcode::numeric::{format_decimal, format_rational};
use permcode::qsim::{classical_channel_mc, run_suite, Suite};
use permcode::report::{parse_n_list, write_csv, Metadata, ReportRow, MAX_LIST_N};
use permcode::young::{sample_plancherel_with, sample_schur_weyl_with, seeded_rng, DEFAULT_ENUMERATION_CAP};
use permcode::Error;
use serde_json::json;

use crate::args::{BoundKind, Cli, Command, Estimator, Format, Measure};

const CAP_ENV: &str = "PERMCODE_CAP";
const CAP_RANGE: std::ops::RangeInclusive<u32> = 1..=200;

pub enum Failure {
    /// Bad flags or a request beyond a cap: exit status 1.
    Usage(String),
    /// A broken internal invariant: exit status 2.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Internal(e.to_string()),
            Error::Capacity { .. } => Failure::Usage(format!(
                "{e}; raise it with --cap or {CAP_ENV} (valid range {}..={})",
                CAP_RANGE.start(),
                CAP_RANGE.end()
            )),
            other => Failure::Usage(other.to_string()),
        }
    }
}

pub struct Output {
    pub text: String,
    /// False only when a verification suite reports a failing check.
    pub all_passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, all_passed: true }
    }
}

/// The `--cap` flag wins, then the environment variable, then the default.
fn resolve_cap(flag: Option<u32>) -> Result<u32, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV) {
        Ok(raw) => match raw.trim().parse::<u32>() {
            Ok(cap) if CAP_RANGE.contains(&cap) => Ok(cap),
            _ => Err(Failure::Usage(format!(
                "{CAP_ENV}={raw:?} is not an integer in {}..={}",
                CAP_RANGE.start(),
                CAP_RANGE.end()
            ))),
        },
        Err(_) => Ok(DEFAULT_ENUMERATION_CAP),
    }
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    let cap = resolve_cap(cli.common.cap)?;
    let seed = cli.common.seed;
    let default_format = match cli.command {
        Command::Verify { .. } => Format::Json,
        _ => Format::Table,
    };
    let format = cli.common.format.unwrap_or(default_format);

    let mut meta = Metadata::new(command_name(&cli.command));
    meta.set("seed", seed).set("cap", cap).set("format", format_name(format));

    match &cli.command {
        &Command::Pmax { n, d, method, samples } => pmax(&mut meta, format, n, d, method, samples, seed, cap),
        &Command::Classical { n, d, trials } => classical(&mut meta, format, n, d, trials, seed),
        Command::Sweep { r, n_list, samples } => sweep(&mut meta, format, *r, n_list, *samples, seed, cap),
        &Command::Sample { n, d, measure, samples } => sample(&mut meta, format, n, d, measure, samples, seed),
        Command::Verify { suite } => verify(&mut meta, format, suite, seed),
        &Command::Bounds { kind, n, d, a, c } => bounds(&mut meta, format, kind, n, d, a, c, cap),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Pmax { .. } => "pmax",
        Command::Classical { .. } => "classical",
        Command::Sweep { .. } => "sweep",
        Command::Sample { .. } => "sample",
        Command::Verify { .. } => "verify",
        Command::Bounds { .. } => "bounds",
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Csv => "csv",
        Format::Json => "json",
        Format::Table => "table",
    }
}

fn json_document(meta: &Metadata, body: serde_json::Value) -> String {
    let mut doc = json!({ "metadata": meta.to_json() });
    if let (Some(doc), serde_json::Value::Object(body)) = (doc.as_object_mut(), body) {
        doc.extend(body);
    }
    serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n"
}

/// Quotes a CSV field when it contains a delimiter or quote.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn key_value_csv(meta: &Metadata, pairs: &[(&str, String)]) -> String {
    let mut out = meta.csv_header();
    out += &pairs.iter().map(|(k, _)| csv_field(k)).collect::<Vec<_>>().join(",");
    out.push('\n');
    out += &pairs.iter().map(|(_, v)| csv_field(v)).collect::<Vec<_>>().join(",");
    out.push('\n');
    out
}

fn key_value_table(meta: &Metadata, pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = meta.csv_header();
    for (k, v) in pairs {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

fn probability_text(p: &Probability) -> String {
    match p {
        Probability::Exact { value } => format_rational(value),
        Probability::Estimate { value, stderr } => {
            format!("{} (stderr {})", format_decimal(*value), format_decimal(*stderr))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn pmax(
    meta: &mut Metadata,
    format: Format,
    n: u32,
    d: u32,
    method: Estimator,
    samples: u64,
    seed: u64,
    cap: u32,
) -> Result<Output, Failure> {
    let instance = CodingInstance::new(n, d)?;
    let method = match method {
        Estimator::Auto if n <= cap => Method::ExactEnumeration,
        Estimator::Auto => preferred_estimator(instance.ratio()),
        Estimator::Exact => Method::ExactEnumeration,
        Estimator::Plancherel => Method::PlancherelMc,
        Estimator::SchurWeyl => Method::SchurWeylMc,
    };
    let report = match method {
        Method::ExactEnumeration => quantum_pmax_exact_with_cap(&instance, cap)?,
        sampled => {
            let (value, stderr) = if sampled == Method::PlancherelMc {
                let e = pmax_estimate_plancherel(n, d, samples, seed)?;
                (e.value, e.stderr)
            } else {
                let e = pmax_estimate_schur_weyl(n, d, samples, seed)?;
                let p = e.p_max.ok_or_else(|| {
                    Failure::Usage(format!(
                        "--method schur-weyl: d^N/N! is not representable in double precision at --n {n} --d {d}; \
                         use --method plancherel"
                    ))
                })?;
                (p.value, p.stderr)
            };
            meta.set("samples", samples);
            CodingReport {
                instance,
                p_quantum: Probability::Estimate { value, stderr },
                p_classical: classical_success(&instance),
                p_info_bound: info_bound(&instance),
                dim_w: None,
                method: sampled,
                min_sides: None,
            }
        }
    };
    meta.set("method", report.method).set("n", n).set("d", d);

    let text = match format {
        Format::Table => meta.csv_header() + &probability_text(&report.p_quantum) + "\n",
        Format::Csv => write_csv(meta, &[ReportRow::from(&report)]),
        Format::Json => json_document(meta, json!({ "report": report })),
    };
    Ok(Output::ok(text))
}

fn classical(
    meta: &mut Metadata,
    format: Format,
    n: u32,
    d: u32,
    trials: Option<u64>,
    seed: u64,
) -> Result<Output, Failure> {
    let instance = CodingInstance::new(n, d)?;
    let exact = classical_success(&instance);
    let simulated = trials.map(|t| classical_channel_mc(n, d, t, seed)).transpose()?;
    meta.set("method", if simulated.is_some() { "exact+monte-carlo" } else { "exact" })
        .set("n", n)
        .set("d", d);

    let mut pairs = vec![("p_classical", format_rational(&exact))];
    if let Some(s) = &simulated {
        pairs.push(("trials", s.trials.to_string()));
        pairs.push(("successes", s.successes.to_string()));
        pairs.push(("rate", format_decimal(s.rate)));
        pairs.push(("stderr", format_decimal(s.stderr)));
    }
    let text = match format {
        Format::Table => key_value_table(meta, &pairs),
        Format::Csv => key_value_csv(meta, &pairs),
        Format::Json => json_document(
            meta,
            json!({ "p_classical": exact.to_string(), "p_classical_decimal": format_decimal(permcode::numeric::rational_to_f64(&exact)), "simulation": simulated }),
        ),
    };
    Ok(Output::ok(text))
}

fn sweep(
    meta: &mut Metadata,
    format: Format,
    r: f64,
    n_list: &str,
    samples: u64,
    seed: u64,
    cap: u32,
) -> Result<Output, Failure> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Failure::Usage(format!("--r {r}: must be a finite number greater than 0")));
    }
    let ns = parse_n_list(n_list).map_err(|e| {
        Failure::Usage(format!(
            "--n {n_list:?}: {e}; expected entries in 1..={MAX_LIST_N}, e.g. \"10,20,30\" or \"10..60:10\""
        ))
    })?;
    let rows = theorem1_sweep(r, &ns, SweepConfig { samples, seed, cap })?;
    let method = if rows.iter().all(|row| row.method == Method::ExactEnumeration) {
        Method::ExactEnumeration.to_string()
    } else {
        format!("exact-enumeration<={cap},{}", preferred_estimator(r))
    };
    meta.set("method", method).set("r", format_decimal(r)).set("samples", samples);

    let text = match format {
        Format::Csv => write_csv(meta, &rows.iter().map(ReportRow::from).collect::<Vec<_>>()),
        Format::Json => json_document(meta, json!({ "rows": rows })),
        Format::Table => sweep_table(meta, &rows),
    };
    Ok(Output::ok(text))
}

fn sweep_table(meta: &Metadata, rows: &[SweepRow]) -> String {
    let mut out = meta.csv_header();
    let _ = writeln!(
        out,
        "{:>6} {:>6} {:<18} {:>20} {:>20} {:>20} {:>20} {:>20}",
        "n", "d", "method", "p_quantum", "stderr", "p_classical", "info_bound", "ratio_to_bound"
    );
    for row in rows {
        let f = |x: f64| format_decimal(x);
        let _ = writeln!(
            out,
            "{:>6} {:>6} {:<18} {:>20} {:>20} {:>20} {:>20} {:>20}",
            row.n_boxes,
            row.n_colors,
            row.method.as_str(),
            f(row.p_quantum.value_f64()),
            f(row.p_quantum.stderr()),
            f(permcode::numeric::rational_to_f64(&row.p_classical)),
            f(permcode::numeric::rational_to_f64(&row.info_bound)),
            f(row.ratio_to_bound),
        );
    }
    out
}

fn sample(
    meta: &mut Metadata,
    format: Format,
    n: u32,
    d: u32,
    measure: Measure,
    samples: u64,
    seed: u64,
) -> Result<Output, Failure> {
    let mut rng = seeded_rng(seed);
    let diagrams: Vec<_> = (0..samples)
        .map(|_| match measure {
            Measure::Plancherel => sample_plancherel_with(&mut rng, n),
            Measure::SchurWeyl => sample_schur_weyl_with(&mut rng, n, d),
        })
        .collect();
    let method = match measure {
        Measure::Plancherel => "rsk-plancherel",
        Measure::SchurWeyl => "rsk-schur-weyl",
    };
    meta.set("method", method).set("n", n).set("samples", samples);
    if measure == Measure::SchurWeyl {
        meta.set("d", d);
    }

    let text = match format {
        Format::Table => {
            let mut out = meta.csv_header();
            for dgm in &diagrams {
                let _ = writeln!(out, "{dgm}");
            }
            out
        }
        Format::Csv => {
            let mut out = meta.csv_header() + "index,diagram\n";
            for (i, dgm) in diagrams.iter().enumerate() {
                let _ = writeln!(out, "{i},{}", csv_field(&dgm.to_string()));
            }
            out
        }
        Format::Json => json_document(meta, json!({ "diagrams": diagrams })),
    };
    Ok(Output::ok(text))
}

fn verify(meta: &mut Metadata, format: Format, suite: &str, seed: u64) -> Result<Output, Failure> {
    let parsed: Suite = suite
        .parse()
        .map_err(|_| Failure::Usage(format!("--suite {suite:?}: expected one of n3, symmetrize, optimal, all")))?;
    let checks = run_suite(parsed, seed)?;
    let all_passed = checks.iter().all(|c| c.pass);
    meta.set("method", "matrix-simulation").set("suite", suite);

    let text = match format {
        Format::Json => json_document(meta, json!({ "suite": suite, "all_passed": all_passed, "checks": checks })),
        Format::Csv => {
            let mut out = meta.csv_header() + "check_name,max_residual,tolerance,pass\n";
            for c in &checks {
                let _ = writeln!(
                    out,
                    "{},{:e},{:e},{}",
                    csv_field(&c.check_name),
                    c.max_residual,
                    c.tolerance,
                    c.pass
                );
            }
            out
        }
        Format::Table => {
            let mut out = meta.csv_header();
            let width = checks.iter().map(|c| c.check_name.len()).max().unwrap_or(0);
            for c in &checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{status}  {:<width$}  residual {:.3e}  tolerance {:.1e}",
                    c.check_name, c.max_residual, c.tolerance
                );
            }
            out
        }
    };
    Ok(Output { text, all_passed })
}

#[allow(clippy::too_many_arguments)]
fn bounds(
    meta: &mut Metadata,
    format: Format,
    kind: BoundKind,
    n: u32,
    d: u32,
    a: f64,
    c: Option<f64>,
    cap: u32,
) -> Result<Output, Failure> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Failure::Usage(format!("--a {a}: must be a finite number greater than 0")));
    }
    if let Some(c) = c {
        if !(c.is_finite() && c > 0.0) {
            return Err(Failure::Usage(format!("--c {c}: must be a finite number greater than 0")));
        }
    }
    let (method, body, pairs) = match kind {
        BoundKind::Kerov | BoundKind::KerovRow => {
            let r = if kind == BoundKind::Kerov {
                kerov_bound_check_with_cap(n, cap)?
            } else {
                kerov_row_bound_check_with_cap(n, d, cap)?
            };
            let pairs = vec![
                ("bound", r.name.to_string()),
                ("n", r.n.to_string()),
                ("d", r.d.map(|d| d.to_string()).unwrap_or_default()),
                ("diagrams", r.diagrams.to_string()),
                ("vacuous", r.vacuous.to_string()),
                ("violations", r.violations.to_string()),
                ("min_log_slack", format_decimal(r.min_log_slack)),
                ("max_log_slack", format_decimal(r.max_log_slack)),
                ("holds", r.holds().to_string()),
            ];
            ("exact-enumeration", json!({ "report": r, "holds": r.holds() }), pairs)
        }
        BoundKind::Erdos => {
            let c = c.unwrap_or_else(hardy_ramanujan_c);
            let r = erdos_bound_check(n, c)?;
            let pairs = vec![
                ("bound", "erdos".to_string()),
                ("n_max", r.n_max.to_string()),
                ("c", format_decimal(r.erdos_c)),
                ("violations", r.violations.len().to_string()),
                ("max_log_excess", format_decimal(r.max_log_excess)),
                ("p_at_n_max", r.p_at_n_max.to_string()),
                ("holds", r.holds().to_string()),
            ];
            ("partition-recurrence", json!({ "report": r, "holds": r.holds() }), pairs)
        }
        BoundKind::Lemma1 | BoundKind::Lemma2 => {
            let lk = if kind == BoundKind::Lemma1 { LemmaKind::ShortColumns } else { LemmaKind::ShortRows };
            let r = lemma_scan_with_cap(lk, n, d, a, cap)?;
            let pairs = vec![
                ("bound", if kind == BoundKind::Lemma1 { "lemma1" } else { "lemma2" }.to_string()),
                ("n", r.n.to_string()),
                ("d", r.d.to_string()),
                ("a", format_decimal(r.a_threshold)),
                ("threshold", format_decimal(r.threshold)),
                ("short", r.short.to_string()),
                ("long", r.long.to_string()),
                ("violations", r.violations.to_string()),
                ("ties", r.ties.to_string()),
                ("examples", r.examples.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")),
                ("holds", r.holds().to_string()),
            ];
            ("exact-enumeration", json!({ "report": r, "holds": r.holds() }), pairs)
        }
    };
    meta.set("method", method);

    let text = match format {
        Format::Table => key_value_table(meta, &pairs),
        Format::Csv => key_value_csv(meta, &pairs),
        Format::Json => json_document(meta, body),
    };
    Ok(Output::ok(text))
}
