//! CSV and JSON output. Report bodies are deterministic; the only
//! run-dependent value, the runtime, lives in a separate header field.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use primebias::verify::VerificationReport;
use primebias::{BiasIntegralResult, SignCertificate};

use crate::Failure;

#[derive(Serialize)]
pub struct SeriesRow {
    pub x: f64,
    pub value: f64,
    pub error_bound: f64,
    pub sign: SignCertificate,
}

fn io(e: impl std::fmt::Display) -> Failure {
    Failure::Io(e.to_string())
}

pub fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(io),
    }
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(io)?;
    s.push('\n');
    Ok(s)
}

fn csv_text<F>(fill: F) -> Result<String, Failure>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    fill(&mut w).map_err(io)?;
    let bytes = w.into_inner().map_err(io)?;
    String::from_utf8(bytes).map_err(io)
}

/// Shortest round-trip form, with an exponent for very large or small values.
fn num(v: f64) -> String {
    format!("{v:?}")
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

pub fn compute_csv(r: &BiasIntegralResult) -> Result<String, Failure> {
    csv_text(|w| {
        w.write_record([
            "fn",
            "smooth",
            "c",
            "x",
            "value",
            "step_part",
            "smooth_part",
            "jump_count",
            "error_bound",
            "sign_certificate",
            "canonical",
        ])?;
        w.write_record([
            r.spec.counting.name().to_string(),
            r.spec.smooth.name().to_string(),
            num(r.spec.c),
            num(r.spec.x),
            num(r.value),
            num(r.step_part),
            num(r.smooth_part),
            r.jump_count.to_string(),
            num(r.error_bound),
            r.sign_certificate.as_str().to_string(),
            r.canonical.to_string(),
        ])
    })
}

pub fn series_csv(rows: &[SeriesRow]) -> Result<String, Failure> {
    csv_text(|w| {
        w.write_record(["x", "value", "error_bound", "sign"])?;
        for r in rows {
            w.write_record([num(r.x), num(r.value), num(r.error_bound), r.sign.as_str().to_string()])?;
        }
        Ok(())
    })
}

/// `{"runtime_seconds": .., "report": {..}}`; everything under `report` is
/// reproducible.
pub fn verify_json(report: &VerificationReport) -> Result<String, Failure> {
    json(&serde_json::json!({
        "runtime_seconds": report.runtime_seconds,
        "report": report,
    }))
}

/// A `# runtime_seconds=` line, `# key=value` lines echoing the
/// configuration, then one CSV row per check.
pub fn verify_csv(report: &VerificationReport) -> Result<String, Failure> {
    let mut head = format!("# runtime_seconds={:.3}\n", report.runtime_seconds);
    let config = serde_json::to_value(&report.config).map_err(io)?;
    if let serde_json::Value::Object(map) = config {
        for (k, v) in map {
            let v = match v {
                serde_json::Value::Null => String::new(),
                serde_json::Value::String(s) => s,
                serde_json::Value::Array(items) => items
                    .iter()
                    .map(|i| i.as_str().map_or_else(|| i.to_string(), str::to_string))
                    .collect::<Vec<_>>()
                    .join(","),
                other => other.to_string(),
            };
            head.push_str(&format!("# {k}={v}\n"));
        }
    }
    let body = csv_text(|w| {
        w.write_record([
            "check_id",
            "anchor",
            "range_lo",
            "range_hi",
            "status",
            "worst_margin",
            "worst_location",
            "evaluations",
            "detail",
        ])?;
        for c in &report.checks {
            w.write_record([
                c.check_id.to_string(),
                c.anchor.to_string(),
                num(c.range.0),
                num(c.range.1),
                c.status.as_str().to_string(),
                opt(c.worst_margin),
                opt(c.worst_location),
                c.evaluations.to_string(),
                c.detail.clone(),
            ])?;
        }
        Ok(())
    })?;
    Ok(head + &body)
}
