//! Output records. Every JSON record carries `schema: 1`; CSV output has a
//! header row and a fixed column set per command.

use std::io::Write;

use radii_core::domains::{AlphaResult, AlphaSource, TargetDomain};
use radii_core::normalize::NormalizedFunction;
use radii_core::solver::{Derivation, Problem, RadiusResult};
use radii_core::verify::CertificateReport;
use radii_core::zeros::ZeroTable;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub trait Record: Serialize {
    fn header() -> &'static [&'static str];
    fn row(&self) -> Vec<String>;
}

fn num(v: f64) -> String {
    format!("{v:e}")
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn domain_params(d: &TargetDomain) -> Value {
    let mut v = serde_json::to_value(d).unwrap_or(Value::Null);
    if let Some(m) = v.as_object_mut() {
        m.remove("domain");
    }
    v
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusRecord {
    pub schema: u32,
    pub family: String,
    pub params: Value,
    pub form: String,
    pub problem: String,
    pub domain: Option<String>,
    pub domain_params: Option<Value>,
    pub alpha_or_epsilon: f64,
    pub alpha_source: Option<AlphaSource>,
    pub radius: f64,
    pub residual: f64,
    pub bracket: [f64; 2],
    pub iterations: usize,
    pub derivation: Derivation,
    pub source_notes: Vec<String>,
}

impl RadiusRecord {
    pub fn new(nf: &NormalizedFunction, problem: &Problem, r: &RadiusResult) -> Self {
        let (domain, dparams) = match problem {
            Problem::Starlike { domain } | Problem::Convex { domain } => {
                (Some(domain.name().to_string()), Some(domain_params(domain)))
            }
            Problem::StronglyStarlike { .. } => (None, None),
        };
        RadiusRecord {
            schema: SCHEMA,
            family: nf.family().name().to_string(),
            params: nf.family().params_json(),
            form: nf.form_label().to_string(),
            problem: problem.name().to_string(),
            domain,
            domain_params: dparams,
            alpha_or_epsilon: r.alpha_used.or(r.epsilon).unwrap_or(f64::NAN),
            alpha_source: r.alpha_source,
            radius: r.radius,
            residual: r.residual,
            bracket: [r.bracket.0, r.bracket.1],
            iterations: r.iterations,
            derivation: r.derivation,
            source_notes: r.notes.clone(),
        }
    }
}

impl Record for RadiusRecord {
    fn header() -> &'static [&'static str] {
        &[
            "schema",
            "family",
            "params",
            "form",
            "problem",
            "domain",
            "alpha_or_epsilon",
            "radius",
            "residual",
            "bracket_lo",
            "bracket_hi",
            "iterations",
            "derivation",
            "source_notes",
        ]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.schema.to_string(),
            self.family.clone(),
            self.params.to_string(),
            self.form.clone(),
            self.problem.clone(),
            self.domain.clone().unwrap_or_default(),
            num(self.alpha_or_epsilon),
            num(self.radius),
            num(self.residual),
            num(self.bracket[0]),
            num(self.bracket[1]),
            self.iterations.to_string(),
            serde_json::to_value(self.derivation)
                .ok()
                .and_then(|v| v.as_str().map(String::from))
                .unwrap_or_default(),
            self.source_notes.join("; "),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub schema: u32,
    pub family: String,
    pub params: Value,
    pub kind: String,
    pub n: usize,
    pub zero: f64,
    pub residual: f64,
    pub double: bool,
}

impl ZeroRecord {
    pub fn from_table(t: &ZeroTable) -> Vec<Self> {
        t.zeros()
            .iter()
            .zip(t.residuals())
            .zip(t.multiplicity_flags())
            .enumerate()
            .map(|(i, ((&zero, &residual), &double))| ZeroRecord {
                schema: SCHEMA,
                family: t.family().name().to_string(),
                params: t.family().params_json(),
                kind: t.kind().name().to_string(),
                n: i + 1,
                zero,
                residual,
                double,
            })
            .collect()
    }
}

impl Record for ZeroRecord {
    fn header() -> &'static [&'static str] {
        &["family", "params", "kind", "n", "zero", "residual"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.params.to_string(),
            self.kind.clone(),
            self.n.to_string(),
            format!("{:.16e}", self.zero),
            num(self.residual),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaRecord {
    pub schema: u32,
    pub domain: String,
    pub params: Value,
    pub closed_form: f64,
    pub numeric: Option<f64>,
    pub difference: Option<f64>,
    pub boundary_argmin: Option<f64>,
    pub printed: Option<f64>,
    pub warning: Option<String>,
}

impl AlphaRecord {
    pub fn new(d: &TargetDomain, closed: &AlphaResult, numeric: Option<&AlphaResult>) -> Self {
        AlphaRecord {
            schema: SCHEMA,
            domain: d.name().to_string(),
            params: domain_params(d),
            closed_form: closed.alpha,
            numeric: numeric.map(|n| n.alpha),
            difference: numeric.map(|n| (n.alpha - closed.alpha).abs()),
            boundary_argmin: numeric.and_then(|n| n.boundary_argmin),
            printed: closed.printed,
            warning: closed.warning.clone(),
        }
    }
}

impl Record for AlphaRecord {
    fn header() -> &'static [&'static str] {
        &[
            "schema",
            "domain",
            "params",
            "closed_form",
            "numeric",
            "difference",
            "printed",
            "warning",
        ]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.schema.to_string(),
            self.domain.clone(),
            self.params.to_string(),
            format!("{:.16e}", self.closed_form),
            opt(self.numeric),
            opt(self.difference),
            opt(self.printed),
            self.warning.clone().unwrap_or_default(),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub schema: u32,
    pub check: String,
    #[serde(flatten)]
    pub report: CertificateReport,
}

impl CheckRecord {
    pub fn new(check: &str, report: CertificateReport) -> Self {
        CheckRecord {
            schema: SCHEMA,
            check: check.to_string(),
            report,
        }
    }
}

impl Record for CheckRecord {
    fn header() -> &'static [&'static str] {
        &[
            "schema",
            "check",
            "claim",
            "samples",
            "max_violation",
            "max_value",
            "tolerance",
            "passed",
        ]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.schema.to_string(),
            self.check.clone(),
            self.report.claim.clone(),
            self.report.samples.to_string(),
            num(self.report.max_violation),
            num(self.report.max_value),
            num(self.report.tolerance),
            self.report.passed.to_string(),
        ]
    }
}

/// Writes records of one type as JSON lines or CSV.
pub fn emit<R: Record>(out: &mut dyn Write, format: Format, records: &[R]) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(R::header())?;
            for r in records {
                w.write_record(r.row())?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_match_headers() {
        let z = ZeroRecord {
            schema: SCHEMA,
            family: "legendre".into(),
            params: serde_json::json!({"n": 2}),
            kind: "base".into(),
            n: 1,
            zero: 0.6f64.sqrt(),
            residual: 0.0,
            double: false,
        };
        assert_eq!(z.row().len(), ZeroRecord::header().len());
        let mut buf = Vec::new();
        emit(&mut buf, Format::Csv, std::slice::from_ref(&z)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("family,params,kind,n,zero,residual\n"));
        let mut buf = Vec::new();
        emit(&mut buf, Format::Json, std::slice::from_ref(&z)).unwrap();
        let back: ZeroRecord = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, z);
    }
}
