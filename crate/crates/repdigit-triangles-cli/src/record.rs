//! Line-delimited report records: one JSON object (or CSV row) per event,
//! with a fixed field order so identical runs are byte-identical.
//!
//! Side lengths can exceed 64 bits at large digit counts, so they are
//! carried as decimal strings.

use repdigit_triangles::repdigit::{render_base, RepdigitSpec};
use repdigit_triangles::search::{SearchReport, TheoremVerification};
use repdigit_triangles::triples::{TriangleType, TriangleWitness};
use repdigit_triangles::FamilyParams;
use serde::Serialize;
use std::io::{self, Write};

#[derive(Debug, Clone, Default, Serialize)]
pub struct ReportRecord {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub triangle: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leg_a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leg_b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotenuse: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leg_a_base_b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leg_b_base_b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotenuse_base_b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family_params: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub digits: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub types: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prefilters: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub specs_tested: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prefilter_rejections: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hit_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl ReportRecord {
    fn with_spec(mut self, spec: &RepdigitSpec) -> Self {
        self.k = Some(spec.k());
        self.b = Some(spec.base());
        self.d = Some(spec.digit());
        self
    }

    pub fn hit(witness: &TriangleWitness) -> Self {
        let spec = &witness.spec;
        let rendered =
            |n| render_base(n, spec.base()).expect("witness bases are at least 3");
        let mut record = ReportRecord {
            kind: "hit",
            triangle: Some(witness.type_tag.code()),
            leg_a: Some(witness.leg_a.to_string()),
            leg_b: Some(witness.leg_b.to_string()),
            hypotenuse: Some(witness.hypotenuse.to_string()),
            leg_a_base_b: Some(rendered(&witness.leg_a)),
            leg_b_base_b: Some(rendered(&witness.leg_b)),
            hypotenuse_base_b: Some(rendered(&witness.hypotenuse)),
            ..Default::default()
        }
        .with_spec(spec);
        if let Some(params) = &witness.params {
            record.delta = Some(params.delta().to_string());
            record.m = Some(params.m().to_string());
            record.n = Some(params.n().to_string());
        }
        record
    }

    pub fn family_instance(params: &FamilyParams, witness: &TriangleWitness) -> Self {
        let mut record = Self::hit(witness);
        record.kind = "family_instance";
        record.family = Some(params.family().name());
        record.family_params = Some(params.describe());
        record
    }

    pub fn absent(spec: &RepdigitSpec, triangle: TriangleType) -> Self {
        ReportRecord {
            kind: "verdict",
            triangle: Some(triangle.code()),
            verdict: Some("absent"),
            message: Some(format!(
                "no {} triangle with {} repetitions of digit {} in base {}",
                triangle,
                spec.k(),
                spec.digit(),
                spec.base()
            )),
            ..Default::default()
        }
        .with_spec(spec)
    }

    pub fn theorem_verdict(verification: &TheoremVerification) -> Self {
        let mut record = Self::search_echo("verdict", &verification.report);
        record.theorem = Some(verification.theorem);
        record.verdict = Some(verification.verdict.as_str());
        if !verification.missing.is_empty() {
            let listed: Vec<String> = verification
                .missing
                .iter()
                .map(|(spec, ty)| {
                    format!("({}, {}, {}) {}", spec.k(), spec.base(), spec.digit(), ty.code())
                })
                .collect();
            record.message = Some(format!("predicted hits not found: {}", listed.join("; ")));
        }
        record
    }

    pub fn summary(report: &SearchReport) -> Self {
        Self::search_echo("summary", report)
    }

    /// Bounds echo shared by summaries and theorem verdicts, so every
    /// report names the range it actually covered.
    fn search_echo(kind: &'static str, report: &SearchReport) -> Self {
        let (lo, hi) = report.range.bases();
        let digits = match report.range.digits() {
            Some(list) => list
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(","),
            None => "all".to_owned(),
        };
        let types = report
            .range
            .types()
            .iter()
            .map(|t| t.code())
            .collect::<Vec<_>>()
            .join(",");
        ReportRecord {
            kind,
            bases: Some(format!("{lo}..{hi}")),
            digits: Some(digits),
            k_max: Some(report.range.k_max()),
            types: Some(types),
            prefilters: Some(report.prefiltered),
            specs_tested: Some(report.specs_tested),
            prefilter_rejections: Some(report.prefilter_rejections),
            hit_count: Some(report.hits.len() as u64),
            elapsed_ms: Some(report.elapsed.as_millis() as u64),
            ..Default::default()
        }
    }

    pub fn error(message: String) -> Self {
        ReportRecord {
            kind: "error",
            message: Some(message),
            ..Default::default()
        }
    }
}

/// Column order for CSV output; mirrors the JSON field order.
pub const CSV_HEADER: [&str; 28] = [
    "kind",
    "k",
    "b",
    "d",
    "type",
    "leg_a",
    "leg_b",
    "hypotenuse",
    "leg_a_base_b",
    "leg_b_base_b",
    "hypotenuse_base_b",
    "delta",
    "m",
    "n",
    "family",
    "family_params",
    "theorem",
    "verdict",
    "bases",
    "digits",
    "k_max",
    "types",
    "prefilters",
    "specs_tested",
    "prefilter_rejections",
    "hit_count",
    "elapsed_ms",
    "message",
];

fn csv_cell(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_owned()
    }
}

impl ReportRecord {
    fn csv_row(&self) -> Vec<String> {
        fn cell<T: ToString>(value: &Option<T>) -> String {
            value.as_ref().map(T::to_string).unwrap_or_default()
        }
        vec![
            self.kind.to_owned(),
            cell(&self.k),
            cell(&self.b),
            cell(&self.d),
            cell(&self.triangle),
            cell(&self.leg_a),
            cell(&self.leg_b),
            cell(&self.hypotenuse),
            cell(&self.leg_a_base_b),
            cell(&self.leg_b_base_b),
            cell(&self.hypotenuse_base_b),
            cell(&self.delta),
            cell(&self.m),
            cell(&self.n),
            cell(&self.family),
            cell(&self.family_params),
            cell(&self.theorem),
            cell(&self.verdict),
            cell(&self.bases),
            cell(&self.digits),
            cell(&self.k_max),
            cell(&self.types),
            cell(&self.prefilters),
            cell(&self.specs_tested),
            cell(&self.prefilter_rejections),
            cell(&self.hit_count),
            cell(&self.elapsed_ms),
            cell(&self.message),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
}

/// Writes records in the selected format; CSV gets its header exactly once.
pub fn write_records(
    out: &mut dyn Write,
    format: Format,
    records: &[ReportRecord],
) -> io::Result<()> {
    match format {
        Format::Jsonl => {
            for record in records {
                let line = serde_json::to_string(record).expect("records serialize");
                writeln!(out, "{line}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "{}", CSV_HEADER.join(","))?;
            for record in records {
                let row: Vec<String> =
                    record.csv_row().iter().map(|cell| csv_cell(cell)).collect();
                writeln!(out, "{}", row.join(","))?;
            }
        }
    }
    Ok(())
}
