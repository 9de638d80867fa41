//! Machine-readable scan reports: one JSON document per run plus a flat CSV
//! export of the records. Every list is keyed and sorted by graph6 so output
//! is byte-identical across runs apart from `meta.timestamp`.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::theorems::{Classification, ScanReport, UtThreeOneOutcome, VerificationRecord};

pub const CSV_HEADER: [&str; 8] = ["graph6", "n", "girth", "count", "bound", "holds", "equality", "classification"];

#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub version: String,
    pub command: String,
    pub timestamp: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct EqualityCases {
    #[serde(rename = "C3")]
    pub c3: Vec<String>,
    #[serde(rename = "K32")]
    pub k32: Vec<String>,
    #[serde(rename = "U1")]
    pub u1: Vec<String>,
    /// Equality attained outside the three predicted classes.
    #[serde(rename = "Other")]
    pub other: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaFailure {
    pub graph6: String,
    pub lemmas: Vec<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanError {
    pub graph6: String,
    pub error: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub violations: Vec<String>,
    pub equality_cases: EqualityCases,
    pub classification_counts: BTreeMap<&'static str, usize>,
    /// Graphs where structural class and exact equality disagree.
    pub classifier_mismatches: Vec<String>,
    /// `null` when the corpus does not contain the graph.
    pub u_t_3_1: Option<UtThreeOneOutcome>,
    pub lemma_failures: Vec<LemmaFailure>,
    pub errors: Vec<ScanError>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub meta: Meta,
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(scan: &ScanReport, command: impl Into<String>, timestamp: impl Into<String>) -> Self {
        let mut equality_cases = EqualityCases::default();
        for (class, graphs) in scan.equality_cases() {
            let slot = match class {
                Classification::C3 => &mut equality_cases.c3,
                Classification::K32 => &mut equality_cases.k32,
                Classification::U1 => &mut equality_cases.u1,
                _ => &mut equality_cases.other,
            };
            slot.extend(graphs);
        }
        equality_cases.other.sort();
        let summary = Summary {
            total: scan.total(),
            violations: scan.violations(),
            equality_cases,
            classification_counts: scan.classification_counts().into_iter().map(|(c, k)| (c.as_str(), k)).collect(),
            classifier_mismatches: scan.classifier_mismatches(),
            u_t_3_1: scan.u_t_3_1(),
            lemma_failures: scan
                .lemma_failures
                .iter()
                .map(|(graph6, lemmas)| LemmaFailure { graph6: graph6.clone(), lemmas: lemmas.clone() })
                .collect(),
            errors: scan.errors.iter().map(|(graph6, error)| ScanError { graph6: graph6.clone(), error: error.clone() }).collect(),
        };
        let meta = Meta { version: env!("CARGO_PKG_VERSION").to_string(), command: command.into(), timestamp: timestamp.into() };
        Self { meta, records: scan.records.clone(), summary }
    }

    /// Current UTC time at second resolution.
    pub fn now() -> String {
        chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(self.to_json().as_bytes()).map_err(io_error)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        write_csv(&self.records, out)
    }
}

pub fn write_csv<W: Write>(records: &[VerificationRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_error)?;
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in records {
        w.write_record([
            r.graph6.clone(),
            r.n.to_string(),
            r.girth.to_string(),
            opt(r.count),
            opt(r.bound),
            r.holds.to_string(),
            r.equality.to_string(),
            r.classification.to_string(),
        ])
        .map_err(csv_error)?;
    }
    w.flush().map_err(io_error)
}

fn io_error(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}
