use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::checks::lemma_suite_with;
use super::{evaluate, Classification, VerificationRecord};
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::spectra::LaplacianCounter;

/// What the scan observed for the triangle with one pendant vertex, the
/// `g = 3` member of the one-pendant family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UtThreeOneOutcome {
    pub graph6: String,
    pub count: usize,
    pub bound: usize,
    pub equality: bool,
}

/// Aggregated results of a corpus scan, every list sorted by graph6.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub records: Vec<VerificationRecord>,
    /// Graphs the checks could not be run on, with the reason.
    pub errors: Vec<(String, String)>,
    /// Graphs failing at least one auxiliary lemma, with the lemma names.
    pub lemma_failures: Vec<(String, Vec<&'static str>)>,
}

enum Outcome {
    Checked(VerificationRecord, Vec<&'static str>),
    Failed(String, String),
}

fn check_one(g: &Graph) -> Outcome {
    let run = || -> Result<Outcome> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let counter = LaplacianCounter::new(g)?;
        let record = evaluate(g, &counter)?;
        let lemmas = lemma_suite_with(g, &counter)?;
        Ok(Outcome::Checked(record, lemmas.failures()))
    };
    run().unwrap_or_else(|e| Outcome::Failed(g.to_graph6(), e.to_string()))
}

/// Runs the bound check, cycle-count consistency, classifier and lemma suite
/// on every graph. Graphs are processed in parallel; the report does not
/// depend on input order or thread count.
pub fn scan_corpus<I: IntoIterator<Item = Graph>>(graphs: I) -> ScanReport {
    let graphs: Vec<Graph> = graphs.into_iter().collect();
    let outcomes: Vec<Outcome> = graphs.par_iter().map(check_one).collect();
    let mut report = ScanReport::default();
    for outcome in outcomes {
        match outcome {
            Outcome::Checked(record, failures) => {
                if !failures.is_empty() {
                    report.lemma_failures.push((record.graph6.clone(), failures));
                }
                report.records.push(record);
            }
            Outcome::Failed(key, message) => report.errors.push((key, message)),
        }
    }
    report.records.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    report.errors.sort();
    report.lemma_failures.sort();
    report
}

impl ScanReport {
    pub fn total(&self) -> usize {
        self.records.len()
    }

    /// Graphs whose record does not hold.
    pub fn violations(&self) -> Vec<String> {
        self.records.iter().filter(|r| !r.holds).map(|r| r.graph6.clone()).collect()
    }

    /// Graphs attaining the bound, keyed by structural class.
    pub fn equality_cases(&self) -> BTreeMap<Classification, Vec<String>> {
        let mut out: BTreeMap<Classification, Vec<String>> = BTreeMap::new();
        for r in self.records.iter().filter(|r| r.equality) {
            out.entry(r.classification).or_default().push(r.graph6.clone());
        }
        out
    }

    pub fn classification_counts(&self) -> BTreeMap<Classification, usize> {
        let mut out = BTreeMap::new();
        for r in &self.records {
            *out.entry(r.classification).or_default() += 1;
        }
        out
    }

    /// Graphs where the structural classifier and the exact count disagree
    /// about attaining the bound.
    pub fn classifier_mismatches(&self) -> Vec<String> {
        self.records
            .iter()
            .filter(|r| r.equality != r.classification.is_equality_class())
            .map(|r| r.graph6.clone())
            .collect()
    }

    /// The record of the girth-3 one-pendant graph, if the corpus holds it.
    pub fn u_t_3_1(&self) -> Option<UtThreeOneOutcome> {
        self.records
            .iter()
            .find(|r| r.classification == Classification::U1 && r.girth == Girth::Finite(3))
            .map(|r| UtThreeOneOutcome {
                graph6: r.graph6.clone(),
                count: r.count.expect("finite girth"),
                bound: r.bound.expect("finite girth"),
                equality: r.equality,
            })
    }
}
