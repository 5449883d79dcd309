use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};

use serde::Serialize;
use serde_json::{json, Value};

use crate::graph::{Edge, VertexSet};
use crate::matching::Matching;
use crate::properties::Witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled => "sampled",
        })
    }
}

/// A witness flattened for reporting: a kind tag plus a JSON payload.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportWitness {
    pub kind: String,
    pub value: Value,
}

impl ReportWitness {
    pub fn new(kind: impl Into<String>, value: Value) -> Self {
        ReportWitness {
            kind: kind.into(),
            value,
        }
    }
}

pub(crate) fn edge_json(e: Edge) -> Value {
    json!([e.u(), e.v()])
}

pub(crate) fn matching_json(m: &Matching) -> Value {
    Value::Array(m.edges().iter().map(|&e| edge_json(e)).collect())
}

pub(crate) fn set_json(s: VertexSet) -> Value {
    json!(s.to_vec())
}

pub(crate) fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Matching(m) => matching_json(m),
        Witness::VertexSet(s) => set_json(*s),
        Witness::Edge(e) => edge_json(*e),
        Witness::VertexMatching { vertex, matching } => json!({
            "vertex": vertex,
            "matching": matching.as_ref().map(matching_json),
        }),
    }
}

impl From<&Witness> for ReportWitness {
    fn from(w: &Witness) -> Self {
        ReportWitness::new(w.kind(), witness_json(w))
    }
}

/// One failing (or notable) graph/parameter pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub param: Option<usize>,
    pub witness_kind: String,
    pub witness: Value,
}

impl Counterexample {
    pub(crate) fn new(graph6: &str, param: Option<usize>, w: ReportWitness) -> Self {
        Counterexample {
            graph6: graph6.to_string(),
            param,
            witness_kind: w.kind,
            witness: w.value,
        }
    }

    fn sort_key(&self) -> (&[u8], Option<usize>) {
        (self.graph6.as_bytes(), self.param)
    }
}

pub(crate) fn sort_counterexamples(list: &mut [Counterexample]) {
    list.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

/// Outcome of one extremal-family check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyCheck {
    pub family: String,
    pub k: usize,
    pub order: usize,
    pub graph6: String,
    /// Which extendability property was checked, e.g. `3-extendable`.
    pub property: String,
    pub mode: Mode,
    /// Matchings examined by the extendability check.
    pub examined: u64,
    pub extendable: bool,
    /// The fixed tightness set, in original labels.
    pub witness: Vec<usize>,
    /// Whether deleting the tightness set leaves no perfect matching.
    pub witness_blocks: bool,
    /// Result of the full factor-criticality decider, if it finished within
    /// its subset budget: `Some(true)` means it rejected the graph.
    pub decider_rejects: Option<bool>,
    pub passed: bool,
}

/// Aggregated result of checking one claim (or running one scan) over a corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub claim: String,
    pub corpus: String,
    pub param: Option<usize>,
    pub mode: Mode,
    pub scanned: u64,
    pub hypothesis_hits: u64,
    /// Hypothesis hits where the checked property was actually realized
    /// (for equivalences: both sides hold).
    pub positives: u64,
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Conjecture scans: graphs outside the conjectured minimum degrees.
    pub findings: Vec<Counterexample>,
    /// Conjecture scans: minimum-degree distribution of the minimal graphs.
    pub delta_histogram: Option<BTreeMap<usize, u64>>,
    pub family_checks: Vec<FamilyCheck>,
    pub elapsed_ms: u64,
}

impl Report {
    pub(crate) fn new(claim: &str, corpus: &str, mode: Mode) -> Self {
        Report {
            claim: claim.to_string(),
            corpus: corpus.to_string(),
            param: None,
            mode,
            scanned: 0,
            hypothesis_hits: 0,
            positives: 0,
            failures: 0,
            counterexamples: Vec::new(),
            findings: Vec::new(),
            delta_histogram: None,
            family_checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    /// The hypothesis never applied anywhere in the corpus.
    pub fn vacuous(&self) -> bool {
        self.hypothesis_hits == 0
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Writes the report as JSON Lines: one record per counterexample,
    /// finding and family check, then one summary record. `elapsed_ms` is
    /// `null` unless `timing` is set, so that repeated runs are
    /// byte-identical.
    pub fn write_jsonl<W: Write>(&self, out: &mut W, timing: bool) -> io::Result<()> {
        #[derive(Serialize)]
        struct Row<'a> {
            record: &'static str,
            claim: &'a str,
            graph6: &'a str,
            param: Option<usize>,
            witness_kind: &'a str,
            witness: &'a Value,
        }
        #[derive(Serialize)]
        struct FamilyRow<'a> {
            record: &'static str,
            claim: &'a str,
            #[serde(flatten)]
            check: &'a FamilyCheck,
        }
        #[derive(Serialize)]
        struct Summary<'a> {
            record: &'static str,
            claim: &'a str,
            corpus: &'a str,
            param: Option<usize>,
            mode: Mode,
            scanned: u64,
            hypothesis_hits: u64,
            positives: u64,
            failures: u64,
            findings: usize,
            vacuous: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            delta_histogram: Option<&'a BTreeMap<usize, u64>>,
            elapsed_ms: Option<u64>,
        }

        let rows = [("counterexample", &self.counterexamples), ("finding", &self.findings)];
        for (record, list) in rows {
            for c in list.iter() {
                let row = Row {
                    record,
                    claim: &self.claim,
                    graph6: &c.graph6,
                    param: c.param,
                    witness_kind: &c.witness_kind,
                    witness: &c.witness,
                };
                serde_json::to_writer(&mut *out, &row)?;
                out.write_all(b"\n")?;
            }
        }
        for check in &self.family_checks {
            let row = FamilyRow {
                record: "family-check",
                claim: &self.claim,
                check,
            };
            serde_json::to_writer(&mut *out, &row)?;
            out.write_all(b"\n")?;
        }
        let summary = Summary {
            record: "summary",
            claim: &self.claim,
            corpus: &self.corpus,
            param: self.param,
            mode: self.mode,
            scanned: self.scanned,
            hypothesis_hits: self.hypothesis_hits,
            positives: self.positives,
            failures: self.failures,
            findings: self.findings.len(),
            vacuous: self.vacuous(),
            delta_histogram: self.delta_histogram.as_ref(),
            elapsed_ms: timing.then_some(self.elapsed_ms),
        };
        serde_json::to_writer(&mut *out, &summary)?;
        out.write_all(b"\n")
    }

    pub fn to_jsonl(&self, timing: bool) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf, timing).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }

    /// A short human-readable summary.
    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "{} on {}: {} graphs, {} hypothesis hits, {} counterexamples",
            self.claim, self.corpus, self.scanned, self.hypothesis_hits, self.failures
        );
        if self.mode == Mode::Sampled {
            line.push_str(" (sampled)");
        }
        if self.vacuous() {
            line.push_str(" [vacuous]");
        }
        if !self.findings.is_empty() || self.delta_histogram.is_some() {
            line.push_str(&format!(", {} notable findings", self.findings.len()));
        }
        line
    }
}
