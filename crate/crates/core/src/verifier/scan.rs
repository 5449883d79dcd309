use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::graph::Graph;
use crate::properties::Property;

use super::claims::{self, Claim, ClaimKind, Ctx, Outcome, Subject};
use super::corpus::{enumerate_corpus, CorpusSpec};
use super::report::{sort_counterexamples, Counterexample, Mode, Report};
use super::{ScanOptions, VerifyError};

/// Graphs handed to the worker pool at a time.
const CHUNK: usize = 4096;

#[derive(Default)]
struct Tally {
    scanned: u64,
    hits: u64,
    positives: u64,
    failures: Vec<Counterexample>,
    findings: Vec<Counterexample>,
    histogram: BTreeMap<usize, u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.scanned += other.scanned;
        self.hits += other.hits;
        self.positives += other.positives;
        self.failures.extend(other.failures);
        self.findings.extend(other.findings);
        for (d, n) in other.histogram {
            *self.histogram.entry(d).or_default() += n;
        }
        self
    }

    fn record(&mut self, graph6: &str, param: usize, outcome: Outcome) {
        match outcome {
            Outcome::Skip => {}
            Outcome::Holds { positive } => {
                self.hits += 1;
                self.positives += u64::from(positive);
            }
            Outcome::Fails(w) => {
                self.hits += 1;
                self.failures.push(Counterexample::new(graph6, Some(param), w));
            }
            Outcome::Degree { delta, finding } => {
                self.hits += 1;
                self.positives += 1;
                *self.histogram.entry(delta).or_default() += 1;
                if let Some(w) = finding {
                    self.findings.push(Counterexample::new(graph6, Some(param), w));
                }
            }
        }
    }
}

fn tally_chunk<F>(chunk: &[Graph], per_graph: &F) -> Tally
where
    F: Fn(&Subject<'_>, &mut Tally) + Sync,
{
    chunk
        .par_iter()
        .map(|g| {
            let g6 = g.to_graph6();
            let subject = Subject::new(g, &g6);
            let mut t = Tally {
                scanned: 1,
                ..Tally::default()
            };
            per_graph(&subject, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

/// Streams the corpus through the worker pool. Only sums and lists come
/// back from the workers, and the lists are sorted afterwards, so the
/// result does not depend on the thread count.
fn run<F>(corpus: &CorpusSpec, opts: &ScanOptions, per_graph: F) -> Result<Tally, VerifyError>
where
    F: Fn(&Subject<'_>, &mut Tally) + Sync + Send,
{
    let drive = || -> Result<Tally, VerifyError> {
        let mut graphs = enumerate_corpus(corpus)?;
        let mut total = Tally::default();
        let mut chunk = Vec::with_capacity(CHUNK);
        loop {
            chunk.clear();
            for g in graphs.by_ref().take(CHUNK) {
                chunk.push(g?);
            }
            if chunk.is_empty() {
                break;
            }
            total = total.merge(tally_chunk(&chunk, &per_graph));
        }
        sort_counterexamples(&mut total.failures);
        sort_counterexamples(&mut total.findings);
        Ok(total)
    };
    match opts.threads {
        None => drive(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| VerifyError::ThreadPool(e.to_string()))?
            .install(drive),
    }
}

fn into_report(
    claim: &str,
    corpus: &CorpusSpec,
    mode: Mode,
    tally: Tally,
    histogram: bool,
    started: Instant,
) -> Report {
    let mut report = Report::new(claim, &corpus.describe(), mode);
    report.scanned = tally.scanned;
    report.hypothesis_hits = tally.hits;
    report.positives = tally.positives;
    report.failures = tally.failures.len() as u64;
    report.counterexamples = tally.failures;
    report.findings = tally.findings;
    report.delta_histogram = histogram.then_some(tally.histogram);
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    report
}

/// Checks one registered claim over every graph of the corpus and every
/// parameter value the claim ranges over at that graph's order.
pub fn verify_claim(id: &str, corpus: &CorpusSpec, opts: &ScanOptions) -> Result<Report, VerifyError> {
    let claim = claims::claim(id).ok_or_else(|| VerifyError::UnknownClaim(id.to_string()))?;
    verify(claim, corpus, opts)
}

/// Every registered claim, in registry order.
pub fn verify_all(corpus: &CorpusSpec, opts: &ScanOptions) -> Result<Vec<Report>, VerifyError> {
    claims::registry()
        .iter()
        .map(|c| verify(c, corpus, opts))
        .collect()
}

fn verify(claim: &Claim, corpus: &CorpusSpec, opts: &ScanOptions) -> Result<Report, VerifyError> {
    let started = Instant::now();
    let ctx = Ctx {
        sample_budget: opts.sample_budget,
        seed: opts.seed,
    };
    let tally = run(corpus, opts, |s, t| {
        for param in claim.params(s.g.order()) {
            if opts.params.as_ref().is_some_and(|only| !only.contains(&param)) {
                continue;
            }
            let outcome = claim.check(s, param, &ctx);
            t.record(s.graph6, param, outcome);
        }
    })?;
    let conjecture = claim.kind == ClaimKind::Conjecture;
    let mut report = into_report(claim.id, corpus, claim.mode, tally, conjecture, started);
    report.param = match opts.params.as_deref() {
        Some([only]) => Some(*only),
        _ => None,
    };
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    MinimalExtendable(usize),
    MinimalFactorCritical(usize),
}

impl ScanMode {
    fn property(self) -> Property {
        match self {
            ScanMode::MinimalExtendable(k) => Property::Extendable(k),
            ScanMode::MinimalFactorCritical(n) => Property::FactorCritical(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ScanMode::MinimalExtendable(_) => "scan:minimal-extendable",
            ScanMode::MinimalFactorCritical(_) => "scan:minimal-factor-critical",
        }
    }

    pub fn param(self) -> usize {
        match self {
            ScanMode::MinimalExtendable(k) | ScanMode::MinimalFactorCritical(k) => k,
        }
    }
}

/// Minimum-degree distribution of the minimal graphs in the corpus. Graphs
/// outside the conjectured degrees are findings; the scan never fails.
/// Graphs whose order does not admit the parameter are skipped.
pub fn scan_minimal_degrees(
    corpus: &CorpusSpec,
    mode: ScanMode,
    opts: &ScanOptions,
) -> Result<Report, VerifyError> {
    let started = Instant::now();
    let property = mode.property();
    let param = mode.param();
    let tally = run(corpus, opts, |s, t| {
        let outcome = claims::minimal_degree(s, property);
        t.record(s.graph6, param, outcome);
    })?;
    let mut report = into_report(mode.name(), corpus, Mode::Exhaustive, tally, true, started);
    report.param = Some(param);
    Ok(report)
}
