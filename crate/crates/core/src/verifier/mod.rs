//! Exhaustive and sampled checking of the registered claims over graph
//! corpora, the extremal-family checks, and the minimal-graph degree scans.

mod claims;
mod corpus;
mod report;
mod scan;
mod tightness;

use thiserror::Error;

use crate::families::FamilyError;
use crate::properties::PropertyError;

pub use claims::{claim, registry, self_test, Claim, ClaimKind, REQUIRED_IDS};
pub use corpus::{
    enumerate_corpus, parse_filters, CorpusError, CorpusSource, CorpusSpec, Filter,
    BUILTIN_MAX_ORDER,
};
pub use report::{Counterexample, FamilyCheck, Mode, Report, ReportWitness};
pub use scan::{scan_minimal_degrees, verify_all, verify_claim, ScanMode};
pub use tightness::{
    verify_family_tightness, CRITICALITY_DECIDER_BUDGET, G_EXHAUSTIVE_MAX_K, H_EXHAUSTIVE_MAX_K,
};

/// Seed for every sampled check. Fixed so sampled reports are reproducible.
pub const SAMPLE_SEED: u64 = 0x5E_ED0F_E47C;

pub const DEFAULT_SAMPLE_BUDGET: u64 = 100_000;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Property(#[from] PropertyError),
    #[error("cannot start worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Draws per sampled check.
    pub sample_budget: u64,
    pub seed: u64,
    /// Restrict claims to these parameter values.
    pub params: Option<Vec<usize>>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            threads: None,
            sample_budget: DEFAULT_SAMPLE_BUDGET,
            seed: SAMPLE_SEED,
            params: None,
        }
    }
}

impl ScanOptions {
    #[must_use]
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    #[must_use]
    pub fn with_params(mut self, params: impl IntoIterator<Item = usize>) -> Self {
        self.params = Some(params.into_iter().collect());
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn c6_scan_is_minimal_with_delta_two() {
        let corpus = CorpusSpec::graphs("C6", vec![Graph::cycle(6).unwrap()]);
        let r = scan_minimal_degrees(&corpus, ScanMode::MinimalExtendable(1), &ScanOptions::default())
            .unwrap();
        assert_eq!(r.hypothesis_hits, 1);
        assert_eq!(r.delta_histogram.unwrap().into_iter().collect::<Vec<_>>(), vec![(2, 1)]);
        assert!(r.findings.is_empty());
    }

    #[test]
    fn unknown_claim() {
        let err = verify_claim("C-XYZ", &CorpusSpec::builtin(3), &ScanOptions::default());
        assert!(matches!(err, Err(VerifyError::UnknownClaim(_))));
    }

    #[test]
    fn small_corpus_claims_pass() {
        let corpus = CorpusSpec::builtin_range(1..=6).with_filters([Filter::Connected]);
        for report in verify_all(&corpus, &ScanOptions::default()).unwrap() {
            assert!(report.passed(), "{}", report.summary_line());
        }
    }

    #[test]
    fn ob1_on_connected_six() {
        let corpus = CorpusSpec::builtin(6).with_filters([Filter::Connected]);
        let r = verify_claim("C-OB1", &corpus, &ScanOptions::default()).unwrap();
        assert_eq!(r.failures, 0);
        assert_eq!(r.scanned, 26_704);
        assert!(r.hypothesis_hits > 0);
    }

    #[test]
    fn lmy1_is_vacuous() {
        let corpus = CorpusSpec::builtin(6).with_filters([Filter::Connected]);
        let r = verify_claim("C-LMY1", &corpus, &ScanOptions::default()).unwrap();
        assert!(r.vacuous());
        assert!(r.to_jsonl(false).contains("\"vacuous\":true"));
    }

    #[test]
    fn family_tightness_small() {
        let r = verify_family_tightness(2, 1000).unwrap();
        assert_eq!(r.family_checks.len(), 2);
        assert!(r.passed());
        assert_eq!(r.mode, Mode::Exhaustive);
        assert!(verify_family_tightness(1, 1000).is_err());
    }

    #[test]
    fn jsonl_is_thread_independent() {
        let corpus = CorpusSpec::builtin(5).with_filters([Filter::Connected]);
        let one = verify_claim("CONJ-2", &corpus, &ScanOptions::default().with_threads(1)).unwrap();
        let three = verify_claim("CONJ-2", &corpus, &ScanOptions::default().with_threads(3)).unwrap();
        assert_eq!(one.to_jsonl(false), three.to_jsonl(false));
    }
}
