//! Aggregation of document reports into per-domain and overall
//! statistics.
//!
//! Percentages use the post-gating token count as the one denominator
//! throughout. `pct_*` fields are pooled (micro) percentages; the
//! `macro_pct_*` fields instead average the per-document percentages over
//! documents with at least one token. The two differ whenever document
//! sizes vary, so both are reported.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::DomainLabel;
use crate::pipeline::DocumentReport;

/// Aggregated counts and percentage breakdown for one document group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsBucket {
    pub n_documents: usize,
    pub n_tokens: usize,
    pub n_duplicates: usize,
    pub n_stopwords: usize,
    pub n_dict: usize,
    pub n_gaz: usize,
    pub n_rejected: usize,
    pub pct_duplicates: f64,
    pub pct_stopwords: f64,
    pub pct_dict: f64,
    pub pct_gaz: f64,
    pub pct_rejected: f64,
    pub macro_pct_duplicates: f64,
    pub macro_pct_stopwords: f64,
    pub macro_pct_dict: f64,
    pub macro_pct_gaz: f64,
    pub macro_pct_rejected: f64,
    pub mean_stopwords_per_doc: f64,
}

#[derive(Debug, Clone, Default)]
struct Accumulator {
    n_documents: usize,
    n_tokens: usize,
    n_duplicates: usize,
    n_stopwords: usize,
    n_dict: usize,
    n_gaz: usize,
    n_rejected: usize,
    /// Sums of per-document percentages, over documents with tokens.
    pct_sums: [f64; 5],
    documents_with_tokens: usize,
}

impl Accumulator {
    fn add(&mut self, report: &DocumentReport) {
        self.n_documents += 1;
        self.n_tokens += report.n_tokens;
        self.n_duplicates += report.n_duplicates;
        self.n_stopwords += report.n_stopwords;
        self.n_dict += report.n_dict;
        self.n_gaz += report.n_gaz;
        self.n_rejected += report.n_rejected;
        if report.n_tokens > 0 {
            let total = report.n_tokens as f64;
            let parts = [
                report.n_duplicates,
                report.n_stopwords,
                report.n_dict,
                report.n_gaz,
                report.n_rejected,
            ];
            for (sum, part) in self.pct_sums.iter_mut().zip(parts) {
                *sum += 100.0 * part as f64 / total;
            }
            self.documents_with_tokens += 1;
        }
    }

    fn finish(&self) -> StatsBucket {
        let pct = |count: usize| {
            if self.n_tokens > 0 {
                100.0 * count as f64 / self.n_tokens as f64
            } else {
                0.0
            }
        };
        let macro_pct = |index: usize| {
            if self.documents_with_tokens > 0 {
                self.pct_sums[index] / self.documents_with_tokens as f64
            } else {
                0.0
            }
        };
        StatsBucket {
            n_documents: self.n_documents,
            n_tokens: self.n_tokens,
            n_duplicates: self.n_duplicates,
            n_stopwords: self.n_stopwords,
            n_dict: self.n_dict,
            n_gaz: self.n_gaz,
            n_rejected: self.n_rejected,
            pct_duplicates: pct(self.n_duplicates),
            pct_stopwords: pct(self.n_stopwords),
            pct_dict: pct(self.n_dict),
            pct_gaz: pct(self.n_gaz),
            pct_rejected: pct(self.n_rejected),
            macro_pct_duplicates: macro_pct(0),
            macro_pct_stopwords: macro_pct(1),
            macro_pct_dict: macro_pct(2),
            macro_pct_gaz: macro_pct(3),
            macro_pct_rejected: macro_pct(4),
            mean_stopwords_per_doc: if self.n_documents > 0 {
                self.n_stopwords as f64 / self.n_documents as f64
            } else {
                0.0
            },
        }
    }
}

/// Corpus-level statistics: one bucket per labeled domain plus the
/// overall totals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub overall: StatsBucket,
    pub per_domain: BTreeMap<DomainLabel, StatsBucket>,
    /// Documents that failed gating or decoding; they appear in no bucket
    /// and no denominator.
    #[serde(default)]
    pub skipped_documents: usize,
}

/// Sums reports exactly, per domain and overall, and derives the
/// percentage fields. Documents without a domain count only toward
/// `overall`. The fold is order-independent.
pub fn aggregate_stats(reports: &[DocumentReport]) -> CorpusStats {
    let mut overall = Accumulator::default();
    let mut per_domain: BTreeMap<DomainLabel, Accumulator> = BTreeMap::new();
    for report in reports {
        overall.add(report);
        if let Some(domain) = &report.domain {
            per_domain.entry(domain.clone()).or_default().add(report);
        }
    }
    CorpusStats {
        overall: overall.finish(),
        per_domain: per_domain
            .into_iter()
            .map(|(domain, acc)| (domain, acc.finish()))
            .collect(),
        skipped_documents: 0,
    }
}
