//! Orchestration of the staged pipeline over one document, and term-file
//! output.
//!
//! Stage order is fixed: gate and strip symbols, remove duplicates,
//! remove stop words, match against the dictionary, then the gazetteer.
//! Duplicates are counted before stop words, so a stop word occurring k
//! times contributes k-1 duplicates and one stop-word removal.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::DomainLabel;
use crate::filters::{dedup_terms, remove_stopwords, StopList};
use crate::lexicon::{match_terms, Lexicon, LexiconKind};
use crate::script::{gate_content, NotGurmukhi};
use crate::term::{RawDocument, Term};
use crate::wordlist::WordListError;

/// The three term lists every run needs, loaded once and shared
/// read-only across workers.
#[derive(Debug, Clone)]
pub struct Resources {
    pub stops: StopList,
    pub dict: Lexicon,
    pub gaz: Lexicon,
}

impl Resources {
    /// Loads all three resource files up front; any failure aborts the
    /// run before documents are touched.
    pub fn load(
        stoplist: impl AsRef<Path>,
        dictionary: impl AsRef<Path>,
        gazetteer: impl AsRef<Path>,
    ) -> Result<Self, WordListError> {
        Ok(Resources {
            stops: StopList::load(stoplist)?,
            dict: Lexicon::load(dictionary, LexiconKind::Dictionary)?,
            gaz: Lexicon::load(gazetteer, LexiconKind::Gazetteer)?,
        })
    }
}

/// Per-document staged counts and term partitions.
///
/// Counts always satisfy
/// `n_tokens == n_duplicates + n_stopwords + n_dict + n_gaz + n_rejected`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocumentReport {
    pub source_path: Option<PathBuf>,
    pub domain: Option<DomainLabel>,
    /// Terms surviving gating and symbol removal; the denominator for
    /// every percentage downstream.
    pub n_tokens: usize,
    pub n_duplicates: usize,
    pub n_stopwords: usize,
    pub n_dict: usize,
    pub n_gaz: usize,
    pub n_rejected: usize,
    /// Dictionary matches in input order, then gazetteer matches in
    /// input order, the way the accepted terms file is laid out.
    pub accepted: Vec<Term>,
    pub rejected: Vec<Term>,
}

/// Intermediate stage captures for keep-intermediate runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageTrace {
    /// Symbol-stripping output: comma-separated terms.
    pub stripped: String,
    /// Terms after duplicate removal.
    pub deduped: Vec<Term>,
    /// Terms after stop-word removal, the lexicon-matching input.
    pub kept: Vec<Term>,
    /// Dictionary misses handed on to the gazetteer.
    pub remaining: Vec<Term>,
}

/// Runs the staged pipeline over one document.
pub fn preprocess_document(
    doc: &RawDocument,
    res: &Resources,
) -> Result<DocumentReport, NotGurmukhi> {
    run(doc, res, false).map(|(report, _)| report)
}

/// Like [`preprocess_document`], additionally capturing the intermediate
/// stages.
pub fn preprocess_document_traced(
    doc: &RawDocument,
    res: &Resources,
) -> Result<(DocumentReport, StageTrace), NotGurmukhi> {
    run(doc, res, true).map(|(report, trace)| (report, trace.expect("trace requested")))
}

fn run(
    doc: &RawDocument,
    res: &Resources,
    traced: bool,
) -> Result<(DocumentReport, Option<StageTrace>), NotGurmukhi> {
    let (stripped, tokens) = gate_content(&doc.content)?;
    let n_tokens = tokens.len();

    let dedup = dedup_terms(tokens);
    let n_duplicates = dedup.duplicate_count;
    let deduped_copy = traced.then(|| dedup.unique.clone());

    let (kept, n_stopwords) = remove_stopwords(dedup.unique, &res.stops);
    let kept_copy = traced.then(|| kept.clone());
    let remaining_copy = traced.then(|| {
        kept.iter()
            .filter(|t| !res.dict.contains(t))
            .cloned()
            .collect::<Vec<_>>()
    });

    let partition = match_terms(kept, &res.dict, &res.gaz);
    let n_dict = partition.dictionary_matched.len();
    let n_gaz = partition.gazetteer_matched.len();
    let n_rejected = partition.rejected.len();
    let mut accepted = partition.dictionary_matched;
    accepted.extend(partition.gazetteer_matched);

    let report = DocumentReport {
        source_path: doc.source_path.clone(),
        domain: doc.domain.clone(),
        n_tokens,
        n_duplicates,
        n_stopwords,
        n_dict,
        n_gaz,
        n_rejected,
        accepted,
        rejected: partition.rejected,
    };
    debug_assert_eq!(
        report.n_tokens,
        report.n_duplicates + report.n_stopwords + report.n_dict + report.n_gaz + report.n_rejected
    );

    let trace = traced.then(|| StageTrace {
        stripped,
        deduped: deduped_copy.unwrap_or_default(),
        kept: kept_copy.unwrap_or_default(),
        remaining: remaining_copy.unwrap_or_default(),
    });
    Ok((report, trace))
}

/// A failed file write, identifying the file.
#[derive(Debug, Error)]
#[error("cannot write {}: {source}", path.display())]
pub struct OutputError {
    pub path: PathBuf,
    #[source]
    pub source: io::Error,
}

/// Comma-joins terms with no trailing separator or newline.
pub fn join_terms(terms: &[Term]) -> String {
    terms
        .iter()
        .map(Term::as_str)
        .collect::<Vec<_>>()
        .join(",")
}

/// Stem used to name a report's output files: the source file stem, or
/// `document` for in-memory input.
pub fn output_stem(report: &DocumentReport) -> String {
    report
        .source_path
        .as_deref()
        .and_then(Path::file_stem)
        .map(|stem| stem.to_string_lossy().into_owned())
        .unwrap_or_else(|| "document".to_string())
}

fn write_file(path: PathBuf, content: &str) -> Result<PathBuf, OutputError> {
    fs::write(&path, content).map_err(|source| OutputError {
        path: path.clone(),
        source,
    })?;
    Ok(path)
}

/// Writes `<stem>.accepted.txt` and `<stem>.rejected.txt` into `out_dir`,
/// returning the written paths.
pub fn write_outputs(report: &DocumentReport, out_dir: &Path) -> Result<Vec<PathBuf>, OutputError> {
    let stem = output_stem(report);
    Ok(vec![
        write_file(
            out_dir.join(format!("{stem}.accepted.txt")),
            &join_terms(&report.accepted),
        )?,
        write_file(
            out_dir.join(format!("{stem}.rejected.txt")),
            &join_terms(&report.rejected),
        )?,
    ])
}

/// Writes the per-stage intermediate files for one document.
pub fn write_trace(
    trace: &StageTrace,
    stem: &str,
    out_dir: &Path,
) -> Result<Vec<PathBuf>, OutputError> {
    Ok(vec![
        write_file(out_dir.join(format!("{stem}.stripped.txt")), &trace.stripped)?,
        write_file(
            out_dir.join(format!("{stem}.deduped.txt")),
            &join_terms(&trace.deduped),
        )?,
        write_file(
            out_dir.join(format!("{stem}.kept.txt")),
            &join_terms(&trace.kept),
        )?,
        write_file(
            out_dir.join(format!("{stem}.remaining.txt")),
            &join_terms(&trace.remaining),
        )?,
    ])
}
