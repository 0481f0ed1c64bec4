//! Report and statistics file writers and readers.
//!
//! JSON runs write one `DocumentReport` object per line (`reports.jsonl`)
//! and the `CorpusStats` object to `stats.json`. CSV runs flatten the same
//! fields into `reports.csv` and `stats.csv`; term lists become
//! comma-joined cells.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use gurmukhi_prep::corpus::StatsBucket;
use gurmukhi_prep::pipeline::join_terms;
use gurmukhi_prep::{CorpusStats, DocumentReport, DomainLabel, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl ReportFormat {
    pub fn reports_file(self) -> &'static str {
        match self {
            ReportFormat::Json => "reports.jsonl",
            ReportFormat::Csv => "reports.csv",
        }
    }

    pub fn stats_file(self) -> &'static str {
        match self {
            ReportFormat::Json => "stats.json",
            ReportFormat::Csv => "stats.csv",
        }
    }
}

fn bad_data(err: impl ToString) -> io::Error {
    io::Error::other(err.to_string())
}

pub fn write_reports(
    reports: &[DocumentReport],
    format: ReportFormat,
    path: &Path,
) -> io::Result<()> {
    match format {
        ReportFormat::Json => {
            let mut writer = BufWriter::new(File::create(path)?);
            for report in reports {
                serde_json::to_writer(&mut writer, report).map_err(bad_data)?;
                writer.write_all(b"\n")?;
            }
            writer.flush()
        }
        ReportFormat::Csv => {
            let mut writer = csv::Writer::from_writer(BufWriter::new(File::create(path)?));
            for report in reports {
                writer.serialize(CsvReport::from(report)).map_err(bad_data)?;
            }
            writer.flush()
        }
    }
}

/// Reads report files in either format, detected by extension.
pub fn read_reports(path: &Path) -> Result<Vec<DocumentReport>, String> {
    let located = |err: String| format!("{}: {err}", path.display());
    let is_csv = path
        .extension()
        .map(|ext| ext.eq_ignore_ascii_case("csv"))
        .unwrap_or(false);
    if is_csv {
        let mut reader = csv::Reader::from_path(path).map_err(|e| located(e.to_string()))?;
        let mut reports = Vec::new();
        for row in reader.deserialize::<CsvReport>() {
            let row = row.map_err(|e| located(e.to_string()))?;
            reports.push(row.try_into().map_err(located)?);
        }
        Ok(reports)
    } else {
        let file = File::open(path).map_err(|e| located(e.to_string()))?;
        let mut reports = Vec::new();
        for line in BufReader::new(file).lines() {
            let line = line.map_err(|e| located(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            reports.push(serde_json::from_str(&line).map_err(|e| located(e.to_string()))?);
        }
        Ok(reports)
    }
}

pub fn write_stats(stats: &CorpusStats, format: ReportFormat, path: &Path) -> io::Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    write_stats_to(stats, format, &mut writer)?;
    writer.flush()
}

pub fn write_stats_to<W: Write>(
    stats: &CorpusStats,
    format: ReportFormat,
    writer: &mut W,
) -> io::Result<()> {
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut *writer, stats).map_err(bad_data)?;
            writer.write_all(b"\n")
        }
        ReportFormat::Csv => {
            writeln!(
                writer,
                "scope,n_documents,n_tokens,n_duplicates,n_stopwords,n_dict,n_gaz,n_rejected,\
                 pct_duplicates,pct_stopwords,pct_dict,pct_gaz,pct_rejected,\
                 macro_pct_duplicates,macro_pct_stopwords,macro_pct_dict,macro_pct_gaz,\
                 macro_pct_rejected,mean_stopwords_per_doc,skipped_documents"
            )?;
            write_stats_row(writer, "overall", &stats.overall, stats.skipped_documents)?;
            for (domain, bucket) in &stats.per_domain {
                write_stats_row(writer, domain.as_str(), bucket, 0)?;
            }
            Ok(())
        }
    }
}

fn write_stats_row<W: Write>(
    writer: &mut W,
    scope: &str,
    bucket: &StatsBucket,
    skipped: usize,
) -> io::Result<()> {
    writeln!(
        writer,
        "{scope},{},{},{},{},{},{},{},{:.4},{:.4},{:.4},{:.4},{:.4},{:.4},{:.4},{:.4},{:.4},{:.4},{:.4},{skipped}",
        bucket.n_documents,
        bucket.n_tokens,
        bucket.n_duplicates,
        bucket.n_stopwords,
        bucket.n_dict,
        bucket.n_gaz,
        bucket.n_rejected,
        bucket.pct_duplicates,
        bucket.pct_stopwords,
        bucket.pct_dict,
        bucket.pct_gaz,
        bucket.pct_rejected,
        bucket.macro_pct_duplicates,
        bucket.macro_pct_stopwords,
        bucket.macro_pct_dict,
        bucket.macro_pct_gaz,
        bucket.macro_pct_rejected,
        bucket.mean_stopwords_per_doc,
    )
}

/// Flat row mirroring `DocumentReport` for CSV files.
#[derive(Debug, Serialize, Deserialize)]
struct CsvReport {
    source_path: String,
    domain: String,
    n_tokens: usize,
    n_duplicates: usize,
    n_stopwords: usize,
    n_dict: usize,
    n_gaz: usize,
    n_rejected: usize,
    accepted: String,
    rejected: String,
}

impl From<&DocumentReport> for CsvReport {
    fn from(report: &DocumentReport) -> Self {
        CsvReport {
            source_path: report
                .source_path
                .as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_default(),
            domain: report
                .domain
                .as_ref()
                .map(|d| d.as_str().to_string())
                .unwrap_or_default(),
            n_tokens: report.n_tokens,
            n_duplicates: report.n_duplicates,
            n_stopwords: report.n_stopwords,
            n_dict: report.n_dict,
            n_gaz: report.n_gaz,
            n_rejected: report.n_rejected,
            accepted: join_terms(&report.accepted),
            rejected: join_terms(&report.rejected),
        }
    }
}

fn parse_terms(cell: &str) -> Result<Vec<Term>, String> {
    cell.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| Term::new(t).map_err(|e| format!("bad term {t:?}: {e}")))
        .collect()
}

impl TryFrom<CsvReport> for DocumentReport {
    type Error = String;

    fn try_from(row: CsvReport) -> Result<Self, Self::Error> {
        Ok(DocumentReport {
            source_path: (!row.source_path.is_empty()).then(|| PathBuf::from(&row.source_path)),
            domain: (!row.domain.is_empty()).then(|| DomainLabel::from_dir_name(&row.domain)),
            n_tokens: row.n_tokens,
            n_duplicates: row.n_duplicates,
            n_stopwords: row.n_stopwords,
            n_dict: row.n_dict,
            n_gaz: row.n_gaz,
            n_rejected: row.n_rejected,
            accepted: parse_terms(&row.accepted)?,
            rejected: parse_terms(&row.rejected)?,
        })
    }
}
