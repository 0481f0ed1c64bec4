//! The `run` subcommand: the full pipeline over one document or a corpus
//! directory, with parallel workers over shared read-only resources.

use std::collections::BTreeSet;
use std::fs;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Args;
use rayon::prelude::*;

use gurmukhi_prep::pipeline::{
    preprocess_document, preprocess_document_traced, write_outputs, write_trace, Resources,
};
use gurmukhi_prep::{aggregate_stats, DocumentReport, DomainLabel, RawDocument};

use crate::reports::{self, ReportFormat};

#[derive(Args)]
pub struct RunArgs {
    /// Input document or corpus root directory.
    pub input: PathBuf,
    /// Stop-word list file.
    #[arg(long)]
    pub stoplist: PathBuf,
    /// Dictionary term-list file.
    #[arg(long)]
    pub dict: PathBuf,
    /// Gazetteer term-list file.
    #[arg(long)]
    pub gazetteer: PathBuf,
    /// Directory for term files, reports, and statistics.
    #[arg(long, short = 'o')]
    pub out_dir: PathBuf,
    /// Report file format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
    /// Also write per-stage intermediate term files.
    #[arg(long)]
    pub keep_intermediate: bool,
    /// Abort on the first failed document instead of skipping it.
    #[arg(long)]
    pub fail_fast: bool,
    /// Worker threads; defaults to available parallelism.
    #[arg(long, env = "GURMUKHI_PREP_WORKERS")]
    pub workers: Option<NonZeroUsize>,
}

struct WorkItem {
    path: PathBuf,
    domain: Option<DomainLabel>,
    /// Directory the document's term files go to, mirroring the input
    /// layout under `--out-dir`.
    out_dir: PathBuf,
}

#[derive(Debug)]
struct Skip {
    path: PathBuf,
    reason: String,
}

pub fn execute(args: RunArgs) -> ExitCode {
    let resources = match Resources::load(&args.stoplist, &args.dict, &args.gazetteer) {
        Ok(resources) => resources,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    };

    let items = match collect_work(&args) {
        Ok(items) => items,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(1);
        }
    };

    let out_dirs: BTreeSet<&Path> = items.iter().map(|item| item.out_dir.as_path()).collect();
    for dir in out_dirs {
        if let Err(err) = fs::create_dir_all(dir) {
            eprintln!("error: cannot create {}: {err}", dir.display());
            return ExitCode::from(1);
        }
    }

    let workers = args
        .workers
        .or_else(|| std::thread::available_parallelism().ok())
        .map(NonZeroUsize::get)
        .unwrap_or(1);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool,
        Err(err) => {
            eprintln!("error: cannot start {workers} workers: {err}");
            return ExitCode::from(1);
        }
    };

    let process = |item: &WorkItem| process_document(item, &resources, args.keep_intermediate);
    let (mut reports, skips) = if args.fail_fast {
        let all: Result<Vec<DocumentReport>, Skip> =
            pool.install(|| items.par_iter().map(process).collect());
        match all {
            Ok(reports) => (reports, Vec::new()),
            Err(skip) => {
                eprintln!("error: {}: {}", skip.path.display(), skip.reason);
                return ExitCode::from(1);
            }
        }
    } else {
        let results: Vec<Result<DocumentReport, Skip>> =
            pool.install(|| items.par_iter().map(process).collect());
        let mut reports = Vec::new();
        let mut skips = Vec::new();
        for result in results {
            match result {
                Ok(report) => reports.push(report),
                Err(skip) => skips.push(skip),
            }
        }
        (reports, skips)
    };

    reports.sort_by(|a, b| a.source_path.cmp(&b.source_path));
    let mut stats = aggregate_stats(&reports);
    stats.skipped_documents = skips.len();

    let reports_path = args.out_dir.join(args.format.reports_file());
    if let Err(err) = reports::write_reports(&reports, args.format, &reports_path) {
        eprintln!("error: cannot write {}: {err}", reports_path.display());
        return ExitCode::from(1);
    }
    let stats_path = args.out_dir.join(args.format.stats_file());
    if let Err(err) = reports::write_stats(&stats, args.format, &stats_path) {
        eprintln!("error: cannot write {}: {err}", stats_path.display());
        return ExitCode::from(1);
    }
    if !skips.is_empty() {
        let skip_path = args.out_dir.join("skipped.tsv");
        let mut lines = String::new();
        for skip in &skips {
            lines.push_str(&format!("{}\t{}\n", skip.path.display(), skip.reason));
        }
        if let Err(err) = fs::write(&skip_path, lines) {
            eprintln!("error: cannot write {}: {err}", skip_path.display());
            return ExitCode::from(1);
        }
        for skip in &skips {
            eprintln!("skipped {}: {}", skip.path.display(), skip.reason);
        }
    }

    println!(
        "processed {} document(s), skipped {}; reports in {}",
        reports.len(),
        skips.len(),
        args.out_dir.display()
    );
    if skips.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn collect_work(args: &RunArgs) -> Result<Vec<WorkItem>, String> {
    if args.input.is_file() {
        return Ok(vec![WorkItem {
            path: args.input.clone(),
            domain: None,
            out_dir: args.out_dir.clone(),
        }]);
    }
    if !args.input.is_dir() {
        return Err(format!(
            "{} is neither a file nor a directory",
            args.input.display()
        ));
    }
    let files = super::collect_corpus_files(&args.input)?;
    Ok(files
        .into_iter()
        .map(|(path, domain)| {
            let relative_dir = path
                .strip_prefix(&args.input)
                .ok()
                .and_then(Path::parent)
                .unwrap_or_else(|| Path::new(""));
            WorkItem {
                out_dir: args.out_dir.join(relative_dir),
                path,
                domain: Some(domain),
            }
        })
        .collect())
}

fn process_document(
    item: &WorkItem,
    resources: &Resources,
    keep_intermediate: bool,
) -> Result<DocumentReport, Skip> {
    let skip = |reason: String| Skip {
        path: item.path.clone(),
        reason,
    };
    let doc = RawDocument::from_path(&item.path, item.domain.clone())
        .map_err(|err| skip(err.to_string()))?;
    let report = if keep_intermediate {
        let (report, trace) =
            preprocess_document_traced(&doc, resources).map_err(|err| skip(err.to_string()))?;
        let stem = gurmukhi_prep::pipeline::output_stem(&report);
        write_trace(&trace, &stem, &item.out_dir).map_err(|err| skip(err.to_string()))?;
        report
    } else {
        preprocess_document(&doc, resources).map_err(|err| skip(err.to_string()))?
    };
    write_outputs(&report, &item.out_dir).map_err(|err| skip(err.to_string()))?;
    Ok(report)
}
