//! The `stats` subcommand: re-aggregate statistics from report files.

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;

use gurmukhi_prep::aggregate_stats;

use crate::reports::{self, ReportFormat};

#[derive(Args)]
pub struct StatsArgs {
    /// Report files to aggregate (.jsonl or .csv).
    #[arg(required = true)]
    pub reports: Vec<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
    /// Output file; stdout when omitted.
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

pub fn execute(args: StatsArgs) -> ExitCode {
    let mut all = Vec::new();
    for path in &args.reports {
        match reports::read_reports(path) {
            Ok(mut reports) => all.append(&mut reports),
            Err(message) => {
                eprintln!("error: {message}");
                return ExitCode::from(1);
            }
        }
    }
    all.sort_by(|a, b| a.source_path.cmp(&b.source_path));
    let stats = aggregate_stats(&all);
    let result = match &args.out {
        Some(path) => reports::write_stats(&stats, args.format, path),
        None => reports::write_stats_to(&stats, args.format, &mut io::stdout().lock()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // A closed stdout (e.g. piping into head) is not a failure.
        Err(err) if err.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: cannot write stats: {err}");
            ExitCode::from(1)
        }
    }
}
