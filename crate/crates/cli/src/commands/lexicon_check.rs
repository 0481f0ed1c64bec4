//! The `lexicon-check` subcommand: validate term-list files.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;

use gurmukhi_prep::wordlist::scan_wordlist;

#[derive(Args)]
pub struct CheckArgs {
    /// Term-list file to validate.
    pub path: PathBuf,
}

pub fn execute(args: CheckArgs) -> ExitCode {
    let scan = match scan_wordlist(&args.path) {
        Ok(scan) => scan,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    };
    if !scan.violations.is_empty() {
        for invalid in &scan.violations {
            eprintln!(
                "{}:{}: invalid entry {:?}: {}",
                args.path.display(),
                invalid.line,
                invalid.text,
                invalid.error
            );
        }
        return ExitCode::from(1);
    }
    println!(
        "{}: {} entries, {} duplicates",
        args.path.display(),
        scan.terms.len(),
        scan.duplicate_lines
    );
    ExitCode::SUCCESS
}
