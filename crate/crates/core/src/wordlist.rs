//! Line-oriented term-list files, the shared format for stop lists,
//! dictionaries, and gazetteers: UTF-8, one term per line, LF or CRLF,
//! surrounding whitespace trimmed, lines starting with `#` ignored.

use std::collections::HashSet;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::term::{Term, TermError};

#[derive(Debug, Error)]
pub enum WordListError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{} is not valid UTF-8", path.display())]
    InvalidEncoding { path: PathBuf },
    #[error("{}:{line}: invalid entry {text:?}: {source}", path.display())]
    InvalidEntry {
        path: PathBuf,
        line: usize,
        text: String,
        #[source]
        source: TermError,
    },
}

/// An entry that failed term validation, with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidLine {
    pub line: usize,
    pub text: String,
    pub error: TermError,
}

/// Full scan of a term-list file: the distinct terms plus the bookkeeping
/// `lexicon-check` reports.
#[derive(Debug)]
pub struct WordListScan {
    pub terms: HashSet<Term>,
    /// Count of non-comment lines whose term had already appeared.
    pub duplicate_lines: usize,
    /// Every invalid entry, in file order.
    pub violations: Vec<InvalidLine>,
}

/// Reads and validates a term-list file, collecting all violations
/// instead of stopping at the first.
pub fn scan_wordlist(path: impl AsRef<Path>) -> Result<WordListScan, WordListError> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|source| WordListError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let text = String::from_utf8(bytes).map_err(|_| WordListError::InvalidEncoding {
        path: path.to_path_buf(),
    })?;
    let mut scan = WordListScan {
        terms: HashSet::new(),
        duplicate_lines: 0,
        violations: Vec::new(),
    };
    for (idx, line) in text.lines().enumerate() {
        let entry = line.trim();
        if entry.is_empty() || entry.starts_with('#') {
            continue;
        }
        match Term::new(entry) {
            Ok(term) => {
                if !scan.terms.insert(term) {
                    scan.duplicate_lines += 1;
                }
            }
            Err(error) => scan.violations.push(InvalidLine {
                line: idx + 1,
                text: entry.to_string(),
                error,
            }),
        }
    }
    Ok(scan)
}

/// Reads a term-list file, failing on the first invalid entry. Duplicate
/// lines collapse silently.
pub fn load_wordlist(path: impl AsRef<Path>) -> Result<HashSet<Term>, WordListError> {
    let path = path.as_ref();
    let scan = scan_wordlist(path)?;
    if let Some(invalid) = scan.violations.into_iter().next() {
        return Err(WordListError::InvalidEntry {
            path: path.to_path_buf(),
            line: invalid.line,
            text: invalid.text,
            source: invalid.error,
        });
    }
    Ok(scan.terms)
}
