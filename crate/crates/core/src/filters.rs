//! Duplicate-term elimination and stop-word removal.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use crate::term::Term;
use crate::wordlist::{self, WordListError};

/// Outcome of duplicate removal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedupResult {
    /// First occurrences, in input order.
    pub unique: Vec<Term>,
    /// How many later occurrences were dropped.
    pub duplicate_count: usize,
}

/// Keeps the first occurrence of each distinct term, counting every later
/// occurrence as a duplicate.
pub fn dedup_terms(terms: Vec<Term>) -> DedupResult {
    let total = terms.len();
    let mut seen: HashSet<Term> = HashSet::with_capacity(total);
    let mut unique = Vec::with_capacity(total);
    for term in terms {
        if seen.insert(term.clone()) {
            unique.push(term);
        }
    }
    DedupResult {
        duplicate_count: total - unique.len(),
        unique,
    }
}

/// Immutable stop-word membership set.
#[derive(Debug, Clone)]
pub struct StopList {
    terms: HashSet<Term>,
    source_path: Option<PathBuf>,
}

impl StopList {
    /// Loads a stop list from a term-list file; duplicate lines collapse
    /// silently.
    pub fn load(path: impl AsRef<Path>) -> Result<Self, WordListError> {
        let path = path.as_ref();
        Ok(StopList {
            terms: wordlist::load_wordlist(path)?,
            source_path: Some(path.to_path_buf()),
        })
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        StopList {
            terms: terms.into_iter().collect(),
            source_path: None,
        }
    }

    pub fn contains(&self, term: &Term) -> bool {
        self.terms.contains(term)
    }

    /// Count of distinct stop words.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn source_path(&self) -> Option<&Path> {
        self.source_path.as_deref()
    }
}

/// Drops stop-listed terms, preserving order. Returns the kept terms and
/// the removed count.
pub fn remove_stopwords(terms: Vec<Term>, stops: &StopList) -> (Vec<Term>, usize) {
    let total = terms.len();
    let kept: Vec<Term> = terms.into_iter().filter(|t| !stops.contains(t)).collect();
    let removed = total - kept.len();
    (kept, removed)
}
