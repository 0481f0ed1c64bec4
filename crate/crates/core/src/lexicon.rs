//! Dictionary and gazetteer term lists, and the partition of candidate
//! terms into matched and rejected.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use crate::term::Term;
use crate::wordlist::{self, WordListError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LexiconKind {
    Dictionary,
    Gazetteer,
}

/// Immutable term set with exact-match lookup.
#[derive(Debug, Clone)]
pub struct Lexicon {
    kind: LexiconKind,
    terms: HashSet<Term>,
    source_path: Option<PathBuf>,
}

impl Lexicon {
    /// Loads a lexicon from a term-list file.
    pub fn load(path: impl AsRef<Path>, kind: LexiconKind) -> Result<Self, WordListError> {
        let path = path.as_ref();
        Ok(Lexicon {
            kind,
            terms: wordlist::load_wordlist(path)?,
            source_path: Some(path.to_path_buf()),
        })
    }

    pub fn from_terms(kind: LexiconKind, terms: impl IntoIterator<Item = Term>) -> Self {
        Lexicon {
            kind,
            terms: terms.into_iter().collect(),
            source_path: None,
        }
    }

    /// True iff the term is an exact NFC-codepoint match of an entry.
    pub fn contains(&self, term: &Term) -> bool {
        self.terms.contains(term)
    }

    pub fn kind(&self) -> LexiconKind {
        self.kind
    }

    /// Count of distinct entries.
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

/// Terms routed by lexicon matching. The three buckets are disjoint and
/// together carry every input term, each in input order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MatchPartition {
    pub dictionary_matched: Vec<Term>,
    pub gazetteer_matched: Vec<Term>,
    pub rejected: Vec<Term>,
}

/// Tests each term against the dictionary first, then the gazetteer;
/// misses on both are rejected. A term present in both lexicons counts as
/// dictionary-matched.
pub fn match_terms(terms: Vec<Term>, dict: &Lexicon, gaz: &Lexicon) -> MatchPartition {
    debug_assert_eq!(dict.kind(), LexiconKind::Dictionary);
    debug_assert_eq!(gaz.kind(), LexiconKind::Gazetteer);
    let mut partition = MatchPartition::default();
    for term in terms {
        if dict.contains(&term) {
            partition.dictionary_matched.push(term);
        } else if gaz.contains(&term) {
            partition.gazetteer_matched.push(term);
        } else {
            partition.rejected.push(term);
        }
    }
    partition
}
