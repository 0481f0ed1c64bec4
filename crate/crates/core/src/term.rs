//! Term and document types shared by every pipeline stage.

use std::borrow::Borrow;
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

use crate::corpus::DomainLabel;
use crate::script::{classify_char, CharClass};

/// A single Gurmukhi term, the pipeline's unit of work.
///
/// Construction NFC-normalizes the text and enforces script purity, so
/// two terms compare equal exactly when their canonical forms match.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Term(String);

impl Term {
    /// Builds a term from raw text.
    pub fn new(text: &str) -> Result<Self, TermError> {
        let normalized: String = text.nfc().collect();
        if normalized.is_empty() {
            return Err(TermError::Empty);
        }
        if let Some(ch) = normalized
            .chars()
            .find(|&c| classify_char(c) != CharClass::Gurmukhi)
        {
            return Err(TermError::NonGurmukhi { ch });
        }
        Ok(Term(normalized))
    }

    /// Wraps text that is already NFC-normalized, non-empty, and
    /// script-pure.
    pub(crate) fn from_normalized(text: String) -> Self {
        debug_assert!(
            matches!(Term::new(&text), Ok(t) if t.0 == text),
            "not a normalized term: {text:?}"
        );
        Term(text)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term({})", self.0)
    }
}

impl AsRef<str> for Term {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for Term {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Term {
    type Error = TermError;

    fn try_from(text: String) -> Result<Self, Self::Error> {
        Term::new(&text)
    }
}

impl From<Term> for String {
    fn from(term: Term) -> String {
        term.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("empty term")]
    Empty,
    #[error("non-Gurmukhi character {ch:?}")]
    NonGurmukhi { ch: char },
}

/// An input document before any processing.
#[derive(Debug, Clone)]
pub struct RawDocument {
    pub content: String,
    pub source_path: Option<PathBuf>,
    pub domain: Option<DomainLabel>,
}

impl RawDocument {
    pub fn from_text(content: impl Into<String>) -> Self {
        RawDocument {
            content: content.into(),
            source_path: None,
            domain: None,
        }
    }

    /// Reads a document from disk, rejecting non-UTF-8 content.
    pub fn from_path(
        path: impl AsRef<Path>,
        domain: Option<DomainLabel>,
    ) -> Result<Self, DocumentError> {
        let path = path.as_ref();
        let bytes = fs::read(path).map_err(|source| DocumentError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let content = String::from_utf8(bytes).map_err(|_| DocumentError::InvalidEncoding {
            path: path.to_path_buf(),
        })?;
        Ok(RawDocument {
            content,
            source_path: Some(path.to_path_buf()),
            domain,
        })
    }
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{} is not valid UTF-8", path.display())]
    InvalidEncoding { path: PathBuf },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_accepts_gurmukhi() {
        let term = Term::new("ਪੰਜਾਬ").unwrap();
        assert_eq!(term.as_str(), "ਪੰਜਾਬ");
    }

    #[test]
    fn term_rejects_empty_and_foreign() {
        assert_eq!(Term::new(""), Err(TermError::Empty));
        assert_eq!(Term::new("abc"), Err(TermError::NonGurmukhi { ch: 'a' }));
        assert_eq!(
            Term::new("ਦਿਨ ਹੱਕ"),
            Err(TermError::NonGurmukhi { ch: ' ' })
        );
    }

    #[test]
    fn term_normalizes_to_nfc() {
        // Precomposed U+0A5B canonically decomposes to U+0A1C U+0A3C and
        // is excluded from recomposition, so NFC keeps it decomposed.
        let term = Term::new("\u{0A5B}").unwrap();
        assert_eq!(term.as_str(), "\u{0A1C}\u{0A3C}");
        assert_eq!(term, Term::new("\u{0A1C}\u{0A3C}").unwrap());
    }

    #[test]
    fn term_serde_round_trip() {
        let term = Term::new("ਦਿਨ").unwrap();
        let json = serde_json::to_string(&term).unwrap();
        assert_eq!(json, "\"ਦਿਨ\"");
        let back: Term = serde_json::from_str(&json).unwrap();
        assert_eq!(back, term);
        assert!(serde_json::from_str::<Term>("\"abc\"").is_err());
    }

    #[test]
    fn document_from_path_rejects_bad_utf8() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.txt");
        fs::write(&path, [0xff, 0xfe, 0x41]).unwrap();
        match RawDocument::from_path(&path, None) {
            Err(DocumentError::InvalidEncoding { path: p }) => assert_eq!(p, path),
            other => panic!("expected InvalidEncoding, got {other:?}"),
        }
    }
}
