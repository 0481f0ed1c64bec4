//! Character-level script gating: classification, symbol stripping, and
//! tokenization of raw text into Gurmukhi terms.
//!
//! Input is NFC-normalized before classification so that composed and
//! decomposed nukta spellings reach the exact-match stages downstream in
//! one canonical form. The accepted character set is the Gurmukhi Unicode
//! block U+0A00..=U+0A7F; whitespace, comma, and the dandas act as term
//! separators; every other codepoint is dropped.

use thiserror::Error;
use unicode_normalization::{is_nfc_quick, IsNormalized, UnicodeNormalization};

use crate::term::{RawDocument, Term};

const DANDA: char = '\u{0964}';
const DOUBLE_DANDA: char = '\u{0965}';

/// Classification of a single codepoint. The three classes partition all
/// of Unicode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharClass {
    /// Codepoints in the Gurmukhi block U+0A00..=U+0A7F; these form terms.
    Gurmukhi,
    /// Whitespace, comma, danda, and double danda; runs of these delimit
    /// terms.
    Separator,
    /// Everything else: punctuation, symbols, digits, foreign letters.
    /// Dropped without leaving a term boundary.
    Useless,
}

/// Classifies one codepoint. Total over all of Unicode.
pub fn classify_char(ch: char) -> CharClass {
    match ch {
        '\u{0A00}'..='\u{0A7F}' => CharClass::Gurmukhi,
        ' ' | '\t' | '\r' | '\n' | ',' | DANDA | DOUBLE_DANDA => CharClass::Separator,
        _ => CharClass::Useless,
    }
}

/// Reduces raw text to comma-separated Gurmukhi terms.
///
/// Useless codepoints vanish, each maximal separator run collapses to a
/// single ASCII comma, and leading/trailing separators are trimmed.
/// Gurmukhi text divided only by useless codepoints therefore joins into
/// one term. Idempotent.
pub fn strip_symbols(content: &str) -> String {
    let mut out = String::with_capacity(content.len());
    let mut pending_separator = false;
    for ch in content.nfc() {
        match classify_char(ch) {
            CharClass::Gurmukhi => {
                if pending_separator && !out.is_empty() {
                    out.push(',');
                }
                pending_separator = false;
                out.push(ch);
            }
            CharClass::Separator => pending_separator = true,
            CharClass::Useless => {}
        }
    }
    // Dropping a useless codepoint from between two combining marks can
    // leave them out of canonical order, so renormalize when in doubt.
    match is_nfc_quick(out.chars()) {
        IsNormalized::Yes => out,
        _ => out.nfc().collect(),
    }
}

/// Splits `strip_symbols` output on commas into terms, skipping empty
/// segments. Input containing anything but Gurmukhi codepoints and commas
/// is a caller bug.
pub fn tokenize(normalized: &str) -> Vec<Term> {
    normalized
        .split(',')
        .filter(|segment| !segment.is_empty())
        .map(|segment| Term::from_normalized(segment.to_string()))
        .collect()
}

/// Rejection for documents without any Gurmukhi content.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("document contains no Gurmukhi text")]
pub struct NotGurmukhi;

pub(crate) fn gate_content(content: &str) -> Result<(String, Vec<Term>), NotGurmukhi> {
    let stripped = strip_symbols(content);
    let terms = tokenize(&stripped);
    if terms.is_empty() && !content.is_empty() {
        return Err(NotGurmukhi);
    }
    Ok((stripped, terms))
}

/// Gates one document: strips symbols and tokenizes. A non-empty document
/// that yields no terms at all is rejected rather than passed through
/// empty; a document mixing Gurmukhi and foreign text is filtered, not
/// rejected.
pub fn gate_document(doc: &RawDocument) -> Result<Vec<Term>, NotGurmukhi> {
    gate_content(&doc.content).map(|(_, terms)| terms)
}
