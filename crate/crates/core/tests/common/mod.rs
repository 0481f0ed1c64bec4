//! Shared test support: an independent single-pass reference
//! implementation of the pipeline, plus deterministic synthetic-corpus
//! generators.
//!
//! The reference works on plain strings with linear scans instead of the
//! library's types and hash sets, so it can disagree with the staged
//! pipeline if either drifts.

#![allow(dead_code)]

use unicode_normalization::UnicodeNormalization;

/// Counts and partitions the reference computes for one document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefReport {
    pub n_tokens: usize,
    pub n_duplicates: usize,
    pub n_stopwords: usize,
    pub n_dict: usize,
    pub n_gaz: usize,
    pub n_rejected: usize,
    pub accepted: Vec<String>,
    pub rejected: Vec<String>,
}

fn nfc(text: &str) -> String {
    text.nfc().collect()
}

fn is_gurmukhi(ch: char) -> bool {
    ('\u{0A00}'..='\u{0A7F}').contains(&ch)
}

fn is_separator(ch: char) -> bool {
    matches!(ch, ' ' | '\t' | '\r' | '\n' | ',' | '\u{0964}' | '\u{0965}')
}

/// Reference tokenization: paint Gurmukhi codepoints and newline markers
/// for separators onto a canvas, drop everything else, then split.
pub fn ref_tokenize(content: &str) -> Vec<String> {
    let mut canvas = String::new();
    for ch in nfc(content).chars() {
        if is_gurmukhi(ch) {
            canvas.push(ch);
        } else if is_separator(ch) {
            canvas.push('\n');
        }
    }
    canvas
        .split('\n')
        .filter(|segment| !segment.is_empty())
        .map(nfc)
        .collect()
}

/// Single-pass reference pipeline. Returns `None` where the library
/// rejects the document as containing no Gurmukhi text.
pub fn ref_preprocess(
    content: &str,
    stops: &[String],
    dict: &[String],
    gaz: &[String],
) -> Option<RefReport> {
    let stops: Vec<String> = stops.iter().map(|w| nfc(w)).collect();
    let dict: Vec<String> = dict.iter().map(|w| nfc(w)).collect();
    let gaz: Vec<String> = gaz.iter().map(|w| nfc(w)).collect();

    let tokens = ref_tokenize(content);
    if tokens.is_empty() && !content.is_empty() {
        return None;
    }
    let n_tokens = tokens.len();

    let mut unique: Vec<String> = Vec::new();
    for token in tokens {
        if !unique.contains(&token) {
            unique.push(token);
        }
    }
    let n_duplicates = n_tokens - unique.len();

    let kept: Vec<String> = unique
        .iter()
        .filter(|t| !stops.contains(t))
        .cloned()
        .collect();
    let n_stopwords = unique.len() - kept.len();

    let mut dict_matched = Vec::new();
    let mut gaz_matched = Vec::new();
    let mut rejected = Vec::new();
    for term in kept {
        if dict.contains(&term) {
            dict_matched.push(term);
        } else if gaz.contains(&term) {
            gaz_matched.push(term);
        } else {
            rejected.push(term);
        }
    }

    let n_dict = dict_matched.len();
    let n_gaz = gaz_matched.len();
    let n_rejected = rejected.len();
    let mut accepted = dict_matched;
    accepted.append(&mut gaz_matched);

    Some(RefReport {
        n_tokens,
        n_duplicates,
        n_stopwords,
        n_dict,
        n_gaz,
        n_rejected,
        accepted,
        rejected,
    })
}

const CONSONANTS: [char; 25] = [
    'ਕ', 'ਖ', 'ਗ', 'ਘ', 'ਚ', 'ਛ', 'ਜ', 'ਝ', 'ਟ', 'ਠ', 'ਡ', 'ਢ', 'ਤ', 'ਥ', 'ਦ', 'ਧ', 'ਨ', 'ਪ', 'ਫ',
    'ਬ', 'ਭ', 'ਮ', 'ਰ', 'ਲ', 'ਸ',
];

/// Deterministic synthetic Gurmukhi word for an index; distinct indices
/// give distinct words.
pub fn synth_word(index: usize) -> String {
    let mut word = String::new();
    let mut rest = index;
    for _ in 0..3 {
        word.push(CONSONANTS[rest % CONSONANTS.len()]);
        rest /= CONSONANTS.len();
    }
    while rest > 0 {
        word.push(CONSONANTS[rest % CONSONANTS.len()]);
        rest /= CONSONANTS.len();
    }
    word
}

/// Disjoint pools of synthetic words for building resources and corpora.
/// Pool `k` draws from indices `k`, `k + stride`, `k + 2*stride`, ...
pub fn synth_pool(pool: usize, stride: usize, len: usize) -> Vec<String> {
    (0..len).map(|i| synth_word(pool + i * stride)).collect()
}

#[cfg(test)]
mod self_tests {
    use super::*;

    #[test]
    fn synth_words_are_distinct() {
        let words: std::collections::HashSet<String> = (0..5000).map(synth_word).collect();
        assert_eq!(words.len(), 5000);
    }

    #[test]
    fn ref_tokenize_matches_hand_expectation() {
        assert_eq!(ref_tokenize("ਦਿਨ, ਹੱਕ।"), ["ਦਿਨ", "ਹੱਕ"]);
        assert_eq!(ref_tokenize("a ਦਿਨ1ਹੱਕ b"), ["ਦਿਨਹੱਕ"]);
        assert!(ref_tokenize("no gurmukhi").is_empty());
    }
}
