//! Pre-processing pipeline for Gurmukhi-script Punjabi text corpora.
//!
//! Raw documents pass through six stages: script gating, useless-symbol
//! removal, duplicate elimination, stop-word filtering, dictionary
//! matching, and gazetteer matching. The surviving terms are partitioned
//! into accepted and rejected lists, and per-document reports aggregate
//! into per-domain and overall corpus statistics. A seeded splitter
//! divides a corpus into learning and testing sets.

pub mod corpus;
pub mod filters;
pub mod lexicon;
pub mod pipeline;
pub mod script;
pub mod term;
pub mod wordlist;

pub use corpus::{
    aggregate_stats, discover_corpus, split_corpus, CorpusError, CorpusStats, DomainLabel,
    SplitManifest, StatsBucket,
};
pub use filters::{dedup_terms, remove_stopwords, DedupResult, StopList};
pub use lexicon::{match_terms, Lexicon, LexiconKind, MatchPartition};
pub use pipeline::{
    preprocess_document, preprocess_document_traced, write_outputs, DocumentReport, Resources,
    StageTrace,
};
pub use script::{classify_char, gate_document, strip_symbols, tokenize, CharClass, NotGurmukhi};
pub use term::{RawDocument, Term};
