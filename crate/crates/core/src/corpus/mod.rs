//! Corpus discovery over domain-labeled directories, deterministic
//! learning/testing splits, and aggregation of document reports.

mod split;
mod stats;

pub use split::{
    split_corpus, ManifestEntry, ManifestParseError, SplitAssignment, SplitError, SplitManifest,
};
pub use stats::{aggregate_stats, CorpusStats, StatsBucket};

use std::fmt;
use std::path::{Component, Path, PathBuf};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;
use walkdir::WalkDir;

/// Domain of a corpus document, taken from its subdirectory name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DomainLabel {
    Agriculture,
    Entertainment,
    Health,
    Politics,
    Sports,
    /// Any other subdirectory name.
    Other(String),
}

impl DomainLabel {
    /// Maps a subdirectory name onto a label, case-insensitively for the
    /// five known domains.
    pub fn from_dir_name(name: &str) -> Self {
        match name.to_ascii_lowercase().as_str() {
            "agriculture" => DomainLabel::Agriculture,
            "entertainment" => DomainLabel::Entertainment,
            "health" => DomainLabel::Health,
            "politics" => DomainLabel::Politics,
            "sports" => DomainLabel::Sports,
            _ => DomainLabel::Other(name.to_string()),
        }
    }

    pub fn as_str(&self) -> &str {
        match self {
            DomainLabel::Agriculture => "agriculture",
            DomainLabel::Entertainment => "entertainment",
            DomainLabel::Health => "health",
            DomainLabel::Politics => "politics",
            DomainLabel::Sports => "sports",
            DomainLabel::Other(name) => name,
        }
    }
}

impl fmt::Display for DomainLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for DomainLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for DomainLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let name = String::deserialize(deserializer)?;
        if name.is_empty() {
            return Err(D::Error::custom("empty domain label"));
        }
        Ok(DomainLabel::from_dir_name(&name))
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{} is not a directory", .0.display())]
    NotADirectory(PathBuf),
    #[error("no .txt documents found under {}", .0.display())]
    EmptyCorpus(PathBuf),
    #[error("cannot read corpus: {0}")]
    Walk(#[from] walkdir::Error),
}

fn is_txt(path: &Path) -> bool {
    path.extension()
        .map(|ext| ext.eq_ignore_ascii_case("txt"))
        .unwrap_or(false)
}

/// Finds every `.txt` file under the domain subdirectories of `root`,
/// labeled by subdirectory, in lexicographic path order. Files directly
/// in `root` are not part of a domain and are ignored.
pub fn discover_corpus(root: impl AsRef<Path>) -> Result<Vec<(PathBuf, DomainLabel)>, CorpusError> {
    let root = root.as_ref();
    if !root.is_dir() {
        return Err(CorpusError::NotADirectory(root.to_path_buf()));
    }
    let mut files = Vec::new();
    for entry in WalkDir::new(root).min_depth(2).sort_by_file_name() {
        let entry = entry?;
        if !entry.file_type().is_file() || !is_txt(entry.path()) {
            continue;
        }
        let relative = entry
            .path()
            .strip_prefix(root)
            .expect("walk stays under root");
        let Some(Component::Normal(domain_dir)) = relative.components().next() else {
            continue;
        };
        files.push((
            entry.path().to_path_buf(),
            DomainLabel::from_dir_name(&domain_dir.to_string_lossy()),
        ));
    }
    if files.is_empty() {
        return Err(CorpusError::EmptyCorpus(root.to_path_buf()));
    }
    files.sort();
    Ok(files)
}
