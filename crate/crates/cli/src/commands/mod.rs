//! Subcommand implementations.

pub mod lexicon_check;
pub mod run;
pub mod split;
pub mod stats;

use std::fs;
use std::path::{Path, PathBuf};

use gurmukhi_prep::{discover_corpus, CorpusError, DomainLabel};

/// Collects the corpus documents under `root`: domain subdirectories when
/// present, otherwise the root's own `.txt` files labeled by the
/// directory name.
pub(crate) fn collect_corpus_files(
    root: &Path,
) -> Result<Vec<(PathBuf, DomainLabel)>, String> {
    match discover_corpus(root) {
        Ok(files) => Ok(files),
        Err(CorpusError::EmptyCorpus(_)) => {
            let label = flat_label(root);
            let mut files = Vec::new();
            let entries = fs::read_dir(root)
                .map_err(|err| format!("cannot read {}: {err}", root.display()))?;
            for entry in entries {
                let entry = entry.map_err(|err| err.to_string())?;
                let path = entry.path();
                let is_txt = path
                    .extension()
                    .map(|ext| ext.eq_ignore_ascii_case("txt"))
                    .unwrap_or(false);
                if path.is_file() && is_txt {
                    files.push((path, label.clone()));
                }
            }
            if files.is_empty() {
                return Err(format!("no .txt documents found under {}", root.display()));
            }
            files.sort();
            Ok(files)
        }
        Err(err) => Err(err.to_string()),
    }
}

fn flat_label(root: &Path) -> DomainLabel {
    let name = root
        .canonicalize()
        .ok()
        .and_then(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()))
        .unwrap_or_else(|| "corpus".to_string());
    DomainLabel::from_dir_name(&name)
}
