//! Seeded, per-domain splitting of a corpus into learning and testing
//! sets.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::DomainLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitAssignment {
    Learning,
    Testing,
}

impl SplitAssignment {
    pub fn as_str(self) -> &'static str {
        match self {
            SplitAssignment::Learning => "learning",
            SplitAssignment::Testing => "testing",
        }
    }
}

impl fmt::Display for SplitAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub path: PathBuf,
    pub domain: DomainLabel,
    pub assignment: SplitAssignment,
}

/// Deterministic learning/testing assignment for a corpus. The same
/// corpus, ratio, and seed always produce the same manifest, byte for
/// byte.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitManifest {
    /// Entries sorted by domain name, then path.
    pub entries: Vec<ManifestEntry>,
    pub ratio: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SplitError {
    #[error("ratio {0} is outside the open interval (0, 1)")]
    InvalidRatio(f64),
}

/// Shuffles each domain's files with a ChaCha8 RNG seeded by `seed` and
/// assigns the first `round(ratio * n)` to the learning set, the rest to
/// testing. Domains are processed in label order, so the assignment is a
/// pure function of (files, ratio, seed).
pub fn split_corpus(
    files: &[(PathBuf, DomainLabel)],
    ratio: f64,
    seed: u64,
) -> Result<SplitManifest, SplitError> {
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(SplitError::InvalidRatio(ratio));
    }
    let mut by_domain: BTreeMap<&DomainLabel, Vec<&PathBuf>> = BTreeMap::new();
    for (path, domain) in files {
        by_domain.entry(domain).or_default().push(path);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Vec::with_capacity(files.len());
    for (domain, mut paths) in by_domain {
        paths.sort();
        paths.dedup();
        paths.shuffle(&mut rng);
        // Round half up; the remainder goes to the testing set.
        let learning = ((ratio * paths.len() as f64).round() as usize).min(paths.len());
        for (index, path) in paths.into_iter().enumerate() {
            entries.push(ManifestEntry {
                path: path.clone(),
                domain: domain.clone(),
                assignment: if index < learning {
                    SplitAssignment::Learning
                } else {
                    SplitAssignment::Testing
                },
            });
        }
    }
    entries.sort_by(|a, b| {
        (a.domain.as_str(), &a.path).cmp(&(b.domain.as_str(), &b.path))
    });
    Ok(SplitManifest {
        entries,
        ratio,
        seed,
    })
}

#[derive(Debug, Error)]
pub enum ManifestParseError {
    #[error("read error: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

impl SplitManifest {
    /// Writes the manifest: `# ratio` and `# seed` header lines, then one
    /// tab-separated `<assignment>\t<domain>\t<path>` line per file.
    pub fn write_to<W: Write>(&self, mut writer: W) -> io::Result<()> {
        writeln!(writer, "# ratio\t{}", self.ratio)?;
        writeln!(writer, "# seed\t{}", self.seed)?;
        for entry in &self.entries {
            writeln!(
                writer,
                "{}\t{}\t{}",
                entry.assignment,
                entry.domain,
                entry.path.display()
            )?;
        }
        Ok(())
    }

    /// Renders the manifest to its file representation.
    pub fn to_text(&self) -> String {
        let mut bytes = Vec::new();
        self.write_to(&mut bytes).expect("write to Vec");
        String::from_utf8(bytes).expect("manifest is UTF-8")
    }

    /// Parses a manifest written by [`SplitManifest::write_to`].
    pub fn parse<R: BufRead>(reader: R) -> Result<Self, ManifestParseError> {
        let malformed = |line: usize, message: &str| ManifestParseError::Malformed {
            line,
            message: message.to_string(),
        };
        let mut ratio = None;
        let mut seed = None;
        let mut entries = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let number = idx + 1;
            if let Some(header) = line.strip_prefix('#') {
                let mut fields = header.trim().splitn(2, '\t');
                match (fields.next(), fields.next()) {
                    (Some("ratio"), Some(value)) => {
                        ratio = Some(
                            value
                                .parse()
                                .map_err(|_| malformed(number, "bad ratio value"))?,
                        );
                    }
                    (Some("seed"), Some(value)) => {
                        seed = Some(
                            value
                                .parse()
                                .map_err(|_| malformed(number, "bad seed value"))?,
                        );
                    }
                    _ => {}
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let mut fields = line.splitn(3, '\t');
            let (Some(assignment), Some(domain), Some(path)) =
                (fields.next(), fields.next(), fields.next())
            else {
                return Err(malformed(number, "expected assignment\\tdomain\\tpath"));
            };
            let assignment = match assignment {
                "learning" => SplitAssignment::Learning,
                "testing" => SplitAssignment::Testing,
                other => return Err(malformed(number, &format!("unknown assignment {other:?}"))),
            };
            entries.push(ManifestEntry {
                path: PathBuf::from(path),
                domain: DomainLabel::from_dir_name(domain),
                assignment,
            });
        }
        Ok(SplitManifest {
            entries,
            ratio: ratio.ok_or_else(|| malformed(0, "missing ratio header"))?,
            seed: seed.ok_or_else(|| malformed(0, "missing seed header"))?,
        })
    }

    /// (learning, testing) counts for one domain.
    pub fn domain_counts(&self, domain: &DomainLabel) -> (usize, usize) {
        let mut learning = 0;
        let mut testing = 0;
        for entry in self.entries.iter().filter(|e| &e.domain == domain) {
            match entry.assignment {
                SplitAssignment::Learning => learning += 1,
                SplitAssignment::Testing => testing += 1,
            }
        }
        (learning, testing)
    }
}
