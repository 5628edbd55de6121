//! Predicate-driven scanning of branching-data files.
//!
//! Files are read in one streaming pass with memory bounded per entry, so
//! arbitrarily large archives can be filtered without loading them.  The
//! format is detected from the first non-blank line: `[*` opens a
//! group-signature line file, a line containing `][` is a bracket-row file,
//! anything else is read as star-separated blocks.
//!
//! Predicates see parsed entries carrying the legacy label and signature;
//! they deliberately do not get a built group.  A predicate that needs
//! element arithmetic opts in by calling [`DataEntry::build_group`], which
//! constructs a permutation group from the entry's own rows.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::catalog::GroupLabel;
use crate::datafmt::{self, GroupSignatureLine, VectorBlock};
use crate::error::{Error, Result};
use crate::genvec::GeneratingVector;
use crate::group::PermGroup;
use crate::signature::Signature;

/// One parsed entry of a data file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DataEntry {
    /// A `[*genus, order, signature, id *]` line; carries no permutations.
    Line(GroupSignatureLine),
    /// A generating-vector entry from block or bracket-row format.
    Block(VectorBlock),
}

impl DataEntry {
    pub fn label(&self) -> &GroupLabel {
        match self {
            DataEntry::Line(line) => &line.group_id,
            DataEntry::Block(block) => &block.group_id,
        }
    }

    pub fn signature(&self) -> &Signature {
        match self {
            DataEntry::Line(line) => &line.signature,
            DataEntry::Block(block) => &block.signature,
        }
    }

    /// The raw permutation rows, when the entry has any.
    pub fn rows(&self) -> Option<&[crate::perm::Permutation]> {
        match self {
            DataEntry::Line(_) => None,
            DataEntry::Block(block) => Some(&block.rows),
        }
    }

    /// The entry's vector with its file-verbatim class tuple.
    pub fn generating_vector(&self) -> Option<GeneratingVector> {
        match self {
            DataEntry::Line(_) => None,
            DataEntry::Block(block) => Some(GeneratingVector::from_entries(
                block.signature.orbit_genus(),
                block.rows.clone(),
                block.class_tuple.clone(),
            )),
        }
    }

    /// Builds a permutation group from the entry's own rows.  This is the
    /// opt-in for predicates that need element arithmetic; plain label or
    /// signature filters should not pay for it.
    pub fn build_group(&self) -> Result<PermGroup> {
        match self {
            DataEntry::Line(_) => Err(Error::Unsupported(
                "group-signature lines carry no permutations to build from".to_string(),
            )),
            DataEntry::Block(block) => {
                let degree = block.rows.first().map(|p| p.degree()).unwrap_or(1);
                PermGroup::new(degree, block.rows.clone())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FileFormat {
    Line,
    Bracket,
    Block,
}

fn detect_format(first_line: &str) -> FileFormat {
    let t = first_line.trim();
    if t.starts_with("[*") {
        FileFormat::Line
    } else if t.starts_with('[') && t.contains("][") {
        FileFormat::Bracket
    } else {
        FileFormat::Block
    }
}

/// Streaming scanner yielding `(entry_index, parsed entry or error)`.
///
/// Indices are 0-based and count every entry, including ones that fail to
/// parse.  A failed block does not poison the scan: the stream resumes at
/// the next `*` boundary, so callers that tolerate errors (verification)
/// can keep consuming.
pub struct Scanner {
    lines: std::io::Lines<BufReader<File>>,
    path: PathBuf,
    line_no: usize,
    format: Option<FileFormat>,
    segment: Vec<(usize, String)>,
    entry_index: usize,
    done: bool,
}

/// Opens a file for streaming entry-by-entry scanning.
pub fn scan(path: impl AsRef<Path>) -> Result<Scanner> {
    let path = path.as_ref().to_path_buf();
    let file = File::open(&path).map_err(|e| Error::io(&path, e))?;
    Ok(Scanner {
        lines: BufReader::new(file).lines(),
        path,
        line_no: 0,
        format: None,
        segment: Vec::new(),
        entry_index: 0,
        done: false,
    })
}

impl Scanner {
    fn emit(&mut self, item: Result<DataEntry>) -> (usize, Result<DataEntry>) {
        let index = self.entry_index;
        self.entry_index += 1;
        (index, item)
    }

    fn finish_segment(&mut self) -> Option<(usize, Result<DataEntry>)> {
        if self.segment.is_empty() {
            return None;
        }
        let borrowed: Vec<(usize, &str)> = self
            .segment
            .iter()
            .map(|(no, text)| (*no, text.as_str()))
            .collect();
        let parsed = datafmt::parse_block(&borrowed).map(DataEntry::Block);
        self.segment.clear();
        Some(self.emit(parsed))
    }
}

impl Iterator for Scanner {
    type Item = (usize, Result<DataEntry>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        loop {
            let line = match self.lines.next() {
                Some(Ok(line)) => line,
                Some(Err(e)) => {
                    self.done = true;
                    let err = Error::io(&self.path, e);
                    return Some(self.emit(Err(err)));
                }
                None => {
                    self.done = true;
                    return self.finish_segment();
                }
            };
            self.line_no += 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let format = *self
                .format
                .get_or_insert_with(|| detect_format(trimmed));
            match format {
                FileFormat::Line => {
                    let parsed = datafmt::parse_group_signature_line(trimmed)
                        .map(DataEntry::Line)
                        .map_err(|e| line_context(self.line_no, e));
                    return Some(self.emit(parsed));
                }
                FileFormat::Bracket => {
                    let parsed =
                        datafmt::parse_bracket_row(self.line_no, trimmed).map(DataEntry::Block);
                    return Some(self.emit(parsed));
                }
                FileFormat::Block => {
                    if trimmed == "*" {
                        if let Some(item) = self.finish_segment() {
                            return Some(item);
                        }
                        continue;
                    }
                    self.segment.push((self.line_no, trimmed.to_string()));
                }
            }
        }
    }
}

fn line_context(no: usize, e: Error) -> Error {
    match e {
        Error::Format(msg) => Error::format_at(no, msg),
        other => other,
    }
}

fn entry_context(index: usize, e: Error) -> Error {
    match e {
        Error::Format(msg) => Error::Format(format!("entry {index}: {msg}")),
        other => other,
    }
}

/// Scans a file and keeps the entries the predicate accepts, in file order.
/// The first parse error aborts the scan, tagged with its entry index.
pub fn read_data(
    path: impl AsRef<Path>,
    mut pred: impl FnMut(&DataEntry) -> bool,
) -> Result<Vec<DataEntry>> {
    let mut out = Vec::new();
    for (index, item) in scan(path)? {
        let entry = item.map_err(|e| entry_context(index, e))?;
        if pred(&entry) {
            out.push(entry);
        }
    }
    Ok(out)
}

/// All entries whose label is the legacy pair `(order, id)`.
pub fn find_group(path: impl AsRef<Path>, order: u128, id: u64) -> Result<Vec<DataEntry>> {
    read_data(path, |entry| {
        entry.label().legacy_id == Some((order, id))
    })
}

/// All entries with the given signature.  The text may use either the
/// semicolon form `(0; 2, 3, 7)` or the flat form `[0,2,3,7]`.
pub fn find_signature(path: impl AsRef<Path>, sig_text: &str) -> Result<Vec<DataEntry>> {
    let sig = Signature::parse(sig_text)?;
    read_data(path, |entry| *entry.signature() == sig)
}

/// Every entry in the file.
pub fn load_all(path: impl AsRef<Path>) -> Result<Vec<DataEntry>> {
    read_data(path, |_| true)
}

/// Scans several files concurrently; per-file results stay in file order and
/// the map is keyed by path.
pub fn read_data_many(
    paths: &[PathBuf],
    pred: impl Fn(&DataEntry) -> bool + Sync,
) -> Result<BTreeMap<PathBuf, Vec<DataEntry>>> {
    let scanned: Vec<Result<(PathBuf, Vec<DataEntry>)>> = paths
        .par_iter()
        .map(|path| {
            let entries = read_data(path, |entry| pred(entry))?;
            Ok((path.clone(), entries))
        })
        .collect();
    let mut out = BTreeMap::new();
    for item in scanned {
        let (path, entries) = item?;
        out.insert(path, entries);
    }
    Ok(out)
}
