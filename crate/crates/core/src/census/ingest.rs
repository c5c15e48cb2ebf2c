use std::fs;
use std::path::Path;

use super::CensusError;
use crate::graph::{parse_graph6, Graph};

/// A problem with one input line. Lines are numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

/// Decoded graphs tagged with their line numbers, plus per-line problems.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Ingested {
    pub graphs: Vec<(usize, Graph)>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Reads one graph6 string per line. Blank lines are skipped; malformed
/// lines become diagnostics instead of errors.
pub fn ingest_graph6(path: &Path) -> Result<Ingested, CensusError> {
    let text = fs::read_to_string(path).map_err(|source| CensusError::Io { path: path.to_path_buf(), source })?;
    Ok(ingest_graph6_str(&text))
}

pub fn ingest_graph6_str(text: &str) -> Ingested {
    let mut out = Ingested::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => out.graphs.push((i + 1, g)),
            Err(e) => out.diagnostics.push(Diagnostic { line: i + 1, message: format!("{e}") }),
        }
    }
    out
}
