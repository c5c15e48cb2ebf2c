//! Exhaustive classification sweeps over all connected graphs of an order.

mod canon;
mod enumerate;
mod ingest;
mod verify;

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::thread;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canon::{canonical_form, canonical_graph6, canonical_labeling};
pub use enumerate::{enumerate_connected, enumerate_connected_with, MAX_ENUMERATION_ORDER};
pub use ingest::{ingest_graph6, ingest_graph6_str, Diagnostic, Ingested};
pub use verify::{
    render_scan, render_verification, scan_conjecture, verify_characterization, ConjectureScan, Part, Reverification,
    Verdict, VerificationReport,
};

use crate::graph::{is_connected, write_graph6, Graph, GraphError};
use crate::spectral::{classify, ClassRecord, SpectralError, MIN_CLASSIFY_ORDER};

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("built-in enumeration supports orders 1..={MAX_ENUMERATION_ORDER}, got {0}; supply a graph6 file instead")]
    EnumerationOrder(usize),
    #[error("census needs order >= {MIN_CLASSIFY_ORDER}, got {0}")]
    OrderTooSmall(usize),
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("classifying {graph6}: {source}")]
    Classify { graph6: String, source: SpectralError },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Where the graphs of a census come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Enumerate,
    Graph6File(PathBuf),
    /// Already decoded graphs, tagged with line numbers.
    Graphs(Vec<(usize, Graph)>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    Enumerated,
    Graph6File,
}

/// A classified graph and where it was first seen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    #[serde(flatten)]
    pub class: ClassRecord,
    pub source: Origin,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub line: Option<usize>,
}

/// Conjunction of optional per-field requirements.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Filter {
    pub in_gn3: Option<bool>,
    pub rho_is_1: Option<bool>,
    pub nu: Option<usize>,
    pub diam: Option<usize>,
    pub cograph: Option<bool>,
    pub in_g1: Option<bool>,
}

impl Filter {
    pub fn matches(&self, r: &ClassRecord) -> bool {
        fn ok<T: PartialEq>(want: Option<T>, got: T) -> bool {
            want.is_none_or(|w| w == got)
        }
        ok(self.in_gn3, r.in_gn3)
            && ok(self.rho_is_1, r.rho_is_1)
            && ok(self.nu, r.nu)
            && ok(self.diam, r.diam)
            && ok(self.cograph, r.cograph)
            && ok(self.in_g1, r.in_g1)
    }
}

/// Flag combination used to bucket the summary counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FlagCombo {
    pub in_gn3: bool,
    pub rho_is_1: bool,
    pub nu: usize,
    pub diam: usize,
    pub cograph: bool,
    pub in_g1: bool,
}

impl From<&ClassRecord> for FlagCombo {
    fn from(r: &ClassRecord) -> Self {
        FlagCombo { in_gn3: r.in_gn3, rho_is_1: r.rho_is_1, nu: r.nu, diam: r.diam, cograph: r.cograph, in_g1: r.in_g1 }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusSummary {
    /// Distinct connected graphs of the requested order that were classified.
    pub classified: usize,
    pub matched: usize,
    pub in_gn3: usize,
    pub in_g1: usize,
    pub combos: BTreeMap<FlagCombo, usize>,
}

#[derive(Debug)]
pub struct CensusReport {
    pub n: usize,
    /// Records passing the filter, sorted by canonical graph6.
    pub records: Vec<CensusRecord>,
    pub summary: CensusSummary,
    pub diagnostics: Vec<Diagnostic>,
}

pub fn default_workers() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}

/// Applies `f` to every item on up to `workers` scoped threads, keeping
/// input order.
pub(crate) fn parallel_map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = workers.clamp(1, items.len().max(1));
    if workers == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    thread::scope(|s| {
        let handles: Vec<_> =
            items.chunks(chunk).map(|part| s.spawn(|| part.iter().map(&f).collect::<Vec<R>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("census worker panicked")).collect()
    })
}

/// Classifies every connected graph of order `n` from `source`, keeping
/// those that pass `filter`. Graphs are reduced to canonical form first, so
/// duplicates collapse and the output order does not depend on `workers`.
pub fn run_census(source: &Source, n: usize, filter: &Filter, workers: usize) -> Result<CensusReport, CensusError> {
    if n < MIN_CLASSIFY_ORDER {
        return Err(CensusError::OrderTooSmall(n));
    }
    let mut diagnostics = Vec::new();
    let (origin, tagged): (Origin, Vec<(Option<usize>, Graph)>) = match source {
        Source::Enumerate => {
            (Origin::Enumerated, enumerate_connected_with(n, workers)?.into_iter().map(|g| (None, g)).collect())
        }
        Source::Graph6File(path) => {
            let ingested = ingest_graph6(path)?;
            diagnostics.extend(ingested.diagnostics);
            (Origin::Graph6File, ingested.graphs.into_iter().map(|(l, g)| (Some(l), g)).collect())
        }
        Source::Graphs(graphs) => (Origin::Graph6File, graphs.iter().map(|(l, g)| (Some(*l), g.clone())).collect()),
    };

    let mut accepted = Vec::with_capacity(tagged.len());
    for (line, g) in tagged {
        let reject = if g.order() != n {
            Some(format!("order {} differs from {n}, skipped", g.order()))
        } else if !is_connected(&g) {
            Some("disconnected, skipped".to_string())
        } else {
            None
        };
        match reject {
            Some(message) => diagnostics.push(Diagnostic { line: line.unwrap_or(0), message }),
            None => accepted.push((line, g)),
        }
    }

    let canonical = parallel_map(&accepted, workers, |(_, g)| canonical_form(g));
    let mut first_seen: HashMap<Graph, Option<usize>> = HashMap::new();
    let mut unique = Vec::new();
    for ((line, _), c) in accepted.iter().zip(canonical) {
        if let Some(prev) = first_seen.get(&c) {
            diagnostics.push(Diagnostic {
                line: line.unwrap_or(0),
                message: format!("duplicate of line {}, skipped", prev.unwrap_or(0)),
            });
            continue;
        }
        first_seen.insert(c.clone(), *line);
        unique.push((*line, c));
    }

    let classified = parallel_map(&unique, workers, |(line, g)| {
        classify(g)
            .map(|class| CensusRecord { class, source: origin, line: *line })
            .map_err(|source| CensusError::Classify { graph6: write_graph6(g), source })
    });
    let mut all = classified.into_iter().collect::<Result<Vec<_>, _>>()?;
    all.sort_by(|a, b| a.class.graph6.cmp(&b.class.graph6));

    let mut summary = CensusSummary { classified: all.len(), ..Default::default() };
    for r in &all {
        summary.in_gn3 += usize::from(r.class.in_gn3);
        summary.in_g1 += usize::from(r.class.in_g1);
        *summary.combos.entry(FlagCombo::from(&r.class)).or_default() += 1;
    }
    let records: Vec<CensusRecord> = all.into_iter().filter(|r| filter.matches(&r.class)).collect();
    summary.matched = records.len();
    Ok(CensusReport { n, records, summary, diagnostics })
}
