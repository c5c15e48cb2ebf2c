use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nlspec_core::families::FamilyId;
use nlspec_core::graph::{parse_graph6, Graph};

#[derive(Debug, Parser)]
#[command(
    name = "nlspec",
    version,
    about = "Exact normalized-Laplacian spectra and multiplicity classes of small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characteristic polynomial, multiplicity profile and eigenvalues.
    Spectrum(GraphArgs),
    /// Classification record for each input graph.
    Classify(GraphArgs),
    /// Build a named family member.
    Family(FamilyArgs),
    /// Quotient matrix of an equitable partition.
    Quotient(QuotientArgs),
    /// Classify every connected graph of one order.
    Census(CensusArgs),
    /// Check the diameter-3 and cograph characterizations against the census.
    VerifyTheorem(RunArgs),
    /// List diameter-2 non-cograph members of the restricted class.
    Conjecture(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
#[group(id = "input", required = true, multiple = false)]
pub struct InputArgs {
    /// A single graph in graph6 format.
    #[arg(long, value_parser = graph6_arg)]
    pub graph6: Option<Graph>,
    /// A file with one graph6 string per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// A named family: g1, g2, h1, h2, h3, h4, h5, kn, kn-e.
    #[arg(long, value_parser = family_arg)]
    pub family: Option<FamilyId>,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, requires = "family")]
    pub a: Option<usize>,
    #[arg(long, requires = "family")]
    pub b: Option<usize>,
    #[arg(long, requires = "family")]
    pub c: Option<usize>,
    #[arg(long, requires = "family")]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Family name: g1, g2, h1, h2, h3, h4, h5, kn, kn-e.
    #[arg(long, value_parser = family_arg)]
    pub family: FamilyId,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub c: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct QuotientArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Cells separated by ';', vertices by ',', e.g. "0,5;1,2,3,4".
    #[arg(long, conflicts_with = "refine")]
    pub partition: Option<String>,
    /// Use the coarsest equitable refinement of the single-cell partition
    /// (the default for inputs that are not family members).
    #[arg(long)]
    pub refine: bool,
}

#[derive(Debug, Args)]
pub struct WorkerArgs {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "NLSPEC_WORKERS", value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub n: usize,
    /// Read graphs from a graph6 file instead of enumerating them.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub workers: WorkerArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long)]
    pub in_gn3: Option<bool>,
    #[arg(long)]
    pub in_g1: Option<bool>,
    #[arg(long)]
    pub rho_is_1: Option<bool>,
    #[arg(long)]
    pub nu: Option<usize>,
    #[arg(long)]
    pub diam: Option<usize>,
    #[arg(long)]
    pub cograph: Option<bool>,
}

fn graph6_arg(s: &str) -> Result<Graph, String> {
    parse_graph6(s).map_err(|e| e.to_string())
}

fn family_arg(s: &str) -> Result<FamilyId, String> {
    s.parse().map_err(|e: nlspec_core::FamilyError| e.to_string())
}
