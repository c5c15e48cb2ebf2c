//! Exact normalized-Laplacian spectral toolkit for small graphs.
//!
//! Graphs are classified by the multiplicity structure of their normalized
//! Laplacian spectrum, computed exactly from the characteristic polynomial
//! of the similar random-walk Laplacian `I - D^{-1} A`. Around that core sit
//! the named graph families with closed-form spectra, equitable partitions
//! and quotient matrices, and an exhaustive census over small orders.

pub mod census;
pub mod families;
pub mod graph;
pub mod partitions;
pub mod poly;
pub mod spectral;

pub use census::{CensusError, CensusRecord, CensusReport, Filter, Source, VerificationReport};
pub use families::{FamilyError, FamilyId, FamilySpec};
pub use graph::{Graph, GraphError, PathWitness, TraceMap};
pub use partitions::{Partition, PartitionError};
pub use poly::{Polynomial, Rational, RationalMatrix};
pub use spectral::{ClassRecord, SpectralError, SpectralSummary};
