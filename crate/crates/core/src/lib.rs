//! Exhaustive study of how well node centralities separate the nodes of small
//! connected graphs.
//!
//! The crate enumerates connected graphs up to isomorphism, computes degree,
//! closeness, betweenness, eigenvector and subgraph centrality, decides for
//! each measure whether it is constant over the nodes of a graph, and
//! relates those verdicts to structural classes such as walk-regularity.

pub mod canon;
pub mod centrality;
pub mod cli;
pub mod discriminance;
pub mod enumerate;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod graph6;
pub mod named;
pub mod structure;

pub use canon::{canonical_form, Canonical};
pub use centrality::{CentralityKind, CentralityVector};
pub use discriminance::{discriminance_record, stddev_zero, DiscriminanceRecord, SpectralMode};
pub use enumerate::{enumerate_connected, read_graph6_file, write_graph6_file, GraphStream};
pub use error::{Error, Result};
pub use graph::{Graph, WalkDiagonal};
pub use graph6::{parse_graph6, to_graph6};
pub use structure::{structure_profile, StructureProfile};
