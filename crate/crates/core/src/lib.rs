//! Extraction of subgraphs free of short (even) cycles that keep many edges
//! or a large minimum degree, with every output re-certified by an
//! independent cycle checker.
//!
//! - [`graph`]: immutable graphs, girth, forbidden-cycle certification.
//! - [`hosts`]: certified extremal hosts and input generators.
//! - [`partition`]: (k−1)-partitions with a per-vertex degree guarantee.
//! - [`edge_extract`]: even-cycle-free subgraphs with many edges.
//! - [`degree_extract`]: spanning high-girth subgraphs with large minimum degree.
//! - [`oracle`]: exact extremal numbers on tiny graphs and the cherry bound.
//! - [`cli`]: the command-line front end and parameter sweeps.

pub mod cli;
pub mod degree_extract;
pub mod edge_extract;
pub mod error;
pub mod exec;
pub mod graph;
pub mod hosts;
pub mod oracle;
pub mod partition;
pub mod report;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{CycleWitness, ForbiddenFamily, Girth, Graph};
