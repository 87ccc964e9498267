//! Strong metric dimension of graphs, with a focus on Cartesian sum graphs.
//!
//! `dim_s(G)` is computed as the vertex cover number of the strong resolving
//! graph and can be cross-checked against a definitional subset search. The
//! [`verify`] module instantiates known identities and bounds for Cartesian
//! sums over generated graph corpora and reports every violation.

pub mod bitset;
pub mod canon;
pub mod error;
pub mod families;
pub mod graph;
pub mod guards;
pub mod io;
pub mod products;
pub mod resolving;
pub mod solvers;
pub mod verify;

pub use error::{GraphError, Result};
pub use graph::{DerivedGraph, DistanceMatrix, ExtDist, Graph};
