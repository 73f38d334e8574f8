//! Clique cycle-transversals in distance-hereditary graphs.
//!
//! A *clique cycle-transversal* (cct) of a graph is a clique meeting every
//! cycle, equivalently a clique whose removal leaves a forest. This crate
//! recognizes distance-hereditary graphs, decides and constructs ccts both by
//! a maximal-clique oracle and by a constructive builder that follows a
//! pendant/twin build sequence, and mines the minimal distance-hereditary
//! graphs that have no cct.
//!
//! ```
//! use dh_cct::{cct, dh, graph6};
//!
//! let g = graph6::parse_str("Bw").unwrap(); // K3
//! assert!(dh::is_distance_hereditary(&g));
//! let report = cct::build_cct(&g).unwrap();
//! let witness = report.witness.unwrap();
//! assert!(cct::is_cct(&g, witness));
//! assert_eq!(cct::find_cct_oracle(&g), Some(g.vertices()));
//! ```

pub mod canon;
pub mod cct;
pub mod census;
pub mod cliques;
pub mod dh;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod miner;
pub mod patterns;
pub mod set;

pub use canon::{canonical_form, CanonicalForm};
pub use error::{Error, Result, MAX_VERTICES};
pub use graph::{DistanceDecomposition, Graph, InducedSubgraph};
pub use set::VertexSet;
