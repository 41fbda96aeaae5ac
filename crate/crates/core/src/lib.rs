//! Weight graphs of finite-dimensional nilpotent Lie algebras.
//!
//! The pipeline goes: rational structure constants ([`lie::StructureConstants`])
//! → diagonal torus of derivations and its weight system ([`weights::WeightSystem`])
//! → the graph `G(R)` whose points are the weights, joined when their sum is again
//! a weight, and its complement, the *weight graph* → the necessary-condition
//! checks a graph must pass to arise this way ([`criteria`]) → isomorph-free
//! enumeration of small graphs and the candidate filter ([`enumeration`]).
//!
//! All arithmetic on weights and structure constants is exact (arbitrary-precision
//! rationals); graph kernels use bitset adjacency rows and are capped at 64
//! vertices, with canonical labeling capped at 10.

pub mod criteria;
pub mod enumeration;
pub mod graph;
pub mod lie;
pub mod linalg;
pub mod rational;
pub mod weights;

pub use criteria::{CheckName, CheckResult, CriteriaReport};
pub use enumeration::EnumerationReport;
pub use graph::{CanonicalLabel, Distance, SimpleGraph};
pub use lie::{StructureConstants, Subspace, TorusDescription};
pub use weights::{Weight, WeightSystem};
