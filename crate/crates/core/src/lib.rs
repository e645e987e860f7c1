//! Graph-computation workbench for Hamiltonicity of 3-connected planar
//! graphs without a K2,5 minor: exact minor search, Hamiltonicity
//! certificates, planarity and outerplanarity, C-reductions, named graph
//! families, and canonical enumeration of 3-connected planar graphs.

pub mod certificate;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod hamilton;
pub mod minors;
pub mod reductions;
pub mod topology;
pub mod verify;

pub use error::{Error, Result};
pub use certificate::Certificate;
pub use graph::{CanonicalCode, Graph, VertexSet};
