//! Plane-graph embedding toolkit: combinatorial plane embeddings, nodal
//! 3-connectivity analysis, triangulation, convex combination maps, and
//! geometric validation of straight-line drawings.

pub mod analysis;
pub mod error;
pub mod generate;
pub mod geom;
pub mod graph;
pub mod io;
pub mod svg;
pub mod solver;
pub mod tolerance;
pub mod validate;
pub mod triangulate;

pub use error::{Error, Result};
pub use graph::{Face, FaceId, OuterSpec, PlaneGraph, Subgraph, VertexId};
