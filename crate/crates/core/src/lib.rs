//! Exact toolkit for CIS graphs, in which every maximal clique meets every
//! maximal stable set, together with the well-covered, vertex-transitive and
//! Cayley machinery used to study them.
//!
//! Everything here is exact and exponential in the worst case; the crate is
//! sized for graphs of at most 128 vertices.

pub mod checks;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod reduction;
pub mod small;
pub mod symmetry;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
