//! Toric ideals of graphs, their closed even walks and multigraded Betti numbers.

pub mod betti;
pub mod binomial;
pub mod error;
pub mod graph;
pub mod homology;
pub mod lab;
pub mod walks;

#[cfg(test)]
pub(crate) mod testing;

pub use error::{Error, Result};
pub use graph::{Edge, SimpleGraph, Vertex};
