//! Toolkit for 4-colouring maximal planar graphs: embedded triangulations,
//! exact chromatic polynomials, colour-class partitions, wheel operations,
//! recursive (FWF) graphs and exhaustive corpus audits.

pub mod chrompoly;
pub mod coloring;
pub mod corpus;
pub mod fwf;
pub mod graph;
pub mod triangulation;
pub mod wheelops;

pub use graph::{AsGraph, SimpleGraph};
pub use triangulation::{Triangulation, TriangulationError, VertexId};
