//! Hat Heegaard Floer homology and ranks of 2-handle cobordism maps, computed
//! combinatorially over GF(2) from nice multi-pointed Heegaard diagrams.
//!
//! The entry point is [`surface::parse_diagram`] (or the builders in
//! [`standard`]). From a [`surface::Diagram`] you can compute the hat complex
//! with [`floer::FloerComplex::new`], enumerate embedded triangles of a triple
//! diagram with [`triangles::enumerate_triangles`], and assemble map ranks with
//! [`cobordism`].

pub mod cobordism;
pub mod corpus;
pub mod error;
pub mod floer;
pub mod gf2;
pub mod lattice;
pub mod lp;
pub mod moves;
pub mod report;
pub mod standard;
pub mod surface;
pub mod triangles;

pub use error::{HfError, Result};
