//! Exact arithmetic for weighted matching polynomials, Hermitian
//! characteristic polynomials, path-trees, and the root-multiplicity
//! vertex decomposition built on them.
//!
//! Everything is computed over the rationals (Gaussian rationals for edge
//! weights); there is no floating point anywhere. See the examples
//! directory for end-to-end walkthroughs of each capability.

pub mod charpoly;
pub mod check;
pub mod decomp;
pub mod demo;
pub mod error;
pub mod graph;
pub mod io;
pub mod matching;
pub mod pathtree;
pub mod poly;
pub mod rational;
pub mod roots;
