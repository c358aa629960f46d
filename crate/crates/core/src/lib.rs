//! Locally linear graphs and their triangle graphs.
//!
//! A graph is locally linear when every edge lies in exactly one triangle. Its
//! triangle graph G* has one vertex per triangle, with two triangles adjacent
//! when they share a vertex. This crate builds G*, checks the induced patterns
//! G* must avoid, matches induced 4- and 5-cycles between G and G*, verifies
//! the exact characteristic polynomial identity linking their spectra, and
//! rebuilds G from G*.
//!
//! Matrix and polynomial code is generic over [`Scalar`]; the aliases below fix
//! the instantiations used for exact work.

pub mod census;
pub mod error;
pub mod generators;
pub mod graph;
pub mod linear;
pub mod reconstruct;
pub mod scalar;
pub mod spectral;
pub mod star;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use graph::{are_isomorphic, Graph, IsoCertificate};
pub use linear::{check_locally_linear, enumerate_triangles, triangle_incidence, Triangle};
pub use scalar::{Field, Scalar};
pub use spectral::{Matrix, Polynomial};
pub use star::{star_graph, StarResult};

pub type IntMatrix = Matrix<BigInt>;
pub type IntPolynomial = Polynomial<BigInt>;
pub type RatMatrix = Matrix<BigRational>;
pub type RatPolynomial = Polynomial<BigRational>;
pub type RealMatrix = Matrix<f64>;
pub type RealPolynomial = Polynomial<f64>;
