//! Binary Steinhaus triangles and their relatives over GF(2).
//!
//! A Steinhaus triangle is generated from a top row of bits by XOR-ing
//! adjacent entries downwards. This crate provides:
//!
//! - the sequence calculus (derivation, antiderivation) and binomial
//!   coefficients modulo 2, extended to negative arguments ([`seq`]);
//! - triangles with the dihedral group action, the symmetrizer rho and the
//!   interior-extraction operator ([`triangle`]);
//! - the horizontally / rotationally / dihedrally symmetric subspaces with
//!   closed-form bases, generating index sets and coordinates ([`subspace`]);
//! - Steinhaus graphs, degree parities, and the isomorphism between even
//!   graphs of order n and a class of symmetric triangles of size 2n-1
//!   ([`graph`]);
//! - generalized Pascal triangles and the gamma isomorphism ([`pascal`]);
//! - a brute-force oracle that re-derives everything from first principles
//!   at small sizes ([`oracle`]).

pub mod error;
pub mod gf2;
pub mod graph;
pub mod oracle;
pub mod pascal;
pub mod seq;
pub mod subspace;
pub mod triangle;

pub use error::{Error, Result};
pub use graph::SteinhausGraph;
pub use pascal::PascalTriangle;
pub use seq::BinSeq;
pub use subspace::SymClass;
pub use triangle::Triangle;
