//! Exact-arithmetic toolkit for interlacing networks.
//!
//! The crate is organized around the objects it computes with:
//!
//! - [`algebra`]: arbitrary-precision rationals, sparse multivariate
//!   polynomials, and formal polynomial fractions.
//! - [`network`]: planar acyclic edge-weighted digraphs with ordered source
//!   and sink tuples, builders for the grid families, and the
//!   bottleneck/interlacing decision procedures.
//! - [`paths`]: enumeration of noncrossing path tuples and their exact
//!   weights.
//! - [`involution`]: the intersection poset, the sink-swapping involution
//!   and its source-swapping mirror, and the three-term weight relations.
//! - [`grassmann`]: exact matrices, path matrices, interlacing-matrix tests,
//!   the Grassmannian embedding, Plucker relations, and the cell-membership
//!   check.
//! - [`rsk`]: birational RSK arrays and the octahedron recurrence.
//! - [`schur`]: Schur polynomials with independent oracles, the product
//!   identities, Littlewood-Richardson expansion and Schur positivity.
//!
//! All values are immutable after construction and all arithmetic is exact.

pub mod algebra;
pub mod error;
pub mod golden;
pub mod grassmann;
pub mod involution;
pub mod network;
pub mod paths;
pub mod report;
pub mod rsk;
pub mod schur;

pub use error::{Error, Result};
