//! Exact-arithmetic verification engine for finite-dimensional algebras given by
//! structure constants.
//!
//! The crate provides, over exact rational scalars:
//!
//! * dense matrices and rank-2/3 tensors ([`exactlin`]),
//! * algebras of four kinds (associative, dendriform, pre-Lie, Lie) with axiom
//!   checkers and the functors connecting them ([`algebra`]),
//! * bimodules / representations, dual actions and semidirect sums ([`actions`]),
//! * matched pairs and bicrossed products ([`matched`]),
//! * bilinear-form laws (invariance, cyclic cocycle, 2-cocycles) and structures
//!   induced by nondegenerate forms ([`forms`]),
//! * four flavours of bialgebra with double constructions, homomorphism checks and
//!   the associative/dendriform comparison bridge ([`bialgebra`]),
//! * the four quadratic tensor equations with residuals, coboundary builders,
//!   O-operators, lifts, canonical solutions and isomorphism witnesses
//!   ([`yangbaxter`]),
//! * a JSON file format and a deterministic acceptance suite ([`fileio`],
//!   [`corpus`], [`suite`]).
//!
//! Every check is exact: a pass certificate means the identity holds as an equality
//! of rational numbers, not up to a tolerance.  All values are immutable after
//! construction and all operations are pure.

pub mod actions;
pub mod algebra;
pub mod bialgebra;
pub mod cert;
pub mod corpus;
pub mod error;
pub mod exactlin;
pub mod fileio;
pub mod forms;
pub mod matched;
pub mod scalar;
pub mod suite;
pub mod yangbaxter;

pub use cert::{Certificate, Status, CONVENTION};
pub use error::{Error, Result};
pub use scalar::{rat, Rat, Scalar};

/// Matrix over the concrete exact rational scalar.
pub type Matrix = exactlin::Matrix<Rat>;
/// Rank-2 tensor over the concrete exact rational scalar.
pub type Tensor2 = exactlin::Tensor2<Rat>;
/// Rank-3 tensor over the concrete exact rational scalar.
pub type Tensor3 = exactlin::Tensor3<Rat>;
/// Structure-constant table over the concrete exact rational scalar.
pub type Table = algebra::Table<Rat>;
/// Algebra over the concrete exact rational scalar.
pub type Algebra = algebra::Algebra<Rat>;
