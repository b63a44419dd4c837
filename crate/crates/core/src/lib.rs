//! Exact directional scaling symmetries of the square (Gaussian integer) and
//! triangular (Eisenstein integer) lattices.
//!
//! The building blocks are:
//!
//! * [`arith`]: rationals, towers of quadratic extensions and real surds,
//! * [`lattice`]: lattice points, their embeddings and 2x2 integer matrices,
//! * [`transform`]: directional scalings `S = tan^2(theta)` about the origin,
//! * [`symmetry`]: recovery and verification of the induced integer maps,
//!   and searches over scheme parameters.

pub mod arith;
pub mod error;
pub mod lattice;
pub mod symmetry;
pub mod transform;

pub use arith::{GeneratorSpec, Rational, Surd, Tower, TowerElement, TowerSpec};
pub use error::{Error, Result};
pub use lattice::{IntMatrix2, LatticeKind, LatticePoint};
pub use symmetry::{
    analyze, grid_coincidence_check, image_ideal_check, induced_map, search, verify_square_family,
    verify_triangular, GridReport, IdealReport, InducedMap, KForm, SearchSpec, SymmetryReport,
};
pub use transform::{DirectionalScaling, Family, SchemeK};
