//! Exact-arithmetic workbench for ½-derivations of graded Lie algebras,
//! Lie superalgebras and n-Lie algebras, and for the transposed Poisson
//! structures built on them.
//!
//! * [`scalar`], [`basis`], [`element`], [`grammar`]: exact rationals, graded
//!   basis labels, finitely supported elements and their text form.
//! * [`algebras`]: the built-in algebras as lazy bracket rules plus identity
//!   residuals.
//! * [`linalg`]: fraction-preserving row reduction and nullspaces.
//! * [`solver`]: windowed δ-derivation spaces and closed-form families.
//! * [`poisson`]: commutative associative products and the transposed
//!   Poisson compatibility checks.
//! * [`cli`]: the `halfder` command-line front end.

pub mod algebras;
pub mod basis;
pub mod cli;
pub mod element;
pub mod grammar;
pub mod linalg;
pub mod poisson;
pub mod scalar;
pub mod solver;

pub use algebras::{make_algebra, AlgebraSpec};
pub use basis::{BasisIndex, Family, Parity};
pub use element::{element_combine, Element};
pub use grammar::parse_element;
pub use scalar::Scalar;
