//! Exact decision procedures for twisted conjugacy.
//!
//! The crate answers Reidemeister-number questions at the Lie algebra level:
//! the `{1, ∞}` dichotomy for automorphisms of connected solvable Lie groups,
//! the determinant criterion for torus automorphisms, and an odd-codimension
//! sufficient condition for the topological R∞ property. A brute-force
//! finite-group oracle checks the general group-theoretic inequalities the
//! Lie-theoretic arguments rest on.
//!
//! Everything is exact: rationals, Gaussian rationals, integer Smith normal
//! forms, and rational functions. Nothing is approximated.

pub mod catalog;
pub mod error;
pub mod finite;
pub mod lie;
pub mod linalg;
pub mod reidemeister;

pub use error::{Error, Result};
