//! Exact scalars, polynomials, and dense matrix algorithms.

pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod snf;
pub mod text;

pub use matrix::Matrix;
pub use poly::{rational_roots, sturm_real_root_count, RatPoly, UniPoly};
pub use ratfunc::{MPoly, RationalFunction};
pub use scalar::{int, rat, BaseField, Domain, Field, FieldKind, GaussRational, Rational, Scalar};
pub use snf::{smith_normal_form, SnfResult};
pub use text::{format_matrix, parse_int_matrix, parse_matrix};
