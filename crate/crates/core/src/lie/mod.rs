//! Lie algebras by structure constants over Q or Q(i).

pub mod algebra;
pub mod automorphism;
pub mod flag;
pub mod format;
pub mod structure;
pub mod subspace;

pub use algebra::{format_combination, unit, LieAlgebra};
pub use automorphism::{is_automorphism, AutomorphismMatrix};
pub use flag::FlagData;
pub use format::{declared_field, format_algebra, parse_algebra};
pub use structure::Quotient;
pub use subspace::Subspace;
