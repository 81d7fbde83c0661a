//! Finite groups given by multiplication tables, with twisted conjugacy
//! classes by brute force. Every count here is exact, so this layer serves
//! as an independent oracle for the general statements about `R(φ)`.

mod automorphism;
pub mod builtins;
mod format;
mod group;
mod twisted;

pub use automorphism::{all_automorphisms, FiniteAutomorphism};
pub use builtins::{builtin_finite, parse_builtin, small_builtins};
pub use format::{
    format_automorphism, format_group, parse_automorphism, parse_group, parse_subgroup,
};
pub use group::{FiniteGroup, MAX_ORDER};
pub use twisted::{
    check_inner_twist_invariance, check_invariant_subgroup_bounds, check_quotient_bound,
    twisted_classes, InnerTwistReport, ItemOutcome, QuotientBoundReport, SubgroupBoundsReport,
    TwistedClassDecomposition,
};
