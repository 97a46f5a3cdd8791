//! Exact arithmetic, finite simple group orders, permutation groups, finite
//! geometry and block designs for the classification of flag-transitive
//! 2-designs with prime replication number.

pub mod arith;
pub mod designs;
pub mod feasibility;
pub mod geometry;
pub mod groups;
pub mod permgroup;

pub use arith::{primitive_prime_divisors, ArithError, FactoredInteger};
pub use groups::{Family, GroupError, GroupRef, Sign, SimpleGroupId};
pub use permgroup::{PermError, Permutation, PermutationGroup};
pub use designs::{verify_2design, DesignError, DesignVerdict, IncidenceStructure, VerifiedDesign};
pub use geometry::{Field, GeometryError, ProjectivePoint, ProjectiveSpace};
pub use feasibility::{
    derive_params, evaluate_row, evaluate_row_default, DesignParams, EliminationRow,
    FeasibilityError, Verdict,
};
