//! Exact characters and involution models for the projective reflection groups
//! G(r,p,q,n) with GCD(p,n) ∈ {1,2}.
//!
//! The crate builds the model spanned by the absolute involutions of the dual
//! group G(r,q,p,n), splits it into the submodules indexed by S_n-conjugacy
//! classes of involutions, and decomposes each one into irreducibles through
//! exact character inner products over cyclotomic fields.

pub mod classes;
pub mod characters;
pub mod cli;
pub mod colored_perm;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod model;
pub mod rs;
pub mod shapes;

pub use colored_perm::{ColoredPermutation, Cycle, ProjectiveElement, SymmetryKind};
pub use cyclotomic::{root_of_unity, Cyclotomic};
pub use error::{Error, Result};
pub use group::GroupParams;
pub use shapes::{Multipartition, Partition, ShapeOrbit, StandardMultitableau};
