//! Exact-arithmetic construction of the ordinary character table of
//! GL(n,q) for n <= 5, following Green's method.
//!
//! The pipeline: integer partitions and Green polynomials (`partitions`,
//! `hall_green`), Frobenius orbits and compatible field towers
//! (`orbits`, `gf`), conjugacy-class and dual-class enumeration
//! (`class_space`, `dual_space`), modes of substitution and their weight
//! systems (`modes`), and the assembly of irreducible character values as
//! exact cyclotomic sums (`characters`). The `verify` module holds the
//! oracle battery: orthogonality certification, brute-force group
//! oracles, and the errata ledger comparing engine output to the
//! published tables.

pub mod characters;
pub mod class_space;
pub mod cyclo;
pub mod dual_space;
pub mod error;
pub mod gf;
pub mod hall_green;
pub mod modes;
pub mod orbits;
pub mod partitions;
pub mod poly;
pub mod verify;

pub use cyclo::CycloSum;
pub use error::{Error, Result};
pub use partitions::Partition;
pub use poly::IntPolyQ;
