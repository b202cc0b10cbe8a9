//! Exact computation of the graded G-module structure of the coordinate
//! rings of the nilpotent cone and of the subregular nilpotent orbit
//! closure, together with the root-system, Weyl-group, partition-function
//! and weight-multiplicity machinery the formulas need.
//!
//! All arithmetic is exact: machine integers for coordinates, rationals for
//! root-basis conversions and arbitrary-precision integers for counts.

pub mod cache;
pub mod error;
pub mod graded;
pub mod multiplicity;
pub mod partition;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
pub use graded::{
    reflection_k, tilting_euler_a2, CohomologyRow, CohomologyTable, GradedEngine, GradedMult,
    KConstant, ModuleKind, Variety,
};
pub use multiplicity::{freudenthal_m, kostant_m, weyl_dim, Character};
pub use partition::PartitionTable;
pub use rootsys::{Family, RootSystem, RootSystemId, RootVector, Weight};
pub use weyl::{
    dot_action, euler_induced, reflection_length_theta, WeylElement, WeylGroup, DEFAULT_WEYL_CAP,
};
