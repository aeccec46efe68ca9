pub mod characters;
pub mod check;
pub mod error;
pub mod exact_arith;
pub mod groups;
pub mod gset_geometry;
pub mod koszul_graded;
pub mod kspaces;
pub mod lambda;

pub use error::{Error, Result};
