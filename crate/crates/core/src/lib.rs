pub mod error;
pub mod exactmath;

pub use error::{Error, Result};
pub mod elliptic;
pub mod lattice;
pub mod mirror;
pub mod nslattice;
pub mod polytope;
pub mod reference;
pub mod tables;
