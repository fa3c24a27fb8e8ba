pub mod cli;
pub mod dsl;
pub mod error;
pub mod finite;
pub mod free;
pub mod lattice;
pub mod perm;
pub mod solve;
pub mod recset;
pub mod structure;
pub mod system;
pub mod verdict;
pub mod zoo;

pub use error::{Error, Result};
