//! Ext-modules, free resolutions and homological invariants over graded
//! polynomial rings over QQ or F_p and their quotients.

pub mod cli;
pub mod complexes;
pub mod error;
pub mod ext;
pub mod groebner;
pub mod invariants;
pub mod poly;

pub use error::{Error, Result};
