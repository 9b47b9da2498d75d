//! Graded free modules, maps between them, bounded free complexes, Koszul
//! complexes and free resolutions.

mod complex;
mod free;
mod resolution;

pub use complex::{koszul_complex, ComplexReport, FreeComplex};
pub use free::{FreeModule, MatrixReport, ModuleMap};
pub use resolution::{betti_numbers, free_resolution, Resolution, ResolutionReport};
