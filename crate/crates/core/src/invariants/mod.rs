//! Numerical and ideal-theoretic invariants of graded modules (dimension,
//! depth, grade, μ, Hilbert series, γ, Hann) and checkers for statements
//! relating them to the Ext modules `Ext^i(M, R)`.

mod checks;
pub mod corpus;
mod eass;
mod hilbert;
mod numeric;
mod profile;
mod report;

pub use checks::{
    ass_oracle, dim_formula_check, ext_dimension_bound_check, generator_count_check,
    homological_support_check, top_ext_generator_check, AssOracleReport, DimFormulaReport,
    ExtBoundReport, GeneratorCountReport, IndexedAnnihilator, IndexedDimension, OraclePrime,
    SupportCheckReport, SupportDescriptor, TopExtReport,
};
pub use eass::{detect_periodicity, eass_experiment, EassReport, EassStep, Periodicity};
pub use hilbert::{k_polynomial, HilbertSeries};
pub use numeric::{
    depth, grade, grade_by_ext, grade_by_koszul, koszul_top_nonvanishing, module_dimension,
    radical_generators, ExtendedInt,
};
pub use profile::{gamma, hann, ExtProfile};
pub use report::{invariant_report, CrossChecks, Flags, InvariantReport, Window};
