//! Special exponents, the quadratic equation they solve, the degree-two
//! operators of the special system, spectral bookkeeping and the parameter
//! arithmetic that goes with it.

mod arithmetic;
mod checks;
mod exponents;
mod operator;
mod report;
mod spectral;
mod symtwo;

pub use arithmetic::{
    e8_exponent_difference, exponent_difference, schwarz_row, schwarz_table, schwarz_table_up_to, SchwarzQ,
    SchwarzRow,
};
pub use checks::{
    casimir_checks, consecutive_relations, derived_a_value, exactness_check, quadratic_residual,
    triple_node_distances, verify_quadratic, verify_report, IdentityCheck,
};
pub use exponents::{special_couplings, special_exponents, xy, SpecialExponentReport, Verdicts};
pub use operator::{dk2_apply, special_eigenvalue};
pub use report::ReportDoc;
pub use spectral::{
    indicial_member, kplus_from_couplings, kplus_membership, monodromy_spec, reducibility_check, Eigenvalue,
    GeneratorReport, KPlusReport, Witness,
};
pub use symtwo::SymTwoDual;

#[cfg(test)]
mod tests;
