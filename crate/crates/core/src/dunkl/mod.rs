//! Trigonometric Dunkl operators and the operators built from them: Jacobi
//! polynomials, `D_k(q)` on invariants, `L_k` and the Hamiltonian `H_k`.

mod invariant;
mod jacobi;
mod operators;
mod symh;

pub use invariant::{
    apply_polynomial, conjugation_check, delta_half, hamiltonian_apply, invariant_apply, laplacian,
    laplacian_localized, lk_apply, lk_localized, potential_coefficient, ConjugationCheck,
};
pub use jacobi::{generic_xi, jacobi, lower_set, saturated_set};
pub use operators::{dunkl_apply, dunkl_apply_by_division, mu_tilde, rho, EigenData};
pub use symh::SymH;


#[cfg(test)]
mod tests;
