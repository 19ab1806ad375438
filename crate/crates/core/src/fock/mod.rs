//! An exact free-fermion Fock space, used as an independent check on the
//! symmetric-function side.
//!
//! States are Maya diagrams `|lambda; n>`; charged fermions `psi_j`,
//! `psi^dag_j` act by inserting and removing positions, neutral fermions
//! `phi+-_j` are fixed combinations of the two. Coefficients are Gaussian
//! rational polynomials in the flow variables, and the `1/sqrt 2` of the
//! neutral fermions is carried as a separate power of `sqrt 2`.

pub mod gaussian;
pub mod operators;
pub mod state;
pub mod vev;

pub use gaussian::GaussianPoly;
pub use operators::{
    apply_current, apply_neutral_current, dressed_phi, dressed_psi, dressed_psidag, Generator,
    GeneratorKind, LinearForm, OperatorWord,
};
pub use state::{FockVector, MayaState};
pub use vev::{
    check_factorization, check_wick, vev, vev_forms, vev_in_sector, vev_schur, vev_schur_q,
    wick_determinant, wick_pfaffian,
};

/// `psi_j v`.
pub fn apply_psi(j: i64, v: &FockVector) -> FockVector {
    LinearForm::psi(j).apply(v)
}

/// `psi^dag_j v`.
pub fn apply_psi_dag(j: i64, v: &FockVector) -> FockVector {
    LinearForm::psidag(j).apply(v)
}

/// `phi+-_j v`.
pub fn apply_phi(sign: crate::polarization::Sign, j: i64, v: &FockVector) -> FockVector {
    LinearForm::phi(sign, j).apply(v)
}

/// Applies a word to `v`, rightmost generator first, with dressed series
/// truncated at `w`.
pub fn apply_dressed(word: &OperatorWord, v: &FockVector, w: u32) -> FockVector {
    word.forms(w).iter().rev().fold(v.clone(), |acc, f| f.apply(&acc))
}
