//! Exact symmetric-function algebra around the bilinear expansion of Schur
//! functions in products of pairs of Schur Q-functions.
//!
//! The crate is organised bottom-up:
//!
//! - [`partitions`]: partitions, strict partitions, Frobenius coordinates.
//! - [`polyring`]: exact rational polynomials in the flow variables
//!   `t1, t2, ...`, truncated at a weighted degree.
//! - [`symfunc`]: Schur functions (Jacobi–Trudi, Giambelli), Schur
//!   Q-functions (Pfaffians of the `Q_ij` matrix), determinant and Pfaffian
//!   kernels.
//! - [`polarization`]: polarizations and binary markings of a Frobenius pair,
//!   with their signs and counts.
//! - [`expansion`]: the bilinear expansion itself and its exact verification.
//! - [`fock`]: an independent free-fermion Fock-space oracle (Maya diagrams,
//!   charged and neutral fermions, dressed operators, Wick's theorem).
//! - [`cli`]: the `sqk` command-line front end.
//!
//! All arithmetic is exact; there is no floating point in the library.

pub mod cli;
pub mod error;
pub mod expansion;
pub mod fock;
pub mod partitions;
pub mod polarization;
pub mod polyring;
pub mod symfunc;

pub use error::{Error, Result};
pub use expansion::{
    bilinear_expansion, dedupe_symmetric, evaluate_expansion, sweep, verify_identity,
    ExpansionTerm, VerificationReport,
};
pub use partitions::{FrobeniusCoords, Partition, StrictPartition};
pub use polarization::{enumerate_polarizations, MarkingIndex, Polarization, Sign};
pub use polyring::{GradedPoly, Monomial, Rational};
