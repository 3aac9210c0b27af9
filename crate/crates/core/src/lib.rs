//! Binary quantum stabilizer codes built from classical parity-check matrices.
//!
//! The crate turns classical coding-theory objects (parity-check and generator
//! matrices over GF(2)) into quantum stabilizer codes, verifies the defining
//! commutativity and duality identities by exact computation, and determines
//! minimum distances by exhaustive bit-packed enumeration.
//!
//! Module map:
//! - [`gf2`] — dense bit-packed GF(2) matrices, Gaussian elimination,
//!   permutations and the repo-wide matrix text format;
//! - [`symplectic`] — the Pauli-to-binary correspondence: check matrices,
//!   symplectic products, generalized weights, duals and syndromes;
//! - [`distance`] — exact minimum-distance search, capability estimation and
//!   syndrome-table decoding;
//! - [`constructions`] — CSS, enlarged CSS, the three generic check-matrix
//!   constructions, the permuted u|u+v construction and permutation search;
//! - [`reed_muller`] — Reed-Muller generators, the quantum RM family and the
//!   shift permutations that raise its distance;
//! - [`cyclic_qr`] — circulant codes, quadratic-residue codes and the k = 1
//!   palindromic construction;
//! - [`bounds`] — closed-form asymptotic rate/distance bound curves;
//! - [`report`] — the versioned JSON report schema.

pub mod bounds;
pub mod constructions;
pub mod cyclic_qr;
pub mod distance;
mod error;
pub mod gf2;
pub mod reed_muller;
pub mod report;
pub mod symplectic;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
