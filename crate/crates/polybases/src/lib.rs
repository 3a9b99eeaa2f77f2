//! Combinatorial models for bases of the polynomial ring `Z[x_1, ..., x_n]`.
//!
//! The crate constructs key polynomials, Demazure atoms, quasi-key, slide and
//! particle bases together with their "Young" duals (obtained by the
//! flip-and-reverse involution), the quasisymmetric families they restrict to,
//! and Schubert / Young Schubert polynomials. Every family is built from
//! several independent combinatorial models (diagram fillings, divided
//! difference operators, compatible sequences, key filters on tableaux,
//! row-frank words, Demazure crystals, pipe dreams) so results can be
//! cross-validated exactly. All arithmetic is exact integer arithmetic.
//!
//! Entry points:
//! - [`composition`], [`permutation`], [`polynomial`]: index objects and
//!   sparse exact polynomials.
//! - [`word`], [`tableau`]: Knuth equivalence, Schensted and column
//!   insertion, right/left keys.
//! - [`filling`]: one enumeration engine for the eighteen filling families.
//! - [`operators`]: divided differences and operator constructions.
//! - [`generators`]: compatible sequences, row-frank words, key filters.
//! - [`crystal`]: tableau crystals, Demazure truncations, reduced
//!   factorizations.
//! - [`pipedream`]: pipe dreams for both chiralities of Schubert polynomials.
//! - [`expansion`], [`classify`], [`flagged_module`]: exact basis expansion,
//!   coincidence classifiers, and trace modules.
//! - [`verify`]: named cross-validation suites used by the CLI and the
//!   acceptance tests.

pub mod classify;
pub mod composition;
pub mod crystal;
pub mod exec;
pub mod expansion;
pub mod filling;
pub mod flagged_module;
pub mod generators;
pub mod linalg;
pub mod operators;
pub mod permutation;
pub mod pipedream;
pub mod polynomial;
pub mod tableau;
pub mod verify;
pub mod word;

pub use composition::{Composition, Partition, WeakComposition};
pub use exec::ExecMode;
pub use permutation::Permutation;
pub use polynomial::Polynomial;
pub use tableau::Tableau;
pub use word::Word;

use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("operator index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown basis `{0}`")]
    UnknownBasis(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("shape/alphabet mismatch: {0}")]
    ShapeMismatch(String),
    #[error("input tableau is not a key")]
    NotAKey,
    #[error("polynomial is not in the span of the requested basis")]
    NotInSpan,
    #[error("linear system is underdetermined")]
    Underdetermined,
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
