use thiserror::Error;

/// Errors raised by the library. Every variant except [`Error::Parse`] is a
/// domain error: the input was well formed but the requested object does not
/// exist or a precondition failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),
    #[error("monodromy must have determinant 1, got {0}")]
    NotOrientable(String),
    #[error("negative power of a non-unimodular matrix")]
    NegativePowerOfSingular,
    #[error("index must be at least 1, got {0}")]
    InvalidIndex(i64),
    #[error("basis vectors do not span a finite-index sublattice")]
    DegenerateBasis,
    #[error("lattice not invariant under the monodromy")]
    LatticeNotInvariant,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("representation is not transitive")]
    NotTransitive,
    #[error("representation image is not abelian")]
    NotAbelian,
    #[error("no generator has order equal to the exponent {0} of the image")]
    NoGeneratorOfFullOrder(usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("unknown generator symbol {0:?}")]
    UnknownGenerator(char),
    #[error("modulus must satisfy |alpha| >= 2, got {0}")]
    TrivialModulus(i64),
    #[error("no admissible covering data: {0}")]
    NoAdmissibleCover(String),
    #[error("genus formula needs exactly one exceptional fiber, got {0}")]
    FiberCount(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
