use thiserror::Error;

/// Everything that can go wrong outside of a law check.
///
/// Law violations are not errors: validators return a [`crate::LawReport`].
/// The variants here signal malformed input, misuse of an operation, or a
/// construction that cannot be carried out.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{table}: index {index} out of range (length {len})")]
    IndexOutOfRange { table: &'static str, index: usize, len: usize },

    #[error("{table}: table has length {found}, expected {expected}")]
    LengthMismatch { table: &'static str, expected: usize, found: usize },

    #[error("{table}: duplicate entry for {key:?}")]
    DuplicateEntry { table: &'static str, key: Vec<usize> },

    #[error("maps do not share a codomain ({left} vs {right})")]
    CodomainMismatch { left: usize, right: usize },

    #[error("maps do not share a domain ({left} vs {right})")]
    DomainMismatch { left: usize, right: usize },

    #[error("base morphism {morphism} of side {side} is not invertible")]
    BaseNotIso { side: u8, morphism: usize },

    #[error("not composable: {0}")]
    NotComposable(String),

    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),

    #[error("input violates {count} law instance(s), first: {first}")]
    LawViolation { count: usize, first: String },

    #[error("monad fails {count} law instance(s), first: {first}")]
    MonadLawViolation { count: usize, first: String },

    #[error("no chosen pullback: {0}")]
    PullbackUnavailable(String),

    #[error("no chosen pushout: {0}")]
    PushoutUnavailable(String),

    #[error("category has no chosen binary products")]
    MissingProducts,

    #[error("carrier of size {size} exceeds the bound {bound}")]
    ObjectOutOfBounds { size: usize, bound: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("malformed json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_index(table: &'static str, index: usize, len: usize) -> Result<()> {
    if index < len {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { table, index, len })
    }
}

pub(crate) fn check_len(table: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch { table, expected, found })
    }
}
