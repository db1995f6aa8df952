use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation word: {0}")]
    ParsePermutation(String),

    #[error("invalid polynomial expression: {0}")]
    ParsePolynomial(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("labeling is not a balanced super labeling: {0}")]
    NotBsl(String),

    #[error("malformed labeling: {0}")]
    BadLabeling(String),

    #[error("malformed row tensor element: {0}")]
    BadRowElement(String),

    #[error("vector lies outside the BSL image span (residual in {0} coordinates)")]
    OutsideSpan(usize),

    #[error("image matrix is rank deficient for {0}")]
    RankDeficient(String),

    #[error("generator enumeration would produce {0} minors (cap {1})")]
    TooManyMinors(u128, u128),

    #[error("missing variable in substitution: {0}")]
    MissingVariable(String),

    #[error("invalid matrix file: {0}")]
    BadMatrix(String),
}
