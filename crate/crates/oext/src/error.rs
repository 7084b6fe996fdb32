use thiserror::Error;

/// Errors reported by fallible operations across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid one-line notation: {0}")]
    InvalidPermutation(String),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("rank {n} is below the minimum {min} for this operation")]
    RankTooSmall { n: usize, min: usize },

    #[error("rank {n} exceeds the brute-force guard {max} for this operation")]
    RankGuard { n: usize, max: usize },

    #[error("simple reflection index {index} out of range for rank {n}")]
    SimpleOutOfRange { index: usize, n: usize },

    #[error("permutation {0} is not bigrassmannian")]
    NotBigrassmannian(String),

    #[error("no bigrassmannian with coordinates ({i},{j},{k}) in rank {n}")]
    CoordOutOfRange { i: usize, j: usize, k: usize, n: usize },

    #[error("invalid parabolic subset: {0}")]
    InvalidParabolic(String),

    #[error("{0} is not Bruhat-below {1}")]
    NotComparable(String, String),

    #[error("{perm} is not a longest coset representative for parabolic {{{parabolic}}}")]
    NotLongestRep { perm: String, parabolic: String },

    #[error("operation undefined at the identity element")]
    IdentityUndefined,

    #[error("invalid shape: {0}")]
    InvalidShape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
