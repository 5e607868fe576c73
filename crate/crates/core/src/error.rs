use std::fmt;

use thiserror::Error;

/// Rank of a tube: finite `n` (annulus with `n` marked points) or the
/// infinite line case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rank {
    Finite(i64),
    Infinite,
}

impl Rank {
    pub fn finite(self) -> Option<i64> {
        match self {
            Rank::Finite(n) => Some(n),
            Rank::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Rank::Finite(_))
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(n) => write!(f, "{n}"),
            Rank::Infinite => write!(f, "infinity"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "arc [{start},{end}] is not admissible: the end point must exceed the start by at least 2"
    )]
    NotAdmissible { start: i64, end: i64 },

    #[error("invalid rank {n}: the number of marked points must be positive")]
    InvalidRank { n: i64 },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: Rank, right: Rank },

    #[error("operation requires finite rank")]
    ExpectedFiniteRank,

    #[error("operation requires infinite rank")]
    ExpectedInfiniteRank,

    #[error("negative extension dimension: hom = {hom}, euler pairing = {euler}")]
    NegativeExt { hom: usize, euler: i64 },

    #[error("invalid quiver window: {0}")]
    InvalidWindow(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Checks that two ranks agree, returning the common rank.
pub(crate) fn common_rank(left: Rank, right: Rank) -> Result<Rank> {
    if left == right {
        Ok(left)
    } else {
        Err(Error::RankMismatch { left, right })
    }
}
