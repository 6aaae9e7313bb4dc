//! Error type shared by the whole crate.
//!
//! Errors are grouped by how the CLI reports them: validation failures
//! (exit 2), capacity/budget overruns (exit 3), and internal assertion
//! failures such as the Weyl divisibility check (exit 4).

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("arrow endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("vector has {got} entries but the quiver has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("negative entry at position {0}")]
    NegativeEntry(usize),
    #[error("dimension vector is zero")]
    ZeroDimVector,
    #[error("framing vector is identically zero")]
    ZeroFraming,
    #[error("vertex `{0}` carries a loop; reflection is undefined there")]
    LoopAtVertex(String),
    #[error("reflection at `{vertex}` gives negative dimension {value}")]
    NegativeReflection { vertex: String, value: i64 },
    #[error("{which} is not annihilated by the dimension vector (pairing = {pairing})")]
    NotAnnihilated { which: &'static str, pairing: String },
    #[error("representation type is inadmissible: {0}")]
    InadmissibleType(String),
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("state space has {needed} cells, exceeding the budget of {budget}")]
    Capacity { needed: u128, budget: u128 },

    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Capacity { .. } => 3,
            Error::Internal(_) => 4,
            _ => 2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Error::ZeroDimVector.exit_code(), 2);
        assert_eq!(Error::Capacity { needed: 10, budget: 1 }.exit_code(), 3);
        assert_eq!(Error::Internal("divisibility".into()).exit_code(), 4);
    }
}
