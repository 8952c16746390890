// SPDX-License-Identifier: Apache-2.0

use exactlin::LinalgError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input data (shapes, groupoid tables, ...).
    #[error("input error: {0}")]
    Input(String),
    /// An operation was called on data that does not satisfy its hypothesis.
    #[error("precondition not met: {0}")]
    Precondition(String),
    /// Something that the theory guarantees did not hold; the input slipped
    /// past a check or there is a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    /// The quotient construction did not produce a closure certificate.
    #[error("H_par^w did not stabilise by degree {max_degree}; dimension trajectory {trajectory:?}")]
    NotStabilized { max_degree: usize, trajectory: Vec<usize> },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

pub(crate) fn inconsistent(msg: impl Into<String>) -> Error {
    Error::Inconsistent(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
