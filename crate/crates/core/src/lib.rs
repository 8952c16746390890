// SPDX-License-Identifier: Apache-2.0

//! Weak Hopf algebras, their partial actions and partial representations, and
//! the universal algebra `H_par` that classifies the latter.
//!
//! Everything is finite-dimensional and exact: vectors are coefficient lists
//! of [`Rational`]s in a fixed basis, and every identity the crate claims is
//! checked by evaluating both sides on basis tuples (see [`report`]).

pub mod algebra;
pub mod algebroid;
pub mod constructors;
pub mod error;
pub mod hpar;
pub mod partial;
pub mod qisg;
pub mod report;
pub mod wha;

pub use exactlin::{Matrix, Rational, SparseVec, Subspace};

pub use algebra::{FinDimAlgebra, FinDimCoalgebra};
pub use error::{Error, Result};
pub use report::{Check, CheckConfig, Report, Status};
pub use wha::WeakHopfAlgebra;
