// SPDX-License-Identifier: Apache-2.0

//! The Hopf algebroid structure of `H_par^w` over `A_par^w`.
//!
//! `H_par^w` is a left bialgebroid over `A_par^w` and a right bialgebroid
//! over the subalgebra generated by the `Ẽ_h`, and the anti-extension of
//! the antipode makes the pair a Hopf algebroid. Coproducts land in balanced
//! tensors, materialized as `C ⊗ C` modulo the balancing relations.

mod build;
mod check;
mod tensor;

pub use build::{build_algebroid, HopfAlgebroidData};
pub use check::check_hopf_algebroid;
pub use tensor::{BalancedTensor, Balancing};

pub(crate) use build::{anti_extension, letter_coproducts, row_value, word_coproducts};
pub(crate) use tensor::{contract2, expand_leg, tensor_mul};
