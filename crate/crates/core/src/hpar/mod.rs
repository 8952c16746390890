// SPDX-License-Identifier: Apache-2.0

//! The universal algebra `H_par^w` of partial representations, its
//! `E`-calculus and base algebra `A_par^w`, and the theorems relating it to
//! partial smash products and partial module algebras.

mod build;
mod ecalc;
mod factor;
mod iso;
mod roundtrip;
mod words;

pub use build::{
    bracket_rep_check, build_hpar, build_hpar_with, truncate_hpar, BuildOptions, HparAlgebra, HparTruncation,
    WordQuotient, DEFAULT_MAX_DEGREE, DEFAULT_MAX_WORDS,
};
pub use ecalc::{apar_action, check_apar_action, e_calculus, propee_suite, EElements};
pub use factor::{relations_vanish, truncated_factorization, universal_factorization, UniversalFactorization};
pub use iso::{birget_rhodes_oracle, smash_iso_check};
pub use roundtrip::{algebra_object_roundtrip, presentation_roundtrip};
