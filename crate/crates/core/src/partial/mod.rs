// SPDX-License-Identifier: Apache-2.0

//! Partial actions, partial representations and partial modules of a weak
//! Hopf algebra, together with the partial smash product and covariant pairs.

mod action;
mod covariant;
mod module;
mod rep;
mod smash;

pub use action::{check_partial_action, ActionCheck, PartialAction};
pub use covariant::{check_covariant_pair, covariant_factorization, CovariantPair, Factorization};
pub use module::{check_partial_module, PartialModule};
pub use rep::{
    check_partial_rep, endo_rep_from_action, globality_criterion, hs_ht_suite, pr6_counterexample_search,
    six_equiv_suite, Globality, PartialRep, SearchOutcome,
};
pub use smash::{generator_rank, phi0, pi0, prop25_suite, smash_product, SmashProduct};

use exactlin::{vec, Rational};

use crate::wha::Terms;

/// `Σ c · f(indices)` over Sweedler terms.
pub(crate) fn sweedler_sum<F>(len: usize, terms: &Terms, f: F) -> Vec<Rational>
where
    F: Fn(&[usize]) -> Vec<Rational>,
{
    let mut out = vec::zeros(len);
    for (idx, c) in terms {
        vec::axpy(&mut out, c, &f(idx));
    }
    out
}
