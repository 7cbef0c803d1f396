//! Buchberger's algorithm, normal forms, reduced bases, elimination and monomial ideals.

mod buchberger;
mod file;
mod monomial_ideal;

pub use buchberger::{
    buchberger, buchberger_observed, combine, eliminate, initial_ideal, is_spair_closed, membership, normal_form,
    normal_form_with_quotients, reduce_basis, reduced_groebner_basis, s_polynomial, same_elements, BuchbergerConfig,
    GroebnerBasis, DEFAULT_MAX_DEGREE, DEFAULT_PAIR_CAP, PAIR_CAP_ENV,
};
pub use file::{parse_ideal_file, IdealFile, IdealFileError};
pub use monomial_ideal::{DisplayMonomialIdeal, MonomialIdeal};

use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("desk scale exceeded: more than {cap} S-pairs")]
    PairCap { cap: usize },
    #[error("desk scale exceeded: S-pair of degree {degree} above the cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("the order does not eliminate the requested variables")]
    NotElimination,
}

impl GroebnerError {
    /// True for the resource-cap errors.
    pub fn is_cap(&self) -> bool {
        matches!(self, GroebnerError::PairCap { .. } | GroebnerError::DegreeCap { .. })
    }
}
