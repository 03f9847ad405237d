//! Rational top forms on arrangement complements, residues and strata.

pub mod form;
pub mod poly;
pub mod strata;
pub mod univariate;

pub use form::{Endpoint, FormView, LinearFactor, RationalForm};
pub use poly::SparsePoly;
pub use strata::{
    canonical_lowest_term, log_degree, lowest_degree_term, lowest_degree_term_with_base, CanonicalTerm,
    LowestTerm, Stratum,
};
pub use univariate::{residues, sum_residues_zero, Residues};
