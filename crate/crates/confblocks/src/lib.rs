//! Exact genus-0 conformal blocks, Schechtman–Varchenko logarithmic forms,
//! residue calculus and the degree-lemma verifier.

pub mod error;
pub mod linalg;
pub mod rootsys;
pub mod repspace;

pub use error::{Error, Result};
pub use linalg::Q;
pub mod blocks;
pub mod ratfun;
pub mod logforms;
pub mod admissible;
pub mod degreelab;
