//! Partitions, Specht modules, characters, Littlewood-Richardson, Kronecker
//! and reduced Kronecker coefficients, and deformed Schur functions.

mod cartan;
mod characters;
mod coeffs;
mod partition;
mod specht;

pub use cartan::{cartan_b, deformed_schur, deformed_to_schur, schur_to_deformed, SchurPoly};
pub use characters::{char_value, char_vector, class_size, classes, z_class};
pub use coeffs::{kronecker, lr_coeff, lr_triple, reduced_kronecker, ReducedMethod};
pub use partition::{partitions_of, partitions_up_to, Partition};
pub use specht::{specht_dim, specht_rep, standard_tableaux, SeminormalRep, Tableau};

pub use crate::diagram::bell;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymfunError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("reduced Kronecker coefficient did not stabilize: {0}")]
    Unstable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Contents of the addable and removable boxes of `λ`.
pub fn add_rem(lambda: &Partition) -> (Vec<i64>, Vec<i64>) {
    (lambda.addable(), lambda.removable())
}
