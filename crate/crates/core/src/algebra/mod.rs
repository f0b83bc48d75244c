//! Linear combinations of diagrams: morphisms of `Par_t` over `Q[T]` or `Q`.

mod central;
mod element;
mod group;
mod interpolate;
mod jm;

pub use central::{central_c, central_z, check_centrality};
pub use element::{AlgebraElement, Coeff};
pub use group::{hc_project, jucys_murphy, GroupAlgebraElement};
pub use interpolate::{interpolate_element, InterpolationError};
pub use jm::{cross_left, cross_right, jm_left, jm_right, layer};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}
