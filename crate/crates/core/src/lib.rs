//! Exact computations in the partition category `Par_t`.
//!
//! Diagrams, partition algebras over `Q[T]`, Jucys-Murphy and central
//! elements, the Schur-Weyl matrix representation, symmetric-function
//! combinatorics, block combinatorics and standard modules.

pub mod diagram;
pub mod exact;
pub mod linalg;
pub mod perm;
pub mod algebra;
pub mod blocks;
pub mod schurweyl;
pub mod stdmod;
pub mod symfun;
pub mod verify;

pub use diagram::{PartitionDiagram, Vertex};
pub use exact::{Poly, Rational};
pub use perm::Permutation;
